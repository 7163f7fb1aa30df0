# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from setuptools import setup

setup(
    install_requires=[
        "numpy>=1.22",
        "sympy>=1.12",
        "networkx>=2.8",
        "matplotlib>=3.5",
    ],
)
