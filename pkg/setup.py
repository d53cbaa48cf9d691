#!/usr/bin/env python

# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

import importlib.util
from setuptools import setup, find_packages

# read the contents of the README file
with open("README.rst", encoding="utf-8") as f:
    README = f.read()

spec = importlib.util.spec_from_file_location(
    "flag_positivity.version",
    "flag_positivity/version.py",
)
module = importlib.util.module_from_spec(spec)
spec.loader.exec_module(module)
VERSION = module.__version__


setup(
    name="flag-positivity",
    version=VERSION,
    description="Nef/ample certification and Seshadri constants of bundles on flag varieties",
    long_description=README,
    long_description_content_type="text/x-rst",
    license="Apache-2",
    install_requires=[
        "click>=8.0",
        "numpy>=1.24",
        "pandas>=2.0",
        "scipy>=1.10",
        "networkx>=3.0",
        "distributed>=2023.6.0",  # Dask
    ],
    packages=find_packages(exclude=["tests*"]),
    python_requires=">=3.10",
    extras_require={"docs": ["sphinx"]},
    entry_points={
        "console_scripts": [
            "flag-positivity=flag_positivity.cli:main",
        ]
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
