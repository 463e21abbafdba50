#!/usr/bin/env python3
# encoding: utf-8

from setuptools import setup
from __about__ import __version__

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="quiverhecke",
    version=__version__,
    description="Build generalized quiver Hecke algebras from root data and check their presentation.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    packages=["quiverhecke", "quiverhecke.CheckInterface"],
    install_requires=["sympy>=1.9,<1.13", "numpy>=1.20", "pyparsing>=3.0,<4"],
    extras_require={"dev": ["pytest>=6.2", "Sphinx~=3.5.4", "furo==2021.3.20b30", "black==20.8b1"]},
    entry_points={"console_scripts": ["quiverhecke=quiverhecke:main"]},
    zip_safe=False,
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords=[
        "KLR algebra",
        "quiver Hecke algebra",
        "nil Hecke algebra",
        "Demazure operator",
        "Weyl group",
        "GKM localization",
    ],

)
