#!/usr/bin/env python

from os import path

from setuptools import find_packages, setup

from lorentz_weierstrass import __version__


this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, "docs/long_description.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="lorentz-weierstrass",
    version=__version__,
    description="Weierstrass representations of spacelike and timelike minimal surfaces in Lorentz 3-space",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["examples", "examples.*"]),
    include_package_data=True,
    license="BSD",
    classifiers=[
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Framework :: Django",
        "Framework :: Django :: 3.2",
        "Framework :: Django :: 4.2",
    ],
    install_requires=[
        "Django>=3.2,<5.0",
        "prettytable>=2.2",
        "numpy>=1.22",
        "scipy>=1.12",
    ],
    extras_require={
        "testing": [
            "coverage",
            "hypothesis>=6.0",
            "sympy>=1.10",
        ],
    },
    entry_points={
        "console_scripts": [
            "lorentz-weierstrass=lorentz_weierstrass.__main__:main",
        ],
    },
    zip_safe=False,
)
