# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from setuptools import setup


with open("README.md", "r") as fh:
    long_description = fh.read()


setup(
    name='closingbrace_metabrace',
    version='1.0.0',
    description='Exact computations with finite metacyclic groups and their '
            'rational group algebras',
    long_description=long_description,
    long_description_content_type="text/markdown",
    author='The Metabrace authors',
    license='Mozilla Public License 2.0',
    classifiers=[
        "Programming Language :: Python :: 3",
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=['closingbrace'],
    python_requires='>=3.8',
    install_requires=['python-dateutil', 'sympy>=1.12'],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'metabrace=closingbrace.metabrace:run',
        ],
    },
    zip_safe=False,
)
