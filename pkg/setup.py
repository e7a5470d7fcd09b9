# Copyright 2026 The Bridgekit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os

from setuptools import find_packages, setup


def read(rel_path):
    here = os.path.abspath(os.path.dirname(__file__))
    # intentionally *not* adding an encoding option to open, See:
    #   https://github.com/pypa/virtualenv/issues/201#issuecomment-3145690
    with open(os.path.join(here, rel_path), "r") as fp:
        return fp.read()


def get_version(rel_path):
    for line in read(rel_path).splitlines():
        if line.startswith("__version__"):
            delim = '"' if '"' in line else "'"
            return line.split(delim)[1]
    raise RuntimeError("Unable to find version string.")


setup(
    name="bridgekit",
    version=get_version("bridgekit/__init__.py"),
    description="3-bridge spheres of arborescent links, in exact arithmetic",
    long_description=read("README.md"),
    long_description_content_type="text/markdown",
    author="Bridgekit authors",
    license="Apache License 2.0",
    python_requires=">=3.9",
    install_requires=[
        "absl-py",
        "numpy",
        "pandas",
        "sympy>=1.10",
        "tabulate",
        "termcolor",
        "tqdm",
    ],
    extras_require={
        "dev": [
            "flake8",
            "black",
            "isort",
            "coverage",
            "jsonschema",
            "pytest",
            "pre-commit",
            "mypy<=0.982",
            "setuptools",
            "types-termcolor",
            "types-tabulate",
            "wheel",
        ],
    },
    entry_points={"console_scripts": ["bridgekit=bridgekit.cli:main"]},
    package_data={"bridgekit": ["schemas/*.json"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["tests", "tests.*"]),
)
