import re
from setuptools import setup

from toric import __version__


NAME = "toric"


def readme():
    with open("README.rst", "r") as f:
        content = f.read()

    # Helper function
    def content_update(content, pattern, sub):
        return re.sub(pattern, sub, content, flags=re.M | re.I)

    # Docs reference updates to current release version, for PyPI
    content = content_update(
        content,
        r"(?<={0}\.readthedocs\.io/en/)\S+?(?=[/>])".format(NAME),
        "v" + __version__,
    )

    return content


setup(
    name=NAME,
    version=__version__,
    description="toric: Rings, Ideals and Cones",
    long_description=readme(),
    license="MIT License",
    author="toric contributors",
    packages=["toric", "toric.test"],
    package_data={"toric": ["fixtures/*.json"]},
    provides=["toric"],
    python_requires=">=3.8",
    requires=[
        "attrs (>=19.2)",
        "pyparsing (>=2.2)",
        "sympy (>=1.9)",
        "networkx (>=3.1)",
    ],
    install_requires=[
        "attrs>=19.2",
        "pyparsing>=2.2",
        "sympy>=1.9",
        "networkx>=3.1",
    ],
    entry_points={"console_scripts": ["toric = toric.cli:main"]},
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Development Status :: 3 - Alpha",
    ],
)
