from setuptools import setup


# Metadata, dependencies and the console script are declared in pyproject.toml
setup()
