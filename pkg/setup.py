from setuptools import setup, find_packages
import os.path

__author__ = "pllab developers"
version = "0.4.1"


def _get_local_file(file_name):
    return os.path.join(os.path.dirname(__file__), file_name)


def _get_requirements(file_name):
    with open(file_name, 'r') as f:
        reqs = [line.strip() for line in f
                if line.strip() and not line.startswith("#")]
    return reqs


def _get_local_requirements(file_name):
    return _get_requirements(_get_local_file(file_name))


setup(
    name='pllab',
    version=version,
    author='pllab developers',
    description='Exact and Monte Carlo experiments on Plancherel measures, '
                'growth processes, monotone numberings and total positivity',
    entry_points={'console_scripts': [
        'pllab = pllab.PlLabRunner:main',
        ]},
    packages=find_packages(exclude=["tests", "tests.*"]),
    zip_safe=False,
    python_requires='>=3.9',
    install_requires=_get_local_requirements("REQUIREMENTS.txt"),
    tests_require=['nose']
)
