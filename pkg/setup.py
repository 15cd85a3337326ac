from setuptools import setup

# Metadata and the package list live in setup.cfg. kkm.tests and testapp are left out
# of distributions; bdist_wheel does not respect find/exclude, so wheels are built
# from the sdist:
# python setup.py sdist && pip wheel --no-index --no-deps --wheel-dir dist dist/*.tar.gz

setup(
    name="django-kkm-sperner",
    description=(
        "Exact verifiers for KKM- and Sperner-type theorems on simplicial complexes, "
        "run as Django management commands."
    ),
)
