import pytest

from foliadex import standard_catalog


@pytest.fixture(scope="session")
def std_catalog():
    # built once; catalog construction is deterministic, so sharing is safe
    return standard_catalog()
