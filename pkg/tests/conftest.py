import pytest

from ttkh.catalog import standard_catalog


@pytest.fixture(scope="session")
def catalog():
    return standard_catalog()
