import pytest
from mpmath import mp

from arctic.core.cache_store import clear_caches


@pytest.fixture(autouse=True)
def working_precision_512():
    """Every test starts at 512 bits with empty caches."""
    previous = mp.prec
    mp.prec = 512
    clear_caches()
    yield
    mp.prec = previous
