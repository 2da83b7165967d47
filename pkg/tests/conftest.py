import pytest

from depcat.fincat import finset_skeleton
from depcat.instances import generate


@pytest.fixture(scope="session")
def fs3():
    return finset_skeleton(3)


@pytest.fixture(scope="session")
def fs_doc():
    """FinSet skeleton up to size 3 with fibres of size at most 1: every layer present."""
    return generate("finset", {"max_size": 3, "fiber_cap": 1})


@pytest.fixture(scope="session")
def z4_doc():
    return generate("ring", {"modulus": 4})
