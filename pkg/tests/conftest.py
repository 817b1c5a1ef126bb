import pytest

from fanweaver.atlas import load_atlas
from fanweaver.census import enumerate_spheres


@pytest.fixture(scope="session")
def atlas():
    return load_atlas()


@pytest.fixture(scope="session")
def small_spheres():
    """All isomorphism classes with 4 <= m <= 9, keyed by m."""
    return {m: enumerate_spheres(m) for m in range(4, 10)}
