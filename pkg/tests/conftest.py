import numpy as np
import pytest

from flagprod.construct import build_design


@pytest.fixture(scope="session")
def design_125():
    return build_design(1, 2, 5)


@pytest.fixture(scope="session")
def forced_127():
    return build_design(1, 2, 7, force=True)


@pytest.fixture(scope="session")
def small_maps():
    # two commuting index maps on 6 points, enough to exercise closure paths
    return np.array([[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3]], dtype=np.int32)
