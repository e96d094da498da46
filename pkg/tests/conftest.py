import numpy as np
import pytest

from entbounds.states import (
    AcinParams,
    WClass4Params,
    acin_state,
    haar_random_pure,
    wclass4_state,
)

ENSEMBLE_SEED = 20240917
ENSEMBLE_SIZE = 10_000


@pytest.fixture(scope="session")
def example1_state():
    return acin_state(AcinParams(l0=0.5, l1=0.0, l2=np.sqrt(2) / 2,
                                 l3=0.5, l4=0.0))


@pytest.fixture(scope="session")
def example2_state():
    return wclass4_state(WClass4Params(l1=3 / 4, l2=1 / 2,
                                       l3=np.sqrt(2) / 4, l4=1 / 4))


@pytest.fixture(scope="session")
def haar4_ensemble():
    """Shared 4-qubit Haar ensemble for the heavyweight invariant tests."""
    return [haar_random_pure(4, ENSEMBLE_SEED, stream=i)
            for i in range(ENSEMBLE_SIZE)]
