import numpy as np
import pytest

from retipy.data import generate_foggy_image
from retipy.ops.histogram import JointDist, ProbDist
from retipy.profiler import clear_profile, disable_profiling
from retipy.runtime import get_session


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def foggy():
    return generate_foggy_image()


@pytest.fixture
def random_dist(rng):
    """Factory for seeded random distributions with some empty bins."""
    def make(n=256, sparsity=0.2):
        weights = rng.random(n)
        weights[rng.random(n) < sparsity] = 0.0
        weights[rng.integers(n)] += 1.0
        return ProbDist.normalized(weights)
    return make


@pytest.fixture
def product_joint(random_dist):
    """Factory for joints of two independent random distributions."""
    def make(n=16, m=16):
        a, b = random_dist(n), random_dist(m)
        return a, b, JointDist.product(a, b)
    return make


@pytest.fixture(autouse=True)
def clean_runtime():
    """Every test starts from the default session with profiling off."""
    get_session().reset()
    clear_profile()
    yield
    get_session().reset()
    clear_profile()
    disable_profiling()
