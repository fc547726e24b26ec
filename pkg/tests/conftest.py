import math

import numpy as np
import pytest
from hypothesis import strategies as st

from bcbounds.core import BiComplex

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
bicomplex = st.builds(BiComplex.from_quad, finite, finite, finite, finite)
small = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
cx = st.builds(complex, small, small)


def ulp_scale(z: BiComplex) -> float:
    return math.ulp(max(abs(x) for x in z.quad) or 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
