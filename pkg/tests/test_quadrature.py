import math

import numpy as np
import pytest

from harmonet.errors import ToleranceNotReached
from harmonet.quadrature import QuadratureSpec, nested_simpson


def test_cubic_is_exact():
    f = lambda x: (x[:, 0] ** 3 - 2 * x[:, 0] + 1)[:, None]
    # mean of x^3 - 2x + 1 on [0, 2] = (4 - 4 + 2) / 2
    assert nested_simpson(f, [(0, 2)], 1e-12)[0] == pytest.approx(1.0, abs=1e-14)


def test_vector_valued_1d():
    f = lambda x: np.column_stack([np.sin(x[:, 0]), np.exp(x[:, 0])])
    got = nested_simpson(f, [(0, math.pi)], 1e-11)
    np.testing.assert_allclose(got, [2 / math.pi, (math.e**math.pi - 1) / math.pi], atol=1e-10)


def test_separable_3d():
    f = lambda x: (np.cos(x[:, 0]) * x[:, 1] ** 2 * np.exp(-x[:, 2]))[:, None]
    expected = math.sin(1.0) * (1 / 3) * (1 - math.exp(-2)) / 2
    assert nested_simpson(f, [(0, 1), (0, 1), (0, 2)], 1e-10)[0] == pytest.approx(expected, abs=3e-10)


def test_kink_is_resolved():
    f = lambda x: np.abs(x[:, 0] - 0.3)[:, None]
    expected = (0.3**2 + 0.7**2) / 2
    assert nested_simpson(f, [(0, 1)], 1e-10)[0] == pytest.approx(expected, abs=1e-9)


def test_depth_cap_raises():
    f = lambda x: np.sqrt(np.abs(x[:, 0] - 1 / 3))[:, None]
    with pytest.raises(ToleranceNotReached):
        nested_simpson(f, [(0, 1)], 1e-14, max_depth=10)


@pytest.mark.parametrize("kwargs", [dict(dims=0), dict(dims=4), dict(dims=2, abs_tol=0.0), dict(dims=1, max_depth=9)])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        QuadratureSpec(**kwargs)


def test_axis_budget():
    assert QuadratureSpec(3, 9e-6).axis_tol == pytest.approx(1e-6)
    assert QuadratureSpec(1, 1e-6).axis_tol == 1e-6
