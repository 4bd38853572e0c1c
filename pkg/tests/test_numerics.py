import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import eval_legendre

from magnetomech.errors import DomainError, MaxIterExceeded, NoSignChange
from magnetomech.numerics import (
    RootConfig,
    brent,
    central_diff,
    expand_bracket,
    legendre,
    legendre_table,
    solve_bracketed,
)


def test_sqrt2():
    assert solve_bracketed(lambda x: x * x - 2, 1, 2) == pytest.approx(math.sqrt(2), abs=1e-10)


def test_half_pi():
    assert solve_bracketed(math.cos, 1, 2) == pytest.approx(math.pi / 2, abs=1e-10)


def test_no_sign_change():
    with pytest.raises(NoSignChange):
        solve_bracketed(lambda x: x - 5, 0, 1)


def test_exact_root_at_endpoint():
    res = brent(lambda x: x - 1.0, 1.0, 3.0)
    assert (res.root, res.lo, res.hi) == (1.0, 1.0, 1.0)


def test_max_iter():
    with pytest.raises(MaxIterExceeded):
        brent(lambda x: x**3 - 2, 0, 2, RootConfig(rel_tol=1e-15, abs_tol=1e-300, max_iter=2))


def test_root_config_validation():
    with pytest.raises(DomainError):
        RootConfig(rel_tol=0)
    with pytest.raises(DomainError):
        RootConfig(max_iter=0)


@given(st.floats(-50, 50), st.floats(0.01, 10), st.floats(0.01, 10))
def test_brent_bracket_invariant(root, left, right):
    def f(x):
        return math.tanh(x - root)

    res = brent(f, root - left, root + right)
    assert res.lo <= res.root <= res.hi
    assert res.lo >= root - left and res.hi <= root + right
    if res.lo < res.hi:
        assert f(res.lo) * f(res.hi) <= 0
    assert res.root == pytest.approx(root, abs=1e-10 * max(1.0, abs(root)))


def test_expand_bracket_linear():
    lo, hi = expand_bracket(lambda x: x - 3, 0, 1, 2)
    assert lo < 3 <= hi


def test_expand_bracket_positive_everywhere():
    with pytest.raises(NoSignChange):
        expand_bracket(lambda x: 1 + x * x, 0, 1)


def test_expand_bracket_validation():
    with pytest.raises(DomainError):
        expand_bracket(lambda x: x, 0, 0)
    with pytest.raises(DomainError):
        expand_bracket(lambda x: x, 0, 1, growth=1)


def test_expand_bracket_finds_first_root():
    # roots at 1, 2, 3; the scan must stop at the first
    lo, hi = expand_bracket(lambda x: (x - 1) * (x - 2) * (x - 3), 0, 0.1, 1.5)
    assert lo < 1 <= hi < 2


@pytest.mark.parametrize("n,x,expected", [(0, 0.3, 1.0), (3, 1.0, 1.0), (2, 0.5, -0.125)])
def test_legendre_values(n, x, expected):
    assert legendre(n, x) == pytest.approx(expected, abs=1e-15)


def test_legendre_domain():
    with pytest.raises(DomainError):
        legendre(2, 1.5)
    with pytest.raises(DomainError):
        legendre(-1, 0.5)


@given(st.integers(0, 60), st.floats(-1, 1))
def test_legendre_matches_scipy(n, x):
    assert legendre(n, x) == pytest.approx(eval_legendre(n, x), abs=1e-12)


def test_legendre_array():
    x = np.linspace(-1, 1, 11)
    table = legendre_table(5, x)
    assert len(table) == 6
    np.testing.assert_allclose(table[5], eval_legendre(5, x), atol=1e-14)


def test_central_diff():
    assert central_diff(lambda x: x * x, 3.0, 1e-6) == pytest.approx(6.0, rel=1e-6)
    assert central_diff(math.sin, 0.0, 1e-6) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(DomainError):
        central_diff(math.sin, 0.0, 0.0)
