import math

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from oracles import mp_eval, mp_orthonormal, mp_second_kind_value
from weylcircles import (
    MomentSequence,
    apply_functional,
    classical_moments,
    eval_all,
    eval_poly,
    orthonormal_system,
    second_kind_by_recurrence,
    truncated_t,
)
from weylcircles.errors import (
    IllConditioned,
    IndexOutOfRange,
    InsufficientMoments,
    NotPositiveDefinite,
    PoleAtZ,
)

SQ2 = math.sqrt(2)


def test_gaussian_order_two_by_hand():
    sys = orthonormal_system(MomentSequence((1, 0, 1, 0, 3)), 2)
    np.testing.assert_allclose(sys.P[0].coef, [1])
    np.testing.assert_allclose(sys.P[1].coef, [0, 1], atol=1e-15)
    np.testing.assert_allclose(sys.P[2].coef, [-1 / SQ2, 0, 1 / SQ2], atol=1e-15)
    np.testing.assert_allclose(sys.Q[1].coef, [1])
    np.testing.assert_allclose(sys.Q[2].coef, [0, 1 / SQ2], atol=1e-15)
    np.testing.assert_allclose(sys.a, [1, SQ2])
    np.testing.assert_allclose(sys.b, [0, 0], atol=1e-15)


def test_dirac_not_positive_definite():
    with pytest.raises(NotPositiveDefinite) as exc:
        orthonormal_system(MomentSequence((1, 0, 0)), 1)
    assert exc.value.order == 1


def test_two_point_order_one(two_point):
    np.testing.assert_allclose(two_point.P[1].coef, [0, 0.5], atol=1e-15)
    np.testing.assert_allclose(two_point.Q[1].coef, [0.5])
    p1 = two_point.P[1]
    assert apply_functional(two_point.s, p1 * p1) == pytest.approx(1.0)


def test_insufficient_moments():
    with pytest.raises(InsufficientMoments):
        orthonormal_system(classical_moments("gaussian", 4), 2)


def test_order_cap():
    with pytest.raises(IllConditioned):
        orthonormal_system(classical_moments("gaussian", 45), 22)


def test_condition_limit():
    with pytest.raises(IllConditioned):
        orthonormal_system(classical_moments("gaussian", 21), 10, cond_limit=2.0)


def test_matches_high_precision_gram_schmidt(gaussian, lognormal):
    for sys, n in ((gaussian, 10), (lognormal, 8)):
        ref = mp_orthonormal(sys.s.values, n)
        for k in range(n + 1):
            np.testing.assert_allclose(
                sys.P[k].coef, [float(c) for c in ref[k]], rtol=1e-9, atol=1e-12 * max(
                    abs(float(c)) for c in ref[k]
                )
            )


def test_second_kind_matches_functional_oracle(gaussian):
    ref = mp_orthonormal(gaussian.s.values, 6)
    for z in (0.3 + 0.7j, -1.2 + 0.1j, 2.0):
        for k in range(7):
            want = complex(mp_second_kind_value(gaussian.s.values, ref[k], z))
            assert eval_poly(gaussian, "second", k, z) == pytest.approx(want, rel=1e-11, abs=1e-12)


@pytest.mark.parametrize("name", ["gaussian", "lognormal", "two_point"])
def test_invariants(name, request):
    sys = request.getfixturevalue(name)
    for k, p in enumerate(sys.P):
        assert p.degree() == k
        assert p.coef[-1] > 0
    assert sys.Q[0].coef.tolist() == [0.0]
    for k in range(1, sys.N + 1):
        assert len(sys.Q[k].coef) == k
    assert np.all(sys.a > 0)
    # orthonormality through the functional, scaled by the condition estimate
    for j in range(sys.N + 1):
        for k in range(sys.N + 1):
            val = apply_functional(sys.s, sys.P[j] * sys.P[k])
            assert abs(val - (j == k)) <= 1e-8 * sys.condition
    # three-term recurrence as a polynomial identity, checked by values
    # against the magnitude sum_j |c_j| |x|^j that evaluation has to cancel
    pts = np.linspace(-1.5, 3.0, 7)
    for k in range(sys.N):
        back = sys.a[k - 1] * sys.P[k - 1](pts) if k else 0.0
        lhs = pts * sys.P[k](pts)
        rhs = sys.a[k] * sys.P[k + 1](pts) + sys.b[k] * sys.P[k](pts) + back
        scale = sys.a[k] * Polynomial(np.abs(sys.P[k + 1].coef))(np.abs(pts))
        assert np.all(np.abs(lhs - rhs) <= 1e-12 * scale)


@pytest.mark.parametrize("name", ["gaussian", "lognormal"])
def test_second_kind_recurrence_cross_check(name, request):
    sys = request.getfixturevalue(name)
    rec = second_kind_by_recurrence(sys)
    for z in (0.5 + 1j, 2.0 - 0.3j):
        for k in range(sys.N + 1):
            direct = eval_poly(sys, "second", k, z)
            assert abs(rec[k](z) - direct) <= 1e-9 * (1 + abs(direct))


class TestEvalPoly:
    def test_p2_at_i(self, gaussian):
        assert eval_poly(gaussian, "first", 2, 1j) == pytest.approx(-SQ2)

    def test_q0_is_zero(self, gaussian):
        assert eval_poly(gaussian, "second", 0, 3 + 4j) == 0

    def test_q2_at_i(self, gaussian):
        assert eval_poly(gaussian, "second", 2, 1j) == pytest.approx(1j / SQ2)

    def test_index_checked(self, gaussian):
        with pytest.raises(IndexOutOfRange):
            eval_poly(gaussian, "first", gaussian.N + 1, 0.0)

    def test_kind_checked(self, gaussian):
        with pytest.raises(ValueError):
            eval_poly(gaussian, "third", 0, 0.0)

    def test_eval_all_matches_oracle(self, lognormal):
        ref = mp_orthonormal(lognormal.s.values, 10)
        p, _ = eval_all(lognormal, 0.4 + 0.9j, 10)
        want = np.array([complex(mp_eval(c, 0.4 + 0.9j)) for c in ref])
        np.testing.assert_allclose(p, want, rtol=1e-8)


class TestTruncatedT:
    def test_real_point(self, gaussian):
        assert truncated_t(gaussian, 1, -3) == pytest.approx(1 / 3)

    def test_at_i(self, gaussian):
        assert truncated_t(gaussian, 1, 1j) == pytest.approx(1j)

    def test_pole(self, gaussian):
        with pytest.raises(PoleAtZ):
            truncated_t(gaussian, 1, 0.0)

    @pytest.mark.parametrize("name", ["gaussian", "lognormal"])
    def test_pick_property(self, name, request, rng):
        sys = request.getfixturevalue(name)
        for _ in range(20):
            z = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
            for n in range(1, sys.N + 1):
                assert truncated_t(sys, n, z).imag > 0
