import pytest

from oracles import mp_kernels
from weylcircles import (
    RELATION_IDS,
    eval_all,
    KernelKind,
    all_kernels,
    double_det,
    kernel,
    kernel_convergence,
    kernel_det,
    random_quadruples,
    relation_residuals,
    relation_sides,
)
from weylcircles.errors import IndexOutOfRange

KINDS = list(KernelKind)


class TestSumForm:
    @pytest.mark.parametrize("n", [0, 1, 3])
    def test_equal_arguments(self, gaussian, n):
        z = 0.3 + 0.8j
        assert kernel(gaussian, "A", n, z, z) == 0
        assert kernel(gaussian, "B", n, z, z) == -1
        assert kernel(gaussian, "C", n, z, z) == 1
        assert kernel(gaussian, "D", n, z, z) == 0

    def test_hand_values(self, gaussian):
        assert kernel(gaussian, KernelKind.D, 1, 1j, -1j) == pytest.approx(4j)
        assert kernel(gaussian, KernelKind.C, 1, 1j, -1j) == pytest.approx(3)
        k = all_kernels(gaussian, 1, 1j, -3)
        assert k == pytest.approx((3 + 1j, -2 + 3j, -8 - 3j, 6 - 8j))

    @pytest.mark.parametrize("name,n", [("gaussian", 6), ("two_point", 1), ("lognormal", 9)])
    def test_against_high_precision_oracle(self, name, n, request):
        sys = request.getfixturevalue(name)
        for z, w in ((0.4 + 1.1j, -0.7 + 0.2j), (1.5 - 0.5j, 2.0), (1j, -1j)):
            got = all_kernels(sys, n, z, w)
            want = mp_kernels(sys.s.values, n, z, w)
            for g, r in zip(got, want):
                assert abs(g - r) <= 1e-9 * (1 + abs(r))

    def test_order_checked(self, two_point):
        with pytest.raises(IndexOutOfRange):
            kernel(two_point, "A", 2, 1j, 0)

    def test_hermitian_symmetry(self, gaussian, rng):
        for z, w, *_ in random_quadruples(rng, 20):
            a = all_kernels(gaussian, 5, z, w)
            b = all_kernels(gaussian, 5, z.conjugate(), w.conjugate())
            for u, v in zip(a, b):
                assert v == pytest.approx(u.conjugate(), rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("name", ["gaussian", "lognormal"])
    def test_d_on_conjugate_pair_is_imaginary(self, name, request, rng):
        sys = request.getfixturevalue(name)
        for _ in range(20):
            z = complex(rng.uniform(-2, 2), rng.uniform(0.1, 2))
            for n in range(1, min(sys.N, 10) + 1):
                d = kernel(sys, "D", n, z, z.conjugate())
                assert abs(d.real) <= 1e-12 * abs(d)
                assert abs(d) > 0


class TestDeterminantForm:
    def test_hand_value(self, gaussian):
        assert kernel_det(gaussian, "D", 1, 1j, -1j) == pytest.approx(4j)

    def test_a0_vanishes(self, gaussian):
        assert kernel_det(gaussian, "A", 0, 0.2 + 1j, -3) == 0

    def test_needs_next_degree(self, two_point):
        with pytest.raises(IndexOutOfRange):
            kernel_det(two_point, "A", 1, 1j, 0)

    @pytest.mark.parametrize("name", ["gaussian", "two_point"])
    def test_agrees_with_sum_form(self, name, request, rng):
        sys = request.getfixturevalue(name)
        for z, w, *_ in random_quadruples(rng, 25):
            for n in range(sys.N):
                for kind in KINDS:
                    s = kernel(sys, kind, n, z, w)
                    d = kernel_det(sys, kind, n, z, w)
                    assert abs(s - d) <= 1e-9 * (1 + abs(s))

    def test_agrees_with_sum_form_conditioning_scaled(self, lognormal, rng):
        # the 2x2 determinant cancels two large products; the sum form does
        # not (it matches the 50-digit oracle to ~1e-15), so the tolerance
        # is relative to the size of the cancelled terms
        for z, w, *_ in random_quadruples(rng, 25):
            pz, qz = eval_all(lognormal, z)
            pw, qw = eval_all(lognormal, w)
            for n in range(lognormal.N):
                left = {"A": qz, "B": pz, "C": qz, "D": pz}
                right = {"A": qw, "B": qw, "C": pw, "D": pw}
                for kind in "ABCD":
                    x, y = left[kind], right[kind]
                    mag = lognormal.a[n] * (abs(x[n + 1] * y[n]) + abs(x[n] * y[n + 1]))
                    s = kernel(lognormal, kind, n, z, w)
                    d = kernel_det(lognormal, kind, n, z, w)
                    assert abs(s - d) <= 1e-9 * (1 + abs(s)) + 1e-13 * mag

    def test_convergence_monitor(self, gaussian):
        assert kernel_convergence(gaussian, "D", 2, 1j, -1j) == pytest.approx(4.0)
        with pytest.raises(IndexOutOfRange):
            kernel_convergence(gaussian, "D", 0, 1j, -1j)


class TestRelations:
    def test_equal_arguments(self, gaussian):
        z = 0.5 + 0.5j
        sides = relation_sides(gaussian, 3, z, z, z, z)
        assert sides["i"] == (0, 0)
        assert sides["v"] == (0, 0)
        rep = relation_residuals(gaussian, 3, [(z, z, z, z)])
        assert rep.max_residual() <= 1e-15

    def test_gaussian_order_one(self, gaussian, rng):
        rep = relation_residuals(gaussian, 1, random_quadruples(rng, 100))
        assert set(rep.residuals) == set(RELATION_IDS)
        assert rep.max_residual() <= 1e-9

    def test_lognormal_max_order(self, lognormal, rng):
        rep = relation_residuals(lognormal, lognormal.N, random_quadruples(rng, 100))
        assert rep.max_residual() <= 1e-6

    def test_antisymmetries_exact(self, gaussian, rng):
        for quad in random_quadruples(rng, 20):
            sides = relation_sides(gaussian, 4, *quad)
            for rid in ("i", "ii", "iii"):
                lhs, rhs = sides[rid]
                assert abs(lhs - rhs) <= 1e-14 * (1 + abs(rhs))

    def test_report_json(self, two_point, rng):
        rep = relation_residuals(two_point, 1, random_quadruples(rng, 5))
        doc = rep.to_json()
        assert [d["relation"] for d in doc] == list(RELATION_IDS)
        for d in doc:
            assert d["max_residual"] >= 0
            assert len(d["worst_input"]) == 4


class TestDoubleDet:
    def test_zero(self):
        assert double_det(*([0] * 8)) == (0, 0)

    def test_permutation_pattern(self):
        # det[[1,0],[0,1]] * det[[0,1],[1,0]] = -1
        lhs, rhs = double_det(1, 0, 0, 1, 0, 1, 1, 0)
        assert lhs == rhs == -1

    def test_random(self, rng):
        for _ in range(100):
            v = rng.normal(size=8) + 1j * rng.normal(size=8)
            lhs, rhs = double_det(*v)
            assert abs(lhs - rhs) <= 1e-12 * (1 + abs(rhs))
