import cmath
import math

import numpy as np
import pytest

from oracles import circle_from_three
from weylcircles import INF, Circle, MoebiusMap, circle_through, eval_map, image_of_real_line
from weylcircles.errors import CollinearPoints, DegenerateMap


def random_map(rng):
    return MoebiusMap(*(complex(*rng.normal(size=2)) for _ in range(4)))


class TestImageOfRealLine:
    def test_reciprocal_shift(self):
        img = image_of_real_line(MoebiusMap(0, 1, 1, 1j))
        assert img.variant == "circle"
        assert abs(img.circle.center - (-0.5j)) <= 1e-14
        assert abs(img.circle.radius - 0.5) <= 1e-14

    def test_constant_map_is_point(self):
        img = image_of_real_line(MoebiusMap(2, 2, 1, 1))
        assert img.variant == "point"
        assert img.point == 2

    def test_real_denominator_gives_line(self):
        img = image_of_real_line(MoebiusMap(1j, 0, 0, 1))
        assert img.variant == "line"
        assert abs(img.point) <= 1e-15 or abs((img.point / img.direction).imag) <= 1e-15
        assert abs(abs(img.direction.imag) - 1) <= 1e-15

    def test_meta_records_determinants(self):
        img = image_of_real_line(MoebiusMap(0, 1, 1, 1j))
        assert set(img.meta) == {"det_gamma_delta", "det_alpha_beta", "threshold", "threshold_gamma_delta"}

    def test_all_zero_rejected(self):
        with pytest.raises(DegenerateMap):
            MoebiusMap(0, 0, 0, 0)

    def test_agrees_with_three_point_fit(self, rng):
        for _ in range(100):
            m = random_map(rng)
            img = image_of_real_line(m)
            assert img.variant == "circle"
            t = rng.normal(size=3) * 2
            c, r = circle_from_three(*(m(x) for x in t))
            assert abs(c - img.circle.center) <= 1e-10 * (1 + abs(c))
            assert abs(r - img.circle.radius) <= 1e-10 * (1 + r)

    def test_sampled_points_on_circle(self, rng):
        for _ in range(100):
            m = random_map(rng)
            circ = image_of_real_line(m).circle
            for t in np.tan(np.pi * (rng.uniform(size=100) - 0.5)):
                w = m(t)
                if cmath.isinf(w):
                    continue
                assert abs(abs(w - circ.center) - circ.radius) <= 1e-10 * (1 + circ.radius + abs(w))

    def test_unbalanced_columns_still_a_circle(self):
        # alpha delta - beta gamma = -1e4 i is tiny next to max|coef|^2 = 1e22
        # but 5e-8 of its own terms: a genuine circle of radius 1/2
        m = MoebiusMap(1e11, 1, 1e11 * (1 + 1e-7j), 1)
        img = image_of_real_line(m)
        assert img.variant == "circle"
        r = m.delta / m.gamma
        ts = [-r.real + abs(r.imag) * math.tan(p) for p in (-1.0, 0.0, 1.0)]
        c, rad = circle_from_three(*(m(t) for t in ts))
        assert abs(img.circle.center - c) <= 1e-6
        assert img.circle.radius == pytest.approx(0.5, rel=1e-6)
        assert rad == pytest.approx(0.5, rel=1e-6)

    def test_invariant_under_parameter_rescaling(self, rng):
        for _ in range(20):
            a, b, c, d = (complex(*rng.normal(size=2)) for _ in range(4))
            lam = 10.0 ** rng.uniform(-8, 8)
            c1 = image_of_real_line(MoebiusMap(a, b, c, d)).circle
            c2 = image_of_real_line(MoebiusMap(lam * a, b, lam * c, d)).circle
            assert abs(c1.center - c2.center) <= 1e-9 * (1 + abs(c1.center))
            assert c1.radius == pytest.approx(c2.radius, rel=1e-9)

    def test_invariant_under_scaling(self, rng):
        for _ in range(20):
            m = random_map(rng)
            lam = complex(*rng.normal(size=2)) * 10
            c1 = image_of_real_line(m).circle
            c2 = image_of_real_line(m.scaled(lam)).circle
            assert abs(c1.center - c2.center) <= 1e-12 * (1 + abs(c1.center))
            assert c1.radius == pytest.approx(c2.radius, rel=1e-12)


class TestEvalMap:
    m = MoebiusMap(0, 1, 1, 1j)

    def test_at_zero(self):
        assert eval_map(self.m, 0) == -1j

    def test_at_infinity(self):
        assert eval_map(self.m, math.inf) == 0

    def test_plain_arithmetic(self):
        assert eval_map(MoebiusMap(1, 2, 3, 4), 1) == pytest.approx(3 / 7)

    def test_pole(self):
        assert eval_map(MoebiusMap(1, 0, 1, 1), -1) == INF

    def test_callable(self):
        assert self.m(1.0) == eval_map(self.m, 1.0)


class TestCircleThrough:
    def test_unit_circle(self):
        c = circle_through(1, 1j, -1)
        assert abs(c.center) <= 1e-15
        assert c.radius == pytest.approx(1)

    def test_corner_triangle(self):
        c = circle_through(0, 1, 1j)
        assert c.center == pytest.approx(0.5 + 0.5j)
        assert c.radius == pytest.approx(math.sqrt(2) / 2)

    @pytest.mark.parametrize("pts", [(0, 1, 2), (1j, 1j, 2)])
    def test_collinear(self, pts):
        with pytest.raises(CollinearPoints):
            circle_through(*pts)

    def test_equidistance(self, rng):
        for _ in range(50):
            pts = [complex(*rng.normal(size=2)) for _ in range(3)]
            c = circle_through(*pts)
            for p in pts:
                assert abs(p - c.center) == pytest.approx(c.radius, rel=1e-10)


class TestCircle:
    def test_signed_zero_normalized(self):
        assert str(Circle(complex(-0.0, 0.75), 0.25)) == "Circle(center=0.75j, radius=0.25)"

    def test_dict_round_trip(self):
        c = Circle(1 - 2j, 3.0)
        assert Circle.from_dict(c.to_dict()) == c

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            Circle(0, -1)

    def test_contains_closed(self):
        c = Circle(0.75j, 0.25)
        assert c.contains(0.5j)
        assert not c.contains(0)
