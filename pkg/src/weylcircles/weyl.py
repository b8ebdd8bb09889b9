"""Weyl circles and lens regions for constrained moment problems.

Every region is described by the Moebius maps generating its boundary
arcs. Circle centers and radii come either from closed forms in the
kernel values or from :func:`image_of_real_line` applied to those maps.
Regions are built for finite order ``n``; the full (``n = oo``)
problems are approached through the convergence monitor stored on
each region.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadInterval,
    DegenerateMap,
    NotCertified,
    OverlappingGaps,
    PoleAtA,
    PoleAtZ,
    RealAxisZ,
)
from .kernels import all_kernels
from .moebius import INF, Circle, MoebiusMap, circle_through, image_of_real_line, is_inf
from .moments import SupportSpec, check_positivity
from .orthopoly import OrthoSystem, eval_all, truncated_t

IMAG_TOL = 1e-12
VERTEX_TOL = 1e-10
TANGENT_STEP = 1e-6
MEMBERSHIP_SAMPLES = 200


class MembershipDiagnostic(UserWarning):
    """A sampled solution value fell outside the disk-intersection region."""


@dataclass(frozen=True)
class Arc:
    """Boundary arc ``{map(t) : t in [t_start, t_end]}`` lying on ``circles[circle]``."""

    label: str
    map: MoebiusMap
    t_start: float
    t_end: float
    circle: int


@dataclass(frozen=True)
class ParameterCone:
    """Parameter values ``apex + u d1 + v d2`` (``u, v >= 0``) mapped by ``map``."""

    map: MoebiusMap
    apex: complex
    directions: tuple[complex, complex]


@dataclass(frozen=True, eq=False)
class WeylRegion:
    kind: str
    circles: tuple[Circle, ...]
    vertices: tuple[complex, ...] = ()
    vertex_angle: float | None = None
    arcs: tuple[Arc, ...] = ()
    degenerate: bool = False
    order: int = 0
    z: complex = 1j
    convergence: dict | None = None
    cone: ParameterCone | None = None
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "circles": [c.to_dict() for c in self.circles],
            "vertices": [[v.real, v.imag] for v in self.vertices],
            "vertex_angle": self.vertex_angle,
            "degenerate": self.degenerate,
            "order": self.order,
            "z": [self.z.real, self.z.imag],
            "convergence": self.convergence,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WeylRegion":
        """Rebuild the geometric part (no arcs or parameter cone)."""
        return cls(
            kind=d["kind"],
            circles=tuple(Circle.from_dict(c) for c in d["circles"]),
            vertices=tuple(complex(*v) for v in d["vertices"]),
            vertex_angle=d["vertex_angle"],
            degenerate=d["degenerate"],
            order=d["order"],
            z=complex(*d.get("z", (0.0, 1.0))),
            convergence=d.get("convergence"),
        )


def _check_z(z) -> complex:
    z = complex(z)
    if abs(z.imag) <= IMAG_TOL * (1 + abs(z)):
        raise RealAxisZ(f"z = {z} lies on the real axis")
    return z


def _check_order(sys: OrthoSystem, n: int):
    if not 0 <= n <= sys.N:
        raise NotCertified(f"order {n} not available (system certified to {sys.N})")


def _check_interval(a, b):
    if not a < b:
        raise BadInterval(f"need a < b, got a={a}, b={b}")


def _check_lens_order(n: int, what: str):
    # at order 0 the second kernel column is proportional to (z - a), so the
    # second boundary is a straight line (a half-plane bound), not a circle
    if n < 1:
        raise DegenerateMap(f"{what} needs n >= 1; at n = 0 its second boundary is a line")


def _as_circle(map: MoebiusMap) -> Circle:
    img = image_of_real_line(map)
    if img.variant == "circle":
        return img.circle
    if img.variant == "point":
        # The determinant is at rounding level, but a tiny genuine circle
        # may hide there; its closed-form center is still accurate when the
        # conjugate determinant is well away from zero, whereas img.point is
        # a point on the circle and can sit a full diameter off.
        g, e = img.meta["det_gamma_delta"], img.meta["det_alpha_beta"]
        if abs(g) > img.meta["threshold_gamma_delta"]:
            a, b, c, d = map.coefficients
            center = (a * d.conjugate() - b * c.conjugate()) / g
            return Circle(center, abs(e / g))
        return Circle(img.point, 0.0)
    raise DegenerateMap("boundary arc maps the real line onto a line")


def _hamburger_circle(sys: OrthoSystem, n: int, z: complex) -> Circle:
    k = all_kernels(sys, n, z, z.conjugate())
    return Circle(-k.C / k.D, 1.0 / abs(k.D))


def _convergence(sys: OrthoSystem, n: int, z: complex) -> dict | None:
    if n < 1:
        return None
    cur, prev = _hamburger_circle(sys, n, z), _hamburger_circle(sys, n - 1, z)
    return {
        "delta_center": abs(cur.center - prev.center),
        "delta_radius": abs(cur.radius - prev.radius),
    }


def hamburger_disk(sys: OrthoSystem, n: int, z) -> Circle:
    """Weyl disk of the truncated Hamburger problem ``s_0..s_{2n}``.

    Center ``-C_n(z, conj z) / D_n(z, conj z)``, radius
    ``1 / |D_n(z, conj z)|``.
    """
    z = _check_z(z)
    _check_order(sys, n)
    return _hamburger_circle(sys, n, z)


def hamburger_map(sys: OrthoSystem, n: int, z, base: float = 0.0) -> MoebiusMap:
    """Boundary parametrization ``-(C(z,a) t + A(z,a)) / (D(z,a) t + B(z,a))``."""
    k = all_kernels(sys, n, complex(z), base)
    return MoebiusMap(-k.C, -k.A, k.D, k.B)


def hamburger_region(sys: OrthoSystem, n: int, z) -> WeylRegion:
    """:func:`hamburger_disk` wrapped as a region with its boundary arc."""
    circle = hamburger_disk(sys, n, z)
    z = complex(z)
    arc = Arc("w", hamburger_map(sys, n, z), -math.inf, math.inf, 0)
    return WeylRegion(
        "hamburger_disk", (circle,), arcs=(arc,), order=n, z=z,
        convergence=_convergence(sys, n, z),
    )


def _tangent(map: MoebiusMap, t: float, h: float) -> complex:
    # central difference with the step relative to the distance to the pole,
    # so the truncation error stays ~h^2 however the map is scaled
    pole = -map.delta / map.gamma if map.gamma != 0 else math.inf
    h = h * min(max(abs(pole - t), 1e-3), 1e3)
    return (map(t + h) - map(t - h)) / (2 * h)


def _angle_between(d1: complex, d2: complex) -> float:
    if d1 == 0 or d2 == 0 or not (cmath.isfinite(d1) and cmath.isfinite(d2)):
        return math.nan
    return abs(cmath.phase(d2 / d1))


def _degenerate(v1: complex, v2: complex) -> bool:
    return abs(v1 - v2) <= VERTEX_TOL * (1 + abs(v1))


def _finish(region: WeylRegion, validate: bool) -> WeylRegion:
    if validate and region.cone is not None:
        bad, excess = validate_membership(region, MEMBERSHIP_SAMPLES, seed=0)
        region.meta["membership_violations"] = bad
        region.meta["membership_max_excess"] = excess
        if bad:
            warnings.warn(
                f"{bad} of {MEMBERSHIP_SAMPLES} sampled parameters of a {region.kind} "
                f"region fall outside the disk intersection (max excess {excess:.3g})",
                MembershipDiagnostic,
                stacklevel=3,
            )
    return region


def stieltjes_region(sys: OrthoSystem, n: int, z, a: float, validate: bool = True) -> WeylRegion:
    """Lens of transforms of solutions supported on ``[a, oo)``.

    ``t_a`` is taken at truncation level, ``-Q_n(a) / P_n(a)``. The arcs
    are ``w_1(t) = H(t)`` for ``t in [t_a, oo]`` and
    ``w_2(t) = H(t_a + t / (a - z))`` for ``t in [0, oo]``, where ``H``
    is the Hamburger parametrization based at ``a``.
    """
    z = _check_z(z)
    _check_order(sys, n)
    _check_lens_order(n, "stieltjes_region")
    a = float(a)
    shifted = check_positivity(sys.s, SupportSpec.half_line(a)).shifted_results
    shifted_order = next(iter(shifted.values()))[0]
    if shifted_order < n - 1:
        raise NotCertified(
            f"shifted Hankel matrix for [{a}, oo) is PD only to order {shifted_order}"
        )
    try:
        t_a = truncated_t(sys, n, a).real
    except PoleAtZ:
        raise PoleAtA(f"P_{n} vanishes at a = {a}") from None

    k = all_kernels(sys, n, z, a)
    map1 = MoebiusMap(-k.C, -k.A, k.D, k.B)
    az = a - z
    map2 = MoebiusMap(-k.C, -az * (k.A + t_a * k.C), k.D, az * (k.B + t_a * k.D))
    circles = (_as_circle(map1), _as_circle(map2))
    vertices = (map1(math.inf), map1(t_a))
    angle = abs(cmath.phase(1 / az))
    numeric = _angle_between(
        _tangent(map1, t_a, TANGENT_STEP), _tangent(map2, 0.0, TANGENT_STEP)
    )
    region = WeylRegion(
        "stieltjes_lens",
        circles,
        vertices=vertices,
        vertex_angle=angle,
        arcs=(Arc("w1", map1, t_a, math.inf, 0), Arc("w2", map2, 0.0, math.inf, 1)),
        degenerate=_degenerate(*vertices),
        order=n,
        z=z,
        convergence=_convergence(sys, n, z),
        cone=ParameterCone(map1, complex(t_a), (1.0 + 0j, 1 / az)),
        meta={
            "a": a,
            "t_a": t_a,
            "t_a_level": "truncated",
            "shifted_pd_order": shifted_order,
            "vertex_angle_numeric": numeric,
        },
    )
    return _finish(region, validate)


def stieltjes_k2_closed_form(sys: OrthoSystem, n: int, z, a: float) -> Circle:
    """Second Stieltjes circle from the closed-form determinants.

    The determinant quotient is taken with the column order of the
    denominator matching the ``gamma, delta`` order of the boundary
    map, so it agrees with :func:`image_of_real_line` on ``w_2``.
    """
    z = _check_z(z)
    t_a = truncated_t(sys, n, a).real
    k = all_kernels(sys, n, z, a)
    kc = all_kernels(sys, n, z.conjugate(), a)
    x = (a - z) * (k.A + t_a * k.C)
    y = (a - z) * (k.B + t_a * k.D)
    yc = (a - z.conjugate()) * (kc.B + t_a * kc.D)
    num = x * kc.D - k.C * yc
    den = k.D * yc - y * kc.D
    return Circle(num / den, abs((a - z) / den))


def _interval_even(sys, n, z, a, b):
    _check_order(sys, n)
    _check_lens_order(n, "interval_region with even m")
    ka = all_kernels(sys, n, z, a)
    kb = all_kernels(sys, n, z, b)
    kac = all_kernels(sys, n, z.conjugate(), a)
    kbc = all_kernels(sys, n, z.conjugate(), b)
    sgn = (-1) ** n
    za, zb = z - a, z - b
    zac, zbc = za.conjugate(), zb.conjugate()
    map1 = MoebiusMap(-sgn * ka.C, -kb.C, sgn * ka.D, kb.D)
    map2 = MoebiusMap(-zb * sgn * ka.C, -za * kb.C, zb * sgn * ka.D, za * kb.D)

    den = zb * ka.D * zac * kbc.D - za * kb.D * zbc * kac.D
    num = zb * ka.C * zac * kbc.D - za * kb.C * zbc * kac.D
    d_ab = all_kernels(sys, n, a, b).D
    k2 = Circle(-num / den, abs(za * zb * d_ab / den))
    k1 = _hamburger_circle(sys, n, z)
    cone = ParameterCone(map1, 0j, (1.0 + 0j, zb / za))
    return map1, map2, (k1, k2), cone


def _det3(m):
    return complex(np.linalg.det(np.array(m, dtype=complex)))


def _interval_odd(sys, n, z, a, b):
    if n + 2 > sys.N:
        raise NotCertified(f"odd order {2 * n + 1} needs P_{n + 2}; system has P_{sys.N}")
    pz, qz = eval_all(sys, z, n + 2)
    pa, _ = eval_all(sys, a, n + 2)
    pb, _ = eval_all(sys, b, n + 2)
    def row(v):
        return [v[n + 2], v[n + 1], v[n]]

    rq = _det3([row(qz), row(pa), row(pb)])
    rp = _det3([row(pz), row(pa), row(pb)])
    # (-1)^(n+1): with (-1)^n the arcs trace the complementary halves
    # of their circles and sampled solutions fall outside the lens
    sgn = (-1) ** (n + 1)
    za, zb = z - a, z - b
    map3 = MoebiusMap(-sgn * rq, -za * qz[n + 1], sgn * rp, za * pz[n + 1])
    map4 = MoebiusMap(-sgn * rq, -zb * qz[n + 1], sgn * rp, zb * pz[n + 1])
    param = MoebiusMap(-sgn * rq, -qz[n + 1], sgn * rp, pz[n + 1])
    cone = ParameterCone(param, 0j, (1 / za, 1 / zb))
    return map3, map4, (_as_circle(map3), _as_circle(map4)), cone


def interval_region(sys: OrthoSystem, m: int, z, a: float, b: float, validate: bool = True) -> WeylRegion:
    """Lens of transforms of solutions of the ``[a, b]`` problem ``s_0..s_m``.

    Even ``m = 2n`` uses the closed-form circles; odd ``m = 2n + 1``
    builds both boundary maps from 3x3 determinants in
    ``P_n, P_{n+1}, P_{n+2}`` and passes them to
    :func:`image_of_real_line`.
    """
    z = _check_z(z)
    a, b = float(a), float(b)
    _check_interval(a, b)
    if m < 0:
        raise NotCertified("moment order must be nonnegative")
    n, odd = divmod(m, 2)
    if odd:
        map1, map2, circles, cone = _interval_odd(sys, n, z, a, b)
        kind, labels = "interval_lens_odd", ("w3", "w4")
    else:
        map1, map2, circles, cone = _interval_even(sys, n, z, a, b)
        kind, labels = "interval_lens_even", ("w1", "w2")
    vertices = (map1(0.0), map1(math.inf))
    angle = abs(cmath.phase((z - b) / (z - a)))
    numeric = _angle_between(
        _tangent(map1, 0.0, TANGENT_STEP), _tangent(map2, 0.0, TANGENT_STEP)
    )
    region = WeylRegion(
        kind,
        circles,
        vertices=vertices,
        vertex_angle=angle,
        arcs=(Arc(labels[0], map1, 0.0, math.inf, 0), Arc(labels[1], map2, 0.0, math.inf, 1)),
        degenerate=_degenerate(*vertices),
        order=m,
        z=z,
        convergence=_convergence(sys, n, z),
        cone=cone,
        meta={"a": a, "b": b, "vertex_angle_numeric": numeric},
    )
    return _finish(region, validate)


def _gap_parts(sys, n, z, a, b):
    ka = all_kernels(sys, n, z, a)
    kb = all_kernels(sys, n, z, b)
    kac = all_kernels(sys, n, z.conjugate(), a)
    kbc = all_kernels(sys, n, z.conjugate(), b)
    za, zb = z - a, z - b
    zac, zbc = za.conjugate(), zb.conjugate()
    map1 = MoebiusMap(-ka.C, kb.C, ka.D, -kb.D)
    # second edge of the cone: tau = -u conj(z-a) / conj(z-b), u >= 0
    map2 = MoebiusMap(zac * ka.C, zbc * kb.C, -zac * ka.D, -zbc * kb.D)
    num = zbc * za * kb.C * kac.D - zac * zb * ka.C * kbc.D
    den = zac * zb * ka.D * kbc.D - zbc * za * kb.D * kac.D
    d_ab = all_kernels(sys, n, a, b).D
    k2 = Circle(num / den, abs(za * zb * d_ab / den))
    cone = ParameterCone(map1, 0j, (1.0 + 0j, -zac / zbc))
    return map1, map2, k2, cone


def gap_circles(sys: OrthoSystem, n: int, z, a: float, b: float, validate: bool = True) -> WeylRegion:
    """Lens of transforms of solutions supported off the gap ``(a, b)``.

    The boundary arcs are the images of the two edges of the parameter
    cone ``-arg(-(z - a) / (z - b)) <= arg tau <= 0`` (the conjugate of
    the value cone of :func:`cone_angle`) under
    ``tau -> -(C_n(z,a) tau - C_n(z,b)) / (D_n(z,a) tau - D_n(z,b))``.
    Strict positivity on the complement of the gap is reported in
    ``meta`` but not enforced; when it fails the lens may collapse to a
    point, flagged by ``degenerate``.
    """
    z = _check_z(z)
    a, b = float(a), float(b)
    _check_interval(a, b)
    _check_order(sys, n)
    _check_lens_order(n, "gap_circles")
    map1, map2, k2, cone = _gap_parts(sys, n, z, a, b)
    vertices = (map1(0.0), map1(math.inf))
    angle = abs(cmath.phase(-(z - a) / (z - b)))
    numeric = _angle_between(
        _tangent(map1, 0.0, TANGENT_STEP), _tangent(map2, 0.0, TANGENT_STEP)
    )
    pos = check_positivity(sys.s, SupportSpec.gap_complement([(a, b)])).shifted_results
    localized = next(iter(pos.values()))[0]
    region = WeylRegion(
        "gap_lens",
        (_hamburger_circle(sys, n, z), k2),
        vertices=vertices,
        vertex_angle=angle,
        arcs=(Arc("w1", map1, 0.0, math.inf, 0), Arc("w2", map2, 0.0, math.inf, 1)),
        degenerate=_degenerate(*vertices),
        order=n,
        z=z,
        convergence=_convergence(sys, n, z),
        cone=cone,
        meta={
            "a": a,
            "b": b,
            "localized_pd_order": localized,
            "certified": localized >= n - 1,
            "vertex_angle_numeric": numeric,
        },
    )
    # without a solution supported off the gap the sampled cone has no meaning
    return _finish(region, validate and localized >= n - 1 and not region.degenerate)


def _intersection_witness(circles, tol: float) -> complex | None:
    """A point in every closed disk, or ``None`` if the intersection is empty."""
    candidates = [c.center for c in circles]
    for i, c1 in enumerate(circles):
        for c2 in circles[i + 1:]:
            d = abs(c2.center - c1.center)
            if d == 0 or d > c1.radius + c2.radius + tol or d < abs(c1.radius - c2.radius) - tol:
                continue
            # foot point along the center line, then offset perpendicular
            along = (d * d + c1.radius**2 - c2.radius**2) / (2 * d)
            h = math.sqrt(max(c1.radius**2 - along**2, 0.0))
            u = (c2.center - c1.center) / d
            base = c1.center + along * u
            candidates += [base + 1j * h * u, base - 1j * h * u]
    for p in candidates:
        if all(c.contains(p, tol) for c in circles):
            return p
    return None


def multi_gap_region(sys: OrthoSystem, n: int, z, gaps) -> WeylRegion:
    """Hamburger disk intersected with the second circle of every gap."""
    z = _check_z(z)
    _check_order(sys, n)
    gaps = [(float(a), float(b)) for a, b in gaps]
    if not gaps:
        raise BadInterval("at least one gap is required")
    for a, b in gaps:
        _check_interval(a, b)
    for (_, b1), (a2, _) in zip(gaps[:-1], gaps[1:]):
        if not b1 < a2:
            raise OverlappingGaps(f"gaps must be ordered and disjoint, got {gaps}")
    lenses = [gap_circles(sys, n, z, a, b, validate=False) for a, b in gaps]
    circles = (lenses[0].circles[0],) + tuple(lens.circles[1] for lens in lenses)
    arcs = []
    for i, lens in enumerate(lenses, start=1):
        w1, w2 = lens.arcs
        arcs += [
            Arc(f"g{i}w1", w1.map, w1.t_start, w1.t_end, 0),
            Arc(f"g{i}w2", w2.map, w2.t_start, w2.t_end, i),
        ]
    single = lenses[0] if len(lenses) == 1 else None
    tol = 1e-9 * (1 + max(c.radius for c in circles))
    witness = _intersection_witness(circles, tol)
    return WeylRegion(
        "multi_gap",
        circles,
        vertices=single.vertices if single else (),
        vertex_angle=single.vertex_angle if single else None,
        arcs=tuple(arcs),
        degenerate=any(lens.degenerate for lens in lenses),
        order=n,
        z=z,
        convergence=_convergence(sys, n, z),
        meta={"gaps": gaps, "nonempty": witness is not None, "witness": witness},
    )


def default_tol(region: WeylRegion) -> float:
    return 1e-9 * (1 + max(c.radius for c in region.circles))


def contains(region: WeylRegion, w, tol: float | None = None) -> bool:
    """Whether ``w`` lies in every closed disk of the region."""
    tol = default_tol(region) if tol is None else tol
    return all(c.contains(w, tol) for c in region.circles)


def cone_angle(z, a: float, b: float) -> float:
    """Opening angle ``arg(-(z - a) / (z - b))`` of the value cone off ``(a, b)``."""
    _check_interval(a, b)
    z = complex(z)
    if z.imag <= 0:
        raise RealAxisZ("cone angle needs z in the open upper half-plane")
    return cmath.phase(-(z - a) / (z - b))


def step_function_arg(z, intervals, heights) -> float:
    """Argument of the multiplicative representation for a step function.

    ``f = sum_i c_i 1_[a_i, b_i]`` contributes
    ``sum_i c_i (arg(z - b_i) - arg(z - a_i))``.
    """
    z = complex(z)
    return float(sum(
        c * (cmath.phase(z - bi) - cmath.phase(z - ai))
        for (ai, bi), c in zip(intervals, heights)
    ))


def _arc_parameters(arc: Arc, count: int) -> np.ndarray:
    u = np.linspace(0.0, 1.0, count)
    lo, hi = arc.t_start, arc.t_end
    if math.isinf(lo) and math.isinf(hi):
        with np.errstate(over="ignore"):
            t = np.tan(np.pi * (u - 0.5))
        t[0], t[-1] = -math.inf, math.inf
        return t
    if math.isinf(hi):
        scale = max(1.0, abs(lo))
        with np.errstate(over="ignore"):
            t = lo + scale * np.tan(0.5 * np.pi * u)
        t[-1] = math.inf
        return t
    return lo + (hi - lo) * u


def boundary_samples(region: WeylRegion, count: int) -> list[tuple[str, float, complex]]:
    """``count`` points per boundary arc, endpoints included."""
    if count < 2:
        raise ValueError("count must be at least 2")
    out = []
    for arc in region.arcs:
        for t in _arc_parameters(arc, count):
            out.append((arc.label, float(t), arc.map(t)))
    return out


def sample_parameters(cone: ParameterCone, count: int, rng: np.random.Generator) -> np.ndarray:
    """Random points of the parameter cone, spread over all scales."""
    u = np.tan(0.5 * np.pi * rng.uniform(0, 1, count) ** 2)
    v = np.tan(0.5 * np.pi * rng.uniform(0, 1, count) ** 2)
    d1, d2 = cone.directions
    return cone.apex + u * d1 + v * d2


def validate_membership(region: WeylRegion, count: int = MEMBERSHIP_SAMPLES, seed: int = 0):
    """Check sampled parameter images against :func:`contains`.

    Returns ``(violations, max_excess)`` where the excess is the largest
    distance by which a sample lies outside some disk.
    """
    if region.cone is None:
        raise ValueError(f"{region.kind} region carries no parameter cone")
    rng = np.random.default_rng(seed)
    tol = default_tol(region)
    bad, excess = 0, 0.0
    for tau in sample_parameters(region.cone, count, rng):
        w = region.cone.map(complex(tau))
        if is_inf(w) or not cmath.isfinite(w):
            continue
        over = max(abs(w - c.center) - c.radius for c in region.circles)
        if over > tol:
            bad += 1
        excess = max(excess, over)
    return bad, max(excess, 0.0)


def fit_circle(arc: Arc) -> Circle:
    """Circle through three points of an arc, independent of the closed forms."""
    lo = arc.t_start if not math.isinf(arc.t_start) else -1.0
    pts = [arc.map(lo), arc.map(lo + 1.0), arc.map(lo + 3.0)]
    return circle_through(*pts)


__all__ = [
    "Arc",
    "INF",
    "MembershipDiagnostic",
    "ParameterCone",
    "WeylRegion",
    "boundary_samples",
    "cone_angle",
    "contains",
    "fit_circle",
    "gap_circles",
    "hamburger_disk",
    "hamburger_map",
    "hamburger_region",
    "interval_region",
    "multi_gap_region",
    "sample_parameters",
    "stieltjes_k2_closed_form",
    "stieltjes_region",
    "step_function_arg",
    "validate_membership",
]
