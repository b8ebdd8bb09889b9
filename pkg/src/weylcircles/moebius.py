"""Images of the real line under Moebius maps, and a three-point circle fit."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import CollinearPoints, DegenerateMap

INF = complex(math.inf, 0.0)

#: relative band inside which a determinant is treated as zero
DEGENERACY_TOL = 1e-13


def is_inf(w) -> bool:
    return cmath.isinf(w)


@dataclass(frozen=True)
class MoebiusMap:
    """``w(t) = (alpha t + beta) / (gamma t + delta)``."""

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.alpha == self.beta == self.gamma == self.delta == 0:
            raise DegenerateMap("all four coefficients vanish")

    def __call__(self, t):
        return eval_map(self, t)

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return self.alpha, self.beta, self.gamma, self.delta

    def scaled(self, lam: complex) -> "MoebiusMap":
        return MoebiusMap(*(lam * c for c in self.coefficients))


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        # adding 0.0 turns a signed zero into +0.0
        object.__setattr__(self, "center", complex(self.center) + 0.0)
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius >= 0 or not cmath.isfinite(self.center):
            raise ValueError("circle needs finite center and nonnegative radius")

    def contains(self, w, tol: float = 0.0) -> bool:
        """Closed-disk membership with absolute slack ``tol``."""
        return abs(w - self.center) <= self.radius + tol

    def to_dict(self) -> dict:
        return {"center": [self.center.real, self.center.imag], "radius": self.radius}

    @classmethod
    def from_dict(cls, d) -> "Circle":
        return cls(complex(*d["center"]), d["radius"])


@dataclass(frozen=True)
class MoebiusImage:
    """Image of the extended real line: ``"circle"``, ``"point"`` or ``"line"``.

    ``point`` holds the constant value of a point image or a point on a
    line image; ``direction`` is a unit vector along a line image.
    ``meta`` records both determinants and the degeneracy threshold.
    """

    variant: str
    circle: Circle | None = None
    point: complex | None = None
    direction: complex | None = None
    meta: dict = field(default_factory=dict, compare=False)


def eval_map(map: MoebiusMap, t) -> complex:
    """Evaluate at ``t`` (real, complex or ``inf``); returns :data:`INF` at a pole."""
    a, b, c, d = map.coefficients
    if cmath.isinf(t):
        if c != 0:
            return a / c
        return INF if a != 0 else b / d
    den = c * t + d
    if den == 0:
        return INF
    return (a * t + b) / den


def image_of_real_line(map: MoebiusMap, tol: float = DEGENERACY_TOL) -> MoebiusImage:
    """Classify and compute ``{w(t) : t real or inf}``.

    For a proper circle the center is
    ``det[[alpha, beta], [conj gamma, conj delta]] / det[[gamma, delta], [conj gamma, conj delta]]``
    and the radius is ``|det[[alpha, beta], [gamma, delta]]|`` over the
    modulus of the same denominator.
    """
    a, b, c, d = map.coefficients
    # each determinant is compared with the size of its own two terms, which
    # is invariant under rescaling t as well as under scaling the map
    g = c * d.conjugate() - d * c.conjugate()
    e = a * d - b * c
    band_e = tol * (abs(a * d) + abs(b * c))
    band_g = tol * 2 * abs(c * d)
    meta = {"det_gamma_delta": g, "det_alpha_beta": e, "threshold": band_e, "threshold_gamma_delta": band_g}

    if abs(e) <= band_e:
        if c == 0 and d == 0:
            raise DegenerateMap("map is constant infinity")
        value = a / c if abs(c) >= abs(d) else b / d
        return MoebiusImage("point", point=value, meta=meta)
    if abs(g) <= band_g:
        return _line_image(a, b, c, d, e, meta)
    center = (a * d.conjugate() - b * c.conjugate()) / g
    radius = abs(e / g)
    if not (cmath.isfinite(center) and math.isfinite(radius)):
        # a circle too large to represent is a line at double precision
        return _line_image(a, b, c, d, e, meta)
    return MoebiusImage("circle", circle=Circle(center, radius), meta=meta)


def _line_image(a, b, c, d, e, meta) -> MoebiusImage:
    # w(t) - a/c = -e / (c (c t + d)) with c t + d of fixed phase on a line
    # image, so the direction is e / c**2 up to a real factor
    if c == 0:
        return MoebiusImage("line", point=b / d, direction=(a / d) / abs(a / d), meta=meta)
    u = c / abs(c)
    step = e / (u * u)
    point = a / c if abs(c) >= abs(d) else b / d
    if not cmath.isfinite(point):
        point = b / d if d != 0 else point
    return MoebiusImage("line", point=point, direction=step / abs(step), meta=meta)


def circle_through(p1, p2, p3) -> Circle:
    """Unique circle through three non-collinear points."""
    p1, p2, p3 = complex(p1), complex(p2), complex(p3)
    u, v = p2 - p1, p3 - p1
    cross = (u.conjugate() * v).imag
    size = max(abs(u), abs(v), abs(p3 - p2))
    if size == 0 or abs(cross) <= 1e-14 * size * size:
        raise CollinearPoints("points are collinear or coincide")
    offset = 1j * (abs(v) ** 2 * u - abs(u) ** 2 * v) / (2 * cross)
    return Circle(p1 + offset, abs(offset))
