"""Moment sequences, Hankel positivity screening and classical fixtures."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from numpy.polynomial import Polynomial

from .errors import (
    DegreeExceedsMoments,
    EmptySequence,
    NonFiniteInput,
    OverflowRisk,
)

if TYPE_CHECKING:
    from .measures import DiscreteMeasure

#: pivots of the equilibrated Hankel matrix below this count as singular
PIVOT_TOL = 1e-12


@dataclass(frozen=True)
class MomentSequence:
    """Finite real moment sequence ``s_0, ..., s_m``.

    Values are kept unnormalized. ``s_0 <= 0`` is accepted here so that
    :func:`check_positivity` can report it; everything downstream of
    the positivity check refuses such input.
    """

    values: tuple[float, ...]
    label: str = ""

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) == 0:
            raise EmptySequence("moment sequence must contain at least s_0")
        if not all(math.isfinite(v) for v in vals):
            raise NonFiniteInput("all moments must be finite")
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        """Truncation order, i.e. index of the last moment."""
        return len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def to_dict(self) -> dict:
        return {"label": self.label, "values": list(self.values)}

    @classmethod
    def from_dict(cls, d: dict) -> "MomentSequence":
        return cls(values=tuple(d["values"]), label=d.get("label", ""))


@dataclass(frozen=True)
class SupportSpec:
    """Support constraint of a moment problem.

    Use the constructors :meth:`all_of_R`, :meth:`half_line`,
    :meth:`interval` and :meth:`gap_complement`.
    """

    kind: str
    params: tuple = ()

    @classmethod
    def all_of_R(cls):
        return cls("all_of_R")

    @classmethod
    def half_line(cls, a):
        return cls("half_line", (float(a),))

    @classmethod
    def interval(cls, a, b):
        return cls("interval", (float(a), float(b)))

    @classmethod
    def gap_complement(cls, gaps):
        return cls("gap_complement", tuple((float(a), float(b)) for a, b in gaps))

    def localizers(self) -> dict[str, Polynomial]:
        """Polynomials that are nonnegative on the support, keyed by label."""
        if self.kind == "all_of_R":
            return {}
        if self.kind == "half_line":
            (a,) = self.params
            return {f"x-({a:g})": Polynomial([-a, 1.0])}
        if self.kind == "interval":
            a, b = self.params
            return {
                f"x-({a:g})": Polynomial([-a, 1.0]),
                f"({b:g})-x": Polynomial([b, -1.0]),
                f"(x-({a:g}))(({b:g})-x)": Polynomial([-a * b, a + b, -1.0]),
            }
        if self.kind == "gap_complement":
            return {
                f"(x-({a:g}))(x-({b:g}))": Polynomial([a * b, -(a + b), 1.0])
                for a, b in self.params
            }
        raise ValueError(f"unknown support kind {self.kind!r}")


@dataclass(frozen=True)
class PositivityReport:
    max_pd_order: int
    condition_estimates: tuple[float, ...]
    shifted_results: dict = field(default_factory=dict)


def _hankel(s: np.ndarray, n: int, shift: Polynomial | None = None) -> np.ndarray:
    """Order-``n`` Hankel matrix of ``s``, localized by ``shift`` if given."""
    idx = np.add.outer(np.arange(n + 1), np.arange(n + 1))
    if shift is None:
        return s[idx]
    H = np.zeros((n + 1, n + 1))
    for j, c in enumerate(shift.coef):
        H += c * s[idx + j]
    return H


def hankel_pivots(H: np.ndarray) -> np.ndarray:
    """Pivots of the symmetric LDL^T factorization of the equilibrated ``H``.

    Factorization stops at the first pivot below :data:`PIVOT_TOL`; that
    pivot is the last entry of the returned array.
    """
    diag = np.diagonal(H)
    bad = np.flatnonzero(~(diag > 0))
    size = int(bad[0]) if bad.size else H.shape[0]
    scale = 1.0 / np.sqrt(diag[:size])
    A = H[:size, :size] * np.outer(scale, scale)
    pivots = []
    for k in range(size):
        p = A[k, k]
        pivots.append(p)
        if p < PIVOT_TOL:
            return np.array(pivots)
        A[k + 1:, k + 1:] -= np.outer(A[k + 1:, k], A[k, k + 1:]) / p
    if size < H.shape[0]:
        pivots.append(0.0)
    return np.array(pivots)


def _pd_order(H: np.ndarray) -> tuple[int, list[float]]:
    piv = hankel_pivots(H)
    good = int(np.argmax(piv < PIVOT_TOL)) if np.any(piv < PIVOT_TOL) else len(piv)
    conds = [float(piv[: k + 1].max() / piv[: k + 1].min()) for k in range(good)]
    return good - 1, conds


def check_positivity(s: MomentSequence, support: SupportSpec | None = None) -> PositivityReport:
    """Largest orders at which the (localized) Hankel matrices are PD.

    ``max_pd_order`` is -1 when already ``s_0 <= 0``. For each
    localizing polynomial of the support the report maps its label to
    ``(max_pd_order, condition_estimates)``.
    """
    support = support or SupportSpec.all_of_R()
    arr = s.as_array()
    order, conds = _pd_order(_hankel(arr, s.m // 2))
    shifted = {}
    for label, q in support.localizers().items():
        nmax = (s.m - q.degree()) // 2
        if nmax < 0:
            shifted[label] = (-1, ())
            continue
        o, c = _pd_order(_hankel(arr, nmax, q))
        shifted[label] = (o, tuple(c))
    return PositivityReport(order, tuple(conds), shifted)


def _double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def _checked(values, family):
    out = []
    for v in values:
        try:
            f = float(v)
        except OverflowError:
            raise OverflowRisk(f"{family} moment exceeds double range") from None
        if not math.isfinite(f):
            raise OverflowRisk(f"{family} moment exceeds double range")
        out.append(f)
    return out


def classical_moments(family: str, count: int, *params: float) -> MomentSequence:
    """Moments ``s_0 .. s_{count-1}`` of a classical measure.

    ``family`` is one of ``"gaussian"`` (standard normal),
    ``"lognormal"`` (standard lognormal, an indeterminate Hamburger
    example), ``"uniform"`` (params ``a, b``; the uniform probability
    measure on ``[a, b]``) or ``"two_point"`` (params ``x1, w1, x2, w2``).
    """
    if count < 1:
        raise EmptySequence("count must be at least 1")
    ns = range(count)
    if family == "gaussian":
        vals = [0 if n % 2 else _double_factorial(n - 1) for n in ns]
    elif family == "lognormal":
        if (count - 1) ** 2 / 2 > math.log(np.finfo(float).max):
            raise OverflowRisk(f"lognormal moment s_{count - 1} exceeds double range")
        vals = [math.exp(n * n / 2) for n in ns]
    elif family == "uniform":
        a, b = params
        if not a < b:
            raise ValueError("uniform family needs a < b")
        vals = [(b ** (n + 1) - a ** (n + 1)) / ((n + 1) * (b - a)) for n in ns]
    elif family == "two_point":
        x1, w1, x2, w2 = params
        vals = [w1 * x1**n + w2 * x2**n for n in ns]
    else:
        raise ValueError(f"unknown family {family!r}")
    label = family if not params else f"{family}{tuple(params)}"
    return MomentSequence(tuple(_checked(vals, family)), label)


def moments_of(measure: "DiscreteMeasure", count: int) -> MomentSequence:
    """Power moments of a finite atomic measure."""
    x = measure.positions
    w = measure.weights
    with np.errstate(over="ignore", invalid="ignore"):
        vals = [float(np.sum(w * x**n)) for n in range(count)]
    return MomentSequence(tuple(_checked(vals, "measure")), "moments_of")


def apply_functional(s: MomentSequence, p) -> complex | float:
    """Riesz functional: ``sum_k c_k s_k`` for ``p = sum_k c_k x^k``.

    ``p`` may be a :class:`numpy.polynomial.Polynomial` or an ascending
    coefficient sequence (complex coefficients are allowed).
    """
    coef = np.asarray(p.coef if isinstance(p, Polynomial) else p)
    nz = np.flatnonzero(coef)
    deg = int(nz[-1]) if nz.size else 0
    if deg > s.m:
        raise DegreeExceedsMoments(f"degree {deg} exceeds moment order {s.m}")
    coef = coef[: deg + 1]
    return np.dot(coef, s.as_array()[: deg + 1]).item()
