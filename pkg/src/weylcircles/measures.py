"""Finite atomic measures, their Stieltjes transforms and Gauss rules."""
from __future__ import annotations

import math
import weakref
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import IndexOutOfRange, PoleAtAtom, RootFindingFailed
from .orthopoly import OrthoSystem


@dataclass(frozen=True)
class DiscreteMeasure:
    """``sum_k w_k delta_{x_k}`` with distinct finite positions and ``w_k > 0``."""

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        atoms = tuple(sorted((float(x), float(w)) for x, w in self.atoms))
        if not atoms:
            raise ValueError("measure needs at least one atom")
        xs = [x for x, _ in atoms]
        if not all(math.isfinite(x) for x in xs):
            raise ValueError("atom positions must be finite")
        if not all(w > 0 and math.isfinite(w) for _, w in atoms):
            raise ValueError("atom weights must be positive")
        if len(set(xs)) != len(xs):
            raise ValueError("atom positions must be distinct")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def from_arrays(cls, positions, weights) -> "DiscreteMeasure":
        return cls(tuple(zip(np.asarray(positions, float), np.asarray(weights, float))))

    @property
    def positions(self) -> np.ndarray:
        return np.array([x for x, _ in self.atoms])

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.atoms])

    @property
    def mass(self) -> float:
        return float(self.weights.sum())

    def to_dict(self) -> dict:
        return {"atoms": [{"x": x, "w": w} for x, w in self.atoms]}

    @classmethod
    def from_dict(cls, d) -> "DiscreteMeasure":
        return cls(tuple((a["x"], a["w"]) for a in d["atoms"]))


@dataclass(frozen=True)
class TransformValue:
    value: complex
    at: complex

    def __complex__(self):
        return self.value


def stieltjes_transform(mu: DiscreteMeasure, z) -> TransformValue:
    """``I(z) = sum_k w_k / (x_k - z)``."""
    z = complex(z)
    diff = mu.positions - z
    if np.any(np.abs(diff) <= 1e-15 * (1 + np.abs(mu.positions))):
        raise PoleAtAtom(f"z = {z} coincides with an atom")
    return TransformValue(complex(np.sum(mu.weights / diff)), z)


def _recurrence_values(sys: OrthoSystem, x, n: int):
    """``P_0(x)..P_n(x)`` and their derivatives via the three-term recurrence."""
    x = np.asarray(x, dtype=float)
    p = [np.full_like(x, 1.0 / math.sqrt(sys.s[0]))]
    dp = [np.zeros_like(x)]
    prev, dprev = np.zeros_like(x), np.zeros_like(x)
    for k in range(n):
        back = sys.a[k - 1] if k > 0 else 0.0
        nxt = ((x - sys.b[k]) * p[k] - back * prev) / sys.a[k]
        dnxt = (p[k] + (x - sys.b[k]) * dp[k] - back * dprev) / sys.a[k]
        prev, dprev = p[k], dp[k]
        p.append(nxt)
        dp.append(dnxt)
    return np.array(p), np.array(dp)


def _bracketed_roots(f, edges: list[float]) -> np.ndarray:
    """One simple root of ``f`` in each interval between consecutive edges."""
    roots = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        flo, fhi = f(lo)[0], f(hi)[0]
        if flo == 0:
            roots.append(lo)
            continue
        if fhi == 0:
            roots.append(hi)
            continue
        if np.sign(flo) == np.sign(fhi):
            raise RootFindingFailed(f"no sign change on [{lo}, {hi}]")
        x = brentq(
            lambda t: f(t)[0], lo, hi,
            xtol=1e-300 + 1e-16 * min(abs(lo), abs(hi)), rtol=4 * np.finfo(float).eps, maxiter=500,
        )
        for _ in range(2):
            val, der = f(x)
            if der == 0:
                break
            step = val / der
            if not lo <= x - step <= hi:
                break
            x -= step
        val, der = f(x)
        if der == 0 or abs(val / der) > 1e-13 * (1 + abs(x)):
            raise RootFindingFailed(f"root residual above tolerance near {x}")
        roots.append(x)
    return np.array(roots)


def _outer_edges(f, inner: np.ndarray, start: float) -> tuple[float, float]:
    """Push bracket ends outward until each holds a sign change."""
    if inner.size == 0:
        lo, hi = -start, start
    else:
        lo, hi = inner[0] - start, inner[-1] + start
    for _ in range(200):
        if inner.size == 0:
            ok_lo = ok_hi = np.sign(f(lo)[0]) != np.sign(f(hi)[0])
        else:
            ok_lo = np.sign(f(lo)[0]) != np.sign(f(inner[0])[0]) or f(inner[0])[0] == 0
            ok_hi = np.sign(f(hi)[0]) != np.sign(f(inner[-1])[0]) or f(inner[-1])[0] == 0
        if ok_lo and ok_hi:
            return lo, hi
        width = max(hi - lo, 1.0)
        if not ok_lo:
            lo -= width
        if not ok_hi:
            hi += width
    raise RootFindingFailed("could not bracket the outer roots")


# nodes depend only on (system, n); canonical measures reuse them per parameter
_NODE_CACHE: "weakref.WeakKeyDictionary[OrthoSystem, dict]" = weakref.WeakKeyDictionary()


def _gauss_nodes(sys: OrthoSystem, n: int) -> np.ndarray:
    cache = _NODE_CACHE.setdefault(sys, {})
    if n not in cache:
        cache[n] = _compute_gauss_nodes(sys, n)
    return cache[n].copy()


def _compute_gauss_nodes(sys: OrthoSystem, n: int) -> np.ndarray:
    # roots of P_k interlace those of P_{k-1}; bracket from the Gershgorin bound
    lo, hi = _jacobi_bound(sys, n)
    pad = 1e-6 * (hi - lo) + 1e-12
    nodes = np.array([])
    for k in range(1, n + 1):

        def f(x, k=k):
            p, dp = _recurrence_values(sys, x, k)
            return p[k], dp[k]

        edges = [lo - pad, *nodes, hi + pad]
        nodes = _bracketed_roots(f, edges)
    return nodes


def _christoffel_weights(sys: OrthoSystem, x: np.ndarray, n: int) -> np.ndarray:
    p, _ = _recurrence_values(sys, x, n)
    return 1.0 / np.sum(p**2, axis=0)


def _jacobi_bound(sys: OrthoSystem, n: int) -> tuple[float, float]:
    # Gershgorin discs of the order-n Jacobi matrix
    a = np.concatenate([[0.0], sys.a[: n - 1], [0.0]])
    b = sys.b[:n]
    radius = a[:-1] + a[1:]
    return float(np.min(b - radius)), float(np.max(b + radius))


def gauss_quadrature(sys: OrthoSystem, n: int) -> DiscreteMeasure:
    """n-point Gauss measure: atoms at the roots of ``P_n``.

    Weights are the Christoffel numbers ``1 / sum_{k<n} P_k(x)^2``; the
    rule reproduces ``s_0..s_{2n-1}``.
    """
    if not 1 <= n <= sys.N:
        raise IndexOutOfRange(f"n must lie in 1..{sys.N}")
    x = _gauss_nodes(sys, n)
    return DiscreteMeasure.from_arrays(x, _christoffel_weights(sys, x, n - 1))


def canonical_measure(sys: OrthoSystem, n: int, t: float) -> DiscreteMeasure:
    """(n+1)-atom measure at the roots of ``P_{n+1} - t P_n``.

    Matches ``s_0..s_{2n}`` for every real ``t``; ``t = inf`` gives the
    n-point Gauss measure. Its transform is the boundary point of the
    order-n Hamburger disk with parameter ``t``.
    """
    if math.isinf(t):
        return gauss_quadrature(sys, n)
    if not 0 <= n < sys.N:
        raise IndexOutOfRange(f"n must lie in 0..{sys.N - 1}")

    def f(x):
        p, dp = _recurrence_values(sys, x, n + 1)
        return p[n + 1] - t * p[n], dp[n + 1] - t * dp[n]

    inner = _gauss_nodes(sys, n) if n > 0 else np.array([])
    lo, hi = _jacobi_bound(sys, n + 1)
    start = max(hi - lo, 1.0)
    lo, hi = _outer_edges(f, inner, start)
    x = _bracketed_roots(f, [lo, *inner, hi])
    return DiscreteMeasure.from_arrays(x, _christoffel_weights(sys, x, n))


def mix(mu1: DiscreteMeasure, mu2: DiscreteMeasure, lam: float) -> DiscreteMeasure:
    """Convex combination ``lam * mu1 + (1 - lam) * mu2``."""
    if not 0 <= lam <= 1:
        raise ValueError("lam must lie in [0, 1]")
    if lam == 0:
        return mu2
    if lam == 1:
        return mu1
    merged: dict[float, float] = {}
    for x, w in mu1.atoms:
        merged[x] = merged.get(x, 0.0) + lam * w
    for x, w in mu2.atoms:
        merged[x] = merged.get(x, 0.0) + (1 - lam) * w
    # a tiny lam can underflow a weight to zero; such an atom carries no mass
    return DiscreteMeasure(tuple((x, w) for x, w in merged.items() if w > 0))
