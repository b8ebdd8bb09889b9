"""Orthonormal polynomials of the first and second kind from moments."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as npoly
from scipy.linalg import solve_triangular

from .errors import (
    IllConditioned,
    IndexOutOfRange,
    InsufficientMoments,
    NotPositiveDefinite,
    PoleAtZ,
)
from .moments import PIVOT_TOL, MomentSequence, _hankel, hankel_pivots

MAX_ORDER = 20
COND_LIMIT = 1e10


@dataclass(frozen=True, eq=False)
class OrthoSystem:
    """Orthonormal system ``P_0..P_N``, ``Q_0..Q_N`` of a moment sequence.

    ``a[k]`` and ``b[k]`` are the recurrence coefficients in
    ``x P_k = a_k P_{k+1} + b_k P_k + a_{k-1} P_{k-1}`` for ``k < N``.
    ``condition`` is the pivot ratio of the equilibrated Hankel matrix.
    """

    s: MomentSequence
    P: tuple[Polynomial, ...]
    Q: tuple[Polynomial, ...]
    a: np.ndarray
    b: np.ndarray
    condition: float

    @property
    def N(self) -> int:
        return len(self.P) - 1

    def coefficient_table(self) -> dict:
        return {
            "P": [p.coef.tolist() for p in self.P],
            "Q": [q.coef.tolist() for q in self.Q],
            "a": self.a.tolist(),
            "b": self.b.tolist(),
        }


def _second_kind(c: np.ndarray, s: np.ndarray) -> np.ndarray:
    # L_x[(P(z) - P(x)) / (z - x)] with (z^j - x^j)/(z - x) = sum_i z^i x^(j-1-i)
    k = len(c) - 1
    q = np.zeros(max(k, 1))
    for i in range(k):
        q[i] = sum(c[j] * s[j - 1 - i] for j in range(i + 1, k + 1))
    return q


def orthonormal_system(
    s: MomentSequence, n: int, max_order: int = MAX_ORDER, cond_limit: float = COND_LIMIT
) -> OrthoSystem:
    """Build ``P_0..P_n`` and ``Q_0..Q_n`` from ``s_0..s_{2n}``.

    The polynomial coefficients are the rows of the inverse Cholesky
    factor of the Hankel matrix ``H_n``. Raises
    :class:`NotPositiveDefinite` with the failing order, or
    :class:`IllConditioned` when ``n`` exceeds ``max_order`` or the pivot
    ratio exceeds ``cond_limit``.
    """
    if n < 0:
        raise IndexOutOfRange("order must be nonnegative")
    if 2 * n > s.m:
        raise InsufficientMoments(f"order {n} needs s_0..s_{2 * n}, have s_0..s_{s.m}")
    if n > max_order:
        raise IllConditioned(f"order {n} exceeds the cap {max_order}")
    arr = s.as_array()
    H = _hankel(arr, n)
    piv = hankel_pivots(H)
    if len(piv) < n + 1 or piv[-1] < PIVOT_TOL:
        raise NotPositiveDefinite(len(piv) - 1)
    cond = float(piv.max() / piv.min())
    if cond > cond_limit:
        raise IllConditioned(f"pivot ratio {cond:.3g} exceeds {cond_limit:.3g}")

    d = np.sqrt(np.diagonal(H))
    L = np.linalg.cholesky(H / np.outer(d, d))
    C = solve_triangular(L, np.eye(n + 1), lower=True) / d[None, :]

    P = tuple(Polynomial(C[k, : k + 1]) for k in range(n + 1))
    Q = tuple(Polynomial(_second_kind(C[k, : k + 1], arr)) for k in range(n + 1))
    lead = np.diagonal(C)
    sub = np.array([C[k, k - 1] if k > 0 else 0.0 for k in range(n + 1)])
    a = lead[:-1] / lead[1:]
    b = (sub[:-1] - a * sub[1:]) / lead[:-1]
    return OrthoSystem(s, P, Q, a, b, cond)


def second_kind_by_recurrence(sys: OrthoSystem) -> tuple[Polynomial, ...]:
    """Propagate ``Q_k`` through the three-term recurrence.

    Starts from ``Q_0 = 0`` and the directly computed ``Q_1``. Used only
    as a cross-check on the divided-difference construction.
    """
    if sys.N == 0:
        return (Polynomial([0.0]),)
    x = Polynomial([0.0, 1.0])
    out = [Polynomial([0.0]), sys.Q[1]]
    for k in range(1, sys.N):
        nxt = ((x - sys.b[k]) * out[k] - sys.a[k - 1] * out[k - 1]) / sys.a[k]
        out.append(nxt)
    return tuple(out)


def eval_poly(sys: OrthoSystem, kind: str, k: int, z):
    """Evaluate ``P_k`` (``kind="first"``) or ``Q_k`` (``"second"``) at ``z``."""
    if not 0 <= k <= sys.N:
        raise IndexOutOfRange(f"index {k} outside 0..{sys.N}")
    if kind == "first":
        coef = sys.P[k].coef
    elif kind == "second":
        coef = sys.Q[k].coef
    else:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    return npoly.polyval(z, coef)


def eval_all(sys: OrthoSystem, z, n: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Values ``P_0(z)..P_n(z)`` and ``Q_0(z)..Q_n(z)`` as complex arrays."""
    n = sys.N if n is None else n
    if not 0 <= n <= sys.N:
        raise IndexOutOfRange(f"order {n} outside 0..{sys.N}")
    p = np.array([npoly.polyval(z, sys.P[k].coef) for k in range(n + 1)], dtype=complex)
    q = np.array([npoly.polyval(z, sys.Q[k].coef) for k in range(n + 1)], dtype=complex)
    return p, q


def truncated_t(sys: OrthoSystem, n: int, z) -> complex:
    """Finite-order Friedrichs scalar ``-Q_n(z) / P_n(z)``."""
    p = eval_poly(sys, "first", n, z)
    q = eval_poly(sys, "second", n, z)
    scale = npoly.polyval(abs(z), np.abs(sys.P[n].coef))
    if abs(p) <= 1e-14 * scale:
        raise PoleAtZ(f"P_{n} vanishes at {z}")
    return -q / p
