"""Nevanlinna kernels A_n, B_n, C_n, D_n and their determinant identities."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

import numpy as np

from .errors import IndexOutOfRange
from .orthopoly import OrthoSystem, eval_all


class KernelKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class Kernels(NamedTuple):
    A: complex
    B: complex
    C: complex
    D: complex


def _check_order(sys: OrthoSystem, n: int, extra: int = 0):
    if not 0 <= n or n + extra > sys.N:
        raise IndexOutOfRange(f"order {n} (+{extra}) outside 0..{sys.N}")


def all_kernels(sys: OrthoSystem, n: int, z, w) -> Kernels:
    """Sum-form values of all four kernels at ``(z, w)``."""
    _check_order(sys, n)
    pz, qz = eval_all(sys, z, n)
    pw, qw = eval_all(sys, w, n)
    d = z - w
    return Kernels(
        complex(d * np.sum(qz * qw)),
        complex(-1 + d * np.sum(pz * qw)),
        complex(1 + d * np.sum(qz * pw)),
        complex(d * np.sum(pz * pw)),
    )


def kernel(sys: OrthoSystem, kind, n: int, z, w) -> complex:
    """Sum form of one kernel, e.g. ``D_n(z, w) = (z-w) sum P_k(z) P_k(w)``."""
    return getattr(all_kernels(sys, n, z, w), KernelKind(kind).value)


def kernel_det(sys: OrthoSystem, kind, n: int, z, w) -> complex:
    """Determinant form ``a_n * det[[X_{n+1}(z), X_n(z)], [Y_{n+1}(w), Y_n(w)]]``.

    Needs polynomials up to degree ``n+1``.
    """
    kind = KernelKind(kind)
    _check_order(sys, n, extra=1)
    pz, qz = eval_all(sys, z, n + 1)
    pw, qw = eval_all(sys, w, n + 1)
    left = qz if kind in (KernelKind.A, KernelKind.C) else pz
    right = qw if kind in (KernelKind.A, KernelKind.B) else pw
    return complex(sys.a[n] * (left[n + 1] * right[n] - left[n] * right[n + 1]))


def kernel_convergence(sys: OrthoSystem, kind, n: int, z, w) -> float:
    """``|K_n - K_{n-1}|``, the monitor standing in for the n -> oo limit."""
    if n < 1:
        raise IndexOutOfRange("convergence monitor needs n >= 1")
    return abs(kernel(sys, kind, n, z, w) - kernel(sys, kind, n - 1, z, w))


RELATION_IDS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")


def _det(a, b, c, d):
    return a * d - b * c


def _det_relation(a, b, c, d, rhs):
    return a * d - b * c, rhs, abs(a * d) + abs(b * c)


def relation_sides(sys: OrthoSystem, n: int, z1, z2, z3, z4) -> dict[str, tuple[complex, complex]]:
    """Left and right hand sides of the nine kernel relations."""
    return {rid: (lhs, rhs) for rid, (lhs, rhs, _) in _relation_terms(sys, n, z1, z2, z3, z4).items()}


def _relation_terms(sys: OrthoSystem, n: int, z1, z2, z3, z4) -> dict[str, tuple[complex, complex, float]]:
    # (lhs, rhs, size of the terms that cancel); the determinant sides
    # subtract two products that can dwarf the result
    k = {}
    for i, u in enumerate((z1, z2, z3, z4), start=1):
        for j, v in enumerate((z1, z2, z3, z4), start=1):
            k[i, j] = all_kernels(sys, n, u, v)
    A = {ij: v.A for ij, v in k.items()}
    B = {ij: v.B for ij, v in k.items()}
    C = {ij: v.C for ij, v in k.items()}
    D = {ij: v.D for ij, v in k.items()}
    return {
        "i": (A[1, 2], -A[2, 1], 0.0),
        "ii": (B[1, 2], -C[2, 1], 0.0),
        "iii": (D[1, 2], -D[2, 1], 0.0),
        "iv": _det_relation(A[1, 2], C[1, 4], B[3, 2], D[3, 4], C[1, 3] * C[2, 4]),
        "v": _det_relation(A[1, 2], A[1, 4], A[3, 2], A[3, 4], A[1, 3] * A[2, 4]),
        "vi": _det_relation(A[1, 2], C[1, 4], A[3, 2], C[3, 4], A[1, 3] * C[2, 4]),
        "vii": _det_relation(B[1, 2], B[1, 4], B[3, 2], B[3, 4], D[1, 3] * A[2, 4]),
        "viii": _det_relation(B[1, 2], D[1, 4], B[3, 2], D[3, 4], D[1, 3] * C[2, 4]),
        "ix": _det_relation(D[1, 2], D[1, 4], D[3, 2], D[3, 4], D[1, 3] * D[2, 4]),
    }


@dataclass(frozen=True)
class RelationReport:
    residuals: dict
    worst_inputs: dict

    def max_residual(self) -> float:
        return max(self.residuals.values())

    def to_json(self) -> list[dict]:
        return [
            {
                "relation": rid,
                "max_residual": self.residuals[rid],
                "worst_input": [[c.real, c.imag] for c in self.worst_inputs[rid]],
            }
            for rid in RELATION_IDS
        ]


def relation_residuals(sys: OrthoSystem, n: int, quadruples: Iterable) -> RelationReport:
    """Worst relative residual of each relation.

    The residual is ``|L - R| / (1 + |R| + T)``, where ``T`` is
    ``|a d| + |b c|`` for a determinant side ``a d - b c`` and zero
    otherwise, so that cancellation inside the determinant is measured
    against the size of what cancels.
    """
    _check_order(sys, n)
    res = {rid: 0.0 for rid in RELATION_IDS}
    worst = {rid: None for rid in RELATION_IDS}
    for quad in quadruples:
        quad = tuple(complex(v) for v in quad)
        for rid, (lhs, rhs, terms) in _relation_terms(sys, n, *quad).items():
            r = abs(lhs - rhs) / (1 + abs(rhs) + terms)
            if worst[rid] is None or r > res[rid]:
                res[rid] = r
                worst[rid] = quad
    return RelationReport(res, worst)


def random_quadruples(rng: np.random.Generator, count: int, box: float = 2.0) -> list[tuple]:
    """Complex quadruples uniform in ``|Re|, |Im| <= box``."""
    pts = rng.uniform(-box, box, size=(count, 4)) + 1j * rng.uniform(-box, box, size=(count, 4))
    return [tuple(row) for row in pts]


def double_det(a, b, c, d, alpha, beta, gamma, delta) -> tuple[complex, complex]:
    """Both sides of the 2x2-of-2x2 determinant identity."""
    lhs = _det(
        _det(a, b, c, d), _det(a, b, gamma, delta),
        _det(alpha, beta, c, d), _det(alpha, beta, gamma, delta),
    )
    rhs = _det(a, b, alpha, beta) * _det(c, d, gamma, delta)
    return lhs, rhs
