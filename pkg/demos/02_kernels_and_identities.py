"""
Nevanlinna kernels and their identities
=======================================

The four kernels A_n, B_n, C_n, D_n are polynomial in two complex
variables. They can be evaluated as sums over the orthonormal system or
as two-by-two determinants of P_n, P_{n+1}, Q_n, Q_{n+1}; both forms
satisfy nine algebraic relations that the library checks numerically.
"""
import numpy as np

from weylcircles import (
    RELATION_IDS,
    KernelKind,
    all_kernels,
    classical_moments,
    double_det,
    kernel,
    kernel_det,
    orthonormal_system,
    random_quadruples,
    relation_residuals,
)

sys = orthonormal_system(classical_moments("gaussian", 21), 10)

# Hand-checkable values at n = 1: C_1(i, -i) = 3 and D_1(i, -i) = 4i.
k = all_kernels(sys, 1, 1j, -1j)
print("A, B, C, D at (i, -i):", k.A, k.B, k.C, k.D)

# Sum form against determinant form at a random pair of points.
z, w = 0.3 + 0.8j, -1.1 + 0.2j
for kind in KernelKind:
    print(kind.value, "sum:", kernel(sys, kind, 5, z, w), " det:", kernel_det(sys, kind, 5, z, w))

# The nine relations at 100 random quadruples: worst relative residual.
rng = np.random.default_rng(1)
report = relation_residuals(sys, 6, random_quadruples(rng, 100))
for rid in RELATION_IDS:
    print(f"relation {rid:>4}: {report.residuals[rid]:.2e}")

# The determinant identity behind the relations, on random entries.
lhs, rhs = double_det(*(rng.normal(size=8) + 1j * rng.normal(size=8)))
print("double determinant identity:", abs(lhs - rhs))
