"""
Moment sequences and orthonormal polynomials
============================================

A finite moment sequence s_0, s_1, ... is the only input the library
needs. Here we generate classical sequences, screen them for Hankel
positivity and build the orthonormal system P_k, Q_k with its
three-term recurrence.
"""
import numpy as np

from weylcircles import (
    SupportSpec,
    apply_functional,
    check_positivity,
    classical_moments,
    eval_poly,
    orthonormal_system,
)

# The standard normal: s_{2k} = (2k-1)!!, odd moments vanish.
s = classical_moments("gaussian", 9)
print("Gaussian moments:", s.values)

# Positivity of the Hankel matrices decides how far the problem is solvable.
rep = check_positivity(s)
print("positive definite up to order", rep.max_pd_order)
print("condition estimates:", np.round(rep.condition_estimates, 3))

# Support constraints are screened through shifted (localized) matrices.
# The Gaussian puts mass everywhere, so [0, oo) fails immediately.
rep = check_positivity(s, SupportSpec.half_line(0.0))
print("shifted test for [0, oo):", rep.shifted_results)

# The orthonormal system: P_2 = (x^2 - 1)/sqrt(2), Q_2 = z/sqrt(2).
sys = orthonormal_system(s, 4)
print("P_2 coefficients:", sys.P[2].coef)
print("Q_2 coefficients:", sys.Q[2].coef)
print("recurrence a_k:", sys.a, " b_k:", sys.b)
print("P_2(i) =", eval_poly(sys, "first", 2, 1j))

# Orthonormality is checked through the moment functional itself.
gram = np.array([[apply_functional(s, sys.P[j] * sys.P[k]) for k in range(5)] for j in range(5)])
print("max |<P_j, P_k> - delta_jk| =", np.abs(gram - np.eye(5)).max())

# The lognormal is the classical indeterminate example. Its moments
# exp(n^2/2) grow so fast that only an equilibrated Hankel matrix keeps
# the construction well conditioned.
ln = classical_moments("lognormal", 37)
sys_ln = orthonormal_system(ln, 18)
print("lognormal certified to order", sys_ln.N, "with condition", round(sys_ln.condition, 3))
