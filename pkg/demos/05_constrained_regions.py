"""
Lens regions for constrained problems
=====================================

Support constraints cut the Weyl disk down to a lens bounded by two
circular arcs: solutions on a half-line [a, oo) (Stieltjes), on an
interval [a, b], or avoiding a gap (a, b). Several gaps intersect
further circles.
"""
import numpy as np

from weylcircles import (
    DiscreteMeasure,
    classical_moments,
    cone_angle,
    contains,
    gap_circles,
    interval_region,
    moments_of,
    multi_gap_region,
    orthonormal_system,
    stieltjes_region,
    stieltjes_transform,
)

gauss = orthonormal_system(classical_moments("gaussian", 21), 10)

# Stieltjes: vertices (24 + 82i)/100 and i, opening angle |arg(1/(a - z))|.
r = stieltjes_region(gauss, 1, 1j, -3.0)
print("stieltjes:", r.vertices, "angle", r.vertex_angle, "sampled violations",
      r.meta["membership_violations"])

# Interval [a, b]: for even m the first circle is the Hamburger disk.
for m in (2, 3, 4):
    r = interval_region(gauss, m, 0.2 + 1j, -4, 4)
    print(f"interval m={m}:", [(complex(round(c.center.real, 4) + 0.0, round(c.center.imag, 4)), round(c.radius, 4)) for c in r.circles])

# A gap: the two-point measure at +-2 avoids (-1, 1).
two = orthonormal_system(classical_moments("two_point", 5, -2, 0.5, 2, 0.5), 1)
r = gap_circles(two, 1, 1j, -1, 1)
print("gap vertices:", r.vertices, " (expected (+-6 + 7i)/17)")
print("cone angle at i:", cone_angle(1j, -1, 1))
print("generating measure inside:", contains(r, 0.2j))

# When s = (1, 0, 1) the problem off (-1, 1) has one solution and the lens
# collapses to the point i/2.
deg = orthonormal_system(classical_moments("two_point", 3, -1, 0.5, 1, 0.5), 1)
print("degenerate:", gap_circles(deg, 1, 1j, -1, 1).degenerate)

# Two gaps: a three-atom measure with no mass in (-2, -1) or (1, 2).
mu = DiscreteMeasure(((-3.0, 0.3), (0.0, 0.4), (3.0, 0.3)))
sys = orthonormal_system(moments_of(mu, 5), 2)
r = multi_gap_region(sys, 1, 0.5 + 1j, [(-2, -1), (1, 2)])
w = stieltjes_transform(mu, 0.5 + 1j).value
print("multi-gap circles:", len(r.circles), " nonempty:", r.meta["nonempty"], " contains:", contains(r, w))
print("cone angles per gap:", np.round([cone_angle(0.5 + 1j, a, b) for a, b in r.meta["gaps"]], 4))
