"""
Weyl disks of the Hamburger problem
===================================

For a point z in the upper half-plane, the values I(z) of the Stieltjes
transforms of all measures matching s_0..s_{2n} fill a closed disk. The
disks are nested; they shrink to a point when the problem is determinate
(Gaussian) and to a disk of positive radius when it is indeterminate
(lognormal).
"""
from weylcircles import (
    canonical_measure,
    classical_moments,
    gauss_quadrature,
    hamburger_disk,
    mix,
    orthonormal_system,
    stieltjes_transform,
)

gauss = orthonormal_system(classical_moments("gaussian", 21), 10)
logn = orthonormal_system(classical_moments("lognormal", 37), 18)

print(" n   Gaussian r_n(i)   lognormal r_n(i)")
for n in range(1, 11):
    print(f"{n:2d}   {hamburger_disk(gauss, n, 1j).radius:.6f}         "
          f"{hamburger_disk(logn, n, 1j).radius:.6f}")
print("lognormal at the certified order 18:", hamburger_disk(logn, 18, 1j).radius)

# Boundary points are transforms of the canonical (n+1)-atom measures.
disk = hamburger_disk(gauss, 2, 1j)
print("disk at n = 2:", disk)
for t in (-1.0, 0.0, 2.5):
    mu = canonical_measure(gauss, 2, t)
    w = stieltjes_transform(mu, 1j).value
    print(f"t = {t:4}: atoms {mu.positions.round(4)}, |w - m| - r = {abs(w - disk.center) - disk.radius:.1e}")

# Mixtures of solutions are solutions, and land inside the disk.
mu = mix(canonical_measure(gauss, 2, -1.0), gauss_quadrature(gauss, 2), 0.3)
w = stieltjes_transform(mu, 1j).value
print("mixture inside:", disk.contains(w), " distance to center", abs(w - disk.center))
