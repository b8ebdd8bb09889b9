"""
Moebius images of the real line
===============================

Every boundary arc in this library is the image of (part of) the
extended real line under a Moebius map. The image is a circle, a line
or a single point, and its center and radius follow from two 2x2
determinants.
"""
import numpy as np

from weylcircles import MoebiusMap, circle_through, image_of_real_line

# w(t) = 1/(t + i) traces the circle with center -i/2 and radius 1/2.
img = image_of_real_line(MoebiusMap(0, 1, 1, 1j))
print(img.variant, img.circle)

# Degenerate cases: a constant map gives a point, real denominators a line.
print(image_of_real_line(MoebiusMap(2, 2, 1, 1)).variant)
print(image_of_real_line(MoebiusMap(1j, 0, 0, 1)).variant)

# Cross-check against a three-point fit on a random map.
rng = np.random.default_rng(3)
m = MoebiusMap(*(rng.normal(size=4) + 1j * rng.normal(size=4)))
c = image_of_real_line(m).circle
fit = circle_through(m(-1.0), m(0.0), m(2.0))
print("closed form:", c)
print("three-point fit:", fit)
ts = np.tan(np.linspace(-1.5, 1.5, 9))
print("max distance from circle:", max(abs(abs(m(t) - c.center) - c.radius) for t in ts))
