"""
Mesh and logarithmic mesh
=========================

Exact enclosures of the minimal root gap and of the minimal ratio of
consecutive root magnitudes.
"""

from fractions import Fraction

from hypmesh import Poly
from hypmesh.mesh import lmesh_enclosure, lmesh_exceeds, mesh_enclosure, mesh_exceeds
from hypmesh.preservers import DiffOpConst

# x(x-1) has its two roots one apart, so the enclosure collapses to a point
p = Poly.from_roots([0, 1])
print("M(p) =", mesh_enclosure(p))

# applying 1 - D moves the roots to (3 -+ sqrt 5)/2, so the gap becomes sqrt 5
q = DiffOpConst(Poly([1, -1]))(p)
e = mesh_enclosure(q, Fraction(1, 10**12))
print("M((1 - D)p) in", [float(e.lo), float(e.hi)], "width", float(e.width))

# decisions come from interlacing of p(x) and p(x + mu), no floating point involved
print("M((1 - D)p) > 2.236?", mesh_exceeds(q, Fraction(2236, 1000)))
print("M((1 - D)p) > 2.237?", mesh_exceeds(q, Fraction(2237, 1000)))

# same-sign roots: the logarithmic mesh compares |x_{j+1}| / |x_j|
r = Poly.from_roots([-1, -2, -4])
print("lmesh((x+1)(x+2)(x+4)) =", lmesh_enclosure(r))
print("lmesh > 3/2?", lmesh_exceeds(r, Fraction(3, 2)), " lmesh > 3?", lmesh_exceeds(r, 3))

# a double root pins both quantities at their minimum
d = Poly.from_roots([-1, -1, -3])
print("double root:", mesh_enclosure(d), lmesh_enclosure(d))
