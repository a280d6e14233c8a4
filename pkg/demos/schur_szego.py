"""
Schur-Szego composition
=======================

Coefficient-wise product in the binomial basis, and how it treats the
logarithmic mesh of polynomials with same-sign roots.
"""

from hypmesh import Poly
from hypmesh.mesh import lmesh_enclosure
from hypmesh.preservers import schur_szego, theta_op, theta_rep_poly

P = Poly.from_roots([-1, -4])
Q = Poly.from_roots([-1, -9])
S = schur_szego(P, Q, 2)
print("P*Q =", S)

for name, f in (("P", P), ("Q", Q), ("P*Q", S)):
    print(f"lmesh({name}) ~ {float(lmesh_enclosure(f).lo):.6f}")

# (x+1)^k is the identity element
k = 4
unit = Poly.from_roots([-1] * k).with_formal_degree(k)
R = Poly.from_roots([-1, -2, -5, -7])
print("(x+1)^4 * R == R:", schur_szego(unit, R, k) == R)

# composing with (x+1)^(k-1)((1+ak)x+1) acts as 1 + a x d/dx
for a in (0, 1, 3):
    lhs = schur_szego(theta_rep_poly(a, k), R, k)
    print(f"a={a}:", lhs == theta_op(1, a, R), lhs)
