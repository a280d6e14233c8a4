"""
Finite multiplier sequences
===========================

A finite sequence is tested through its symbol polynomial; products of
sequences correspond to Schur-Szego products of symbols.
"""

from fractions import Fraction
from math import factorial

from hypmesh.preservers import (
    FiniteMultiplierSeq,
    is_finite_ms,
    polya_schur_partial_check,
    schur_szego,
    sequence_lmesh_upto,
)

print(is_finite_ms([1, Fraction(1, 2), Fraction(1, 6)]))
print(is_finite_ms([1, Fraction(1, 4), 1]))

A = FiniteMultiplierSeq.from_gammas([4, Fraction(5, 2), 1])
B = FiniteMultiplierSeq.from_gammas([9, 5, 1])
AB = A * B
print("A*B valid:", AB.is_valid())
print("symbols agree:", AB.symbol_poly == schur_szego(A.symbol_poly, B.symbol_poly, 2))

# a necessary condition on an infinite sequence, checked up to K
inv_fact = [Fraction(1, factorial(n)) for n in range(9)]
print("1/n!:", polya_schur_partial_check(inv_fact, 8))
print("1, 1, 3:", polya_schur_partial_check([1, 1, 3], 2))

# q^(n^2) with q = 1/2: K = 2 gives 7 + 4 sqrt 3, longer prefixes lower the bound
gauss = [Fraction(1, 2 ** (n * n)) for n in range(7)]
for K in range(2, 7):
    print(K, float(sequence_lmesh_upto(gauss, K).lo))
