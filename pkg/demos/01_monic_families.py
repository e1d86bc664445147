#!/usr/bin/env python3
"""Walkthrough: build a matrix-valued Laguerre family and inspect its data.

The weight on [0, inf) is W(x) = e^{xA} T(x) e^{xA^T} with T(x) =
e^{-x} sum_k delta_k x^{nu+k} E_kk and A strictly lower bidiagonal.  Every
moment, divided by Gamma(nu+1), is a matrix of exact rationals, so the
whole orthogonalization runs in exact arithmetic.
"""

from fractions import Fraction as F

from mvlaguerre import WeightSpec, compute_monic_ops, inner_product
from mvlaguerre.engine import verify_orthogonality, verify_three_term

spec = WeightSpec(N=2, nu=F(1, 2), a=(F(-1),), delta=(F(1), F(2)))
print("weight:", spec.to_dict())

seq = compute_monic_ops(spec, n_max=5)

print("\nmoment m_0 (normalized by Gamma(nu+1)):")
for row in seq.table[0].rows:
    print("  ", [str(v) for v in row])

print("\nP_2 coefficients (powers of x):")
for k, coeff in enumerate(seq.P[2].coeffs):
    print(f"  x^{k}:", [[str(v) for v in row] for row in coeff.rows])

print("\nsquared norms H_n are positive definite:")
for n, h in enumerate(seq.H):
    print(f"  H_{n} leading minors:", [str(d) for d in h.leading_minors()])

# orthogonality is exact, not approximate: <P_3, P_1> is the zero matrix
gram = inner_product(seq.P[3], seq.P[1], seq.table)
print("\n<P_3, P_1> =", [[str(v) for v in row] for row in gram.rows])

checks = verify_orthogonality(seq) + verify_three_term(seq)
print(f"\n{len(checks)} exact checks, all pass: {all(c['pass'] for c in checks)}")

# the recurrence coefficients B_n, C_n come straight out of the family
print("\nB_1 =", [[str(v) for v in row] for row in seq.B[1].rows])
print("C_1 =", [[str(v) for v in row] for row in seq.C[1].rows])
