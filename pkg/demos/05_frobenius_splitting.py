"""The Frobenius splitting on the orbit-sum basis.

Row invariants decompose uniquely over orbit sums T_m.  The splitting
keeps T_m exactly when m is a p-th power (sending it to the orbit sum of
the root) and kills everything else.  It is an additive left inverse of
f -> f^p satisfying the projection rule psi(a^p * b) = a * psi(b).
"""

from multisym import (
    Poly, elementary_column, frobenius, frobenius_split, power_sum,
)

p = 2

print("== basic values ==")
M22 = power_sum((2, 2), p, 2)
print("psi(M(2,2)) =", frobenius_split(M22).text(), " (the square root orbit)")
E2 = elementary_column(p, 1, p)
print("psi(E_2(x1)) =", frobenius_split(E2).text(),
      " (x11*x21 is not a square)")

print()
print("== the axioms in action ==")
a = power_sum((1, 1), p, 2)
b = power_sum((1,), p, 2) * power_sum((0, 1), p, 2)
print("psi(F(a)) == a:", frobenius_split(frobenius(a)) == a)
print("psi(a^p * b) == a * psi(b):",
      frobenius_split(frobenius(a) * b) == a * frobenius_split(b))
print("psi(a + b) == psi(a) + psi(b):",
      frobenius_split(a + b) == frobenius_split(a) + frobenius_split(b))

print()
print("== degree bookkeeping ==")
f = power_sum((4, 2), p, 2)
img = frobenius_split(f)
print("degree 6 input ->", img.text(), "of degree", img.homogeneous_degree)
g = power_sum((1,), p, 1) ** 2 * elementary_column(2, 1, p, 1)
print("psi(M(1)^2 * E_2(x1)) =", frobenius_split(g).text(),
      " (an odd orbit collapses to zero)")
