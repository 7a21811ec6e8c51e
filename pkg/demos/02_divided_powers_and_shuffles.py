"""Symmetric tensors as row-invariant polynomials.

gamma(d, s) places d copies of a one-row polynomial s in d separate rows;
the shuffle product of two tensors distributes their rows over the
combined slots.  Merging coincident monomials mod p is what makes the
divided-power calculus characteristic-sensitive.
"""

from math import comb

from multisym import Poly, elementary, gamma, power_sum, shuffle

p = 3
x1 = Poly.variable(p, 1, 1, 1)
x2 = Poly.variable(p, 1, 1, 2)

print("== divided powers are stacked copies ==")
print("gamma(2, x1):", gamma(2, x1, width=2).body.text())

print()
print("== the three governing identities ==")
lam = 2
print("gamma(3, 2*x1) == 2^3 * gamma(3, x1):",
      gamma(3, x1.scale(lam), width=1) == gamma(3, x1, width=1).scale(pow(lam, 3, p)))

lhs = gamma(2, x1 + x2, width=2)
rhs = (shuffle(gamma(2, x1, width=2), gamma(0, x2, width=2))
       + shuffle(gamma(1, x1, width=2), gamma(1, x2, width=2))
       + shuffle(gamma(0, x1, width=2), gamma(2, x2, width=2)))
print("additivity across shuffles:", lhs == rhs)

d, e = 1, 2
merged = shuffle(gamma(d, x1, width=1), gamma(e, x1, width=1))
print(f"gamma({d})(x1) x gamma({e})(x1) == C({d+e},{e}) gamma({d+e})(x1):",
      merged == gamma(d + e, x1, width=1).scale(comb(d + e, e) % p),
      f"   (C(3,2) = 3 = 0 mod {p}, so the product vanishes:",
      merged.body.is_zero, ")")

print()
print("== the named invariants arise as shuffles ==")
mono = Poly(p, 1, {next(iter((x1 * x1 * x2).terms)): 1})
ps = shuffle(gamma(1, mono, width=2), gamma(p - 1, Poly.one(p, 1), width=2))
print("gamma(1)(x1^2 x2) x gamma(2)(1) =", ps.body.text())
print("   equals the power sum M(2,1):", ps.body == power_sum((2, 1), p, 2))

e11 = shuffle(shuffle(gamma(1, x1, width=2), gamma(1, x2, width=2)),
              gamma(p - 2, Poly.one(p, 1), width=2))
print("gamma(1)(x1) x gamma(1)(x2) x gamma(1)(1) =", e11.body.text())
print("   equals the elementary E(1,1):", e11.body == elementary((1, 1), p, 2))
