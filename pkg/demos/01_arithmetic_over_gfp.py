"""Exact arithmetic in the ring of p x n matrix variables over GF(p).

A polynomial is a sparse map from monomials to residues mod p, kept in
canonical form: no zero coefficients, exponents stored sparsely, terms
ordered graded-lexicographically when printed.
"""

from multisym import Monomial, Poly, frobenius, power_sum

p = 3

print("== building blocks ==")
x11 = Poly.variable(p, p, 1, 1)
x12 = Poly.variable(p, p, 1, 2)
f = x11 * x11 * x12 + x12.scale(2)
print("f =", f.text())
print("total degree:", f.total_degree, "| homogeneous:", f.homogeneous_degree)

print()
print("== characteristic-p cancellation ==")
print("f + f + f =", (f + f + f).text())
print("(x11 + x12)^3 =", ((x11 + x12) ** 3).text(), " (freshman's dream)")

print()
print("== the p-th power map acts termwise ==")
m = power_sum((2, 1), p, 2)
print("M(2,1)      =", m.text())
print("M(2,1)^p    =", frobenius(m).text())
print("equals M(6,3):", frobenius(m) == power_sum((6, 3), p, 2))

print()
print("== canonical serialization ==")
print("text:", m.text())
print("json:", m.to_json_obj()[0])
roundtrip = Poly.from_json_obj(p, p, m.to_json_obj())
print("roundtrip equal:", roundtrip == m)
