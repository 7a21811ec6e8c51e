"""Divided polarization and exponent flattening.

polarize(f, a -> b, i) extracts the coefficient of t^i after substituting
x[r,a] + t*x[r,b] for x[r,a] in every row.  On power sums it moves i
units of column exponent into a fresh column; the transport multiplicity
binom(jp+i, i) is 1 mod p whenever i < p, so a column exponent jp+i
"flattens" to (jp, i) across two columns at no cost.
"""

from multisym import (
    PolarizationOp, flatten_tuple, gl_span, polarize, power_sum,
)

p = 3

print("== moving exponent between columns ==")
M5 = power_sum((5,), p, 2)
moved = polarize(M5, PolarizationOp(1, 2, 2))
print("polarize(M(5), 1->2, 2) =", moved.text())
print("   equals M(3,2):", moved == power_sum((3, 2), p, 2))
print("   the multiplicity C(5,2) = 10 = 1 mod 3 keeps the coefficient 1")

print()
print("== tuple-level flattening mirrors it ==")
print("(5)  ->", flatten_tuple((5,), 1, p))
print("(4)  ->", flatten_tuple((4,), 1, p))
print("(1)  ->", flatten_tuple((1,), 1, p))
print("(5,3) at column 1 shifts the occupied column first ->",
      flatten_tuple((5, 3), 1, p))

print()
print("== closures under the column operators ==")
span = gl_span(power_sum((5,), p, 2), 2)
print("closure of M(5) at width 2 has dimension", span.dim)
print("   contains M(3,2):",
      span.contains(power_sum((3, 2), p, 2)) is not None)
print("   contains M(0,5):",
      span.contains(power_sum((0, 5), p, 2)) is not None)
