"""Newton identities as executable rewrites.

The weighted Newton identity lets a power sum trade p units of one
column's exponent for elementary symmetric factors of that column.  The
signs alternate; the build checks every rewrite by full expansion, and
the unsigned variant demonstrably fails at p = 3.
"""

from multisym import (
    check_newton_tilde, format_tuple, newton_rewrite, power_sum,
    power_to_elementary_one_column,
)
from multisym.operators import expand_newton_terms, newton_terms

print("== integer-level calibration ==")
for p in (2, 3, 5):
    print(f"weighted Newton identity verified over Z for p={p}:",
          check_newton_tilde(p))

print()
print("== rewriting a power sum, with self-check ==")
p = 3
terms = newton_rewrite((3, 3), 2, p)
print("M(3,3) =")
for coeff, gen, mt in terms:
    print(f"   + {coeff} * E{format_tuple(gen)} * M{format_tuple(mt)}")

print()
print("== the sign matters ==")
unsigned = newton_terms((3,), 1, p, signed=False)
print("unsigned expansion == M(3)?",
      expand_newton_terms(unsigned, p, 1) == power_sum((3,), p, 1))
signed = newton_terms((3,), 1, p, signed=True)
print("signed expansion   == M(3)?",
      expand_newton_terms(signed, p, 1) == power_sum((3,), p, 1))

print()
print("== one-column power sums in elementary terms ==")
for p, m in ((2, 2), (3, 3), (3, 5)):
    frag = power_to_elementary_one_column(m, 1, p)
    pretty = " + ".join(
        f"{c}*" + "*".join(f"E{format_tuple(b)}" for b in fs)
        for c, fs in frag
    )
    print(f"p={p}: M({m}) = {pretty}")
