"""Row-permutation invariants: orbit sums, power sums, elementary
multisymmetric polynomials, and the divided-power / shuffle calculus.

The symmetric group on rows acts on the variable matrix by permuting rows;
the invariant subring is the ring of multisymmetric polynomials.  Working
elements:

* orbit sum T_m:   sum of the distinct monomials in the row orbit of m.
* power sum M_alpha:   sum over rows r of prod_c x[r,c]^alpha_c.
* elementary E_alpha (|alpha| <= p):   sum over choices of pairwise
  disjoint row subsets B_c with |B_c| = alpha_c of prod_c prod_{r in B_c}
  x[r,c]; for alpha = i*e_j this is the i-th elementary symmetric
  polynomial of column j.

Symmetric tensors of degree d are represented concretely as
row-permutation-invariant polynomials in a d-row matrix; gamma(d, s) is
the product of d row copies of a one-row polynomial s, and the shuffle
product of tensors of degrees d and e distributes their rows over the
d+e available slots in all order-preserving ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .exptuples import ExpTuple, degree as tdeg, exp_tuple, length as tlen
from .poly import Monomial, Poly

# Symmetric tensors beyond this degree margin over p are out of scope.
TENSOR_DEGREE_MARGIN = 4


_ROW_MAPS: dict[int, list[dict[int, int]]] = {}
_ORBIT_MIN_CACHE: dict[tuple, Monomial] = {}


def _row_maps(nrows: int) -> list[dict[int, int]]:
    maps = _ROW_MAPS.get(nrows)
    if maps is None:
        maps = [
            {i + 1: perm[i] for i in range(nrows)}
            for perm in permutations(range(1, nrows + 1))
        ]
        _ROW_MAPS[nrows] = maps
    return maps


def row_orbit(m: Monomial, nrows: int) -> set[Monomial]:
    """Distinct images of m under all row permutations."""
    return {m.map_rows(mapping) for mapping in _row_maps(nrows)}


def orbit_sum(m: Monomial, p: int, nrows: int | None = None) -> Poly:
    """Sum of the distinct monomials in the row orbit of m, coefficient 1."""
    rows = p if nrows is None else nrows
    if m.max_row > rows:
        raise ValueError(f"monomial {m} does not fit in {rows} rows")
    return Poly(p, rows, {mm: 1 for mm in row_orbit(m, rows)})


def orbit_min(m: Monomial, nrows: int, width: int = 0) -> Monomial:
    """Canonical orbit representative: graded-lex minimum over row moves.

    The winner does not depend on the padding width (the position order
    (r,c) is what matters), so results are cached per (monomial, nrows).
    """
    key = (m.exps, nrows)
    rep = _ORBIT_MIN_CACHE.get(key)
    if rep is None:
        w = max(width, m.max_col, 1)
        rep = min(row_orbit(m, nrows), key=lambda mm: mm.sort_key(nrows, w))
        _ORBIT_MIN_CACHE[key] = rep
    return rep


def row_monomial(alpha: ExpTuple, r: int) -> Monomial:
    """The monomial prod_c x[r,c]^alpha_c living in row r."""
    return Monomial.of((r, c + 1, e) for c, e in enumerate(alpha) if e)


def power_sum(alpha, p: int, width: int) -> Poly:
    """M_alpha = sum over rows r of prod_c x[r,c]^alpha_c.

    Homogeneous of degree |alpha|.  The zero tuple gives p copies of 1,
    which vanish in characteristic p.
    """
    alpha = exp_tuple(alpha)
    if tlen(alpha) > width:
        raise ValueError(
            f"tuple {alpha} has length {tlen(alpha)} > width {width}"
        )
    terms: dict[Monomial, int] = {}
    for r in range(1, p + 1):
        m = row_monomial(alpha, r)
        terms[m] = terms.get(m, 0) + 1
    return Poly(p, p, terms)


def elementary(alpha, p: int, width: int) -> Poly:
    """E_alpha for |alpha| <= p: the orbit sum of the block monomial that
    stacks alpha_c distinct rows with exponent 1 in each column c."""
    alpha = exp_tuple(alpha)
    if tdeg(alpha) > p:
        raise ValueError(f"|{alpha}| = {tdeg(alpha)} exceeds p = {p}")
    if tlen(alpha) > width:
        raise ValueError(
            f"tuple {alpha} has length {tlen(alpha)} > width {width}"
        )
    if not alpha:
        return Poly.one(p, p)
    pairs = []
    row = 1
    for c, e in enumerate(alpha, start=1):
        for _ in range(e):
            pairs.append((row, c, 1))
            row += 1
    return orbit_sum(Monomial.of(pairs), p)


def elementary_column(i: int, col: int, p: int, width: int | None = None) -> Poly:
    """The i-th elementary symmetric polynomial in the variables of one column."""
    if not (0 <= i <= p):
        raise ValueError(f"elementary index {i} out of range 0..{p}")
    w = width if width is not None else col
    return elementary((0,) * (col - 1) + (i,) if i else (), p, w)


def is_invariant(f: Poly) -> bool:
    """True iff f is fixed by every adjacent row transposition."""
    for i in range(1, f.nrows):
        if f.swap_rows(i, i + 1) != f:
            return False
    return True


@dataclass(frozen=True, eq=False)
class SymTensor:
    """A degree-d symmetric tensor, stored as a row-invariant polynomial in
    a d-row matrix.  Degree-0 tensors are scalars (0-row polynomials)."""

    degree: int
    width: int
    body: Poly

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("tensor degree must be >= 0")
        if self.body.nrows != self.degree:
            raise ValueError(
                f"body has {self.body.nrows} rows, expected {self.degree}"
            )
        if self.body.max_col > self.width:
            raise ValueError("body uses columns beyond the declared width")
        if not is_invariant(self.body):
            raise ValueError("tensor body is not row-permutation invariant")

    @property
    def char(self) -> int:
        return self.body.char

    def __add__(self, other: "SymTensor") -> "SymTensor":
        if self.degree != other.degree:
            raise ValueError("cannot add tensors of different degrees")
        return SymTensor(self.degree, max(self.width, other.width),
                         self.body + other.body)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.degree == other.degree and self.body == other.body

    def scale(self, k: int) -> "SymTensor":
        return SymTensor(self.degree, self.width, self.body.scale(k))


def _check_tensor_degree(d: int, p: int) -> None:
    if d > p + TENSOR_DEGREE_MARGIN:
        raise ValueError(
            f"tensor degree {d} exceeds the supported cap p+{TENSOR_DEGREE_MARGIN}"
        )


def gamma(d: int, s: Poly, width: int | None = None) -> SymTensor:
    """The d-th divided power of a one-row polynomial: d tensor copies of s,
    concretely the product of s written in rows 1..d."""
    if d < 0:
        raise ValueError("divided-power degree must be >= 0")
    if s.nrows > 1:
        raise ValueError("gamma expects a polynomial in a single row")
    _check_tensor_degree(d, s.char)
    w = width if width is not None else max(s.max_col, 1)
    if d == 0:
        return SymTensor(0, w, Poly.one(s.char, 0))
    body = Poly.one(s.char, d)
    for r in range(1, d + 1):
        copy = Poly(s.char, d, dict(s.map_rows({1: r}).terms))
        body = body * copy
    return SymTensor(d, w, body)


def shuffle(x: SymTensor, y: SymTensor) -> SymTensor:
    """Shuffle product: distribute the rows of x and y over d+e slots in all
    ways that keep each factor's internal row order, then add everything up.
    Coinciding results merge modulo p, which is where binomial coefficients
    mod p enter."""
    if x.char != y.char:
        raise ValueError("prime mismatch in shuffle")
    if x.width != y.width:
        raise ValueError(
            f"width mismatch in shuffle: {x.width} vs {y.width}"
        )
    d, e = x.degree, y.degree
    _check_tensor_degree(d + e, x.char)
    p = x.char
    total = Poly.zero(p, d + e)
    for slots in combinations(range(1, d + e + 1), d):
        rest = [k for k in range(1, d + e + 1) if k not in slots]
        xmap = {i + 1: slots[i] for i in range(d)}
        ymap = {i + 1: rest[i] for i in range(e)}
        xb = Poly(p, d + e, dict(x.body.map_rows(xmap).terms))
        yb = Poly(p, d + e, dict(y.body.map_rows(ymap).terms))
        total = total + xb * yb
    return SymTensor(d + e, x.width, total)
