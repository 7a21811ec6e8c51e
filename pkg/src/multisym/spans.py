"""Graded GF(p) linear algebra over spaces of row invariants.

Every subspace computation here works degree by degree.  Invariant
polynomials are coordinatized over the orbit-sum basis: the coordinate
columns are the canonical (graded-lex minimal) representatives of the row
orbits of monomials, which cuts the ambient dimension by roughly the order
of the row group and keeps pivots canonical.  Echelon forms are reduced,
so span membership is a single pass of back-substitution.

A SpanBasis can optionally track, for every echelon row, its expression
over the raw candidate polynomials that were inserted; this is what lets
membership queries return explicit product combinations.

Dimension caps turn combinatorial blowups into CapExceeded rather than
hangs; the default cap of 20000 coordinate columns is generous for desk
scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import CapExceeded
from .exptuples import ExpTuple, degree as tdeg, exp_tuple, length as tlen, scale
from .invariants import (
    elementary, elementary_column, is_invariant, orbit_min, orbit_sum,
    power_sum, row_orbit,
)
from .operators import polarize_raw
from .poly import Monomial, Poly, grlex_key, iter_monomials

DEFAULT_CAP = 20000


# ---------------------------------------------------------------------------
# Coordinate systems: orbit representatives per degree or column multidegree
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    """All ways to write `total` as an ordered sum of `parts` >= 0 terms."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def iter_multidegree_monomials(nrows: int, coldegs: tuple[int, ...]):
    """Monomials whose column degree vector is exactly `coldegs`."""
    def rec(col: int, acc: list[tuple[int, int, int]]):
        if col == len(coldegs):
            yield Monomial(tuple(sorted(acc)))
            return
        for split in _compositions(coldegs[col], nrows):
            added = [
                (r + 1, col + 1, e) for r, e in enumerate(split) if e
            ]
            yield from rec(col + 1, acc + added)
    yield from rec(0, [])


def orbit_reps(char: int, nrows: int, width: int, deg: int) -> list[Monomial]:
    """Canonical representatives of the row orbits of degree-`deg` monomials."""
    reps = {
        orbit_min(m, nrows, width) for m in iter_monomials(nrows, width, deg)
    }
    return sorted(reps, key=lambda m: grlex_key(m, nrows, max(width, 1)))


def orbit_reps_multidegree(nrows: int, coldegs: tuple[int, ...]) -> list[Monomial]:
    width = max(len(coldegs), 1)
    reps = {
        orbit_min(m, nrows, width)
        for m in iter_multidegree_monomials(nrows, coldegs)
    }
    return sorted(reps, key=lambda m: grlex_key(m, nrows, width))


# ---------------------------------------------------------------------------
# Echelonized spans
# ---------------------------------------------------------------------------

class SpanBasis:
    """A reduced-echelon GF(p) basis of a subspace of one graded piece.

    Rows are stored as coordinate vectors over the orbit-sum basis listed
    in `reps`.  Each row has a pivot column holding 1 that is zero in every
    other row, so reduction against the basis is deterministic and
    idempotent.  With `track=True` the basis also remembers how each row
    decomposes over the inserted candidate polynomials.
    """

    def __init__(self, char: int, nrows: int, deg: int, width: int,
                 reps: list[Monomial] | None = None,
                 cap: int = DEFAULT_CAP, track: bool = False):
        self.char = char
        self.nrows = nrows
        self.degree = deg
        self.width = width
        if reps is None:
            reps = orbit_reps(char, nrows, width, deg)
        if len(reps) > cap:
            raise CapExceeded(
                f"{len(reps)} coordinate columns exceed the cap {cap} "
                f"(degree {deg}, width {width})"
            )
        self.reps = reps
        self.index = {m: i for i, m in enumerate(reps)}
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.track = track
        self.labels: list = []
        self.combos: list[dict[int, int]] = []
        self._orbit_size = {m: len(row_orbit(m, nrows)) for m in reps}

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.reps)

    # -- coordinates ---------------------------------------------------------

    def vector_of(self, f: Poly) -> np.ndarray | None:
        """Orbit-basis coordinates of f, or None when f is not a combination
        of the basis orbit sums (not invariant, or columns out of range).
        Raises on a homogeneous degree mismatch."""
        if f.char != self.char or f.nrows != self.nrows:
            raise ValueError("prime or row-count mismatch with this basis")
        vec = np.zeros(self.ncols, dtype=np.int64)
        if f.is_zero:
            return vec
        if f.homogeneous_degree != self.degree:
            raise ValueError(
                f"degree mismatch: basis is graded in degree {self.degree}"
            )
        coeffs: dict[Monomial, int] = {}
        counts: dict[Monomial, int] = {}
        for m, c in f.terms.items():
            rep = orbit_min(m, self.nrows, self.width)
            if rep not in self.index:
                return None
            if coeffs.setdefault(rep, c) != c:
                return None
            counts[rep] = counts.get(rep, 0) + 1
        for rep, c in coeffs.items():
            if counts[rep] != self._orbit_size[rep]:
                return None
            vec[self.index[rep]] = c
        return vec

    def poly_of(self, vec: np.ndarray) -> Poly:
        total = Poly.zero(self.char, self.nrows)
        for j in np.nonzero(vec)[0]:
            total = total + orbit_sum(self.reps[j], self.char, self.nrows) * int(vec[j])
        return total

    def row_poly(self, idx: int) -> Poly:
        return self.poly_of(self.rows[idx])

    def row_polys(self) -> list[Poly]:
        return [self.row_poly(i) for i in range(self.dim)]

    # -- elimination ---------------------------------------------------------

    def reduce(self, vec: np.ndarray) -> tuple[np.ndarray, dict[int, int]]:
        """Residual of vec modulo the span, plus the row coordinates used."""
        p = self.char
        res = vec % p
        coords: dict[int, int] = {}
        for r, c in enumerate(self.pivots):
            t = int(res[c])
            if t:
                res = (res - t * self.rows[r]) % p
                coords[r] = t
        return res, coords

    def insert_vector(self, vec: np.ndarray, label=None) -> bool:
        """Add a vector to the span; returns True when the span grew."""
        p = self.char
        res, coords = self.reduce(vec)
        nz = np.nonzero(res)[0]
        if nz.size == 0:
            return False
        pivot = int(nz[-1])  # leading monomial: largest in canonical order
        inv = pow(int(res[pivot]), p - 2, p)
        newrow = (res * inv) % p
        if self.track:
            k = len(self.labels)
            self.labels.append(label)
            combo: dict[int, int] = {k: inv % p}
            for r, t in coords.items():
                for cand, cf in self.combos[r].items():
                    combo[cand] = (combo.get(cand, 0) - inv * t * cf) % p
            combo = {cand: cf for cand, cf in combo.items() if cf}
            self.combos.append(combo)
        for r in range(len(self.rows)):
            t = int(self.rows[r][pivot])
            if t:
                self.rows[r] = (self.rows[r] - t * newrow) % p
                if self.track:
                    for cand, cf in self.combos[-1].items():
                        self.combos[r][cand] = (
                            self.combos[r].get(cand, 0) - t * cf
                        ) % p
                    self.combos[r] = {
                        cand: cf for cand, cf in self.combos[r].items() if cf
                    }
        self.rows.append(newrow)
        self.pivots.append(pivot)
        return True

    def insert_poly(self, f: Poly, label=None) -> bool:
        vec = self.vector_of(f)
        if vec is None:
            raise ValueError(
                "candidate is not a combination of this basis's orbit sums"
            )
        return self.insert_vector(vec, label=label)

    # -- membership ----------------------------------------------------------

    def contains_vector(self, vec: np.ndarray) -> dict[int, int] | None:
        res, coords = self.reduce(vec)
        if np.any(res):
            return None
        return coords

    def contains(self, f: Poly) -> dict[int, int] | None:
        """Coordinates of f over the basis rows, or None when f is outside
        the span.  The zero polynomial yields the empty coordinate map."""
        vec = self.vector_of(f)
        if vec is None:
            return None
        return self.contains_vector(vec)

    def contains_combo(self, f: Poly) -> dict[int, int] | None:
        """Like `contains`, but expressed over the inserted candidates
        (requires track=True); keys index into `labels`."""
        if not self.track:
            raise ValueError("this basis was built without tracking")
        coords = self.contains(f)
        if coords is None:
            return None
        combo: dict[int, int] = {}
        p = self.char
        for r, t in coords.items():
            for cand, cf in self.combos[r].items():
                combo[cand] = (combo.get(cand, 0) + t * cf) % p
        return {cand: cf for cand, cf in combo.items() if cf}


# ---------------------------------------------------------------------------
# Standard spans
# ---------------------------------------------------------------------------

def gamma_basis(deg: int, width: int, p: int, cap: int = DEFAULT_CAP) -> SpanBasis:
    """The full invariant space in one degree: one orbit sum per orbit."""
    basis = SpanBasis(p, p, deg, width, cap=cap)
    eye = np.eye(basis.ncols, dtype=np.int64)
    for j in range(basis.ncols):
        basis.rows.append(eye[j])
        basis.pivots.append(j)
    return basis


def p_algebra_generators(width: int, p: int) -> list[ExpTuple]:
    """All elementary-multisymmetric generator tuples at this width:
    nonzero beta with |beta| <= p and support within the first `width`
    columns."""
    gens: set[ExpTuple] = set()
    for d in range(1, p + 1):
        for vec in _compositions(d, width):
            gens.add(exp_tuple(vec))
    return sorted(gens, key=lambda t: (tdeg(t), t))


def _elementary_cached(cache: dict, beta: ExpTuple, p: int, width: int) -> Poly:
    if beta not in cache:
        cache[beta] = elementary(beta, p, width)
    return cache[beta]


def p_algebra_span(deg: int, width: int, p: int, cap: int = DEFAULT_CAP,
                   track: bool = True) -> SpanBasis:
    """Span of all products of elementary multisymmetric generators of
    total degree `deg` at the given width.  Labels (when tracked) are the
    factor multisets, so membership queries can report explicit products."""
    basis = SpanBasis(p, p, deg, width, cap=cap, track=track)
    if deg == 0:
        basis.insert_poly(Poly.one(p, p), label=())
        return basis
    gens = p_algebra_generators(width, p)
    ecache: dict[ExpTuple, Poly] = {}

    def rec(start: int, remaining: int, product: Poly, factors: tuple):
        if remaining == 0:
            basis.insert_poly(product, label=factors)
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            gd = tdeg(g)
            if gd > remaining:
                continue
            rec(idx, remaining - gd,
                product * _elementary_cached(ecache, g, p, width),
                factors + (g,))

    rec(0, deg, Poly.one(p, p), ())
    return basis


def p_multidegree_span(coldegs: tuple[int, ...], p: int,
                       cap: int = DEFAULT_CAP,
                       stop_when_contains: Poly | None = None) -> SpanBasis:
    """Span of generator products whose column degrees sum to exactly
    `coldegs`.  The polarization algebra is graded by column multidegree,
    so membership of a multihomogeneous invariant only ever needs this
    slice.  With `stop_when_contains`, insertion stops as soon as the given
    polynomial reduces to zero against the partial span."""
    width = max(len(coldegs), 1)
    reps = orbit_reps_multidegree(p, coldegs)
    basis = SpanBasis(p, p, sum(coldegs), width, reps=reps, cap=cap, track=True)
    # High-degree generators first: their products have fewer factors, are
    # cheaper to expand, and tend to saturate the slice sooner.
    gens = sorted(
        (g for g in p_algebra_generators(width, p)
         if all(e <= c for e, c in zip(g + (0,) * width, coldegs))),
        key=lambda g: (-tdeg(g), g),
    )
    ecache: dict[ExpTuple, Poly] = {}
    target_vec = None
    if stop_when_contains is not None:
        target_vec = basis.vector_of(stop_when_contains)

    class _Done(Exception):
        pass

    def rec(start: int, remaining: tuple[int, ...], product: Poly, factors: tuple):
        if not any(remaining):
            grew = basis.insert_poly(product, label=factors)
            if grew and target_vec is not None:
                if basis.contains_vector(target_vec) is not None:
                    raise _Done
            if basis.dim == basis.ncols:
                raise _Done  # the slice is already everything it can be
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            padded = g + (0,) * (len(remaining) - len(g))
            if any(e > rem for e, rem in zip(padded, remaining)):
                continue
            rec(idx,
                tuple(rem - e for rem, e in zip(remaining, padded)),
                product * _elementary_cached(ecache, g, p, width),
                factors + (g,))

    try:
        rec(0, tuple(coldegs), Poly.one(p, p), ())
    except _Done:
        pass
    return basis


def in_p_algebra(f: Poly, cap: int = DEFAULT_CAP) -> list[tuple[tuple[int, ...], dict]] | None:
    """Decide membership of an invariant f in the polarization algebra by
    splitting it into column-multidegree components and testing each slice.
    Returns, per component, the column degrees and a combination over
    generator products (label -> coefficient, labels being factor
    multisets); None if any component falls outside."""
    if f.is_zero:
        return []
    if not is_invariant(f):
        return None
    p = f.char
    components: dict[tuple[int, ...], Poly] = {}
    width = max(f.max_col, 1)
    for m, c in f.terms.items():
        key = m.column_degrees(width)
        comp = components.get(key)
        add = Poly(p, f.nrows, {m: c})
        components[key] = add if comp is None else comp + add
    out = []
    for coldegs in sorted(components):
        comp = components[coldegs]
        basis = p_multidegree_span(coldegs, p, cap=cap, stop_when_contains=comp)
        combo = basis.contains_combo(comp)
        if combo is None:
            return None
        out.append(
            (coldegs, {basis.labels[k]: cf for k, cf in combo.items()})
        )
    return out


# ---------------------------------------------------------------------------
# Minimal generators: the quotient by products of positive-degree invariants
# ---------------------------------------------------------------------------

def square_span(deg: int, width: int, p: int, cap: int = DEFAULT_CAP) -> SpanBasis:
    """Degree-`deg` span of all products of two positive-degree invariants."""
    basis = SpanBasis(p, p, deg, width, cap=cap)
    sums: dict[int, list[Poly]] = {}
    for a in range(1, deg // 2 + 1):
        for d in (a, deg - a):
            if d not in sums:
                sums[d] = [
                    orbit_sum(m, p) for m in orbit_reps(p, p, width, d)
                ]
        left, right = sums[a], sums[deg - a]
        if a == deg - a:
            for i, f in enumerate(left):
                for g in right[i:]:
                    basis.insert_poly(f * g)
        else:
            for f in left:
                for g in right:
                    basis.insert_poly(f * g)
    return basis


def bounded_tuples(deg: int, width: int, bound: int) -> list[ExpTuple]:
    """Tuples of total degree `deg`, entries < bound, support in `width`."""
    out = {
        exp_tuple(vec)
        for vec in _compositions(deg, width)
        if all(e < bound for e in vec)
    }
    return sorted(out)


def predicted_generator_polys(deg: int, width: int, p: int) -> list[tuple[str, Poly]]:
    """The expected minimal generators in one degree: power sums over
    tuples with all entries < p, plus the full column products when the
    degree equals p."""
    out = [
        (f"M{alpha}", power_sum(alpha, p, width))
        for alpha in bounded_tuples(deg, width, p)
    ]
    if deg == p:
        for j in range(1, width + 1):
            out.append((f"Ep(x{j})", elementary_column(p, j, p, width)))
    return out


@dataclass
class GradedDimReport:
    """Dimension bookkeeping for one degree of the invariant ring."""

    p: int
    width: int
    degree: int
    dim_gamma: int
    dim_p_algebra: int
    dim_square: int
    dim_quotient: int
    predicted_count: int
    independent: bool
    spanning: bool
    match: bool

    CSV_HEADER = "p,n,degree,dim_gamma,dim_P,dim_square,dim_quotient,predicted_count,match"

    def csv_row(self) -> str:
        return (
            f"{self.p},{self.width},{self.degree},{self.dim_gamma},"
            f"{self.dim_p_algebra},{self.dim_square},{self.dim_quotient},"
            f"{self.predicted_count},{str(self.match).lower()}"
        )


def square_ideal_quotient(deg: int, width: int, p: int,
                          cap: int = DEFAULT_CAP) -> GradedDimReport:
    """Compare the quotient of one degree by products of positive-degree
    invariants against the predicted minimal generator list: the quotient
    dimension must equal the predicted count, and the predicted elements
    must be independent of the products and span the rest of the degree."""
    if deg < 1:
        raise ValueError("the quotient is only graded in positive degrees")
    dim_gamma = len(orbit_reps(p, p, width, deg))
    sq = square_span(deg, width, p, cap=cap)
    dim_square = sq.dim
    predicted = predicted_generator_polys(deg, width, p)
    independent = True
    for _, g in predicted:
        if not sq.insert_poly(g):
            independent = False
    spanning = sq.dim == dim_gamma
    dim_quotient = dim_gamma - dim_square
    dim_p = p_algebra_span(deg, width, p, cap=cap, track=False).dim
    return GradedDimReport(
        p=p, width=width, degree=deg,
        dim_gamma=dim_gamma, dim_p_algebra=dim_p,
        dim_square=dim_square, dim_quotient=dim_quotient,
        predicted_count=len(predicted),
        independent=independent, spanning=spanning,
        match=(dim_quotient == len(predicted)) and independent and spanning,
    )


# ---------------------------------------------------------------------------
# Subrepresentation closures under the column operators
# ---------------------------------------------------------------------------

def _primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    return 1


def column_closure_ops(width: int, p: int, divided_cap: int | None = None):
    """The operator family used to close a span under the column action:
    divided polarizations up to the cap (default p-1), adjacent column
    swaps, and single-column scalings by a multiplicative generator."""
    cap = divided_cap if divided_cap is not None else p - 1
    ops = []
    for a in range(1, width + 1):
        for b in range(1, width + 1):
            if a == b:
                continue
            for i in range(1, cap + 1):
                ops.append(("polarize", a, b, i))
    for c in range(1, width):
        ops.append(("swap", c, c + 1))
    if p > 2:
        g = _primitive_root(p)
        for c in range(1, width + 1):
            ops.append(("scale", c, g))
    return ops


def _apply_op(f: Poly, op) -> Poly:
    kind = op[0]
    if kind == "polarize":
        _, a, b, i = op
        return polarize_raw(f, a, b, i)
    if kind == "swap":
        _, a, b = op
        return f.map_cols({a: b, b: a})
    _, c, lam = op
    return f.scale_column(c, lam)


def _closure_span(seed: Poly, width: int, cap: int, ops) -> SpanBasis:
    deg = seed.homogeneous_degree
    if deg is None:
        raise ValueError("closure needs a homogeneous nonzero seed")
    basis = SpanBasis(seed.char, seed.nrows, deg, width, cap=cap)
    basis.insert_poly(seed)
    frontier = [seed]
    while frontier:
        fresh = []
        for f in frontier:
            for op in ops:
                g = _apply_op(f, op)
                if g.is_zero:
                    continue
                if basis.insert_vector(basis.vector_of(g)):
                    fresh.append(g)
        frontier = fresh
    return basis


def gl_span(f: Poly, width: int, cap: int = DEFAULT_CAP,
            divided_cap: int | None = None) -> SpanBasis:
    """Smallest subspace containing f that is closed under the divided
    polarizations, column permutations, and column scalings at this width.
    This finite operator family is the working proxy for the full column
    group action; `divided_cap` widens the polarization range (the default
    stops below p) for cross-validation purposes."""
    if f.is_zero:
        raise ValueError("gl_span of the zero polynomial is empty")
    ops = column_closure_ops(width, f.char, divided_cap=divided_cap)
    return _closure_span(f, width, cap, ops)


def single_row_closure(f: Poly, width: int, cap: int = DEFAULT_CAP,
                       divided_cap: int | None = None) -> SpanBasis:
    """The same closure computed in the one-row polynomial model."""
    if f.nrows != 1:
        raise ValueError("single-row closure expects a one-row polynomial")
    ops = column_closure_ops(width, f.char, divided_cap=divided_cap)
    return _closure_span(f, width, cap, ops)


def embed_one_row(f: Poly, p: int) -> Poly:
    """Send a one-row polynomial g to sum_r g(row r), the power-sum style
    embedding of single-row polynomials into row invariants."""
    total = Poly.zero(p, p)
    for r in range(1, p + 1):
        total = total + Poly(p, p, dict(f.map_rows({1: r}).terms))
    return total


def spans_equal(a: SpanBasis, b: SpanBasis) -> bool:
    if a.dim != b.dim:
        return False
    return all(
        b.contains(a.row_poly(i)) is not None for i in range(a.dim)
    )


# ---------------------------------------------------------------------------
# Truncations of the ideal generated by p-th powers of power sums
# ---------------------------------------------------------------------------

def _partition_tuples(total_max: int, width: int) -> list[ExpTuple]:
    """Nonzero tuples with weakly decreasing entries, |alpha| <= total_max,
    support within `width` columns; column permutations reach the rest."""
    out = []
    for d in range(1, total_max + 1):
        for vec in _compositions(d, width):
            if all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1)):
                t = exp_tuple(vec)
                if t:
                    out.append(t)
    return sorted(set(out))


def ideal_truncation_span(gen_degree: int, deg: int, width: int, p: int,
                          include_generators: bool = True,
                          cap: int = DEFAULT_CAP) -> SpanBasis:
    """Degree-`deg` slice of the ideal inside the polarization algebra
    generated by the column-closure spans of M_alpha^p over all nonzero
    |alpha| <= gen_degree.

    The slice is spanned by products (closure element) * (generator-algebra
    element of complementary positive degree); with `include_generators`
    the closure elements themselves are added when their degree is exactly
    `deg` (cofactor 1), which only matters at the generator degrees.
    """
    basis = SpanBasis(p, p, deg, width, cap=cap)
    pspan_cache: dict[int, SpanBasis] = {}
    for alpha in _partition_tuples(gen_degree, width):
        gdeg = p * tdeg(alpha)
        if gdeg > deg:
            continue
        closure = gl_span(power_sum(scale(alpha, p), p, width), width, cap=cap)
        cof_deg = deg - gdeg
        if cof_deg == 0:
            if include_generators:
                for g in closure.row_polys():
                    basis.insert_poly(g)
            continue
        if cof_deg not in pspan_cache:
            pspan_cache[cof_deg] = p_algebra_span(
                cof_deg, width, p, cap=cap, track=False
            )
        cof_rows = pspan_cache[cof_deg].row_polys()
        for g in closure.row_polys():
            for h in cof_rows:
                basis.insert_poly(g * h)
    return basis
