"""Polynomial-ideal computations: Groebner bases, dimension, Hilbert data,
Jacobian singular loci, and regular-sequence certificates.

Everything here works on ordinary (non-Laurent) polynomials from
:mod:`.rings` with exact rational coefficients.  The Buchberger loop is
the pair-update variant with both standard pair-elimination criteria
(coprime leading terms and the chain criterion) and normal selection;
see Becker & Weispfenning, *Groebner Bases*, ch. 5.  Reduced bases are
monic and self-reduced, hence canonical for a fixed monomial order, so
two runs on the same input are identical term for term.

Dimension is computed combinatorially from the leading-term ideal: the
Krull dimension equals ``n`` minus the size of a minimum vertex cover of
the generator supports.  The Hilbert numerator ``N(t)`` (with respect to
``HS(t) = N(t)/(1-t)^n``) comes from the standard colon-ideal recursion
on monomial ideals.
"""

from __future__ import annotations

import heapq
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .rings import (
    Exponents,
    LaurentPoly,
    RingContext,
    RingMismatchError,
    Scalar,
    _div_coeff,
    exact_div,
)

# ---------------------------------------------------------------------------
# Errors and sentinels
# ---------------------------------------------------------------------------


class NotPolynomialError(ValueError):
    """A Laurent input reached an operation defined only for polynomials."""


class EmptyVarietyError(ValueError):
    """The ideal is the unit ideal; its variety is empty."""


class ParameterError(ValueError):
    """A numeric argument is out of range for the operation."""


class _EmptyLocus:
    """Singleton marker: a locus is empty (dimension of no points)."""

    _instance: Optional["_EmptyLocus"] = None

    def __new__(cls) -> "_EmptyLocus":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Empty"


EMPTY = _EmptyLocus()

LocusDim = Union[int, _EmptyLocus]


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """A named admissible order realized as a sort key on exponent tuples."""

    name: str

    def key(self, m: Exponents):
        if self.name == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.name == "lex":
            return m
        raise ParameterError(f"unknown monomial order {self.name!r}")

    def heap_key(self, m: Exponents):
        """Inverted key: a min-heap ordered by it pops the largest monomial."""
        if self.name == "grevlex":
            return (-sum(m), tuple(reversed(m)))
        if self.name == "lex":
            return tuple(-e for e in m)
        raise ParameterError(f"unknown monomial order {self.name!r}")


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def order_by_name(name: str) -> MonomialOrder:
    try:
        return _ORDERS[name]
    except KeyError:
        raise ParameterError(f"unknown monomial order {name!r}") from None


def _require_ordinary(p: LaurentPoly) -> None:
    if p.is_laurent:
        raise NotPolynomialError(f"Laurent polynomial not allowed here: {p}")


def leading_term(p: LaurentPoly, order: MonomialOrder) -> tuple[Exponents, Fraction]:
    if p.is_zero:
        raise ValueError("the zero polynomial has no leading term")
    m = max(p.terms, key=order.key)
    return m, p.terms[m]


def _mono_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def _mono_sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Ideals and bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """A finite list of nonzero ordinary polynomials over a shared ring."""

    ring: RingContext
    generators: tuple[LaurentPoly, ...]

    def __init__(self, ring: RingContext, generators: Iterable[LaurentPoly]) -> None:
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator in a different ring")
            _require_ordinary(g)
            if not g.is_zero:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __iter__(self) -> Iterator[LaurentPoly]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis for a fixed monomial order."""

    ring: RingContext
    order: MonomialOrder
    basis: tuple[LaurentPoly, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant

    def leading_monomials(self) -> list[Exponents]:
        return [leading_term(g, self.order)[0] for g in self.basis]

    def reduce(self, f: LaurentPoly) -> LaurentPoly:
        return normal_form(f, self.basis, self.order)

    def contains(self, f: LaurentPoly) -> bool:
        return self.reduce(f).is_zero


# ---------------------------------------------------------------------------
# Division / normal form
# ---------------------------------------------------------------------------


def normal_form(f: LaurentPoly, basis: Sequence[LaurentPoly],
                order: MonomialOrder = GREVLEX) -> LaurentPoly:
    """Fully reduce ``f`` modulo ``basis``: no remainder term is divisible
    by any basis leading term.  Divisors are tried in list order, so the
    result is deterministic for a fixed basis list.  The running leading
    term is tracked with a lazy-deletion heap keyed by the order."""
    _require_ordinary(f)
    lts = []
    for g in basis:
        if g.is_zero:
            continue
        _require_ordinary(g)
        m, c = leading_term(g, order)
        lts.append((m, c, g))
    work = dict(f.terms)
    hkey = order.heap_key
    heap = [(hkey(m), m) for m in work]
    heapq.heapify(heap)
    remainder: dict[Exponents, Scalar] = {}
    while work:
        while True:
            m = heapq.heappop(heap)[1]
            if m in work:
                break
        c = work.pop(m)
        for lm, lc, g in lts:
            if _mono_divides(lm, m):
                factor = _div_coeff(c, lc)
                shift = _mono_sub(m, lm)
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = _mono_mul(gm, shift)
                    if t in work:
                        s = work[t] - factor * gc
                        if s:
                            work[t] = s
                        else:
                            del work[t]
                    else:
                        work[t] = -factor * gc
                        heapq.heappush(heap, (hkey(t), t))
                break
        else:
            remainder[m] = c
    return LaurentPoly(f.ring, remainder)


def s_polynomial(f: LaurentPoly, g: LaurentPoly, order: MonomialOrder) -> LaurentPoly:
    mf, cf = leading_term(f, order)
    mg, cg = leading_term(g, order)
    lcm = _mono_lcm(mf, mg)
    tf = LaurentPoly(f.ring, {_mono_sub(lcm, mf): _div_coeff(1, cf)})
    tg = LaurentPoly(g.ring, {_mono_sub(lcm, mg): _div_coeff(1, cg)})
    return tf * f - tg * g


# ---------------------------------------------------------------------------
# Buchberger with pair-update criteria
# ---------------------------------------------------------------------------


def _update_pairs(G: list[LaurentPoly], pairs: set[tuple[int, int]],
                  lms: list[Exponents], h_index: int) -> None:
    """Install polynomial ``h_index`` into the pair set, applying the
    coprime-product and chain criteria (Becker & Weispfenning 5.66)."""
    h = lms[h_index]
    candidates = list(range(h_index))
    lcms = {i: _mono_lcm(lms[i], h) for i in candidates}
    # chain criterion among the new pairs: keep (i, h) only if no kept j
    # has lcm(j, h) properly dividing lcm(i, h); coprime pairs drop out
    kept: list[int] = []
    for i in sorted(candidates, key=lambda i: sum(lcms[i])):
        li = lcms[i]
        if any(_mono_divides(lcms[j], li) and lcms[j] != li for j in candidates if j != i):
            continue
        kept.append(i)
    coprime = {i for i in kept
               if _mono_lcm(lms[i], h) == _mono_mul(lms[i], h)}
    # chain criterion on old pairs through the new element
    for (i, j) in list(pairs):
        lij = _mono_lcm(lms[i], lms[j])
        if (_mono_divides(h, lij)
                and _mono_lcm(lms[i], h) != lij
                and _mono_lcm(lms[j], h) != lij):
            pairs.discard((i, j))
    for i in kept:
        if i not in coprime:
            pairs.add((i, h_index))


def _interreduce(polys: list[LaurentPoly], order: MonomialOrder) -> list[LaurentPoly]:
    """Self-reduce and make monic; on a Groebner set this yields the
    canonical reduced basis."""
    work = [p for p in polys if not p.is_zero]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            others = work[:i] + work[i + 1:]
            r = normal_form(work[i], others, order)
            if r.terms != work[i].terms:
                changed = True
            if r.is_zero:
                work.pop(i)
                break
            work[i] = r
        else:
            continue
    out = []
    for p in work:
        _, c = leading_term(p, order)
        out.append(p * _div_coeff(1, c))
    out.sort(key=lambda p: order.key(leading_term(p, order)[0]))
    return out


def buchberger(ideal: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Compute the reduced monic Groebner basis of an ideal."""
    G: list[LaurentPoly] = []
    seed = [g for g in ideal.generators if not g.is_zero]
    seed = _interreduce(seed, order)
    if not seed:
        return GroebnerBasis(ideal.ring, order, ())
    lms: list[Exponents] = []
    pairs: set[tuple[int, int]] = set()
    for g in seed:
        G.append(g)
        lms.append(leading_term(g, order)[0])
        _update_pairs(G, pairs, lms, len(G) - 1)
    key = order.key
    while pairs:
        # normal selection: smallest lcm first
        i, j = min(pairs, key=lambda ij: (key(_mono_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard((i, j))
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if r.is_zero:
            continue
        _, c = leading_term(r, order)
        r = r * _div_coeff(1, c)
        G.append(r)
        lms.append(leading_term(r, order)[0])
        _update_pairs(G, pairs, lms, len(G) - 1)
    return GroebnerBasis(ideal.ring, order, tuple(_interreduce(G, order)))


def is_groebner(basis: Sequence[LaurentPoly], order: MonomialOrder = GREVLEX) -> bool:
    """Direct Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [p for p in basis if not p.is_zero]
    for f, g in itertools.combinations(polys, 2):
        if not normal_form(s_polynomial(f, g, order), polys, order).is_zero:
            return False
    return True


# ---------------------------------------------------------------------------
# Monomial ideals: dimension and Hilbert numerator
# ---------------------------------------------------------------------------


def _minimalize_monomials(gens: Iterable[Exponents]) -> list[Exponents]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Exponents] = []
    for m in gens:
        if not any(_mono_divides(p, m) for p in out):
            out.append(m)
    return out


def _min_support_cover(supports: list[frozenset[int]], n: int) -> int:
    """Size of a minimum set of variables meeting every support
    (branch and bound on the hardest-first ordering)."""
    supports = [s for s in supports if s]
    best = [n]

    def search(remaining: list[frozenset[int]], chosen: int) -> None:
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            rest = [s for s in remaining if v not in s]
            search(rest, chosen + 1)

    search(supports, 0)
    return best[0]


def krull_dim(ideal_or_basis: Union[Ideal, GroebnerBasis],
              order: MonomialOrder = GREVLEX) -> int:
    """Krull dimension of the quotient by the ideal; raises
    :class:`EmptyVarietyError` for the unit ideal."""
    gb = ideal_or_basis if isinstance(ideal_or_basis, GroebnerBasis) \
        else buchberger(ideal_or_basis, order)
    if gb.is_unit:
        raise EmptyVarietyError("unit ideal: the variety is empty")
    n = gb.ring.size
    lms = _minimalize_monomials(gb.leading_monomials())
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    return n - _min_support_cover(supports, n)


def _mono_quotient(gens: list[Exponents], m: Exponents) -> list[Exponents]:
    """Generators of the monomial colon ideal (I : m)."""
    return _minimalize_monomials(tuple(max(0, g - e) for g, e in zip(gen, m))
                                 for gen in gens)


def _poly1_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _hilbert_recursive(gens: list[Exponents], cache: dict) -> list[Fraction]:
    key = tuple(sorted(gens))
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not gens:
        result = [Fraction(1)]
    elif any(sum(g) == 0 for g in gens):
        result = [Fraction(0)]
    else:
        # split off a generator; N(I) = N(I') - t^deg * N(I' : m)
        m = max(gens, key=lambda g: (sum(g), g))
        rest = [g for g in gens if g != m]
        n_rest = _hilbert_recursive(rest, cache)
        n_colon = _hilbert_recursive(_mono_quotient(rest, m), cache)
        shift = [Fraction(0)] * sum(m) + n_colon
        result = [Fraction(0)] * max(len(n_rest), len(shift))
        for i, x in enumerate(n_rest):
            result[i] += x
        for i, x in enumerate(shift):
            result[i] -= x
        while len(result) > 1 and result[-1] == 0:
            result.pop()
    cache[key] = result
    return result


def hilbert_numerator(ideal_or_basis: Union[Ideal, GroebnerBasis],
                      order: MonomialOrder = GREVLEX) -> list[int]:
    """Coefficients of N(t) where HS(R/I)(t) = N(t) / (1-t)^n, computed
    from the leading-term ideal (valid because passing to leading terms
    preserves the Hilbert function)."""
    gb = ideal_or_basis if isinstance(ideal_or_basis, GroebnerBasis) \
        else buchberger(ideal_or_basis, order)
    gens = _minimalize_monomials(gb.leading_monomials())
    coeffs = _hilbert_recursive(gens, {})
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("Hilbert numerator must have integer coefficients")
        out.append(int(c))
    return out


def hilbert_series_coefficients(numerator: list[int], nvars: int, upto: int) -> list[int]:
    """Expand N(t)/(1-t)^n as a power series up to degree ``upto``."""
    out = []
    for d in range(upto + 1):
        total = 0
        for i, c in enumerate(numerator):
            if i > d:
                break
            total += c * math.comb(nvars - 1 + d - i, nvars - 1)
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# Jacobian machinery
# ---------------------------------------------------------------------------


def jacobian_matrix(ideal: Ideal) -> list[list[LaurentPoly]]:
    """Rows indexed by generators, columns by ring variables."""
    return [[g.derivative(v) for v in ideal.ring.variables] for g in ideal.generators]


def _det(rows: list[list[LaurentPoly]], ring: RingContext) -> LaurentPoly:
    """Determinant by expansion along the sparsest row (sizes here are <= 6)."""
    k = len(rows)
    if k == 0:
        return LaurentPoly.const(ring, 1)
    if k == 1:
        return rows[0][0]
    pivot_row = min(range(k), key=lambda i: sum(1 for e in rows[i] if not e.is_zero))
    out = LaurentPoly.zero(ring)
    row = rows[pivot_row]
    rest = [r for i, r in enumerate(rows) if i != pivot_row]
    for col in range(k):
        entry = row[col]
        if entry.is_zero:
            continue
        minor_rows = [[r[c] for c in range(k) if c != col] for r in rest]
        cofactor = _det(minor_rows, ring)
        if (pivot_row + col) % 2:
            cofactor = -cofactor
        out = out + entry * cofactor
    return out


def iter_minors(matrix: list[list[LaurentPoly]], c: int,
                ring: RingContext) -> Iterator[LaurentPoly]:
    """All c x c minors, rows-major, deterministic order; zeros skipped."""
    if not matrix:
        return
    nrows, ncols = len(matrix), len(matrix[0])
    for rows_idx in itertools.combinations(range(nrows), c):
        for cols_idx in itertools.combinations(range(ncols), c):
            sub = [[matrix[r][col] for col in cols_idx] for r in rows_idx]
            minor = _det(sub, ring)
            if not minor.is_zero:
                yield minor


def jacobian_minors_ideal(ideal: Ideal, c: int) -> Ideal:
    """The ideal generated by the input generators plus all c x c minors
    of their Jacobian matrix."""
    nrows = len(ideal.generators)
    ncols = ideal.ring.size
    if c < 1 or c > min(nrows, ncols):
        raise ParameterError(f"minor size {c} out of range for a {nrows}x{ncols} Jacobian")
    J = jacobian_matrix(ideal)
    minors = list(iter_minors(J, c, ideal.ring))
    return Ideal(ideal.ring, list(ideal.generators) + minors)


def singular_locus_dim(ideal: Ideal, c: int,
                       order: MonomialOrder = GREVLEX) -> LocusDim:
    """Dimension of the vanishing locus of the c x c Jacobian minors
    together with the ideal; ``EMPTY`` when that locus is empty.

    ``c`` must equal the codimension of the ideal (number of variables
    minus Krull dimension), which is validated here.
    """
    gb = buchberger(ideal, order)
    if gb.is_unit:
        return EMPTY
    expected_c = ideal.ring.size - krull_dim(gb)
    if c != expected_c:
        raise ParameterError(f"minor size {c} does not match codimension {expected_c}")
    if c == 0:
        # zero ideal up to the basis: smooth affine space, no singular points
        return EMPTY
    nrows = len(ideal.generators)
    if c > nrows:
        raise ParameterError(f"minor size {c} exceeds the {nrows} available rows")
    J = jacobian_matrix(ideal)
    seen: set = set()
    gens: list[LaurentPoly] = list(gb.basis)
    for minor in iter_minors(J, c, ideal.ring):
        r = gb.reduce(minor)
        if r.is_zero or r in seen:
            continue
        seen.add(r)
        gens.append(r)
    sing = buchberger(Ideal(ideal.ring, gens), order)
    if sing.is_unit:
        return EMPTY
    return krull_dim(sing)


# ---------------------------------------------------------------------------
# Chart smoothness via localization
# ---------------------------------------------------------------------------


def _localize(ideal: Ideal, f: LaurentPoly) -> tuple[Ideal, RingContext]:
    """Adjoin t with t*f = 1 (inversion of f on the chart)."""
    base = ideal.ring
    tname = "t"
    while tname in base:
        tname += "_"
    ring = base.extend(tname)
    gens = [g.project(ring) for g in ideal.generators]
    t = LaurentPoly.variable(ring, tname)
    gens.append(t * f.project(ring) - 1)
    return Ideal(ring, gens), ring


def _unit_after_adding(gb: GroebnerBasis, extra: Sequence[LaurentPoly],
                       order: MonomialOrder) -> GroebnerBasis:
    return buchberger(Ideal(gb.ring, list(gb.basis) + list(extra)), order)


def _guided_minor(J: list[list[LaurentPoly]], c: int, gb: GroebnerBasis,
                  ring: RingContext, order: MonomialOrder) -> Optional[LaurentPoly]:
    """Pick c rows/columns by fraction-free elimination, preferring pivots
    that stay nonzero modulo the ideal; return the corresponding minor.
    This is only a search heuristic -- the returned minor is recomputed
    from the original matrix, so correctness never depends on it."""
    work = [row[:] for row in J]
    rows_left = list(range(len(work)))
    cols_left = list(range(len(work[0]) if work else 0))
    picked_rows: list[int] = []
    picked_cols: list[int] = []
    prev_pivot: Optional[LaurentPoly] = None
    for _ in range(c):
        best = None
        for ri in rows_left:
            for ci in cols_left:
                e = work[ri][ci]
                if e.is_zero:
                    continue
                if gb.reduce(e).is_zero:
                    continue
                score = (len(e.terms), e.total_degree())
                if best is None or score < best[0]:
                    best = (score, ri, ci)
        if best is None:
            return None
        _, ri, ci = best
        picked_rows.append(ri)
        picked_cols.append(ci)
        pivot = work[ri][ci]
        for rj in rows_left:
            if rj == ri:
                continue
            factor = work[rj][ci]
            for ck in cols_left:
                if ck == ci:
                    continue
                entry = work[rj][ck] * pivot
                if not factor.is_zero:
                    entry = entry - work[ri][ck] * factor
                if prev_pivot is not None:
                    # Bareiss step: division by the previous pivot is exact
                    q = exact_div(entry, prev_pivot)
                    if q is not None:
                        entry = q
                work[rj][ck] = entry
            work[rj][ci] = LaurentPoly.zero(ring)
        rows_left.remove(ri)
        cols_left.remove(ci)
        prev_pivot = pivot
    sub = [[J[r][col] for col in sorted(picked_cols)] for r in sorted(picked_rows)]
    return _det(sub, ring)


def chart_smooth_check(ideal: Ideal, chart: LaurentPoly,
                       order: MonomialOrder = GREVLEX,
                       batch: int = 25) -> bool:
    """True iff the locus of the ideal is smooth on the chart where the
    chart polynomial is invertible.

    The chart is realized by adjoining an inverse variable; smoothness
    holds iff the codimension-sized Jacobian minors generate the unit
    ideal there.  Minors are accumulated lazily: a single elimination-
    guided minor usually certifies smoothness immediately, and otherwise
    minors are added in deterministic batches until the unit ideal is
    reached or all minors are exhausted (exactness is preserved -- only
    the discovery order is heuristic).
    """
    _require_ordinary(chart)
    loc, ring = _localize(ideal, chart)
    gb = buchberger(loc, order)
    if gb.is_unit:
        # the chart misses the locus entirely; nothing to be singular
        return True
    dim = krull_dim(gb)
    c = ring.size - dim
    if c == 0:
        return True
    J = jacobian_matrix(loc)
    if c > len(loc.generators):
        return False
    guided = _guided_minor(J, c, gb, ring, order)
    if guided is not None and not guided.is_zero:
        if _unit_after_adding(gb, [guided], order).is_unit:
            return True
    current = gb
    pending: list[LaurentPoly] = []
    seen: set = set()
    for minor in iter_minors(J, c, ring):
        r = current.reduce(minor)
        if r.is_zero or r in seen:
            continue
        seen.add(r)
        pending.append(r)
        if len(pending) >= batch:
            current = _unit_after_adding(current, pending, order)
            pending = []
            seen = set()
            if current.is_unit:
                return True
    if pending:
        current = _unit_after_adding(current, pending, order)
    return current.is_unit


# ---------------------------------------------------------------------------
# Regular sequences via Hilbert-numerator bookkeeping
# ---------------------------------------------------------------------------


def random_linear_forms(ring: RingContext, count: int,
                        rng: random.Random) -> list[LaurentPoly]:
    """Random linear forms with integer coefficients in [-10, 10]."""
    out = []
    for _ in range(count):
        while True:
            coeffs = [rng.randint(-10, 10) for _ in ring.variables]
            if any(coeffs):
                break
        p = LaurentPoly.zero(ring)
        for name, c in zip(ring.variables, coeffs):
            if c:
                p = p + LaurentPoly.variable(ring, name) * c
        out.append(p)
    return out


def regular_sequence_check(ideal: Ideal, thetas: Sequence[LaurentPoly],
                           order: MonomialOrder = GREVLEX) -> bool:
    """Certify that ``thetas`` is a regular sequence on the quotient ring.

    Each adjoined form must drop the Krull dimension by exactly one and
    multiply the Hilbert numerator by (1-t); both together witness that
    the form is a nonzerodivisor in the graded sense.  The number of
    forms must equal the Krull dimension of the input (a full linear
    system of parameters), so success is evidence for Cohen-Macaulayness.
    """
    gb = buchberger(ideal, order)
    if gb.is_unit:
        raise EmptyVarietyError("unit ideal: no regular sequence to check")
    dim = krull_dim(gb)
    if len(thetas) != dim:
        raise ParameterError(f"need exactly {dim} parameters, got {len(thetas)}")
    numerator = hilbert_numerator(gb)
    current = gb
    for theta in thetas:
        _require_ordinary(theta)
        nxt = buchberger(Ideal(ideal.ring, list(current.basis) + [theta]), order)
        if nxt.is_unit:
            return False
        ndim = krull_dim(nxt)
        if ndim != dim - 1:
            return False
        expected = _poly1_mul([Fraction(c) for c in numerator],
                              [Fraction(1), Fraction(-1)])
        got = [Fraction(c) for c in hilbert_numerator(nxt)]
        if got != expected:
            return False
        current = nxt
        dim = ndim
        numerator = [int(c) for c in got]
    return True
