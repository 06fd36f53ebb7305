"""Rational functions as a numerator plus a multiset of denominator factors.

A value is ``num / prod(f ** m for (f, m) in factors)``.  Denominator
factors are kept as explicit polynomials with multiplicities rather than
being multiplied out, which keeps pole structure visible (the shuffle
layer relies on seeing which difference factors survive cancellation).

Factors are sign-normalized so that the lexicographically largest
monomial has a positive coefficient; this makes e.g. ``z1 - z2`` and
``z2 - z1`` land on the same stored factor.  Equality of rational
functions is always semantic (cross-multiplied), never structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .rings import LaurentPoly, RingContext, RingMismatchError, exact_div, substitute_permutation

Scalar = Union[int, Fraction]


class DegenerateRatioError(ValueError):
    """A kernel ratio or denominator factor degenerated to zero."""


def _normalize_factor(f: LaurentPoly) -> tuple[LaurentPoly, int]:
    """Return (canonical factor, sign) with sign in {1, -1}."""
    if f.is_zero:
        raise DegenerateRatioError("zero denominator factor")
    lead = max(f.terms)
    if f.terms[lead] < 0:
        return -f, -1
    return f, 1


class RationalFunction:
    """An exact rational function with tracked denominator factors."""

    __slots__ = ("num", "factors")

    def __init__(self, num: LaurentPoly,
                 factors: Union[Mapping[LaurentPoly, int],
                                Iterable[tuple[LaurentPoly, int]]] = ()) -> None:
        items = factors.items() if isinstance(factors, Mapping) else factors
        canon: dict[LaurentPoly, int] = {}
        sign = 1
        scale = Fraction(1)
        for f, mult in items:
            if mult < 0:
                raise ValueError("denominator multiplicities must be >= 1")
            if mult == 0:
                continue
            if f.ring != num.ring:
                raise RingMismatchError("denominator factor in a different ring")
            g, s = _normalize_factor(f)
            if g.is_constant:
                scale *= g.constant_value() ** mult
                sign *= s ** mult
                continue
            if s == -1 and mult % 2 == 1:
                sign = -sign
            canon[g] = canon.get(g, 0) + mult
        if sign == -1:
            num = -num
        if scale != 1:
            num = num * (Fraction(1) / scale)
        if num.is_zero:
            canon = {}
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", canon)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunction is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p, ())

    @classmethod
    def zero(cls, ring: RingContext) -> "RationalFunction":
        return cls(LaurentPoly.zero(ring), ())

    @classmethod
    def one(cls, ring: RingContext) -> "RationalFunction":
        return cls(LaurentPoly.const(ring, 1), ())

    # -- queries ------------------------------------------------------

    @property
    def ring(self) -> RingContext:
        return self.num.ring

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return not self.factors

    def sorted_factors(self) -> list[tuple[LaurentPoly, int]]:
        """Factors in a deterministic order (by term map, largest monomial first)."""
        return sorted(self.factors.items(),
                      key=lambda fm: sorted(fm[0].terms.items(), reverse=True),
                      reverse=True)

    def __repr__(self) -> str:
        if not self.factors:
            return f"<RationalFunction {self.num}>"
        dens = " * ".join(f"({f})" + (f"^{m}" if m > 1 else "")
                          for f, m in self.sorted_factors())
        return f"<RationalFunction ({self.num}) / {dens}>"

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.factors)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return rf_add(self, other)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return rf_add(self, -other)

    def __mul__(self, other: Union["RationalFunction", LaurentPoly, Scalar]) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.factors)
        if isinstance(other, LaurentPoly):
            other = RationalFunction.from_poly(other)
        return rf_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return rf_equal(self, other)
        if isinstance(other, LaurentPoly):
            return rf_equal(self, RationalFunction.from_poly(other))
        if isinstance(other, (int, Fraction)):
            ring = self.ring
            return rf_equal(self, RationalFunction.from_poly(LaurentPoly.const(ring, other)))
        return NotImplemented

    __hash__ = None  # semantic equality is incompatible with hashing


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Sum over the union denominator (per-factor maximum multiplicity)."""
    return rf_sum((a, b))


def rf_sum(terms: Sequence[RationalFunction]) -> RationalFunction:
    """Sum many terms over one union denominator.

    Each numerator is rescaled exactly once (by the factors it is missing
    relative to the union), which is much cheaper than folding with pairwise
    additions when the terms share most denominator factors.
    """
    if not terms:
        raise ValueError("rf_sum needs at least one term")
    ring = terms[0].ring
    for t in terms:
        if t.ring != ring:
            raise RingMismatchError("rational functions over different rings")
    terms = [t for t in terms if not t.num.is_zero]
    if not terms:
        return RationalFunction.zero(ring)
    union: dict[LaurentPoly, int] = {}
    for t in terms:
        for f, m in t.factors.items():
            if union.get(f, 0) < m:
                union[f] = m
    total = LaurentPoly.zero(ring)
    for t in terms:
        num = t.num
        for f, m in union.items():
            d = m - t.factors.get(f, 0)
            if d:
                num = num * f ** d
        total = total + num
    return RationalFunction(total, union)


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Product; denominator multiplicities add."""
    if a.ring != b.ring:
        raise RingMismatchError("rational functions over different rings")
    out: dict[LaurentPoly, int] = dict(a.factors)
    for f, m in b.factors.items():
        out[f] = out.get(f, 0) + m
    return RationalFunction(a.num * b.num, out)


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Semantic equality.  Equal denominator multisets compare numerators
    directly; otherwise both sides are fully cancelled first (for values
    built from irreducible factors the cancelled form is canonical), and
    only as a last resort is the comparison cross-multiplied."""
    if a.ring != b.ring:
        raise RingMismatchError("rational functions over different rings")
    if a.factors == b.factors:
        return a.num == b.num
    a = rf_cancel(a)
    b = rf_cancel(b)
    if a.factors == b.factors:
        return a.num == b.num
    union: dict[LaurentPoly, int] = dict(a.factors)
    for f, m in b.factors.items():
        union[f] = max(union.get(f, 0), m)
    num_a = a.num
    num_b = b.num
    for f, m in union.items():
        da = m - a.factors.get(f, 0)
        db = m - b.factors.get(f, 0)
        if da:
            num_a = num_a * f ** da
        if db:
            num_b = num_b * f ** db
    return num_a == num_b


def rf_cancel(a: RationalFunction) -> RationalFunction:
    """Divide out every denominator factor that exactly divides the numerator.

    The result is semantically equal to the input; it only trims the
    factor multiset (completely, i.e. the numerator is divisible by no
    remaining factor).
    """
    if a.num.is_zero:
        return RationalFunction.zero(a.ring)
    num = a.num
    left: dict[LaurentPoly, int] = dict(a.factors)
    changed = True
    while changed:
        changed = False
        for f in sorted(left, key=lambda g: sorted(g.terms.items(), reverse=True), reverse=True):
            while left.get(f, 0) > 0:
                q = exact_div(num, f)
                if q is None:
                    break
                num = q
                left[f] -= 1
                changed = True
            if left.get(f, 0) == 0:
                left.pop(f, None)
    return RationalFunction(num, left)


def rf_permute(a: RationalFunction, sigma: Mapping[str, str]) -> RationalFunction:
    """Apply a shuffle-variable permutation to numerator and all factors."""
    num = substitute_permutation(a.num, sigma)
    factors = [(substitute_permutation(f, sigma), m) for f, m in a.factors.items()]
    return RationalFunction(num, factors)


def rf_invert_variables(a: RationalFunction, names: Iterable[str]) -> "RationalFunction":
    """Substitute v -> v^-1 in numerator and factors for the named variables."""
    names = tuple(names)
    num = a.num.invert_variables(names)
    factors = [(f.invert_variables(names), m) for f, m in a.factors.items()]
    return RationalFunction(num, factors)
