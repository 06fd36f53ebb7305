"""Exact sparse Laurent-polynomial arithmetic over the rationals.

A polynomial is stored as a dictionary mapping exponent tuples to
``Fraction`` coefficients; entry ``i`` of an exponent tuple is the
(possibly negative) exponent of the ``i``-th variable of the owning
:class:`RingContext`.  Zero coefficients are never stored, so the zero
polynomial has an empty term map and structural equality coincides with
mathematical equality.  All arithmetic is exact — no floats, no
tolerances, no approximation anywhere.

Variables whose name starts with ``z`` form the "shuffle block": they are
the only variables that :func:`substitute_permutation` is allowed to
move.  Parameter variables (``q1``, ``q2``) and coordinate variables of
commutative-algebra rings are never permuted.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

# Coefficients are stored as plain ints whenever they are integral and as
# Fraction otherwise.  Python guarantees hash/equality consistency across
# numeric types, so mixed dicts compare and hash correctly; keeping ints
# native makes the hot dictionary loops several times faster.


def _canon_coeff(c: Scalar) -> Scalar:
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _div_coeff(a: Scalar, b: Scalar) -> Scalar:
    if b == 1:
        return a
    if b == -1:
        return -a
    q = Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


class RingMismatchError(ValueError):
    """Operands belong to different ring contexts, or a variable is unknown."""


class RingContext:
    """An immutable ordered tuple of variable names shared by polynomials."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables: Iterable[str]) -> None:
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable names in {vs!r}")
        for v in vs:
            if not v or not (v[0].isalpha() or v[0] == "_"):
                raise ValueError(f"invalid variable name {v!r}")
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vs)})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RingContext is immutable")

    @property
    def size(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatchError(f"unknown variable {name!r} in ring {self.variables}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingContext) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"RingContext({', '.join(self.variables)})"

    def extend(self, *names: str) -> "RingContext":
        return RingContext(self.variables + names)

    def zero_exponents(self) -> Exponents:
        return (0,) * len(self.variables)


def _require_same_ring(a: "LaurentPoly", b: "LaurentPoly") -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")


class LaurentPoly:
    """A sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exponents, Scalar]) -> None:
        n = ring.size
        canon: dict[Exponents, Scalar] = {}
        for mono, coeff in terms.items():
            if len(mono) != n:
                raise RingMismatchError(f"exponent tuple {mono!r} has wrong length for {ring!r}")
            c = _canon_coeff(coeff)
            if c:
                canon[mono] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> "LaurentPoly":
        return cls(ring, {})

    @classmethod
    def const(cls, ring: RingContext, value: Scalar) -> "LaurentPoly":
        return cls(ring, {ring.zero_exponents(): Fraction(value)})

    @classmethod
    def variable(cls, ring: RingContext, name: str, power: int = 1) -> "LaurentPoly":
        exps = [0] * ring.size
        exps[ring.index(name)] = power
        return cls(ring, {tuple(exps): 1})

    @classmethod
    def monomial(cls, ring: RingContext, exps: Mapping[str, int], coeff: Scalar = 1) -> "LaurentPoly":
        vec = [0] * ring.size
        for name, e in exps.items():
            vec[ring.index(name)] = e
        return cls(ring, {tuple(vec): coeff})

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self) -> Scalar:
        if self.is_zero:
            return 0
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    @property
    def is_laurent(self) -> bool:
        """True when some exponent is negative (a genuine Laurent term)."""
        return any(e < 0 for m in self.terms for e in m)

    def total_degree(self) -> int:
        """Maximum term degree (sum of exponents); zero polynomial gives -1."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def support_vars(self) -> frozenset[str]:
        names = self.ring.variables
        out = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(names[i])
        return frozenset(out)

    def min_exponent(self, var_index: int) -> int:
        """Smallest exponent of the given variable over all terms (0 if absent)."""
        if not self.terms:
            return 0
        return min(m[var_index] for m in self.terms)

    def coefficient(self, exps: Mapping[str, int]) -> Fraction:
        vec = [0] * self.ring.size
        for name, e in exps.items():
            vec[self.ring.index(name)] = e
        return _canon_coeff(self.terms.get(tuple(vec), 0))

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- equality and hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {self.ring.zero_exponents(): other}
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        _require_same_ring(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.const(self.ring, other) - self

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = _canon_coeff(other)
            if not c:
                return LaurentPoly.zero(self.ring)
            return LaurentPoly(self.ring, {m: k * c for m, k in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        _require_same_ring(self, other)
        out: dict[Exponents, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only available on monomials")
        result = LaurentPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and substitution ------------------------------------

    def derivative(self, var: str) -> "LaurentPoly":
        """Formal partial derivative with respect to one variable."""
        i = self.ring.index(var)
        out: dict[Exponents, Scalar] = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            nm = m[:i] + (e - 1,) + m[i + 1:]
            s = out.get(nm, 0) + c * e
            if s:
                out[nm] = s
            else:
                out.pop(nm, None)
        return LaurentPoly(self.ring, out)

    def specialize(self, values: Mapping[str, Scalar]) -> "LaurentPoly":
        """Substitute exact rational values for some variables."""
        idx = {self.ring.index(name): Fraction(v) for name, v in values.items()}
        out: dict[Exponents, Scalar] = {}
        for m, c in self.terms.items():
            coeff = c
            nm = list(m)
            for i, v in idx.items():
                e = nm[i]
                if e:
                    if v == 0 and e < 0:
                        raise ZeroDivisionError("specializing a negative power at zero")
                    coeff *= v ** e
                nm[i] = 0
            key = tuple(nm)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(self.ring, out)

    def substitute_variable(self, src: str, dst: str) -> "LaurentPoly":
        """Identify variable ``src`` with variable ``dst`` (exponents merge)."""
        i, j = self.ring.index(src), self.ring.index(dst)
        if i == j:
            return self
        out: dict[Exponents, Scalar] = {}
        for m, c in self.terms.items():
            nm = list(m)
            nm[j] += nm[i]
            nm[i] = 0
            key = tuple(nm)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(self.ring, out)

    def project(self, new_ring: RingContext) -> "LaurentPoly":
        """Map into another ring by variable name; dropped variables must be absent."""
        mapping = []
        for i, name in enumerate(self.ring.variables):
            mapping.append(new_ring._index.get(name, -1))
        out: dict[Exponents, Scalar] = {}
        for m, c in self.terms.items():
            vec = [0] * new_ring.size
            for i, e in enumerate(m):
                if not e:
                    continue
                j = mapping[i]
                if j < 0:
                    raise RingMismatchError(
                        f"variable {self.ring.variables[i]!r} not present in target ring")
                vec[j] += e
            key = tuple(vec)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(new_ring, out)

    def invert_variables(self, names: Iterable[str]) -> "LaurentPoly":
        """Substitute v -> v^-1 for each named variable (exponent negation)."""
        idxs = {self.ring.index(n) for n in names}
        out: dict[Exponents, Scalar] = {}
        for m, c in self.terms.items():
            nm = tuple(-e if i in idxs else e for i, e in enumerate(m))
            out[nm] = c
        return LaurentPoly(self.ring, out)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<LaurentPoly {format_poly(self)}>"


def substitute_permutation(p: LaurentPoly, sigma: Mapping[str, str]) -> LaurentPoly:
    """Apply a permutation of shuffle variables (names starting with 'z').

    ``sigma`` must be a bijection of a subset of the ring's z-variables onto
    itself; touching any non-z variable raises :class:`RingMismatchError`.
    """
    keys = set(sigma)
    vals = set(sigma.values())
    if keys != vals:
        raise ValueError(f"{dict(sigma)!r} is not a permutation")
    for name in keys | vals:
        if name not in p.ring:
            raise RingMismatchError(f"unknown variable {name!r}")
        if not name.startswith("z"):
            raise RingMismatchError(f"substitute_permutation may not move parameter {name!r}")
    # slot i (old variable) sends its exponent to the slot of sigma(variable)
    n = p.ring.size
    dest = list(range(n))
    for src, dst in sigma.items():
        dest[p.ring.index(src)] = p.ring.index(dst)
    out: dict[Exponents, Scalar] = {}
    for m, c in p.terms.items():
        vec = [0] * n
        for i, e in enumerate(m):
            vec[dest[i]] += e
        out[tuple(vec)] = c
    return LaurentPoly(p.ring, out)


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------

def _degree_key(m: Exponents) -> tuple:
    # graded reverse-lexicographic key (valid well-order once exponents >= 0)
    return (sum(m), tuple(-e for e in reversed(m)))


def _heap_key(m: Exponents) -> tuple:
    # negated _degree_key so that heapq (a min-heap) pops the largest
    # monomial first; the original monomial is recovered from the key
    return (-sum(m), tuple(reversed(m)))


def _heap_monomial(key: tuple) -> Exponents:
    return tuple(reversed(key[1]))


def exact_div(a: LaurentPoly, b: LaurentPoly) -> Optional[LaurentPoly]:
    """Return q with a == q * b, or None when b does not divide a exactly.

    Works for Laurent inputs: both operands are shifted by monomials until
    ordinary, divided by the classical single-divisor algorithm, and the
    shift difference is applied to the quotient.  The running leading
    term is tracked with a lazy-deletion heap, so large numerators divide
    in near-linear time.
    """
    if b.is_zero:
        raise ZeroDivisionError("exact_div by the zero polynomial")
    if a.is_zero:
        return LaurentPoly.zero(a.ring)
    _require_same_ring(a, b)
    # split off the full monomial content of both operands; the primitive
    # parts then divide in the ordinary polynomial sense iff a = q*b is
    # solvable with a Laurent quotient
    n = a.ring.size
    shift_a = tuple(a.min_exponent(i) for i in range(n))
    shift_b = tuple(b.min_exponent(i) for i in range(n))
    num = {tuple(e - s for e, s in zip(m, shift_a)): c for m, c in a.terms.items()}
    den = {tuple(e - s for e, s in zip(m, shift_b)): c for m, c in b.terms.items()}
    lt_b = max(den, key=_degree_key)
    lc_b = den[lt_b]
    den_tail = [(m, c) for m, c in den.items() if m != lt_b]
    heap = [_heap_key(m) for m in num]
    heapq.heapify(heap)
    quot: dict[Exponents, Scalar] = {}
    while num:
        while True:
            lt = _heap_monomial(heapq.heappop(heap))
            if lt in num:
                break
        d = tuple(x - y for x, y in zip(lt, lt_b))
        if any(e < 0 for e in d):
            return None
        coeff = _div_coeff(num.pop(lt), lc_b)
        quot[d] = coeff
        for m, c in den_tail:
            key = tuple(x + y for x, y in zip(d, m))
            if key in num:
                s = num[key] - coeff * c
                if s:
                    num[key] = s
                else:
                    del num[key]
            else:
                num[key] = -coeff * c
                heapq.heappush(heap, _heap_key(key))
    shift_q = tuple(x - y for x, y in zip(shift_a, shift_b))
    return LaurentPoly(a.ring, {tuple(e + s for e, s in zip(m, shift_q)): c
                                for m, c in quot.items()})


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    """True when b divides a exactly."""
    return exact_div(a, b) is not None


# ---------------------------------------------------------------------------
# Printing (the parser lives in textio; the printed form re-parses exactly)
# ---------------------------------------------------------------------------

def _format_exponent(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_poly(p: LaurentPoly) -> str:
    """Canonical text form: terms sorted by exponent vector, descending."""
    if not p.terms:
        return "0"
    names = p.ring.variables
    pieces: list[str] = []
    for mono in sorted(p.terms, reverse=True):
        coeff = p.terms[mono]
        vars_part = "*".join(_format_exponent(names[i], e)
                             for i, e in enumerate(mono) if e)
        mag = abs(coeff)
        if not vars_part:
            body = str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{mag}*{vars_part}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
