"""The small-rank shuffle model of the positive-half Hall algebra.

Elements of weight ``n`` are rational functions in ``z1 .. zn`` with
coefficients that are Laurent polynomials in the parameters ``q1, q2``
(the product ``q = q1*q2`` is always expanded and never a variable of
its own).  The product of an ``n``- and an ``m``-element sums over all
``n``-element subsets ``S`` of ``{1..n+m}``: the left factor is moved to
the ``S`` slots, the right factor to the complementary slots, and every
left/right slot pair ``(i, j)`` contributes one kernel factor built from
the ratio ``zi/zj`` (no symmetrization scalars).  Degree-``k``
generators are the weight-1 monomials ``z1^k``.

The kernel is ``zeta(x) = (1-q1*x)(1-q2*x) / ((1-x)(1-q*x))``; in slot
form, ``zeta(zi/zj)`` is cleared of ``zj`` powers so that numerator and
denominator are genuine polynomials.  Which of the two possible slot
orientations feeds the kernel is not an a-priori choice: at engine
construction the orientation is certified against the cubic reflection
identity ``P(z1,z2) * zeta(z1/z2) == P(1/z1,1/z2 inverted) * zeta(z2/z1)``
that encodes the degree-generating-series exchange relation, and the
surviving orientation is recorded on the engine.  An engine whose kernel
fails both orientations refuses to start.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from .rings import LaurentPoly, RingContext, substitute_permutation
from .ratfunc import (DegenerateRatioError, RationalFunction, rf_add, rf_cancel,
                      rf_equal, rf_invert_variables, rf_mul, rf_permute, rf_sum)
from .textio import parse_poly

DEFAULT_MAX_ARITY = 4

Scalar = Union[int, Fraction]


class ArityLimitError(ValueError):
    """A product would exceed the engine's configured maximum weight."""


class KernelCertificationError(RuntimeError):
    """Neither slot orientation satisfies the reflection identity."""


class Orientation(Enum):
    FORWARD = "forward"
    REVERSED = "reversed"


@dataclass(frozen=True)
class ShuffleElement:
    """A weight-graded element: an arity plus a rational-function value."""

    arity: int
    value: RationalFunction

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError("arity must be >= 0")

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        if self.arity != other.arity:
            raise ArityLimitError(
                f"cannot add weight {self.arity} to weight {other.arity}")
        return ShuffleElement(self.arity, rf_add(self.value, other.value))

    def __sub__(self, other: "ShuffleElement") -> "ShuffleElement":
        return self + (-other)

    def __neg__(self) -> "ShuffleElement":
        return ShuffleElement(self.arity, -self.value)

    def scale(self, c: Union[Scalar, LaurentPoly]) -> "ShuffleElement":
        return ShuffleElement(self.arity, self.value * c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return self.arity == other.arity and rf_equal(self.value, other.value)

    __hash__ = None

    def cancel(self) -> "ShuffleElement":
        return ShuffleElement(self.arity, rf_cancel(self.value))


class ShuffleEngine:
    """Product, commutator and relation checks for the shuffle model.

    ``invert_kernel_params`` replaces ``q1, q2`` by their inverses in the
    kernel; it exists so that the orientation self-certification can be
    exercised on the relabeled model (whose certified orientation is the
    reversed one).  The default kernel certifies as forward.
    """

    def __init__(self, max_arity: int = DEFAULT_MAX_ARITY,
                 orientation: Optional[Orientation] = None,
                 invert_kernel_params: bool = False) -> None:
        if max_arity < 2:
            raise ValueError("max_arity must be at least 2")
        self.max_arity = max_arity
        names = ("q1", "q2") + tuple(f"z{i}" for i in range(1, max_arity + 1))
        self.ring = RingContext(names)
        self._invert_kernel_params = invert_kernel_params
        if orientation is None:
            for candidate in (Orientation.FORWARD, Orientation.REVERSED):
                if self.kernel_reflection_check(candidate):
                    orientation = candidate
                    break
            else:
                raise KernelCertificationError(
                    "kernel fails the reflection identity in both orientations")
        else:
            if not self.kernel_reflection_check(orientation):
                raise KernelCertificationError(
                    f"kernel fails the reflection identity with {orientation.value}")
        self.orientation = orientation

    # -- building blocks ----------------------------------------------

    def _z(self, i: int, power: int = 1) -> LaurentPoly:
        return LaurentPoly.variable(self.ring, f"z{i}", power)

    def zeta(self, i: int, j: int) -> RationalFunction:
        """The kernel attached to the ratio ``zi / zj``, cleared of ``zj``
        powers: ``(zj - q1*zi)(zj - q2*zi) / ((zj - zi)(zj - q1*q2*zi))``."""
        if i == j:
            raise DegenerateRatioError(f"kernel ratio z{i}/z{i} degenerates")
        zi, zj = self._z(i), self._z(j)
        q1 = LaurentPoly.variable(self.ring, "q1")
        q2 = LaurentPoly.variable(self.ring, "q2")
        if self._invert_kernel_params:
            q1 = LaurentPoly.variable(self.ring, "q1", -1)
            q2 = LaurentPoly.variable(self.ring, "q2", -1)
        num = (zj - q1 * zi) * (zj - q2 * zi)
        return RationalFunction(num, [(zj - zi, 1), (zj - q1 * q2 * zi, 1)])

    def _cross_factor(self, left_slot: int, right_slot: int) -> RationalFunction:
        if self.orientation is Orientation.FORWARD:
            return self.zeta(left_slot, right_slot)
        return self.zeta(right_slot, left_slot)

    def scalar(self, c: Union[Scalar, LaurentPoly]) -> ShuffleElement:
        if isinstance(c, LaurentPoly):
            return ShuffleElement(0, RationalFunction.from_poly(c))
        return ShuffleElement(0, RationalFunction.from_poly(
            LaurentPoly.const(self.ring, c)))

    def make_e(self, k: int) -> ShuffleElement:
        """The degree-``k`` weight-1 generator ``z1^k``."""
        return ShuffleElement(1, RationalFunction.from_poly(self._z(1, k)))

    def from_text(self, arity: int, text: str) -> ShuffleElement:
        return ShuffleElement(arity, RationalFunction.from_poly(
            parse_poly(text, self.ring)))

    # -- the product --------------------------------------------------

    def shuffle_mul(self, F: ShuffleElement, G: ShuffleElement) -> ShuffleElement:
        """Kernel-weighted shuffle product; the result has the summed weight."""
        n, m = F.arity, G.arity
        total_arity = n + m
        if total_arity > self.max_arity:
            raise ArityLimitError(
                f"product weight {total_arity} exceeds maximum {self.max_arity}")
        if n == 0 or m == 0:
            return ShuffleElement(total_arity, rf_mul(F.value, G.value))
        pieces = []
        slots = range(1, total_arity + 1)
        for S in itertools.combinations(slots, n):
            T = tuple(s for s in slots if s not in S)
            sigmaF = _slot_permutation(list(range(1, n + 1)), list(S), self.max_arity)
            sigmaG = _slot_permutation(list(range(1, m + 1)), list(T), self.max_arity)
            piece = rf_mul(rf_permute(F.value, sigmaF), rf_permute(G.value, sigmaG))
            for i in S:
                for j in T:
                    piece = rf_mul(piece, self._cross_factor(i, j))
            pieces.append(piece)
        return ShuffleElement(total_arity, rf_cancel(rf_sum(pieces)))

    def commutator(self, F: ShuffleElement, G: ShuffleElement) -> ShuffleElement:
        return (self.shuffle_mul(F, G) - self.shuffle_mul(G, F)).cancel()

    # -- symmetry, scaling --------------------------------------------

    def is_symmetric(self, F: ShuffleElement) -> bool:
        """Invariance under every adjacent transposition of the slots."""
        for i in range(1, F.arity):
            sigma = {f"z{i}": f"z{i + 1}", f"z{i + 1}": f"z{i}"}
            if not rf_equal(rf_permute(F.value, sigma), F.value):
                return False
        return True

    def scale_shift(self, F: ShuffleElement) -> ShuffleElement:
        """Multiply by ``z1 * ... * zn``; shifts every degree index by one."""
        prod = LaurentPoly.const(self.ring, 1)
        for i in range(1, F.arity + 1):
            prod = prod * self._z(i)
        return ShuffleElement(F.arity, F.value * prod)

    # -- the exchange and Serre identities ----------------------------

    def exchange_prefactor_coefficients(self, inverted: bool = False) -> list[LaurentPoly]:
        """Coefficients ``a0..a3`` of the cubic ``P(z, w) = sum ai z^(3-i) w^i``
        whose roots in ``z/w`` are ``q1``, ``q2`` and ``1/(q1*q2)``; with
        ``inverted`` the three roots are replaced by their inverses."""
        ring = self.ring
        e = 1 if not inverted else -1
        mus = [LaurentPoly.variable(ring, "q1", e),
               LaurentPoly.variable(ring, "q2", e),
               LaurentPoly.monomial(ring, {"q1": -e, "q2": -e})]
        one = LaurentPoly.const(ring, 1)
        elem = [one,
                mus[0] + mus[1] + mus[2],
                mus[0] * mus[1] + mus[0] * mus[2] + mus[1] * mus[2],
                mus[0] * mus[1] * mus[2]]
        return [elem[i] * ((-1) ** i) for i in range(4)]

    def _prefactor(self, inverted: bool) -> LaurentPoly:
        coeffs = self.exchange_prefactor_coefficients(inverted)
        out = LaurentPoly.zero(self.ring)
        for i, a in enumerate(coeffs):
            out = out + a * self._z(1, 3 - i) * self._z(2, i)
        return out

    def kernel_reflection_check(self, orientation: Optional[Orientation] = None) -> bool:
        """The two-slot identity equivalent to the exchange relation:
        ``P * kernel(ratio) == P-inverted * kernel(reversed ratio)`` where
        the ratio order is dictated by the orientation under test."""
        if orientation is None:
            orientation = self.orientation
        P = self._prefactor(inverted=False)
        Pinv = self._prefactor(inverted=True)
        z12 = self.zeta(1, 2)
        z21 = self.zeta(2, 1)
        if orientation is Orientation.FORWARD:
            lhs = rf_mul(RationalFunction.from_poly(P), z12)
            rhs = rf_mul(RationalFunction.from_poly(Pinv), z21)
        else:
            lhs = rf_mul(RationalFunction.from_poly(P), z21)
            rhs = rf_mul(RationalFunction.from_poly(Pinv), z12)
        return rf_equal(lhs, rhs)

    def relation21_defect(self, k: int, l: int) -> ShuffleElement:
        """The coefficient extracted at bidegree ``(k, l)`` of the exchange
        relation for the degree generating series; zero iff the relation
        holds at that bidegree."""
        a = self.exchange_prefactor_coefficients(inverted=False)
        ainv = self.exchange_prefactor_coefficients(inverted=True)
        total: Optional[ShuffleElement] = None
        for i in range(4):
            left = self.shuffle_mul(self.make_e(k + 3 - i), self.make_e(l + i))
            right = self.shuffle_mul(self.make_e(l + i), self.make_e(k + 3 - i))
            piece = left.scale(a[i]) - right.scale(ainv[i])
            total = piece if total is None else total + piece
        assert total is not None
        return total.cancel()

    def serre_defect(self, k: int) -> ShuffleElement:
        """The weight-3 element ``[[e(k+1), e(k-1)], e(k)]``; its vanishing
        is the cubic Serre identity at degree ``k``."""
        inner = self.commutator(self.make_e(k + 1), self.make_e(k - 1))
        return self.commutator(inner, self.make_e(k)).cancel()


def _slot_permutation(src: list[int], dst: list[int], max_arity: int) -> dict[str, str]:
    """A permutation of z-slots sending src[i] -> dst[i], completed
    arbitrarily (but deterministically) on the remaining slots."""
    mapping = {}
    used = set(dst)
    free = [i for i in range(1, max_arity + 1) if i not in used]
    rest = [i for i in range(1, max_arity + 1) if i not in src]
    for s, d in zip(src, dst):
        mapping[s] = d
    for s, d in zip(rest, free):
        mapping[s] = d
    return {f"z{s}": f"z{d}" for s, d in mapping.items() if s != d}


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def element_to_text(e: ShuffleElement) -> str:
    """Multi-line form: arity header, numerator, then denominator factors."""
    lines = [f"arity: {e.arity}", f"num: {e.value.num}"]
    for f, m in e.value.sorted_factors():
        lines.append(f"den: {f} ^ {m}")
    return "\n".join(lines) + "\n"


def element_from_text(text: str, engine: ShuffleEngine) -> ShuffleElement:
    arity: Optional[int] = None
    num: Optional[LaurentPoly] = None
    factors: list[tuple[LaurentPoly, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("arity:"):
            arity = int(line[len("arity:"):].strip())
        elif line.startswith("num:"):
            num = parse_poly(line[len("num:"):], engine.ring)
        elif line.startswith("den:"):
            body = line[len("den:"):]
            poly_text, _, mult_text = body.rpartition("^")
            factors.append((parse_poly(poly_text, engine.ring), int(mult_text)))
        else:
            raise ValueError(f"line {lineno}: unrecognized element line {line!r}")
    if arity is None or num is None:
        raise ValueError("element text requires 'arity:' and 'num:' lines")
    return ShuffleElement(arity, RationalFunction(num, factors))
