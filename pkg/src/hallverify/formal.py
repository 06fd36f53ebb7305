"""Rank-graded commutator rewrite calculus with a symbolic degree index.

Symbols ``E1(i)``, ``E2(i, j)``, ``E3(i, j, l)`` stand for graded classes
of rank 1, 2 and 3; every index is an integer offset from one symbolic
base rendered ``k``.  The rewrite rules only ever branch on comparisons
of two indices and sum over ranges whose lengths are index differences,
so a derivation carried out at the symbolic base is uniform: it holds
for every integer value of the base at once.

Two rules generate the system:

* ``[E1(d), E1(c)] = sum_{a=c}^{d-1} E2(a, d+c-a)`` when ``d >= c``,
  extended antisymmetrically; the sum is empty when ``d == c``;
* ``[E2(d1, d2), E1(c)]`` expands into two range sums, one splitting
  ``c`` against ``d1`` (new rank-3 symbol ``E3(a, d1+c-a, d2)``) and one
  against ``d2`` (``E3(d1, a, d2+c-a)``); each sum carries a minus sign
  when ``c`` has reached the entry it splits against and a plus sign
  otherwise, and is empty when ``c`` equals that entry.

``[E1, E2]`` is handled through antisymmetry of the commutator.  Any
other combination (rank 2 against rank 2, rank 3 against anything) has
no rule and raises :class:`UnsupportedBracketError` instead of guessing.

Reductions can record a :class:`RewriteTrace`: one step per elementary
symbol bracket, keeping the signed output terms *before* like-term
merging so that a cancellation between equal symbols of opposite sign
stays visible in the transcript.  ``RewriteTrace.replay`` re-runs every
recorded step through the rules and confirms the trace is faithful.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union


class UnsupportedBracketError(Exception):
    """Raised for brackets the rewrite system has no rule for."""


# ---------------------------------------------------------------------------
# Indices


@dataclass(frozen=True, order=True)
class AffineIndex:
    """The symbolic base plus an integer offset (``k + offset``)."""

    offset: int = 0

    def __add__(self, n: int) -> "AffineIndex":
        return AffineIndex(self.offset + n)

    def __sub__(self, other: Union[int, "AffineIndex"]) -> Union[int, "AffineIndex"]:
        if isinstance(other, AffineIndex):
            return self.offset - other.offset
        return AffineIndex(self.offset - other)

    def instantiate(self, base_value: int) -> int:
        return base_value + self.offset

    def render(self, base: str = "k") -> str:
        if self.offset == 0:
            return base
        sign = "+" if self.offset > 0 else "-"
        return f"{base}{sign}{abs(self.offset)}"


def _offset_of(i: Union[int, AffineIndex]) -> int:
    return i.offset if isinstance(i, AffineIndex) else int(i)


# ---------------------------------------------------------------------------
# Symbols and integer combinations of symbols


@dataclass(frozen=True, order=True)
class FormalSymbol:
    """A rank-``r`` class with ``r`` affine indices, stored as offsets."""

    rank: int
    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rank not in (1, 2, 3):
            raise ValueError(f"rank must be 1, 2 or 3, got {self.rank}")
        if len(self.offsets) != self.rank:
            raise ValueError(
                f"rank {self.rank} symbol needs {self.rank} indices, "
                f"got {len(self.offsets)}")

    def render(self, base: str = "k") -> str:
        inside = ",".join(AffineIndex(o).render(base) for o in self.offsets)
        return f"E{self.rank}({inside})"

    def instantiate(self, base_value: int) -> tuple[int, ...]:
        return tuple(base_value + o for o in self.offsets)


def E1(i: Union[int, AffineIndex]) -> FormalSymbol:
    return FormalSymbol(1, (_offset_of(i),))


def E2(i: Union[int, AffineIndex], j: Union[int, AffineIndex]) -> FormalSymbol:
    return FormalSymbol(2, (_offset_of(i), _offset_of(j)))


def E3(i: Union[int, AffineIndex], j: Union[int, AffineIndex],
       l: Union[int, AffineIndex]) -> FormalSymbol:
    return FormalSymbol(3, (_offset_of(i), _offset_of(j), _offset_of(l)))


class FormalSum:
    """Finite integer combination of :class:`FormalSymbol` terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[FormalSymbol, int]] = None) -> None:
        clean: dict[FormalSymbol, int] = {}
        for s, c in (terms or {}).items():
            if c:
                clean[s] = int(c)
        self.terms = clean

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def single(cls, symbol: FormalSymbol, coeff: int = 1) -> "FormalSum":
        return cls({symbol: coeff})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[FormalSymbol, int]]) -> "FormalSum":
        out: dict[FormalSymbol, int] = {}
        for s, c in pairs:
            v = out.get(s, 0) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return cls(out)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[FormalSymbol, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalSum):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for s, c in other.terms.items():
            v = out.get(s, 0) + c
            if v:
                out[s] = v
            else:
                del out[s]
        return FormalSum(out)

    def __neg__(self) -> "FormalSum":
        return FormalSum({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, n: int) -> "FormalSum":
        if not isinstance(n, int):
            return NotImplemented
        return FormalSum({s: c * n for s, c in self.terms.items()})

    __rmul__ = __mul__

    def render(self, base: str = "k") -> str:
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.sorted_terms():
            mag = abs(c)
            body = s.render(base) if mag == 1 else f"{mag}*{s.render(base)}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum({self.render()})"


# ---------------------------------------------------------------------------
# The two rewrite rules, exposed pre-merge for tracing

RULE_RANK1_RANK1 = "rank1-rank1"
RULE_RANK2_RANK1 = "rank2-rank1"
RULE_RANK1_RANK2 = "rank1-rank2"

SignedTerms = list[tuple[FormalSymbol, int]]


def _rank1_terms(d: int, c: int) -> SignedTerms:
    """[E1(d), E1(c)] pre-merge; antisymmetric in its arguments."""
    if d < c:
        return [(s, -sign) for s, sign in _rank1_terms(c, d)]
    return [(E2(a, d + c - a), 1) for a in range(c, d)]


def _rank2_rank1_terms(d1: int, d2: int, c: int) -> SignedTerms:
    """[E2(d1, d2), E1(c)] pre-merge, first-entry sum then second-entry sum."""
    out: SignedTerms = []
    if c >= d1:
        out.extend((E3(a, d1 + c - a, d2), -1) for a in range(d1, c))
    else:
        out.extend((E3(a, d1 + c - a, d2), 1) for a in range(c, d1))
    if c >= d2:
        out.extend((E3(d1, a, d2 + c - a), -1) for a in range(d2, c))
    else:
        out.extend((E3(d1, a, d2 + c - a), 1) for a in range(c, d2))
    return out


def symbol_bracket_terms(left: FormalSymbol,
                         right: FormalSymbol) -> tuple[str, SignedTerms]:
    """Dispatch one elementary bracket; returns (rule name, pre-merge terms)."""
    if left.rank == 1 and right.rank == 1:
        return RULE_RANK1_RANK1, _rank1_terms(left.offsets[0], right.offsets[0])
    if left.rank == 2 and right.rank == 1:
        d1, d2 = left.offsets
        return RULE_RANK2_RANK1, _rank2_rank1_terms(d1, d2, right.offsets[0])
    if left.rank == 1 and right.rank == 2:
        d1, d2 = right.offsets
        flipped = _rank2_rank1_terms(d1, d2, left.offsets[0])
        return RULE_RANK1_RANK2, [(s, -sign) for s, sign in flipped]
    raise UnsupportedBracketError(
        f"no rewrite rule for [rank {left.rank}, rank {right.rank}] brackets")


# ---------------------------------------------------------------------------
# Traced bilinear bracket


@dataclass(frozen=True)
class RewriteStep:
    """One elementary bracket: which rule fired, on what, with what output.

    ``output_terms`` is recorded before like-term merging, already scaled
    by ``coefficient`` (the product of the two input coefficients), so a
    cancelling pair of equal symbols with opposite signs is preserved.
    """

    rule: str
    left: FormalSymbol
    right: FormalSymbol
    coefficient: int
    output_terms: tuple[tuple[FormalSymbol, int], ...]

    def merged(self) -> FormalSum:
        return FormalSum.from_terms(self.output_terms)

    def rendered_input(self, base: str = "k") -> str:
        prefix = "" if self.coefficient == 1 else f"{self.coefficient}*"
        return f"{prefix}[{self.left.render(base)}, {self.right.render(base)}]"

    def to_dict(self, base: str = "k") -> dict:
        return {
            "rule": self.rule,
            "input": self.rendered_input(base),
            "output_terms": [[s.render(base), c] for s, c in self.output_terms],
            "normalized": self.merged().render(base),
        }


@dataclass
class BracketStage:
    """One call to :func:`bracket`: its two inputs, the elementary steps
    of the bilinear expansion, and the merged output."""

    left: FormalSum
    right: FormalSum
    steps: list[RewriteStep] = field(default_factory=list)
    output: FormalSum = field(default_factory=FormalSum.zero)

    def to_dict(self, base: str = "k") -> dict:
        return {
            "left": self.left.render(base),
            "right": self.right.render(base),
            "steps": [s.to_dict(base) for s in self.steps],
            "output": self.output.render(base),
        }


@dataclass
class RewriteTrace:
    """An expression, the bracket stages that reduced it, the result.

    A nested commutator reduces stage by stage; the output of one stage
    is an *input* of a later one, so stages record their own inputs and
    outputs instead of summing into the result directly.
    """

    expression: str
    stages: list[BracketStage] = field(default_factory=list)
    result: FormalSum = field(default_factory=FormalSum.zero)

    @property
    def steps(self) -> list[RewriteStep]:
        return [s for stage in self.stages for s in stage.steps]

    def replay(self) -> bool:
        """Re-run every stage through the rules from its recorded inputs;
        steps, stage outputs and the final result must all reproduce."""
        if not self.stages:
            return self.result.is_zero
        for stage in self.stages:
            fresh = RewriteTrace(expression="")
            out = bracket(stage.left, stage.right, fresh)
            redone = fresh.stages[0]
            if out != stage.output or redone.steps != stage.steps:
                return False
        return self.stages[-1].output == self.result

    def cancellation_pairs(self) -> list[tuple[FormalSymbol, int]]:
        """Symbols that appear with both signs inside a single step's
        pre-merge output (the visible cancellations)."""
        found = []
        for step in self.steps:
            per: dict[FormalSymbol, set[int]] = {}
            for s, c in step.output_terms:
                per.setdefault(s, set()).add(1 if c > 0 else -1)
            for s, signs in sorted(per.items()):
                if signs == {1, -1}:
                    found.append((s, step.coefficient))
        return found

    def to_dict(self, base: str = "k") -> dict:
        return {
            "expression": self.expression,
            "stages": [s.to_dict(base) for s in self.stages],
            "result": self.result.render(base),
        }

    def to_json(self, base: str = "k") -> str:
        return json.dumps(self.to_dict(base), indent=2, sort_keys=True)

    def render_text(self, base: str = "k") -> str:
        lines = [f"reduce {self.expression}"]
        n = 0
        for stage in self.stages:
            lines.append(f"  bracket [{stage.left.render(base)}, {stage.right.render(base)}]")
            for step in stage.steps:
                n += 1
                lines.append(f"  step {n}: {step.rule}  {step.rendered_input(base)}")
                if step.output_terms:
                    for s, c in step.output_terms:
                        mag = "" if abs(c) == 1 else f"{abs(c)}*"
                        lines.append(f"    {'+' if c > 0 else '-'} {mag}{s.render(base)}")
                else:
                    lines.append("    (empty sum)")
                lines.append(f"    = {step.merged().render(base)}")
            lines.append(f"  stage output: {stage.output.render(base)}")
        lines.append(f"result: {self.result.render(base)}")
        return "\n".join(lines)


def bracket(F: FormalSum, G: FormalSum,
            trace: Optional[RewriteTrace] = None) -> FormalSum:
    """Bilinear commutator of two sums, rewritten through the rules.

    When ``trace`` is given, appends one :class:`BracketStage` holding an
    elementary :class:`RewriteStep` per symbol pair.  Raises
    :class:`UnsupportedBracketError` when a symbol pair has no rule.
    """
    stage = BracketStage(left=F, right=G) if trace is not None else None
    total = FormalSum.zero()
    for sF, cF in F.sorted_terms():
        for sG, cG in G.sorted_terms():
            rule, terms = symbol_bracket_terms(sF, sG)
            coeff = cF * cG
            scaled = tuple((s, sign * coeff) for s, sign in terms)
            if stage is not None:
                stage.steps.append(RewriteStep(rule, sF, sG, coeff, scaled))
            total = total + FormalSum.from_terms(scaled)
    if stage is not None:
        stage.output = total
        trace.stages.append(stage)
    return total


def bracket_symbols(left: FormalSymbol, right: FormalSymbol) -> FormalSum:
    """Elementary bracket of two symbols, merged."""
    _, terms = symbol_bracket_terms(left, right)
    return FormalSum.from_terms(terms)


# ---------------------------------------------------------------------------
# The nested reduction


def serre_reduce(offset: int = 0,
                 with_trace: bool = True) -> tuple[FormalSum, Optional[RewriteTrace]]:
    """Reduce ``[[E1(k+1), E1(k-1)], E1(k)]`` (base shifted by ``offset``).

    Returns the normalized result together with the trace of every rule
    application.  The expected outcome is the zero sum, reached through a
    visible ``E3`` cancellation pair rather than by termwise vanishing.
    """
    hi = E1(offset + 1)
    lo = E1(offset - 1)
    mid = E1(offset)
    trace: Optional[RewriteTrace] = None
    if with_trace:
        expr = (f"[[{hi.render()}, {lo.render()}], {mid.render()}]")
        trace = RewriteTrace(expression=expr)
    inner = bracket(FormalSum.single(hi), FormalSum.single(lo), trace)
    outer = bracket(inner, FormalSum.single(mid), trace)
    if trace is not None:
        trace.result = outer
    return outer, trace
