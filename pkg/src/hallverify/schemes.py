"""Catalog of commuting-matrix ideals bound to expected invariants.

Each entry names an explicit ideal (shipped as a fixture file in the
ideal text format), the invariants it is expected to satisfy, and which
verification procedures apply:

* ``verify_dimension`` — Krull dimension of the quotient, computed under
  two monomial orders for the affine entries as a cross-check;
* ``verify_smooth_locus`` — dimension of the locus where the Jacobian
  drops below full expected rank;
* ``verify_substitution_vanishing`` — entries whose diagonal labels are
  identified list the commutator entries that the identification is
  claimed to kill; the claim is checked symbolically, not assumed;
* ``verify_chart_reducedness`` — chart entries are checked on the chart
  where their distinguished polynomial is inverted: either the chart is
  certified smooth outright, or the solved presentation from eliminating
  transported variables is confirmed equal to the localized ideal and
  the single residual hypersurface is certified to have a small singular
  locus;
* ``verify_cm_evidence`` — complete-intersection entries must have
  exactly codimension many essential generators; the determinantal
  entries get a randomized system-of-parameters certificate instead
  (seeded, retried a bounded number of times).

Entries with identified diagonal labels store the identification as a
substitution (replace the later variable by the earlier one); the
substituted "essential" ideal in the smaller ring is what every check
runs on, mirroring how the dimension counts are stated.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from .groebner import (
    EMPTY,
    GREVLEX,
    LEX,
    GroebnerBasis,
    Ideal,
    LocusDim,
    buchberger,
    chart_smooth_check,
    krull_dim,
    random_linear_forms,
    regular_sequence_check,
    singular_locus_dim,
    _localize,
)
from .rings import LaurentPoly, RingContext
from .textio import load_ideal_file, parse_poly


class CatalogError(Exception):
    """Unknown catalog name or malformed catalog data."""


DEFAULT_SEED = 42
_SOP_MAX_DRAWS = 5


def default_fixture_dir() -> Path:
    """The fixture files packaged next to this module."""
    return Path(__file__).resolve().parent / "fixtures"


# ---------------------------------------------------------------------------
# Catalog metadata


@dataclass(frozen=True)
class ChartData:
    """Chart-local verification data for the glued models."""

    chart_text: str
    # Solved presentation on the chart (the localization relation is
    # appended automatically); empty when the chart is certified smooth.
    elimination_texts: tuple[str, ...] = ()
    residual_vars: tuple[str, ...] = ()
    residual_text: Optional[str] = None


@dataclass(frozen=True)
class _Entry:
    name: str
    fixture: str
    expected_dim: int
    # int, EMPTY, or None for "unchecked"
    expected_singular_dim: Union[int, LocusDim, None]
    cm_plan: str  # complete_intersection | sop_certificate | none
    substitutions: tuple[tuple[str, str], ...] = ()
    auto_vanishing: tuple[str, ...] = ()
    normal_flagged: bool = False
    sop_count: Optional[int] = None
    chart: Optional[ChartData] = None


_CATALOG: tuple[_Entry, ...] = (
    _Entry("flag_xy", "flag_xy", 5, 2, "complete_intersection",
           normal_flagged=True),
    _Entry("flag_xx", "flag_xx", 4, EMPTY, "complete_intersection",
           substitutions=(("X22", "X11"), ("Y22", "Y11")),
           auto_vanishing=("X12*(Y11 - Y22) - Y12*(X11 - X22)",),
           normal_flagged=True),
    _Entry("flag_xyz", "flag_xyz", 9, 6, "complete_intersection",
           normal_flagged=True),
    _Entry("flag_xxy", "flag_xxy", 8, 6, "complete_intersection",
           substitutions=(("X33", "X22"), ("Y33", "Y22")),
           auto_vanishing=("X23*(Y22 - Y33) - Y23*(X22 - X33)",),
           normal_flagged=True),
    _Entry("flag_yxx", "flag_yxx", 8, 6, "complete_intersection",
           substitutions=(("X22", "X11"), ("Y22", "Y11")),
           auto_vanishing=("X12*(Y11 - Y22) - Y12*(X11 - X22)",),
           normal_flagged=True),
    _Entry("flag_xyx", "flag_xyx", 8, 4, "sop_certificate",
           substitutions=(("X33", "X11"), ("Y33", "Y11")),
           normal_flagged=True, sop_count=8),
    _Entry("minors_core", "minors_core", 4, 0, "sop_certificate",
           normal_flagged=True, sop_count=4),
    _Entry("Yprime_chart_h11", "yprime", 8, None, "none",
           chart=ChartData("h11")),
    _Entry("Yprime_chart_h12", "yprime", 8, None, "none",
           chart=ChartData("h12")),
    _Entry("Yplus_chart_g23", "yplus", 10, None, "none",
           chart=ChartData(
               "g23",
               elimination_texts=(
                   "g23*X32 - g22*X0",
                   "g23*Xp32 - g33*X0",
                   "g23*Y32 - g22*Y0",
                   "g23*Yp32 - g33*Y0",
                   "X21*Y0 - Y21*X0",
               ),
               residual_vars=("X21", "X0", "Y21", "Y0"),
               residual_text="X21*Y0 - Y21*X0")),
    _Entry("Yplus_chart_g22g33", "yplus", 10, None, "none",
           chart=ChartData(
               "g22*g33",
               elimination_texts=(
                   "g22*Xp32 - g33*X32",
                   "g22*X0 - g23*X32",
                   "g22*Yp32 - g33*Y32",
                   "g22*Y0 - g23*Y32",
                   "X21*Y32 - X32*Y21",
               ),
               residual_vars=("X21", "X32", "Y21", "Y32"),
               residual_text="X21*Y32 - X32*Y21")),
)

_BY_NAME = {e.name: e for e in _CATALOG}

CATALOG_NAMES: tuple[str, ...] = tuple(e.name for e in _CATALOG)


# ---------------------------------------------------------------------------
# Built scheme data


@dataclass(frozen=True)
class SchemeSpec:
    """A catalog ideal with its expected invariants, ready to verify."""

    name: str
    ambient: RingContext
    generators: tuple[LaurentPoly, ...]
    expected_dim: int
    expected_singular_dim: Union[int, LocusDim, None]
    cm_plan: str
    substitutions: tuple[tuple[str, str], ...]
    auto_vanishing: tuple[str, ...]
    normal_flagged: bool
    sop_count: Optional[int]
    chart: Optional[ChartData]

    def essential_ring(self) -> RingContext:
        dropped = {old for old, _ in self.substitutions}
        if not dropped:
            return self.ambient
        return RingContext(tuple(v for v in self.ambient.variables
                                 if v not in dropped))

    def essential_generators(self) -> tuple[LaurentPoly, ...]:
        ring = self.essential_ring()
        out = []
        for g in self.generators:
            for old, new in self.substitutions:
                g = g.substitute_variable(old, new)
            if self.substitutions:
                g = g.project(ring)
            if not g.is_zero:
                out.append(g)
        return tuple(out)

    def essential_ideal(self) -> Ideal:
        return Ideal(self.essential_ring(), self.essential_generators())

    def codim(self) -> int:
        return self.essential_ring().size - self.expected_dim


def build_scheme(name: str,
                 fixtures_dir: Optional[Union[str, Path]] = None) -> SchemeSpec:
    """Load one catalog entry, its fixture file, and its expectations."""
    entry = _BY_NAME.get(name)
    if entry is None:
        raise CatalogError(
            f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")
    base = Path(fixtures_dir) if fixtures_dir is not None else default_fixture_dir()
    path = base / f"{entry.fixture}.ideal"
    if not path.is_file():
        raise CatalogError(f"fixture file not found: {path}")
    ring, gens = load_ideal_file(path)
    spec = SchemeSpec(
        name=entry.name,
        ambient=ring,
        generators=tuple(gens),
        expected_dim=entry.expected_dim,
        expected_singular_dim=entry.expected_singular_dim,
        cm_plan=entry.cm_plan,
        substitutions=entry.substitutions,
        auto_vanishing=entry.auto_vanishing,
        normal_flagged=entry.normal_flagged,
        sop_count=entry.sop_count,
        chart=entry.chart,
    )
    if not spec.generators:
        raise CatalogError(f"{name}: fixture has no generators")
    if spec.expected_dim >= ring.size:
        raise CatalogError(f"{name}: expected dimension must be below the "
                           f"ambient variable count")
    for old, new in spec.substitutions:
        ring.index(old), ring.index(new)  # raises if absent
    return spec


# ---------------------------------------------------------------------------
# Verification results


@dataclass
class VerificationResult:
    """One named check on one catalog entry.  ``passed`` is always exactly
    ``expected == computed``."""

    scheme: str
    check: str
    expected: object
    computed: object
    passed: bool
    seconds: float
    note: str = ""

    @classmethod
    def make(cls, scheme: str, check: str, expected: object, computed: object,
             t0: float, note: str = "") -> "VerificationResult":
        return cls(scheme=scheme, check=check, expected=expected,
                   computed=computed, passed=(expected == computed),
                   seconds=time.perf_counter() - t0, note=note)

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "check": self.check,
            "expected": str(self.expected),
            "computed": str(self.computed),
            "pass": self.passed,
            "seconds": round(self.seconds, 4),
            "note": self.note,
        }


def _chart_poly(spec: SchemeSpec) -> LaurentPoly:
    assert spec.chart is not None
    return parse_poly(spec.chart.chart_text, spec.ambient)


# ---------------------------------------------------------------------------
# Verification procedures


def verify_dimension(spec: SchemeSpec) -> VerificationResult:
    """Krull dimension against the expected value.

    Affine entries are computed under grevlex *and* lex: the dimension is
    order-independent, so disagreement exposes an engine defect.  Chart
    entries are localized at their chart polynomial first.
    """
    t0 = time.perf_counter()
    ideal = spec.essential_ideal()
    if spec.chart is not None:
        loc, _ = _localize(ideal, _chart_poly(spec))
        computed: object = krull_dim(loc)
        note = f"on the chart {spec.chart.chart_text} != 0"
    else:
        d_grevlex = krull_dim(ideal, GREVLEX)
        d_lex = krull_dim(ideal, LEX)
        computed = d_grevlex if d_grevlex == d_lex else \
            f"grevlex={d_grevlex}, lex={d_lex}"
        note = "grevlex and lex agree"
    return VerificationResult.make(spec.name, "dimension",
                                   spec.expected_dim, computed, t0, note)


def verify_smooth_locus(spec: SchemeSpec) -> VerificationResult:
    """Dimension of the rank-drop locus of the Jacobian, against expected."""
    if spec.expected_singular_dim is None:
        raise CatalogError(f"{spec.name}: singular locus is not checked "
                           f"for this entry")
    t0 = time.perf_counter()
    ideal = spec.essential_ideal()
    computed = singular_locus_dim(ideal, spec.codim())
    return VerificationResult.make(spec.name, "singular_locus_dim",
                                   spec.expected_singular_dim, computed, t0)


def verify_substitution_vanishing(spec: SchemeSpec) -> VerificationResult:
    """Check that each listed polynomial dies under the identifications."""
    t0 = time.perf_counter()
    ring = spec.essential_ring()
    survivors = []
    for text in spec.auto_vanishing:
        g = parse_poly(text, spec.ambient)
        for old, new in spec.substitutions:
            g = g.substitute_variable(old, new)
        g = g.project(ring)
        if not g.is_zero:
            survivors.append(text)
    return VerificationResult.make(
        spec.name, "substitution_vanishing", [], survivors, t0,
        note=f"{len(spec.auto_vanishing)} claimed identities")


def verify_chart_reducedness(spec: SchemeSpec) -> VerificationResult:
    """Chart-local reducedness evidence.

    Charts without elimination data must be certified smooth on the chart
    (smooth implies reduced).  Charts with elimination data must have
    their localized ideal equal to the solved presentation, and the
    residual hypersurface must have a singular locus of dimension 0 —
    strictly below the hypersurface dimension, so the hypersurface (a
    complete intersection, hence with no embedded components) is
    generically smooth and therefore reduced.
    """
    if spec.chart is None:
        raise CatalogError(f"{spec.name}: not a chart entry")
    t0 = time.perf_counter()
    ideal = spec.essential_ideal()
    chart = _chart_poly(spec)
    if not spec.chart.elimination_texts:
        computed: object = {"chart_smooth": chart_smooth_check(ideal, chart)}
        expected: object = {"chart_smooth": True}
        return VerificationResult.make(spec.name, "chart_reducedness",
                                       expected, computed, t0)
    loc, loc_ring = _localize(ideal, chart)
    gb_loc = buchberger(loc)
    elim = [parse_poly(s, loc_ring) for s in spec.chart.elimination_texts]
    elim.append(LaurentPoly.variable(loc_ring, "t") * chart.project(loc_ring)
                - LaurentPoly.const(loc_ring, 1))
    gb_elim = buchberger(Ideal(loc_ring, elim))
    match = (all(gb_elim.contains(g) for g in loc.generators)
             and all(gb_loc.contains(g) for g in elim))
    res_ring = RingContext(spec.chart.residual_vars)
    res_ideal = Ideal(res_ring, (parse_poly(spec.chart.residual_text, res_ring),))
    res_dim = krull_dim(res_ideal)
    res_sing = singular_locus_dim(res_ideal, 1)
    computed = {
        "elimination_match": match,
        "residual_dim": res_dim,
        "residual_singular_dim": res_sing,
    }
    expected = {
        "elimination_match": True,
        "residual_dim": len(spec.chart.residual_vars) - 1,
        "residual_singular_dim": 0,
    }
    return VerificationResult.make(spec.name, "chart_reducedness",
                                   expected, computed, t0)


def verify_cm_evidence(spec: SchemeSpec,
                       seed: int = DEFAULT_SEED) -> VerificationResult:
    """Depth evidence per the entry's plan.

    ``complete_intersection``: the essential generator count must equal
    the codimension (codimension-many equations cut a complete
    intersection, which is automatically Cohen-Macaulay).

    ``sop_certificate``: draw seeded random linear forms, one per
    dimension, and certify them as a regular sequence on the quotient
    (each form must drop the dimension by one and divide the Hilbert
    numerator evolution exactly).  A draw can be unlucky, so up to
    ``_SOP_MAX_DRAWS`` draws are tried; the first success certifies.
    """
    if spec.cm_plan == "none":
        raise CatalogError(f"{spec.name}: no depth evidence is planned")
    t0 = time.perf_counter()
    ideal = spec.essential_ideal()
    if spec.cm_plan == "complete_intersection":
        return VerificationResult.make(
            spec.name, "cm_evidence", spec.codim(),
            len(spec.essential_generators()), t0,
            note="complete intersection: essential generators = codimension")
    rng = random.Random(f"{seed}:{spec.name}")
    count = spec.sop_count if spec.sop_count is not None else spec.expected_dim
    for draw in range(_SOP_MAX_DRAWS):
        thetas = random_linear_forms(ideal.ring, count, rng)
        if regular_sequence_check(ideal, thetas):
            return VerificationResult.make(
                spec.name, "cm_evidence", True, True, t0,
                note=f"regular sequence of {count} linear forms, draw {draw}, "
                     f"seed {seed}")
    return VerificationResult.make(
        spec.name, "cm_evidence", True, False, t0,
        note=f"no regular sequence found in {_SOP_MAX_DRAWS} seeded draws")


def run_all(names: Optional[Sequence[str]] = None,
            fixtures_dir: Optional[Union[str, Path]] = None,
            seed: int = DEFAULT_SEED) -> list[VerificationResult]:
    """Run every applicable check for the selected entries (all by default).

    An explicitly empty selection yields an empty result list.  Check
    failures are collected as failed results; only malformed selections
    raise.
    """
    if names is None:
        names = CATALOG_NAMES
    results: list[VerificationResult] = []
    for name in names:
        if name not in _BY_NAME:
            raise CatalogError(
                f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")
    def guarded(label: str, scheme: str, thunk) -> VerificationResult:
        t0 = time.perf_counter()
        try:
            return thunk()
        except Exception as exc:
            # A broken check (e.g. a mutated fixture whose dimension no
            # longer matches its declared codimension) is a failure to
            # report, not a reason to abort the remaining entries.
            return VerificationResult.make(
                scheme, label, "completes", f"error: {exc}", t0)

    for name in names:
        spec = build_scheme(name, fixtures_dir)
        results.append(guarded("dimension", name,
                               lambda s=spec: verify_dimension(s)))
        if spec.expected_singular_dim is not None:
            results.append(guarded("singular_locus_dim", name,
                                   lambda s=spec: verify_smooth_locus(s)))
        if spec.auto_vanishing:
            results.append(guarded("substitution_vanishing", name,
                                   lambda s=spec: verify_substitution_vanishing(s)))
        if spec.chart is not None:
            results.append(guarded("chart_reducedness", name,
                                   lambda s=spec: verify_chart_reducedness(s)))
        if spec.cm_plan != "none":
            results.append(guarded("cm_evidence", name,
                                   lambda s=spec: verify_cm_evidence(s, seed)))
    return results


def aggregate_pass(results: Sequence[VerificationResult]) -> bool:
    return all(r.passed for r in results)
