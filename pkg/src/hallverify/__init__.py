"""Exact symbolic verification of a family of algebraic identities and
the commuting-matrix ideal catalog backing them.

Layers, bottom up:

* :mod:`hallverify.rings` / :mod:`hallverify.ratfunc` — sparse Laurent
  polynomials over the rationals and rational functions with factored
  denominators, all arithmetic exact;
* :mod:`hallverify.textio` — text syntax for polynomials and ideal
  fixture files;
* :mod:`hallverify.shuffle` — the kernel-weighted shuffle product and
  the exchange / cubic identities checked as exact rational functions;
* :mod:`hallverify.formal` — the commutator rewrite calculus with
  replayable traces;
* :mod:`hallverify.groebner` — Groebner bases, dimension, Hilbert
  numerators, singular loci, chart smoothness, regular sequences;
* :mod:`hallverify.schemes` — the curated ideal catalog bound to
  expected invariants;
* :mod:`hallverify.report` / :mod:`hallverify.cli` — the ``hall-verify``
  runner.
"""

from .formal import (
    E1,
    E2,
    E3,
    AffineIndex,
    FormalSum,
    FormalSymbol,
    RewriteTrace,
    UnsupportedBracketError,
    bracket,
    bracket_symbols,
    serre_reduce,
)
from .groebner import (
    EMPTY,
    GREVLEX,
    LEX,
    EmptyVarietyError,
    GroebnerBasis,
    Ideal,
    MonomialOrder,
    ParameterError,
    buchberger,
    chart_smooth_check,
    hilbert_numerator,
    is_groebner,
    krull_dim,
    normal_form,
    regular_sequence_check,
    singular_locus_dim,
)
from .ratfunc import (
    DegenerateRatioError,
    RationalFunction,
    rf_add,
    rf_cancel,
    rf_equal,
    rf_mul,
    rf_sum,
)
from .report import CheckResult, Report, strip_timings
from .rings import LaurentPoly, RingContext, RingMismatchError, exact_div
from .schemes import (
    CATALOG_NAMES,
    CatalogError,
    SchemeSpec,
    VerificationResult,
    build_scheme,
    run_all,
    verify_chart_reducedness,
    verify_cm_evidence,
    verify_dimension,
    verify_smooth_locus,
)
from .shuffle import (
    ArityLimitError,
    KernelCertificationError,
    Orientation,
    ShuffleElement,
    ShuffleEngine,
)
from .textio import ParseError, format_ideal_text, load_ideal_file, parse_poly

__version__ = "0.1.0"

__all__ = [
    "AffineIndex", "ArityLimitError", "bracket", "bracket_symbols",
    "build_scheme", "buchberger", "CATALOG_NAMES", "CatalogError",
    "chart_smooth_check", "CheckResult", "DegenerateRatioError", "E1", "E2",
    "E3", "EMPTY", "EmptyVarietyError", "exact_div", "format_ideal_text",
    "FormalSum", "FormalSymbol", "GREVLEX", "GroebnerBasis",
    "hilbert_numerator", "Ideal", "is_groebner", "KernelCertificationError",
    "krull_dim", "LaurentPoly", "LEX", "load_ideal_file", "MonomialOrder",
    "normal_form", "Orientation", "ParameterError", "ParseError",
    "parse_poly", "RationalFunction", "regular_sequence_check", "Report",
    "RewriteTrace", "rf_add", "rf_cancel", "rf_equal", "rf_mul", "rf_sum",
    "RingContext", "RingMismatchError", "run_all", "SchemeSpec",
    "serre_reduce", "ShuffleElement", "ShuffleEngine", "singular_locus_dim",
    "strip_timings", "UnsupportedBracketError", "VerificationResult",
    "verify_chart_reducedness", "verify_cm_evidence", "verify_dimension",
    "verify_smooth_locus",
]
