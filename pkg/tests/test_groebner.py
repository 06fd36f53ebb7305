"""Groebner engine: bases, dimension, Hilbert data, smoothness checks.

The heavier computations are cross-checked against sympy, which serves as
an independent oracle: bases must agree exactly, and dimensions are
recomputed from sympy's leading terms by exhaustive search.
"""

import itertools
import random
from fractions import Fraction

import pytest
import sympy

from hallverify.groebner import (
    EMPTY,
    EmptyVarietyError,
    GREVLEX,
    Ideal,
    LEX,
    NotPolynomialError,
    ParameterError,
    buchberger,
    chart_smooth_check,
    hilbert_numerator,
    hilbert_series_coefficients,
    is_groebner,
    krull_dim,
    normal_form,
    order_by_name,
    random_linear_forms,
    regular_sequence_check,
    s_polynomial,
    singular_locus_dim,
)
from hallverify.rings import LaurentPoly, RingContext
from hallverify.schemes import default_fixture_dir
from hallverify.textio import load_ideal_file, parse_poly

R2 = RingContext(("x", "y"))
R3 = RingContext(("x", "y", "z"))


def I(ring, *texts):
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


# -- sympy oracle helpers ---------------------------------------------------


def sympy_env(ring):
    syms = {n: sympy.Symbol(n) for n in ring.variables}
    return syms, [syms[n] for n in ring.variables]


def to_sympy(p, syms):
    return sympy.sympify(str(p).replace("^", "**"), locals=syms)


def sympy_basis(ideal, order_name):
    syms, ordered = sympy_env(ideal.ring)
    gb = sympy.groebner([to_sympy(g, syms) for g in ideal.generators],
                        *ordered, order=order_name, domain="QQ")
    return {sympy.expand(e) for e in gb.exprs}, gb, ordered


def exhaustive_dim(lead_supports, nvars):
    """Dimension from leading-term supports by trying every variable
    subset, smallest first -- an independent check on the engine's
    branch-and-bound."""
    nonempty = [s for s in lead_supports if s]
    for size in range(nvars + 1):
        for combo in itertools.combinations(range(nvars), size):
            if all(set(combo) & s for s in nonempty):
                return nvars - size
    raise AssertionError("unreachable")


def sympy_dim(ideal):
    """Dimension computed entirely on the sympy route."""
    _, gb, ordered = sympy_basis(ideal, "grevlex")
    supports = []
    for e in gb.exprs:
        exps = sympy.Poly(e, *ordered).LM(order="grevlex").exponents
        supports.append(frozenset(i for i, x in enumerate(exps) if x))
    return exhaustive_dim(supports, len(ordered))


# -- bases ------------------------------------------------------------------


def test_textbook_lex_basis():
    gb = buchberger(I(R2, "x^2 + y^2 - 1", "x - y^3"), LEX)
    assert {str(g) for g in gb.basis} == {"x - y^3", "y^6 + y^2 - 1"}
    assert is_groebner(gb.basis, LEX)
    assert not is_groebner([parse_poly("x^2 + y^2 - 1", R2),
                            parse_poly("x - y^3", R2)], LEX)


def test_bases_match_sympy_on_random_ideals():
    rng = random.Random(23)
    for _ in range(10):
        gens = []
        for _ in range(rng.randint(2, 3)):
            p = LaurentPoly.zero(R3)
            for _ in range(rng.randint(2, 3)):
                exps = {v: rng.randint(0, 2) for v in R3.variables}
                p = p + LaurentPoly.monomial(R3, exps, rng.randint(-4, 4))
            if not p.is_zero:
                gens.append(p)
        if not gens:
            continue
        ideal = Ideal(R3, gens)
        for order, name in ((GREVLEX, "grevlex"), (LEX, "lex")):
            mine = buchberger(ideal, order)
            syms, _ = sympy_env(R3)
            theirs, _, _ = sympy_basis(ideal, name)
            assert {sympy.expand(to_sympy(g, syms)) for g in mine.basis} \
                == theirs


def test_normal_form_properties():
    ideal = I(R3, "x*y - z^2", "y^2 - x*z")
    gb = buchberger(ideal, GREVLEX)
    for g in ideal.generators:
        assert gb.contains(g)
    f = parse_poly("x^3*y + y*z - 4", R3)
    r = gb.reduce(f)
    assert gb.reduce(r) == r  # idempotent
    assert gb.contains(f - r)
    assert gb.contains(s_polynomial(gb.basis[0], gb.basis[1], GREVLEX))


def test_unit_and_zero_ideals():
    unit = buchberger(I(R3, "3"), GREVLEX)
    assert unit.is_unit
    with pytest.raises(EmptyVarietyError):
        krull_dim(unit)
    empty = buchberger(Ideal(R3, []), GREVLEX)
    assert krull_dim(empty) == 3
    assert hilbert_numerator(empty) == [1]


def test_laurent_generators_are_rejected():
    bad = LaurentPoly.monomial(R2, {"x": -1}, 1)
    with pytest.raises(NotPolynomialError):
        Ideal(R2, [bad])


def test_order_by_name():
    assert order_by_name("lex") is LEX
    assert order_by_name("grevlex") is GREVLEX
    with pytest.raises(ValueError):
        order_by_name("elimination")


# -- dimension and Hilbert data ---------------------------------------------


def test_dimension_matches_sympy_route():
    cases = [
        (I(R3, "x*y - z^2"), 2),
        (I(R3, "x*y - z^2", "x^2 - y*z"), 1),
        (I(R2, "x^2", "x*y"), 1),
        (I(R3, "x", "y", "z"), 0),
    ]
    for ideal, expected in cases:
        assert krull_dim(ideal) == expected
        assert sympy_dim(ideal) == expected


def test_dimension_is_order_independent_on_fixtures():
    for name, expected in (("flag_xy", 5), ("minors_core", 4)):
        ring, gens = load_ideal_file(default_fixture_dir() / f"{name}.ideal")
        ideal = Ideal(ring, gens)
        assert krull_dim(ideal, GREVLEX) == expected
        assert krull_dim(ideal, LEX) == expected
        assert sympy_dim(ideal) == expected


def test_hilbert_numerator_of_cyclic_minors():
    ring, gens = load_ideal_file(default_fixture_dir() / "minors_core.ideal")
    gb = buchberger(Ideal(ring, gens), GREVLEX)
    num = hilbert_numerator(gb)
    assert num == [1, 0, -3, 2]
    assert hilbert_series_coefficients(num, ring.size, 6) \
        == [1, 6, 18, 40, 75, 126, 196]


def test_hilbert_series_against_monomial_count():
    # for a monomial ideal the series just counts the surviving monomials
    ideal = I(R2, "x^2", "x*y^2")
    num = hilbert_numerator(ideal)
    series = hilbert_series_coefficients(num, 2, 8)
    for d, expected in enumerate(series):
        survivors = 0
        for a in range(d + 1):
            b = d - a
            if a >= 2 or (a >= 1 and b >= 2):
                continue
            survivors += 1
        assert survivors == expected, d


# -- singular loci and charts -----------------------------------------------


def test_singular_locus_of_quadric_cone():
    cone = I(R3, "x*y - z^2")
    assert krull_dim(cone) == 2
    assert singular_locus_dim(cone, 1) == 0
    # independent route: generator plus its three partials, through sympy
    ideal = I(R3, "x*y - z^2", "y", "x", "2*z")
    assert sympy_dim(ideal) == 0


def test_smooth_hypersurface_has_empty_singular_locus():
    sphere = I(R3, "x^2 + y^2 + z^2 - 1")
    assert singular_locus_dim(sphere, 1) is EMPTY


def test_singular_locus_validates_codimension():
    cone = I(R3, "x*y - z^2")
    with pytest.raises(ParameterError):
        singular_locus_dim(cone, 2)


def test_chart_smoothness_controls():
    cone = I(R3, "x*y - z^2")
    # the vertex sits at the origin: excluded by the x-chart, kept by x+1
    assert chart_smooth_check(cone, parse_poly("x", R3))
    assert not chart_smooth_check(cone, parse_poly("x + 1", R3))
    # a chart that misses the locus entirely is vacuously smooth
    twopoints = I(R2, "x^2 - 1", "y")
    assert chart_smooth_check(twopoints, parse_poly("y", R2))


# -- regular sequences ------------------------------------------------------


def test_regular_sequence_accepts_nonzerodivisor():
    ideal = I(R2, "x*y")
    theta = parse_poly("x + y", R2)
    assert regular_sequence_check(ideal, [theta])


def test_regular_sequence_rejects_zerodivisor():
    ideal = I(R2, "x*y")
    assert not regular_sequence_check(ideal, [parse_poly("x", R2)])


def test_regular_sequence_edge_cases():
    with pytest.raises(EmptyVarietyError):
        regular_sequence_check(I(R2, "1"), [])
    with pytest.raises(ParameterError):
        regular_sequence_check(I(R2, "x*y"), [])  # dim 1 needs 1 form
    assert regular_sequence_check(I(R2, "x", "y"), [])  # dim 0: vacuous


def test_random_linear_forms_are_seeded_and_nonzero():
    a = random_linear_forms(R3, 4, random.Random("tag"))
    b = random_linear_forms(R3, 4, random.Random("tag"))
    assert a == b
    assert all(not f.is_zero and f.total_degree() == 1 for f in a)
