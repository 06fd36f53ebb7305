"""Kernel-weighted shuffle product: certification, identities, controls."""

import random

import pytest

from hallverify.ratfunc import DegenerateRatioError, rf_equal
from hallverify.rings import LaurentPoly
from hallverify.shuffle import (
    ArityLimitError,
    KernelCertificationError,
    Orientation,
    ShuffleEngine,
    element_from_text,
    element_to_text,
)


@pytest.fixture(scope="module")
def eng():
    return ShuffleEngine(max_arity=3)


# -- orientation self-certification -----------------------------------------


def test_default_kernel_certifies_forward(eng):
    assert eng.orientation is Orientation.FORWARD
    assert eng.kernel_reflection_check(Orientation.FORWARD)
    assert not eng.kernel_reflection_check(Orientation.REVERSED)


def test_inverted_kernel_certifies_reversed():
    rev = ShuffleEngine(max_arity=3, invert_kernel_params=True)
    assert rev.orientation is Orientation.REVERSED
    assert rev.kernel_reflection_check(Orientation.REVERSED)
    assert not rev.kernel_reflection_check(Orientation.FORWARD)


def test_wrong_explicit_orientation_is_rejected():
    with pytest.raises(KernelCertificationError):
        ShuffleEngine(max_arity=2, orientation=Orientation.REVERSED)
    with pytest.raises(KernelCertificationError):
        ShuffleEngine(max_arity=2, orientation=Orientation.FORWARD,
                      invert_kernel_params=True)


def test_kernel_degenerates_to_one_at_unit_parameters(eng):
    # with q1 = q2 = 1 the weight collapses: numerator equals denominator
    zeta = eng.zeta(1, 2)
    num = zeta.num.specialize({"q1": 1, "q2": 1})
    den = LaurentPoly.const(eng.ring, 1)
    for f, m in zeta.factors.items():
        den = den * f.specialize({"q1": 1, "q2": 1}) ** m
    assert num == den


def test_kernel_ratio_rejects_equal_slots(eng):
    with pytest.raises(DegenerateRatioError):
        eng.zeta(2, 2)


# -- product structure ------------------------------------------------------


def test_products_are_symmetric(eng):
    rng = random.Random(2)
    for _ in range(8):
        k, l = rng.randint(-2, 2), rng.randint(-2, 2)
        p = eng.shuffle_mul(eng.make_e(k), eng.make_e(l))
        assert eng.is_symmetric(p)
    triple = eng.shuffle_mul(
        eng.shuffle_mul(eng.make_e(1), eng.make_e(0)), eng.make_e(-1))
    assert eng.is_symmetric(triple)


def test_scalar_unit_and_weight_addition(eng):
    one = eng.scalar(1)
    e2 = eng.make_e(2)
    assert eng.shuffle_mul(one, e2) == e2
    assert eng.shuffle_mul(e2, one) == e2
    assert eng.shuffle_mul(e2, eng.make_e(0)).arity == 2


def test_associativity_seeded(eng):
    rng = random.Random(13)
    for _ in range(20):
        a, b, c = (rng.randint(-2, 2) for _ in range(3))
        ea, eb, ec = eng.make_e(a), eng.make_e(b), eng.make_e(c)
        left = eng.shuffle_mul(eng.shuffle_mul(ea, eb), ec)
        right = eng.shuffle_mul(ea, eng.shuffle_mul(eb, ec))
        assert left == right, (a, b, c)


def test_commutator_antisymmetry(eng):
    rng = random.Random(17)
    for _ in range(10):
        k, l = rng.randint(-2, 2), rng.randint(-2, 2)
        fwd = eng.commutator(eng.make_e(k), eng.make_e(l))
        bwd = eng.commutator(eng.make_e(l), eng.make_e(k))
        assert fwd == -bwd


def test_arity_limit_enforced(eng):
    p = eng.shuffle_mul(eng.make_e(1), eng.make_e(0))
    with pytest.raises(ArityLimitError):
        eng.shuffle_mul(p, p)  # weight 4 > max 3
    with pytest.raises(ArityLimitError):
        p + eng.make_e(1)  # mismatched weights cannot be added


# -- the two defining identities --------------------------------------------


def test_exchange_defect_vanishes_on_grid(eng):
    for k in range(-2, 3):
        for l in range(-2, 3):
            assert eng.relation21_defect(k, l).is_zero, (k, l)


def test_exchange_fails_under_coefficient_perturbation(eng):
    a = list(eng.exchange_prefactor_coefficients(inverted=False))
    ainv = eng.exchange_prefactor_coefficients(inverted=True)
    a[1] = a[1] + 1
    total = None
    for i in range(4):
        left = eng.shuffle_mul(eng.make_e(3 - i), eng.make_e(i))
        right = eng.shuffle_mul(eng.make_e(i), eng.make_e(3 - i))
        piece = left.scale(a[i]) - right.scale(ainv[i])
        total = piece if total is None else total + piece
    assert not total.cancel().is_zero


def test_cubic_defect_vanishes(eng):
    for k in (-2, 0, 3):
        assert eng.serre_defect(k).is_zero, k


def test_cubic_defect_vanishes_in_reversed_model():
    rev = ShuffleEngine(max_arity=3, invert_kernel_params=True)
    assert rev.serre_defect(0).is_zero
    assert rev.relation21_defect(0, 0).is_zero


def test_wider_bracket_is_not_a_relation(eng):
    # [[e(k+2), e(k-2)], e(k)] is nonzero: vanishing is specific to the
    # (k+1, k-1, k) pattern, so the zero checks above are not vacuous
    inner = eng.commutator(eng.make_e(2), eng.make_e(-2))
    assert not eng.commutator(inner, eng.make_e(0)).is_zero


def test_shift_covariance(eng):
    for k in (-1, 0, 1):
        shifted = eng.commutator(eng.make_e(k + 2), eng.make_e(k))
        base = eng.commutator(eng.make_e(k + 1), eng.make_e(k - 1))
        assert not base.is_zero
        assert shifted == eng.scale_shift(base)


# -- serialization ----------------------------------------------------------


def test_element_text_round_trip(eng):
    for elem in (eng.make_e(-2),
                 eng.commutator(eng.make_e(1), eng.make_e(-1)),
                 eng.shuffle_mul(eng.make_e(1), eng.make_e(0))):
        text = element_to_text(elem)
        back = element_from_text(text, eng)
        assert back == elem


def test_element_text_errors(eng):
    with pytest.raises(ValueError):
        element_from_text("num: z1\n", eng)  # arity line missing
    with pytest.raises(ValueError):
        element_from_text("arity: 1\nnum: z1\nbogus: 3\n", eng)


def test_from_text_matches_make_e(eng):
    assert eng.from_text(1, "z1^2") == eng.make_e(2)


# -- reversed-model cross-check ---------------------------------------------


def test_inverted_kernel_is_the_reflected_kernel(eng):
    # inverting q1, q2 and reversing the slot ratio reproduces the
    # original kernel exactly; this is why the relabeled model certifies
    # with the opposite orientation
    rev = ShuffleEngine(max_arity=3, invert_kernel_params=True)
    assert rf_equal(eng.zeta(1, 2), rev.zeta(2, 1))
    assert rf_equal(eng.zeta(2, 1), rev.zeta(1, 2))
    assert not rf_equal(eng.zeta(1, 2), rev.zeta(1, 2))
