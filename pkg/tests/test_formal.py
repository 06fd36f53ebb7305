"""Symbolic rewrite calculus for nested commutators of rank-1 classes."""

import dataclasses
import json

import pytest

from hallverify.formal import (
    AffineIndex,
    E1,
    E2,
    E3,
    FormalSum,
    FormalSymbol,
    RULE_RANK1_RANK1,
    RULE_RANK1_RANK2,
    RULE_RANK2_RANK1,
    UnsupportedBracketError,
    bracket,
    bracket_symbols,
    serre_reduce,
    symbol_bracket_terms,
)


# -- symbols ----------------------------------------------------------------


def test_affine_index_arithmetic_and_render():
    k = AffineIndex(0)
    assert k.render() == "k"
    assert (k + 2).render() == "k+2"
    assert AffineIndex(-1).render() == "k-1"
    assert AffineIndex(3).render("m") == "m+3"
    assert AffineIndex(-1).instantiate(5) == 4
    assert AffineIndex(3) - AffineIndex(1) == 2


def test_symbol_validation_and_render():
    assert E2(-1, 1).render() == "E2(k-1,k+1)"
    assert E3(0, 1, 2).instantiate(10) == (10, 11, 12)
    with pytest.raises(ValueError):
        FormalSymbol(4, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        FormalSymbol(2, (0,))  # arity mismatch


def test_formal_sum_algebra():
    s = FormalSum.from_terms([(E1(0), 2), (E1(1), -1), (E1(0), -2)])
    assert s == FormalSum.single(E1(1), -1)
    assert s - s == 0
    assert (s * 3).terms[E1(1)] == -3
    assert 2 * s == s * 2
    assert FormalSum.zero().render() == "0"
    assert FormalSum.from_terms([(E2(0, 1), 1), (E1(0), -2)]).render() \
        == "-2*E1(k) + E2(k,k+1)"


# -- the rewrite rules ------------------------------------------------------


def test_rank1_rank1_rule():
    rule, terms = symbol_bracket_terms(E1(2), E1(0))
    assert rule == RULE_RANK1_RANK1
    assert terms == [(E2(0, 2), 1), (E2(1, 1), 1)]
    # antisymmetry, and the diagonal collapses
    assert bracket_symbols(E1(0), E1(2)) == -bracket_symbols(E1(2), E1(0))
    assert bracket_symbols(E1(1), E1(1)).is_zero


def test_rank2_rank1_rule_branches():
    # both offsets above c: two positive range sums
    rule, terms = symbol_bracket_terms(E2(1, 2), E1(0))
    assert rule == RULE_RANK2_RANK1
    assert terms == [(E3(0, 1, 2), 1), (E3(1, 0, 2), 1), (E3(1, 1, 1), 1)]
    # c between the offsets: one branch flips sign
    rule, terms = symbol_bracket_terms(E2(0, 2), E1(1))
    assert terms == [(E3(0, 1, 2), -1), (E3(0, 1, 2), 1)]
    assert bracket_symbols(E2(0, 2), E1(1)).is_zero
    # c at an offset: that branch is empty
    _, terms = symbol_bracket_terms(E2(0, 0), E1(0))
    assert terms == []


def test_rank1_rank2_is_negated_flip():
    assert bracket_symbols(E1(1), E2(0, 2)) == -bracket_symbols(E2(0, 2), E1(1))
    rule, _ = symbol_bracket_terms(E1(1), E2(0, 2))
    assert rule == RULE_RANK1_RANK2


def test_unsupported_brackets_refuse():
    for left, right in ((E2(0, 1), E2(0, 1)), (E3(0, 1, 2), E1(0)),
                        (E1(0), E3(0, 1, 2))):
        with pytest.raises(UnsupportedBracketError):
            symbol_bracket_terms(left, right)


def test_bracket_is_bilinear():
    F = FormalSum.from_terms([(E1(2), 2), (E1(1), -1)])
    G = FormalSum.single(E1(0), 3)
    expect = (bracket_symbols(E1(2), E1(0)) * 6
              - bracket_symbols(E1(1), E1(0)) * 3)
    assert bracket(F, G) == expect


# -- the traced nested reduction --------------------------------------------


def test_serre_reduce_is_zero_with_visible_cancellation():
    result, trace = serre_reduce()
    assert result.is_zero
    assert trace is not None
    assert trace.expression == "[[E1(k+1), E1(k-1)], E1(k)]"
    # stage 1 is the inner bracket, stage 2 the outer
    assert len(trace.stages) == 2
    assert trace.stages[0].output == FormalSum.from_terms(
        [(E2(-1, 1), 1), (E2(0, 0), 1)])
    rules = [s.rule for s in trace.steps]
    assert rules == [RULE_RANK1_RANK1, RULE_RANK2_RANK1, RULE_RANK2_RANK1]
    # the zero arises from one +/- pair of the same rank-3 symbol,
    # not from termwise-empty rewrites
    assert (E3(-1, 0, 1), 1) in trace.cancellation_pairs()
    pair_step = trace.steps[1]
    assert set(pair_step.output_terms) == {(E3(-1, 0, 1), -1), (E3(-1, 0, 1), 1)}
    assert trace.steps[2].output_terms == ()


def test_serre_reduce_replay_and_tamper_rejection():
    result, trace = serre_reduce()
    assert trace.replay()
    # dropping one recorded output term must be detected
    bad_step = dataclasses.replace(
        trace.stages[1].steps[0],
        output_terms=trace.stages[1].steps[0].output_terms[:1])
    trace.stages[1].steps[0] = bad_step
    assert not trace.replay()


def test_serre_reduce_tampered_result_is_rejected():
    result, trace = serre_reduce()
    trace.result = trace.result + FormalSum.single(E1(0))
    assert not trace.replay()


def test_serre_reduce_uniform_in_the_base_offset():
    ref_rules = [s.rule for s in serre_reduce(0)[1].steps]
    for off in (-3, 5, 40):
        result, trace = serre_reduce(off)
        assert result.is_zero
        assert trace.replay()
        assert [s.rule for s in trace.steps] == ref_rules
        assert (E3(off - 1, off, off + 1), 1) in trace.cancellation_pairs()


def test_serre_reduce_without_trace():
    result, trace = serre_reduce(with_trace=False)
    assert result.is_zero and trace is None


def test_wider_pattern_does_not_reduce_to_zero():
    inner = bracket(FormalSum.single(E1(2)), FormalSum.single(E1(-2)))
    outer = bracket(inner, FormalSum.single(E1(0)))
    assert not outer.is_zero


def test_trace_rendering_and_json():
    _, trace = serre_reduce()
    text = trace.render_text()
    assert "(empty sum)" in text
    assert text.endswith("result: 0")
    assert "- E3(k-1,k,k+1)" in text and "+ E3(k-1,k,k+1)" in text
    payload = json.loads(trace.to_json())
    assert payload["result"] == "0"
    assert len(payload["stages"]) == 2
    assert payload["stages"][1]["steps"][0]["rule"] == RULE_RANK2_RANK1
