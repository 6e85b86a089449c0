"""Space and inclusion-operator classification with cited verdicts."""
import math
import random

import pytest

from nakanoseq import (
    Answer,
    BlockRepeat,
    CITATION_ANCHORS,
    Const,
    Evens,
    GapKind,
    Linear,
    Merge,
    NOT_APPLICABLE,
    Prefix,
    RationalDrift,
    Recip,
    Sum,
    compactness_suite,
    full_report,
    inclusion_holds,
    space_profile,
    spaces_equal,
    strictly_singular,
    weakly_compact,
)

from _generators import gen_exponent, gen_pair

INF = math.inf

EX3_Q = Sum(Const(2), Recip(BlockRepeat()))  # 2 + 1/a_n


# -- space_profile ---------------------------------------------------------------


def test_space_profile_drift_to_one():
    sp = space_profile(RationalDrift(1, 1, 1))
    assert sp.separable.answer is Answer.YES
    assert sp.reflexive.answer is Answer.NO  # liminf = 1, threshold strict
    assert sp.contains_linf_copy.answer is Answer.NO


def test_space_profile_blocks():
    sp = space_profile(BlockRepeat())
    assert sp.separable.answer is Answer.NO
    assert sp.contains_linf_copy.answer is Answer.YES
    assert sp.linf_witness is not None
    assert sp.linf_witness.indices == (1, 2, 6, 33, 289)


def test_space_profile_l2():
    sp = space_profile(Const(2))
    assert sp.separable.answer is Answer.YES
    assert sp.reflexive.answer is Answer.YES
    assert sp.contains_linf_copy.answer is Answer.NO


def test_space_profile_invariants_hold():
    rng = random.Random(11)
    for _ in range(60):
        sp = space_profile(gen_exponent(rng), witness_count=0)
        if sp.contains_linf_copy.answer is Answer.YES:
            assert sp.separable.answer is Answer.NO
        if sp.reflexive.answer is Answer.YES:
            assert sp.separable.answer is Answer.YES


# -- spaces_equal -----------------------------------------------------------------


def test_spaces_equal_examples():
    assert spaces_equal(RationalDrift(1, 1, 1), Const(1)).answer is Answer.YES
    assert spaces_equal(Const(2), Const(2)).answer is Answer.YES
    assert spaces_equal(Const(2), EX3_Q).answer is Answer.NO
    assert spaces_equal(Linear(1, 0), Const(INF)).answer is Answer.YES
    assert spaces_equal(BlockRepeat(), Const(INF)).answer is Answer.NO


def test_spaces_equal_citation():
    v = spaces_equal(Const(2), Const(3))
    assert v.answer is Answer.NO
    assert v.citation == "Prop 1.2 (Nakano's Lemma)"


def test_spaces_equal_symmetry_and_reflexivity():
    rng = random.Random(13)
    for _ in range(25):
        p, q = gen_exponent(rng), gen_exponent(rng)
        assert spaces_equal(p, q).answer is spaces_equal(q, p).answer
        assert spaces_equal(p, p).answer is Answer.YES


# -- inclusion_holds --------------------------------------------------------------


def test_inclusion_examples():
    assert inclusion_holds(RationalDrift(1, 1, 1), Linear(1, 0)).answer is Answer.YES
    assert inclusion_holds(Const(2), Const(2)).answer is Answer.YES
    assert inclusion_holds(Const(3), Const(2)).answer is Answer.NO
    assert inclusion_holds(Const(2), Const(3)).answer is Answer.YES  # pointwise p <= q


def test_inclusion_reverse_gap_needs_distinct_spaces():
    # p = n + 1 > q = n pointwise, but the spaces are equal (Nakano exponent
    # n(n+1) gives a convergent series), so inclusion still holds
    p, q = Linear(1, 1), Linear(1, 0)
    assert spaces_equal(p, q).answer is Answer.YES
    assert inclusion_holds(p, q).answer is Answer.YES


def test_inclusion_citations_in_anchor_set():
    for p, q in [(Const(3), Const(2)), (Const(2), Const(3)), (RationalDrift(1, 1, 1), Linear(1, 0))]:
        v = inclusion_holds(p, q)
        if v.answer is not Answer.UNKNOWN:
            assert v.citation in CITATION_ANCHORS


# -- strictly_singular --------------------------------------------------------------


def test_ss_example_one():
    v = strictly_singular(RationalDrift(1, 1, 1), Linear(1, 0))
    assert v.answer is Answer.YES
    assert v.citation == "Thm 2.2"  # unbounded target


def test_ss_example_two():
    v = strictly_singular(BlockRepeat(), Const(INF))
    assert v.answer is Answer.NO
    assert v.citation == "Thm 2.3"  # unbounded source


def test_ss_example_three():
    v = strictly_singular(Const(2), EX3_Q)
    assert v.answer is Answer.NO
    assert v.citation == "Thm 2.1"  # vanishing gap, bounded target


def test_ss_bounded_gap_positive():
    v = strictly_singular(Const(2), Const(3))
    assert v.answer is Answer.YES
    assert v.citation == "Thm 2.1"


def test_ss_gated_on_inclusion():
    v = strictly_singular(Const(3), Const(2))
    assert v.answer is Answer.UNKNOWN
    assert v.citation == NOT_APPLICABLE


# -- weakly_compact / compactness_suite ----------------------------------------------


def test_weakly_compact_examples():
    assert weakly_compact(Const(2), Const(2)).answer is Answer.YES
    assert weakly_compact(RationalDrift(1, 1, 1), Linear(1, 0)).answer is Answer.NO
    assert weakly_compact(Const(1), Const(1)).answer is Answer.NO  # liminf q = 1


def test_compactness_suite_always_no():
    for p, q in [(Const(2), Const(2)), (RationalDrift(1, 1, 1), Linear(1, 0)), (Const(2), EX3_Q)]:
        trio = compactness_suite(p, q)
        assert all(v.answer is Answer.NO for v in trio)
        assert all(v.citation == "§2-remark" for v in trio)


def test_compactness_suite_gated():
    trio = compactness_suite(Const(3), Const(2))
    assert all(v.answer is Answer.UNKNOWN and v.citation == NOT_APPLICABLE for v in trio)


# -- full_report ----------------------------------------------------------------------


def test_full_report_example_one():
    r = full_report(RationalDrift(1, 1, 1), Linear(1, 0))
    assert r.inclusion_holds.answer is Answer.YES
    assert r.spaces_equal.answer is Answer.NO
    assert r.strictly_singular.answer is Answer.YES
    assert r.weakly_compact.answer is Answer.NO
    assert r.compact.answer is Answer.NO


def test_full_report_identity_l2():
    r = full_report(Const(2), Const(2))
    assert r.spaces_equal.answer is Answer.YES
    assert r.strictly_singular.answer is Answer.NO
    assert r.weakly_compact.answer is Answer.YES
    assert r.compact.answer is Answer.NO


def test_full_report_example_three_with_witness():
    r = full_report(Const(2), EX3_Q)
    assert r.spaces_equal.answer is Answer.NO
    assert r.inclusion_holds.answer is Answer.YES
    assert r.strictly_singular.answer is Answer.NO
    assert r.gap.kind is GapKind.ZERO
    wit = r.witnesses["equality"]
    assert wit.indices == (1, 2, 6, 33, 289)


def test_full_report_json_shape():
    r = full_report(Const(2), Const(3))
    obj = r.to_json()
    for key in (
        "inclusion_holds",
        "spaces_equal",
        "strictly_singular",
        "weakly_compact",
        "compact",
        "l_weakly_compact",
        "m_weakly_compact",
        "gap",
        "witnesses",
    ):
        assert key in obj
    assert obj["spaces_equal"]["answer"] in ("yes", "no", "unknown")


def test_full_report_invariants_on_random_pairs():
    rng = random.Random(77)
    for _ in range(120):
        p, q = gen_pair(rng)
        r = full_report(p, q, witness_count=0)
        assert not (r.spaces_equal.answer is Answer.YES and r.strictly_singular.answer is Answer.YES)
        for v in (
            r.inclusion_holds,
            r.spaces_equal,
            r.strictly_singular,
            r.weakly_compact,
            r.compact,
            r.l_weakly_compact,
            r.m_weakly_compact,
        ):
            if v.answer is not Answer.UNKNOWN:
                assert v.citation in CITATION_ANCHORS, (str(p), str(q), v)
        if r.weakly_compact.answer is Answer.YES:
            assert space_profile(q, witness_count=0).reflexive.answer is Answer.YES
