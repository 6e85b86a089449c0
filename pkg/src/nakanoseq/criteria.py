"""Classification of Nakano sequence spaces and of inclusion operators.

Every Yes/No verdict carries a citation from the fixed anchor set and a
certificate (a series comparison, a profile enclosure, or a gap bound);
anything the profiles cannot resolve stays an honest Unknown.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import exponents as E
from ._asymptotics import (
    AsymptoticProfile,
    Branch,
    GapKind,
    GapResult,
    SignKind,
    liminf_abs_gap,
    profile,
    signed_branch_gaps,
)
from .errors import HorizonExhausted, InternalInconsistency
from .series import exists_alpha, exists_alpha_branch, one_in_lrn
from .verdicts import (
    Answer,
    CANONICAL_BASIS_REMARK,
    INCLUSION_TEST,
    LINF_COPY,
    NAKANO_LEMMA,
    NOT_APPLICABLE,
    SEPARABILITY_REMARK,
    SS_BOUNDED,
    SS_UNBOUNDED_SOURCE,
    SS_UNBOUNDED_TARGET,
    Verdict,
    WEAK_COMPACTNESS,
)

INF = math.inf


# --------------------------------------------------------------------------
# criteria-level evidence records
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ProfileEvidence:
    """A liminf/limsup enclosure backing a profile-based verdict."""

    statement: str
    profile: dict

    def to_json(self):
        return {"kind": "profile_evidence", "statement": self.statement, "profile": self.profile}

    def __str__(self):
        return self.statement


@dataclass(frozen=True)
class GapEvidence:
    """A liminf bound on |p_n - q_n| (or its failure) backing a verdict."""

    statement: str
    gap: dict

    def to_json(self):
        return {"kind": "gap_evidence", "statement": self.statement, "gap": self.gap}

    def __str__(self):
        return self.statement


@dataclass(frozen=True)
class Remark:
    statement: str

    def to_json(self):
        return {"kind": "remark", "statement": self.statement}

    def __str__(self):
        return self.statement


def _na() -> Verdict:
    return Verdict(Answer.UNKNOWN, None, NOT_APPLICABLE)


# --------------------------------------------------------------------------
# space-level classification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceProfile:
    separable: Verdict
    reflexive: Verdict
    contains_linf_copy: Verdict
    profile: AsymptoticProfile
    linf_witness: Optional[object] = None  # WitnessSubsequence when a copy exists

    def to_json(self):
        return {
            "separable": self.separable.to_json(),
            "reflexive": self.reflexive.to_json(),
            "contains_linf_copy": self.contains_linf_copy.to_json(),
            "profile": self.profile.to_json(),
            "linf_witness": self.linf_witness.to_json() if self.linf_witness is not None else None,
        }


def space_profile(p: E.ExponentSequence, witness_count: int = 5) -> SpaceProfile:
    """Separability, reflexivity, and presence of a sup-norm copy, all read
    off the certified exponent profile."""
    prof = profile(p)
    ev = ProfileEvidence(
        f"liminf p_n in [{prof.liminf.lo:g}, {prof.liminf.hi:g}], "
        f"limsup p_n in [{prof.limsup.lo:g}, {prof.limsup.hi:g}]",
        prof.to_json(),
    )

    if prof.bounded_above is Answer.YES:
        separable = Verdict(Answer.YES, ev, SEPARABILITY_REMARK)
        linf = Verdict(Answer.NO, ev, LINF_COPY)
        if prof.liminf.lo > 1.0:
            reflexive = Verdict(Answer.YES, ev, SEPARABILITY_REMARK)
        elif prof.liminf.hi <= 1.0:
            reflexive = Verdict(Answer.NO, ev, SEPARABILITY_REMARK)
        else:
            reflexive = Verdict(Answer.UNKNOWN, ev)
    elif prof.bounded_above is Answer.NO:
        separable = Verdict(Answer.NO, ev, LINF_COPY)
        reflexive = Verdict(Answer.NO, ev, LINF_COPY)
        linf = Verdict(Answer.YES, ev, LINF_COPY)
    else:
        separable = Verdict(Answer.UNKNOWN, ev)
        reflexive = Verdict(Answer.UNKNOWN, ev)
        linf = Verdict(Answer.UNKNOWN, ev)

    wit = None
    if linf.answer is Answer.YES and witness_count > 0:
        from .witness import linf_witness

        try:
            wit = linf_witness(p, witness_count)
        except HorizonExhausted:
            wit = None
    return SpaceProfile(separable, reflexive, linf, prof, wit)


# --------------------------------------------------------------------------
# operator-level classification
# --------------------------------------------------------------------------


def spaces_equal(p: E.ExponentSequence, q: E.ExponentSequence) -> Verdict:
    """ℓ_{p_n} = ℓ_{q_n} iff Σ α^{p_n q_n / |p_n − q_n|} < ∞ for some α."""
    v = exists_alpha(E.NakanoExponent(p, q))
    return Verdict(v.answer, v.certificate, NAKANO_LEMMA if v.answer is not Answer.UNKNOWN else "")


def inclusion_holds(p: E.ExponentSequence, q: E.ExponentSequence) -> Verdict:
    """Three-valued inclusion test ℓ_{p_n} ⊆ ℓ_{q_n}.

    Yes when the all-ones sequence lies in the complementary-exponent space;
    No when on some infinite index family p exceeds q by a margin while the
    restricted spaces are certified distinct (the pointwise-smaller space
    then sits strictly inside, contradicting inclusion); Unknown otherwise.
    """
    v = one_in_lrn(p, q)
    if v.answer is Answer.YES:
        return v
    for g in signed_branch_gaps(p, q):
        if g.kind is not SignKind.POSITIVE:
            continue
        nak = exists_alpha_branch(Branch(g.pset, E.NakanoExponent(g.p_core, g.q_core), g.onset))
        if nak[0] is Answer.NO:
            cert = GapEvidence(
                f"on an infinite index family p_n >= q_n + {g.epsilon:g} from {g.onset} "
                "and the restricted spaces are distinct",
                {"epsilon": g.epsilon, "onset": g.onset, "nakano": nak[1].to_json() if nak[1] else None},
            )
            return Verdict(Answer.NO, cert, NAKANO_LEMMA)
    return Verdict(Answer.UNKNOWN, v.certificate, "")


def strictly_singular(
    p: E.ExponentSequence, q: E.ExponentSequence, inclusion: Optional[Verdict] = None
) -> Verdict:
    """Strict singularity of the inclusion, gated on the inclusion verdict."""
    if inclusion is None:
        inclusion = inclusion_holds(p, q)
    if inclusion.answer is not Answer.YES:
        return _na()

    prof_p = profile(p)
    if prof_p.bounded_above is Answer.NO:
        ev = ProfileEvidence("limsup p_n = ∞: the source space contains a sup-norm copy", prof_p.to_json())
        return Verdict(Answer.NO, ev, SS_UNBOUNDED_SOURCE)
    if prof_p.bounded_above is Answer.UNKNOWN:
        return Verdict(Answer.UNKNOWN, ProfileEvidence("boundedness of p_n undecided", prof_p.to_json()), "")

    gap = liminf_abs_gap(p, q)
    if gap.kind is GapKind.POSITIVE:
        prof_q = profile(q)
        citation = SS_UNBOUNDED_TARGET if prof_q.bounded_above is Answer.NO else SS_BOUNDED
        ev = GapEvidence(
            f"limsup p_n < ∞ and |p_n − q_n| >= {gap.epsilon:g} for n >= {gap.onset}", gap.to_json()
        )
        return Verdict(Answer.YES, ev, citation)
    if gap.kind is GapKind.ZERO:
        ev = GapEvidence("liminf |p_n − q_n| = 0: exponents coincide along a subsequence", gap.to_json())
        return Verdict(Answer.NO, ev, SS_BOUNDED)
    return Verdict(Answer.UNKNOWN, GapEvidence("liminf |p_n − q_n| undecided", gap.to_json()), "")


def weakly_compact(
    p: E.ExponentSequence, q: E.ExponentSequence, inclusion: Optional[Verdict] = None
) -> Verdict:
    """Weak compactness of the inclusion: 1 < liminf q_n <= limsup q_n < ∞."""
    if inclusion is None:
        inclusion = inclusion_holds(p, q)
    if inclusion.answer is not Answer.YES:
        return _na()
    prof_q = profile(q)
    ev = ProfileEvidence(
        f"liminf q_n in [{prof_q.liminf.lo:g}, {prof_q.liminf.hi:g}], "
        f"limsup q_n in [{prof_q.limsup.lo:g}, {prof_q.limsup.hi:g}]",
        prof_q.to_json(),
    )
    if prof_q.liminf.lo > 1.0 and prof_q.limsup.hi < INF:
        return Verdict(Answer.YES, ev, WEAK_COMPACTNESS)
    if prof_q.liminf.hi <= 1.0 or prof_q.limsup.lo == INF:
        return Verdict(Answer.NO, ev, WEAK_COMPACTNESS)
    return Verdict(Answer.UNKNOWN, ev, "")


def compactness_suite(
    p: E.ExponentSequence, q: E.ExponentSequence, inclusion: Optional[Verdict] = None
) -> tuple[Verdict, Verdict, Verdict]:
    """(compact, L-weakly compact, M-weakly compact) — all three always fail:
    the canonical unit sequence is normalized in every space."""
    if inclusion is None:
        inclusion = inclusion_holds(p, q)
    if inclusion.answer is not Answer.YES:
        return _na(), _na(), _na()
    ev = Remark("the canonical unit sequence (e_n) is normalized in every space")
    v = Verdict(Answer.NO, ev, CANONICAL_BASIS_REMARK)
    return v, v, v


# --------------------------------------------------------------------------
# aggregated report
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class InclusionReport:
    inclusion_holds: Verdict
    spaces_equal: Verdict
    strictly_singular: Verdict
    weakly_compact: Verdict
    compact: Verdict
    l_weakly_compact: Verdict
    m_weakly_compact: Verdict
    gap: GapResult
    witnesses: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def to_json(self):
        return {
            "inclusion_holds": self.inclusion_holds.to_json(),
            "spaces_equal": self.spaces_equal.to_json(),
            "strictly_singular": self.strictly_singular.to_json(),
            "weakly_compact": self.weakly_compact.to_json(),
            "compact": self.compact.to_json(),
            "l_weakly_compact": self.l_weakly_compact.to_json(),
            "m_weakly_compact": self.m_weakly_compact.to_json(),
            "gap": self.gap.to_json(),
            "witnesses": {k: w.to_json() for k, w in self.witnesses.items()},
            "notes": list(self.notes),
        }


def _check_invariants(report: InclusionReport, p: E.ExponentSequence, q: E.ExponentSequence) -> None:
    eq, ss = report.spaces_equal.answer, report.strictly_singular.answer
    if eq is Answer.YES and ss is Answer.YES:
        raise InternalInconsistency("spaces_equal = Yes together with strictly_singular = Yes")
    if report.weakly_compact.answer is Answer.YES:
        if space_profile(q, witness_count=0).reflexive.answer is not Answer.YES:
            raise InternalInconsistency("weakly_compact = Yes but the target space is not reflexive")
    # a bounded source with a certified gap and p_n > q_n on an infinite
    # family cannot coexist with a holding inclusion
    if (
        report.inclusion_holds.answer is Answer.YES
        and report.gap.kind is GapKind.POSITIVE
        and profile(p).bounded_above is Answer.YES
        and any(g.kind is SignKind.POSITIVE for g in signed_branch_gaps(p, q))
    ):
        raise InternalInconsistency("inclusion holds despite a certified reverse exponent gap")


def full_report(p: E.ExponentSequence, q: E.ExponentSequence, witness_count: int = 5) -> InclusionReport:
    """All operator verdicts for ℓ_{p_n} ↪ ℓ_{q_n}, cross-checked, with
    witness subsequences attached where the verdicts promise them."""
    from .witness import equality_witness, linf_witness

    inclusion = inclusion_holds(p, q)
    equal = spaces_equal(p, q)
    ss = strictly_singular(p, q, inclusion)
    wc = weakly_compact(p, q, inclusion)
    compact, l_weak, m_weak = compactness_suite(p, q, inclusion)
    gap = liminf_abs_gap(p, q)

    witnesses: dict = {}
    notes: list[str] = []
    if witness_count > 0:
        if gap.kind is GapKind.ZERO:
            try:
                witnesses["equality"] = equality_witness(p, q, witness_count)
            except HorizonExhausted as exc:
                notes.append(f"equality witness scan exhausted: {exc}")
        if ss.answer is Answer.NO and ss.citation == SS_UNBOUNDED_SOURCE:
            try:
                witnesses["linf_copy"] = linf_witness(p, witness_count)
            except HorizonExhausted as exc:
                notes.append(f"sup-norm witness scan exhausted: {exc}")

    report = InclusionReport(inclusion, equal, ss, wc, compact, l_weak, m_weak, gap, witnesses, tuple(notes))
    _check_invariants(report, p, q)
    return report
