"""Certified three-valued convergence decisions for Σ α^{e_n}.

Two regimes are decidable on the descriptor family and both produce
checkable certificates:

* convergence — the exponent grows at least like a positive power of n
  (then α^{e_n} is eventually dominated by a geometric or p-series term),
  or, for block exponents f(a_n), the block totals k^k·α^{f(k)} are
  eventually dominated by 2^{-k};
* divergence — the exponent has a finite limit along an infinite index
  family (terms stay bounded away from zero), or it is a block form of
  growth order at most one, in which case the block totals do not vanish
  for any α (each block k contributes about k^k·α^{f(k)} ≥ 1 once k ≥ 1/α).

Everything in between is an honest Unknown with numeric probes attached.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import exponents as E
from ._asymptotics import (
    Branch,
    ClosedForm,
    PSum,
    RForm,
    VAR_A,
    VAR_N,
    _onset_n,
    closed_form,
    normalize,
)
from .errors import SemanticError
from .indexsets import Periodic
from .verdicts import Answer, Verdict, no, unknown, yes

INF = math.inf

PROBE_HORIZON = 10**6
PROBE_ALPHAS = (0.5, 0.1, 0.01)
DIVERGENCE_THRESHOLD = 1e3


# --------------------------------------------------------------------------
# certificates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GeometricComparison:
    """term(n) <= scale·ratio^n for n >= onset (per block k when per_block)."""

    ratio: float
    scale: float
    onset: int
    per_block: bool = False
    statement: str = ""

    def to_json(self):
        return {
            "kind": "geometric_comparison",
            "ratio": self.ratio,
            "scale": self.scale,
            "onset": self.onset,
            "per_block": self.per_block,
            "statement": self.statement,
        }

    def __str__(self):
        return self.statement or f"terms <= {self.scale:g}·{self.ratio:g}^n from {self.onset}"


@dataclass(frozen=True)
class PSeriesComparison:
    """term(n) <= scale·n^(−power) for n >= onset, power > 1."""

    scale: float
    power: float
    onset: int
    statement: str = ""

    def to_json(self):
        return {
            "kind": "p_series_comparison",
            "scale": self.scale,
            "power": self.power,
            "onset": self.onset,
            "statement": self.statement,
        }

    def __str__(self):
        return self.statement or f"terms <= {self.scale:g}·n^-{self.power:g} from {self.onset}"


@dataclass(frozen=True)
class DivergenceByTerms:
    """Terms (or whole blocks) stay >= lower_bound on an infinite family."""

    lower_bound: float
    onset: int
    per_block: bool = False
    exponent_cap: Optional[float] = None  # e(n) <= cap on the family, when finite
    statement: str = ""

    def to_json(self):
        return {
            "kind": "divergence_by_terms",
            "lower_bound": self.lower_bound,
            "onset": self.onset,
            "per_block": self.per_block,
            "exponent_cap": self.exponent_cap,
            "statement": self.statement,
        }

    def __str__(self):
        return self.statement or f"terms >= {self.lower_bound:g} infinitely often from {self.onset}"


@dataclass(frozen=True)
class NumericProbe:
    """Non-certifying partial-sum evidence."""

    horizon: int
    partial_sums: tuple[tuple[float, float], ...]  # (alpha, partial sum)
    statement: str = ""

    def to_json(self):
        return {
            "kind": "numeric_probe",
            "horizon": self.horizon,
            "partial_sums": [list(p) for p in self.partial_sums],
            "statement": self.statement,
        }

    def __str__(self):
        sums = ", ".join(f"α={a:g}: {s:.6g}" for a, s in self.partial_sums)
        return self.statement or f"partial sums to {self.horizon}: {sums}"


@dataclass(frozen=True)
class BranchCertificates:
    """One certificate per infinite index-set branch of the series."""

    parts: tuple[tuple[dict, object], ...]  # (periodic set as json, certificate)

    def to_json(self):
        return {
            "kind": "branch_certificates",
            "parts": [[pset, cert.to_json()] for pset, cert in self.parts],
        }

    def __str__(self):
        return "; ".join(str(cert) for _, cert in self.parts)


@dataclass(frozen=True)
class AlphaCertificate:
    """Records the α realizing an existential convergence claim."""

    alpha: float
    inner: object
    statement: str = ""

    def to_json(self):
        return {
            "kind": "alpha_certificate",
            "alpha": self.alpha,
            "inner": self.inner.to_json() if hasattr(self.inner, "to_json") else str(self.inner),
            "statement": self.statement,
        }

    def __str__(self):
        base = f"α = {self.alpha:g}"
        return f"{base}; {self.inner}" if self.inner is not None else base


def _pset_json(pset: Periodic) -> dict:
    return {"modulus": pset.modulus, "residues": sorted(pset.residues)}


# --------------------------------------------------------------------------
# per-branch analysis
# --------------------------------------------------------------------------


def _refine_k_onset(g, k0: int, floor: int = 2) -> int:
    """Minimal k <= k0 from which g(k) >= 0 stays true (g eventually >= 0)."""
    if k0 > 10**6:  # too far to walk back; keep the certified bound
        return k0
    best = k0
    for k in range(k0 - 1, floor - 1, -1):
        if g(k) >= 0:
            best = k
        else:
            break
    return best


def _n_convergence_cert(cf: ClosedForm, alpha: float, pset: Periodic, base_onset: int):
    """Comparison certificate for Σ α^{f(n)} when f is rational in n, f -> ∞."""
    form = cf.form
    gamma = form.degree()
    log_a = -math.log(alpha)
    if gamma >= 1.0:
        c = form.lead_coeff() / 2.0 if gamma == 1.0 else 1.0
        target = RForm.from_psum(PSum.make([(1.0, c)]))
        _, onset = form.sub(target).sign_onset()
        onset = max(onset, base_onset, cf.onset)
        onset = _refine_k_onset(lambda n: form.eval(n) - c * n, onset, floor=max(2, base_onset, cf.onset))
        ratio = alpha**c
        return GeometricComparison(
            ratio, 1.0, onset, statement=f"exponent >= {c:g}·n from n = {onset}, so terms <= ({ratio:g})^n"
        )
    # 0 < gamma < 1: dominate by n^-2 using ln n <= n^δ/δ
    delta = gamma / 2.0
    coef = 2.0 / (log_a * delta)
    target = RForm.from_psum(PSum.make([(delta, coef)]))
    _, onset = form.sub(target).sign_onset()
    onset = max(onset, base_onset, cf.onset, 2)
    onset = _refine_k_onset(
        lambda n: form.eval(n) - 2.0 * math.log(n) / log_a, onset, floor=max(2, base_onset, cf.onset)
    )
    return PSeriesComparison(
        1.0, 2.0, onset, statement=f"exponent >= 2·ln n/|ln α| from n = {onset}, so terms <= n^-2"
    )


def _block_convergence_cert(cf: ClosedForm, alpha: float, pset: Periodic, base_onset: int):
    """Block totals k^k·α^{f(k)} <= 2^{-k} for f rational in a_n of order > 1."""
    form = cf.form
    gamma = form.degree()
    log_a = -math.log(alpha)
    excess = (gamma - 1.0) / 2.0
    target = RForm.from_psum(PSum.make([(1.0 + excess, 2.0 / (excess * log_a)), (1.0, math.log(2.0) / log_a)]))
    _, k0 = form.sub(target).sign_onset()
    k0 = _refine_k_onset(lambda k: form.eval(k) * log_a - k * math.log(k) - k * math.log(2.0), max(k0, 2))
    n_onset = max(_onset_n(k0, VAR_A), base_onset, cf.onset)
    return GeometricComparison(
        0.5,
        1.0,
        k0,
        per_block=True,
        statement=f"block totals k^k·α^f(k) <= 2^-k from block {k0} (index {n_onset})",
    )


def _block_divergence_cert(cf: ClosedForm, alpha: float, pset: Periodic, base_onset: int, every_alpha: bool):
    """Block totals stay >= 1 from some block on; holds for every α when the
    block exponent has growth order <= 1."""
    form = cf.form
    log_a = -math.log(alpha)
    m = max(1, pset.modulus // max(1, len(pset.residues)))
    slack = math.log(2.0 * m)
    gamma = form.degree()
    c = (form.lead_coeff() * log_a if gamma == 1.0 else 1.0) + 1.0
    target = form.mul(RForm.const(log_a)).add(RForm.const(slack)).sub(
        RForm.from_psum(PSum.make([(1.0, c)]))
    )
    # need k·ln k >= c·k >= |ln α|·f(k) + ln(2m): k >= e^c and the power-sum onset
    _, k1 = target.neg().sign_onset()
    k0 = max(k1, math.ceil(math.exp(c)), 2)

    def g(k):
        return k * math.log(k) - form.eval(k) * log_a - slack

    k0 = _refine_k_onset(g, k0)
    scope = (
        f"for every α in (0,1) the block totals eventually stay >= 1; at α = {alpha:g} from block {k0}"
        if every_alpha
        else f"for α = {alpha:g} the block totals over the index set stay >= 1 from block {k0}"
    )
    return DivergenceByTerms(1.0, k0, per_block=True, statement=scope)


def _bounded_divergence_cert(cf: ClosedForm, alpha: Optional[float], pset: Periodic, base_onset: int):
    """Exponent has a finite limit on the branch: terms never vanish."""
    limit = cf.limit()
    cap = limit + 1.0
    onset = max(base_onset, cf.onset, _onset_n(cf.form.abs_decay_onset(limit, 1.0), cf.var))
    ref = alpha if alpha is not None else 0.5
    scope = f"α = {alpha:g}" if alpha is not None else "every α in (0,1)"
    return DivergenceByTerms(
        ref**cap,
        onset,
        exponent_cap=cap,
        statement=f"exponent <= {cap:g} on an infinite index family from {onset}; for {scope} terms >= α^{cap:g}",
    )


def _trivial_yes_cert(onset: int):
    return GeometricComparison(
        0.5, 0.0, onset, statement=f"all exponents infinite from index {onset}; only finitely many nonzero terms"
    )


def decide_convergence_branch(alpha: float, branch: Branch) -> tuple[Answer, object]:
    cf = closed_form(branch.core)
    if cf is None:
        return Answer.UNKNOWN, None
    if cf.is_inf:
        return Answer.YES, _trivial_yes_cert(max(branch.onset, cf.onset))
    limit = cf.limit()
    if limit < 0:
        raise SemanticError("series exponent is certified negative; terms would not be in (0, ∞]")
    if limit != INF:
        return Answer.NO, _bounded_divergence_cert(cf, alpha, branch.pset, branch.onset)
    if cf.var in (None, VAR_N):
        return Answer.YES, _n_convergence_cert(cf, alpha, branch.pset, branch.onset)
    # block variable
    if cf.form.degree() > 1.0:
        return Answer.YES, _block_convergence_cert(cf, alpha, branch.pset, branch.onset)
    return Answer.NO, _block_divergence_cert(cf, alpha, branch.pset, branch.onset, every_alpha=True)


def exists_alpha_branch(branch: Branch) -> tuple[Answer, object, Optional[float]]:
    """(answer, certificate, alpha) for ∃α ∈ (0,1): Σ_{branch} α^{e_n} < ∞.

    Any α works in the convergent regimes here, so α = 1/2 is recorded.
    """
    cf = closed_form(branch.core)
    if cf is None:
        return Answer.UNKNOWN, None, None
    if cf.is_inf:
        return Answer.YES, _trivial_yes_cert(max(branch.onset, cf.onset)), 0.5
    limit = cf.limit()
    if limit < 0:
        raise SemanticError("series exponent is certified negative; terms would not be in (0, ∞]")
    if limit != INF:
        return Answer.NO, _bounded_divergence_cert(cf, None, branch.pset, branch.onset), None
    if cf.var in (None, VAR_N):
        return Answer.YES, _n_convergence_cert(cf, 0.5, branch.pset, branch.onset), 0.5
    if cf.form.degree() > 1.0:
        return Answer.YES, _block_convergence_cert(cf, 0.5, branch.pset, branch.onset), 0.5
    return Answer.NO, _block_divergence_cert(cf, 0.5, branch.pset, branch.onset, every_alpha=True), None


# --------------------------------------------------------------------------
# public decisions
# --------------------------------------------------------------------------


def _combine(parts: list[tuple[Periodic, Answer, object]], probe) -> Verdict:
    for pset, ans, cert in parts:
        if ans is Answer.NO:
            return no(cert)
    if parts and all(ans is Answer.YES for _, ans, _ in parts):
        if len(parts) == 1:
            return yes(parts[0][2])
        return yes(BranchCertificates(tuple((_pset_json(p), c) for p, _, c in parts)))
    return unknown(probe())


def decide_convergence(alpha: float, exponent: E.ExponentSequence) -> Verdict:
    """Decide Σ_n α^{e(n)} < ∞ for a fixed base α > 0.

    Terms with e(n) = ∞ are dropped when α < 1.
    """
    if not (alpha > 0):
        raise SemanticError(f"series base must be positive, got {alpha}")
    if alpha >= 1.0:
        return no(
            DivergenceByTerms(1.0, 1, statement=f"α = {alpha:g} >= 1: terms never fall below 1"),
        )
    parts = []
    for b in normalize(exponent):
        ans, cert = decide_convergence_branch(alpha, b)
        parts.append((b.pset, ans, cert))

    def probe():
        s = partial_sum(alpha, exponent, PROBE_HORIZON)
        return NumericProbe(PROBE_HORIZON, ((alpha, s),), "undecided regime; partial sums attached")

    return _combine(parts, probe)


def exists_alpha(exponent: E.ExponentSequence) -> Verdict:
    """Decide ∃α ∈ (0,1): Σ_{n: e(n) < ∞} α^{e(n)} < ∞."""
    parts = []
    alpha_used = None
    for b in normalize(exponent):
        ans, cert, alpha = exists_alpha_branch(b)
        parts.append((b.pset, ans, cert))
        if alpha is not None:
            alpha_used = alpha

    def probe():
        sums = tuple((a, partial_sum(a, exponent, PROBE_HORIZON)) for a in PROBE_ALPHAS)
        return NumericProbe(PROBE_HORIZON, sums, "undecided regime; probes at several α attached")

    verdict = _combine(parts, probe)
    if verdict.answer is Answer.YES:
        return yes(AlphaCertificate(alpha_used if alpha_used is not None else 0.5, verdict.certificate))
    return verdict


def one_in_lrn(p: E.ExponentSequence, q: E.ExponentSequence) -> Verdict:
    """Membership of the all-ones sequence in the complementary-exponent
    space: equivalent to ∃α ∈ (0,1): Σ_{r_n < ∞} α^{r_n} < ∞."""
    from .verdicts import INCLUSION_TEST

    v = exists_alpha(E.RnOf(p, q))
    return Verdict(v.answer, v.certificate, INCLUSION_TEST)


# --------------------------------------------------------------------------
# partial sums (block-aggregated where possible)
# --------------------------------------------------------------------------

_DIRECT_CAP = 50_000_000
_CHUNK = 500_000


def _direct_partial_sum(alpha: float, exponent: E.ExponentSequence, horizon: int) -> float:
    total = 0.0
    n = 1
    while n <= horizon:
        stop = min(horizon + 1, n + _CHUNK)
        vals = exponent.eval_range(n, stop)
        finite = np.isfinite(vals)
        total += float(np.sum(alpha ** vals[finite]))
        n = stop
    return total


def _block_branches(exponent: E.ExponentSequence):
    """Per-branch closed forms when every branch is block/const, else None."""
    out = []
    for b in normalize(exponent):
        cf = closed_form(b.core)
        if cf is None:
            return None
        if not cf.is_inf and cf.var == VAR_N:
            lim = cf.form.limit()
            if not (math.isfinite(lim) and cf.form.is_const(lim)):
                return None
        out.append((b, cf))
    return out


def partial_sum(alpha: float, exponent: E.ExponentSequence, horizon: int) -> float:
    """Σ_{n <= horizon, e(n) < ∞} α^{e(n)} for α ∈ (0,1); exact per-block
    aggregation makes astronomically large horizons affordable for block
    exponents."""
    if not (0 < alpha < 1):
        raise SemanticError("partial sums are defined here for α in (0,1)")
    if horizon <= 2_000_000:
        return _direct_partial_sum(alpha, exponent, horizon)
    blocks = _block_branches(exponent)
    if blocks is None:
        if horizon > _DIRECT_CAP:
            raise SemanticError(f"horizon {horizon} too large for term-by-term summation on this exponent")
        return _direct_partial_sum(alpha, exponent, horizon)

    lead_in = max(max(b.onset, cf.onset) for b, cf in blocks)
    lead_in = min(lead_in, horizon)
    if lead_in > 2_000_000:
        raise SemanticError("closed-form onset too large for exact aggregation")
    total = _direct_partial_sum(alpha, exponent, lead_in)

    k = E.block_value(lead_in + 1) if lead_in < horizon else None
    while k is not None:
        start = max(E.block_start(k), lead_in + 1)
        if start > horizon:
            break
        end = min(E.block_end(k), horizon)
        for b, cf in blocks:
            count = b.pset.count_in_range(start, end)
            if count == 0:
                continue
            val = cf.eval_x(float(k)) if cf.var == VAR_A else cf.limit()
            if val != INF:
                total += count * alpha**val
        k += 1
    return total


def divergence_horizon(alpha: float, exponent: E.ExponentSequence, threshold: float = DIVERGENCE_THRESHOLD) -> int:
    """An index N with partial_sum(alpha, exponent, N) >= threshold,
    derived from the block structure (or a direct scan)."""
    blocks = _block_branches(exponent)
    if blocks is not None:
        total = 0.0
        k = 1
        while k < 10**6:
            start, end = E.block_start(k), E.block_end(k)
            for b, cf in blocks:
                count = b.pset.count_in_range(max(start, max(b.onset, cf.onset)), end)
                if count == 0:
                    continue
                val = cf.eval_x(float(k)) if cf.var == VAR_A else cf.limit()
                if val != INF:
                    total += count * alpha**val
            if total >= threshold:
                return end
            k += 1
        raise SemanticError("no divergence horizon found within 10^6 blocks")
    total = 0.0
    n = 1
    while n <= _DIRECT_CAP:
        stop = n + _CHUNK
        vals = exponent.eval_range(n, stop)
        finite = np.isfinite(vals)
        sums = np.cumsum(alpha ** np.where(finite, vals, INF))
        hit = np.nonzero(total + sums >= threshold)[0]
        if hit.size:
            return n + int(hit[0])
        total += float(sums[-1]) if sums.size else 0.0
        n = stop
    raise SemanticError(f"partial sums did not reach {threshold} within {_DIRECT_CAP} terms")
