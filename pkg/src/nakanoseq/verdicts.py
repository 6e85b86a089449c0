"""Three-valued answers and cited verdicts.

Every Yes/No verdict carries a citation string from the fixed anchor set
below; the strings are part of the stable JSON output contract.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __bool__(self):
        raise TypeError("Answer is three-valued; compare explicitly")


# Anchors a cited verdict may reference.  Stable output contract.
NAKANO_LEMMA = "Prop 1.2 (Nakano's Lemma)"
LINF_COPY = "Prop 1.4"
INCLUSION_TEST = "Thm 1.3"
SS_BOUNDED = "Thm 2.1"
SS_UNBOUNDED_TARGET = "Thm 2.2"
SS_UNBOUNDED_SOURCE = "Thm 2.3"
WEAK_COMPACTNESS = "Prop 2.5"
CANONICAL_BASIS_REMARK = "§2-remark"

CITATION_ANCHORS = frozenset(
    {
        NAKANO_LEMMA,
        LINF_COPY,
        INCLUSION_TEST,
        SS_BOUNDED,
        SS_UNBOUNDED_TARGET,
        SS_UNBOUNDED_SOURCE,
        WEAK_COMPACTNESS,
        CANONICAL_BASIS_REMARK,
    }
)

# Anchors used by space profiles only (not part of the inclusion-report set).
SEPARABILITY_REMARK = "§1-remark"

NOT_APPLICABLE = "inclusion not established"


@dataclass(frozen=True)
class Verdict:
    """A three-valued answer plus the evidence and criterion anchor behind it.

    ``certificate`` is ``None`` only for verdicts that need no evidence;
    Yes/No verdicts from the series and criteria layers always attach one.
    """

    answer: Answer
    certificate: Optional[Any] = None
    citation: str = ""

    def to_json(self) -> dict:
        cert = self.certificate
        if cert is not None and hasattr(cert, "to_json"):
            cert = cert.to_json()
        elif cert is not None:
            cert = str(cert)
        return {"answer": self.answer.value, "certificate": cert, "citation": self.citation}

    def __str__(self):
        label = {Answer.YES: "Yes", Answer.NO: "No", Answer.UNKNOWN: "Unknown"}[self.answer]
        parts = [label]
        if self.citation:
            parts.append(self.citation)
        if self.certificate is not None:
            parts.append(str(self.certificate))
        return " — ".join(parts)


def yes(certificate=None, citation="") -> Verdict:
    return Verdict(Answer.YES, certificate, citation)


def no(certificate=None, citation="") -> Verdict:
    return Verdict(Answer.NO, certificate, citation)


def unknown(certificate=None, citation="") -> Verdict:
    return Verdict(Answer.UNKNOWN, certificate, citation)
