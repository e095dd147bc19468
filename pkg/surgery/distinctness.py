"""Deciding whether two primitive/Seifert positions of a surgery are distinct.

Both tests here are sufficient conditions only. Positions with different
index sets are distinct. When the index sets agree, Seifert halves that are
not orientation-preservingly homeomorphic (mod-1 invariants differ) still
separate them. Nothing ever certifies that two positions coincide.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Tuple

from surgery.exact_arith import format_ext_rational
from surgery.families import Family, PsPosition, SurgeryRecord
from surgery.seifert import sfs_homeomorphic, sfs_normalize
from utils.errors import SurgeryError, SurgeryMismatchError

logger = logging.getLogger(__name__)

REASON_HALVES_HOMEOMORPHIC = (
    "Seifert halves homeomorphic; positions may coincide "
    "(open question on homeomorphic Seifert halves)"
)
REASON_NO_INVARIANTS = "index sets equal, invariant data unavailable"
NOTE_HYPOTHESIS_FAILED = (
    "A- and B-branch indices coincide, so the index-set criterion does not apply; "
    "the Seifert invariants mod 1 still separate the positions"
)


class VerdictKind(Enum):
    DISTINCT_BY_INDEX_SET = "DistinctByIndexSet"
    DISTINCT_BY_INVARIANTS_MOD1 = "DistinctByInvariantsMod1"
    INCONCLUSIVE = "Inconclusive"
    HYPOTHESIS_VIOLATED = "HypothesisViolated"

    @property
    def is_distinct(self) -> bool:
        return self in (VerdictKind.DISTINCT_BY_INDEX_SET,
                        VerdictKind.DISTINCT_BY_INVARIANTS_MOD1)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a distinctness check with the data it rests on."""

    kind: VerdictKind
    reason: str = ""
    evidence: Dict[str, object] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.reason:
            return f"{self.kind.value} ({self.reason})"
        return self.kind.value


def _evidence(pos1: PsPosition, pos2: PsPosition, with_invariants: bool = False) -> Dict[str, object]:
    evidence: Dict[str, object] = {
        'index_sets': [sorted(pos1.index_set), sorted(pos2.index_set)],
    }
    if with_invariants:
        evidence['invariants_mod1'] = [
            [format_ext_rational(inv) for inv in sfs_normalize(pos.seifert_half).invariants]
            for pos in (pos1, pos2)
        ]
    return evidence


def decide_distinct(pos1: PsPosition, pos2: PsPosition) -> Verdict:
    """Apply the index-set test, then the mod-1 invariant test.

    Raises:
        SurgeryMismatchError: If the positions have different slopes.
    """
    if pos1.slope != pos2.slope:
        raise SurgeryMismatchError(
            f"not the same surgery: slopes {pos1.slope} and {pos2.slope}"
        )

    if pos1.index_set != pos2.index_set:
        return Verdict(VerdictKind.DISTINCT_BY_INDEX_SET, evidence=_evidence(pos1, pos2))

    if pos1.seifert_half is None or pos2.seifert_half is None:
        return Verdict(VerdictKind.INCONCLUSIVE, reason=REASON_NO_INVARIANTS,
                       evidence=_evidence(pos1, pos2))

    evidence = _evidence(pos1, pos2, with_invariants=True)
    if not sfs_homeomorphic(pos1.seifert_half, pos2.seifert_half):
        return Verdict(VerdictKind.DISTINCT_BY_INVARIANTS_MOD1, evidence=evidence)
    return Verdict(VerdictKind.INCONCLUSIVE, reason=REASON_HALVES_HOMEOMORPHIC,
                   evidence=evidence)


def decide_surgery(record: SurgeryRecord) -> SurgeryRecord:
    """Return a copy of the record with its verdict filled in.

    Records built without genuine Seifert halves come back as
    HypothesisViolated.

    Raises:
        SurgeryError: If a non-degenerate record does not carry exactly two positions.
    """
    if record.degeneracy is not None:
        verdict = Verdict(VerdictKind.HYPOTHESIS_VIOLATED, reason=record.degeneracy)
        return replace(record, verdict=verdict)

    if len(record.positions) != 2:
        raise SurgeryError(f"expected 2 positions, got {len(record.positions)}")

    verdict = decide_distinct(*record.positions)
    if (record.family is Family.EM and record.theorem_hypothesis is False
            and verdict.kind is VerdictKind.DISTINCT_BY_INVARIANTS_MOD1):
        verdict = replace(verdict, notes=verdict.notes + (NOTE_HYPOTHESIS_FAILED,))
    logger.debug("%s: %s", record.params, verdict)
    return replace(record, verdict=verdict)
