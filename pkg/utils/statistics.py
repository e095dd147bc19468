"""Running statistics over a stream of decided surgery records."""

from collections import Counter
from typing import Any, Dict, Set, Tuple

from surgery.distinctness import VerdictKind
from surgery.families import ResultKind, SurgeryRecord


class VerdictStatistics:
    """Tallies verdicts, result classes, braid indices and result manifolds."""

    def __init__(self):
        self.total = 0
        self.verdicts: Counter = Counter()
        self.classifications: Counter = Counter()
        self.braid_indices: Set[int] = set()
        # sorted index multisets of the Seifert fibered results
        self.result_manifolds: Set[Tuple[int, ...]] = set()
        self.hypothesis_failed_but_distinct = 0

    def record(self, record: SurgeryRecord):
        """Fold one decided record into the tallies.

        Args:
            record: A record returned by ``decide_surgery``
        """
        self.total += 1
        kind = record.verdict.kind if record.verdict is not None else None
        self.verdicts[kind.value if kind else 'undecided'] += 1
        self.classifications[record.classification.kind.value] += 1

        if record.braid_index is not None:
            self.braid_indices.add(record.braid_index)
        if record.classification.kind is ResultKind.SEIFERT_OVER_S2:
            self.result_manifolds.add(tuple(sorted(record.classification.indices)))
        if record.theorem_hypothesis is False and kind is VerdictKind.DISTINCT_BY_INVARIANTS_MOD1:
            self.hypothesis_failed_but_distinct += 1

    def count(self, kind: VerdictKind) -> int:
        return self.verdicts.get(kind.value, 0)

    def all_distinct(self) -> bool:
        """True if every recorded verdict certifies distinct positions."""
        distinct = sum(self.count(k) for k in VerdictKind if k.is_distinct)
        return self.total > 0 and distinct == self.total

    def summary(self) -> Dict[str, Any]:
        """Plain-dict summary, deterministic in key and value order.

        Returns:
            Dictionary with record count, verdict counts, classification
            counts and the number of distinct braid indices / result manifolds
        """
        return {
            'summary': True,
            'records': self.total,
            'verdicts': dict(sorted(self.verdicts.items())),
            'classifications': dict(sorted(self.classifications.items())),
            'distinct_braid_indices': len(self.braid_indices),
            'distinct_result_index_multisets': len(self.result_manifolds),
            'hypothesis_failed_but_distinct': self.hypothesis_failed_but_distinct,
        }

    def format_summary(self) -> str:
        """Text footer for the human-readable report."""
        data = self.summary()
        lines = [f"records: {data['records']}"]
        for kind, count in data['verdicts'].items():
            lines.append(f"  {kind}: {count}")
        lines.append(f"distinct braid indices: {data['distinct_braid_indices']}")
        lines.append(f"distinct result index multisets: {data['distinct_result_index_multisets']}")
        if data['hypothesis_failed_but_distinct']:
            lines.append(
                f"distinct despite equal A/B indices: {data['hypothesis_failed_but_distinct']}"
            )
        return '\n'.join(lines)
