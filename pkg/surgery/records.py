"""Serialization of surgery records to JSON objects, CSV rows and text blocks.

Rationals are written as strings "p/q" so that no float ever appears in a
report. Index sets are written as ascending lists.
"""

import json
from typing import Any, Dict, List

from surgery.exact_arith import format_ext_rational
from surgery.families import Family, PsPosition, SlopeDescriptor, SurgeryRecord

CSV_FIELDS = [
    'family', 'params', 'slope', 'classification',
    'index_sets', 'invariants', 'verdict', 'braid_index',
]


def slope_to_json(slope: SlopeDescriptor) -> Any:
    if slope.is_integer:
        return slope.value
    return str(slope.tag)


def position_to_dict(position: PsPosition) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        'surface_label': position.surface_label,
        'index_set': sorted(position.index_set),
    }
    if position.seifert_half is not None:
        data['invariants'] = [format_ext_rational(inv)
                              for inv in position.seifert_half.invariants]
    return data


def classification_to_dict(record: SurgeryRecord) -> Dict[str, Any]:
    result = record.classification
    data: Dict[str, Any] = {'kind': result.kind.value}
    if result.indices:
        data['indices'] = list(result.indices)
    if result.berge_type is not None:
        data['berge_type'] = result.berge_type.value
    if result.reason:
        data['reason'] = result.reason
    return data


def record_to_dict(record: SurgeryRecord) -> Dict[str, Any]:
    """Flatten a record into JSON-ready primitives."""
    verdict = record.verdict
    data: Dict[str, Any] = {
        'family': record.family.value,
        'params': record.params.as_dict(),
        'slope': slope_to_json(record.slope),
        'classification': classification_to_dict(record),
        'positions': [position_to_dict(pos) for pos in record.positions],
        'verdict': verdict.kind.value if verdict else None,
        'evidence': dict(verdict.evidence) if verdict else {},
    }
    if verdict is not None and verdict.reason:
        data['reason'] = verdict.reason
    if verdict is not None and verdict.notes:
        data['notes'] = list(verdict.notes)
    if record.family is Family.TTK:
        data['hyperbolic_certified'] = record.hyperbolic_certified
        data['linking_number'] = record.linking_number
    else:
        data['exceptional_indices'] = list(record.exceptional_indices)
        data['theorem_hypothesis'] = record.theorem_hypothesis
        data['braid_index'] = record.braid_index
        if record.tangles is not None:
            data['tangles'] = record.tangles.as_dict()
    return data


def record_to_json_line(record: SurgeryRecord) -> str:
    return json.dumps(record_to_dict(record), sort_keys=True, ensure_ascii=False)


def _params_text(record: SurgeryRecord) -> str:
    return ' '.join(f"{k}={v}" for k, v in record.params.as_dict().items())


def record_to_csv_row(record: SurgeryRecord) -> List[str]:
    """Row matching CSV_FIELDS; nested values joined with ';' and '|'."""
    data = record_to_dict(record)
    index_sets = '|'.join(
        ';'.join(str(i) for i in pos['index_set']) for pos in data['positions']
    )
    invariants = '|'.join(
        ';'.join(pos.get('invariants', [])) for pos in data['positions']
    )
    braid = record.braid_index if record.braid_index is not None else ''
    return [
        data['family'],
        _params_text(record),
        str(data['slope']),
        data['classification']['kind'],
        index_sets,
        invariants,
        data['verdict'] or '',
        str(braid),
    ]


def record_to_text(record: SurgeryRecord) -> str:
    """Human-readable block for a single record."""
    lines = [f"{record.params}  slope {record.slope}"]
    lines.append(f"  result: {record.classification}")
    if record.family is Family.TTK:
        lines.append(f"  linking number p+q: {record.linking_number}")
        certified = 'yes' if record.hyperbolic_certified else 'not certified'
        lines.append(f"  hyperbolic (|n| > 3): {certified}")
    else:
        if record.tangles is not None:
            t = record.tangles
            lines.append(f"  tangles: A={t.A}  B={t.B}  C={t.C}")
        lines.append(f"  branch indices (A, B, C): {list(record.exceptional_indices)}")
        lines.append(f"  A/B indices differ: {'yes' if record.theorem_hypothesis else 'no'}")
        braid = record.braid_index if record.braid_index is not None else 'n/a'
        lines.append(f"  braid index: {braid}")
    for pos in record.positions:
        line = f"  position {pos.surface_label}: index set {sorted(pos.index_set)}"
        if pos.seifert_half is not None:
            line += f", Seifert half {pos.seifert_half}"
        lines.append(line)
    if record.verdict is not None:
        lines.append(f"  verdict: {record.verdict}")
        for note in record.verdict.notes:
            lines.append(f"    note: {note}")
    return '\n'.join(lines)
