"""Compare two Seifert fibered spaces given by their invariants."""

import argparse
from typing import List, Optional

from surgery.exact_arith import ext_rational, format_ext_rational, is_infinite
from surgery.seifert import BaseOrbifold, SfsDescriptor, euler_sum, sfs_homeomorphic, sfs_normalize
from utils.errors import UsageError
from utils.report_writer import ReportWriter
from commands.base_command import BaseCommand


def parse_invariants(text: str) -> List:
    """Comma-separated fractions, e.g. ``4/3,9/5``."""
    values = []
    for part in text.split(','):
        if not part.strip():
            continue
        try:
            value = ext_rational(part)
        except ValueError as e:
            raise UsageError(str(e)) from None
        if is_infinite(value):
            raise UsageError("Seifert invariants must be finite")
        values.append(value)
    return values


class CompareSfsCommand(BaseCommand):
    """Decide orientation-preserving homeomorphism from the normalized invariants."""

    name = "compare-sfs"
    help = "compare two Seifert fibered spaces by their invariants mod 1"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('--base', default='disk', help="disk or sphere")
        parser.add_argument('invariants1', metavar='INV1', help="e.g. 4/3,9/5")
        parser.add_argument('invariants2', metavar='INV2', help="e.g. -1/3,9/5")

    def _describe(self, base: BaseOrbifold, text: str) -> SfsDescriptor:
        try:
            return SfsDescriptor(base=base, invariants=tuple(parse_invariants(text)))
        except ValueError as e:
            raise UsageError(str(e)) from None

    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        try:
            base = BaseOrbifold.parse(args.base)
        except ValueError as e:
            raise UsageError(str(e)) from None
        d1 = self._describe(base, args.invariants1)
        d2 = self._describe(base, args.invariants2)
        n1, n2 = sfs_normalize(d1), sfs_normalize(d2)
        homeomorphic = sfs_homeomorphic(d1, d2)

        data = {
            'base': base.value,
            'normalized': [[format_ext_rational(inv) for inv in n.invariants] for n in (n1, n2)],
            'homeomorphic': homeomorphic,
        }
        lines = [f"{d1}  ->  mod 1: {n1}", f"{d2}  ->  mod 1: {n2}"]
        if base is BaseOrbifold.SPHERE:
            sums = [format_ext_rational(euler_sum(d)) for d in (d1, d2)]
            data['sums'] = sums
            lines.append(f"invariant sums: {sums[0]} vs {sums[1]}")
        lines.append("homeomorphic (orientation-preserving)" if homeomorphic
                     else "NOT homeomorphic (orientation-preserving)")
        writer.write_object(data, '\n'.join(lines))
        return 0
