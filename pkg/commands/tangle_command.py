"""Fraction <-> continued fraction conversion for rational tangles."""

import argparse
from typing import Optional

from surgery.exact_arith import (
    convergents,
    ext_rational,
    format_ext_rational,
    is_infinite,
    rational_to_cf,
)
from surgery.tangle import tangle_from_cf, tangle_from_fraction
from utils.errors import UsageError
from utils.report_writer import ReportWriter
from commands.base_command import BaseCommand


def parse_cf_entries(text: str):
    try:
        entries = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise UsageError(f"continued fraction entries must be integers: {text!r}") from None
    if not entries:
        raise UsageError("continued fraction needs at least one entry")
    return entries


def parse_rational(text: str):
    try:
        return ext_rational(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


class TangleCommand(BaseCommand):
    """Show R(a1, ..., an) and R(p/q) both ways."""

    name = "tangle"
    help = "convert between a rational tangle's continued fraction and its fraction"

    def add_arguments(self, parser: argparse.ArgumentParser):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument('--cf', metavar='A1,...,AN',
                           help="integer entries, innermost first")
        group.add_argument('--rational', metavar='P/Q', help="fraction p/q or inf")

    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        if args.cf is not None:
            tangle = tangle_from_cf(parse_cf_entries(args.cf))
            chain = [format_ext_rational(v) for v in convergents(tangle.presentation)]
        else:
            tangle = tangle_from_fraction(parse_rational(args.rational))
            chain = []

        fraction = tangle.fraction
        cf = tangle.presentation
        if cf is None and not is_infinite(fraction):
            cf = rational_to_cf(fraction)

        data = {
            'tangle': str(tangle),
            'fraction': format_ext_rational(fraction),
            'cf': list(cf.entries) if cf is not None else None,
        }
        lines = [f"tangle: {tangle}", f"fraction: {data['fraction']}"]
        if cf is not None:
            lines.append(f"continued fraction: {cf}")
        else:
            lines.append("continued fraction: none (inf has no finite expansion)")
        if chain:
            data['convergents'] = chain
            lines.append(f"evaluation: {' -> '.join(chain)}")
        writer.write_object(data, '\n'.join(lines))
        return 0
