"""Enumerate surgery records over parameter ranges."""

import argparse
from typing import Optional

from surgery.enumeration import enumerate_em, enumerate_ttk, parse_range
from surgery.families import SymbolicSlope
from surgery.tangle import FamilyCase
from utils.errors import UsageError
from utils.report_writer import ReportWriter
from utils.statistics import VerdictStatistics
from commands.base_command import BaseCommand


class EnumerateCommand(BaseCommand):
    """Sweep a family over inclusive ranges ``a..b`` and summarize the verdicts."""

    name = "enumerate"
    help = "enumerate records over parameter ranges, with a verdict summary"

    def register(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        families = parser.add_subparsers(dest='family', metavar='FAMILY')
        families.required = True

        ttk = families.add_parser('ttk', help="twisted torus knots K(p, q, p+q, n)")
        ttk.add_argument('--p', required=True, metavar='A..B')
        ttk.add_argument('--q', required=True, metavar='A..B')
        ttk.add_argument('--n', required=True, metavar='A..B')

        emk = families.add_parser('emk', help="tangle-constructed knots k(A, B, C)")
        emk.add_argument('--case', default='1', help="1 or 2")
        emk.add_argument('--l', required=True, metavar='A..B')
        emk.add_argument('--m', required=True, metavar='A..B')
        emk.add_argument('--n', metavar='A..B', help="n range (case 1)")
        emk.add_argument('--p', metavar='A..B', help="p range (case 2)")
        emk.add_argument('--slope', default='both', help="0, 1 or both (default)")

        for sub in (ttk, emk):
            self._add_output_arguments(sub)
            sub.add_argument('--workers', type=int, default=None,
                             help="worker processes (default from settings)")
            sub.set_defaults(command_class=type(self))
        return parser

    def add_arguments(self, parser: argparse.ArgumentParser):
        # arguments live on the per-family subparsers
        pass

    def _records(self, args: argparse.Namespace):
        workers = args.workers if args.workers is not None else self.settings.get_workers()
        workers = max(1, workers)
        chunk_size = self.settings.get_chunk_size()
        if args.family == 'ttk':
            return enumerate_ttk(parse_range(args.p), parse_range(args.q), parse_range(args.n),
                                 workers=workers, chunk_size=chunk_size)

        try:
            case = FamilyCase.parse(args.case)
            slopes = None
            if str(args.slope).strip().lower() != 'both':
                slopes = (SymbolicSlope.parse(args.slope).value,)
        except ValueError as e:
            raise UsageError(str(e)) from None
        x_text = args.n if case is FamilyCase.CASE1 else args.p
        if x_text is None:
            flag = '--n' if case is FamilyCase.CASE1 else '--p'
            raise UsageError(f"{case.value} needs {flag}")
        return enumerate_em(case, parse_range(args.l), parse_range(args.m), parse_range(x_text),
                            slopes=slopes, workers=workers, chunk_size=chunk_size)

    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        stats = VerdictStatistics()
        records = self._records(args)
        try:
            for record in records:
                stats.record(record)
                writer.write_record(record)
        finally:
            close = getattr(records, 'close', None)
            if close is not None:
                close()
        writer.write_summary(stats.summary(), stats.format_summary())
        return 0
