"""Single-record reports for both knot families."""

import argparse
from typing import Optional

from surgery.distinctness import decide_surgery
from surgery.families import EmKnotParams, TwistedTorusKnotParams, em_record, ttk_record
from utils.errors import UsageError
from utils.report_writer import ReportWriter
from commands.base_command import BaseCommand


class TtkCommand(BaseCommand):
    """Report on (pq + n(p+q)^2)-surgery on the twisted torus knot K(p, q, p+q, n)."""

    name = "ttk"
    help = "report on the Seifert fibered surgery of a twisted torus knot"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('p', type=int)
        parser.add_argument('q', type=int)
        parser.add_argument('n', type=int, help="number of full twists")

    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        params = TwistedTorusKnotParams(args.p, args.q, args.n)
        writer.write_record(decide_surgery(ttk_record(params)))
        return 0


class EmkCommand(BaseCommand):
    """Report on gamma_s-surgery on k(l, m, n, 0) or k(l, m, 0, p)."""

    name = "emk"
    help = "report on the Seifert fibered surgery of a tangle-constructed knot"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('case', help="case1 (k(l,m,n,0)) or case2 (k(l,m,0,p))")
        parser.add_argument('l', type=int)
        parser.add_argument('m', type=int)
        parser.add_argument('n_or_p', type=int, metavar='n|p')
        parser.add_argument('--slope', default='0', help="s in gamma_s: 0 or 1")

    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        try:
            params = EmKnotParams.create(args.case, args.l, args.m, args.n_or_p, args.slope)
        except ValueError as e:
            raise UsageError(str(e)) from None
        # degenerate branches come back in-band as HypothesisViolated
        writer.write_record(decide_surgery(em_record(params)))
        return 0
