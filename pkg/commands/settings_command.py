"""Show and change persisted settings."""

import argparse
import json
from typing import Optional

from utils.errors import UsageError
from utils.report_writer import ReportWriter
from commands.base_command import BaseCommand


class SettingsCommand(BaseCommand):
    """``settings show [CATEGORY]``, ``settings set CATEGORY KEY VALUE``, ``settings reset``."""

    name = "settings"
    help = "show or change settings stored in the data directory"
    writes_reports = False

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('action', choices=('show', 'set', 'reset'))
        parser.add_argument('values', nargs='*', metavar='CATEGORY KEY VALUE')

    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        shown = None
        if args.action == 'reset':
            self.settings.reset_to_defaults()
        elif args.action == 'set':
            if len(args.values) != 3:
                raise UsageError("usage: settings set CATEGORY KEY VALUE")
            category, key, raw = args.values
            try:
                value = json.loads(raw)
            except json.JSONDecodeError:
                value = raw
            self.settings.set(category, key, value)
        elif args.values:
            if len(args.values) != 1:
                raise UsageError("usage: settings show [CATEGORY]")
            category = args.values[0]
            if category not in self.settings.get_all_settings():
                raise UsageError(f"unknown settings category: {category!r}")
            shown = self.settings.get_category(category)

        if shown is None:
            shown = self.settings.get_all_settings()
        print(json.dumps(shown, indent=self.settings.get_indent(), sort_keys=True))
        return 0
