"""Command registry and argument dispatch."""

import argparse
import re
import sys
from typing import List, Optional, Sequence

from commands.compare_sfs_command import CompareSfsCommand
from commands.enumerate_command import EnumerateCommand
from commands.settings_command import SettingsCommand
from commands.surgery_commands import EmkCommand, TtkCommand
from commands.tangle_command import TangleCommand
from utils.log import configure_logging
from utils.settings import SettingsManager

# values such as -1,2,3 or -1/3,-4/5 or -6..-2 that argparse would take for flags
_NEGATIVE_VALUE = re.compile(r'^-\d[-\d,/.]*$')


def protect_negative_values(argv: Sequence[str]) -> List[str]:
    """Prefix negative-looking values with a space so argparse keeps them as values.

    Plain negative integers are left alone; argparse already accepts those.
    """
    protected = []
    for token in argv:
        if _NEGATIVE_VALUE.match(token) and not re.fullmatch(r'-\d+', token):
            token = ' ' + token
        protected.append(token)
    return protected


class CommandMenu:
    """Builds the argument parser from the registered commands and runs one."""

    COMMANDS = [
        TangleCommand,
        TtkCommand,
        EmkCommand,
        EnumerateCommand,
        CompareSfsCommand,
        SettingsCommand,
    ]

    def __init__(self):
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog='seifert-positions',
            description="Exact computations on Seifert fibered surgeries and "
                        "their primitive/Seifert positions.",
        )
        parser.add_argument('--data-dir', default='data',
                            help="directory holding settings.json (default: data)")
        parser.add_argument('--log-level', default=None,
                            choices=SettingsManager.LOG_LEVELS,
                            help="stderr log level (default from settings)")
        subparsers = parser.add_subparsers(dest='command_name', metavar='COMMAND')
        subparsers.required = True
        for command_class in self.COMMANDS:
            # registration never loads settings; --data-dir is not known yet
            command_class().register(subparsers)
        return parser

    def parse(self, argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
        """Parse arguments; argparse exits with status 2 on usage errors."""
        if argv is None:
            argv = sys.argv[1:]
        argv = protect_negative_values(argv)
        return self.parser.parse_args(argv)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Parse, configure settings and logging, and run the chosen command."""
        args = self.parse(argv)
        settings = SettingsManager(args.data_dir)
        configure_logging(args.log_level or settings.get_log_level())
        command = args.command_class(settings=settings)
        return command.run(args)

