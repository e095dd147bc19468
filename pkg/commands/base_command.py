"""Base command class for the CLI subcommands."""

import argparse
import logging
import sys
from abc import ABC, abstractmethod
from typing import Optional

from utils.errors import SurgeryError
from utils.report_writer import ReportWriter
from utils.settings import SettingsManager

logger = logging.getLogger(__name__)


class BaseCommand(ABC):
    """Base class for all subcommands.

    Provides common functionality:
    - Settings access (default format, workers)
    - The shared --format / --output flags
    - Report writer setup and teardown
    - Mapping toolkit errors to exit codes
    """

    name = ""
    help = ""
    writes_reports = True

    def __init__(self, settings: Optional[SettingsManager] = None):
        """Initialize base command.

        Args:
            settings: Settings manager; a default one is loaded on first use if omitted
        """
        self._settings = settings

    @property
    def settings(self) -> SettingsManager:
        if self._settings is None:
            self._settings = SettingsManager()
        return self._settings

    def register(self, subparsers) -> argparse.ArgumentParser:
        """Create this command's subparser and attach its arguments."""
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        self.add_arguments(parser)
        if self.writes_reports:
            self._add_output_arguments(parser)
        parser.set_defaults(command_class=type(self))
        return parser

    @staticmethod
    def _add_output_arguments(parser: argparse.ArgumentParser):
        parser.add_argument('--format', choices=SettingsManager.FORMATS, default=None,
                            help="report format (default from settings)")
        parser.add_argument('--output', metavar='PATH', default=None,
                            help="write the report to PATH instead of stdout")

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser):
        """Declare the command's own arguments."""
        pass

    @abstractmethod
    def _execute(self, args: argparse.Namespace, writer: Optional[ReportWriter]) -> int:
        """Do the work and return the exit code.

        Args:
            args: Parsed arguments
            writer: Open report writer, or None if the command writes no report
        """
        pass

    def _get_format(self, args: argparse.Namespace) -> str:
        return getattr(args, 'format', None) or self.settings.get_format()

    def run(self, args: argparse.Namespace) -> int:
        """Run the command. Main entry point; never raises SurgeryError."""
        try:
            if not self.writes_reports:
                return self._execute(args, None)
            with ReportWriter(self._get_format(args), getattr(args, 'output', None)) as writer:
                return self._execute(args, writer)
        except SurgeryError as e:
            logger.debug("%s failed", self.name, exc_info=True)
            print(f"error: {e}", file=sys.stderr)
            return e.exit_code
