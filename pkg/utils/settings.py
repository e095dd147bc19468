"""Settings management system."""

import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict

logger = logging.getLogger(__name__)


class SettingsManager:
    """Manages toolkit settings stored as JSON in the data directory."""

    DEFAULT_SETTINGS = {
        'output': {
            'format': 'text',  # text, jsonl, csv
            'indent': 2,
        },
        'enumerate': {
            'workers': 1,
            'chunk_size': 64,
        },
        'logging': {
            'level': 'WARNING',  # DEBUG, INFO, WARNING, ERROR
        },
    }

    FORMATS = ('text', 'jsonl', 'csv')
    LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')

    def __init__(self, data_dir: str = "data"):
        """Initialize the settings manager.

        Args:
            data_dir: Directory holding settings.json
        """
        self.data_dir = Path(data_dir)
        self.settings_file = self.data_dir / "settings.json"
        self._settings = self._load_settings()

    def _defaults(self) -> Dict[str, Any]:
        return copy.deepcopy(self.DEFAULT_SETTINGS)

    def _load_settings(self) -> Dict[str, Any]:
        """Load settings from file, merged over the defaults."""
        if not self.settings_file.exists():
            return self._defaults()

        try:
            with open(self.settings_file, 'r') as f:
                loaded = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            logger.warning("ignoring unreadable settings file %s: %s", self.settings_file, e)
            return self._defaults()

        settings = self._defaults()
        for key, value in loaded.items():
            if isinstance(value, dict) and key in settings:
                settings[key].update(value)
            else:
                settings[key] = value
        return settings

    def _save_settings(self):
        """Save settings to file."""
        try:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            with open(self.settings_file, 'w') as f:
                json.dump(self._settings, f, indent=2)
        except IOError as e:
            logger.warning("could not save settings to %s: %s", self.settings_file, e)

    def get(self, category: str, key: str, default: Any = None) -> Any:
        """Get a setting value.

        Args:
            category: Settings category (e.g., 'output', 'enumerate')
            key: Setting key
            default: Default value if not found

        Returns:
            Setting value or default
        """
        return self._settings.get(category, {}).get(key, default)

    def set(self, category: str, key: str, value: Any):
        """Set a setting value and persist it.

        Args:
            category: Settings category
            key: Setting key
            value: Setting value
        """
        if category not in self._settings:
            self._settings[category] = {}
        self._settings[category][key] = value
        self._save_settings()

    def get_category(self, category: str) -> Dict[str, Any]:
        """Get all settings of one category."""
        return dict(self._settings.get(category, {}))

    def get_format(self) -> str:
        """Default report format, falling back to text for unknown values."""
        fmt = str(self.get('output', 'format', 'text')).lower()
        return fmt if fmt in self.FORMATS else 'text'

    def get_workers(self) -> int:
        """Enumeration worker count, at least 1."""
        try:
            return max(1, int(self.get('enumerate', 'workers', 1)))
        except (TypeError, ValueError):
            return 1

    def get_chunk_size(self) -> int:
        try:
            return max(1, int(self.get('enumerate', 'chunk_size', 64)))
        except (TypeError, ValueError):
            return 64

    def get_indent(self) -> int:
        """Indentation of JSON printed by the settings command, at least 0."""
        try:
            return max(0, int(self.get('output', 'indent', 2)))
        except (TypeError, ValueError):
            return 2

    def get_log_level(self) -> str:
        level = str(self.get('logging', 'level', 'WARNING')).upper()
        return level if level in self.LOG_LEVELS else 'WARNING'

    def reset_to_defaults(self):
        """Reset all settings to defaults."""
        self._settings = self._defaults()
        self._save_settings()

    def get_all_settings(self) -> Dict[str, Any]:
        """Get all settings.

        Returns:
            Complete settings dictionary
        """
        return copy.deepcopy(self._settings)
