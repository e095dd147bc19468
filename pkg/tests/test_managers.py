"""Tests for manager classes."""

import io
import json
import shutil
import tempfile
import unittest
from pathlib import Path

from surgery.distinctness import VerdictKind, decide_surgery
from surgery.families import EmKnotParams, TwistedTorusKnotParams, em_record, ttk_record
from utils.report_writer import ReportWriter
from utils.settings import SettingsManager
from utils.statistics import VerdictStatistics


class TestSettingsManager(unittest.TestCase):
    """Test SettingsManager functionality."""

    def setUp(self):
        """Set up test environment."""
        self.test_dir = tempfile.mkdtemp()
        self.manager = SettingsManager(self.test_dir)

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.test_dir)

    def test_default_settings(self):
        """Test default settings are loaded."""
        self.assertEqual(self.manager.get_format(), 'text')
        self.assertEqual(self.manager.get_workers(), 1)
        self.assertEqual(self.manager.get_log_level(), 'WARNING')

    def test_set_and_get(self):
        """Test setting and getting values."""
        self.manager.set('output', 'format', 'csv')
        self.assertEqual(self.manager.get('output', 'format'), 'csv')

    def test_persistence(self):
        """Test settings survive a reload."""
        self.manager.set('enumerate', 'workers', 3)
        reloaded = SettingsManager(self.test_dir)
        self.assertEqual(reloaded.get_workers(), 3)
        self.assertEqual(reloaded.get_chunk_size(), 64)

    def test_invalid_values_fall_back(self):
        """Test invalid stored values fall back to defaults."""
        self.manager.set('output', 'format', 'xml')
        self.manager.set('enumerate', 'workers', 'many')
        self.assertEqual(self.manager.get_format(), 'text')
        self.assertEqual(self.manager.get_workers(), 1)

    def test_unreadable_file(self):
        """Test a corrupt settings file is ignored."""
        Path(self.test_dir, 'settings.json').write_text('{not json')
        with self.assertLogs('utils.settings', level='WARNING'):
            manager = SettingsManager(self.test_dir)
        self.assertEqual(manager.get_format(), 'text')

    def test_reset_does_not_share_defaults(self):
        """Test reset copies the defaults."""
        self.manager.set('output', 'format', 'jsonl')
        self.manager.reset_to_defaults()
        self.assertEqual(self.manager.get_format(), 'text')
        self.assertEqual(SettingsManager.DEFAULT_SETTINGS['output']['format'], 'text')

    def test_get_category(self):
        """Test a category comes back as a copy, and unknown ones as empty."""
        self.assertEqual(self.manager.get_category('enumerate'), {'workers': 1, 'chunk_size': 64})
        self.manager.get_category('enumerate')['workers'] = 8
        self.assertEqual(self.manager.get_workers(), 1)
        self.assertEqual(self.manager.get_category('colors'), {})

    def test_indent(self):
        """Test the JSON indent setting and its fallbacks."""
        self.assertEqual(self.manager.get_indent(), 2)
        self.manager.set('output', 'indent', 4)
        self.assertEqual(self.manager.get_indent(), 4)
        self.manager.set('output', 'indent', -1)
        self.assertEqual(self.manager.get_indent(), 0)
        self.manager.set('output', 'indent', 'wide')
        self.assertEqual(self.manager.get_indent(), 2)


class TestVerdictStatistics(unittest.TestCase):
    """Test VerdictStatistics functionality."""

    def setUp(self):
        self.stats = VerdictStatistics()

    def test_empty(self):
        """Test an empty summary."""
        self.assertEqual(self.stats.summary()['records'], 0)
        self.assertFalse(self.stats.all_distinct())

    def test_counts(self):
        """Test verdict counts."""
        for n in (2, 3, 0):
            self.stats.record(decide_surgery(ttk_record(TwistedTorusKnotParams(2, 3, n))))
        self.assertEqual(self.stats.count(VerdictKind.DISTINCT_BY_INDEX_SET), 2)
        self.assertEqual(self.stats.count(VerdictKind.HYPOTHESIS_VIOLATED), 1)
        self.assertFalse(self.stats.all_distinct())
        summary = self.stats.summary()
        self.assertEqual(summary['classifications'],
                         {'ConnectedSumOfTwoLensSpaces': 1, 'SeifertOverS2': 2})
        self.assertEqual(summary['distinct_result_index_multisets'], 2)

    def test_braid_indices_and_failed_hypothesis(self):
        """Test braid indices and hypothesis counts."""
        for n in (2, 3, 4):
            self.stats.record(decide_surgery(em_record(EmKnotParams.create(1, 2, 4, n, 1))))
        summary = self.stats.summary()
        self.assertTrue(self.stats.all_distinct())
        self.assertEqual(summary['distinct_braid_indices'], 1)
        self.assertEqual(summary['hypothesis_failed_but_distinct'], 3)
        self.assertIn('distinct despite equal A/B indices: 3', self.stats.format_summary())


class TestReportWriter(unittest.TestCase):
    """Test ReportWriter functionality."""

    def setUp(self):
        self.record = decide_surgery(ttk_record(TwistedTorusKnotParams(2, 3, 5)))

    def test_jsonl(self):
        """Test one JSON object per line."""
        stream = io.StringIO()
        with ReportWriter('jsonl', stream=stream) as writer:
            writer.write_records([self.record, self.record])
            writer.write_summary({'summary': True, 'records': 2})
        lines = [json.loads(line) for line in stream.getvalue().splitlines()]
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0]['slope'], 131)
        self.assertEqual(writer.records_written, 2)

    def test_csv_header_written_once(self):
        """Test the CSV header appears once."""
        stream = io.StringIO()
        with ReportWriter('csv', stream=stream) as writer:
            writer.write_records([self.record, self.record])
        lines = stream.getvalue().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[0].startswith('family,'))
        self.assertTrue(lines[1].startswith('ttk,'))

    def test_text_blocks_are_separated(self):
        """Test each record gets its own text block."""
        stream = io.StringIO()
        with ReportWriter('text', stream=stream) as writer:
            writer.write_record(self.record)
            writer.write_record(self.record)
        self.assertEqual(stream.getvalue().count('K(2,3,5,5)'), 2)
        self.assertIn('\n\n', stream.getvalue())

    def test_write_object(self):
        """Test writing a plain object."""
        stream = io.StringIO()
        with ReportWriter('jsonl', stream=stream) as writer:
            writer.write_object({'fraction': '7/2'}, 'fraction: 7/2')
        self.assertEqual(json.loads(stream.getvalue()), {'fraction': '7/2'})


if __name__ == '__main__':
    unittest.main()
