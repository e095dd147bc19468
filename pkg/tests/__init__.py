"""Test suite for the Seifert positions toolkit."""
