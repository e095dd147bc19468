"""Utility modules for the surgery toolkit."""
