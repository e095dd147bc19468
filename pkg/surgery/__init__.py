"""Exact computations on Seifert fibered surgeries and their primitive/Seifert positions."""
