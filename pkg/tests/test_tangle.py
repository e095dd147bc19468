"""Tests for rational tangles and tangle triples."""

import unittest
from fractions import Fraction

from surgery.exact_arith import INFINITY, cf_to_rational
from surgery.tangle import (
    FamilyCase,
    RationalTangle,
    make_tangle_triple,
    swap_ab,
    tangle_fraction,
    tangle_from_cf,
    tangle_from_fraction,
    tangles_equivalent,
)


class TestRationalTangle(unittest.TestCase):
    """Test fractions and equivalence of rational tangles."""

    def test_fraction_examples(self):
        """Test tangle fractions."""
        self.assertIs(tangle_fraction(tangle_from_fraction("inf")), INFINITY)
        self.assertEqual(tangle_fraction(tangle_from_cf([3, 2, 0])), Fraction(3, 7))
        self.assertEqual(tangle_fraction(tangle_from_cf([-1, 2, 3, 2, 0])), Fraction(4, 9))

    def test_equivalence_examples(self):
        """Test tangle equivalence."""
        self.assertTrue(tangles_equivalent(tangle_from_cf([2, 3]), tangle_from_fraction("7/2")))
        self.assertFalse(tangles_equivalent(tangle_from_fraction("inf"), tangle_from_fraction(0)))
        self.assertTrue(tangles_equivalent(tangle_from_cf([3, 2, 0]), tangle_from_fraction("3/7")))

    def test_inconsistent_presentation_rejected(self):
        """Test a presentation must evaluate to the stored fraction."""
        with self.assertRaises(ValueError):
            RationalTangle(fraction=Fraction(1, 2), presentation=tangle_from_cf([2, 3]).presentation)

    def test_equivalence_is_an_equivalence_relation(self):
        """Test reflexivity, symmetry and transitivity on a small grid."""
        tangles = [tangle_from_cf([a, b]) for a in range(-3, 4) for b in range(-3, 4)]
        tangles += [tangle_from_fraction(r) for r in ("inf", "0", "1/2", "-3/2")]
        for t1 in tangles:
            self.assertTrue(tangles_equivalent(t1, t1))
            for t2 in tangles:
                self.assertEqual(tangles_equivalent(t1, t2), tangles_equivalent(t2, t1))
                if not tangles_equivalent(t1, t2):
                    continue
                for t3 in tangles:
                    if tangles_equivalent(t2, t3):
                        self.assertTrue(tangles_equivalent(t1, t3))

    def test_c_tangle_numerator_matches_branch_index(self):
        """Test |numerator| of R(-n, 2, m-1, 2, 0) is |2mn - m - n + 1| for |m|, |n| <= 10."""
        for m in range(-10, 11):
            for n in range(-10, 11):
                value = tangle_fraction(tangle_from_cf([-n, 2, m - 1, 2, 0]))
                if value is INFINITY:
                    continue
                self.assertEqual(abs(value.numerator), abs(2 * m * n - m - n + 1), (m, n))
                expected = Fraction(2 * m * n - m - n + 1, 4 * m * n - 2 * m + 1)
                self.assertEqual(value, expected)


class TestTangleTriple(unittest.TestCase):
    """Test construction of the (A, B, C) triples."""

    def test_case1(self):
        """Test the Case 1 triple."""
        triple = make_tangle_triple(FamilyCase.CASE1, 2, 4, 1)
        self.assertEqual(triple.A.presentation.entries, (2,))
        self.assertEqual(triple.B.presentation.entries, (4, -2))
        self.assertEqual(triple.C.presentation.entries, (-1, 2, 3, 2, 0))
        self.assertEqual(triple.n, 1)
        self.assertIsNone(triple.p)

    def test_case2(self):
        """Test the Case 2 triple."""
        triple = make_tangle_triple("case2", 2, 4, 1)
        self.assertEqual(triple.A.presentation.entries, (2,))
        self.assertEqual(triple.B.presentation.entries, (1, -2, 4, -2))
        self.assertEqual(triple.C.presentation.entries, (3, 2, 0))
        self.assertEqual(triple.p, 1)

    def test_all_zero_parameters(self):
        """Test all-zero parameters."""
        triple = make_tangle_triple(FamilyCase.CASE1, 0, 0, 0)
        self.assertEqual(str(triple.A), "R(0)")
        self.assertEqual(str(triple.B), "R(0, 0)")
        self.assertEqual(str(triple.C), "R(0, 2, -1, 2, 0)")
        self.assertIs(triple.B.fraction, INFINITY)
        self.assertEqual(triple.C.fraction, cf_to_rational([0, 2, -1, 2, 0]))

    def test_swap_ab(self):
        """Test the A/B rotation swaps the tangles and keeps C."""
        triple = make_tangle_triple(FamilyCase.CASE1, 2, 4, 1)
        swapped = swap_ab(triple)
        self.assertEqual(swapped.A, triple.B)
        self.assertEqual(swapped.B, triple.A)
        self.assertEqual(swapped.C, triple.C)
        self.assertEqual(swap_ab(swapped), triple)
