"""Rational tangles and the tangle triples (A, B, C) that trivialize tau_inf.

A rational tangle is modeled only by its fraction r in Q u {inf} and,
optionally, the integer sequence it was built from. There is no diagram
data: every computation downstream factors through the fraction.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from surgery.exact_arith import (
    ContinuedFraction,
    ExtRational,
    cf_to_rational,
    ext_rational,
    format_ext_rational,
)


class FamilyCase(Enum):
    """The two solutions (A, B, C) for which tau_inf is a trivial knot."""
    CASE1 = "case1"  # k(l, m, n, 0)
    CASE2 = "case2"  # k(l, m, 0, p)

    @classmethod
    def parse(cls, text: Union[str, int, "FamilyCase"]) -> "FamilyCase":
        if isinstance(text, FamilyCase):
            return text
        key = str(text).strip().lower()
        if key in ('1', 'case1'):
            return cls.CASE1
        if key in ('2', 'case2'):
            return cls.CASE2
        raise ValueError(f"unknown family case: {text!r}")


@dataclass(frozen=True)
class RationalTangle:
    """R(r), optionally remembering the presentation R(a1, ..., an)."""

    fraction: ExtRational
    presentation: Optional[ContinuedFraction] = None

    def __post_init__(self):
        if self.presentation is not None:
            value = cf_to_rational(self.presentation)
            if value != self.fraction:
                raise ValueError(
                    f"presentation {self.presentation} evaluates to "
                    f"{format_ext_rational(value)}, not "
                    f"{format_ext_rational(self.fraction)}"
                )

    def __str__(self) -> str:
        if self.presentation is not None:
            return 'R(' + ', '.join(str(a) for a in self.presentation.entries) + ')'
        return f"R({format_ext_rational(self.fraction)})"


def tangle_from_cf(entries: Sequence[int]) -> RationalTangle:
    """Build R(a1, ..., an) from its integer sequence."""
    cf = ContinuedFraction(tuple(entries))
    return RationalTangle(fraction=cf_to_rational(cf), presentation=cf)


def tangle_from_fraction(r) -> RationalTangle:
    """Build R(r) from anything ``ext_rational`` accepts."""
    return RationalTangle(fraction=ext_rational(r))


def tangle_fraction(t: RationalTangle) -> ExtRational:
    """The parameter r of the tangle."""
    if t.presentation is not None:
        return cf_to_rational(t.presentation)
    return t.fraction


def tangles_equivalent(t1: RationalTangle, t2: RationalTangle) -> bool:
    """Rational tangles are equivalent exactly when their fractions agree."""
    return tangle_fraction(t1) == tangle_fraction(t2)


@dataclass(frozen=True)
class TangleTriple:
    """The tangles A, B, C filling the three slots of B(A, B, C).

    ``n`` is set for CASE1 and ``p`` for CASE2; the other is None.
    """

    family_case: FamilyCase
    l: int
    m: int
    A: RationalTangle
    B: RationalTangle
    C: RationalTangle
    n: Optional[int] = None
    p: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            'case': self.family_case.value,
            'A': str(self.A),
            'B': str(self.B),
            'C': str(self.C),
            'fractions': [format_ext_rational(t.fraction) for t in (self.A, self.B, self.C)],
        }


def make_tangle_triple(case, l: int, m: int, n_or_p: int) -> TangleTriple:
    """Construct (A, B, C) with presentations exactly as in the two solutions.

    CASE1: A = R(l), B = R(m, -l), C = R(-n, 2, m-1, 2, 0).
    CASE2: A = R(l), B = R(p, -2, m, -l), C = R(m-1, 2, 0).
    """
    case = FamilyCase.parse(case)
    A = tangle_from_cf([l])
    if case is FamilyCase.CASE1:
        n = n_or_p
        return TangleTriple(
            family_case=case, l=l, m=m, n=n,
            A=A,
            B=tangle_from_cf([m, -l]),
            C=tangle_from_cf([-n, 2, m - 1, 2, 0]),
        )
    p = n_or_p
    return TangleTriple(
        family_case=case, l=l, m=m, p=p,
        A=A,
        B=tangle_from_cf([p, -2, m, -l]),
        C=tangle_from_cf([m - 1, 2, 0]),
    )


def swap_ab(triple: TangleTriple) -> TangleTriple:
    """Apply the rotation of B(A, B, C) interchanging A and B.

    The result describes the same knot; it is never applied implicitly.
    """
    return TangleTriple(
        family_case=triple.family_case, l=triple.l, m=triple.m,
        n=triple.n, p=triple.p,
        A=triple.B, B=triple.A, C=triple.C,
    )
