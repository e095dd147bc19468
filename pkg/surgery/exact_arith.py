"""Exact rational arithmetic over Q together with a single point at infinity.

Finite values are plain ``fractions.Fraction`` instances, which are always
stored reduced with a positive denominator. The point at infinity is the
``INFINITY`` singleton. Nothing in this module touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List, Sequence, Tuple, Union

from utils.errors import ArithmeticDomainError


class _Infinity:
    """The unsigned point at infinity of Q u {inf}."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'INFINITY'

    def __str__(self) -> str:
        return 'inf'

    def __hash__(self) -> int:
        return hash('ext-rational-infinity')

    def __eq__(self, other) -> bool:
        return other is self

    def __reduce__(self):
        # unpickles to the module-level singleton
        return 'INFINITY'


INFINITY = _Infinity()

ExtRational = Union[Fraction, _Infinity]

_INFINITY_SPELLINGS = ('inf', '∞', 'infinity', '1/0')


def is_infinite(r: ExtRational) -> bool:
    """Return True if ``r`` is the point at infinity."""
    return r is INFINITY


def ext_rational(value: Union[int, str, Fraction, _Infinity]) -> ExtRational:
    """Build an extended rational from an int, Fraction, string or INFINITY.

    Strings may be ``"p/q"``, ``"n"`` or one of ``inf``, ``∞``. A zero
    denominator normalizes to INFINITY.

    Raises:
        ValueError: If a string cannot be parsed.
    """
    if value is INFINITY:
        return INFINITY
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise TypeError(f"cannot build a rational from {type(value).__name__}")

    text = value.strip()
    if text.lower() in _INFINITY_SPELLINGS:
        return INFINITY
    if '/' in text:
        num_text, _, den_text = text.partition('/')
        try:
            num, den = int(num_text), int(den_text)
        except ValueError:
            raise ValueError(f"not a rational: {value!r}") from None
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is undefined")
            return INFINITY
        return Fraction(num, den)
    try:
        return Fraction(int(text))
    except ValueError:
        raise ValueError(f"not a rational: {value!r}") from None


def format_ext_rational(r: ExtRational) -> str:
    """Serialize as ``"p/q"`` (``q >= 1``, reduced), ``"n"`` or ``"inf"``."""
    if r is INFINITY:
        return 'inf'
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def require_finite(r: ExtRational, what: str = "value") -> Fraction:
    """Return ``r`` as a Fraction, or raise if it is infinite."""
    if r is INFINITY:
        raise ArithmeticDomainError(f"{what} must be finite, got inf")
    return r


@dataclass(frozen=True)
class ContinuedFraction:
    """Integer entries [a1, ..., an] read as an + 1/(a(n-1) + ... + 1/a1).

    The last entry is outermost. Entries may be zero or negative; an
    intermediate zero makes the next step infinite, which is legal.
    """

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if not entries:
            raise ValueError("continued fraction needs at least one entry")
        object.__setattr__(self, 'entries', entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return '[' + ', '.join(str(a) for a in self.entries) + ']'


def _as_cf(cf: Union[ContinuedFraction, Sequence[int]]) -> ContinuedFraction:
    if isinstance(cf, ContinuedFraction):
        return cf
    return ContinuedFraction(tuple(cf))


def _homogeneous(num: int, den: int) -> ExtRational:
    if den == 0:
        return INFINITY
    return Fraction(num, den)


def convergents(cf: Union[ContinuedFraction, Sequence[int]]) -> List[ExtRational]:
    """Values after folding in each entry, innermost first.

    Works on homogeneous pairs (num, den), so a zero denominator simply
    becomes infinity and the following entry turns it back into an integer.
    The pair never degenerates to (0, 0) since each step has determinant -1.
    """
    cf = _as_cf(cf)
    num, den = cf.entries[0], 1
    values = [_homogeneous(num, den)]
    for a in cf.entries[1:]:
        # a + den/num
        num, den = a * num + den, num
        values.append(_homogeneous(num, den))
    return values


def cf_to_rational(cf: Union[ContinuedFraction, Sequence[int]]) -> ExtRational:
    """Evaluate a continued fraction exactly; 1/0 evaluates to INFINITY."""
    return convergents(cf)[-1]


def rational_to_cf(r: ExtRational) -> ContinuedFraction:
    """Floor-based Euclidean expansion, listed innermost entry first.

    Raises:
        ArithmeticDomainError: If ``r`` is infinite (no finite expansion).
    """
    if r is INFINITY:
        raise ArithmeticDomainError("no finite expansion for inf")
    x = Fraction(r)
    outer_first = []
    while True:
        a = floor(x)
        outer_first.append(a)
        rest = x - a
        if rest == 0:
            break
        x = 1 / rest
    return ContinuedFraction(tuple(reversed(outer_first)))


def mod_one(r: ExtRational) -> Fraction:
    """The representative of ``r`` mod 1 in [0, 1).

    Raises:
        ArithmeticDomainError: If ``r`` is infinite.
    """
    x = require_finite(r, "mod 1 argument")
    return x - floor(x)
