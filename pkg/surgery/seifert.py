"""Seifert fibered space descriptors over D^2 and S^2.

Invariants are stored as reduced fractions beta/alpha. The index of an
exceptional fiber is the reduced denominator alpha. Comparisons test
orientation-preserving, fiber-preserving homeomorphism only: over D^2 the
mod-1 multiset decides it; over S^2 the invariant sum must also agree.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Tuple

from surgery.exact_arith import ExtRational, format_ext_rational, mod_one, require_finite
from utils.errors import SeifertHalfError

MAX_SPHERE_INVARIANTS = 3


class BaseOrbifold(Enum):
    """Base surface of the fibration."""
    DISK = "disk"
    SPHERE = "sphere"

    @classmethod
    def parse(cls, text) -> "BaseOrbifold":
        if isinstance(text, BaseOrbifold):
            return text
        key = str(text).strip().lower()
        if key in ('disk', 'd2'):
            return cls.DISK
        if key in ('sphere', 's2'):
            return cls.SPHERE
        raise ValueError(f"unknown base: {text!r}")


IndexSet = FrozenSet[int]


@dataclass(frozen=True)
class SfsDescriptor:
    """A Seifert fibered space given by its base and Seifert invariants."""

    base: BaseOrbifold
    invariants: Tuple[Fraction, ...]
    label: str = ""
    # total of the original invariants, kept by sphere normalization
    euler_sum: Optional[Fraction] = None

    def __post_init__(self):
        invariants = tuple(require_finite(Fraction(inv), "Seifert invariant")
                           for inv in self.invariants)
        object.__setattr__(self, 'invariants', invariants)
        if self.base is BaseOrbifold.DISK and len(invariants) != 2:
            raise SeifertHalfError(
                f"a Seifert half over D^2 carries exactly 2 invariants, got {len(invariants)}"
            )
        if self.base is BaseOrbifold.SPHERE and len(invariants) > MAX_SPHERE_INVARIANTS:
            raise ValueError(
                f"at most {MAX_SPHERE_INVARIANTS} invariants over S^2, got {len(invariants)}"
            )

    def __str__(self) -> str:
        head = 'D^2' if self.base is BaseOrbifold.DISK else 'S^2'
        body = ', '.join(format_ext_rational(inv) for inv in self.invariants)
        return f"{head}({body})"


def index_of_invariant(inv: ExtRational) -> int:
    """Index |p| of the fiber with invariant -q/p, i.e. the reduced denominator."""
    return require_finite(inv, "Seifert invariant").denominator


def euler_sum(d: SfsDescriptor) -> Fraction:
    """Sum of the invariants (the closed-base Euler datum)."""
    if d.euler_sum is not None:
        return d.euler_sum
    return sum(d.invariants, Fraction(0))


def sfs_normalize(d: SfsDescriptor) -> SfsDescriptor:
    """Reduce every invariant mod 1 and sort.

    Over S^2 the integer parts are folded into the recorded sum, and
    invariants that are 0 mod 1 (regular fibers) drop out of the multiset.
    """
    reduced = sorted(mod_one(inv) for inv in d.invariants)
    if d.base is BaseOrbifold.DISK:
        return SfsDescriptor(base=d.base, invariants=tuple(reduced), label=d.label)
    return SfsDescriptor(
        base=d.base,
        invariants=tuple(inv for inv in reduced if inv != 0),
        label=d.label,
        euler_sum=euler_sum(d),
    )


def sfs_homeomorphic(d1: SfsDescriptor, d2: SfsDescriptor) -> bool:
    """Orientation-preserving, fiber-preserving homeomorphism test.

    Raises:
        ValueError: If the bases differ.
    """
    if d1.base is not d2.base:
        raise ValueError(f"cannot compare SFS over {d1.base.value} with SFS over {d2.base.value}")
    n1, n2 = sfs_normalize(d1), sfs_normalize(d2)
    if n1.invariants != n2.invariants:
        return False
    if d1.base is BaseOrbifold.SPHERE:
        return n1.euler_sum == n2.euler_sum
    return True


def orientation_reverse(d: SfsDescriptor) -> SfsDescriptor:
    """The same space with the opposite orientation: every invariant negated.

    A recorded sum (from sphere normalization) is negated along with them.
    """
    recorded = -d.euler_sum if d.euler_sum is not None else None
    return SfsDescriptor(base=d.base, invariants=tuple(-inv for inv in d.invariants),
                         label=d.label, euler_sum=recorded)


def index_set_of(d: SfsDescriptor) -> IndexSet:
    """Index set {p, q} of a Seifert half D^2(p, q).

    Raises:
        SeifertHalfError: If the base is not D^2 or an index is <= 1.
    """
    if d.base is not BaseOrbifold.DISK:
        raise SeifertHalfError("index sets are defined for Seifert halves over D^2 only")
    indices = [index_of_invariant(inv) for inv in d.invariants]
    if any(i <= 1 for i in indices):
        raise SeifertHalfError(
            "not a D^2(p,q) with p,q >= 2, not a valid Seifert half "
            f"(indices {sorted(indices)})"
        )
    return frozenset(indices)


def sphere_descriptor(invariants: Iterable[Fraction], label: str = "") -> SfsDescriptor:
    """Convenience constructor for a closed SFS over S^2."""
    return SfsDescriptor(base=BaseOrbifold.SPHERE, invariants=tuple(invariants), label=label)


def disk_descriptor(invariants: Iterable[Fraction], label: str = "") -> SfsDescriptor:
    """Convenience constructor for a Seifert half over D^2."""
    return SfsDescriptor(base=BaseOrbifold.DISK, invariants=tuple(invariants), label=label)


def k24_shared_invariant(n: int) -> Fraction:
    """(16n - 7)/(9n - 4), the invariant shared by both Seifert halves of k(2, 4, n, 0)."""
    return Fraction(16 * n - 7, 9 * n - 4)


def k24_gamma1_orbifold(n: int) -> SfsDescriptor:
    """Base orbifold S^2(-1/3, 4/3, (16n-7)/(9n-4)) of gamma_1-surgery on k(2, 4, n, 0)."""
    return sphere_descriptor(
        (Fraction(-1, 3), Fraction(4, 3), k24_shared_invariant(n)),
        label=f"k(2,4,{n},0)(gamma_1)",
    )
