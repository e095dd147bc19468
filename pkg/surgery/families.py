"""The two families of Seifert fibered surgeries and their positions.

Twisted torus knots K(p, q, p+q, n) carry integer surgery slopes
pq + n(p+q)^2. Knots k(A, B, C) built from the tangle triples carry the
symbolic slopes gamma_0 / gamma_1; the numeric slope is never needed, only
the fact that both positions of a record share it.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING, List, Optional, Tuple, Union

from surgery.seifert import (
    IndexSet,
    SfsDescriptor,
    disk_descriptor,
    index_set_of,
    k24_shared_invariant,
)
from surgery.tangle import FamilyCase, TangleTriple, make_tangle_triple
from utils.errors import ParameterError, SeifertHalfError

if TYPE_CHECKING:
    from surgery.distinctness import Verdict

logger = logging.getLogger(__name__)

HYPERBOLIC_TWIST_BOUND = 3


class Family(Enum):
    """Which construction a surgery record comes from."""
    TTK = "ttk"
    EM = "emk"


class SymbolicSlope(Enum):
    """Surgery slope gamma_s for the filling R(s), s = 0 or 1."""
    GAMMA0 = 0
    GAMMA1 = 1

    @classmethod
    def parse(cls, value) -> "SymbolicSlope":
        if isinstance(value, SymbolicSlope):
            return value
        key = str(value).strip().lower()
        if key in ('0', 'gamma0', 'g0'):
            return cls.GAMMA0
        if key in ('1', 'gamma1', 'g1'):
            return cls.GAMMA1
        raise ValueError(f"slope must be 0 or 1, got {value!r}")

    def __str__(self) -> str:
        return f"gamma_{self.value}"


@dataclass(frozen=True)
class SlopeDescriptor:
    """Either an integer slope or one of the symbolic slopes gamma_s."""

    value: Optional[int] = None
    tag: Optional[SymbolicSlope] = None

    def __post_init__(self):
        if (self.value is None) == (self.tag is None):
            raise ValueError("a slope is either an integer or a symbolic tag")

    @property
    def is_integer(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return str(self.value) if self.is_integer else str(self.tag)


def integer_slope(value: int) -> SlopeDescriptor:
    return SlopeDescriptor(value=value)


def symbolic_slope(tag) -> SlopeDescriptor:
    return SlopeDescriptor(tag=SymbolicSlope.parse(tag))


class BergeType(Enum):
    """Berge type of the lens surgeries at n = +1 / -1."""
    VII = "VII"
    VIII = "VIII"
    UNSPECIFIED = "unspecified"


class ResultKind(Enum):
    SEIFERT_OVER_S2 = "SeifertOverS2"
    LENS_SPACE = "LensSpace"
    CONNECTED_SUM_OF_TWO_LENS_SPACES = "ConnectedSumOfTwoLensSpaces"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class ResultClass:
    """What the surgered manifold is, as far as the family formulas tell."""

    kind: ResultKind
    indices: Tuple[int, ...] = ()
    berge_type: Optional[BergeType] = None
    reason: str = ""

    def __str__(self) -> str:
        if self.kind is ResultKind.SEIFERT_OVER_S2:
            return f"Seifert fibered over S^2 with indices {list(self.indices)}"
        if self.kind is ResultKind.LENS_SPACE:
            return f"lens space (Berge type {self.berge_type.value})"
        if self.kind is ResultKind.CONNECTED_SUM_OF_TWO_LENS_SPACES:
            return "connected sum of two lens spaces"
        return f"degenerate: {self.reason}"


@dataclass(frozen=True)
class TwistedTorusKnotParams:
    """K(p, q, p+q, n): T(p, q) twisted n times along a circle meeting p+q strands."""

    p: int
    q: int
    n: int

    def validate(self):
        """Check the standing assumptions on (p, q).

        Raises:
            ParameterError: Naming the first violated constraint.
        """
        if gcd(self.p, self.q) != 1:
            raise ParameterError(f"gcd(p,q) != 1 for p={self.p}, q={self.q}")
        if abs(self.p) < 2:
            raise ParameterError(f"|p| >= 2 required, got p={self.p}")
        if abs(self.q) < 2:
            raise ParameterError(f"|q| >= 2 required, got q={self.q}")
        if abs(self.p + self.q) <= 1:
            raise ParameterError(f"|p+q| > 1 required, got p+q={self.p + self.q}")
        return self

    def as_dict(self) -> dict:
        return {'p': self.p, 'q': self.q, 'n': self.n}

    def __str__(self) -> str:
        return f"K({self.p},{self.q},{self.p + self.q},{self.n})"


@dataclass(frozen=True)
class EmKnotParams:
    """k(l, m, n, 0) (CASE1) or k(l, m, 0, p) (CASE2) with the slope gamma_s."""

    family_case: FamilyCase
    l: int
    m: int
    n_or_p: int
    s: SymbolicSlope = SymbolicSlope.GAMMA0

    @classmethod
    def create(cls, case, l: int, m: int, n_or_p: int, s=0) -> "EmKnotParams":
        return cls(FamilyCase.parse(case), l, m, n_or_p, SymbolicSlope.parse(s))

    @property
    def n(self) -> Optional[int]:
        return self.n_or_p if self.family_case is FamilyCase.CASE1 else None

    @property
    def p(self) -> Optional[int]:
        return self.n_or_p if self.family_case is FamilyCase.CASE2 else None

    def as_dict(self) -> dict:
        data = {'case': self.family_case.value, 'l': self.l, 'm': self.m, 's': self.s.value}
        if self.family_case is FamilyCase.CASE1:
            data['n'] = self.n_or_p
        else:
            data['p'] = self.n_or_p
        return data

    def __str__(self) -> str:
        if self.family_case is FamilyCase.CASE1:
            return f"k({self.l},{self.m},{self.n_or_p},0) at {self.s}"
        return f"k({self.l},{self.m},0,{self.n_or_p}) at {self.s}"


@dataclass(frozen=True)
class PsPosition:
    """A primitive/Seifert position at the level of computable data."""

    surface_label: str
    slope: SlopeDescriptor
    index_set: IndexSet
    seifert_half: Optional[SfsDescriptor] = None

    def __post_init__(self):
        object.__setattr__(self, 'index_set', frozenset(self.index_set))
        if self.seifert_half is not None and index_set_of(self.seifert_half) != self.index_set:
            raise ValueError(
                f"Seifert half {self.seifert_half} does not have index set "
                f"{sorted(self.index_set)}"
            )


@dataclass(frozen=True)
class SurgeryRecord:
    """One family member, its surgery and everything computed about it."""

    family: Family
    params: Union[TwistedTorusKnotParams, EmKnotParams]
    slope: SlopeDescriptor
    classification: ResultClass
    positions: Tuple[PsPosition, ...] = ()
    verdict: Optional["Verdict"] = None
    braid_index: Optional[int] = None
    # set when the record has no genuine Seifert halves
    degeneracy: Optional[str] = None
    hyperbolic_certified: Optional[bool] = None
    linking_number: Optional[int] = None
    exceptional_indices: Tuple[int, ...] = ()
    theorem_hypothesis: Optional[bool] = None
    tangles: Optional[TangleTriple] = None


# Twisted torus knots

def ttk_surgery_slope(params: TwistedTorusKnotParams) -> SlopeDescriptor:
    """The Seifert fibered slope pq + n(p+q)^2."""
    params.validate()
    p, q, n = params.p, params.q, params.n
    return integer_slope(p * q + n * (p + q) ** 2)


def ttk_linking_number(params: TwistedTorusKnotParams) -> int:
    """Linking number of T(p, q) with the twisting circle."""
    return params.p + params.q


def ttk_result_classification(params: TwistedTorusKnotParams) -> ResultClass:
    """n = 0: connected sum of lens spaces; n = +-1: Berge lens space; else SFS over S^2."""
    params.validate()
    if params.n == 0:
        return ResultClass(ResultKind.CONNECTED_SUM_OF_TWO_LENS_SPACES)
    if params.n == 1:
        return ResultClass(ResultKind.LENS_SPACE, berge_type=BergeType.VII)
    if params.n == -1:
        return ResultClass(ResultKind.LENS_SPACE, berge_type=BergeType.VIII)
    return ResultClass(
        ResultKind.SEIFERT_OVER_S2,
        indices=(abs(params.p), abs(params.q), abs(params.n)),
    )


def ttk_ps_positions(params: TwistedTorusKnotParams) -> List[PsPosition]:
    """Positions on F = boundary(H1 u U) and F' = boundary(H1).

    Raises:
        SeifertHalfError: If |n| <= 1.
    """
    slope = ttk_surgery_slope(params)
    if abs(params.n) <= 1:
        raise SeifertHalfError(
            "Seifert half degenerates; distinct positions need n != 0, +-1"
        )
    p, q, n = abs(params.p), abs(params.q), abs(params.n)
    return [
        PsPosition("F = ∂(H₁∪U)", slope, frozenset({q, n})),
        PsPosition("F′ = ∂H₁", slope, frozenset({p, n})),
    ]


def ttk_hyperbolic_certified(params: TwistedTorusKnotParams) -> bool:
    """Sufficient condition only: False means not certified."""
    return abs(params.n) > HYPERBOLIC_TWIST_BOUND


def ttk_record(params: TwistedTorusKnotParams) -> SurgeryRecord:
    """Assemble the undecided record for a twisted torus knot surgery."""
    params.validate()
    slope = ttk_surgery_slope(params)
    classification = ttk_result_classification(params)
    positions: Tuple[PsPosition, ...] = ()
    degeneracy = None
    try:
        positions = tuple(ttk_ps_positions(params))
    except SeifertHalfError as e:
        degeneracy = str(e)
        logger.debug("%s: %s", params, degeneracy)
    return SurgeryRecord(
        family=Family.TTK,
        params=params,
        slope=slope,
        classification=classification,
        positions=positions,
        degeneracy=degeneracy,
        hyperbolic_certified=ttk_hyperbolic_certified(params),
        linking_number=ttk_linking_number(params),
    )


# Knots k(A, B, C)

def em_tangle_triple(params: EmKnotParams) -> TangleTriple:
    return make_tangle_triple(params.family_case, params.l, params.m, params.n_or_p)


def em_exceptional_indices(params: EmKnotParams) -> Tuple[int, int, int]:
    """Indices of the cores of the A-, B- and C-branches, in that order."""
    l, m, x = params.l, params.m, params.n_or_p
    if params.family_case is FamilyCase.CASE1:
        n = x
        if params.s is SymbolicSlope.GAMMA0:
            return abs(l - 1), abs(l * m + m - 1), abs(2 * m * n - m - n + 1)
        return abs(l + 1), abs(l * m - m - 1), abs(2 * m * n - m + n)
    p = x
    if params.s is SymbolicSlope.GAMMA0:
        return (abs(l - 1),
                abs(2 * l * m * p - l * m - l * p + 2 * m * p - m - 3 * p + 1),
                abs(m - 1))
    return (abs(l + 1),
            abs(2 * l * m * p - l * m - l * p - 2 * m * p + m - p + 1),
            abs(m))


def em_theorem_hypothesis(params: EmKnotParams) -> bool:
    """The A-branch and B-branch indices differ."""
    a_index, b_index, _ = em_exceptional_indices(params)
    return a_index != b_index


def _has_printed_invariants(params: EmKnotParams) -> bool:
    return (params.family_case is FamilyCase.CASE1 and params.l == 2 and params.m == 4
            and params.s is SymbolicSlope.GAMMA1)


def em_ps_positions(params: EmKnotParams) -> List[PsPosition]:
    """Positions on S~ (B- and C-branches) and S~' (A- and C-branches).

    Seifert halves are filled in only for k(2, 4, n, 0) at gamma_1.

    Raises:
        SeifertHalfError: If any branch index is <= 1.
    """
    a_index, b_index, c_index = em_exceptional_indices(params)
    if min(a_index, b_index, c_index) <= 1:
        raise SeifertHalfError(
            "theorem hypotheses fail: not a D^2(p,q), p,q >= 2 Seifert half "
            f"(branch indices A={a_index}, B={b_index}, C={c_index})"
        )
    slope = symbolic_slope(params.s)
    half = half_prime = None
    if _has_printed_invariants(params):
        shared = k24_shared_invariant(params.n_or_p)
        half = disk_descriptor((Fraction(4, 3), shared), label=f"W[K] for {params}, surface S̃")
        half_prime = disk_descriptor((Fraction(-1, 3), shared),
                                     label=f"W[K] for {params}, surface S̃′")
    return [
        PsPosition("S̃", slope, frozenset({b_index, c_index}), half),
        PsPosition("S̃′", slope, frozenset({a_index, c_index}), half_prime),
    ]


def em_result_classification(params: EmKnotParams) -> ResultClass:
    """SFS over S^2 with the three branch indices, unless a branch has index 0."""
    indices = em_exceptional_indices(params)
    if 0 in indices:
        return ResultClass(
            ResultKind.DEGENERATE,
            indices=indices,
            reason="filling slope along the fiber of a branch (index 0)",
        )
    return ResultClass(ResultKind.SEIFERT_OVER_S2, indices=indices)


def em_braid_index(params: EmKnotParams) -> int:
    """Braid index of k(l, m, n, 0) or k(l, m, 0, p); stated for l > 0, m != 0.

    Raises:
        ParameterError: Outside the stated range.
    """
    l, m = params.l, params.m
    if l <= 0 or m == 0:
        raise ParameterError(f"braid index formula out of stated range (l={l}, m={m})")
    if params.family_case is FamilyCase.CASE1:
        return 2 * l * m - 1 if m > 0 else 2 * abs(l * m) + 1
    return 2 * l * m - l - 1 if m > 0 else 2 * abs(l * m) + l + 1


def em_record(params: EmKnotParams) -> SurgeryRecord:
    """Assemble the undecided record for (k(A, B, C), gamma_s)."""
    positions: Tuple[PsPosition, ...] = ()
    degeneracy = None
    try:
        positions = tuple(em_ps_positions(params))
    except SeifertHalfError as e:
        degeneracy = str(e)
        logger.debug("%s: %s", params, degeneracy)
    try:
        braid_index = em_braid_index(params)
    except ParameterError:
        braid_index = None
    return SurgeryRecord(
        family=Family.EM,
        params=params,
        slope=symbolic_slope(params.s),
        classification=em_result_classification(params),
        positions=positions,
        braid_index=braid_index,
        degeneracy=degeneracy,
        exceptional_indices=em_exceptional_indices(params),
        theorem_hypothesis=em_theorem_hypothesis(params),
        tangles=em_tangle_triple(params),
    )
