"""The lattice of Brill-Noether loci M^r_{g,d} inside the moduli of
genus-g curves: Serre duality, the two trivial containments (adding a
point, subtracting a general point), and the expected-maximal
classification with its three exceptional genera.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import InternalCheckError, NegativeRank, PreconditionError
from .invariants import rho

#: Expected-maximal loci that nevertheless fail to be maximal with
#: respect to containment (the only three, for g >= 3).
MAXIMAL_EXCEPTIONS = frozenset({(7, 2, 6), (8, 1, 4), (9, 2, 7)})


def serre_dual(g: int, r: int, d: int) -> tuple[int, int, int]:
    """The Serre-dual locus index (g, g-d+r-1, 2g-2-d).  An involution
    that preserves rho; raises :class:`NegativeRank` if the dual rank
    would be negative."""
    if g - d + r - 1 < 0:
        raise NegativeRank(f"dual rank g-d+r-1 = {g - d + r - 1} < 0 for ({g}, {r}, {d})")
    return (g, g - d + r - 1, 2 * g - 2 - d)


@dataclass(frozen=True)
class LocusIndex:
    """A Brill-Noether locus index, canonicalized so d <= g-1 via Serre
    duality (the standard redundancy removal); the index as given is kept
    for display."""

    g: int
    r: int
    d: int
    original: tuple[int, int, int]

    @classmethod
    def canonical(cls, g: int, r: int, d: int) -> "LocusIndex":
        if g < 2:
            raise PreconditionError(f"locus indices need g >= 2, got g={g}")
        if r < 1:
            raise PreconditionError(f"locus indices need r >= 1, got r={r}")
        cg, cr, cd = g, r, d
        if cd > g - 1:
            cg, cr, cd = serre_dual(g, r, d)
        return cls(cg, cr, cd, (g, r, d))

    @property
    def rho(self) -> int:
        return rho(self.g, self.r, self.d)


@dataclass(frozen=True)
class Containment:
    """A trivially larger locus; ``full_moduli`` marks r = 0 targets,
    which are the whole moduli space rather than proper loci."""

    g: int
    r: int
    d: int
    full_moduli: bool


def trivial_containments(g: int, r: int, d: int) -> list[Containment]:
    """The two loci trivially containing M^r_{g,d}: add a point
    (g, r, d+1) and subtract a general point (g, r-1, d-1)."""
    return [
        Containment(g, r, d + 1, full_moduli=(r == 0)),
        Containment(g, r - 1, d - 1, full_moduli=(r - 1 == 0)),
    ]


@dataclass(frozen=True)
class ExpectedMaximalReport:
    is_expected_maximal: bool
    is_maximal_exception: bool
    rho: int
    #: the degree forced by expected-maximality, ceil(rg/(r+1)) + r - 1
    d_formula: int


def expected_maximal(g: int, r: int, d: int) -> ExpectedMaximalReport:
    """Whether M^r_{g,d} is expected maximal: rho < 0 while both trivial
    containment targets have rho >= 0.  Also reports membership in the
    three-element exception list of expected-maximal loci that are not
    maximal.

    When the locus is expected maximal, the degree identity
    d = ceil(rg/(r+1)) + r - 1 and the bound -rho <= r+1 are asserted.
    """
    if g < 3:
        raise PreconditionError(f"expected-maximality classification needs g >= 3, got g={g}")
    if r < 1:
        raise PreconditionError(f"need r >= 1, got r={r}")
    p = rho(g, r, d)
    is_em = p < 0 and rho(g, r, d + 1) >= 0 and rho(g, r - 1, d - 1) >= 0
    d_formula = -((-r * g) // (r + 1)) + r - 1  # ceil(rg/(r+1)) + r - 1
    if is_em:
        if d != d_formula:
            raise InternalCheckError(
                f"expected-maximal ({g}, {r}, {d}) violates d = ceil(rg/(r+1))+r-1 = {d_formula}"
            )
        if -p > r + 1:
            raise InternalCheckError(
                f"expected-maximal ({g}, {r}, {d}) violates -rho <= r+1: rho = {p}"
            )
    return ExpectedMaximalReport(
        is_expected_maximal=is_em,
        is_maximal_exception=(g, r, d) in MAXIMAL_EXCEPTIONS,
        rho=p,
        d_formula=d_formula,
    )


@dataclass(frozen=True)
class ExpectedMaximalRow:
    g: int
    r: int
    d: int
    rho: int
    is_maximal_exception: bool


def enumerate_expected_maximal(g: int) -> list[ExpectedMaximalRow]:
    """All expected-maximal loci of genus g in the canonical range
    r >= 1, 2 <= d <= g-1, each annotated with rho and the exception
    flag."""
    if g < 3:
        raise PreconditionError(f"need g >= 3, got g={g}")
    rows = []
    for r in range(1, g + 1):
        for d in range(2, g):
            rep = expected_maximal(g, r, d)
            if rep.is_expected_maximal:
                rows.append(
                    ExpectedMaximalRow(g, r, d, rep.rho, rep.is_maximal_exception)
                )
    return rows


def sqrt_bound_holds(g: int, r: int, d: int) -> bool:
    """The integer form of the codimension bound for expected-maximal
    loci: -rho <= isqrt(g) + 1 (weaker than the real bound -rho <= sqrt(g),
    kept exact)."""
    return -rho(g, r, d) <= isqrt(g) + 1
