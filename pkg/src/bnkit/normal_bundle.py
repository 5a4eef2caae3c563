"""Degree/rank ledger for split vector bundles on the line, elementary
modifications, and the balancedness certificate for normal bundles of
odd-degree rational space curves.

This module tracks no sheaves: once splitting behaviour is given, every
step (projection sequences, positive/negative modifications, restriction
of the normal bundle of a nodal union to a component) is determined by
integer bookkeeping, and the Riemann-Roch identity h0 - h1 = deg + rank
is asserted throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenDegree, IndexOutOfRange, InternalCheckError, PreconditionError


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles on the line, recorded as the multiset
    of summand degrees.  Order is preserved as given so that individual
    summands keep their identity under modifications; serialization and
    multiset comparison use the sorted form."""

    degrees: tuple[int, ...]

    def __init__(self, degrees) -> None:
        object.__setattr__(self, "degrees", tuple(int(e) for e in degrees))
        if not self.degrees:
            raise PreconditionError("a split bundle needs at least one summand")
        if self.h0 - self.h1 != self.degree + self.rank:
            raise InternalCheckError(f"Riemann-Roch ledger identity failed on {self.degrees}")

    @property
    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @property
    def h0(self) -> int:
        return sum(max(0, e + 1) for e in self.degrees)

    @property
    def h1(self) -> int:
        return sum(max(0, -e - 1) for e in self.degrees)

    @property
    def chi(self) -> int:
        return self.degree + self.rank

    def is_balanced(self) -> bool:
        """Degrees differ by at most one; "perfectly balanced" when equal."""
        return max(self.degrees) - min(self.degrees) <= 1

    def twist(self, n: int) -> "SplitBundle":
        """Tensor by a degree-n line bundle: every summand shifts by n."""
        return SplitBundle(e + n for e in self.degrees)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.multiset)


def modify(bundle: SplitBundle, summand_index: int, sign: str, points: int) -> SplitBundle:
    """Elementary modification of a split bundle along a reduced divisor of
    length ``points`` toward the summand at ``summand_index``.

    Positive modification adds ``points`` to the chosen summand (the split
    case).  Negative modification is positive modification followed by the
    full downward twist: net effect, every other summand drops by
    ``points`` while the chosen one is unchanged.  Rank never changes.
    Only modifications toward a summand are defined on this ledger.
    """
    if not 0 <= summand_index < bundle.rank:
        raise IndexOutOfRange(
            f"summand index {summand_index} out of range for rank {bundle.rank}"
        )
    if points < 0:
        raise PreconditionError(f"divisor length must be >= 0, got {points}")
    if sign not in ("+", "-"):
        raise PreconditionError(f"sign must be '+' or '-', got {sign!r}")
    degrees = list(bundle.degrees)
    degrees[summand_index] += points
    out = SplitBundle(degrees)
    if sign == "-":
        out = out.twist(-points)
    return out


def pointing_degree(d: int, q_position: str) -> int:
    """Degree of the pointing line subbundle of the normal bundle of a
    degree-d curve, by the position of the center q: d for q off all
    tangent lines, d+2 for q a general point of the curve itself."""
    if q_position == "off_tangents":
        return d
    if q_position == "on_curve_general":
        return d + 2
    raise PreconditionError(
        f"q_position must be 'off_tangents' or 'on_curve_general', got {q_position!r}"
    )


@dataclass(frozen=True)
class LedgerSequence:
    """An exact sequence of split bundles recorded at ledger level: the
    sub and quotient are explicit splittings, the total may only be known
    by rank and degree.  Additivity of rank and degree is asserted."""

    sub: SplitBundle
    quot: SplitBundle
    total_rank: int
    total_degree: int

    def __post_init__(self) -> None:
        if self.sub.rank + self.quot.rank != self.total_rank:
            raise InternalCheckError("ledger sequence rank additivity failed")
        if self.sub.degree + self.quot.degree != self.total_degree:
            raise InternalCheckError("ledger sequence degree additivity failed")


def projection_ledger(d: int) -> LedgerSequence:
    """Projection from a general point q of a degree-d rational curve in
    3-space: sub O(d+2) (the pointing bundle twisted up through q), quotient
    the plane-image normal sheaf O(3d-5) twisted by q, giving O(3d-4).
    Total: the rank-2 normal bundle of degree 4d-2."""
    if d < 3:
        raise PreconditionError(f"projection ledger needs degree >= 3, got d={d}")
    sub = SplitBundle([pointing_degree(d, "on_curve_general")])
    quot = SplitBundle([3 * (d - 1) - 2 + 1])
    return LedgerSequence(sub=sub, quot=quot, total_rank=2, total_degree=4 * d - 2)


def hh_restriction(bundle: SplitBundle, node_targets) -> SplitBundle:
    """Restriction of the normal bundle of a nodal union to one component:
    one positive modification (+1) toward the pointing summand per node.
    ``node_targets`` lists the pointing summand index for each node; the
    total degree grows by the number of nodes."""
    targets = tuple(node_targets)
    out = bundle
    for target in targets:
        out = modify(out, target, "+", 1)
    if out.degree != bundle.degree + len(targets):
        raise InternalCheckError("node restriction must add one degree per node")
    return out


@dataclass(frozen=True)
class OddDegreeCertificate:
    """Balancedness certificate for the normal bundle of a general
    rational curve of odd degree d in 3-space.

    ``peels`` 1-secant-line degenerations reduce to a curve of degree
    ``reduced_degree``; the accumulated modifications turn the projection
    sequence of the reduced curve into one with sub and quotient both of
    degree (3d+1)/2, hence balanced.  The conclusion for the original
    curve is the perfectly balanced splitting (2d-1, 2d-1) of total
    degree ``total`` = 4d-2.
    """

    d: int
    peels: int
    reduced_degree: int
    sub: int
    quot: int
    balanced: bool
    conclusion: tuple[int, int]
    total: int


def odd_degree_certificate(d: int) -> OddDegreeCertificate:
    """Run the 1-secant peeling ledger for an odd degree d >= 3.  Even
    degrees are refused: the balanced statement is false for them (it
    already fails in characteristic 2)."""
    if d % 2 == 0:
        raise EvenDegree(
            f"degree {d} is even; normal bundles of even-degree rational "
            "space curves are never balanced"
        )
    if d < 3:
        raise PreconditionError(f"need odd degree >= 3, got d={d}")
    peels = (d - 3) // 2
    reduced = (d + 3) // 2
    # sub: pointing bundle of the reduced curve through q, twisted by the
    # doubled secancy points 2p_1 + .. + 2p_peels
    sub = pointing_degree(reduced, "on_curve_general") + 2 * peels
    # quotient: plane-image normal sheaf of the reduced curve, twisted by q
    quot = 3 * reduced - 5 + 1
    if sub != (3 * d + 1) // 2 or quot != (3 * d + 1) // 2:
        raise InternalCheckError(f"odd-degree ledger arithmetic broke at d={d}")
    conclusion = (2 * d - 1, 2 * d - 1)
    cert = OddDegreeCertificate(
        d=d,
        peels=peels,
        reduced_degree=reduced,
        sub=sub,
        quot=quot,
        balanced=(sub == quot),
        conclusion=conclusion,
        total=sum(conclusion),
    )
    if cert.total != 4 * d - 2:
        raise InternalCheckError(f"normal bundle degree must be 4d-2, got {cert.total}")
    return cert
