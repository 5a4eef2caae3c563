"""The (d, g) lattice of nonnegative rho for fixed ambient dimension r,
its generation from the rational normal curve by three attaching moves,
and h1-vanishing certificates built from the restricted-tangent-bundle
ledger.

Moves on (d, g), each realized by attaching a rational curve to an
embedded curve with the old invariants:

    A: (d, g) -> (d+1, g)        1-secant line
    B: (d, g) -> (d+1, g+1)      2-secant line
    C: (d, g) -> (d+r, g+r+1)    (r+2)-secant rational normal curve

The certificate for (d, g) records a move sequence from (r, 0), the
splitting type of each attached tangent-bundle restriction after
twisting down by the secancy divisor, the vanishing of h1 of each, and
the accumulated Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, PreconditionError, RhoNegative
from .invariants import chi_pullback_tangent, rho
from .normal_bundle import SplitBundle


def min_degree(r: int, g: int) -> int:
    """Least degree with rho(g, r, d) >= 0: ceil(rg/(r+1)) + r."""
    if r < 1 or g < 0:
        raise PreconditionError(f"need r >= 1 and g >= 0, got r={r}, g={g}")
    d = -((-r * g) // (r + 1)) + r
    if rho(g, r, d) < 0 or rho(g, r, d - 1) >= 0:
        raise InternalCheckError(f"min_degree({r}, {g}) = {d} disagrees with the rho scan")
    return d


def reachable_set(r: int, g_max: int, d_max: int) -> set[tuple[int, int]]:
    """Closure of {(d, g) = (r, 0)} under moves A, B, C inside the box
    g <= g_max, d <= d_max.  Coincides with the set of (d, g) in the box
    with rho(g, r, d) >= 0."""
    if r < 1 or g_max < 0 or d_max < 0:
        raise PreconditionError("bounds must be nonnegative and r >= 1")
    seen: set[tuple[int, int]] = set()
    frontier = [(r, 0)]
    while frontier:
        d, g = frontier.pop()
        if d > d_max or g > g_max or (d, g) in seen:
            continue
        seen.add((d, g))
        frontier.extend([(d + 1, g), (d + 1, g + 1), (d + r, g + r + 1)])
    return seen


#: Splitting type of the tangent bundle of P^r restricted to the attached
#: rational curve, twisted down by the secancy divisor, per move.
def _move_bundle(move: str, r: int) -> SplitBundle:
    if move == "A":
        # line, 1 secancy point: O(1)^{r-1} + O(2) twisted down once
        return SplitBundle((0,) * (r - 1) + (1,))
    if move == "B":
        # line, 2 secancy points
        return SplitBundle((-1,) * (r - 1) + (0,))
    if move == "C":
        # rational normal curve, r+2 secancy points: O(r+1)^r twisted down r+2
        return SplitBundle((-1,) * r)
    raise PreconditionError(f"unknown move {move!r}")


_MOVE_STEP = {"A": (1, 0), "B": (1, 1), "C": None}  # C depends on r


@dataclass(frozen=True)
class MoveStep:
    move: str
    bundle: SplitBundle
    h1: int


@dataclass(frozen=True)
class MoveCertificate:
    """A certified path from the rational normal curve (d, g) = (r, 0) to
    the target point: every attached bundle has h1 = 0, and the Euler
    characteristics accumulate to (r+1)d - r(g-1)."""

    r: int
    d: int
    g: int
    moves: str
    steps: tuple[MoveStep, ...]
    base_bundle: SplitBundle
    chi: int

    def to_payload(self) -> dict:
        return {
            "moves": self.moves,
            "steps": [
                {"move": s.move, "bundle": list(s.bundle.degrees), "h1": s.h1}
                for s in self.steps
            ],
            "chi": self.chi,
        }


def h1_certificate(r: int, d: int, g: int) -> MoveCertificate:
    """Build the h1-vanishing certificate for (d, g) with rho >= 0 and
    r >= 3.

    The move sequence is chosen deterministically by undoing moves
    greedily from (d, g): undo C whenever g >= r+1 (rho is preserved so
    the intermediate stays in the lattice), then undo B while g > 0
    (there rho >= 1, since rho = 0 forces g to be a multiple of r+1),
    then undo A down to the rational normal curve.  Any valid sequence
    would do; this one is reproducible.
    """
    if r < 3:
        raise PreconditionError(f"certificates are for r >= 3, got r={r}")
    p = rho(g, r, d)
    if p < 0:
        raise RhoNegative(f"rho({g}, {r}, {d}) = {p} < 0; no certificate exists")
    moves_rev: list[str] = []
    cd, cg = d, g
    while cg >= r + 1:
        moves_rev.append("C")
        cd, cg = cd - r, cg - r - 1
        if rho(cg, r, cd) != p:
            raise InternalCheckError("undoing C must preserve rho")
    while cg > 0:
        if rho(cg, r, cd) < 1:
            raise InternalCheckError("undoing B needs rho >= 1")
        moves_rev.append("B")
        cd, cg = cd - 1, cg - 1
    while cd > r:
        moves_rev.append("A")
        cd -= 1
    if (cd, cg) != (r, 0):
        raise InternalCheckError(f"greedy descent ended at ({cd}, {cg}), not ({r}, 0)")

    base = SplitBundle((r + 1,) * r)  # tangent bundle restricted to the RNC
    if base.h1 != 0:
        raise InternalCheckError("base-case bundle must have h1 = 0")
    chi = base.chi
    steps = []
    pd, pg = r, 0
    for move in reversed(moves_rev):
        bundle = _move_bundle(move, r)
        if bundle.h1 != 0:
            raise InternalCheckError(f"move {move} bundle {bundle} has h1 != 0")
        steps.append(MoveStep(move, bundle, bundle.h1))
        chi += bundle.chi
        dd, dg = _MOVE_STEP[move] or (r, r + 1)
        pd, pg = pd + dd, pg + dg
    if (pd, pg) != (d, g):
        raise InternalCheckError(f"moves land at ({pd}, {pg}), not ({d}, {g})")
    if chi != chi_pullback_tangent(g, r, d):
        raise InternalCheckError(
            f"accumulated chi {chi} != closed form {chi_pullback_tangent(g, r, d)}"
        )
    return MoveCertificate(
        r=r,
        d=d,
        g=g,
        moves="".join(reversed(moves_rev)),
        steps=tuple(steps),
        base_bundle=base,
        chi=chi,
    )
