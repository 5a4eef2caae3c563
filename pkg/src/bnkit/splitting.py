"""Splitting-type combinatorics of Hurwitz-Brill-Noether theory.

A splitting type is the ascending tuple (e_1 <= .. <= e_k) of degrees in
the direct-sum decomposition of the pushforward of a line bundle under a
degree-k cover of the line.  It refines (r, d), carries its own expected
dimension, and specializes along the majorization (prefix-sum) order.

Note on the rank formula: the number of sections contributed by a
summand of degree e on the line is max(0, e+1), so
r = sum_i max(0, e_i + 1) - 1.  (A version of this formula sometimes
circulates with e_i - 1 in place of e_i + 1; that variant gets the
trigonal genus-5 pencils wrong, so the h^0-consistent form is used.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, OutOfRegime, PreconditionError

SplittingType = tuple[int, ...]


def check_splitting(parts) -> SplittingType:
    """Normalize to an ascending tuple; length must be at least 2."""
    e = tuple(sorted(int(x) for x in parts))
    if len(e) < 2:
        raise PreconditionError(f"a splitting type needs k >= 2 parts, got {e}")
    return e


def rd_from_splitting(g: int, parts) -> tuple[int, int]:
    """The (r, d) of the splitting type on a genus-g cover:
    d = k + sum(e) + g - 1 and r = sum(max(0, e_i + 1)) - 1."""
    e = check_splitting(parts)
    d = len(e) + sum(e) + g - 1
    r = sum(max(0, ei + 1) for ei in e) - 1
    return r, d


def rho_splitting(g: int, parts) -> int:
    """Expected dimension g - sum_{i>j} max(0, e_i - e_j - 1) of the
    splitting-type locus W^e on a general genus-g cover."""
    e = check_splitting(parts)
    gaps = sum(
        max(0, e[i] - e[j] - 1)
        for i in range(len(e))
        for j in range(i)
    )
    return g - gaps


@dataclass(frozen=True)
class MajorizationResult:
    """Truthy wrapper so callers can ask both *whether* and *why not*."""

    holds: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def majorizes(outer, inner) -> MajorizationResult:
    """Whether W^inner is contained in W^outer: equal length and sum, and
    every prefix sum of inner at most the corresponding prefix sum of
    outer.  Shape mismatches are reported as False with a reason, not
    raised."""
    a = check_splitting(outer)
    b = check_splitting(inner)
    if len(a) != len(b):
        return MajorizationResult(False, "length-mismatch")
    if sum(a) != sum(b):
        return MajorizationResult(False, "sum-mismatch")
    pa = pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pb > pa:
            return MajorizationResult(False, "prefix-exceeds")
    return MajorizationResult(True)


def balanced_type(length: int, total: int) -> SplittingType:
    """The balanced degree tuple of the given length and sum: parts differ
    by at most one, listed ascending."""
    if length < 1:
        raise PreconditionError(f"balanced type needs length >= 1, got {length}")
    q, rem = divmod(total, length)
    return (q,) * (length - rem) + (q + 1,) * rem


def maximal_splitting_types(g: int, r: int, d: int, k: int) -> list[SplittingType]:
    """The splitting types maximal with respect to containment among those
    with invariants (r, d) on a degree-k cover, valid in the special
    regime g - d + r > 0:

        w_{r,ell} = b(k-r-1+ell, d-g+1-k-ell) ++ b(r+1-ell, ell)

    over max(0, r+2-k) <= ell <= r with ell = 0 or ell <= g-d+2r+1-k,
    where b is the balanced type of given length and sum.  Every emitted
    type is checked to reproduce (r, d).
    """
    if g - d + r <= 0:
        raise OutOfRegime(
            f"maximal splitting types are stated for g-d+r > 0, got {g - d + r}"
        )
    out = []
    for ell in range(max(0, r + 2 - k), r + 1):
        if ell != 0 and ell > g - d + 2 * r + 1 - k:
            continue
        w = tuple(
            sorted(
                balanced_type(k - r - 1 + ell, d - g + 1 - k - ell)
                + balanced_type(r + 1 - ell, ell)
            )
        )
        if rd_from_splitting(g, w) != (r, d):
            raise InternalCheckError(
                f"maximal type {w} for (g, r, d, k) = ({g}, {r}, {d}, {k}) "
                f"has invariants {rd_from_splitting(g, w)}"
            )
        out.append(w)
    return out


@dataclass(frozen=True)
class HbnPredicates:
    """Geometric predicates read off a splitting type.  The very-ample
    flag is a sufficient criterion only, never a characterization."""

    basepoint_free: bool
    very_ample_sufficient: bool


def hbn_predicates(parts, r: int | None = None) -> HbnPredicates:
    """Basepoint-freeness (iff the second-largest part is >= 0) and the
    sufficient very-ampleness criterion (third-largest part >= 0 and
    r >= 3) for a general line bundle in the splitting locus."""
    e = check_splitting(parts)
    if r is None:
        r = sum(max(0, ei + 1) for ei in e) - 1
    # e_{k-2} exists only for k >= 3; for k = 2 the criterion never applies
    very_ample = len(e) >= 3 and e[-3] >= 0 and r >= 3
    return HbnPredicates(basepoint_free=e[-2] >= 0, very_ample_sufficient=very_ample)


def splitting_str(parts) -> str:
    return ",".join(str(x) for x in check_splitting(parts))


def parse_splitting(text: str) -> SplittingType:
    """Parse "-3,-1,1" into an ascending splitting type."""
    return check_splitting(int(t) for t in text.strip().split(","))


def rho_splitting_vs_gonality(g: int, r: int, d: int, k: int) -> int:
    """Max of rho_splitting over the maximal types; agrees with the
    gonality-refined rho and is exposed for cross-checks."""
    types = maximal_splitting_types(g, r, d, k)
    if not types:
        raise OutOfRegime(f"no admissible maximal types for ({g}, {r}, {d}, {k})")
    return max(rho_splitting(g, w) for w in types)
