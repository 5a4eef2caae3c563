"""Closed-form numeric invariants of Brill-Noether problems.

Everything here is a polynomial or factorial expression in the triple
(g, r, d) = (genus, target projective dimension, degree).  All arithmetic
is exact: counts that pass through factorial ratios are computed as a
single reduced Fraction and checked to be integral.  No floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (
    EmptyRange,
    InternalCheckError,
    OutOfConjectureRange,
    PreconditionError,
    RhoNonzero,
)

#: The four (g, r, d) for which general curves interpolate strictly fewer
#: points than the dimension count predicts.
INTERPOLATION_EXCEPTIONS = frozenset({(2, 3, 5), (4, 3, 6), (2, 5, 7), (6, 5, 10)})


def _check_index(g: int, r: int) -> None:
    if g < 0:
        raise PreconditionError(f"genus must be >= 0, got g={g}")
    if r < 0:
        raise PreconditionError(f"projective dimension must be >= 0, got r={r}")


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number rho(g, r, d) = g - (r+1)(g-d+r)."""
    _check_index(g, r)
    return g - (r + 1) * (g - d + r)


def rho_k(g: int, r: int, d: int, k: int) -> int:
    """Gonality-refined rho: max of rho(g, r-ell, d) - ell*k over
    0 <= ell <= min(r, g-d+r-1).

    Governs dim W^r_d on a general k-gonal curve.  Raises
    :class:`EmptyRange` when g-d+r-1 < 0, i.e. outside the special range
    where the refinement says anything.
    """
    _check_index(g, r)
    if k < 2:
        raise PreconditionError(f"gonality must be >= 2, got k={k}")
    ell_max = min(r, g - d + r - 1)
    if ell_max < 0:
        raise EmptyRange(
            f"empty ell-range for (g, r, d) = ({g}, {r}, {d}): min(r, g-d+r-1) = {ell_max} < 0"
        )
    return max(rho(g, r - ell, d) - ell * k for ell in range(ell_max + 1))


def count_grd(g: int, r: int, d: int) -> int:
    """Number of g^r_d's on a general genus-g curve when rho = 0:

        N(g, r, d) = g! * prod_{a=0}^{r} a! / (g-d+r+a)!

    which also counts standard Young tableaux on the (r+1) x (g-d+r)
    rectangle.  Raises :class:`RhoNonzero` away from rho = 0.
    """
    if rho(g, r, d) != 0:
        raise RhoNonzero(f"rho({g}, {r}, {d}) = {rho(g, r, d)} != 0; count undefined")
    s = g - d + r  # rho = 0 forces s >= 0
    value = Fraction(factorial(g))
    for a in range(r + 1):
        value *= Fraction(factorial(a), factorial(s + a))
    if value.denominator != 1:
        raise InternalCheckError(f"count_grd({g}, {r}, {d}) is not integral: {value}")
    return value.numerator


def chi_pullback_tangent(g: int, r: int, d: int) -> int:
    """Euler characteristic (r+1)d - r(g-1) of the pulled-back tangent
    bundle of P^r along a degree-d genus-g curve.

    Identically equal to rho(g, r, d) + (r+1)^2 - 1; both forms are
    evaluated and compared on every call.
    """
    chi = (r + 1) * d - r * (g - 1)
    via_rho = rho(g, r, d) + (r + 1) ** 2 - 1
    if chi != via_rho:
        raise InternalCheckError(
            f"chi formulas disagree at ({g}, {r}, {d}): {chi} vs {via_rho}"
        )
    return chi


def hilbert_function(g: int, r: int, d: int, k: int) -> int:
    """Hilbert function min(C(k+r, r), kd + 1 - g) of a general
    Brill-Noether curve in P^r, i.e. the rank of restriction of degree-k
    forms (maximal-rank behaviour)."""
    _check_index(g, r)
    if k < 1:
        raise PreconditionError(f"power must be >= 1, got k={k}")
    return min(comb(k + r, r), k * d + 1 - g)


def smrc_expected_dim(g: int, r: int, d: int, k: int) -> int:
    """Expected dimension rho - 1 - |C(r+k, k) - (dk+1-g)| of the locus of
    line bundles whose degree-k multiplication map drops rank.

    Only meaningful under the hypotheses g-d+r >= 0, 0 <= rho < r-2 and
    k >= 2; anything else raises :class:`OutOfConjectureRange` naming the
    violated inequality rather than extrapolating.
    """
    _check_index(g, r)
    if k < 2:
        raise OutOfConjectureRange(f"need k >= 2, got k={k}")
    if g - d + r < 0:
        raise OutOfConjectureRange(f"need g-d+r >= 0, got {g - d + r}")
    p = rho(g, r, d)
    if p < 0:
        raise OutOfConjectureRange(f"need rho >= 0, got rho = {p}")
    if p >= r - 2:
        raise OutOfConjectureRange(f"need rho < r-2, got rho = {p}, r-2 = {r - 2}")
    return p - 1 - abs(comb(r + k, k) - (d * k + 1 - g))


@dataclass(frozen=True)
class InterpolationReport:
    """Outcome of the interpolation count for Brill-Noether curves.

    ``count`` is None for the non-quadric exceptional triples, where the
    true count is strictly below the formula but not pinned to a number
    here.
    """

    formula_value: int
    is_exception: bool
    count: int | None


def interpolation_points(g: int, r: int, d: int) -> InterpolationReport:
    """How many general points a general degree-d genus-g curve in P^r
    passes through.

    The dimension count predicts floor(((r+1)d - (r-3)(g-1)) / (r-1)),
    and this is the answer except for the four exceptional triples.  For
    (2, 3, 5) the quadric-surface argument pins the count to one less
    than the formula; the other three exceptions are reported as "below
    formula" with count None.
    """
    if r < 3:
        raise PreconditionError(f"interpolation counts need r >= 3, got r={r}")
    if rho(g, r, d) < 0:
        raise PreconditionError(
            f"interpolation counts need rho >= 0, got rho({g}, {r}, {d}) = {rho(g, r, d)}"
        )
    formula = ((r + 1) * d - (r - 3) * (g - 1)) // (r - 1)
    if (g, r, d) not in INTERPOLATION_EXCEPTIONS:
        return InterpolationReport(formula, False, formula)
    if (g, r, d) == (2, 3, 5):
        # lies on a quadric surface, which interpolates only 9 points
        return InterpolationReport(formula, True, formula - 1)
    return InterpolationReport(formula, True, None)
