"""Symbolic limit line bundles on a chain of g elliptic curves with
general attaching points: chip firing between degree distributions,
exact h0 by a gluing sweep, r-positivity, vanishing tables, star
conditions, and exhaustive (non)existence searches.

Geometry of the chain X = E^1 u .. u E^g: the marked points are
p^0, .., p^g, with p^i the node joining E^i and E^{i+1} for
1 <= i <= g-1; p^0 and p^g are free general points.  Genericity is
axiomatized rather than computed on actual elliptic curves: on each
component a divisor a*p^{i-1} + b*p^i is principal iff a = b = 0, and a
"generic" degree class is nontrivial after every twist the engine forms.
Under these axioms every h0 below is a decidable integer.

Aspects: the i-th aspect of a limit line bundle is the degree-d class on
E^i obtained by concentrating all degree on E^i.  An aspect is either
``None`` (a generic class) or an exact pair (a, b) meaning
O(a*p^{i-1} + b*p^i) with a + b = d.

Degree distributions quantify over an infinite set; the engine works on
the prefix-sum window [-theta, d+theta] (default theta = g+1) and every
consumer is expected to re-check stability at 2*theta.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    GenericityViolation,
    IndexOutOfRange,
    InternalCheckError,
    NotRPositive,
    PreconditionError,
)

#: an aspect: None for a generic class, else (coeff at p^{i-1}, coeff at p^i)
Aspect = tuple[int, int] | None

_INF = 1 << 30


@dataclass(frozen=True)
class LimitLineBundle:
    """A degree-d limit line bundle on the chain of g elliptic curves,
    as the tuple of its g aspects."""

    d: int
    aspects: tuple[Aspect, ...]

    def __post_init__(self) -> None:
        if not self.aspects:
            raise PreconditionError("a chain needs at least one component")
        for i, a in enumerate(self.aspects):
            if a is not None and a[0] + a[1] != self.d:
                raise PreconditionError(
                    f"aspect {i + 1} = {a} does not have total degree {self.d}"
                )

    @property
    def g(self) -> int:
        return len(self.aspects)


def h0_twisted(aspect: Aspect, d: int, u: int, v: int) -> int:
    """h0 on one elliptic component of the aspect twisted down by
    u*p^{i-1} + v*p^i.  Positive degree is nonspecial; degree zero is
    trivial exactly when the twist matches an exact aspect's coefficients
    (general points admit no other relation); negative degree has no
    sections."""
    deg = d - u - v
    if deg < 0:
        return 0
    if deg > 0:
        return deg
    return 1 if (aspect is not None and aspect[0] == u and aspect[1] == v) else 0


class ComponentBundle(NamedTuple):
    """An aspect twisted down at its two marked points; the restriction
    of a multidegree limit to one component."""

    base: Aspect
    left_twist: int
    right_twist: int
    aspect_degree: int

    @property
    def degree(self) -> int:
        return self.aspect_degree - self.left_twist - self.right_twist

    def h0(self) -> int:
        return h0_twisted(self.base, self.aspect_degree, self.left_twist, self.right_twist)

    def twist(self, du: int, dv: int) -> "ComponentBundle":
        return ComponentBundle(
            self.base, self.left_twist + du, self.right_twist + dv, self.aspect_degree
        )


def h0_component(bundle: ComponentBundle) -> int:
    """h0 of a single twisted component bundle."""
    return bundle.h0()


# --- degree distributions and chip firing ---

def chip_fire(dist, i: int) -> tuple[int, ...]:
    """Twist by the i-th component (1-indexed): the degree distribution
    fires vertex i of the dual chain.  Interior: (.., d^{i-1}+1, d^i - 2,
    d^{i+1}+1, ..); the endpoints lose only 1 since they have a single
    node.  Total degree is conserved."""
    dist = tuple(dist)
    g = len(dist)
    if not 1 <= i <= g:
        raise IndexOutOfRange(f"component index {i} out of range 1..{g}")
    out = list(dist)
    out[i - 1] -= 2 if 1 < i < g else 1
    if i > 1:
        out[i - 2] += 1
    if i < g:
        out[i] += 1
    if g == 1:
        out[0] = dist[0]  # a single component has no nodes; firing is trivial
    return tuple(out)


def prefix_fire(dist, i: int) -> tuple[int, ...]:
    """Twist by E^1 + .. + E^i: moves one unit of degree from component i
    to component i+1 across the node p^i."""
    dist = tuple(dist)
    g = len(dist)
    if not 1 <= i <= g - 1:
        raise IndexOutOfRange(f"node index {i} out of range 1..{g - 1}")
    out = list(dist)
    out[i - 1] -= 1
    out[i] += 1
    return tuple(out)


def _check_dist(L: LimitLineBundle, dist) -> tuple[int, ...]:
    dist = tuple(int(x) for x in dist)
    if len(dist) != L.g:
        raise DegreeMismatch(f"distribution {dist} has {len(dist)} entries, chain has {L.g}")
    if sum(dist) != L.d:
        raise DegreeMismatch(f"distribution {dist} has total {sum(dist)}, bundle degree {L.d}")
    return dist


def restrict(L: LimitLineBundle, dist) -> list[ComponentBundle]:
    """The multidegree-``dist`` limit determined by the aspects: component
    i carries the i-th aspect twisted down by S_{i-1} at the left node and
    d - S_i at the right node (S_i the prefix sums), so its degree is
    d^i."""
    dist = _check_dist(L, dist)
    out = []
    prefix = 0
    for i, a in enumerate(L.aspects):
        u = prefix
        prefix += dist[i]
        v = L.d - prefix
        out.append(ComponentBundle(a, u, v, L.d))
    return out


# --- exact h0 of a multidegree limit ---

def h0_chain(L: LimitLineBundle, dist) -> int:
    """Dimension of the space of global sections of the multidegree-
    ``dist`` limit: tuples of component sections agreeing at the nodes.

    Right-to-left sweep carrying (n, eps) where n is the h0 of the
    processed suffix and eps in {0, 1} is the rank of evaluation of the
    suffix sections at the next node to the left.  If eps = 1 the new
    component's sections are unconstrained and one matching condition is
    spent; if eps = 0 they must vanish at the shared node.
    """
    B = restrict(L, dist)
    g = len(B)
    n = B[-1].h0()
    if g == 1:
        return n
    eps = 1 if B[-1].twist(1, 0).h0() < n else 0
    for i in range(g - 2, -1, -1):
        if eps == 1:
            defining = B[i]
        else:
            defining = B[i].twist(0, 1)
        w = defining.h0()
        n = w + n - eps
        eps = 1 if defining.twist(1, 0).h0() < w else 0
    return n


def h0_chain_lr(L: LimitLineBundle, dist) -> int:
    """Left-to-right mirror of :func:`h0_chain`; must agree with it."""
    B = restrict(L, dist)
    g = len(B)
    n = B[0].h0()
    if g == 1:
        return n
    eps = 1 if B[0].twist(0, 1).h0() < n else 0
    for i in range(1, g):
        if eps == 1:
            defining = B[i]
        else:
            defining = B[i].twist(1, 0)
        w = defining.h0()
        n = w + n - eps
        eps = 1 if defining.twist(0, 1).h0() < w else 0
    return n


def window_distributions(L: LimitLineBundle, window: int):
    """All degree distributions whose prefix sums S_1..S_{g-1} lie in
    [-window, d+window], in lexicographic order of the prefix sums."""
    g, d = L.g, L.d
    if g == 1:
        yield (d,)
        return
    lo, hi = min(-window, d), max(d + window, 0)
    span = range(lo, hi + 1)

    def rec(prefixes):
        if len(prefixes) == g - 1:
            full = list(prefixes) + [d]
            yield tuple(b - a for a, b in zip([0] + full[:-1], full))
            return
        for s in span:
            yield from rec(prefixes + [s])

    yield from rec([])


def default_window(L: LimitLineBundle) -> int:
    return L.g + 1


# --- windowed minimum h0 via dynamic programming over prefix sums ---

def _suffix_dp(L: LimitLineBundle, window: int, want_tables: bool):
    """Right-to-left DP over prefix-sum states.

    State at node i (1 <= i <= g-1), keyed by s = S_i and the evaluation
    rank eps at p^i: the minimum, over windowed suffix distributions with
    that prefix sum, of h0 of the suffix X^{>i}.  Returns the overall
    windowed minimum of h0_chain, one witness distribution attaining it,
    and (optionally) the per-node arrays min-suffix-h0(i, s).
    """
    g, d = L.g, L.d
    if window < 0:
        raise PreconditionError(f"window must be >= 0, got {window}")
    if g == 1:
        return h0_twisted(L.aspects[0], d, 0, 0), (d,), {}
    # keep the forced boundary sums S_0 = 0 and S_g = d inside the window
    lo, hi = min(-window, d), max(d + window, 0)
    width = hi - lo + 1
    aspects = L.aspects

    # node g-1: suffix is E^g alone, with v = 0 at the free point p^g
    a_g = aspects[-1]
    n0 = [_INF] * width
    n1 = [_INF] * width
    parent0: list = [None] * width
    parent1: list = [None] * width
    for idx in range(width):
        s = lo + idx
        n = h0_twisted(a_g, d, s, 0)
        eps = 1 if h0_twisted(a_g, d, s + 1, 0) < n else 0
        # parents record the prefix sums at the nodes strictly to the right
        if eps:
            n1[idx] = n
            parent1[idx] = ()
        else:
            n0[idx] = n
            parent0[idx] = ()

    tables: dict[int, list[int]] = {}
    if want_tables:
        tables[g - 1] = [min(a, b) for a, b in zip(n0, n1)]

    for comp in range(g - 1, 0, -1):  # add component E^comp, produce node comp-1
        a_i = aspects[comp - 1]
        prev_range = range(0, 1) if comp == 1 else range(lo, hi + 1)
        m0 = [_INF] * width
        m1 = [_INF] * width
        q0: list = [None] * width
        q1: list = [None] * width
        for s_prev in prev_range:
            u = s_prev
            jdx = s_prev - lo
            for idx in range(width):
                s = lo + idx
                v = d - s
                for eps, narr, parr in ((0, n0, parent0), (1, n1, parent1)):
                    n = narr[idx]
                    if n >= _INF:
                        continue
                    vdef = v if eps else v + 1
                    w = h0_twisted(a_i, d, u, vdef)
                    n2 = w + n - eps
                    eps2 = 1 if h0_twisted(a_i, d, u + 1, vdef) < w else 0
                    if eps2:
                        if n2 < m1[jdx]:
                            m1[jdx] = n2
                            q1[jdx] = (s,) + parr[idx]
                    else:
                        if n2 < m0[jdx]:
                            m0[jdx] = n2
                            q0[jdx] = (s,) + parr[idx]
        n0, n1, parent0, parent1 = m0, m1, q0, q1
        if want_tables and comp - 1 >= 1:
            tables[comp - 1] = [min(a, b) for a, b in zip(n0, n1)]

    zidx = 0 - lo
    best = min(n0[zidx], n1[zidx])
    if best >= _INF:
        raise InternalCheckError("suffix DP produced no state at S_0 = 0")
    chain_sums = parent0[zidx] if n0[zidx] <= n1[zidx] else parent1[zidx]
    prefixes = list(chain_sums) + [d]
    witness = tuple(b - a for a, b in zip([0] + prefixes[:-1], prefixes))
    return best, witness, tables


def min_h0(L: LimitLineBundle, window: int | None = None) -> int:
    """Minimum of h0_chain over all windowed degree distributions."""
    if window is None:
        window = default_window(L)
    best, _, _ = _suffix_dp(L, window, want_tables=False)
    return best


@dataclass(frozen=True)
class RPositivityReport:
    is_r_positive: bool
    min_h0: int
    witness: tuple[int, ...]  # a distribution attaining the minimum


def is_r_positive(L: LimitLineBundle, r: int, window: int | None = None) -> RPositivityReport:
    """Whether every windowed multidegree limit has at least r+1 sections,
    together with a distribution attaining the minimum."""
    if window is None:
        window = default_window(L)
    best, witness, _ = _suffix_dp(L, window, want_tables=False)
    return RPositivityReport(best >= r + 1, best, witness)


# --- vanishing tables and star conditions ---

@dataclass(frozen=True)
class VanishingTable:
    """Extremal degree thresholds at the nodes of an r-positive limit.

    a(i, n) for 0 <= i <= g-1: the largest windowed prefix sum alpha at
    node i such that every windowed completion with S_i = alpha keeps at
    least r+1-n sections on the suffix; a(0, n) = n by convention.
    b(i, n) = d - a(i, r-n) for 1 <= i <= g-1, and b(g, n) = n.
    Rows are strictly increasing in n.
    """

    r: int
    d: int
    g: int
    a_rows: tuple[tuple[int, ...], ...]  # index 0..g-1
    b_rows: tuple[tuple[int, ...], ...]  # index 1..g, stored shifted by 1

    def a(self, i: int, n: int) -> int:
        if not 0 <= i <= self.g - 1:
            raise IndexOutOfRange(f"a-row index {i} out of range 0..{self.g - 1}")
        return self.a_rows[i][n]

    def b(self, i: int, n: int) -> int:
        if not 1 <= i <= self.g:
            raise IndexOutOfRange(f"b-row index {i} out of range 1..{self.g}")
        return self.b_rows[i - 1][n]


def vanishing_tables(L: LimitLineBundle, r: int, window: int | None = None) -> VanishingTable:
    """Compute the a/b threshold tables of an r-positive limit line
    bundle.  Raises :class:`NotRPositive` otherwise."""
    if window is None:
        window = default_window(L)
    g, d = L.g, L.d
    best, _, tables = _suffix_dp(L, window, want_tables=True)
    if best < r + 1:
        raise NotRPositive(f"bundle has windowed min h0 = {best} < r+1 = {r + 1}")
    lo = min(-window, d)  # same indexing as the DP
    a_rows: list[tuple[int, ...]] = [tuple(range(r + 1))]
    for i in range(1, g):
        minsuf = tables[i]
        # sanity: min-suffix-h0 must step down by at most 1 per unit of s
        for x, y in zip(minsuf, minsuf[1:]):
            if not (y <= x <= y + 1):
                raise InternalCheckError(f"min-suffix-h0 at node {i} is not 1-Lipschitz monotone")
        row = []
        for n in range(r + 1):
            need = r + 1 - n
            alphas = [lo + idx for idx, m in enumerate(minsuf) if m >= need]
            if not alphas or alphas[-1] == lo + len(minsuf) - 1:
                raise InternalCheckError(
                    f"a({i}, {n}) not attained strictly inside the window; enlarge it"
                )
            row.append(alphas[-1])
        if any(x >= y for x, y in zip(row, row[1:])):
            raise InternalCheckError(f"a-row at node {i} is not strictly increasing: {row}")
        a_rows.append(tuple(row))
    b_rows = [
        tuple(d - a_rows[i][r - n] for n in range(r + 1)) for i in range(1, g)
    ]
    b_rows.append(tuple(range(r + 1)))
    return VanishingTable(r=r, d=d, g=g, a_rows=tuple(a_rows), b_rows=tuple(b_rows))


@dataclass(frozen=True)
class StarReport:
    """Components whose aspect is pinned by an extremal section: the pairs
    (i, n) with a(i-1, n) + b(i, r-n) = d.  At each such pair the aspect
    is checked to be the exact class O(a(i-1, n) p^{i-1} + b(i, r-n) p^i).
    ``per_n`` counts starred components for each n; each count is at
    least g - d + r."""

    pairs: tuple[tuple[int, int], ...]
    per_n: dict[int, int]
    lower_bound: int


def star_components(L: LimitLineBundle, r: int, window: int | None = None) -> StarReport:
    """Find all star pairs of an r-positive limit line bundle and verify
    the forced aspects and the per-n counting bound."""
    t = vanishing_tables(L, r, window)
    g, d = L.g, L.d
    pairs = []
    per_n = {n: 0 for n in range(r + 1)}
    for i in range(1, g + 1):
        for n in range(r + 1):
            total = t.a(i - 1, n) + t.b(i, r - n)
            if total > d:
                raise InternalCheckError(
                    f"star bound violated at (i, n) = ({i}, {n}): {total} > d = {d}"
                )
            if total == d:
                pairs.append((i, n))
                per_n[n] += 1
                forced = (t.a(i - 1, n), t.b(i, r - n))
                actual = L.aspects[i - 1]
                if actual is None or actual != forced:
                    raise GenericityViolation(
                        f"component {i} is starred with forced aspect {forced} "
                        f"but carries {actual}"
                    )
    bound = g - d + r
    for n, c in per_n.items():
        if c < bound:
            raise InternalCheckError(
                f"star count {c} for n = {n} is below the forced bound {bound}"
            )
    return StarReport(pairs=tuple(pairs), per_n=per_n, lower_bound=bound)


# --- exhaustive search over symbolic aspect tuples ---

def aspect_options(g: int, d: int, window: int) -> list[list[Aspect]]:
    """The canonical symbolic aspect choices per component: exact classes
    (a, d-a) for a in [-window, d+window] on interior components, the
    all-degree-at-the-node exact class on end components (coefficients at
    the free points p^0 and p^g are normalized to zero, since nothing the
    engine computes can distinguish free-point mass from a generic
    class), and a generic class everywhere.  Exacts come first, ordered
    by left coefficient; the generic option is last."""
    if g == 1:
        return [[(0, 0), None] if d == 0 else [None]]
    options: list[list[Aspect]] = []
    for i in range(1, g + 1):
        if i == 1:
            options.append([(0, d), None])
        elif i == g:
            options.append([(d, 0), None])
        else:
            options.append([(a, d - a) for a in range(-window, d + window + 1)] + [None])
    return options


@dataclass(frozen=True)
class SearchWitness:
    aspects: tuple[Aspect, ...]
    min_h0: int


@dataclass(frozen=True)
class SearchResult:
    count_exact: int
    count_with_generic: int
    witnesses: tuple[SearchWitness, ...]

    @property
    def total(self) -> int:
        return self.count_exact + self.count_with_generic


def _forward_dp_init(aspect: Aspect, d: int, lo: int, hi: int):
    """State after E^1, keyed by S_1: (n, eps at p^1) minima."""
    width = hi - lo + 1
    n0 = [_INF] * width
    n1 = [_INF] * width
    for idx in range(width):
        v = d - (lo + idx)
        n = h0_twisted(aspect, d, 0, v)
        if h0_twisted(aspect, d, 0, v + 1) < n:
            n1[idx] = n
        else:
            n0[idx] = n
    return n0, n1


def _forward_dp_step(aspect: Aspect, d: int, lo: int, hi: int, state):
    """Extend the prefix DP by one interior component."""
    n0, n1 = state
    width = hi - lo + 1
    m0 = [_INF] * width
    m1 = [_INF] * width
    for idx in range(width):
        u = lo + idx
        a = n0[idx]
        b = n1[idx]
        if a >= _INF and b >= _INF:
            continue
        for jdx in range(width):
            v = d - (lo + jdx)
            if a < _INF:
                w = h0_twisted(aspect, d, u + 1, v)
                n2 = w + a
                if h0_twisted(aspect, d, u + 1, v + 1) < w:
                    if n2 < m1[jdx]:
                        m1[jdx] = n2
                else:
                    if n2 < m0[jdx]:
                        m0[jdx] = n2
            if b < _INF:
                w = h0_twisted(aspect, d, u, v)
                n2 = w + b - 1
                if h0_twisted(aspect, d, u, v + 1) < w:
                    if n2 < m1[jdx]:
                        m1[jdx] = n2
                else:
                    if n2 < m0[jdx]:
                        m0[jdx] = n2
    return m0, m1


def _forward_dp_finish(aspect: Aspect, d: int, lo: int, hi: int, state) -> int:
    """Close the DP with the last component (S_g = d forced, v = 0)."""
    n0, n1 = state
    best = _INF
    width = hi - lo + 1
    for idx in range(width):
        u = lo + idx
        a = n0[idx]
        b = n1[idx]
        if a < _INF:
            n2 = h0_twisted(aspect, d, u + 1, 0) + a
            if n2 < best:
                best = n2
        if b < _INF:
            n2 = h0_twisted(aspect, d, u, 0) + b - 1
            if n2 < best:
                best = n2
    return best


def _enumerate_minima(g: int, d: int, window: int, first: Aspect, options):
    """DFS over aspect tuples with the given first aspect, sharing prefix
    DP states; yields (aspects, windowed min h0) in lexicographic option
    order."""
    lo, hi = min(-window, d), max(d + window, 0)
    out: list[tuple[tuple[Aspect, ...], int]] = []
    if g == 1:
        return [((first,), h0_twisted(first, d, 0, 0))]
    state1 = _forward_dp_init(first, d, lo, hi)

    def rec(comp: int, prefix: tuple[Aspect, ...], state) -> None:
        if comp == g:
            for a in options[g - 1]:
                out.append((prefix + (a,), _forward_dp_finish(a, d, lo, hi, state)))
            return
        for a in options[comp - 1]:
            rec(comp + 1, prefix + (a,), _forward_dp_step(a, d, lo, hi, state))

    rec(2, (first,), state1)
    return out


def search_limit_bundles(
    g: int,
    r: int,
    d: int,
    window: int | None = None,
    max_genus: int = 6,
    threads: int = 1,
) -> SearchResult:
    """Enumerate every canonical symbolic aspect tuple and count the
    r-positive ones.  ``count_exact`` counts tuples whose aspects are all
    exact; tuples containing a generic aspect are counted separately.
    Deterministic regardless of ``threads``; the tuple space is
    partitioned by the first component's aspect.
    """
    if g < 1:
        raise PreconditionError(f"need g >= 1, got g={g}")
    if g > max_genus:
        options = aspect_options(g, d, window or g + 1)
        size = 1
        for o in options:
            size *= len(o)
        raise BudgetExceeded(
            f"search over g = {g} > {max_genus} refused (state space {size} tuples); "
            "raise max_genus explicitly to override"
        )
    if window is None:
        window = g + 1
    options = aspect_options(g, d, window)
    firsts = options[0]
    if threads > 1 and g > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(firsts))) as pool:
            chunks = list(
                pool.map(lambda a: _enumerate_minima(g, d, window, a, options), firsts)
            )
    else:
        chunks = [_enumerate_minima(g, d, window, a, options) for a in firsts]
    count_exact = 0
    count_generic = 0
    witnesses = []
    for chunk in chunks:
        for aspects, best in chunk:
            if best >= r + 1:
                if any(a is None for a in aspects):
                    count_generic += 1
                else:
                    count_exact += 1
                witnesses.append(SearchWitness(aspects, best))
    return SearchResult(
        count_exact=count_exact,
        count_with_generic=count_generic,
        witnesses=tuple(witnesses),
    )


# --- serialization ---

def parse_aspects(text: str, d: int | None = None) -> LimitLineBundle:
    """Parse a limit line bundle from "0,4;2,2;0,4" or "[0,4; 2,2; 0,4]".

    Interior aspects are written (left, right) = coefficients at
    (p^{i-1}, p^i); the two end components are written free point first,
    i.e. (p^0 coeff, p^1 coeff) for E^1 and (p^g coeff, p^{g-1} coeff)
    for E^g, so the canonical all-degree-at-the-node classes read "0,d"
    at both ends.  "gen" denotes a generic aspect.  The total degree is
    inferred from any exact aspect unless given."""
    body = text.strip().strip("[]")
    parts = [p.strip() for p in body.split(";")]
    raw: list[Aspect] = []
    for p in parts:
        if p.lower() == "gen":
            raw.append(None)
        else:
            x, y = (int(t) for t in p.split(","))
            raw.append((x, y))
    g = len(raw)
    if d is None:
        exact_sums = {a[0] + a[1] for a in raw if a is not None}
        if len(exact_sums) != 1:
            raise PreconditionError(
                "cannot infer the total degree: pass d explicitly or include exact aspects"
            )
        d = exact_sums.pop()
    aspects: list[Aspect] = []
    for i, a in enumerate(raw):
        if a is not None and g >= 2 and i == g - 1:
            a = (a[1], a[0])  # last component is written free point first
        aspects.append(a)
    return LimitLineBundle(d=d, aspects=tuple(aspects))


def aspects_str(L: LimitLineBundle) -> str:
    """Inverse of :func:`parse_aspects`."""
    parts = []
    for i, a in enumerate(L.aspects):
        if a is None:
            parts.append("gen")
        elif L.g >= 2 and i == L.g - 1:
            parts.append(f"{a[1]},{a[0]}")
        else:
            parts.append(f"{a[0]},{a[1]}")
    return ";".join(parts)


def parse_distribution(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.strip().split(","))
