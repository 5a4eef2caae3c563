"""Young-diagram combinatorics: standard tableaux on rectangles and
k-core fillings via the residue action of the affine symmetric group.

Partitions are tuples of weakly decreasing positive row lengths; the
empty partition is ().  The content of the box in row i, column j
(1-indexed) is j - i, and its residue is the content mod k.  A k-core is
a partition none of whose hook lengths is divisible by k.

The filling model: a k-filling of a k-core with symbols {1, .., g} is a
length-g residue sequence whose strict-add action (each step adds every
addable box of one residue class, at least one) takes the empty partition
to the core.  The boxes added at one step all carry that step's symbol;
they share a residue and sit at pairwise lattice distance a multiple of
k, and witnesses are checked against this rule on replay.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import InternalCheckError, NotACore, PreconditionError, SymbolCountMismatch

Partition = tuple[int, ...]


def check_partition(rows) -> Partition:
    """Validate and normalize weakly decreasing positive row lengths."""
    p = tuple(int(x) for x in rows)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise PreconditionError(f"row lengths must be weakly decreasing: {p}")
    if p and p[-1] < 1:
        raise PreconditionError(f"row lengths must be positive: {p}")
    return p


def hook_lengths(p: Partition) -> list[int]:
    """All hook lengths of the diagram, row by row."""
    p = check_partition(p)
    cols = _conjugate(p)
    return [
        (p[i] - j - 1) + (cols[j] - i - 1) + 1
        for i in range(len(p))
        for j in range(p[i])
    ]


def _conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for r in p if r > j) for j in range(p[0]))


def is_core(p: Partition, k: int) -> bool:
    """True iff no hook length of p is divisible by k (no removable
    rim hook of length k)."""
    if k < 2:
        raise PreconditionError(f"k must be >= 2, got {k}")
    return all(h % k != 0 for h in hook_lengths(p))


def _require_core(p: Partition, k: int) -> Partition:
    p = check_partition(p)
    if not is_core(p, k):
        raise NotACore(f"{p or '()'} is not a {k}-core")
    return p


def addable_cells(p: Partition) -> list[tuple[int, int]]:
    """Corner positions (row, col), 1-indexed, where a box may be added."""
    p = check_partition(p)
    cells = [
        (i + 1, p[i] + 1)
        for i in range(len(p))
        if i == 0 or p[i - 1] > p[i]
    ]
    cells.append((len(p) + 1, 1))
    return cells


def removable_cells(p: Partition) -> list[tuple[int, int]]:
    """Corner positions (row, col), 1-indexed, whose box may be removed."""
    p = check_partition(p)
    return [
        (i + 1, p[i])
        for i in range(len(p))
        if i == len(p) - 1 or p[i] > p[i + 1]
    ]


def _cells_of_residue(cells, residue: int, k: int):
    return [(i, j) for (i, j) in cells if (j - i) % k == residue % k]


def core_apply_residue(p: Partition, residue: int, k: int) -> Partition:
    """Action of the residue-``residue`` generator of the affine symmetric
    group on a k-core: add every addable box of that residue if any exist,
    otherwise remove every removable box of that residue, otherwise leave
    the core unchanged.  Involutive, and maps k-cores to k-cores.
    """
    p = _require_core(p, k)
    add = _cells_of_residue(addable_cells(p), residue, k)
    rem = _cells_of_residue(removable_cells(p), residue, k)
    if add and rem:
        # impossible on a core; both nonempty would make the action ill-defined
        raise InternalCheckError(
            f"core {p} has both addable and removable boxes of residue {residue} mod {k}"
        )
    if add:
        q = _add_cells(p, add)
    elif rem:
        q = _remove_cells(p, rem)
    else:
        return p
    if not is_core(q, k):
        raise InternalCheckError(f"residue action left the {k}-core world: {p} -> {q}")
    return q


def core_add_residue(p: Partition, residue: int, k: int) -> Partition:
    """Strict-add variant: like :func:`core_apply_residue` but raises unless
    the move strictly adds boxes."""
    p = _require_core(p, k)
    add = _cells_of_residue(addable_cells(p), residue, k)
    rem = _cells_of_residue(removable_cells(p), residue, k)
    if not add or rem:
        raise PreconditionError(
            f"residue {residue} mod {k} does not strictly add boxes to {p or '()'}"
        )
    q = _add_cells(p, add)
    if not is_core(q, k):
        raise InternalCheckError(f"strict add left the {k}-core world: {p} -> {q}")
    return q


def _add_cells(p: Partition, cells) -> Partition:
    rows = list(p)
    for (i, _j) in cells:
        if i == len(rows) + 1:
            rows.append(1)
        else:
            rows[i - 1] += 1
    return check_partition(rows)


def _remove_cells(p: Partition, cells) -> Partition:
    rows = list(p)
    for (i, _j) in cells:
        rows[i - 1] -= 1
    return check_partition([r for r in rows if r > 0])


def core_length(p: Partition, k: int) -> int:
    """Number of strict-add steps in any residue sequence from () to p:
    the number of boxes of p with hook length < k."""
    _require_core(p, k)
    return sum(1 for h in hook_lengths(p) if h < k)


def _strict_add_or_none(p: Partition, residue: int, k: int) -> Partition | None:
    add = _cells_of_residue(addable_cells(p), residue, k)
    if not add:
        return None
    if _cells_of_residue(removable_cells(p), residue, k):
        return None
    return _add_cells(p, add)


def count_k_fillings(target: Partition, k: int, g: int) -> int:
    """Number of k-fillings of the k-core ``target`` with symbols
    {1, .., g}: length-g residue sequences whose strict-add application
    to () reaches ``target``.

    The number of steps is forced (every strict-add path from () to the
    core has :func:`core_length` steps); a different g raises
    :class:`SymbolCountMismatch` since every sequence of that length
    would contribute zero.
    """
    target = _require_core(target, k)
    forced = core_length(target, k)
    if g != forced:
        raise SymbolCountMismatch(
            f"{k}-fillings of {target or '()'} use exactly {forced} symbols, got g={g}"
        )
    size = sum(target)
    memo: dict[tuple[Partition, int], int] = {}

    def count_from(p: Partition, steps_left: int) -> int:
        if steps_left == 0:
            return 1 if p == target else 0
        # each step adds at least one box, and adds never overshoot the target
        if sum(p) + steps_left > size or not _contained(p, target):
            return 0
        key = (p, steps_left)
        if key not in memo:
            memo[key] = sum(
                count_from(q, steps_left - 1)
                for res in range(k)
                if (q := _strict_add_or_none(p, res, k)) is not None
            )
        return memo[key]

    return count_from((), g)


def _contained(inner: Partition, outer: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


@dataclass(frozen=True)
class FillingWitness:
    """A k-filling witness: the residue sequence in application order."""

    residues: tuple[int, ...]
    k: int

    def replay(self) -> tuple[Partition, list[list[tuple[int, int]]]]:
        """Apply the strict-add sequence to (); returns the final core and,
        per step, the list of boxes added at that step."""
        p: Partition = ()
        steps: list[list[tuple[int, int]]] = []
        for res in self.residues:
            q = core_add_residue(p, res, self.k)
            steps.append(sorted(set(_boxes(q)) - set(_boxes(p))))
            p = q
        return p, steps

    def validate(self, target: Partition) -> None:
        """Check the witness replays to ``target`` and that each symbol's
        boxes sit at pairwise lattice distance a multiple of k with equal
        content residue."""
        final, steps = self.replay()
        if final != check_partition(target):
            raise InternalCheckError(f"witness {self.residues} replays to {final}, not {target}")
        for res, boxes in zip(self.residues, steps):
            for (i1, j1) in boxes:
                if (j1 - i1) % self.k != res % self.k:
                    raise InternalCheckError(f"box {(i1, j1)} has wrong residue for {res} mod {self.k}")
                for (i2, j2) in boxes:
                    if (abs(i1 - i2) + abs(j1 - j2)) % self.k != 0:
                        raise InternalCheckError(
                            f"boxes {(i1, j1)}, {(i2, j2)} of one symbol are at lattice "
                            f"distance {abs(i1 - i2) + abs(j1 - j2)}, not a multiple of {self.k}"
                        )

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.residues)


def _boxes(p: Partition) -> list[tuple[int, int]]:
    return [(i + 1, j + 1) for i in range(len(p)) for j in range(p[i])]


def k_filling_witnesses(target: Partition, k: int, g: int) -> list[FillingWitness]:
    """All k-fillings of ``target`` as residue-sequence witnesses, in
    lexicographic order of the sequences.  Each witness is validated
    against the repetition rule before being returned."""
    target = _require_core(target, k)
    forced = core_length(target, k)
    if g != forced:
        raise SymbolCountMismatch(
            f"{k}-fillings of {target or '()'} use exactly {forced} symbols, got g={g}"
        )
    size = sum(target)
    out: list[FillingWitness] = []

    def walk(p: Partition, prefix: list[int]) -> None:
        if len(prefix) == g:
            if p == target:
                out.append(FillingWitness(tuple(prefix), k))
            return
        if sum(p) + (g - len(prefix)) > size or not _contained(p, target):
            return
        for res in range(k):
            q = _strict_add_or_none(p, res, k)
            if q is not None:
                walk(q, prefix + [res])

    walk((), [])
    for w in out:
        w.validate(target)
    return out


def syt_count(shape: Partition) -> int:
    """Number of standard Young tableaux of the given shape, by the hook
    length formula n! / prod(hooks)."""
    shape = check_partition(shape)
    n = sum(shape)
    denom = 1
    for h in hook_lengths(shape):
        denom *= h
    num = factorial(n)
    if num % denom:
        raise InternalCheckError(f"hook length formula non-integral on {shape}")
    return num // denom


def syt_count_rect(rows: int, cols: int) -> int:
    """Standard Young tableaux on the rows x cols rectangle."""
    if rows < 0 or cols < 0:
        raise PreconditionError("rectangle dimensions must be nonnegative")
    if rows == 0 or cols == 0:
        return 1
    return syt_count((cols,) * rows)


def parse_partition(text: str) -> Partition:
    """Parse "4,2,1,1" (empty string for the empty partition)."""
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(t) for t in text.split(","))


def partition_str(p: Partition) -> str:
    return ",".join(str(r) for r in p)
