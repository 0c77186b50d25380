"""Standard Young tableaux and the row-insertion correspondence.

A tableau is stored row-major as a tuple of tuples of entries; validation
happens once, on construction.  Shapes are plain tuples of row lengths.
The text form used by the CLI writes rows separated by ``/`` with entries
comma-separated, e.g. ``"1,3/2"``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Sequence

from .permutations import Perm

Shape = tuple[int, ...]


def is_partition(rows: Sequence[int]) -> bool:
    """True iff rows is a weakly decreasing sequence of positive integers."""
    return all(r >= 1 for r in rows) and all(a >= b for a, b in zip(rows, rows[1:]))


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau: strictly increasing rows and columns filled
    with 1..n exactly once, row lengths weakly decreasing."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.rows
        if not rows or any(not row for row in rows):
            raise ValueError("tableau must have nonempty rows")
        shape = tuple(len(row) for row in rows)
        if not is_partition(shape):
            raise ValueError(f"row lengths {shape} do not weakly decrease")
        n = sum(shape)
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise ValueError(f"entries are not exactly 1..{n}: {rows}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly increasing")
        for r in range(1, len(rows)):
            for c, v in enumerate(rows[r]):
                if rows[r - 1][c] >= v:
                    raise ValueError(f"column {c + 1} is not strictly increasing")

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def first_row(self) -> tuple[int, ...]:
        return self.rows[0]

    def __str__(self) -> str:
        return format_tableau(self)


def parse_tableau(text: str) -> Tableau:
    """Parse the ``"1,3/2"`` text form."""
    rows = []
    for row_text in text.split("/"):
        row = []
        for tok in row_text.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise ValueError(f"invalid tableau entry {tok!r} in {text!r}")
            row.append(int(tok))
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def format_tableau(t: Tableau) -> str:
    return "/".join(",".join(str(v) for v in row) for row in t.rows)


# ---------------------------------------------------------------------------
# Row insertion and its inverse


def rsk(p: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insert p, returning the insertion and recording tableaux (P, Q).

    Both have the same shape and the first row of P has length
    ``lis_length(p)``.
    """
    if not p:
        raise ValueError("rsk requires a nonempty permutation")
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        r = 0
        while r < len(prows):
            row = prows[r]
            i = bisect_left(row, x)
            if i == len(row):
                row.append(x)
                qrows[r].append(step)
                break
            x, row[i] = row[i], x
            r += 1
        else:
            prows.append([x])
            qrows.append([step])
    return (
        Tableau(tuple(tuple(row) for row in prows)),
        Tableau(tuple(tuple(row) for row in qrows)),
    )


def rsk_inverse(p_tab: Tableau, q_tab: Tableau) -> Perm:
    """Recover the permutation mapped to (P, Q); inverse of :func:`rsk`.

    Swapping the arguments yields the inverse permutation.
    """
    if p_tab.shape != q_tab.shape:
        raise ValueError(f"shape mismatch: {p_tab.shape} vs {q_tab.shape}")
    n = p_tab.n
    prows = [list(row) for row in p_tab.rows]
    where = {}
    for r, row in enumerate(q_tab.rows):
        for v in row:
            where[v] = r
    word = []
    for label in range(n, 0, -1):
        r = where[label]
        x = prows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = prows[rr]
            i = bisect_left(row, x) - 1
            x, row[i] = row[i], x
        word.append(x)
    word.reverse()
    return tuple(word)


# ---------------------------------------------------------------------------
# Hooks


class HookType(Enum):
    """Where the largest entry of a hook sits: end of the first column
    (DOWN) or end of the first row (RIGHT)."""

    DOWN = "down"
    RIGHT = "right"


def is_hook(t: Tableau) -> bool:
    """A hook consists of exactly one row and one column."""
    return all(len(row) == 1 for row in t.rows[1:])


def hook_type(t: Tableau) -> HookType:
    if not is_hook(t):
        raise ValueError(f"not a hook: {t}")
    n = t.n
    if n < 2:
        raise ValueError("hook type is undefined for a single box")
    return HookType.RIGHT if t.rows[0][-1] == n else HookType.DOWN


def hook_from_first_row(n: int, first_row: Sequence[int]) -> Tableau:
    """Build the hook of size n whose first row is the given entry set;
    the remaining entries fill the first column in increasing order."""
    row = tuple(first_row)
    column = sorted(set(range(1, n + 1)) - set(row))
    return Tableau((row,) + tuple((v,) for v in column))


def hook_tableaux(n: int, k: int | None = None) -> Iterator[Tableau]:
    """All hooks of size n, optionally restricted to first-row length k,
    in lexicographic order of the first-row entry set."""
    ks = range(1, n + 1) if k is None else [k]
    for kk in ks:
        if not 1 <= kk <= n:
            continue
        for rest in combinations(range(2, n + 1), kk - 1):
            yield hook_from_first_row(n, (1,) + rest)


# ---------------------------------------------------------------------------
# Shape and tableau generation


def partitions(n: int) -> Iterator[Shape]:
    """All partitions of n as weakly decreasing tuples."""

    def rec(remaining: int, largest: int) -> Iterator[Shape]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def standard_tableaux(shape: Sequence[int]) -> Iterator[Tableau]:
    """All standard Young tableaux of the given shape, by backtracking."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    n = sum(shape)
    grid = [[0] * r for r in shape]
    fill = [0] * len(shape)

    def rec(v: int) -> Iterator[Tableau]:
        if v > n:
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        for r in range(len(shape)):
            c = fill[r]
            if c < shape[r] and (r == 0 or fill[r - 1] > c):
                grid[r][c] = v
                fill[r] += 1
                yield from rec(v + 1)
                fill[r] -= 1

    yield from rec(1)


def all_standard_tableaux(n: int) -> Iterator[Tableau]:
    for shape in partitions(n):
        yield from standard_tableaux(shape)


# ---------------------------------------------------------------------------
# Protected area and surplus


@dataclass(frozen=True)
class ProtectedDecomposition:
    """Split of a tableau into a residual core (the protected area) plus the
    entries removed from the end of the first row (eastern surplus) and the
    bottom of the first column (southern surplus).

    The core keeps the original entries, so it is stored as plain rows: it
    has tableau shape and ordering but its entry set is generally not
    1..m."""

    protected_rows: tuple[tuple[int, ...], ...]
    eastern: tuple[int, ...]
    southern: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.protected_rows[0])

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.protected_rows)

    @property
    def protected_shape(self) -> Shape:
        return tuple(len(row) for row in self.protected_rows)

    @property
    def a(self) -> int | None:
        """Smallest eastern-surplus entry, if any."""
        return self.eastern[0] if self.eastern else None

    @property
    def b(self) -> int | None:
        """Smallest southern-surplus entry, if any."""
        return self.southern[0] if self.southern else None

    @property
    def c(self) -> int:
        """Last first-row entry of the protected area."""
        return self.protected_rows[0][-1]

    @property
    def d(self) -> int:
        """Last first-column entry of the protected area."""
        return self.protected_rows[-1][0]


def protected_decompose(t: Tableau) -> ProtectedDecomposition:
    """Remove as many boxes as possible from the first row and first column
    while the rest stays a Ferrers diagram.

    A first-row box is removable iff it has no box below it, so the first
    row keeps max(second row length, 1) cells; a first-column box is
    removable iff it has no box to its right, so rows of length one peel
    off the bottom.  The two removals cannot enable each other, hence a
    single greedy pass from the outer ends is maximal and the result is
    unique.
    """
    rows = t.rows
    second = len(rows[1]) if len(rows) > 1 else 0
    keep = max(second, 1)
    eastern = rows[0][keep:]
    j = len(rows)
    while j > 1 and len(rows[j - 1]) == 1:
        j -= 1
    southern = tuple(rows[i][0] for i in range(j, len(rows)))
    core = (rows[0][:keep],) + rows[1:j]
    return ProtectedDecomposition(core, eastern, southern)


def attach_surplus(
    protected_rows: tuple[tuple[int, ...], ...],
    eastern: Sequence[int],
    southern: Sequence[int],
) -> Tableau:
    """Inverse of :func:`protected_decompose`: extend the first row by the
    eastern entries and the first column by the southern entries."""
    rows = (
        (protected_rows[0] + tuple(eastern),)
        + protected_rows[1:]
        + tuple((v,) for v in southern)
    )
    return Tableau(rows)


def is_lm_protected(t: Tableau, l: int, m: int) -> bool:
    """True iff the protected area of t has m cells with l in its first row
    and every surplus entry exceeds every entry in the protected area's
    first row and first column (vacuously true for empty surpluses)."""
    dec = protected_decompose(t)
    if dec.l != l or dec.m != m:
        return False
    bound = max(dec.c, dec.d)
    return all(v > bound for v in dec.eastern + dec.southern)
