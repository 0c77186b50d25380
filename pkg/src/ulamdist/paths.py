"""Sub-diagonal lattice paths and the tail-exchange injection.

A path is a string over ``E`` (east, +x) and ``N`` (north, +y) starting at
the origin and never rising above the diagonal x = y.  L(n, k) denotes the
paths with n steps of which k are east, so the endpoint is (k, n - k); the
diagonal constraint forces n - k <= k.  Two-row standard tableaux of size n
with first row of length k biject with L(n, k) by reading the first-row
entries as east-step positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .tableaux import Tableau


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        if not self.steps:
            raise ValueError("path must have at least one step")
        east = 0
        for i, ch in enumerate(self.steps, start=1):
            if ch == "E":
                east += 1
            elif ch != "N":
                raise ValueError(f"invalid step {ch!r} in {self.steps!r}")
            if i - east > east:
                raise ValueError(
                    f"path rises above the diagonal after step {i}: {self.steps!r}"
                )

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def east(self) -> int:
        return self.steps.count("E")

    @property
    def north(self) -> int:
        return self.n - self.east

    @property
    def endpoint(self) -> tuple[int, int]:
        return (self.east, self.north)

    def __str__(self) -> str:
        return self.steps


def parse_path(text: str) -> LatticePath:
    return LatticePath(text.strip())


def lattice_paths(n: int, k: int) -> Iterator[LatticePath]:
    """All paths in L(n, k); empty if n - k > k or k > n."""
    if k > n or n - k > k or n < 1:
        return

    def rec(prefix: list[str], east: int, north: int) -> Iterator[LatticePath]:
        if east + north == n:
            yield LatticePath("".join(prefix))
            return
        if east < k:
            prefix.append("E")
            yield from rec(prefix, east + 1, north)
            prefix.pop()
        if north < n - k and north < east:
            prefix.append("N")
            yield from rec(prefix, east, north + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def tableau_to_path(t: Tableau) -> LatticePath:
    """Step i is east iff i lies in the first row of t (at most two rows)."""
    if len(t.rows) > 2:
        raise ValueError(f"tableau has more than two rows: {t}")
    first = set(t.rows[0])
    return LatticePath("".join("E" if i in first else "N" for i in range(1, t.n + 1)))


def path_to_tableau(path: LatticePath) -> Tableau:
    """East-step positions become row one, north-step positions row two."""
    row1 = tuple(i for i, ch in enumerate(path.steps, start=1) if ch == "E")
    row2 = tuple(i for i, ch in enumerate(path.steps, start=1) if ch == "N")
    rows = (row1,) if not row2 else (row1, row2)
    return Tableau(rows)


def _last_crossing(a: str, b: str) -> Optional[int]:
    """Largest t with (east steps of b[:t]) - (east steps of a[:t]) == 1.

    Translating a by (1, -1) puts its t-step point at (1 + e_a(t), t - 1 -
    e_a(t)), which coincides with b's t-step point exactly when e_b(t) -
    e_a(t) == 1; both paths reach any shared point after the same number of
    steps, so "last common point" and "largest such t" agree.
    """
    diff = 0
    last = None
    for t in range(1, len(a) + 1):
        diff += (b[t - 1] == "E") - (a[t - 1] == "E")
        if diff == 1:
            last = t
    return last


def flip_inject(p: LatticePath, q: LatticePath) -> tuple[LatticePath, LatticePath]:
    """Exchange the tails of p and q after their last meeting point.

    p is translated by (1, -1); since q starts northwest and ends southeast
    of the translate, the two must meet.  Cutting both at the last common
    point X and swapping the tails yields two paths with endpoint
    (k + 1, n - k - 1), both still weakly below the diagonal; the map is
    injective because X is recoverable from the output.
    """
    n = p.n
    if q.n != n:
        raise ValueError(f"paths differ in length: {p.n} vs {q.n}")
    if q.east != p.east + 2:
        raise ValueError(
            f"second path must take exactly two more east steps: {p.east} vs {q.east}"
        )
    t = _last_crossing(p.steps, q.steps)
    assert t is not None, "translated paths always share a point"
    return (
        LatticePath(p.steps[:t] + q.steps[t:]),
        LatticePath(q.steps[:t] + p.steps[t:]),
    )


def flip_preimage(
    r: LatticePath, s: LatticePath
) -> Optional[tuple[LatticePath, LatticePath]]:
    """Undo :func:`flip_inject`; None when (r, s) is not in its image.

    The cut point is the last common point of the translated r and s.  If
    there is none, or un-flipping produces a path that crosses the
    diagonal, or re-applying the flip does not give (r, s) back, the pair
    has no preimage.
    """
    if r.n != s.n:
        raise ValueError(f"paths differ in length: {r.n} vs {s.n}")
    if r.east != s.east:
        raise ValueError(f"paths differ in east steps: {r.east} vs {s.east}")
    t = _last_crossing(r.steps, s.steps)
    if t is None:
        return None
    try:
        p = LatticePath(r.steps[:t] + s.steps[t:])
        q = LatticePath(s.steps[:t] + r.steps[t:])
    except ValueError:
        return None
    if flip_inject(p, q) != (r, s):
        return None
    return (p, q)
