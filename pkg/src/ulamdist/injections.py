"""Constructive injections between tableau classes and their lift to
permutation pairs.

``hook_inject`` realizes an injection from pairs of hooks with first-row
lengths (k, l) into pairs with first-row lengths (k + 1, l - 1).  For
l = k + 2 the map is built recursively on the hook size n, anchored in
explicit tables for n = 3 and n = 4, and preserves the pair type: the type
of a hook records whether its largest entry ends the first column (DOWN)
or the first row (RIGHT).  For l > k + 2 injectivity is all that matters
downstream, so those maps are realized by deterministic rank arithmetic
(:class:`RankInjection`) over the lexicographic order of hooks.

``protected_inject`` transports the hook map to tableaux with a fixed
protected area: the surpluses are pulled off, renumbered into a pair of
hooks, mapped, renumbered back, and reattached, never touching the
protected area.

``lift`` turns any injection on single tableaux (standing for involutions)
into an injection on permutation pairs via row insertion, provided the
tableau class is shape-rigid, i.e. the shape of a member is determined by
its size and first-row length; hooks and two-row tableaux both qualify.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .paths import flip_inject, path_to_tableau, tableau_to_path
from .permutations import Perm
from .tableaux import (
    HookType,
    Tableau,
    attach_surplus,
    hook_from_first_row,
    hook_type,
    is_hook,
    is_lm_protected,
    protected_decompose,
    rsk,
    rsk_inverse,
)

Row = tuple[int, ...]

# Anchor tables for hook sizes 3 and 4, keyed by (n, first row of T1,
# first row of T2).  These are fixed data, not derived: the recursion for
# n >= 5 bottoms out here, and every entry maps a pair to a pair of the
# same type.
HOOK_BASE_TABLE: dict[tuple[int, Row, Row], tuple[Row, Row]] = {
    (3, (1,), (1, 2, 3)): ((1, 2), (1, 3)),
    (4, (1,), (1, 2, 3)): ((1, 2), (1, 3)),
    (4, (1,), (1, 2, 4)): ((1, 2), (1, 4)),
    (4, (1,), (1, 3, 4)): ((1, 3), (1, 4)),
    (4, (1,), (1, 2, 3, 4)): ((1, 2), (1, 2, 4)),
    (4, (1, 2), (1, 2, 3, 4)): ((1, 2, 3), (1, 2, 4)),
    (4, (1, 4), (1, 2, 3, 4)): ((1, 2, 4), (1, 3, 4)),
    (4, (1, 3), (1, 2, 3, 4)): ((1, 2, 3), (1, 3, 4)),
}


@dataclass(frozen=True)
class RankInjection:
    """Injection [A] x [B] -> [C] x [D] by mixed-radix rank arithmetic.

    Sends (i, j) to divmod(i * B + j, D); injective whenever A * B <= C * D
    because i * B + j enumerates [A * B] without repeats.
    """

    a_size: int
    b_size: int
    c_size: int
    d_size: int

    def __post_init__(self):
        if self.a_size * self.b_size > self.c_size * self.d_size:
            raise ValueError(
                f"domain {self.a_size}x{self.b_size} exceeds "
                f"codomain {self.c_size}x{self.d_size}"
            )

    def apply(self, i: int, j: int) -> tuple[int, int]:
        if not (0 <= i < self.a_size and 0 <= j < self.b_size):
            raise ValueError(f"({i}, {j}) outside [{self.a_size}] x [{self.b_size}]")
        return divmod(i * self.b_size + j, self.d_size)


def _comb_rank(sub: Sequence[int], m: int) -> int:
    """Lexicographic rank of an increasing subset of range(m)."""
    rank = 0
    prev = -1
    r = len(sub)
    for t, c in enumerate(sub):
        for v in range(prev + 1, c):
            rank += comb(m - 1 - v, r - 1 - t)
        prev = c
    return rank


def _comb_unrank(rank: int, m: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`_comb_rank`."""
    sub = []
    v = 0
    for t in range(r):
        while True:
            block = comb(m - 1 - v, r - 1 - t)
            if rank < block:
                break
            rank -= block
            v += 1
        sub.append(v)
        v += 1
    return tuple(sub)


def _hook_rank(n: int, row: Row) -> int:
    """Rank of a hook with the given first row among first-row sets of its
    length, lexicographically."""
    return _comb_rank(tuple(v - 2 for v in row[1:]), n - 1)


def _hook_unrank(n: int, k: int, rank: int) -> Row:
    return (1,) + tuple(v + 2 for v in _comb_unrank(rank, n - 1, k - 1))


def _rank_inject_rows(n: int, row1: Row, row2: Row) -> tuple[Row, Row]:
    # Hook counts by first-row length are binomials, so the domain never
    # exceeds the codomain here (k <= l - 2 suffices).
    k, l = len(row1), len(row2)
    ranker = RankInjection(
        comb(n - 1, k - 1), comb(n - 1, l - 1), comb(n - 1, k), comb(n - 1, l - 2)
    )
    i, j = ranker.apply(_hook_rank(n, row1), _hook_rank(n, row2))
    return _hook_unrank(n, k + 1, i), _hook_unrank(n, l - 1, j)


def _inject_rows(n: int, row1: Row, row2: Row) -> tuple[Row, Row]:
    """Core recursion on first-row entry tuples; sizes and gap already
    validated by the caller."""
    if n <= 4:
        return HOOK_BASE_TABLE[(n, row1, row2)]
    if len(row2) > len(row1) + 2:
        return _rank_inject_rows(n, row1, row2)
    right1 = row1[-1] == n
    right2 = row2[-1] == n
    if not right1 and right2:
        # Largest entry moves from column end to row end in the first hook
        # and the other way in the second; swapping the results restores
        # the original pair type.
        return (row2[:-1], row1 + (n,))
    if not right1 and not right2:
        u1, u2 = _inject_rows(n - 1, row1, row2)
        return (u1, u2)
    if right1 and not right2:
        u1, u2 = _inject_rows(n - 1, row1[:-1], row2)
        return (u1 + (n,), u2)
    u1, u2 = _inject_rows(n - 1, row1[:-1], row2[:-1])
    return (u1 + (n,), u2 + (n,))


def hook_inject(
    n: int, k: int, l: int, t1: Tableau, t2: Tableau
) -> tuple[Tableau, Tableau]:
    """Map a pair of hooks with first-row lengths (k, l) injectively to a
    pair with first-row lengths (k + 1, l - 1).

    Requires 1 <= k <= l - 2 <= n - 2.  For l = k + 2 the construction
    recurses on n and preserves the pair type; for larger gaps it falls
    back to rank arithmetic and only injectivity is guaranteed.
    """
    if not (1 <= k <= l - 2 <= n - 2):
        raise ValueError(f"invalid parameters n={n}, k={k}, l={l}")
    for t, length, name in ((t1, k, "t1"), (t2, l, "t2")):
        if not is_hook(t):
            raise ValueError(f"{name} is not a hook: {t}")
        if t.n != n:
            raise ValueError(f"{name} has size {t.n}, expected {n}")
        if len(t.rows[0]) != length:
            raise ValueError(
                f"{name} has first-row length {len(t.rows[0])}, expected {length}"
            )
    r1, r2 = _inject_rows(n, t1.rows[0], t2.rows[0])
    return hook_from_first_row(n, r1), hook_from_first_row(n, r2)


def hook_injection(
    n: int, k: int, l: int
) -> Callable[[Tableau, Tableau], tuple[Tableau, Tableau]]:
    """Curried :func:`hook_inject`, convenient as an argument to
    :func:`lift`."""

    def apply(t1: Tableau, t2: Tableau) -> tuple[Tableau, Tableau]:
        return hook_inject(n, k, l, t1, t2)

    return apply


# ---------------------------------------------------------------------------
# Tableaux with a fixed protected area


def _surplus_hook_rows(eastern: Row, southern: Row) -> tuple[Row, tuple[int, ...]]:
    """First row and sorted entry list of the hook formed by putting 1 at
    the corner, the eastern surplus to its east and the southern surplus
    below."""
    entries = (1,) + tuple(sorted(eastern + southern))
    return (1,) + eastern, entries


def protected_inject(
    n: int, k: int, l: int, m: int, t1: Tableau, t2: Tableau
) -> tuple[Tableau, Tableau]:
    """Map a pair of (l, m)-protected tableaux with first-row lengths
    (k - 1, k + 1) to a pair with first-row length k, same (l, m).

    The protected areas are never touched: the surpluses of each input are
    rebuilt into a hook (1 at the corner), renumbered order-isomorphically
    to 1..(n - m + 1), passed through :func:`hook_inject`, renumbered back
    using that input's own surplus entries, and reattached.
    """
    for t, length, name in ((t1, k - 1, "t1"), (t2, k + 1, "t2")):
        if t.n != n:
            raise ValueError(f"{name} has size {t.n}, expected {n}")
        if len(t.rows[0]) != length:
            raise ValueError(
                f"{name} has first-row length {len(t.rows[0])}, expected {length}"
            )
        if not is_lm_protected(t, l, m):
            raise ValueError(f"{name} is not ({l}, {m})-protected: {t}")

    size = n - m + 1
    decs = (protected_decompose(t1), protected_decompose(t2))
    rows = []
    entry_lists = []
    for dec in decs:
        row, entries = _surplus_hook_rows(dec.eastern, dec.southern)
        relabel = {v: i + 1 for i, v in enumerate(entries)}
        rows.append(tuple(relabel[v] for v in row))
        entry_lists.append(entries)

    j1, j2 = _inject_rows(size, rows[0], rows[1])

    out = []
    for dec, entries, jrow in zip(decs, entry_lists, (j1, j2)):
        new_eastern = tuple(entries[v - 1] for v in jrow[1:])
        new_southern = tuple(sorted(set(entries[1:]) - set(new_eastern)))
        out.append(attach_surplus(dec.protected_rows, new_eastern, new_southern))
    u1, u2 = out
    if not (is_lm_protected(u1, l, m) and is_lm_protected(u2, l, m)):
        raise AssertionError("image left the protected class; inputs were invalid")
    return u1, u2


# ---------------------------------------------------------------------------
# Two-row tableaux via lattice paths


def two_row_inject(t1: Tableau, t2: Tableau) -> tuple[Tableau, Tableau]:
    """Injection on pairs of two-row tableaux with first-row lengths
    (k, k + 2), induced by :func:`~ulamdist.paths.flip_inject`."""
    r, s = flip_inject(tableau_to_path(t1), tableau_to_path(t2))
    return path_to_tableau(r), path_to_tableau(s)


# ---------------------------------------------------------------------------
# From tableau pairs to permutation pairs


def lift(
    inj: Callable[[Tableau, Tableau], tuple[Tableau, Tableau]],
    p1: Perm,
    p2: Perm,
) -> tuple[Perm, Perm]:
    """Turn an injection on single tableaux into one on permutation pairs.

    With rsk(p_i) = (P_i, Q_i), the result is the pair of permutations
    whose tableau pairs are inj(P1, P2) and inj(Q1, Q2).  That only defines
    permutations when each image pair shares a shape, which holds for
    shape-rigid classes (hooks, two-row tableaux); a violation raises
    instead of guessing.
    """
    p_tab1, q_tab1 = rsk(p1)
    p_tab2, q_tab2 = rsk(p2)
    img_p = inj(p_tab1, p_tab2)
    img_q = inj(q_tab1, q_tab2)
    for left, right in (img_p, img_q):
        if left.shape != right.shape:
            raise ValueError(
                "shape rigidity violated: image components have shapes "
                f"{left.shape} and {right.shape}"
            )
    return rsk_inverse(*img_p), rsk_inverse(*img_q)


def pair_type(t1: Tableau, t2: Tableau) -> tuple[HookType, HookType]:
    """Type of a pair of hooks (size >= 2 each)."""
    return hook_type(t1), hook_type(t2)
