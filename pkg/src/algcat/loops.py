"""Loops (unital quasigroups) as validated Cayley tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    IdentityViolation,
    LatinSquareViolation,
    ResourceLimitExceeded,
    StructureError,
)
from .perms import Perm

ENUMERATION_CAP = 6


@dataclass(frozen=True, slots=True)
class Loop:
    """order, full Cayley table (row op column), distinguished identity.

    Build through check_loop(); direct construction skips validation.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def left_div(self, a: int, b: int) -> int:
        """The unique x with a * x == b."""
        return self.table[a].index(b)

    def right_div(self, a: int, b: int) -> int:
        """The unique y with y * a == b."""
        for y in range(self.order):
            if self.table[y][a] == b:
                return y
        raise StructureError(f"no y with y * {a} == {b}")


def check_loop(table: Sequence[Sequence[int]], identity: int = 0) -> Loop:
    """Validate a Cayley table as a loop: every row and column a permutation,
    plus two-sided unit laws for the designated identity."""
    n = len(table)
    if n < 1:
        raise StructureError("loop order must be at least 1")
    if not 0 <= identity < n:
        raise StructureError(f"identity {identity} out of range for order {n}")
    rows = tuple(tuple(row) for row in table)
    for r, row in enumerate(rows):
        if len(row) != n:
            raise StructureError(f"row {r} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise StructureError(f"entry {v} in row {r} out of range for order {n}")
    for r, row in enumerate(rows):
        seen = set()
        for v in row:
            if v in seen:
                raise LatinSquareViolation("row", r, v)
            seen.add(v)
    for c in range(n):
        seen = set()
        for r in range(n):
            v = rows[r][c]
            if v in seen:
                raise LatinSquareViolation("column", c, v)
            seen.add(v)
    for x in range(n):
        if rows[identity][x] != x:
            raise IdentityViolation("left", x)
        if rows[x][identity] != x:
            raise IdentityViolation("right", x)
    return Loop(n, rows, identity)


def is_associative(loop: Loop) -> bool:
    n = loop.order
    t = loop.table
    return all(
        t[t[a][b]][c] == t[a][t[b][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


def left_translation(loop: Loop, a: int) -> Perm:
    """The permutation x -> a * x, i.e. row a of the table."""
    if not 0 <= a < loop.order:
        raise ValueError(f"element {a} out of range")
    return Perm(loop.table[a])


def is_loop_morphism(f: Sequence[int], src: Loop, dst: Loop) -> bool:
    """True iff f respects the operation on every pair."""
    f = tuple(f)
    if len(f) != src.order or any(not 0 <= v < dst.order for v in f):
        raise ValueError("f is not a total map into the target loop")
    for a in range(src.order):
        for b in range(src.order):
            if f[src.table[a][b]] != dst.table[f[a]][f[b]]:
                return False
    # identity-to-identity is forced for loops, keep it as a sanity assertion
    assert f[src.identity] == dst.identity
    return True


def enumerate_loop_morphisms(src: Loop, dst: Loop) -> tuple[tuple[int, ...], ...]:
    """All operation-preserving maps src -> dst, lexicographic by image tuple.

    Backtracking over images in element order; partial products are checked
    as soon as all three participants are assigned. The identity image is
    pinned, which only prunes maps that could never be morphisms.
    """
    n, m = src.order, dst.order
    img = [-1] * n
    out: list[tuple[int, ...]] = []

    def prefix_ok(k: int) -> bool:
        for a in range(k + 1):
            for b in range(k + 1):
                c = src.table[a][b]
                if c <= k and dst.table[img[a]][img[b]] != img[c]:
                    return False
        return True

    def rec(k: int) -> None:
        if k == n:
            out.append(tuple(img))
            return
        choices = (dst.identity,) if k == src.identity else range(m)
        for v in choices:
            img[k] = v
            if prefix_ok(k):
                rec(k + 1)
        img[k] = -1

    rec(0)
    return tuple(out)


def loops_isomorphic(a: Loop, b: Loop) -> tuple[int, ...] | None:
    """First bijective morphism a -> b in lexicographic order, or None."""
    if a.order != b.order:
        return None
    n = a.order
    img = [-1] * n
    used = [False] * n

    def prefix_ok(k: int) -> bool:
        for x in range(k + 1):
            for y in range(k + 1):
                z = a.table[x][y]
                if z <= k and b.table[img[x]][img[y]] != img[z]:
                    return False
        return True

    def rec(k: int) -> tuple[int, ...] | None:
        if k == n:
            return tuple(img)
        choices = (b.identity,) if k == a.identity else range(n)
        for v in choices:
            if used[v]:
                continue
            img[k] = v
            used[v] = True
            if prefix_ok(k):
                found = rec(k + 1)
                if found is not None:
                    return found
            used[v] = False
        img[k] = -1
        return None

    return rec(0)


def relabel(loop: Loop, pi: Sequence[int]) -> Loop:
    """Transport the table along the bijection pi; the identity moves with it."""
    n = loop.order
    pi = tuple(pi)
    if sorted(pi) != list(range(n)):
        raise StructureError("relabeling is not a bijection of the carrier")
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            table[pi[x]][pi[y]] = pi[loop.table[x][y]]
    return check_loop(table, pi[loop.identity])


def _relabeled_table(table: Sequence[Sequence[int]], pi: Sequence[int], pi_inv: Sequence[int], n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(pi[table[pi_inv[r]][pi_inv[c]]] for c in range(n))
        for r in range(n)
    )


def canonical_table(loop: Loop) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least table among all relabelings fixing element 0.

    Only meaningful for loops whose identity is 0 (the enumerated families);
    brute force over (n-1)! relabelings is fine at desk scale.
    """
    n = loop.order
    best = loop.table
    for rest in itertools.permutations(range(1, n)):
        pi = (0, *rest)
        pi_inv = [0] * n
        for i, v in enumerate(pi):
            pi_inv[v] = i
        cand = _relabeled_table(loop.table, pi, pi_inv, n)
        if cand < best:
            best = cand
    return best


def _normalized_tables(n: int) -> Iterable[tuple[tuple[int, ...], ...]]:
    # all loop tables with identity 0: row 0 and column 0 fixed, backtrack the rest
    if n == 1:
        yield ((0,),)
        return
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    full = (1 << n) - 1
    row_used = [full] + [1 << r for r in range(1, n)]
    col_used = [full] + [1 << c for c in range(1, n)]
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        r, c = cells[k]
        avail = ~(row_used[r] | col_used[c]) & full
        while avail:
            bit = avail & -avail
            avail ^= bit
            v = bit.bit_length() - 1
            table[r][c] = v
            row_used[r] |= bit
            col_used[c] |= bit
            yield from rec(k + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit

    yield from rec(0)


def enumerate_loops(n: int, max_order: int = ENUMERATION_CAP) -> tuple[Loop, ...]:
    """All loops of order n with identity 0, one canonical representative per
    isomorphism class, sorted by table.

    Every normalized table is reduced to the lexicographic minimum over
    relabelings fixing 0; distinct minima are distinct classes.
    """
    if n < 1:
        raise StructureError("loop order must be at least 1")
    if n > max_order:
        raise ResourceLimitExceeded(f"loop enumeration capped at order {max_order}")
    reps = {canonical_table(Loop(n, t, 0)) for t in _normalized_tables(n)}
    return tuple(check_loop(t, 0) for t in sorted(reps))
