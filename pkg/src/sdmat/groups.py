"""Finite groups as validated Cayley tables, 0-based element indices.

A group of order n is a table ``table[a][b] = a*b`` over indices 0..n-1.
The identity is detected, never assumed to be 0.  Construction via
:func:`make_group` checks every axiom exhaustively and reports the first
witnessing elements on failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import MissingInverse, NoIdentity, NotAssociative
from .maps import FMap

__all__ = [
    "FiniteGroup",
    "Subset",
    "make_group",
    "center",
    "greedy_generators",
    "word_sequence",
    "enumerate_homs",
    "enumerate_autos",
]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable group data; compare by object identity."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    names: tuple[str, ...] | None = None
    name: str = ""

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def element_name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def __repr__(self) -> str:
        label = self.name or f"order {self.order}"
        return f"FiniteGroup({label})"


@dataclass(frozen=True)
class Subset:
    """A subset of a group's elements, kept sorted for determinism."""

    group: FiniteGroup
    members: tuple[int, ...]

    def __contains__(self, a: int) -> bool:
        return a in set(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def make_group(
    table: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    name: str = "",
) -> FiniteGroup:
    """Validate a multiplication table and build the group.

    Raises ValueError for malformed tables, then NoIdentity, MissingInverse
    or NotAssociative (in that checking order) for axiom violations.
    """
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    rows = tuple(tuple(row) for row in table)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"row {i} contains invalid entry {v!r}")
    if names is not None and len(names) != n:
        raise ValueError("names must match the table size")

    identity = None
    for e in range(n):
        if all(rows[e][a] == a and rows[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    inverses = []
    for a in range(n):
        b = next((b for b in range(n) if rows[a][b] == identity and rows[b][a] == identity), None)
        if b is None:
            raise MissingInverse(a)
        inverses.append(b)

    for a in range(n):
        for b in range(n):
            ab = rows[a][b]
            row_b = rows[b]
            row_a = rows[a]
            for c in range(n):
                if rows[ab][c] != row_a[row_b[c]]:
                    raise NotAssociative(a, b, c)

    return FiniteGroup(
        order=n,
        table=rows,
        identity=identity,
        inverses=tuple(inverses),
        names=tuple(names) if names is not None else None,
        name=name,
    )


def center(group: FiniteGroup) -> Subset:
    """Elements commuting with everything."""
    t = group.table
    members = tuple(
        a for a in range(group.order) if all(t[a][b] == t[b][a] for b in range(group.order))
    )
    return Subset(group, members)


def greedy_generators(group: FiniteGroup) -> tuple[int, ...]:
    """A generating set built greedily: keep adding the first element not yet generated."""
    gens: list[int] = []
    closed = {group.identity}
    while len(closed) < group.order:
        g = next(a for a in range(group.order) if a not in closed)
        gens.append(g)
        closed = _closure(group, gens)
    return tuple(gens)


def _closure(group: FiniteGroup, gens: Sequence[int]) -> set[int]:
    t = group.table
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def word_sequence(group: FiniteGroup, gens: Sequence[int]) -> list[tuple[int, int, int]]:
    """Breadth-first discovery order of the group from its generators.

    Each entry ``(y, x, i)`` says element y was first reached as x * gens[i],
    with x already discovered.  Iterating the list in order lets a search
    propagate candidate images from generator images deterministically.
    """
    t = group.table
    seen = {group.identity}
    order: list[tuple[int, int, int]] = []
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    order.append((y, x, i))
                    nxt.append(y)
        frontier = nxt
    if len(seen) != group.order:
        raise ValueError("generators do not generate the group")
    return order


def _is_hom_table(dom: FiniteGroup, cod: FiniteGroup, img: Sequence[int]) -> bool:
    dt, ct = dom.table, cod.table
    for a in range(dom.order):
        ia = img[a]
        row = dt[a]
        for b in range(dom.order):
            if img[row[b]] != ct[ia][img[b]]:
                return False
    return True


def enumerate_homs(dom: FiniteGroup, cod: FiniteGroup) -> list[FMap]:
    """All homomorphisms dom -> cod, by generator-image search.

    Candidate images for a generating set are extended along the word
    sequence and then verified on every pair, so no unverified map is ever
    returned.  Results are sorted by image table.
    """
    gens = greedy_generators(dom)
    seq = word_sequence(dom, gens)
    ct = cod.table
    out: list[FMap] = []
    for images in itertools.product(range(cod.order), repeat=len(gens)):
        img = [0] * dom.order
        img[dom.identity] = cod.identity
        for y, x, i in seq:
            img[y] = ct[img[x]][images[i]]
        if _is_hom_table(dom, cod, img):
            out.append(FMap(dom, cod, tuple(img)))
    out.sort(key=lambda m: m.image)
    return out


def enumerate_autos(group: FiniteGroup) -> list[FMap]:
    """All automorphisms, i.e. the bijective members of enumerate_homs."""
    return [phi for phi in enumerate_homs(group, group) if phi.is_bijective]
