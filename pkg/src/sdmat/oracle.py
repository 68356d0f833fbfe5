"""Brute-force enumeration of endomorphisms, independent of the matrix route.

This module works on raw Cayley tables only.  It deliberately reimplements
its generating-set and image-propagation helpers instead of sharing them
with the rest of the package: the whole point of the oracle is that
agreement with the matrix-based enumeration is evidence, and shared search
code would make that agreement partly tautological.

The default search assigns images to a generating set and verifies every
candidate on all pairs.  ``exhaustive=True`` switches to enumeration of the
full map space (a plain product filter for tiny groups, a pruned
depth-first scan up to order 8), which double-checks the default search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundExceeded, GroupMismatch, NotBijective
from .groups import FiniteGroup
from .maps import Endo, FMap

__all__ = ["EndCensus", "enumerate_endos", "invert_endo", "compose_endos"]

_EXHAUSTIVE_LIMIT = 8
_PRODUCT_FILTER_LIMIT = 6


@dataclass(frozen=True)
class EndCensus:
    """All endomorphisms of one group, with the bijective ones split out."""

    group: FiniteGroup
    endos: tuple[Endo, ...]
    autos: tuple[Endo, ...]

    @property
    def n_endos(self) -> int:
        return len(self.endos)

    @property
    def n_autos(self) -> int:
        return len(self.autos)

    @property
    def counts(self) -> dict[str, int]:
        return {"end": len(self.endos), "aut": len(self.autos)}


def _oracle_generators(t: tuple[tuple[int, ...], ...], identity: int) -> list[int]:
    """Greedy generating set: repeatedly adopt the first non-generated element."""
    n = len(t)
    gens: list[int] = []
    generated = {identity}
    while len(generated) < n:
        gens.append(next(a for a in range(n) if a not in generated))
        generated = {identity}
        frontier = [identity]
        while frontier:
            step = []
            for x in frontier:
                for g in gens:
                    y = t[x][g]
                    if y not in generated:
                        generated.add(y)
                        step.append(y)
            frontier = step
    return gens


def _full_hom_check(t: tuple[tuple[int, ...], ...], img: list[int]) -> bool:
    n = len(t)
    for a in range(n):
        ia = img[a]
        row = t[a]
        for b in range(n):
            if img[row[b]] != t[ia][img[b]]:
                return False
    return True


def _endos_by_generators(group: FiniteGroup) -> list[tuple[int, ...]]:
    t = group.table
    n = group.order
    e = group.identity
    gens = _oracle_generators(t, e)
    # Reach every element once as (known element) * generator, breadth first.
    reach: list[tuple[int, int, int]] = []
    seen = {e}
    frontier = [e]
    while frontier:
        step = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    reach.append((y, x, g))
                    step.append(y)
        frontier = step
    found: list[tuple[int, ...]] = []
    for images in itertools.product(range(n), repeat=len(gens)):
        assigned = dict(zip(gens, images))
        img = [0] * n
        img[e] = e
        for y, x, g in reach:
            img[y] = t[img[x]][assigned[g]]
        if _full_hom_check(t, img):
            found.append(tuple(img))
    return found


def _endos_by_product_filter(group: FiniteGroup) -> list[tuple[int, ...]]:
    t = group.table
    n = group.order
    return [
        img
        for img in itertools.product(range(n), repeat=n)
        if _full_hom_check(t, list(img))
    ]


def _endos_by_pruned_scan(group: FiniteGroup) -> list[tuple[int, ...]]:
    """Depth-first scan of all image tables, pruning on partial hom violations."""
    t = group.table
    n = group.order
    found: list[tuple[int, ...]] = []
    img = [0] * n

    def consistent(upto: int) -> bool:
        # Check every pair whose product is also already assigned.
        for a in range(upto + 1):
            row = t[a]
            for b in range(upto + 1):
                ab = row[b]
                if ab <= upto and img[ab] != t[img[a]][img[b]]:
                    return False
        return True

    def descend(pos: int) -> None:
        if pos == n:
            found.append(tuple(img))
            return
        for v in range(n):
            img[pos] = v
            if consistent(pos):
                descend(pos + 1)

    descend(0)
    return found


def enumerate_endos(group: FiniteGroup, bound: int = 64, exhaustive: bool = False) -> EndCensus:
    """All endomorphisms of a group, sorted by image table.

    ``bound`` guards the group order.  With ``exhaustive=True`` the full map
    space is enumerated instead of generator images (order <= 8 only).
    """
    if group.order > bound:
        raise BoundExceeded(f"group order {group.order} exceeds bound {bound}")
    if exhaustive:
        if group.order > _EXHAUSTIVE_LIMIT:
            raise BoundExceeded(f"exhaustive search is limited to order {_EXHAUSTIVE_LIMIT}")
        if group.order <= _PRODUCT_FILTER_LIMIT:
            tables = _endos_by_product_filter(group)
        else:
            tables = _endos_by_pruned_scan(group)
    else:
        tables = _endos_by_generators(group)
    tables.sort()
    endos = tuple(Endo(FMap(group, group, img)) for img in tables)
    autos = tuple(e for e in endos if e.map.is_bijective)
    return EndCensus(group=group, endos=endos, autos=autos)


def invert_endo(theta: Endo) -> Endo:
    """Inverse of a bijective endomorphism, by inverting its image table."""
    if not theta.map.is_bijective:
        raise NotBijective("endomorphism is not bijective")
    inv = [0] * theta.group.order
    for g, v in enumerate(theta.image):
        inv[v] = g
    return Endo(FMap(theta.group, theta.group, tuple(inv)))


def compose_endos(outer: Endo, inner: Endo) -> Endo:
    """Composition outer after inner, as endomorphisms of the same group."""
    if outer.group is not inner.group:
        raise GroupMismatch("endomorphisms belong to different groups")
    img = tuple(outer.image[v] for v in inner.image)
    return Endo(FMap(outer.group, outer.group, img))
