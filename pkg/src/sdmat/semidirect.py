"""Group actions by automorphisms and the semidirect products they define.

An action of K on H is a table ``images[k][h] = f_k(h)`` where every row is
an automorphism of H and rows compose like K does.  The product group G has
pairs (h, k) encoded as the single index ``h * |K| + k`` and multiplication

    (h1, k1) (h2, k2) = (h1 * f_{k1}(h2), k1 k2).

Conjugating an H-element by a K-element inside G recovers the action, which
is what makes the matrix calculus built on top of this file work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotAutomorphism, NotHomomorphic
from .groups import FiniteGroup, Subset, make_group

__all__ = [
    "GroupAction",
    "SdProduct",
    "make_action",
    "trivial_action",
    "semidirect",
    "conj_action",
    "action_kernel",
]


@dataclass(frozen=True, eq=False)
class GroupAction:
    """A validated action of K on H by automorphisms."""

    H: FiniteGroup
    K: FiniteGroup
    images: tuple[tuple[int, ...], ...]

    def apply(self, k: int, h: int) -> int:
        return self.images[k][h]


def make_action(H: FiniteGroup, K: FiniteGroup, images: Sequence[Sequence[int]]) -> GroupAction:
    """Validate an action table row by row, then as a homomorphism into Aut(H).

    Raises NotAutomorphism(k) if row k is not a bijective endomorphism of H,
    and NotHomomorphic(k1, k2) if rows fail f(k1 k2) = f(k1) o f(k2).
    """
    if len(images) != K.order:
        raise ValueError(f"expected {K.order} rows, got {len(images)}")
    rows = tuple(tuple(row) for row in images)
    ht = H.table
    for k, row in enumerate(rows):
        if len(row) != H.order:
            raise ValueError(f"row {k} has {len(row)} entries, expected {H.order}")
        if any(not 0 <= v < H.order for v in row):
            raise ValueError(f"row {k} contains out-of-range entries")
        if len(set(row)) != H.order:
            raise NotAutomorphism(k, "row is not a bijection")
        for a in range(H.order):
            ra = row[a]
            for b in range(H.order):
                if row[ht[a][b]] != ht[ra][row[b]]:
                    raise NotAutomorphism(k, f"row is not a homomorphism at ({a}, {b})")
    for k1 in range(K.order):
        r1 = rows[k1]
        for k2 in range(K.order):
            r12 = rows[K.table[k1][k2]]
            r2 = rows[k2]
            if any(r12[h] != r1[r2[h]] for h in range(H.order)):
                raise NotHomomorphic(k1, k2)
    return GroupAction(H=H, K=K, images=rows)


def trivial_action(H: FiniteGroup, K: FiniteGroup) -> GroupAction:
    """Every element of K fixes H pointwise; the product is then direct."""
    row = tuple(range(H.order))
    return GroupAction(H=H, K=K, images=(row,) * K.order)


@dataclass(frozen=True, eq=False)
class SdProduct:
    """A semidirect product with its pair encoding and embedded copies."""

    H: FiniteGroup
    K: FiniteGroup
    action: GroupAction
    group: FiniteGroup
    name: str = ""

    def encode(self, h: int, k: int) -> int:
        return h * self.K.order + k

    def decode(self, g: int) -> tuple[int, int]:
        return divmod(g, self.K.order)

    def embed_h(self, h: int) -> int:
        return h * self.K.order + self.K.identity

    def embed_k(self, k: int) -> int:
        return self.H.identity * self.K.order + k

    def __repr__(self) -> str:
        return f"SdProduct({self.name or self.group.order})"


def semidirect(action: GroupAction, name: str = "") -> SdProduct:
    """Build the semidirect product group of a validated action.

    The product table is re-validated through make_group, which is cheap at
    the supported sizes and guards against bad hand-built actions.
    """
    H, K = action.H, action.K
    nK = K.order
    ht, kt, rows = H.table, K.table, action.images
    order = H.order * nK
    table = []
    for g1 in range(order):
        h1, k1 = divmod(g1, nK)
        act1 = rows[k1]
        row_out = []
        h1row = ht[h1]
        k1row = kt[k1]
        for g2 in range(order):
            h2, k2 = divmod(g2, nK)
            row_out.append(h1row[act1[h2]] * nK + k1row[k2])
        table.append(row_out)
    names = tuple(
        f"({H.element_name(h)},{K.element_name(k)})"
        for h in range(H.order)
        for k in range(nK)
    )
    group = make_group(table, names=names, name=name)
    return SdProduct(H=H, K=K, action=action, group=group, name=name)


def conj_action(product: SdProduct, h: int, k: int) -> int:
    """The conjugate of (embedded) h by (embedded) k, i.e. f_k(h)."""
    return product.action.images[k][h]


def action_kernel(action: GroupAction) -> Subset:
    """Elements of K acting trivially on H.

    Inside the product this is the centralizer of the H-copy in the K-copy;
    it is the kernel of the action homomorphism, hence a subgroup.
    """
    identity_row = tuple(range(action.H.order))
    members = tuple(k for k in range(action.K.order) if action.images[k] == identity_row)
    return Subset(action.K, members)
