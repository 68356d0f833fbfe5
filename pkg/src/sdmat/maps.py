"""Maps between finite groups and their pointwise algebra.

A map ``phi: U -> V`` is stored as a dense image table ``phi.image`` with
``phi.image[u]`` the index of the value in V.  The set of all such maps
carries a group structure under the pointwise product

    (phi + psi)(u) = phi(u) * psi(u)

with the constant-identity map as zero and pointwise inversion as negation.
Composition and two twisting operations (conjugation in a shared codomain,
and twisting through an action) complete the toolbox used by the matrix
calculus.  Addition is written additively even though values multiply,
because the codomain is rarely abelian and the notation keeps sums, negation
and composition visually distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from .errors import DomainMismatch, NotBijective, NotHomomorphism

if TYPE_CHECKING:
    from .groups import FiniteGroup
    from .semidirect import GroupAction

__all__ = [
    "FMap",
    "Endo",
    "identity_map",
    "zero_map",
    "constant_map",
    "map_add",
    "map_neg",
    "map_compose",
    "map_twist",
    "map_act",
    "map_inverse",
    "twisted_hom_witness",
    "is_crossed_hom",
]


@dataclass(frozen=True, eq=False)
class FMap:
    """A set map between two finite groups, given by its image table."""

    dom: "FiniteGroup"
    cod: "FiniteGroup"
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.dom.order:
            raise DomainMismatch(
                f"image table has {len(self.image)} entries for a domain of order {self.dom.order}"
            )
        if self.image and not (0 <= min(self.image) and max(self.image) < self.cod.order):
            raise DomainMismatch("image table contains indices outside the codomain")

    def __call__(self, u: int) -> int:
        return self.image[u]

    @cached_property
    def is_hom(self) -> bool:
        """Whether phi(ab) = phi(a)phi(b) for all pairs.  Computed once, lazily."""
        dt, ct, img = self.dom.table, self.cod.table, self.image
        for a in range(self.dom.order):
            ia = img[a]
            row = dt[a]
            for b in range(self.dom.order):
                if img[row[b]] != ct[ia][img[b]]:
                    return False
        return True

    @cached_property
    def is_bijective(self) -> bool:
        """Whether the image table is a bijection onto the codomain."""
        return self.dom.order == self.cod.order and len(set(self.image)) == self.dom.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FMap):
            return NotImplemented
        return self.dom is other.dom and self.cod is other.cod and self.image == other.image

    def __hash__(self) -> int:
        return hash((id(self.dom), id(self.cod), self.image))

    def __repr__(self) -> str:
        return f"FMap({list(self.image)})"


@dataclass(frozen=True, eq=False)
class Endo:
    """A verified endomorphism of a single group, wrapping its FMap."""

    map: FMap

    def __post_init__(self) -> None:
        if self.map.dom is not self.map.cod:
            raise NotHomomorphism("an endomorphism needs equal domain and codomain")
        if not self.map.is_hom:
            raise NotHomomorphism("image table violates the homomorphism law")

    @property
    def group(self) -> "FiniteGroup":
        return self.map.dom

    @property
    def image(self) -> tuple[int, ...]:
        return self.map.image

    def __call__(self, g: int) -> int:
        return self.map.image[g]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Endo):
            return NotImplemented
        return self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"Endo({list(self.map.image)})"


def identity_map(group: "FiniteGroup") -> FMap:
    """The identity endomap of a group."""
    return FMap(group, group, tuple(range(group.order)))


def zero_map(dom: "FiniteGroup", cod: "FiniteGroup") -> FMap:
    """The constant map at the codomain identity (the zero of map addition)."""
    return FMap(dom, cod, (cod.identity,) * dom.order)


def constant_map(dom: "FiniteGroup", cod: "FiniteGroup", value: int) -> FMap:
    return FMap(dom, cod, (value,) * dom.order)


def _require_parallel(phi: FMap, psi: FMap) -> None:
    if phi.dom is not psi.dom or phi.cod is not psi.cod:
        raise DomainMismatch("operands must share domain and codomain")


def map_add(phi: FMap, psi: FMap) -> FMap:
    """Pointwise product: u -> phi(u) * psi(u), in that order."""
    _require_parallel(phi, psi)
    ct = phi.cod.table
    return FMap(phi.dom, phi.cod, tuple(ct[a][b] for a, b in zip(phi.image, psi.image)))


def map_neg(phi: FMap) -> FMap:
    """Pointwise inverse: u -> phi(u)^-1."""
    inv = phi.cod.inverses
    return FMap(phi.dom, phi.cod, tuple(inv[v] for v in phi.image))


def map_compose(eta: FMap, phi: FMap) -> FMap:
    """Composition eta o phi: first apply phi, then eta."""
    if phi.cod is not eta.dom:
        raise DomainMismatch("codomain of the inner map must be the domain of the outer map")
    return FMap(phi.dom, eta.cod, tuple(eta.image[v] for v in phi.image))


def map_twist(phi: FMap, psi: FMap) -> FMap:
    """Conjugation twist in a shared codomain: u -> psi(u) phi(u) psi(u)^-1."""
    _require_parallel(phi, psi)
    ct, inv = phi.cod.table, phi.cod.inverses
    out = tuple(ct[ct[s][v]][inv[s]] for v, s in zip(phi.image, psi.image))
    return FMap(phi.dom, phi.cod, out)


def map_act(phi: FMap, steer: FMap, action: "GroupAction") -> FMap:
    """Twist a map into H through an action, steered by a map into K.

    Returns u -> f_{steer(u)}(phi(u)) where f is the action of K on H.  When
    both groups sit inside the semidirect product this is conjugation of
    phi(u) by steer(u), so it plays the same role as :func:`map_twist` with
    mixed codomains.
    """
    if phi.dom is not steer.dom:
        raise DomainMismatch("map and steering map must share a domain")
    if phi.cod is not action.H or steer.cod is not action.K:
        raise DomainMismatch("map must land in the acted-on group, steering map in the acting group")
    rows = action.images
    out = tuple(rows[s][v] for v, s in zip(phi.image, steer.image))
    return FMap(phi.dom, phi.cod, out)


def map_inverse(phi: FMap) -> FMap:
    """Inverse of a bijective map (as a set map; no homomorphy implied)."""
    if not phi.is_bijective:
        raise NotBijective(f"map {list(phi.image)} is not bijective")
    inv = [0] * phi.cod.order
    for u, v in enumerate(phi.image):
        inv[v] = u
    return FMap(phi.cod, phi.dom, tuple(inv))


def twisted_hom_witness(phi: FMap, steer: FMap, action: "GroupAction") -> tuple | None:
    """First violation of phi(uv) = phi(u) * f_{steer(u)}(phi(v)), or None.

    The witness is (u, v, lhs, rhs).  With ``steer`` a homomorphism this is
    the crossed-homomorphism law; the matrix conditions reuse it with other
    steering maps.
    """
    if phi.dom is not steer.dom:
        raise DomainMismatch("map and steering map must share a domain")
    if phi.cod is not action.H or steer.cod is not action.K:
        raise DomainMismatch("map must land in the acted-on group, steering map in the acting group")
    dt = phi.dom.table
    ht = action.H.table
    rows = action.images
    img, st = phi.image, steer.image
    for u in range(phi.dom.order):
        fu = img[u]
        row_u = dt[u]
        act_u = rows[st[u]]
        for v in range(phi.dom.order):
            lhs = img[row_u[v]]
            rhs = ht[fu][act_u[img[v]]]
            if lhs != rhs:
                return (u, v, lhs, rhs)
    return None


def is_crossed_hom(beta: FMap, delta: FMap, action: "GroupAction") -> bool:
    """Whether beta(k k') = beta(k) * f_{delta(k)}(beta(k')) for all pairs."""
    if beta.dom is not action.K or delta.dom is not action.K or delta.cod is not action.K:
        raise DomainMismatch("crossed homomorphisms go from the acting group, twisted by an endomap of it")
    return twisted_hom_witness(beta, delta, action) is None
