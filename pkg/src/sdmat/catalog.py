"""Named example products, file formats, and builders.

Instance grammar (colon-separated parameters):

    trivial              the one-element product
    cyclic:n             Z_n acted on by the trivial group
    klein                alias for direct:2:2
    direct:n:m           Z_n x Z_m with the trivial action (a direct product)
    dihedral:n           Z_n acted on by Z_2 through inversion
    metacyclic:n:m:u     Z_n acted on by Z_m, the generator multiplying by u
                         (requires gcd(u, n) = 1 and u^m = 1 mod n)

Files are JSON.  A group is {"name", "order", "table", "element_names"?}
with a row-major table.  An action is {"H", "K", "images"} where H and K are
either inline group objects or path strings resolved relative to the action
file.  A matrix is the four image arrays plus a context descriptor with the
factor orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import InvalidInstance
from .groups import FiniteGroup, make_group
from .maps import FMap
from .matrices import EndoMatrix
from .semidirect import GroupAction, SdProduct, make_action, semidirect, trivial_action

__all__ = [
    "CatalogEntry",
    "DEFAULT_INSTANCES",
    "cyclic_group",
    "trivial_group",
    "build_instance",
    "catalog_entries",
    "group_to_dict",
    "group_from_dict",
    "load_group",
    "save_group",
    "load_action",
    "matrix_to_dict",
    "matrix_from_dict",
    "load_matrix",
    "save_matrix",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    builder: Callable[[], SdProduct]


def cyclic_group(n: int, name: str = "") -> FiniteGroup:
    if n < 1:
        raise InvalidInstance(f"cyclic group order must be positive, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return make_group(table, names=[str(a) for a in range(n)], name=name or f"Z{n}")


def trivial_group() -> FiniteGroup:
    return make_group([[0]], names=["e"], name="1")


def _power_action(H: FiniteGroup, K: FiniteGroup, unit: int) -> GroupAction:
    """Action of Z_m on Z_n where the generator multiplies by ``unit``."""
    n = H.order
    images = []
    factor = 1
    for _ in range(K.order):
        images.append([(factor * h) % n for h in range(n)])
        factor = (factor * unit) % n
    return make_action(H, K, images)


def _build_trivial() -> SdProduct:
    one = trivial_group()
    return semidirect(trivial_action(one, one), name="trivial")


def _build_cyclic(n: int) -> SdProduct:
    return semidirect(trivial_action(cyclic_group(n), trivial_group()), name=f"cyclic:{n}")


def _build_direct(n: int, m: int) -> SdProduct:
    name = f"direct:{n}:{m}"
    return semidirect(trivial_action(cyclic_group(n), cyclic_group(m)), name=name)


def _build_metacyclic(n: int, m: int, u: int, name: str = "") -> SdProduct:
    import math

    if math.gcd(u % n if n > 1 else 1, n) != 1:
        raise InvalidInstance(f"unit {u} is not invertible mod {n}")
    if pow(u, m, n) != 1 % n:
        raise InvalidInstance(f"unit {u} does not have order dividing {m} mod {n}")
    action = _power_action(cyclic_group(n), cyclic_group(m), u % n)
    return semidirect(action, name=name or f"metacyclic:{n}:{m}:{u}")


def _build_dihedral(n: int) -> SdProduct:
    return _build_metacyclic(n, 2, (n - 1) % n if n > 1 else 0, name=f"dihedral:{n}")


DEFAULT_INSTANCES: tuple[str, ...] = (
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "klein",
    "direct:3:2",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "metacyclic:3:4:2",
    "metacyclic:7:3:2",
)


def build_instance(name: str) -> SdProduct:
    """Build a product from its instance name.  Raises InvalidInstance."""
    head, _, rest = name.partition(":")
    params = rest.split(":") if rest else []

    def ints(count: int) -> list[int]:
        if len(params) != count:
            raise InvalidInstance(f"{head} takes {count} parameter(s), got {len(params)}")
        try:
            values = [int(p) for p in params]
        except ValueError:
            raise InvalidInstance(f"non-integer parameter in {name!r}") from None
        if any(v < 1 for v in values):
            raise InvalidInstance(f"parameters must be positive in {name!r}")
        return values

    if head == "trivial":
        ints(0)
        return _build_trivial()
    if head == "cyclic":
        return _build_cyclic(*ints(1))
    if head == "klein":
        ints(0)
        product = _build_direct(2, 2)
        return SdProduct(product.H, product.K, product.action, product.group, name="klein")
    if head == "direct":
        return _build_direct(*ints(2))
    if head == "dihedral":
        return _build_dihedral(*ints(1))
    if head == "metacyclic":
        n, m, u = ints(3)
        return _build_metacyclic(n, m, u)
    raise InvalidInstance(f"unknown instance {name!r}")


def catalog_entries() -> list[CatalogEntry]:
    """The default catalog with descriptions, in verification order."""
    notes = {
        "trivial": "one-element group",
        "cyclic:2": "Z2, trivially acted on",
        "cyclic:3": "Z3, trivially acted on",
        "cyclic:4": "Z4, trivially acted on",
        "cyclic:5": "Z5, trivially acted on",
        "klein": "Z2 x Z2, a direct-product control",
        "direct:3:2": "Z3 x Z2, an abelian control of order 6",
        "dihedral:3": "symmetries of the triangle",
        "dihedral:4": "symmetries of the square",
        "dihedral:5": "symmetries of the pentagon",
        "metacyclic:3:4:2": "Z3 twisted by Z4 through its order-2 quotient",
        "metacyclic:7:3:2": "Z7 twisted by Z3, nonabelian of order 21",
    }
    return [
        CatalogEntry(name=name, description=notes[name], builder=lambda n=name: build_instance(n))
        for name in DEFAULT_INSTANCES
    ]


# ---------------------------------------------------------------------------
# JSON file formats


def group_to_dict(group: FiniteGroup) -> dict:
    data = {
        "name": group.name,
        "order": group.order,
        "table": [list(row) for row in group.table],
    }
    if group.names is not None:
        data["element_names"] = list(group.names)
    return data


def group_from_dict(data: dict) -> FiniteGroup:
    if not isinstance(data, dict) or "table" in data and not isinstance(data["table"], list):
        raise ValueError("malformed group object")
    table = data.get("table")
    if table is None:
        raise ValueError("group object lacks a table")
    group = make_group(table, names=data.get("element_names"), name=data.get("name", ""))
    declared = data.get("order")
    if declared is not None and declared != group.order:
        raise ValueError(f"declared order {declared} does not match table size {group.order}")
    return group


def load_group(path: str | Path) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_dict(json.load(fh))


def save_group(group: FiniteGroup, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(group_to_dict(group), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_action(path: str | Path) -> GroupAction:
    """Load an action file; H and K may be inline objects or relative paths."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)

    def resolve(side: str) -> FiniteGroup:
        ref = data.get(side)
        if isinstance(ref, str):
            return load_group(path.parent / ref)
        if isinstance(ref, dict):
            return group_from_dict(ref)
        raise ValueError(f"action file lacks a usable {side!r} entry")

    H = resolve("H")
    K = resolve("K")
    images = data.get("images")
    if images is None:
        raise ValueError("action file lacks an images table")
    return make_action(H, K, images)


def matrix_to_dict(matrix: EndoMatrix) -> dict:
    P = matrix.context
    return {
        "alpha": list(matrix.alpha.image),
        "beta": list(matrix.beta.image),
        "gamma": list(matrix.gamma.image),
        "delta": list(matrix.delta.image),
        "context": {
            "h_order": P.H.order,
            "k_order": P.K.order,
            "instance": P.name,
        },
    }


def matrix_from_dict(data: dict, product: SdProduct) -> EndoMatrix:
    """Rebuild a matrix over a known product, validating the descriptor."""
    ctx = data.get("context", {})
    if ctx:
        if ctx.get("h_order") not in (None, product.H.order) or ctx.get("k_order") not in (
            None,
            product.K.order,
        ):
            raise ValueError(
                f"matrix context ({ctx.get('h_order')}, {ctx.get('k_order')}) does not match "
                f"product factors ({product.H.order}, {product.K.order})"
            )
    try:
        entries = [tuple(data[key]) for key in ("alpha", "beta", "gamma", "delta")]
    except KeyError as missing:
        raise ValueError(f"matrix object lacks entry {missing}") from None
    H, K = product.H, product.K
    return EndoMatrix(
        alpha=FMap(H, H, entries[0]),
        beta=FMap(K, H, entries[1]),
        gamma=FMap(H, K, entries[2]),
        delta=FMap(K, K, entries[3]),
        context=product,
    )


def load_matrix(path: str | Path, product: SdProduct) -> EndoMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_dict(json.load(fh), product)


def save_matrix(matrix: EndoMatrix, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_dict(matrix), fh, indent=2, sort_keys=True)
        fh.write("\n")
