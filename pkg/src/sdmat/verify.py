"""Exhaustive verification harness over one product instance.

Every structural claim of the matrix calculus is checked against brute
force on the instance and reported under a fixed name:

    endo_matrix_correspondence   matrices <-> endomorphisms, bijectively and
                                 multiplicatively, with trivial kernel
    monoid_laws                  closure, identity, associativity
    invertibility_via_det_k      bijective alpha: invertible <=> det_k bijective
    invertibility_via_det_h      bijective delta: invertible <=> det_h bijective
    inverse_formula_det_k        the K-side closed inverse and its side claims
    inverse_formula_det_h        the H-side closed inverse and its side claims
    determinant_duality          det_h/det_k bijective together; cross formulas
    combined_inverse             mixed formula agrees with both one-sided ones
    unit_diagonal_a_factor       A-part of the unit-diagonal reduction
    unit_diagonal_b_factor       B-part of the unit-diagonal reduction
    abcd_factorization           a*b*c*d factorization of eligible matrices
    abcd_subgroup_closure        A, B, D are subgroups (C closure reported)
    abcd_normalization           A and D conjugate B into B and C into C

Reports are deterministic byte for byte for a fixed instance: ordering is
fixed everywhere and wall-clock timing is kept out of the canonical
serialization (pass ``include_timing=True`` to add it).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .catalog import build_instance
from .determinant import (
    det_h,
    det_k,
    dual_det_inverses,
    invert_combined,
    invert_via_det_h,
    invert_via_det_k,
    is_invertible,
)
from .errors import SdmatError
from .factorization import classify, factor_abcd, unit_diagonal_a_factor, unit_diagonal_b_factor
from .maps import identity_map, map_add, map_compose, map_inverse
from .matrices import (
    EndoMatrix,
    endo_to_matrix,
    enumerate_matrices,
    identity_matrix,
    mat_mul,
    matrix_to_endo,
)
from .oracle import compose_endos, enumerate_endos, invert_endo
from .semidirect import SdProduct

__all__ = ["CheckResult", "VerifyReport", "CHECK_NAMES", "run_verification"]

_ASSOC_LIMIT = 60
_PAIR_LIMIT = 200

CHECK_NAMES = (
    "endo_matrix_correspondence",
    "monoid_laws",
    "invertibility_via_det_k",
    "invertibility_via_det_h",
    "inverse_formula_det_k",
    "inverse_formula_det_h",
    "determinant_duality",
    "combined_inverse",
    "unit_diagonal_a_factor",
    "unit_diagonal_b_factor",
    "abcd_factorization",
    "abcd_subgroup_closure",
    "abcd_normalization",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    witness: dict | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


@dataclass
class VerifyReport:
    instance: str
    group_order: int
    counts: dict[str, int]
    checks: tuple[CheckResult, ...]
    notes: dict
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "instance": self.instance,
            "group_order": self.group_order,
            "counts": self.counts,
            "checks": [c.to_dict() for c in self.checks],
            "notes": self.notes,
            "passed": self.passed,
        }
        if include_timing:
            out["elapsed_s"] = round(self.elapsed_s, 3)
        return out

    def to_text(self, include_timing: bool = False) -> str:
        lines = [f"instance {self.instance}  (group order {self.group_order})"]
        lines.append("counts: " + " ".join(f"{k}={v}" for k, v in self.counts.items()))
        for c in self.checks:
            dots = "." * max(2, 34 - len(c.name))
            line = f"check {c.name} {dots} {c.status}"
            if c.reason:
                line += f" ({c.reason})"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"  witness: {c.witness}")
        for key in sorted(self.notes):
            lines.append(f"note {key}: {self.notes[key]}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        if include_timing:
            lines.append(f"elapsed: {self.elapsed_s:.3f}s")
        return "\n".join(lines)


def _mat_witness(matrix: EndoMatrix, **extra) -> dict:
    out = {
        "alpha": list(matrix.alpha.image),
        "beta": list(matrix.beta.image),
        "gamma": list(matrix.gamma.image),
        "delta": list(matrix.delta.image),
    }
    out.update(extra)
    return out


class _Context:
    """Shared, precomputed data for all checks over one instance."""

    def __init__(self, product: SdProduct, bound: int) -> None:
        self.product = product
        self.notes: dict = {}
        self.census = enumerate_endos(product.group, bound=bound)
        mats = enumerate_matrices(product, bound=bound)
        mats.sort(key=lambda m: m.key())
        self.mats = mats
        self.n = len(mats)
        self.key_to_idx = {m.key(): i for i, m in enumerate(mats)}
        self.thetas = [matrix_to_endo(m) for m in mats]
        self.theta_to_idx = {t.image: i for i, t in enumerate(self.thetas)}
        self.identity_idx = self.key_to_idx.get(identity_matrix(product).key())
        self.tags = [classify(m) for m in mats]
        self.bijective = [t.map.is_bijective for t in self.thetas]
        self.auto_idx = [i for i in range(self.n) if self.bijective[i]]
        # Pairwise product table; None when the instance is too large for it.
        self.ptable: list[list[int]] | None = None
        self.closure_witness: dict | None = None
        if self.n <= _PAIR_LIMIT:
            table: list[list[int]] = []
            for i, mi in enumerate(mats):
                row = []
                for j, mj in enumerate(mats):
                    key = mat_mul(mi, mj).key()
                    idx = self.key_to_idx.get(key)
                    if idx is None:
                        if self.closure_witness is None:
                            self.closure_witness = {"left": i, "right": j, "product": [list(x) for x in key]}
                        idx = -1
                    row.append(idx)
                table.append(row)
            self.ptable = table
        self.inv_idx: dict[int, int] = {}
        if self.ptable is not None and self.identity_idx is not None:
            e = self.identity_idx
            for i in self.auto_idx:
                row = self.ptable[i]
                for j in range(self.n):
                    if row[j] == e and self.ptable[j][i] == e:
                        self.inv_idx[i] = j
                        break
        self._detk: dict[int, object] = {}
        self._deth: dict[int, object] = {}

    # Determinants are cached per index; None marks an undefined side.
    def detk(self, i: int):
        if i not in self._detk:
            m = self.mats[i]
            self._detk[i] = det_k(m) if m.alpha.is_bijective else None
        return self._detk[i]

    def deth(self, i: int):
        if i not in self._deth:
            m = self.mats[i]
            self._deth[i] = det_h(m) if m.delta.is_bijective else None
        return self._deth[i]


def _check_correspondence(ctx: _Context) -> CheckResult:
    name = "endo_matrix_correspondence"
    if len(ctx.census.endos) != ctx.n:
        return CheckResult(name, "fail", witness={"matrix_count": ctx.n, "endo_count": len(ctx.census.endos)})
    oracle_images = {e.image for e in ctx.census.endos}
    matrix_images = set(ctx.theta_to_idx)
    if oracle_images != matrix_images:
        extra = sorted(matrix_images - oracle_images) + sorted(oracle_images - matrix_images)
        return CheckResult(name, "fail", witness={"image_mismatch": [list(x) for x in extra[:1]]})
    P = ctx.product
    for i, m in enumerate(ctx.mats):
        if endo_to_matrix(ctx.thetas[i], P) != m:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="round trip through endomorphism"))
    for e in ctx.census.endos:
        if matrix_to_endo(endo_to_matrix(e, P)) != e:
            return CheckResult(name, "fail", witness={"endo": list(e.image), "detail": "round trip through matrix"})
    if ctx.identity_idx is None:
        return CheckResult(name, "fail", witness={"detail": "identity matrix missing from enumeration"})
    identity_image = tuple(range(P.group.order))
    kernel = [i for i, t in enumerate(ctx.thetas) if t.image == identity_image]
    if kernel != [ctx.identity_idx]:
        return CheckResult(name, "fail", witness={"kernel_indices": kernel})
    if ctx.ptable is None:
        return CheckResult(name, "skip", reason=f"matrix count {ctx.n} exceeds pairwise bound {_PAIR_LIMIT}")
    if ctx.closure_witness is not None:
        return CheckResult(name, "fail", witness=ctx.closure_witness)
    for i in range(ctx.n):
        ti = ctx.thetas[i]
        row = ctx.ptable[i]
        for j in range(ctx.n):
            composed = compose_endos(ti, ctx.thetas[j])
            if ctx.theta_to_idx.get(composed.image) != row[j]:
                return CheckResult(
                    name,
                    "fail",
                    witness={"left": i, "right": j, "detail": "matrix product differs from composition"},
                )
    return CheckResult(name, "pass")


def _check_monoid(ctx: _Context) -> CheckResult:
    name = "monoid_laws"
    if ctx.ptable is None:
        return CheckResult(name, "skip", reason=f"matrix count {ctx.n} exceeds pairwise bound {_PAIR_LIMIT}")
    if ctx.closure_witness is not None:
        return CheckResult(name, "fail", witness=ctx.closure_witness)
    e = ctx.identity_idx
    if e is None:
        return CheckResult(name, "fail", witness={"detail": "no identity matrix"})
    for j in range(ctx.n):
        if ctx.ptable[e][j] != j or ctx.ptable[j][e] != j:
            return CheckResult(name, "fail", witness={"index": j, "detail": "identity law"})
    if ctx.n > _ASSOC_LIMIT:
        return CheckResult(name, "skip", reason=f"matrix count {ctx.n} exceeds associativity bound {_ASSOC_LIMIT}")
    pt = ctx.ptable
    for i in range(ctx.n):
        row_i = pt[i]
        for j in range(ctx.n):
            ij = row_i[j]
            row_j = pt[j]
            for k in range(ctx.n):
                if pt[ij][k] != row_i[row_j[k]]:
                    return CheckResult(name, "fail", witness={"triple": [i, j, k]})
    return CheckResult(name, "pass")


def _check_invertibility_k(ctx: _Context) -> CheckResult:
    name = "invertibility_via_det_k"
    seen = False
    for i, m in enumerate(ctx.mats):
        dk = ctx.detk(i)
        if dk is None:
            continue
        seen = True
        if dk.invertible != ctx.bijective[i]:
            return CheckResult(
                name,
                "fail",
                witness=_mat_witness(m, det_bijective=dk.invertible, endo_bijective=ctx.bijective[i]),
            )
        decided = is_invertible(m)
        if decided.method != "detK" or decided.invertible != ctx.bijective[i]:
            return CheckResult(name, "fail", witness=_mat_witness(m, method=decided.method))
    if not seen:
        return CheckResult(name, "skip", reason="no matrix with bijective alpha")
    return CheckResult(name, "pass")


def _check_invertibility_h(ctx: _Context) -> CheckResult:
    name = "invertibility_via_det_h"
    seen = False
    for i, m in enumerate(ctx.mats):
        dh = ctx.deth(i)
        if dh is None:
            continue
        seen = True
        if dh.invertible != ctx.bijective[i]:
            return CheckResult(
                name,
                "fail",
                witness=_mat_witness(m, det_bijective=dh.invertible, endo_bijective=ctx.bijective[i]),
            )
    if not seen:
        return CheckResult(name, "skip", reason="no matrix with bijective delta")
    return CheckResult(name, "pass")


def _check_inverse_k(ctx: _Context) -> CheckResult:
    name = "inverse_formula_det_k"
    P = ctx.product
    ident = identity_matrix(P)
    id_k = identity_map(P.K)
    seen = False
    for i, m in enumerate(ctx.mats):
        dk = ctx.detk(i)
        if dk is None or not dk.invertible:
            continue
        seen = True
        inverse = invert_via_det_k(m)
        if mat_mul(m, inverse) != ident or mat_mul(inverse, m) != ident:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="two-sided inverse law"))
        if matrix_to_endo(inverse) != invert_endo(ctx.thetas[i]):
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="disagrees with brute-force inverse"))
        if det_h(inverse).value != map_inverse(m.alpha):
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="det_h of inverse is not alpha^-1"))
        if not dk.is_hom:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="det_k of invertible matrix not a homomorphism"))
        # Rearranged inverse identities: gamma alpha^-1 beta D^-1 + 1 = delta D^-1
        # and D^-1 composed with the determinant is the identity.
        dkinv = map_inverse(dk.value)
        ainv = map_inverse(m.alpha)
        lhs = map_add(map_compose(m.gamma, map_compose(ainv, map_compose(m.beta, dkinv))), id_k)
        rhs = map_compose(m.delta, dkinv)
        if lhs != rhs or map_compose(dkinv, dk.value) != id_k:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="determinant inverse identity"))
    if not seen:
        return CheckResult(name, "skip", reason="no matrix with bijective alpha and bijective det_k")
    return CheckResult(name, "pass")


def _check_inverse_h(ctx: _Context) -> CheckResult:
    name = "inverse_formula_det_h"
    P = ctx.product
    ident = identity_matrix(P)
    seen = False
    for i, m in enumerate(ctx.mats):
        dh = ctx.deth(i)
        if dh is None or not dh.invertible:
            continue
        seen = True
        inverse = invert_via_det_h(m)
        if mat_mul(m, inverse) != ident or mat_mul(inverse, m) != ident:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="two-sided inverse law"))
        if matrix_to_endo(inverse) != invert_endo(ctx.thetas[i]):
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="disagrees with brute-force inverse"))
        if det_k(inverse).value != map_inverse(m.delta):
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="det_k of inverse is not delta^-1"))
        if not dh.is_hom:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="det_h of invertible matrix not a homomorphism"))
    if not seen:
        return CheckResult(name, "skip", reason="no matrix with bijective delta and bijective det_h")
    return CheckResult(name, "pass")


def _diag_autos(ctx: _Context) -> list[int]:
    return [
        i
        for i in ctx.auto_idx
        if ctx.mats[i].alpha.is_bijective and ctx.mats[i].delta.is_bijective
    ]


def _check_duality(ctx: _Context) -> CheckResult:
    name = "determinant_duality"
    eligible = _diag_autos(ctx)
    if not eligible:
        return CheckResult(name, "skip", reason="no automorphism matrix with bijective diagonal")
    for i in eligible:
        m = ctx.mats[i]
        dh, dk = ctx.deth(i), ctx.detk(i)
        if dh.invertible != dk.invertible:
            return CheckResult(
                name,
                "fail",
                witness=_mat_witness(m, det_h_bijective=dh.invertible, det_k_bijective=dk.invertible),
            )
        if not dh.invertible:
            continue
        try:
            dh_inv, dk_inv = dual_det_inverses(m)
        except SdmatError as err:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail=str(err)))
        if dh_inv != map_inverse(dh.value) or dk_inv != map_inverse(dk.value):
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="cross formula mismatch"))
    return CheckResult(name, "pass")


def _check_combined(ctx: _Context) -> CheckResult:
    name = "combined_inverse"
    eligible = [i for i in _diag_autos(ctx) if ctx.detk(i).invertible and ctx.deth(i).invertible]
    if not eligible:
        return CheckResult(name, "skip", reason="no automorphism matrix with bijective diagonal and determinants")
    h_side = k_side = True
    for i in eligible:
        m = ctx.mats[i]
        combined = invert_combined(m)
        via_k = invert_via_det_k(m)
        via_h = invert_via_det_h(m)
        if combined != via_k or combined != via_h:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="three-way inverse mismatch"))
        if det_h(combined).value != map_inverse(m.alpha):
            h_side = False
        if det_k(combined).value != map_inverse(m.delta):
            k_side = False
    ctx.notes["det_reading"] = {
        "det_h_of_inverse_is_alpha_inv": h_side,
        "det_k_of_inverse_is_delta_inv": k_side,
    }
    if not h_side:
        return CheckResult(name, "fail", witness={"detail": "det_h of inverse is not alpha^-1"})
    return CheckResult(name, "pass")


def _unit_diag_autos(ctx: _Context) -> list[int]:
    out = []
    for i in ctx.auto_idx:
        m = ctx.mats[i]
        if m.alpha == identity_map(ctx.product.H) and m.delta == identity_map(ctx.product.K):
            out.append(i)
    return out


def _check_unit_a(ctx: _Context) -> CheckResult:
    name = "unit_diagonal_a_factor"
    eligible = _unit_diag_autos(ctx)
    if not eligible:
        return CheckResult(name, "skip", reason="no unit-diagonal automorphism matrix")
    for i in eligible:
        m = ctx.mats[i]
        try:
            part = unit_diagonal_a_factor(m)
        except SdmatError as err:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail=str(err)))
        if not classify(part).in_a:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="A-part fails membership"))
    return CheckResult(name, "pass")


def _check_unit_b(ctx: _Context) -> CheckResult:
    name = "unit_diagonal_b_factor"
    eligible = _unit_diag_autos(ctx)
    if not eligible:
        return CheckResult(name, "skip", reason="no unit-diagonal automorphism matrix")
    central = True
    for i in eligible:
        m = ctx.mats[i]
        try:
            part = unit_diagonal_b_factor(m)
        except SdmatError as err:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail=str(err)))
        if not classify(part).in_b:
            central = False
    ctx.notes["b_factor_image_central"] = central
    return CheckResult(name, "pass")


def _check_factorization(ctx: _Context) -> CheckResult:
    name = "abcd_factorization"
    eligible = _diag_autos(ctx)
    eligible_set = set(eligible)
    skipped = [i for i in ctx.auto_idx if i not in eligible_set]
    ctx.notes["aut_nonbij_alpha_delta"] = len(skipped)
    if skipped:
        ctx.notes["aut_nonbij_example"] = _mat_witness(ctx.mats[skipped[0]])
    if not eligible:
        return CheckResult(name, "skip", reason="no automorphism matrix with bijective diagonal")
    for i in eligible:
        m = ctx.mats[i]
        try:
            factors = factor_abcd(m)
        except SdmatError as err:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail=str(err)))
        tags = (
            classify(factors.a).in_a,
            classify(factors.b).in_b,
            classify(factors.c).in_c,
            classify(factors.d).in_d,
        )
        if not all(tags):
            return CheckResult(name, "fail", witness=_mat_witness(m, memberships=list(tags)))
        if factors.product() != m:
            return CheckResult(name, "fail", witness=_mat_witness(m, detail="reassembly mismatch"))
    return CheckResult(name, "pass")


def _family_indices(ctx: _Context) -> dict[str, list[int]]:
    families: dict[str, list[int]] = {"A": [], "B": [], "C": [], "D": []}
    for i in ctx.auto_idx:
        tag = ctx.tags[i]
        for letter, flag in (("A", tag.in_a), ("B", tag.in_b), ("C", tag.in_c), ("D", tag.in_d)):
            if flag:
                families[letter].append(i)
    return families


def _check_subgroups(ctx: _Context) -> CheckResult:
    name = "abcd_subgroup_closure"
    if ctx.ptable is None:
        return CheckResult(name, "skip", reason=f"matrix count {ctx.n} exceeds pairwise bound {_PAIR_LIMIT}")
    families = _family_indices(ctx)
    pt = ctx.ptable
    for letter in ("A", "B", "D"):
        members = set(families[letter])
        if ctx.identity_idx not in members:
            return CheckResult(name, "fail", witness={"family": letter, "detail": "identity missing"})
        for i in sorted(members):
            if ctx.inv_idx.get(i) not in members:
                return CheckResult(name, "fail", witness={"family": letter, "index": i, "detail": "inverse escapes"})
            for j in sorted(members):
                if pt[i][j] not in members:
                    return CheckResult(name, "fail", witness={"family": letter, "pair": [i, j]})
    c_members = set(families["C"])
    c_witness = None
    for i in sorted(c_members):
        for j in sorted(c_members):
            if pt[i][j] not in c_members:
                c_witness = {"pair": [i, j]}
                break
        if c_witness:
            break
    ctx.notes["c_family_closed"] = c_witness is None
    if c_witness is not None:
        ctx.notes["c_family_witness"] = c_witness
    abcd = set()
    for a in families["A"]:
        for b in families["B"]:
            ab = pt[a][b]
            for c in families["C"]:
                abc = pt[ab][c]
                for d in families["D"]:
                    abcd.add(pt[abc][d])
    ctx.notes["abcd_product_set"] = {
        "size": len(abcd),
        "aut_size": len(ctx.auto_idx),
        "equals_aut": abcd == set(ctx.auto_idx),
    }
    return CheckResult(name, "pass")


def _check_normalization(ctx: _Context) -> CheckResult:
    name = "abcd_normalization"
    if ctx.ptable is None:
        return CheckResult(name, "skip", reason=f"matrix count {ctx.n} exceeds pairwise bound {_PAIR_LIMIT}")
    families = _family_indices(ctx)
    pt = ctx.ptable
    conjugators = sorted(set(families["A"]) | set(families["D"]))
    for x in conjugators:
        xi = ctx.inv_idx.get(x)
        if xi is None:
            return CheckResult(name, "fail", witness={"index": x, "detail": "conjugator has no inverse"})
        for letter in ("B", "C"):
            members = set(families[letter])
            for y in sorted(members):
                if pt[pt[x][y]][xi] not in members:
                    return CheckResult(name, "fail", witness={"family": letter, "conjugator": x, "member": y})
    return CheckResult(name, "pass")


_CHECK_FUNCS = {
    "endo_matrix_correspondence": _check_correspondence,
    "monoid_laws": _check_monoid,
    "invertibility_via_det_k": _check_invertibility_k,
    "invertibility_via_det_h": _check_invertibility_h,
    "inverse_formula_det_k": _check_inverse_k,
    "inverse_formula_det_h": _check_inverse_h,
    "determinant_duality": _check_duality,
    "combined_inverse": _check_combined,
    "unit_diagonal_a_factor": _check_unit_a,
    "unit_diagonal_b_factor": _check_unit_b,
    "abcd_factorization": _check_factorization,
    "abcd_subgroup_closure": _check_subgroups,
    "abcd_normalization": _check_normalization,
}


def _det_nonhom_note(ctx: _Context) -> None:
    for i, m in enumerate(ctx.mats):
        for side, det in (("K", ctx.detk(i)), ("H", ctx.deth(i))):
            if det is not None and not det.is_hom:
                ctx.notes["det_nonhom_witness"] = _mat_witness(m, side=side, det=list(det.value.image))
                return
    ctx.notes["det_nonhom_witness"] = None


def run_verification(
    instance: str | SdProduct,
    bound: int = 64,
    checks: str | list[str] = "all",
) -> VerifyReport:
    """Run the named checks (default all) over one instance."""
    started = time.perf_counter()
    product = build_instance(instance) if isinstance(instance, str) else instance
    if checks == "all":
        selected = list(CHECK_NAMES)
    else:
        unknown = [c for c in checks if c not in _CHECK_FUNCS]
        if unknown:
            raise ValueError(f"unknown checks: {unknown}")
        selected = [c for c in CHECK_NAMES if c in set(checks)]
    ctx = _Context(product, bound)
    results = tuple(_CHECK_FUNCS[name](ctx) for name in selected)
    _det_nonhom_note(ctx)
    families = _family_indices(ctx)
    counts = {
        "end": ctx.n,
        "aut": len(ctx.auto_idx),
        "A": len(families["A"]),
        "B": len(families["B"]),
        "C": len(families["C"]),
        "D": len(families["D"]),
    }
    return VerifyReport(
        instance=product.name or f"order-{product.group.order}",
        group_order=product.group.order,
        counts=counts,
        checks=results,
        notes=dict(sorted(ctx.notes.items())),
        elapsed_s=time.perf_counter() - started,
    )
