"""Endomorphisms of a semidirect product as 2x2 matrices of maps.

An endomorphism theta of G = H x| K is determined by four maps read off the
embedded copies of H and K:

    theta(h, 1) = (alpha(h), gamma(h))      theta(1, k) = (beta(k), delta(k))

so theta corresponds to the matrix (alpha beta; gamma delta) with
alpha: H -> H, beta: K -> H both arbitrary set maps, gamma: H -> K a
homomorphism and delta: K -> K an endomorphism.  Such a quadruple describes
an endomorphism exactly when four compatibility conditions hold:

    alpha_twisted_by_gamma   alpha(h h') = alpha(h) * f_{gamma(h)}(alpha(h'))
    beta_crossed_by_delta    beta(k k')  = beta(k)  * f_{delta(k)}(beta(k'))
    gamma_delta_intertwine   gamma(f_k(h)) delta(k) = delta(k) gamma(h)
    alpha_beta_compatible    alpha(f_k(h)) * f_{gamma(f_k(h))}(beta(k))
                                         = beta(k) * f_{delta(k)}(alpha(h))

Composition of endomorphisms then becomes a matrix product whose entries mix
map addition, composition and twisting, and the set of valid matrices is a
monoid under it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BoundExceeded,
    ConditionsViolated,
    ContextMismatch,
    GroupMismatch,
    ShapeMismatch,
)
from .groups import enumerate_homs, greedy_generators, word_sequence
from .maps import (
    Endo,
    FMap,
    identity_map,
    map_act,
    map_add,
    map_compose,
    twisted_hom_witness,
    zero_map,
)
from .semidirect import GroupAction, SdProduct

__all__ = [
    "EndoMatrix",
    "ConditionCheck",
    "ConditionReport",
    "CONDITION_NAMES",
    "identity_matrix",
    "check_conditions",
    "mat_mul",
    "matrix_to_endo",
    "endo_to_matrix",
    "enumerate_matrices",
    "is_automorphism_matrix",
]

CONDITION_NAMES = (
    "alpha_twisted_by_gamma",
    "beta_crossed_by_delta",
    "gamma_delta_intertwine",
    "alpha_beta_compatible",
)


@dataclass(frozen=True, eq=False)
class EndoMatrix:
    """A 2x2 matrix of maps over a fixed semidirect product.

    Shapes are validated at construction; the compatibility conditions are
    not, so candidate matrices can be built and then reported on by
    :func:`check_conditions`.
    """

    alpha: FMap
    beta: FMap
    gamma: FMap
    delta: FMap
    context: SdProduct

    def __post_init__(self) -> None:
        H, K = self.context.H, self.context.K
        shapes = (
            ("alpha", self.alpha, H, H),
            ("beta", self.beta, K, H),
            ("gamma", self.gamma, H, K),
            ("delta", self.delta, K, K),
        )
        for label, entry, dom, cod in shapes:
            if entry.dom is not dom or entry.cod is not cod:
                raise ShapeMismatch(f"entry {label} must be a map {dom!r} -> {cod!r}")

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Serialized form used for ordering, hashing and equality."""
        return (self.alpha.image, self.beta.image, self.gamma.image, self.delta.image)

    def entries(self) -> tuple[FMap, FMap, FMap, FMap]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return self.context is other.context and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((id(self.context), self.key()))

    @cached_property
    def _endo(self) -> Endo:
        report = check_conditions(self)
        first = report.first_failure()
        if first is not None:
            raise ConditionsViolated(first.name, first.witness)
        P = self.context
        H, K = P.H, P.K
        ht, kt = H.table, K.table
        rows = P.action.images
        a, b, g, d = self.alpha.image, self.beta.image, self.gamma.image, self.delta.image
        nK = K.order
        image = [0] * P.group.order
        for h in range(H.order):
            ah, gh = a[h], g[h]
            act_gh = rows[gh]
            hrow = ht[ah]
            grow = kt[gh]
            base = h * nK
            for k in range(nK):
                image[base + k] = hrow[act_gh[b[k]]] * nK + grow[d[k]]
        return Endo(FMap(P.group, P.group, tuple(image)))

    def __repr__(self) -> str:
        return f"EndoMatrix(alpha={list(self.alpha.image)}, beta={list(self.beta.image)}, gamma={list(self.gamma.image)}, delta={list(self.delta.image)})"


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    witness: tuple | None

    @property
    def passed(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition pass/fail with the first violating tuple."""

    checks: tuple[ConditionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> ConditionCheck | None:
        return next((c for c in self.checks if not c.passed), None)


def identity_matrix(product: SdProduct) -> EndoMatrix:
    """The matrix of the identity endomorphism: identity diagonal, zero off-diagonal."""
    H, K = product.H, product.K
    return EndoMatrix(
        alpha=identity_map(H),
        beta=zero_map(K, H),
        gamma=zero_map(H, K),
        delta=identity_map(K),
        context=product,
    )


def _intertwine_witness(gamma: FMap, delta: FMap, action: GroupAction) -> tuple | None:
    """First (h, k, lhs, rhs) violating gamma(f_k(h)) delta(k) = delta(k) gamma(h)."""
    K = action.K
    kt = K.table
    rows = action.images
    g, d = gamma.image, delta.image
    for h in range(action.H.order):
        gh = g[h]
        for k in range(K.order):
            dk = d[k]
            lhs = kt[g[rows[k][h]]][dk]
            rhs = kt[dk][gh]
            if lhs != rhs:
                return (h, k, lhs, rhs)
    return None


def _compat_witness(
    alpha: FMap, beta: FMap, gamma: FMap, delta: FMap, action: GroupAction
) -> tuple | None:
    """First (h, k, lhs, rhs) violating the alpha/beta compatibility condition."""
    H = action.H
    ht = H.table
    rows = action.images
    a, b, g, d = alpha.image, beta.image, gamma.image, delta.image
    for h in range(H.order):
        ah = a[h]
        for k in range(action.K.order):
            hk = rows[k][h]
            lhs = ht[a[hk]][rows[g[hk]][b[k]]]
            rhs = ht[b[k]][rows[d[k]][ah]]
            if lhs != rhs:
                return (h, k, lhs, rhs)
    return None


def check_conditions(matrix: EndoMatrix) -> ConditionReport:
    """Evaluate the four compatibility conditions, reporting first witnesses."""
    act = matrix.context.action
    checks = (
        ConditionCheck(CONDITION_NAMES[0], twisted_hom_witness(matrix.alpha, matrix.gamma, act)),
        ConditionCheck(CONDITION_NAMES[1], twisted_hom_witness(matrix.beta, matrix.delta, act)),
        ConditionCheck(CONDITION_NAMES[2], _intertwine_witness(matrix.gamma, matrix.delta, act)),
        ConditionCheck(
            CONDITION_NAMES[3],
            _compat_witness(matrix.alpha, matrix.beta, matrix.gamma, matrix.delta, act),
        ),
    )
    return ConditionReport(checks=checks)


def mat_mul(left: EndoMatrix, right: EndoMatrix) -> EndoMatrix:
    """Matrix product corresponding to composition (left after right).

    With primes on the left factor the entries are

        a = alpha' alpha + (beta' gamma)^{gamma' alpha}
        b = alpha' beta  + (beta' delta)^{gamma' beta}
        c = gamma' alpha + delta' gamma
        d = gamma' beta  + delta' delta

    where + is the pointwise product, juxtaposition is composition and the
    exponent twists through the action.
    """
    if left.context is not right.context:
        raise ContextMismatch("matrices live over different products")
    act = left.context.action
    a2, b2, g2, d2 = left.entries()
    a1, b1, g1, d1 = right.entries()
    a = map_add(map_compose(a2, a1), map_act(map_compose(b2, g1), map_compose(g2, a1), act))
    b = map_add(map_compose(a2, b1), map_act(map_compose(b2, d1), map_compose(g2, b1), act))
    c = map_add(map_compose(g2, a1), map_compose(d2, g1))
    d = map_add(map_compose(g2, b1), map_compose(d2, d1))
    return EndoMatrix(alpha=a, beta=b, gamma=c, delta=d, context=left.context)


def matrix_to_endo(matrix: EndoMatrix) -> Endo:
    """The endomorphism (h, k) -> (alpha(h) * f_{gamma(h)}(beta(k)), gamma(h) delta(k)).

    Raises ConditionsViolated if the matrix fails its compatibility
    conditions; the result is a verified homomorphism of the product group.
    """
    return matrix._endo


def endo_to_matrix(theta: Endo, product: SdProduct) -> EndoMatrix:
    """Read the four entry maps off the embedded copies of H and K."""
    if theta.group is not product.group:
        raise GroupMismatch("endomorphism does not belong to this product group")
    H, K = product.H, product.K
    img = theta.image
    alpha = [0] * H.order
    gamma = [0] * H.order
    for h in range(H.order):
        alpha[h], gamma[h] = product.decode(img[product.embed_h(h)])
    beta = [0] * K.order
    delta = [0] * K.order
    for k in range(K.order):
        beta[k], delta[k] = product.decode(img[product.embed_k(k)])
    matrix = EndoMatrix(
        alpha=FMap(H, H, tuple(alpha)),
        beta=FMap(K, H, tuple(beta)),
        gamma=FMap(H, K, tuple(gamma)),
        delta=FMap(K, K, tuple(delta)),
        context=product,
    )
    report = check_conditions(matrix)
    first = report.first_failure()
    if first is not None:
        # Cannot happen for a genuine endomorphism; kept as a hard guard.
        raise ConditionsViolated(first.name, first.witness)
    return matrix


def _twisted_maps(dom, steer: FMap, action: GroupAction) -> list[FMap]:
    """All maps phi: dom -> H with phi(xy) = phi(x) * f_{steer(x)}(phi(y)).

    Generator-image search: candidate images of a greedy generating set are
    propagated along the breadth-first word sequence, then every candidate is
    verified on all pairs.
    """
    H = action.H
    ht = H.table
    rows = action.images
    st = steer.image
    gens = greedy_generators(dom)
    seq = word_sequence(dom, gens)
    out: list[FMap] = []
    for images in itertools.product(range(H.order), repeat=len(gens)):
        img = [0] * dom.order
        img[dom.identity] = H.identity
        for y, x, i in seq:
            img[y] = ht[img[x]][rows[st[x]][images[i]]]
        phi = FMap(dom, H, tuple(img))
        if twisted_hom_witness(phi, steer, action) is None:
            out.append(phi)
    out.sort(key=lambda m: m.image)
    return out


def enumerate_matrices(product: SdProduct, bound: int = 64, exhaustive: bool = False) -> list[EndoMatrix]:
    """All valid matrices over the product, i.e. its full endomorphism monoid.

    The search runs over gamma, then delta, then beta, then alpha: gamma and
    delta come from homomorphism enumeration, the gamma/delta intertwining
    prunes pairs early, beta and alpha come from twisted-map searches, and
    the remaining compatibility condition filters the final quadruples.

    With ``exhaustive=True`` the beta and alpha searches are replaced by a
    filter over the full map spaces (only sensible for |H|, |K| <= 4); this
    second, dumber route exists to cross-check the pruned search.
    """
    if product.group.order > bound:
        raise BoundExceeded(f"product order {product.group.order} exceeds bound {bound}")
    H, K, act = product.H, product.K, product.action
    if exhaustive and (H.order > 4 or K.order > 4):
        raise BoundExceeded("exhaustive matrix enumeration is limited to |H|, |K| <= 4")
    gammas = enumerate_homs(H, K)
    deltas = enumerate_homs(K, K)
    if exhaustive:
        all_alphas = [FMap(H, H, img) for img in itertools.product(range(H.order), repeat=H.order)]
        all_betas = [FMap(K, H, img) for img in itertools.product(range(H.order), repeat=K.order)]
    out: list[EndoMatrix] = []
    for gamma in gammas:
        for delta in deltas:
            if exhaustive:
                for beta in all_betas:
                    for alpha in all_alphas:
                        m = EndoMatrix(alpha=alpha, beta=beta, gamma=gamma, delta=delta, context=product)
                        if check_conditions(m).ok:
                            out.append(m)
                continue
            if _intertwine_witness(gamma, delta, act) is not None:
                continue
            betas = _twisted_maps(K, delta, act)
            alphas = _twisted_maps(H, gamma, act)
            for beta in betas:
                for alpha in alphas:
                    if _compat_witness(alpha, beta, gamma, delta, act) is None:
                        out.append(
                            EndoMatrix(alpha=alpha, beta=beta, gamma=gamma, delta=delta, context=product)
                        )
    return out


def is_automorphism_matrix(matrix: EndoMatrix) -> bool:
    """Whether the described endomorphism is bijective."""
    return matrix_to_endo(matrix).map.is_bijective
