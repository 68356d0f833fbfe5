"""Exception types shared across the package.

Every validation error carries the witnessing data as attributes so that
callers (and test suites) can inspect exactly what failed, not just that
something did.
"""

from __future__ import annotations


class SdmatError(Exception):
    """Base class for all package errors."""


# ---------------------------------------------------------------------------
# Cayley table validation


class GroupValidationError(SdmatError):
    """A multiplication table fails one of the group axioms."""


class NoIdentity(GroupValidationError):
    def __init__(self) -> None:
        super().__init__("no two-sided identity element exists")


class MissingInverse(GroupValidationError):
    def __init__(self, element: int) -> None:
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(GroupValidationError):
    def __init__(self, a: int, b: int, c: int) -> None:
        self.triple = (a, b, c)
        super().__init__(f"associativity fails at ({a}, {b}, {c}): (a*b)*c != a*(b*c)")


# ---------------------------------------------------------------------------
# Action validation


class NotAutomorphism(SdmatError):
    """A row of an action table is not a bijective endomorphism."""

    def __init__(self, k: int, reason: str = "") -> None:
        self.k = k
        msg = f"action of element {k} is not an automorphism"
        super().__init__(msg + (f": {reason}" if reason else ""))


class NotHomomorphic(SdmatError):
    """The action table does not respect the group law of the acting group."""

    def __init__(self, k1: int, k2: int) -> None:
        self.pair = (k1, k2)
        super().__init__(f"action rows violate f(k1*k2) = f(k1) o f(k2) at ({k1}, {k2})")


# ---------------------------------------------------------------------------
# Maps between groups


class DomainMismatch(SdmatError):
    """Operands of a map operation live on incompatible domains/codomains."""


class NotBijective(SdmatError):
    """A map that must be invertible as a set map is not."""


class NotHomomorphism(SdmatError):
    """A map that must satisfy the homomorphism law does not."""


class GroupMismatch(SdmatError):
    """Two endomorphisms of different groups cannot be combined."""


# ---------------------------------------------------------------------------
# Matrices of maps


class ShapeMismatch(SdmatError):
    """Matrix entries do not have the required domains and codomains."""


class ContextMismatch(SdmatError):
    """Matrices over different semidirect products cannot be multiplied."""


class ConditionsViolated(SdmatError):
    """A matrix fails the defining compatibility conditions."""

    def __init__(self, name: str, witness: tuple) -> None:
        self.name = name
        self.witness = witness
        super().__init__(f"condition {name} fails at {witness}")


# ---------------------------------------------------------------------------
# Determinants and inversion


class AlphaNotInvertible(SdmatError):
    """The (H,H) entry is not bijective, so the K-side determinant is undefined."""


class DeltaNotInvertible(SdmatError):
    """The (K,K) entry is not bijective, so the H-side determinant is undefined."""


class DetKNotInvertible(SdmatError):
    """The K-side determinant is not bijective."""


class DetHNotInvertible(SdmatError):
    """The H-side determinant is not bijective."""


class PreconditionFailed(SdmatError):
    """A stated precondition of the requested operation does not hold."""


class VerificationFailed(SdmatError):
    """A computed identity that the theory guarantees failed to hold.

    Raising this means either a genuine counterexample or an implementation
    bug; the witness is attached either way.
    """

    def __init__(self, what: str, witness: tuple | dict | None = None) -> None:
        self.what = what
        self.witness = witness
        super().__init__(f"verification failed: {what}" + (f" at {witness}" if witness else ""))


# ---------------------------------------------------------------------------
# Factorization


class NotAutomorphismMatrix(SdmatError):
    """The matrix does not describe a bijective endomorphism."""


class DiagonalNotInvertible(SdmatError):
    """Factorization needs both diagonal entries bijective and one is not."""


# ---------------------------------------------------------------------------
# Enumeration guards and catalog


class BoundExceeded(SdmatError):
    """An enumeration was requested beyond its configured size guard."""


class InvalidInstance(SdmatError):
    """A catalog instance name could not be parsed or built."""
