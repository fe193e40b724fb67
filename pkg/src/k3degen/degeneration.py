"""Which Kulikov degeneration types a K3 surface admits, given the order of
its non-symplectic automorphisms, its Hodge endomorphism field class, or its
formal Brauer height, plus the dimension bookkeeping for the moduli spaces
of prime-order non-symplectic pairs.

The engine encodes theorem statements, not proofs: every constraint is a
subset of {I, II, III}, and independent constraints intersect. Type I (good
reduction) is never excluded.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .autorders import is_prime
from .cyclotomic import bounded_orders, euler_phi
from .sncfiber import KulikovType

ALL_TYPES = frozenset(KulikovType)

# orders whose cyclotomic field is Q or imaginary quadratic
_ORDERS_Q_OR_IMAG_QUADRATIC = frozenset({1, 2, 3, 4, 6})
_ORDERS_Q = frozenset({1, 2})


class HodgeFieldClass(enum.Enum):
    """Coarse classes of the Hodge endomorphism field of the transcendental
    lattice; it is always a totally real field or a CM field."""

    RATIONAL = "rational"
    IMAGINARY_QUADRATIC = "imaginary_quadratic"
    CM_DEGREE_GT2 = "cm_degree_gt2"
    TOTALLY_REAL_DEGREE_GT1 = "totally_real_degree_gt1"


INFINITE_HEIGHT = math.inf


def allowed_types_from_m(m: int) -> frozenset[KulikovType]:
    """Degeneration types compatible with 2-form action of order m.

    Orders outside {1,2,3,4,6} force good reduction (Type I); orders 3, 4, 6
    still rule out Type III; orders 1 and 2 allow everything.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m in _ORDERS_Q:
        return ALL_TYPES
    if m in _ORDERS_Q_OR_IMAG_QUADRATIC:
        return frozenset({KulikovType.I, KulikovType.II})
    return frozenset({KulikovType.I})


@dataclass(frozen=True)
class FieldConstraint:
    allowed: frozenset
    conditional: bool


def allowed_types_from_field(e: HodgeFieldClass) -> FieldConstraint:
    """Degeneration types compatible with a Hodge endomorphism field class.

    For CM fields the statement is unconditional (the Hodge conjecture for
    the self-product is known there); for totally real fields of degree > 1
    it is conditional on that conjecture, and the flag records this.
    """
    if e is HodgeFieldClass.RATIONAL:
        return FieldConstraint(ALL_TYPES, conditional=False)
    if e is HodgeFieldClass.IMAGINARY_QUADRATIC:
        return FieldConstraint(frozenset({KulikovType.I, KulikovType.II}), conditional=False)
    if e is HodgeFieldClass.CM_DEGREE_GT2:
        return FieldConstraint(frozenset({KulikovType.I}), conditional=False)
    if e is HodgeFieldClass.TOTALLY_REAL_DEGREE_GT1:
        return FieldConstraint(frozenset({KulikovType.I}), conditional=True)
    raise ValueError(f"unknown field class {e!r}")


def allowed_m_from_type(t: KulikovType) -> frozenset[int]:
    """Orders m that can occur over a special fiber of the given type.

    Type III forces the action on the graded piece into Q^*, so m <= 2;
    Type II lands in an imaginary quadratic field, so m in {1,2,3,4,6};
    Type I only obeys the global bound phi(m) <= 20.
    """
    if t is KulikovType.III:
        return _ORDERS_Q
    if t is KulikovType.II:
        return _ORDERS_Q_OR_IMAG_QUADRATIC
    return frozenset(bounded_orders(20))


def allowed_types_from_height(h) -> frozenset[KulikovType]:
    """Degeneration types compatible with the formal Brauer group height.

    Type II fibers force height <= 2 and Type III height = 1; height is
    upper semicontinuous, so h >= 3 (or infinite) leaves only Type I.
    """
    if h == INFINITE_HEIGHT:
        return frozenset({KulikovType.I})
    if not isinstance(h, int) or not 1 <= h <= 10:
        raise ValueError(f"height must be an integer in 1..10 or infinite, got {h!r}")
    if h == 1:
        return ALL_TYPES
    if h == 2:
        return frozenset({KulikovType.I, KulikovType.II})
    return frozenset({KulikovType.I})


@dataclass(frozen=True)
class Decision:
    """Combined verdict: the intersection of the applicable constraints."""

    allowed: frozenset
    conditional: bool = False
    reasons: tuple = ()
    outside_hypotheses: bool = False

    def to_json_dict(self) -> dict:
        if self.outside_hypotheses:
            return {
                "status": "outside theorem hypotheses",
                "reasons": list(self.reasons),
            }
        return {
            "allowed": sorted(str(t) for t in self.allowed),
            "conditional": self.conditional,
            "reasons": list(self.reasons),
        }


def combine(m=None, e=None, h=None, residue_char=None) -> Decision:
    """Intersect the constraints from order, field class, and height.

    Residue characteristic 2 falls outside the hypotheses of the order
    constraint, so such inputs get an explicit out-of-scope status instead
    of a set. At least one constraint must be supplied.
    """
    if m is None and e is None and h is None:
        raise ValueError("at least one of m, e, h is required")
    if residue_char is not None and residue_char == 2:
        return Decision(
            frozenset(),
            reasons=("residue characteristic 2 is outside the hypotheses of the order constraint",),
            outside_hypotheses=True,
        )
    allowed = ALL_TYPES
    conditional = False
    reasons = []
    if m is not None:
        types = allowed_types_from_m(m)
        allowed &= types
        reasons.append(f"order m = {m} allows {{{', '.join(sorted(str(t) for t in types))}}}")
    if e is not None:
        constraint = allowed_types_from_field(e)
        allowed &= constraint.allowed
        conditional = conditional or constraint.conditional
        reasons.append(
            f"field class {e.value} allows "
            f"{{{', '.join(sorted(str(t) for t in constraint.allowed))}}}"
            + (" (conditional on the Hodge conjecture)" if constraint.conditional else "")
        )
    if h is not None:
        types = allowed_types_from_height(h)
        allowed &= types
        label = "infinite" if h == INFINITE_HEIGHT else h
        reasons.append(f"height {label} allows {{{', '.join(sorted(str(t) for t in types))}}}")
    return Decision(allowed, conditional, tuple(reasons))


def moduli_dim(p: int, rank_s: int) -> int:
    """Dimension of the moduli ball for order-p pairs with invariant lattice
    of the given rank: (22 - rank_s) / (p - 1) - 1."""
    if not is_prime(p) or not 3 <= p <= 19:
        raise ValueError(f"p must be a prime in 3..19, got {p}")
    if not 1 <= rank_s <= 21:
        raise ValueError(f"rank_s must lie in 1..21, got {rank_s}")
    if (22 - rank_s) % (p - 1) != 0:
        raise ValueError(f"p - 1 = {p - 1} must divide 22 - rank_s = {22 - rank_s}")
    dim = (22 - rank_s) // (p - 1) - 1
    if dim < 0:
        raise ValueError(f"no eigenspace left: computed dimension {dim}")
    return dim


def potential_good_reduction_implied(p: int) -> bool:
    """Whether order-p non-symplectic pairs are guaranteed everywhere
    potential good reduction; requires p >= 5."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p >= 5
