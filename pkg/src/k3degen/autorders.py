"""Order and characteristic-polynomial constraints for non-symplectic
automorphisms of K3 surfaces.

The transcendental part of H^2 carries the automorphism action, and its
characteristic polynomial is forced to be cyclotomic of a very restricted
shape depending on the arithmetic setting: a power of Phi_m in
characteristic 0, a power of Phi_{m p^e} for liftable automorphisms or over
finite fields, and a product of such factors in the finite-height case.
Supersingular surfaces obey the divisibility m | p^{sigma0} + 1 instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycloFactorization, euler_phi

CHAR0 = "char0"
LIFTABLE = "liftable"
FINITE_HEIGHT = "finite_height"
FINITE_FIELD = "finite_field"

# K3 transcendental rank is at most 21: the Neron-Severi rank is >= 1.
# This cap also reproduces the prime-power enumeration with 23 excluded
# (phi(23) = 22); pass rank_cap=22 to audit the weaker degree bound.
DEFAULT_RANK_CAP = 21


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class CharSetting:
    """The arithmetic setting an automorphism lives in.

    kind is one of char0, liftable, finite_height, finite_field; the last
    three carry the residue characteristic p. The finite-height and
    finite-field cases require p > 2; liftable automorphisms exist in
    characteristic 2 as well.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == CHAR0:
            if self.p is not None:
                raise ValueError("char0 takes no characteristic")
            return
        if self.kind not in (LIFTABLE, FINITE_HEIGHT, FINITE_FIELD):
            raise ValueError(f"unknown setting kind {self.kind!r}")
        if self.p is None or not is_prime(self.p):
            raise ValueError(f"setting {self.kind!r} needs a prime characteristic, got {self.p!r}")
        if self.kind in (FINITE_HEIGHT, FINITE_FIELD) and self.p == 2:
            raise ValueError(f"setting {self.kind!r} requires p > 2")


def char0() -> CharSetting:
    return CharSetting(CHAR0)


def liftable(p: int) -> CharSetting:
    return CharSetting(LIFTABLE, p)


def finite_height(p: int) -> CharSetting:
    return CharSetting(FINITE_HEIGHT, p)


def finite_field(p: int) -> CharSetting:
    return CharSetting(FINITE_FIELD, p)


def _power_candidates(m: int, p: int, t_rank: int):
    """Indices m * p^e, e >= 0, whose totient still fits in t_rank."""
    out = []
    index = m
    while euler_phi(index) <= t_rank:
        out.append(index)
        index *= p
    return out


def admissible_transcendental_charpolys(
    m: int, setting: CharSetting, t_rank: int, rank_cap: int = DEFAULT_RANK_CAP
) -> list[CycloFactorization]:
    """All characteristic polynomials the transcendental action can have.

    m is the order of the automorphism's image on the 2-forms, t_rank the
    rank of the transcendental lattice. The result lists cyclotomic
    factorizations of total degree t_rank, empty when none exists.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not 1 <= t_rank <= rank_cap:
        raise ValueError(f"t_rank must lie in 1..{rank_cap}, got {t_rank}")

    if setting.kind == CHAR0:
        phi = euler_phi(m)
        if t_rank % phi == 0:
            return [CycloFactorization({m: t_rank // phi})]
        return []

    p = setting.p
    if m % p == 0:
        raise ValueError(f"p = {p} must not divide m = {m} in a characteristic-p setting")

    candidates = _power_candidates(m, p, t_rank)
    if setting.kind in (LIFTABLE, FINITE_FIELD):
        out = []
        for index in candidates:
            phi = euler_phi(index)
            if t_rank % phi == 0:
                out.append(CycloFactorization({index: t_rank // phi}))
        return out

    # finite height: any multiset of factors Phi_{m p^{e_i}} filling t_rank
    degrees = [(index, euler_phi(index)) for index in candidates]
    solutions = []

    def fill(pos, remaining, chosen):
        if remaining == 0:
            solutions.append(CycloFactorization(dict(chosen)))
            return
        if pos == len(degrees):
            return
        index, phi = degrees[pos]
        max_mult = remaining // phi
        for mult in range(max_mult, -1, -1):
            if mult:
                chosen[index] = mult
            elif index in chosen:
                del chosen[index]
            fill(pos + 1, remaining - mult * phi, chosen)
        chosen.pop(index, None)

    fill(0, t_rank, {})
    solutions.sort(key=lambda f: sorted(f.factors.items()))
    return solutions


def is_single_power(f: CycloFactorization) -> bool:
    """True when the factorization is a power of a single Phi_m."""
    return len(f.factors) == 1


def wild_prime_powers(max_t: int) -> list[int]:
    """All prime powers p^e (e >= 1) with euler_phi(p^e) <= max_t, sorted.

    These are the prime-power twists that can enter the cyclotomic index in
    positive characteristic, bounded by the degree available in H^2.
    """
    if max_t < 1:
        raise ValueError("max_t must be positive")
    out = []
    for p in range(2, max_t + 2):
        if not is_prime(p):
            continue
        q = p
        while euler_phi(q) <= max_t:
            out.append(q)
            q *= p
    return sorted(out)


def nygaard_sigma0(m: int, p: int) -> list[int]:
    """Artin invariants sigma0 in 1..10 with m dividing p^sigma0 + 1.

    An empty list means no supersingular K3 surface in characteristic p
    carries an automorphism acting on the 2-forms with order m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return [s for s in range(1, 11) if (pow(p, s, m) + 1) % m == 0]


def verify_het2_factorization(f: CycloFactorization) -> bool:
    """True iff the factorization has total degree 22 = dim H^2 of a K3."""
    return f.total_degree() == 22


def order_decomposition(n: int, p: int) -> tuple[int, int]:
    """Split n = p^e * n' with p not dividing n'; returns (e, n')."""
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n
