"""Exact integer polynomial arithmetic and cyclotomic factorizations.

Polynomials are dense coefficient tuples over Python's arbitrary-precision
integers, lowest degree first, so ``IntPolynomial([-1, 0, 1])`` is x^2 - 1.
Everything here is exact: no floats, no modular shortcuts.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class NotCyclotomicProduct(Exception):
    """Raised when a monic integer polynomial has a non-cyclotomic factor."""


class IntPolynomial:
    """A polynomial with integer coefficients, lowest degree first.

    Trailing zero coefficients are trimmed on construction, so the leading
    coefficient of a nonzero polynomial is always nonzero.

    >>> IntPolynomial([-1, 0, 1]).degree()
    2
    >>> IntPolynomial([0, 0]).is_zero()
    True
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = tuple(int(c) for c in coefficients)
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coefficients", coeffs[:end])

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def leading_coefficient(self) -> int:
        if not self.coefficients:
            return 0
        return self.coefficients[-1]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        if self.is_zero():
            return "IntPolynomial('0')"
        parts = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            coeff = f"{abs(c)}" if (abs(c) != 1 or i == 0) else ""
            parts.append(sign + coeff + term)
        return f"IntPolynomial('{''.join(parts)}')"

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(
            a + b for a, b in itertools.zip_longest(self.coefficients, other.coefficients, fillvalue=0)
        )

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(
            a - b for a, b in itertools.zip_longest(self.coefficients, other.coefficients, fillvalue=0)
        )

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coefficients)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        # Schoolbook multiplication; degrees in this library stay tiny.
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        result = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                result[i + j] += a * b
        return IntPolynomial(result)

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, divisor: IntPolynomial):
        """Quotient and remainder by a monic divisor (stays in Z[x])."""
        if not divisor.is_monic():
            raise ValueError("division is only defined for monic divisors")
        quotient = [0] * max(len(self.coefficients) - len(divisor.coefficients) + 1, 0)
        rem = list(self.coefficients)
        d = divisor.degree()
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            quotient[k - d] = c
            for j, b in enumerate(divisor.coefficients):
                rem[k - d + j] -= c * b
        return IntPolynomial(quotient), IntPolynomial(rem)

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        quotient, rem = divmod(self, divisor)
        if not rem.is_zero():
            raise ValueError(f"{self!r} is not divisible by {divisor!r}")
        return quotient


ONE = IntPolynomial([1])


def x_power_minus_one(m: int) -> IntPolynomial:
    return IntPolynomial([-1] + [0] * (m - 1) + [1])


def euler_phi(m: int) -> int:
    """Number of invertible residue classes modulo m, by prime factorization.

    >>> euler_phi(42)
    12
    """
    if m < 1:
        raise ValueError("euler_phi requires m >= 1")
    result = 1
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            result *= p - 1
            while rest % p == 0:
                rest //= p
                result *= p
        p += 1
    if rest > 1:
        result *= rest - 1
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, exact over Z.

    Computed as (x^m - 1) / prod of the cyclotomic polynomials of the
    proper divisors of m; every division is exact in Z[x].

    >>> cyclotomic_poly(12)
    IntPolynomial('x^4 - x^2 + 1')
    """
    if m < 1:
        raise ValueError("cyclotomic_poly requires m >= 1")
    poly = x_power_minus_one(m)
    for d in range(1, m):
        if m % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


def bounded_orders(bound: int) -> list[int]:
    """All m with euler_phi(m) <= bound, sorted ascending.

    The set is finite since euler_phi(m) >= sqrt(m/2), so the search stops
    at m = 2*bound^2.
    """
    if bound < 1:
        raise ValueError("bounded_orders requires bound >= 1")
    return [m for m in range(1, 2 * bound * bound + 1) if euler_phi(m) <= bound]


class CycloFactorization:
    """A multiset of cyclotomic factors, as a map m -> multiplicity.

    ``CycloFactorization({1: 10, 42: 1})`` stands for Phi_1^10 * Phi_42.
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        cleaned = {}
        for m, mult in dict(factors).items():
            m, mult = int(m), int(mult)
            if m < 1:
                raise ValueError(f"cyclotomic index must be positive, got {m}")
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            cleaned[m] = mult
        object.__setattr__(self, "factors", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("CycloFactorization is immutable")

    def expand(self) -> IntPolynomial:
        """Multiply the factors back out to an integer polynomial."""
        result = ONE
        for m in sorted(self.factors):
            result = result * cyclotomic_poly(m) ** self.factors[m]
        return result

    def total_degree(self) -> int:
        return sum(mult * euler_phi(m) for m, mult in self.factors.items())

    def __eq__(self, other):
        return isinstance(other, CycloFactorization) and self.factors == other.factors

    def __hash__(self):
        return hash(tuple(sorted(self.factors.items())))

    def __repr__(self):
        inner = ", ".join(f"{m}: {mult}" for m, mult in sorted(self.factors.items()))
        return f"CycloFactorization({{{inner}}})"


def factor_into_cyclotomics(poly: IntPolynomial) -> CycloFactorization:
    """Factor a monic integer polynomial into cyclotomic polynomials.

    Trial division over all candidate indices m with euler_phi(m) <= deg P.
    Because distinct cyclotomic polynomials are coprime irreducibles, greedy
    division in any candidate order finds the unique factorization without
    backtracking.

    Raises NotCyclotomicProduct if a non-cyclotomic factor remains.
    """
    if poly.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not poly.is_monic():
        raise ValueError("factor_into_cyclotomics requires a monic polynomial")
    remaining = poly
    factors: dict[int, int] = {}
    for m in bounded_orders(max(poly.degree(), 1)):
        if euler_phi(m) > remaining.degree():
            continue
        phi_m = cyclotomic_poly(m)
        while True:
            quotient, rem = divmod(remaining, phi_m)
            if not rem.is_zero():
                break
            factors[m] = factors.get(m, 0) + 1
            remaining = quotient
            if remaining.degree() < phi_m.degree():
                break
    if remaining != ONE:
        raise NotCyclotomicProduct(
            f"non-cyclotomic factor of degree {remaining.degree()} remains: {remaining!r}"
        )
    return CycloFactorization(factors)
