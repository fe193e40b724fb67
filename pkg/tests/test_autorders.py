import itertools

import pytest

from k3degen.autorders import (
    CharSetting,
    admissible_transcendental_charpolys,
    char0,
    finite_field,
    finite_height,
    is_single_power,
    liftable,
    nygaard_sigma0,
    order_decomposition,
    verify_het2_factorization,
    wild_prime_powers,
)
from k3degen.cyclotomic import CycloFactorization, euler_phi

import oracles


class TestCharSetting:
    def test_char0_takes_no_p(self):
        assert char0().p is None
        with pytest.raises(ValueError):
            CharSetting("char0", 5)

    def test_positive_characteristic_needs_prime(self):
        with pytest.raises(ValueError):
            liftable(6)
        with pytest.raises(ValueError):
            finite_field(1)

    def test_finite_height_and_field_exclude_two(self):
        with pytest.raises(ValueError):
            finite_height(2)
        with pytest.raises(ValueError):
            finite_field(2)
        # liftable automorphisms exist in characteristic 2
        assert liftable(2).p == 2

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            CharSetting("mystery", 3)


class TestAdmissibleCharpolys:
    def test_char0_power_of_single_factor(self):
        assert admissible_transcendental_charpolys(42, char0(), 12) == [
            CycloFactorization({42: 1})
        ]
        assert admissible_transcendental_charpolys(1, char0(), 1) == [
            CycloFactorization({1: 1})
        ]

    def test_char0_empty_when_phi_does_not_divide(self):
        assert admissible_transcendental_charpolys(42, char0(), 13) == []

    def test_char0_nonempty_iff_phi_divides(self):
        for m in (1, 2, 3, 5, 7, 12, 42):
            for t_rank in range(1, 22):
                result = admissible_transcendental_charpolys(m, char0(), t_rank)
                assert bool(result) == (t_rank % euler_phi(m) == 0)

    def test_finite_field_includes_twisted_power(self):
        result = admissible_transcendental_charpolys(1, finite_field(11), 20)
        assert CycloFactorization({11: 2}) in result
        assert CycloFactorization({1: 20}) in result

    def test_liftable_char2_table_row(self):
        result = admissible_transcendental_charpolys(21, liftable(2), 12)
        assert CycloFactorization({42: 1}) in result
        assert CycloFactorization({21: 1}) in result

    def test_rejects_p_dividing_m(self):
        with pytest.raises(ValueError):
            admissible_transcendental_charpolys(22, liftable(11), 10)

    def test_t_rank_range(self):
        with pytest.raises(ValueError):
            admissible_transcendental_charpolys(1, char0(), 0)
        with pytest.raises(ValueError):
            admissible_transcendental_charpolys(1, char0(), 22)
        # the cap is a parameter: widening it admits rank 22
        assert admissible_transcendental_charpolys(1, char0(), 22, rank_cap=22) == [
            CycloFactorization({1: 22})
        ]

    def test_every_emitted_factorization_has_exact_degree(self):
        settings = [char0(), liftable(3), finite_field(5), finite_height(3)]
        for setting in settings:
            for m in (1, 2, 4, 7):
                if setting.p is not None and m % setting.p == 0:
                    continue
                for t_rank in (1, 6, 12, 20):
                    for f in admissible_transcendental_charpolys(m, setting, t_rank):
                        poly = f.expand()
                        assert poly.degree() == t_rank
                        assert poly.is_monic()

    def test_finite_height_matches_brute_force(self):
        m, p, t_rank = 1, 3, 8
        got = set(admissible_transcendental_charpolys(m, finite_height(p), t_rank))
        indices = []
        q = m
        while euler_phi(q) <= t_rank:
            indices.append(q)
            q *= p
        expected = set()
        bounds = [t_rank // euler_phi(i) for i in indices]
        for mults in itertools.product(*(range(b + 1) for b in bounds)):
            total = sum(k * euler_phi(i) for k, i in zip(mults, indices))
            if total == t_rank:
                expected.add(
                    CycloFactorization({i: k for i, k in zip(indices, mults) if k})
                )
        assert got == expected

    def test_finite_height_flags_multi_factor(self):
        result = admissible_transcendental_charpolys(1, finite_height(3), 6)
        multi = [f for f in result if not is_single_power(f)]
        assert CycloFactorization({1: 4, 3: 1}) in multi
        assert all(len(f.factors) > 1 for f in multi)


class TestWildPrimePowers:
    def test_bound_21_is_the_published_set(self):
        assert wild_prime_powers(21) == sorted(
            [2, 4, 8, 16, 32, 3, 9, 27, 5, 25, 7, 11, 13, 17, 19]
        )

    def test_bound_1(self):
        assert wild_prime_powers(1) == [2]

    def test_bound_22_adds_23(self):
        assert set(wild_prime_powers(22)) == set(wild_prime_powers(21)) | {23}

    def test_monotone(self):
        previous = set()
        for bound in range(1, 40):
            current = set(wild_prime_powers(bound))
            assert previous <= current
            previous = current

    def test_against_brute_force(self):
        def is_prime_power(q):
            for p in range(2, q + 1):
                if q % p == 0:
                    while q % p == 0:
                        q //= p
                    return q == 1, p
            return False, None

        for bound in (1, 5, 21, 30):
            expected = []
            for q in range(2, 4 * bound * bound + 4):
                ok, _ = is_prime_power(q)
                if ok and oracles.naive_phi(q) <= bound:
                    expected.append(q)
            assert wild_prime_powers(bound) == expected


class TestNygaard:
    def test_ruled_out_pairs(self):
        assert nygaard_sigma0(42, 2) == []
        assert nygaard_sigma0(6, 5) == [1, 3, 5, 7, 9]
        assert nygaard_sigma0(1, 3) == list(range(1, 11))

    def test_big_integer_verification(self):
        for m, p in [(6, 5), (1, 7), (14, 13), (10, 3), (33, 2)]:
            got = nygaard_sigma0(m, p)
            for s in range(1, 11):
                assert (s in got) == ((p**s + 1) % m == 0)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            nygaard_sigma0(0, 2)
        with pytest.raises(ValueError):
            nygaard_sigma0(5, 4)


class TestHet2AndOrderDecomposition:
    def test_verify_het2(self):
        assert verify_het2_factorization(CycloFactorization({1: 10, 42: 1}))
        assert verify_het2_factorization(CycloFactorization({1: 22}))
        assert verify_het2_factorization(CycloFactorization({1: 2, 66: 1}))
        assert not verify_het2_factorization(CycloFactorization({1: 21}))

    def test_order_decomposition(self):
        assert order_decomposition(28, 2) == (2, 7)
        assert order_decomposition(7, 2) == (0, 7)
        assert order_decomposition(66, 3) == (1, 22)

    def test_order_decomposition_reconstructs(self):
        for n in range(1, 200):
            for p in (2, 3, 5, 7):
                e, rest = order_decomposition(n, p)
                assert p**e * rest == n and rest % p != 0

    def test_order_decomposition_validation(self):
        with pytest.raises(ValueError):
            order_decomposition(0, 2)
        with pytest.raises(ValueError):
            order_decomposition(12, 6)
