import pytest

from shiftperm import poly2
from shiftperm.poly2 import BinPoly, ONE, ZERO, X, x_power
from shiftperm.ring import (
    Modulus,
    NonUnitError,
    RingElement,
    is_unit,
    modulus_factorization,
    reduce,
    ring_inverse,
    ring_mul,
    ring_one,
    unit_group_order,
)

P = BinPoly.parse


class TestModulus:
    def test_parity_of_modulus_polynomial(self):
        assert Modulus(5).poly == x_power(3)
        assert Modulus(6).poly == x_power(6) + x_power(3)
        assert Modulus(1).poly == X
        assert Modulus(2).poly == x_power(2) + X

    def test_degree(self):
        assert Modulus(5).degree == 3
        assert Modulus(6).degree == 6

    def test_two_adic_split(self):
        for n, m, s in [(5, 5, 0), (6, 3, 1), (8, 1, 3), (12, 3, 2), (48, 3, 4), (1, 1, 0)]:
            mod = Modulus(n)
            assert (mod.odd_part, mod.two_adic) == (m, s), n
            assert n == (1 << s) * m

    def test_bad_dimension(self):
        with pytest.raises(ValueError):
            Modulus(0)


class TestReduceAndMul:
    def test_reduce_examples(self):
        assert reduce(x_power(6), Modulus(6)).rep == x_power(3)
        assert reduce(ZERO, Modulus(6)).rep == ZERO
        assert reduce(BinPoly.from_exponents([0, 4, 8]), Modulus(8)).rep == ONE

    def test_reduce_is_idempotent(self):
        mod = Modulus(9)
        for v in range(1 << 7):
            r = reduce(BinPoly(v), mod)
            assert reduce(r.rep, mod) == r

    def test_unreduced_representative_rejected(self):
        with pytest.raises(ValueError):
            RingElement(Modulus(5), x_power(3))

    def test_mul_examples(self):
        big = Modulus(20)
        assert ring_mul(reduce(P("11"), big), reduce(P("11"), big)).rep == P("101")
        m8 = Modulus(8)
        assert ring_mul(reduce(P("111"), m8), reduce(P("1101011"), m8)).rep == ONE
        a = reduce(P("1011"), m8)
        assert ring_mul(a, ring_one(m8)) == a

    def test_mul_ring_axioms_small(self):
        mod = Modulus(6)
        elems = [reduce(BinPoly(v), mod) for v in range(1 << 6)]
        for a in elems[:16]:
            for b in elems[:16]:
                assert ring_mul(a, b) == ring_mul(b, a)
                for c in elems[:8]:
                    assert ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c))

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            ring_mul(reduce(ONE, Modulus(6)), reduce(ONE, Modulus(8)))


class TestUnits:
    def test_examples(self):
        assert not is_unit(reduce(P("11"), Modulus(6)))
        assert is_unit(ring_one(Modulus(6)))
        assert is_unit(reduce(P("111"), Modulus(8)))

    def test_unit_criterion_by_parity(self):
        # odd n: unit iff constant term 1; even n = 2^s m: also coprime to 1+X^m
        for n in range(1, 11):
            mod = Modulus(n)
            check = x_power(mod.odd_part) + ONE
            for v in range(1 << mod.degree):
                el = reduce(BinPoly(v), mod)
                if n % 2:
                    expected = el.rep.constant_term == 1
                else:
                    expected = (
                        el.rep.constant_term == 1
                        and poly2.gcd(el.rep, check) == ONE
                    )
                assert is_unit(el) == expected, (n, v)

    def test_unit_iff_inverse_exists_bruteforce(self):
        for n in range(1, 9):
            mod = Modulus(n)
            size = 1 << mod.degree
            elems = [reduce(BinPoly(v), mod) for v in range(size)]
            one = ring_one(mod)
            for a in elems:
                found = any(ring_mul(a, b) == one for b in elems)
                assert found == is_unit(a), (n, a)

    def test_inverse_roundtrip_exhaustive(self):
        for n in range(1, 11):
            mod = Modulus(n)
            one = ring_one(mod)
            for v in range(1 << mod.degree):
                el = reduce(BinPoly(v), mod)
                if is_unit(el):
                    assert ring_mul(el, ring_inverse(el)) == one, (n, v)

    def test_inverse_examples(self):
        assert ring_inverse(reduce(P("111"), Modulus(5))).rep == P("11")
        assert ring_inverse(ring_one(Modulus(7))) == ring_one(Modulus(7))
        assert ring_inverse(reduce(P("111"), Modulus(10))).rep == P("110111011")

    def test_non_unit_carries_witness(self):
        with pytest.raises(NonUnitError) as info:
            ring_inverse(reduce(P("11"), Modulus(6)))
        assert info.value.witness == P("11")


class TestModulusFactorization:
    def test_examples(self):
        assert [(g.to_string(), e) for g, e in modulus_factorization(Modulus(6))] == [
            ("01", 3),
            ("11", 1),
            ("111", 1),
        ]
        assert [(g.to_string(), e) for g, e in modulus_factorization(Modulus(8))] == [
            ("01", 4),
            ("11", 4),
        ]
        assert [(g.to_string(), e) for g, e in modulus_factorization(Modulus(5))] == [("01", 3)]

    def test_reconstructs_modulus_up_to_64(self):
        for n in range(1, 65):
            mod = Modulus(n)
            assert modulus_factorization(mod).product() == mod.poly, n

    def test_one_plus_x_multiplicity_is_half_power(self):
        # the repeated-factor exponent on 1+X^m is 2^(s-1), not 2^s
        for n in (4, 8, 12, 16, 24, 48):
            mod = Modulus(n)
            mults = {g: e for g, e in modulus_factorization(mod)}
            assert mults[P("11")] == 1 << (mod.two_adic - 1), n


class TestUnitGroupOrder:
    def test_examples(self):
        assert unit_group_order(Modulus(6)) == 12
        assert unit_group_order(Modulus(5)) == 4
        assert unit_group_order(Modulus(8)) == 64

    def test_matches_exhaustive_count(self):
        for n in range(1, 11):
            mod = Modulus(n)
            count = sum(
                1 for v in range(1 << mod.degree) if is_unit(reduce(BinPoly(v), mod))
            )
            assert count == unit_group_order(mod), n
