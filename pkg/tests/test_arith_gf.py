"""Number-theory helpers and finite field arithmetic."""

import pytest

from pfscheme.arith import (
    big_omega,
    divisors,
    factorize,
    is_prime,
    mult_order,
    omega,
    prime_divisors,
    prime_power,
)
from pfscheme.gf import GF


def test_factorize_small_range():
    for n in range(2, 500):
        fac = factorize(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p)
            prod *= p ** e
        assert prod == n
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert omega(360) == 3
    assert big_omega(360) == 6
    assert prime_divisors(360) == (2, 3, 5)


def test_prime_power():
    assert prime_power(81) == (3, 4)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_divisors():
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert divisors(7) == [1, 7]


def test_mult_order():
    assert mult_order(2, 9) == 6
    assert mult_order(8, 9) == 2
    assert mult_order(57, 65) == 4
    for u in range(1, 20):
        if u % 21 and factorize(21).keys().isdisjoint(factorize(u).keys() if u > 1 else ()):
            o = mult_order(u, 21)
            assert pow(u, o, 21) == 1
            for j in range(1, o):
                assert pow(u, j, 21) != 1


def test_gf_prime_field():
    F = GF(7)
    assert F.q == 7
    for a in range(7):
        for b in range(7):
            assert F.add(a, b) == (a + b) % 7
            assert F.mul(a, b) == (a * b) % 7


def test_gf9_field_axioms():
    F = GF(9)
    els = range(9)
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # commutativity, associativity, distributivity on the full cube
    for a in els:
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_gf_mul_matches_slow_path():
    for q in (4, 8, 9, 25, 27):
        F = GF(q)
        for a in range(q):
            for b in range(q):
                assert F.mul(a, b) == F.mul_slow(a, b)


def test_gf_primitive_element_and_orders():
    for q in (4, 9, 16, 25):
        F = GF(q)
        g = F.primitive_element()
        assert F.element_order(g) == q - 1
        seen = set()
        x = 1
        for _ in range(q - 1):
            seen.add(x)
            x = F.mul(x, g)
        assert len(seen) == q - 1


def test_gf_frobenius_and_norm():
    F = GF(9)
    # x -> x^3 is the nontrivial automorphism of GF(9)
    for a in range(9):
        for b in range(9):
            assert F.frobenius(F.add(a, b), 3) == F.add(F.frobenius(a, 3), F.frobenius(b, 3))
            assert F.frobenius(F.mul(a, b), 3) == F.mul(F.frobenius(a, 3), F.frobenius(b, 3))
    # norm to GF(3): multiplicative, onto, value a^(1+3)
    for a in range(1, 9):
        nm = F.norm_to_subfield(a, 3)
        assert nm == F.mul(a, F.frobenius(a, 3))
        assert nm in (1, 2)
    with pytest.raises(ValueError):
        GF(12)
