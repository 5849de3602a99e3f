"""Small exact number-theory helpers (trial division scale)."""

from __future__ import annotations

from math import gcd, isqrt


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1, got %r" % (n,))
    out: dict[int, int] = {}
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n))


def big_omega(n: int) -> int:
    """Number of prime divisors counted with multiplicity."""
    return sum(factorize(n).values())


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n)))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power(n: int):
    """Return (p, e) with n = p**e, or None if n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    [(p, e)] = f.items()
    return p, e


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors."""
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def mult_order(u: int, m: int) -> int:
    """Multiplicative order of u modulo m (u must be a unit)."""
    u %= m
    if gcd(u, m) != 1:
        raise ValueError("%d is not a unit modulo %d" % (u, m))
    k, x = 1, u
    while x != 1:
        x = x * u % m
        k += 1
    return k
