"""Deterministic batch of imprimitive Frobenius specifications.

The batch feeds the arithmetic separability sweep: more than fifty specs
with kernel order at most 4000, mixing cyclic kernels under negation or
a larger unit, elementary abelian kernels under scalar groups, field
cubes, coprime pairs of squares, and mixed kernels.  Every entry is
imprimitive (the kernel has a proper nontrivial complement-invariant
subgroup), which is the hypothesis of the separability criteria.
"""

from __future__ import annotations

from .arith import factorize, mult_order, prime_power
from .frobenius import CyclicFactor, ElementaryAbelianFactor, FrobeniusSpec
from .gf import GF
from .spreads import scalar_spec

KERNEL_CAP = 4000


def negation_spec(m: int) -> FrobeniusSpec:
    """Z_m under negation; valid for odd m >= 3."""
    return FrobeniusSpec((CyclicFactor(m, (m - 1,)),), 2)


def cyclic_unit_spec(m: int, u: int) -> FrobeniusSpec:
    return FrobeniusSpec((CyclicFactor(m, (u,)),), mult_order(u, m))


def field_cube_spec(p: int, k: int) -> FrobeniusSpec:
    """F_{p^3} kernel with the scalar subgroup of order k."""
    F = GF(p ** 3)
    w = F.pow(F.primitive_element(), (p ** 3 - 1) // k)
    return FrobeniusSpec((ElementaryAbelianFactor(p, 3, (F.mul_matrix(w),)),), k)


def double_prime_spec(p: int, q: int, k: int) -> FrobeniusSpec:
    """F_{p^2} + F_{q^2} kernel with a diagonal order-k scalar pair."""
    Fp, Fq = GF(p * p), GF(q * q)
    wp = Fp.pow(Fp.primitive_element(), (p * p - 1) // k)
    wq = Fq.pow(Fq.primitive_element(), (q * q - 1) // k)
    return FrobeniusSpec(
        (ElementaryAbelianFactor(p, 2, (Fp.mul_matrix(wp),)),
         ElementaryAbelianFactor(q, 2, (Fq.mul_matrix(wq),))), k)


def mixed_spec(m: int, u: int, q: int) -> FrobeniusSpec:
    """Z_m + F_q^2 kernel; the unit u and the scalar group share order q-1."""
    k = q - 1
    if mult_order(u, m) != k:
        raise ValueError("unit order must match q - 1")
    F = GF(q)
    p, e = prime_power(q)
    M = F.mul_matrix(F.primitive_element())
    big = [[0] * (2 * e) for _ in range(2 * e)]
    for blk in range(2):
        for i in range(e):
            for j in range(e):
                big[blk * e + i][blk * e + j] = M[i][j]
    return FrobeniusSpec(
        (CyclicFactor(m, (u,)),
         ElementaryAbelianFactor(p, 2 * e, (tuple(tuple(r) for r in big),))), k)


def _odd_composites(count: int) -> list[int]:
    out = []
    m = 9
    while len(out) < count:
        fac = factorize(m)
        if not (len(fac) == 1 and next(iter(fac.values())) == 1):
            out.append(m)
        m += 2
    return out


def batch_specs() -> list[tuple[str, FrobeniusSpec]]:
    """The named catalog, deterministic and order-stable."""
    entries: list[tuple[str, FrobeniusSpec]] = []

    # Cyclic kernels under negation: the first 32 odd composites (9..123).
    for m in _odd_composites(32):
        entries.append(("neg-%d" % m, negation_spec(m)))

    # Cyclic kernels with a unit of order 3 or 4.
    for m, u in ((65, 57), (85, 38), (91, 16), (185, 68), (205, 32), (259, 121)):
        entries.append(("cyc-%d-%d" % (m, u), cyclic_unit_spec(m, u)))

    # Scalar groups on F_q^2.
    for q in (3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25):
        entries.append(("scalar-%d" % q, scalar_spec(q, 2)))

    # F_{p^3} with scalar subgroups; k = p-1 gives the one-prime-cube shape.
    for p, k in ((7, 6), (11, 10), (13, 12), (3, 2), (5, 4), (13, 6), (11, 5)):
        entries.append(("cube-%d-%d" % (p, k), field_cube_spec(p, k)))

    # Two coprime squares with a shared scalar order.
    for p, q, k in ((3, 5, 2), (5, 7, 4), (3, 7, 2), (5, 11, 4)):
        entries.append(("double-%d-%d-%d" % (p, q, k), double_prime_spec(p, q, k)))

    # Mixed cyclic x elementary abelian kernels.
    entries.append(("mixed-7-4", mixed_spec(7, 2, 4)))
    entries.append(("mixed-17-9", mixed_spec(17, 2, 9)))

    return entries
