"""Spreads of the plane F_q x F_q and the schemes they color.

A spread partitions the nonzero vectors into q + 1 additive subgroups of
order q (components).  Coloring each pair of points by the component
containing their difference gives an equivalenced scheme of valency
q - 1 whose intersection tensor is the same for every spread of the same
order; the Desarguesian spread reproduces the orbital scheme of scalar
multiplication, while derived spreads (Andre/Hall) can produce schemes
that share that tensor without being isomorphic to it.

Vectors (a, b) are indexed as a + b*q with field elements encoded base p,
matching the element order of the elementary-abelian kernel factors, so
the Desarguesian spread scheme and the orbital scheme of a scalar spec
agree entry by entry after canonical relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import prime_power
from .frobenius import ElementaryAbelianFactor, FrobeniusSpec
from .gf import GF, FiniteField
from .scheme import Scheme, SchemeError


@dataclass(frozen=True)
class Spread:
    q: int
    p: int
    e: int
    components: tuple        # sorted tuples of vector indices, each containing 0

    @property
    def n(self) -> int:
        return self.q * self.q

    def component_of(self) -> np.ndarray:
        """Vector index -> component id (-1 for the zero vector)."""
        out = np.full(self.n, -1, dtype=np.int64)
        for i, comp in enumerate(self.components):
            for w in comp:
                if w:
                    out[w] = i
        return out


def _field(q: int) -> FiniteField:
    pe = prime_power(q)
    if pe is None:
        raise ValueError("%d is not a prime power" % q)
    return GF(q)


def verify_spread(spread: Spread) -> None:
    """Independent axiom check: subgroups, trivial intersections, cover."""
    q, F = spread.q, _field(spread.q)
    if len(spread.components) != q + 1:
        raise SchemeError("expected %d components, got %d"
                          % (q + 1, len(spread.components)))
    covered = set()
    for comp in spread.components:
        cs = set(comp)
        if len(cs) != q or 0 not in cs:
            raise SchemeError("component is not a subgroup of order %d" % q)
        for u in comp:
            for v in comp:
                au, bu = u % q, u // q
                av, bv = v % q, v // q
                w = F.add(au, av) + F.add(bu, bv) * q
                if w not in cs:
                    raise SchemeError("component not closed under addition")
        overlap = (cs - {0}) & covered
        if overlap:
            raise SchemeError("components share nonzero vector %d" % min(overlap))
        covered |= cs - {0}
    if len(covered) != q * q - 1:
        raise SchemeError("components do not cover the nonzero vectors")


def _canonical(q: int, comps) -> Spread:
    p, e = prime_power(q)
    ordered = tuple(sorted(tuple(sorted(c)) for c in comps))
    return Spread(q=q, p=p, e=e, components=ordered)


def desarguesian_spread(q: int) -> Spread:
    """Lines y = mx for m in F_q, plus the vertical line x = 0."""
    F = _field(q)
    comps = [[0 + y * q for y in range(q)]]
    for m in range(q):
        comps.append([x + F.mul(m, x) * q for x in range(q)])
    out = _canonical(q, comps)
    verify_spread(out)
    return out


def andre_spread(q: int, s: int | None = None, delta: int = 1) -> Spread:
    """Replace the norm-delta lines y = mx by y = m x^s.

    q must be the square of a prime power q0; s defaults to q0, the
    exponent generating the relevant field automorphism, and delta picks
    which norm class of slopes is replaced.  delta = 1 with the default s
    gives the Hall spread.
    """
    F = _field(q)
    p, e = prime_power(q)
    if e % 2:
        raise ValueError("derived spreads need q to be a square")
    q0 = p ** (e // 2)
    if s is None:
        s = q0
    if s % p or F.frobenius(F.primitive_element(), s * q0) != F.primitive_element():
        raise ValueError("s must generate the automorphism x -> x^%d" % q0)
    if not 1 <= delta < q0:
        raise ValueError("delta must be a nonzero norm value below %d" % q0)
    comps = [[0 + y * q for y in range(q)]]
    replaced = 0
    for m in range(q):
        if m and F.norm_to_subfield(m, q0) == delta:
            comps.append([x + F.mul(m, F.frobenius(x, s)) * q for x in range(q)])
            replaced += 1
        else:
            comps.append([x + F.mul(m, x) * q for x in range(q)])
    if replaced != q0 + 1:
        raise AssertionError("norm class has unexpected size %d" % replaced)
    out = _canonical(q, comps)
    verify_spread(out)
    return out


def hall_spread(q: int) -> Spread:
    return andre_spread(q)


def spread_scheme(spread: Spread) -> Scheme:
    """Color pairs by the component of their difference."""
    q, n = spread.q, spread.n
    F = _field(q)
    sub = np.zeros((q, q), dtype=np.int64)
    for i in range(q):
        for j in range(q):
            sub[i, j] = F.sub(i, j)
    idx = np.arange(n)
    a, b = idx % q, idx // q
    da = sub[a[:, None], a[None, :]]
    db = sub[b[:, None], b[None, :]]
    diff = da + db * q
    comp_of = spread.component_of()
    colors = comp_of[diff] + 1
    np.fill_diagonal(colors, 0)
    return Scheme(colors)


def scalar_spec(q: int, dim: int = 2) -> FrobeniusSpec:
    """Elementary-abelian kernel F_q^dim with the scalar group F_q^* on top."""
    if q < 3:
        raise ValueError("scalar complement needs q >= 3")
    F = _field(q)
    p, e = prime_power(q)
    M = F.mul_matrix(F.primitive_element())
    d = e * dim
    big = [[0] * d for _ in range(d)]
    for blk in range(dim):
        for i in range(e):
            for j in range(e):
                big[blk * e + i][blk * e + j] = M[i][j]
    factor = ElementaryAbelianFactor(p, d, (tuple(tuple(row) for row in big),))
    return FrobeniusSpec(kernel_factors=(factor,), complement_order=q - 1)
