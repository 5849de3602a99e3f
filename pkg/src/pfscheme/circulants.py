"""Circulant graphs whose arc colorings feed the WL-dimension classifier.

A circulant is a Cayley graph over Z_n.  When the connection set is a
union of orbits of a fixed-point-free unit group K, the graph carries
Z_n x| K inside its automorphism group by construction; that subgroup is
the certificate the classifier tries first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np


@dataclass(frozen=True)
class CirculantSpec:
    """n, generating units of K, and K-orbit representatives."""

    n: int
    units: tuple
    orbit_reps: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        for u in self.units:
            if gcd(u, self.n) != 1:
                raise ValueError("%d is not a unit mod %d" % (u, self.n))
        if not self.orbit_reps:
            raise ValueError("need at least one orbit representative")
        for r in self.orbit_reps:
            if r % self.n == 0:
                raise ValueError("orbit representatives must be nonzero")


def unit_closure(n: int, gens) -> frozenset:
    """Multiplicative closure of the given units mod n."""
    group = {1}
    frontier = [1]
    gens = sorted({g % n for g in gens})
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g % n
                if b not in group:
                    group.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(group)


def fixed_point_free(n: int, units) -> int | None:
    """First nonidentity unit with a nonzero fixed point, else None."""
    for u in sorted(units):
        if u != 1 and gcd(u - 1, n) != 1:
            return u
    return None


@dataclass(frozen=True)
class Circulant:
    n: int
    connection: frozenset
    spec: CirculantSpec | None = None

    @property
    def symmetric(self) -> bool:
        return all((-c) % self.n in self.connection for c in self.connection)

    def degree_out(self) -> int:
        return len(self.connection)


def frobenius_circulant(spec: CirculantSpec) -> Circulant:
    """Connection set = union of the K-orbits of the representatives.

    K is the closure of the given units; every nonidentity element must
    act without nonzero fixed points and |K| must be at least 2, so that
    Z_n x| K is a Frobenius subgroup of the automorphism group.
    """
    K = unit_closure(spec.n, spec.units)
    if len(K) < 2:
        raise ValueError("unit group is trivial; need |K| >= 2")
    bad = fixed_point_free(spec.n, K)
    if bad is not None:
        h = spec.n // gcd(bad - 1, spec.n)
        raise ValueError("unit %d fixes nonzero residue %d" % (bad, h))
    conn = set()
    for r in spec.orbit_reps:
        for u in K:
            conn.add(r * u % spec.n)
    return Circulant(n=spec.n, connection=frozenset(conn), spec=spec)


def circulant_from_connection(n: int, connection) -> Circulant:
    conn = frozenset(c % n for c in connection)
    if 0 in conn:
        raise ValueError("connection set must avoid 0")
    return Circulant(n=n, connection=conn)


def color_matrix(circ: Circulant) -> np.ndarray:
    """0/1 arc matrix; the WL closure does its own diagonal/transpose split."""
    n = circ.n
    row = np.zeros(n, dtype=np.int64)
    for c in circ.connection:
        row[c] = 1
    idx = np.arange(n)
    return row[(idx[None, :] - idx[:, None]) % n]


def preserving_units(circ: Circulant) -> frozenset:
    """All units u with u*S = S; contains any K the graph was built from."""
    n, S = circ.n, circ.connection
    out = set()
    for u in range(1, n):
        if gcd(u, n) != 1:
            continue
        if all(u * c % n in S for c in S):
            out.add(u)
    return frozenset(out)


def certificate_unit_groups(circ: Circulant) -> list[frozenset]:
    """Candidate fixed-point-free unit groups, largest first.

    The full connection-preserving unit group is tried when it is itself
    fixed point free; cyclic subgroups generated by single preserving
    units follow.  Any returned K satisfies |K| >= 2 and leaves the
    connection set invariant, hence Z_n x| K acts on the graph.
    """
    U = preserving_units(circ)
    candidates = []
    if len(U) >= 2 and fixed_point_free(circ.n, U) is None:
        candidates.append(U)
    seen = {frozenset({1})}
    for u in sorted(U):
        sub = unit_closure(circ.n, [u])
        if sub in seen or len(sub) < 2:
            continue
        seen.add(sub)
        if fixed_point_free(circ.n, sub) is None:
            candidates.append(sub)
    candidates.sort(key=lambda K: (-len(K), sorted(K)))
    out = []
    for K in candidates:
        if K not in out:
            out.append(K)
    return out
