"""Parabolics (scheme-compatible equivalences), the valency-divide check,
the indistinguishing number, and the arithmetic separability verdict.

A parabolic is an equivalence on the point set that is a union of
relations; they form a lattice under join.  For equivalenced schemes the
verdict machinery decides separability from n, the valency k, and the
index chains of the parabolic (or invariant-subgroup) lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .arith import prime_divisors, prime_power
from .frobenius import FrobeniusSpec, InvariantLattice, invariant_lattice
from .scheme import Scheme, SchemeError


@dataclass(frozen=True)
class Parabolic:
    """Union of relations forming an equivalence; classes all of size n_e."""

    relations: frozenset
    class_of: tuple        # point -> class id (ids by smallest member)
    n_e: int
    num_classes: int

    def __contains__(self, s: int) -> bool:
        return s in self.relations

    def key(self) -> tuple:
        return tuple(sorted(self.relations))

    def is_trivial(self) -> bool:
        return self.n_e == 1

    def is_full(self) -> bool:
        return self.num_classes == 1

    def __repr__(self) -> str:
        return "Parabolic(rels=%s, n_e=%d)" % (sorted(self.relations), self.n_e)


def _components(scheme: Scheme, rels) -> np.ndarray:
    """Connected components of the union of the given relations (with stars)."""
    n = scheme.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mask = np.zeros(scheme.rank, dtype=bool)
    for s in rels:
        mask[s] = True
        mask[scheme.star[s]] = True
    rows, cols = np.nonzero(mask[scheme.colors])
    for a, b in zip(rows.tolist(), cols.tolist()):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return np.asarray([find(x) for x in range(n)], dtype=np.int64)


def parabolic_closure(scheme: Scheme, rels) -> Parabolic:
    """Smallest parabolic containing the given relations."""
    comp = _components(scheme, set(rels) | {0})
    P = scheme.colors
    inside = comp[:, None] == comp[None, :]
    rel_set = frozenset(int(c) for c in np.unique(P[inside]))
    # a scheme relation never straddles classes; verify defensively
    outside_rels = set(int(c) for c in np.unique(P[~inside])) if not inside.all() else set()
    if rel_set & outside_rels:
        raise SchemeError("relation %d lies both inside and across classes"
                          % min(rel_set & outside_rels))
    sizes = np.bincount(comp)
    sizes = sizes[sizes > 0]
    if len(set(sizes.tolist())) != 1:
        raise SchemeError("parabolic classes have unequal sizes %s" % sorted(set(sizes.tolist())))
    return Parabolic(relations=rel_set, class_of=tuple(int(x) for x in comp),
                     n_e=int(sizes[0]), num_classes=len(sizes))


def enumerate_parabolics(scheme: Scheme) -> list[Parabolic]:
    """The full parabolic lattice: minimal closures saturated under join.

    Returned sorted by (n_e, relation list); includes the trivial and full
    parabolics.
    """
    found: dict[tuple, Parabolic] = {}
    trivial = parabolic_closure(scheme, set())
    found[trivial.key()] = trivial
    for s in range(1, scheme.rank):
        e = parabolic_closure(scheme, {s})
        found.setdefault(e.key(), e)
    work = [e for e in found.values()]
    while work:
        e = work.pop(0)
        for other in list(found.values()):
            r1, r2 = e.relations, other.relations
            if r1 <= r2 or r2 <= r1:
                continue
            j = parabolic_closure(scheme, r1 | r2)
            if j.key() not in found:
                found[j.key()] = j
                work.append(j)
    out = sorted(found.values(), key=lambda e: (e.n_e, e.key()))
    return out


def exhaustive_parabolics(scheme: Scheme) -> list[Parabolic]:
    """Cross-check by scanning all relation subsets (rank <= 12 only)."""
    if scheme.rank > 12:
        raise ValueError("exhaustive scan limited to rank <= 12")
    out = []
    for bits in range(1 << (scheme.rank - 1)):
        rels = {0} | {s for s in range(1, scheme.rank) if bits >> (s - 1) & 1}
        comp = _components(scheme, rels)
        inside = comp[:, None] == comp[None, :]
        covered = frozenset(int(c) for c in np.unique(scheme.colors[inside]))
        if covered == frozenset(rels):
            out.append(parabolic_closure(scheme, rels))
    uniq = {e.key(): e for e in out}
    return sorted(uniq.values(), key=lambda e: (e.n_e, e.key()))


def is_primitive(scheme: Scheme) -> bool:
    return len(enumerate_parabolics(scheme)) == 2 if scheme.rank > 1 else True


# -- valency-divide check --------------------------------------------------


@dataclass(frozen=True)
class DivideRecord:
    lower: tuple       # relation key of e1
    upper: tuple
    n_lower: int
    n_upper: int
    quotient: int
    ok: bool


def divide_check(scheme: Scheme, parabolics: list[Parabolic] | None = None) -> list[DivideRecord]:
    """k must divide n_{e2}/n_{e1} - 1 for every nested parabolic pair.

    Requires an equivalenced scheme; raises on a non-integer block ratio
    (impossible for genuine parabolics).
    """
    k = scheme.is_equivalenced()
    if k is None:
        raise SchemeError("divide check needs an equivalenced scheme")
    if parabolics is None:
        parabolics = enumerate_parabolics(scheme)
    out = []
    for e1 in parabolics:
        for e2 in parabolics:
            if e1 is e2 or not e1.relations < e2.relations:
                continue
            if e2.n_e % e1.n_e:
                raise SchemeError("nested parabolics with non-dividing sizes %d, %d"
                                  % (e1.n_e, e2.n_e))
            q = e2.n_e // e1.n_e
            out.append(DivideRecord(lower=e1.key(), upper=e2.key(),
                                    n_lower=e1.n_e, n_upper=e2.n_e,
                                    quotient=q, ok=(q - 1) % k == 0))
    return out


def indistinguishing_number(scheme: Scheme) -> int:
    """max over irreflexive r of sum_s c[s][s*][r]."""
    T = scheme.tensor()
    st = np.asarray(scheme.star)
    rows = T.c[np.arange(scheme.rank), st, :]    # rows[s, r] = c[s][s*][r]
    totals = rows.sum(axis=0)
    return int(totals[1:].max())


# -- separability verdict ---------------------------------------------------


@dataclass(frozen=True)
class SeparabilityVerdict:
    """Separable with a witness, or Undecided with table-case annotations."""

    separable: bool
    n: int
    k: int
    reason: str | None = None            # "bound" | "long-chain" | "multiset"
    witness: tuple = ()
    pi_count: int = 0
    d: int = 0
    cases: tuple[str, ...] = ()

    @property
    def undecided(self) -> bool:
        return not self.separable

    def to_json_dict(self) -> dict:
        return {
            "verdict": "separable" if self.separable else "undecided",
            "n": self.n, "k": self.k, "reason": self.reason,
            "witness": list(self.witness), "pi_count": self.pi_count,
            "d": self.d, "cases": list(self.cases),
        }


_ALLOWED_MULTISETS = ("kkk", "kk2k")


def _verdict_from_chains(n: int, k: int, sizes: list[int], incl: np.ndarray,
                         d: int, cases: tuple[str, ...]) -> SeparabilityVerdict:
    """Core arithmetic: sizes/inclusion describe the nontrivial lattice part.

    sizes[i] is the block size (subgroup order) of the i-th nontrivial
    member; incl is their strict inclusion matrix.
    """
    pi_count = len(prime_divisors(n))
    if k == n - 1:
        # rank 2: the complete scheme on n points, unique for its order
        return SeparabilityVerdict(True, n, k, reason="complete",
                                   witness=(n, k),
                                   pi_count=pi_count, d=d, cases=cases)
    if n > 3 * k * (k - 1) ** 2:
        return SeparabilityVerdict(True, n, k, reason="bound",
                                   witness=(n, 3 * k * (k - 1) ** 2),
                                   pi_count=pi_count, d=d, cases=cases)
    m = len(sizes)
    order = sorted(range(m), key=lambda i: sizes[i])
    for i in order:
        for j in order:
            if not incl[i, j]:
                continue
            for l in order:
                if incl[j, l]:
                    return SeparabilityVerdict(
                        True, n, k, reason="long-chain",
                        witness=(1, sizes[i], sizes[j], sizes[l], n),
                        pi_count=pi_count, d=d, cases=cases)
    for i in order:
        for j in order:
            if not incl[i, j]:
                continue
            mset = tuple(sorted((sizes[i] - 1, sizes[j] // sizes[i] - 1,
                                 n // sizes[j] - 1)))
            if mset != (k, k, k) and mset != tuple(sorted((k, k, 2 * k))):
                return SeparabilityVerdict(
                    True, n, k, reason="multiset",
                    witness=(sizes[i], sizes[j]) + mset,
                    pi_count=pi_count, d=d, cases=cases)
    return SeparabilityVerdict(False, n, k, pi_count=pi_count, d=d, cases=cases)


def _d3_cases(n: int, k: int, sections) -> tuple[str, ...]:
    cases = []
    if sections is not None:
        degrees = [s.degree for s in sections]
        ranks = [s.rank for s in sections]
    else:
        degrees = ranks = None
    if n == (k + 1) ** 3 and prime_power(k + 1):
        if degrees is None or all(dg == k + 1 and rk == 2 for dg, rk in zip(degrees, ranks)):
            cases.append("one-prime-cube")
    if (n == (k + 1) ** 2 * (2 * k + 1) and prime_power(k + 1) and prime_power(2 * k + 1)):
        if degrees is None or (
                sorted(degrees) == sorted([k + 1, k + 1, 2 * k + 1])
                and all((dg == k + 1 and rk == 2) or (dg == 2 * k + 1 and rk == 3)
                        for dg, rk in zip(degrees, ranks))):
            cases.append("two-prime-double")
    return tuple(cases)


def separability_verdict(subject, k: int | None = None) -> SeparabilityVerdict:
    """Arithmetic separability for a Scheme or a FrobeniusSpec.

    Separable when (a) n > 3k(k-1)^2, (b) some strict chain of three nested
    nontrivial parabolics exists, or (c) some two-step chain's index
    multiset avoids {{k,k,k}} and {{k,k,2k}}.  Otherwise Undecided, with
    the matching d = 3 parameter cases annotated.  The subject must be
    imprimitive (equivalenced, for schemes).
    """
    if isinstance(subject, FrobeniusSpec):
        lattice = invariant_lattice(subject)
        n = subject.kernel_order
        kk = subject.complement_order
        if lattice.d < 2:
            raise ValueError("primitive subject: no nontrivial invariant subgroup")
        nt = lattice.nontrivial()
        sizes = [lattice.subgroups[i].order for i in nt]
        incl = lattice.inclusion[np.ix_(nt, nt)]
        d = lattice.d
        cases = ()
        if d == 3:
            from .frobenius import principal_sections
            cases = _d3_cases(n, kk, principal_sections(subject, lattice))
        return _verdict_from_chains(n, kk, sizes, incl, d, cases)
    scheme: Scheme = subject
    kk = scheme.is_equivalenced() if k is None else k
    if kk is None:
        raise SchemeError("separability needs an equivalenced scheme")
    if kk == scheme.n - 1:
        return _verdict_from_chains(scheme.n, kk, [],
                                    np.zeros((0, 0), dtype=bool), 1, ())
    paras = enumerate_parabolics(scheme)
    if len(paras) <= 2:
        raise SchemeError("primitive scheme: separability criteria need a parabolic")
    nt = [e for e in paras if not e.is_trivial() and not e.is_full()]
    sizes = [e.n_e for e in nt]
    m = len(nt)
    incl = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(m):
            if i != j and nt[i].relations < nt[j].relations:
                incl[i, j] = True
    longest = {i: 0 for i in range(m)}
    for i in sorted(range(m), key=lambda i: sizes[i]):
        preds = [j for j in range(m) if incl[j, i]]
        longest[i] = 1 + max((longest[j] for j in preds), default=0)
    d = 1 + (max(longest.values()) if m else 0)
    cases = _d3_cases(scheme.n, kk, None) if d == 3 else ()
    return _verdict_from_chains(scheme.n, kk, sizes, incl, d, cases)
