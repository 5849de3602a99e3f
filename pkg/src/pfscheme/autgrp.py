"""Exact automorphism search for schemes, and Frobenius certification.

Backtracking over point images with a boolean candidate matrix: fixing
u -> v prunes every pair constraint in two vectorized comparisons, and
the diagonal color makes assigned rows and columns exclusive for free.
Used to certify that the automorphism group of a coherent closure is a
Frobenius group (transitive, nontrivial point stabilizer, and no
nonidentity automorphism fixing two points).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scheme import Scheme


class _Search:
    def __init__(self, scheme: Scheme):
        self.P = scheme.colors
        self.n = scheme.n

    def _start(self, partial: dict):
        n, P = self.n, self.P
        cand = np.ones((n, n), dtype=bool)
        img = np.full(n, -1, dtype=np.int64)
        for u, v in partial.items():
            if not cand[u, v]:
                return None
            img[u] = v
            cand &= np.equal.outer(P[:, u], P[:, v])
            cand &= np.equal.outer(P[u, :], P[v, :])
        return img, cand

    def solutions(self, partial: dict, limit: int | None = None):
        """Yield complete color-preserving maps extending the partial one."""
        state = self._start(partial)
        if state is None:
            return
        img0, cand0 = state
        P, n = self.P, self.n
        found = 0
        stack = [(img0, cand0)]
        while stack:
            img, cand = stack.pop()
            while True:
                unassigned = np.nonzero(img < 0)[0]
                if len(unassigned) == 0:
                    if not np.array_equal(P[np.ix_(img, img)], P):
                        raise AssertionError("search produced a non-automorphism")
                    yield tuple(int(v) for v in img)
                    found += 1
                    if limit is not None and found >= limit:
                        return
                    break
                counts = cand[unassigned].sum(axis=1)
                pos = int(np.argmin(counts))
                u = int(unassigned[pos])
                m = int(counts[pos])
                if m == 0:
                    break
                vs = np.nonzero(cand[u])[0]
                if m > 1:
                    for v in vs[:0:-1]:
                        img2 = img.copy()
                        cand2 = cand.copy()
                        img2[u] = v
                        cand2 &= np.equal.outer(P[:, u], P[:, int(v)])
                        cand2 &= np.equal.outer(P[u, :], P[int(v), :])
                        stack.append((img2, cand2))
                v = int(vs[0])
                img[u] = v
                cand &= np.equal.outer(P[:, u], P[:, v])
                cand &= np.equal.outer(P[u, :], P[v, :])


def automorphism_stabilizer(scheme: Scheme, point: int = 0,
                            cap: int | None = None):
    """All automorphisms fixing the point, up to cap; returns (maps, capped)."""
    out = []
    limit = None if cap is None else cap + 1
    for img in _Search(scheme).solutions({point: point}, limit=limit):
        out.append(img)
        if cap is not None and len(out) > cap:
            return out[:cap], True
    return out, False


def first_automorphism(scheme: Scheme, partial: dict):
    for img in _Search(scheme).solutions(dict(partial), limit=1):
        return img
    return None


@dataclass(frozen=True)
class FrobeniusCertificate:
    """Outcome of the exact Frobenius check on a scheme's automorphisms."""

    frobenius: bool | None       # None when the enumeration was capped
    transitive: bool | None
    stabilizer_order: int | None
    group_order: int | None
    reason: str
    witness: tuple = ()

    def to_json_dict(self) -> dict:
        return {"frobenius": self.frobenius, "transitive": self.transitive,
                "stabilizer_order": self.stabilizer_order,
                "group_order": self.group_order, "reason": self.reason,
                "witness": list(self.witness)}


def frobenius_certificate(scheme: Scheme, cap: int | None = None) -> FrobeniusCertificate:
    """Transitive + nontrivial stabilizer + nonidentity maps fix one point.

    The stabilizer of point 0 is enumerated in full (fixed-point-free
    stabilizers have at most n - 1 elements, so the default cap of n only
    triggers when the group is already disqualified); transitivity is
    established by one map 0 -> alpha per point.
    """
    n = scheme.n
    if n < 2:
        return FrobeniusCertificate(False, True, 1, 1, "degenerate scheme")
    if cap is None:
        cap = n
    stab, capped = automorphism_stabilizer(scheme, 0, cap=cap)
    identity = tuple(range(n))
    for img in stab:
        if img == identity:
            continue
        fixed = [i for i in range(n) if img[i] == i]
        if len(fixed) >= 2:
            return FrobeniusCertificate(
                False, None, None, None,
                "automorphism fixes points %d and %d" % (fixed[0], fixed[1]),
                witness=img)
    if capped:
        return FrobeniusCertificate(None, None, None, None,
                                    "stabilizer enumeration capped at %d" % cap)
    m = len(stab)
    if m < 2:
        return FrobeniusCertificate(False, None, m, None,
                                    "point stabilizer is trivial")
    search = _Search(scheme)
    for alpha in range(1, n):
        hit = None
        for img in search.solutions({0: alpha}, limit=1):
            hit = img
        if hit is None:
            return FrobeniusCertificate(False, False, m, None,
                                        "no automorphism moves 0 to %d" % alpha)
    return FrobeniusCertificate(True, True, m, n * m,
                                "transitive with semiregular stabilizer")
