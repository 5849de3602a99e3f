"""Association schemes as color matrices, their intersection tensors, and
the coherent (2-dim Weisfeiler-Leman) closure of colored digraphs.

A scheme on n points is an n x n matrix of relation indices with the
diagonal as relation 0, closed under transposition (star), and with
pair-independent composition counts c[r][s][t] = |alpha r  intersect
beta s*| for (alpha, beta) in t.  All arithmetic is exact integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from hashlib import blake2b

import numpy as np


class SchemeError(ValueError):
    """Structural violation: not a scheme (axioms C1/C2 or shape)."""


class NotCoherentError(SchemeError):
    """Composition counts depend on the pair: witness for a C3 failure.

    Attributes r, s, t name the relations; pair1 is the representative
    pair of t, pair2 the offending pair, with their differing counts.
    """

    def __init__(self, r, s, t, pair1, pair2, count1, count2):
        self.r, self.s, self.t = r, s, t
        self.pair1, self.pair2 = pair1, pair2
        self.count1, self.count2 = count1, count2
        super().__init__(
            "c[%d][%d][%d] is not pair-independent: %d at %s vs %d at %s"
            % (r, s, t, count1, pair1, count2, pair2)
        )


class Scheme:
    """n x n relation-index matrix with validated C1/C2 axioms."""

    def __init__(self, colors, star=None):
        P = np.asarray(colors)
        if P.ndim != 2 or P.shape[0] != P.shape[1]:
            raise SchemeError("colors must be a square matrix")
        if not np.issubdtype(P.dtype, np.integer):
            raise SchemeError("colors must be integers")
        P = P.astype(np.int64, copy=True)
        n = P.shape[0]
        if n == 0:
            raise SchemeError("empty point set")
        rank = int(P.max()) + 1
        if int(P.min()) < 0 or len(np.unique(P)) != rank:
            raise SchemeError("colors must use every index in 0..rank-1")
        diag = np.diagonal(P)
        if not (diag == 0).all():
            raise SchemeError("diagonal must be relation 0")
        if n > 1 and (P == 0).sum() != n:
            raise SchemeError("relation 0 must be exactly the diagonal")
        # star: transposing a relation must land on a single relation
        st = [-1] * rank
        if star is not None:
            st = [int(x) for x in star]
            if len(st) != rank:
                raise SchemeError("star must list all %d relations" % rank)
        else:
            for s in range(rank):
                a, b = np.argwhere(P == s)[0]
                st[s] = int(P[b, a])
        stv = np.asarray(st, dtype=np.int64)
        if not np.array_equal(stv[P], P.T):
            bad = np.argwhere(stv[P] != P.T)[0]
            raise SchemeError("transpose of relation %d is not a relation (pair %s)"
                              % (int(P[bad[0], bad[1]]), tuple(int(x) for x in bad)))
        if st[0] != 0 or any(st[st[s]] != s for s in range(rank)):
            raise SchemeError("star is not an involution fixing the diagonal")
        P.setflags(write=False)
        self.colors = P
        self.n = n
        self.rank = rank
        self.star = tuple(st)
        self._tensor: IntersectionTensor | None = None

    # -- basic structure -------------------------------------------------

    def valencies(self) -> tuple[int, ...]:
        """Out-valency of each relation (row counts, pair-independent)."""
        counts = np.bincount(self.colors[0], minlength=self.rank)
        return tuple(int(c) for c in counts)

    def is_equivalenced(self):
        """Common irreflexive valency k if equivalenced, else None."""
        vals = set(self.valencies()[1:])
        if len(vals) == 1:
            return vals.pop()
        return None

    def pairs_of(self, s: int) -> np.ndarray:
        """Pairs of relation s in row-major order, as an (m, 2) array."""
        return np.argwhere(self.colors == s)

    def representative(self, s: int) -> tuple[int, int]:
        a, b = self.pairs_of(s)[0]
        return int(a), int(b)

    def fingerprint(self) -> str:
        h = blake2b(digest_size=16)
        h.update(self.colors.tobytes())
        h.update(bytes(self.star))
        return h.hexdigest()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Scheme) and self.n == other.n
                and self.star == other.star
                and np.array_equal(self.colors, other.colors))

    def __hash__(self) -> int:
        return hash((self.n, self.rank, self.fingerprint()))

    def __repr__(self) -> str:
        return "Scheme(n=%d, rank=%d)" % (self.n, self.rank)

    # -- intersection numbers ---------------------------------------------

    def tensor(self) -> "IntersectionTensor":
        """Compute (and cache) the intersection tensor, verifying C3.

        The claimed counts come from one representative pair per relation;
        an exhaustive vectorized pass then checks every pair against them,
        so acceptance doubles as full coherence verification.
        """
        if self._tensor is None:
            self._tensor = compute_tensor(self)
        return self._tensor

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "star": list(self.star),
            "colors": [[int(x) for x in row] for row in self.colors],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, d: dict) -> "Scheme":
        for key in ("n", "rank", "star", "colors"):
            if key not in d:
                raise SchemeError("scheme JSON missing key %r" % key)
        sch = cls(d["colors"], star=d["star"])
        if sch.n != d["n"] or sch.rank != d["rank"]:
            raise SchemeError("scheme JSON n/rank fields disagree with the matrix")
        return sch

    @classmethod
    def from_json(cls, text: str) -> "Scheme":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class IntersectionTensor:
    """Exact composition counts c[r][s][t] plus valencies, fully verified."""

    c: np.ndarray            # (rank, rank, rank) int64, read-only
    valencies: tuple[int, ...]
    star: tuple[int, ...]
    n: int

    @property
    def rank(self) -> int:
        return len(self.valencies)

    def __getitem__(self, rst):
        r, s, t = rst
        return int(self.c[r, s, t])

    def verify_triangle(self):
        """n_t c[r,s,t*] = n_r c[s,t,r*] = n_s c[t,r,s*] for all triples."""
        nv = np.asarray(self.valencies, dtype=np.int64)
        st = np.asarray(self.star)
        D = self.c[:, :, st]             # D[r,s,t] = c[r,s,t*]
        a = nv[None, None, :] * D
        b = nv[:, None, None] * D.transpose(2, 0, 1)   # [r,s,t] -> D[s,t,r]
        cc = nv[None, :, None] * D.transpose(1, 2, 0)  # [r,s,t] -> D[t,r,s]
        if not (np.array_equal(a, b) and np.array_equal(a, cc)):
            bad = np.argwhere((a != b) | (a != cc))[0]
            raise SchemeError("triangle identity fails at (r,s,t)=%s" % (tuple(int(x) for x in bad),))

    def verify_row_sums(self):
        """sum_t c[r,s,t] n_t = n_r n_s for all r, s."""
        nv = np.asarray(self.valencies, dtype=np.int64)
        lhs = self.c @ nv
        rhs = np.outer(nv, nv)
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise SchemeError("row-sum identity fails at (r,s)=%s" % (tuple(int(x) for x in bad),))


def compute_tensor(scheme: Scheme) -> IntersectionTensor:
    """Intersection numbers with exhaustive pair-independence verification.

    Counts for the representative pair of each relation are tallied first;
    a per-point vectorized histogram pass then compares every pair's counts
    against its relation's claim and raises NotCoherentError with a witness
    on the first row-major mismatch.
    """
    P = scheme.colors
    n, R = scheme.n, scheme.rank
    reps = [scheme.representative(t) for t in range(R)]
    claimed = np.zeros((R, R * R), dtype=np.int64)
    for t, (a, b) in enumerate(reps):
        codes = P[a, :] * R + P[:, b]
        claimed[t] = np.bincount(codes, minlength=R * R)
    offsets = np.arange(n, dtype=np.int64)[None, :] * (R * R)
    for a in range(n):
        # per gamma,beta: encode (color(a,gamma), color(gamma,beta)) with beta offset
        codes = P[a, :, None] * R + P
        hist = np.bincount((codes + offsets).ravel(), minlength=n * R * R)
        hist = hist.reshape(n, R * R)
        expect = claimed[P[a]]
        if not np.array_equal(hist, expect):
            rows = np.nonzero((hist != expect).any(axis=1))[0]
            b = int(rows[0])
            cell = int(np.nonzero(hist[b] != expect[b])[0][0])
            r, s = divmod(cell, R)
            t = int(P[a, b])
            raise NotCoherentError(r, s, t, reps[t], (a, b),
                                   int(expect[b, cell]), int(hist[b, cell]))
    tensor = claimed.reshape(R, R, R).transpose(1, 2, 0).copy()
    # claimed[t, r*R+s] = c_{rs}^t; reorder to c[r, s, t]
    tensor.setflags(write=False)
    valencies = tuple(int(tensor[s, scheme.star[s], 0]) for s in range(R))
    if valencies != scheme.valencies():
        raise SchemeError("valency mismatch between tensor and row counts")
    out = IntersectionTensor(c=tensor, valencies=valencies, star=scheme.star, n=n)
    out.verify_triangle()
    out.verify_row_sums()
    return out


def canonical_relabel(colors) -> Scheme:
    """Scheme with relations renumbered canonically.

    Relation 0 is the diagonal; the rest are ordered by (valency, smallest
    pair row-major).  Input must already partition into scheme relations.
    """
    P = np.asarray(colors, dtype=np.int64)
    n = P.shape[0]
    diag_color = int(P[0, 0])
    if not (np.diagonal(P) == diag_color).all():
        raise SchemeError("diagonal is not a single class")
    old = np.unique(P)
    first = {}
    flat = P.ravel()
    order = np.argsort(flat, kind="stable")
    seen_sorted = flat[order]
    starts = np.searchsorted(seen_sorted, old, side="left")
    for c, pos in zip(old, starts):
        first[int(c)] = int(order[pos])
    total = {int(c): int((P == c).sum()) for c in old}
    val = {c: total[c] // n for c in total}
    others = sorted((c for c in map(int, old) if c != diag_color),
                    key=lambda c: (val[c], first[c]))
    relabel = {diag_color: 0}
    for i, c in enumerate(others, start=1):
        relabel[c] = i
    lut = np.zeros(int(old.max()) + 1, dtype=np.int64)
    for c, v in relabel.items():
        lut[c] = v
    return Scheme(lut[P])


def partition_equal(first, second) -> bool:
    """True when two integer labelings of the same cells induce the same
    partition (labels may differ, the fibers must coincide)."""
    A = np.asarray(first, dtype=np.int64)
    B = np.asarray(second, dtype=np.int64)
    if A.shape != B.shape:
        return False
    ra = int(A.max()) + 1
    combo = A * (int(B.max()) + 1) + B
    return len(np.unique(combo)) == ra == len(np.unique(B))


def from_orbitals(group) -> Scheme:
    """Scheme of the 2-orbits of a transitive permutation group."""
    labels = group.orbitals()
    n = group.degree
    P = np.asarray(labels, dtype=np.int64).reshape(n, n)
    return canonical_relabel(P)


def wl_closure(colors) -> Scheme:
    """Coherent closure of an initial n x n pair coloring.

    Pre-splits classes by (diagonal?, color, transposed color) so the stable
    partition is star-closed, then refines by the exact multiset of color
    pairs over intermediate points until the class count stops growing.
    Raises SchemeError if the stable configuration is not homogeneous
    (cannot happen for vertex-transitive inputs).
    """
    M = np.asarray(colors)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise SchemeError("initial coloring must be a square matrix")
    if not np.issubdtype(M.dtype, np.integer):
        raise SchemeError("initial coloring must be integers")
    n = M.shape[0]
    M = M.astype(np.int64)
    base = int(M.max()) + 1
    eye = np.eye(n, dtype=np.int64)
    keys = (eye * (base * base)) + M * base + M.T
    _, P = np.unique(keys, return_inverse=True)
    P = P.reshape(n, n).astype(np.int64)
    R = int(P.max()) + 1
    while True:
        sig_ids: dict[tuple[int, bytes], int] = {}
        newP = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            V = P[a, :, None] * R + P
            V.sort(axis=0)
            row = P[a]
            cols = V.T.copy()
            for b in range(n):
                key = (int(row[b]), cols[b].tobytes())
                nid = sig_ids.get(key)
                if nid is None:
                    nid = len(sig_ids)
                    sig_ids[key] = nid
                newP[a, b] = nid
        newR = len(sig_ids)
        if newR == R:
            break
        P, R = newP, newR
    if len(np.unique(np.diagonal(P))) != 1:
        raise SchemeError("stable coloring is not homogeneous (diagonal splits)")
    return canonical_relabel(P)
