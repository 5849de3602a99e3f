"""Frobenius groups H x| K presented by their action data.

The kernel H is a direct product of cyclic and elementary abelian factors;
the complement K is given by its action on each factor (a unit multiplier
for cyclic factors, an invertible matrix for elementary abelian ones, one
entry per complement generator).  Validation closes the complement to
exactly `complement_order` elements and certifies that every nontrivial
one fixes no nonzero kernel element; `build_frobenius` then returns the
permutation group on H generated by translations and the complement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .arith import big_omega, divisors, factorize, is_prime, mult_order, prime_divisors, prime_power
from .perms import PermGroup, Permutation


class FrobeniusError(ValueError):
    """Spec fails to define a Frobenius group; carries a witness when one exists.

    For a fixed-point violation, `witness` is (kappa, h): the complement
    element (as its per-factor action tuple) and the nonzero kernel element
    it fixes (as a point index).
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class CyclicFactor:
    """Z_m kernel factor; units[j] is the action of complement generator j."""

    modulus: int
    units: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise FrobeniusError("cyclic factor needs modulus >= 2, got %r" % (self.modulus,))
        object.__setattr__(self, "units", tuple(int(u) % self.modulus for u in self.units))
        for u in self.units:
            if gcd(u, self.modulus) != 1:
                raise FrobeniusError("unit %d is not invertible modulo %d" % (u, self.modulus))

    @property
    def size(self) -> int:
        return self.modulus


@dataclass(frozen=True)
class ElementaryAbelianFactor:
    """(Z_p)^dim kernel factor; matrices[j] acts on row vectors as v -> v M."""

    p: int
    dim: int
    matrices: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise FrobeniusError("elementary abelian factor needs prime p, got %r" % (self.p,))
        if self.dim < 1:
            raise FrobeniusError("elementary abelian factor needs dim >= 1")
        mats = []
        for M in self.matrices:
            M = tuple(tuple(int(x) % self.p for x in row) for row in M)
            if len(M) != self.dim or any(len(row) != self.dim for row in M):
                raise FrobeniusError("matrix is not %d x %d" % (self.dim, self.dim))
            if _det_mod(M, self.p) == 0:
                raise FrobeniusError("complement matrix is singular modulo %d" % self.p)
            mats.append(M)
        object.__setattr__(self, "matrices", tuple(mats))

    @property
    def size(self) -> int:
        return self.p**self.dim


def _det_mod(M, p: int) -> int:
    A = [list(row) for row in M]
    n = len(A)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det = det * A[col][col] % p
        inv = pow(A[col][col], p - 2, p)
        for r in range(col + 1, n):
            f = A[r][col] * inv % p
            if f:
                for c in range(col, n):
                    A[r][c] = (A[r][c] - f * A[col][c]) % p
    return det % p


def _left_fixed_vector(M, p: int):
    """Nonzero v with v M = v, or None.  Solves v (M - I) = 0."""
    n = len(M)
    A = [[(M[r][c] - (1 if r == c else 0)) % p for r in range(n)] for c in range(n)]
    # columns of A are rows of (M - I); kernel of A^T acting on the right
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if A[r][col] % p), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = pow(A[row][col], p - 2, p)
        A[row] = [x * inv % p for x in A[row]]
        for r in range(n):
            if r != row and A[r][col]:
                f = A[r][col]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    v = [0] * n
    v[free[0]] = 1
    for r, col in enumerate(pivots):
        v[col] = (-A[r][free[0]]) % p
    return tuple(v)


@dataclass(frozen=True)
class FrobeniusSpec:
    """Kernel factors plus the complement's order and per-factor actions."""

    kernel_factors: tuple
    complement_order: int

    def __post_init__(self):
        if not self.kernel_factors:
            raise FrobeniusError("at least one kernel factor is required")
        if self.complement_order < 2:
            raise FrobeniusError("complement must be nontrivial (order >= 2)")
        gens = {len(f.units) if isinstance(f, CyclicFactor) else len(f.matrices)
                for f in self.kernel_factors}
        if len(gens) != 1 or gens == {0}:
            raise FrobeniusError("every factor must list one action per complement generator")
        object.__setattr__(self, "kernel_factors", tuple(self.kernel_factors))

    # -- sizes and elements ----------------------------------------------

    @property
    def kernel_order(self) -> int:
        n = 1
        for f in self.kernel_factors:
            n *= f.size
        return n

    @property
    def num_generators(self) -> int:
        f = self.kernel_factors[0]
        return len(f.units) if isinstance(f, CyclicFactor) else len(f.matrices)

    def identity_element(self) -> tuple:
        out = []
        for f in self.kernel_factors:
            out.append(0 if isinstance(f, CyclicFactor) else (0,) * f.dim)
        return tuple(out)

    def elements(self):
        """All kernel elements in index order."""
        def expand(i):
            out = []
            for f in self.kernel_factors:
                if isinstance(f, CyclicFactor):
                    out.append(i % f.modulus)
                    i //= f.modulus
                else:
                    v = []
                    for _ in range(f.dim):
                        v.append(i % f.p)
                        i //= f.p
                    out.append(tuple(v))
            return tuple(out)
        return [expand(i) for i in range(self.kernel_order)]

    def element_index(self, h: tuple) -> int:
        idx = 0
        stride = 1
        for f, val in zip(self.kernel_factors, h):
            if isinstance(f, CyclicFactor):
                idx += (val % f.modulus) * stride
                stride *= f.modulus
            else:
                for d in range(f.dim):
                    idx += (val[d] % f.p) * stride * f.p**d
                stride *= f.size
        return idx

    def add(self, h1: tuple, h2: tuple) -> tuple:
        out = []
        for f, a, b in zip(self.kernel_factors, h1, h2):
            if isinstance(f, CyclicFactor):
                out.append((a + b) % f.modulus)
            else:
                out.append(tuple((x + y) % f.p for x, y in zip(a, b)))
        return tuple(out)

    def neg(self, h: tuple) -> tuple:
        out = []
        for f, a in zip(self.kernel_factors, h):
            if isinstance(f, CyclicFactor):
                out.append(-a % f.modulus)
            else:
                out.append(tuple(-x % f.p for x in a))
        return tuple(out)

    # -- complement -------------------------------------------------------

    def generator_actions(self) -> list[tuple]:
        """Complement generators as per-factor action tuples."""
        out = []
        for j in range(self.num_generators):
            parts = []
            for f in self.kernel_factors:
                parts.append(f.units[j] if isinstance(f, CyclicFactor) else f.matrices[j])
            out.append(tuple(parts))
        return out

    def _compose(self, x: tuple, y: tuple) -> tuple:
        parts = []
        for f, a, b in zip(self.kernel_factors, x, y):
            if isinstance(f, CyclicFactor):
                parts.append(a * b % f.modulus)
            else:
                p = f.p
                parts.append(tuple(tuple(sum(a[r][i] * b[i][c] for i in range(f.dim)) % p
                                         for c in range(f.dim)) for r in range(f.dim)))
        return tuple(parts)

    def _identity_action(self) -> tuple:
        parts = []
        for f in self.kernel_factors:
            if isinstance(f, CyclicFactor):
                parts.append(1)
            else:
                parts.append(tuple(tuple(1 if r == c else 0 for c in range(f.dim))
                                   for r in range(f.dim)))
        return tuple(parts)

    def apply(self, action: tuple, h: tuple) -> tuple:
        parts = []
        for f, a, v in zip(self.kernel_factors, action, h):
            if isinstance(f, CyclicFactor):
                parts.append(v * a % f.modulus)
            else:
                parts.append(tuple(sum(v[r] * a[r][c] for r in range(f.dim)) % f.p
                                   for c in range(f.dim)))
        return tuple(parts)

    def complement_elements(self) -> list[tuple]:
        """Close the generators; error if the order is not complement_order."""
        ident = self._identity_action()
        gens = self.generator_actions()
        seen = {ident}
        frontier = [ident]
        cap = self.complement_order
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self._compose(x, g)
                    if y not in seen:
                        if len(seen) >= cap:
                            raise FrobeniusError(
                                "complement closes to more than %d elements" % cap)
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(seen) != self.complement_order:
            raise FrobeniusError("complement has order %d, spec says %d"
                                 % (len(seen), self.complement_order))
        return sorted(seen)

    def validate(self) -> list[tuple]:
        """Full Frobenius validation; returns the complement elements.

        Fixed-point-freeness is checked per factor: a complement element
        with a nonzero fixed point in some factor fixes a nonzero kernel
        element, and conversely.
        """
        elements = self.complement_elements()
        ident = self._identity_action()
        for kappa in elements:
            if kappa == ident:
                continue
            for fi, (f, a) in enumerate(zip(self.kernel_factors, kappa)):
                h_part = None
                if isinstance(f, CyclicFactor):
                    g = gcd(a - 1, f.modulus)
                    if g > 1:
                        h_part = f.modulus // g
                else:
                    v = _left_fixed_vector(a, f.p)
                    if v is not None:
                        h_part = v
                if h_part is not None:
                    h = list(self.identity_element())
                    h[fi] = h_part
                    idx = self.element_index(tuple(h))
                    raise FrobeniusError(
                        "complement element %r fixes nonzero kernel element %r (index %d)"
                        % (kappa, tuple(h), idx), witness=(kappa, idx))
        return elements

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        kernel = []
        for f in self.kernel_factors:
            if isinstance(f, CyclicFactor):
                kernel.append({"cyclic": f.modulus, "units": list(f.units)})
            else:
                kernel.append({"elem_abelian": [f.p, f.dim],
                               "matrices": [[list(row) for row in M] for M in f.matrices]})
        return {"kernel": kernel, "complement_order": self.complement_order}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, d: dict) -> "FrobeniusSpec":
        if "kernel" not in d or "complement_order" not in d:
            raise FrobeniusError("spec JSON needs 'kernel' and 'complement_order'")
        factors = []
        for fd in d["kernel"]:
            if "cyclic" in fd:
                factors.append(CyclicFactor(fd["cyclic"], tuple(fd.get("units", ()))))
            elif "elem_abelian" in fd:
                p, dim = fd["elem_abelian"]
                mats = tuple(tuple(tuple(row) for row in M) for M in fd.get("matrices", ()))
                factors.append(ElementaryAbelianFactor(p, dim, mats))
            else:
                raise FrobeniusError("kernel factor needs 'cyclic' or 'elem_abelian': %r" % (fd,))
        return cls(tuple(factors), int(d["complement_order"]))

    @classmethod
    def from_json(cls, text: str) -> "FrobeniusSpec":
        return cls.from_json_dict(json.loads(text))


def build_frobenius(spec: FrobeniusSpec) -> PermGroup:
    """Permutation group on the kernel: translations + complement action.

    Degree is |H|; the order is |H| * k, forced by validation (the
    complement closes to exactly k elements, all acting without nonzero
    fixed points, hence faithfully and with trivial two-point stabilizers).
    """
    complement = spec.validate()
    elements = spec.elements()
    index = {h: i for i, h in enumerate(elements)}
    gens = []
    for fi, f in enumerate(spec.kernel_factors):
        basis = []
        if isinstance(f, CyclicFactor):
            basis.append(1)
        else:
            basis.extend(tuple(1 if d == j else 0 for d in range(f.dim)) for j in range(f.dim))
        for b in basis:
            step = list(spec.identity_element())
            step[fi] = b
            step = tuple(step)
            gens.append(Permutation([index[spec.add(h, step)] for h in elements]))
    for kappa in _generator_set(spec, complement):
        gens.append(Permutation([index[spec.apply(kappa, h)] for h in elements]))
    return PermGroup(gens, degree=len(elements))


def _generator_set(spec: FrobeniusSpec, complement: list[tuple]) -> list[tuple]:
    ident = spec._identity_action()
    return [g for g in spec.generator_actions() if g != ident]


# -- invariant subgroup lattice -----------------------------------------


@dataclass(frozen=True)
class Subgroup:
    order: int
    elements: frozenset


@dataclass
class InvariantLattice:
    """Complement-invariant subgroups of the kernel, ordered by inclusion."""

    spec: FrobeniusSpec
    subgroups: list[Subgroup]          # sorted by (order, min new element)
    inclusion: np.ndarray              # strict inclusion, bool matrix
    d: int                             # common length of maximal chains
    pi: tuple[int, ...]                # prime divisors of |H|
    chain_lengths_equal: bool = field(default=True)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    def covers(self) -> np.ndarray:
        M = self.inclusion
        two_step = (M.astype(np.int64) @ M.astype(np.int64)) > 0
        return M & ~two_step

    def nontrivial(self) -> list[int]:
        return [i for i, s in enumerate(self.subgroups)
                if 1 < s.order < self.subgroups[self.top].order]

    def maximal_chain(self) -> list[int]:
        """Deterministic maximal chain bottom..top (smallest cover first)."""
        cov = self.covers()
        chain = [self.bottom]
        while chain[-1] != self.top:
            ups = np.nonzero(cov[chain[-1]])[0]
            nxt = min(ups, key=lambda i: (self.subgroups[i].order,
                                          sorted(self.subgroups[i].elements)))
            chain.append(int(nxt))
        return chain


def invariant_lattice(spec: FrobeniusSpec) -> InvariantLattice:
    """All complement-invariant subgroups of the kernel.

    Cyclic kernels (pairwise coprime cyclic factors) use the divisor
    lattice directly; otherwise minimal invariant subgroups are generated
    from complement-orbit closures and saturated under join.
    """
    spec.validate()
    n = spec.kernel_order
    if _is_cyclic(spec):
        groups = _cyclic_subgroups(spec)
    else:
        groups = _general_subgroups(spec)
    groups.sort(key=lambda s: (len(s), sorted(s)))
    subs = [Subgroup(len(s), s) for s in groups]
    m = len(subs)
    incl = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(m):
            if i != j and subs[i].order < subs[j].order and subs[i].elements <= subs[j].elements:
                incl[i, j] = True
    # longest and shortest maximal chain lengths by DP in order of size
    longest = np.zeros(m, dtype=np.int64)
    shortest = np.zeros(m, dtype=np.int64)
    cov = incl & ~((incl.astype(np.int64) @ incl.astype(np.int64)) > 0)
    order_idx = sorted(range(m), key=lambda i: subs[i].order)
    for i in order_idx:
        preds = np.nonzero(cov[:, i])[0]
        if len(preds):
            longest[i] = max(longest[p] for p in preds) + 1
            shortest[i] = min(shortest[p] for p in preds) + 1
    top = order_idx[-1]
    d = int(longest[top])
    equal = bool(longest[top] == shortest[top])
    return InvariantLattice(spec=spec, subgroups=subs, inclusion=incl, d=d,
                            pi=prime_divisors(n), chain_lengths_equal=equal)


def _is_cyclic(spec: FrobeniusSpec) -> bool:
    mods = []
    for f in spec.kernel_factors:
        if isinstance(f, ElementaryAbelianFactor):
            if f.dim > 1 or f.p in mods:
                return False
            mods.append(f.p)
        else:
            mods.append(f.modulus)
    for i in range(len(mods)):
        for j in range(i + 1, len(mods)):
            if gcd(mods[i], mods[j]) != 1:
                return False
    return True


def _cyclic_subgroups(spec: FrobeniusSpec) -> list[frozenset]:
    """Divisor lattice: every subgroup of a cyclic group is invariant."""
    n = spec.kernel_order
    elements = spec.elements()
    orders = []
    for h in elements:
        o = 1
        for f, v in zip(spec.kernel_factors, h):
            if isinstance(f, CyclicFactor):
                m = f.modulus
                o_part = m // gcd(v, m)
            else:
                o_part = f.p if any(v) else 1
            o = o * o_part // gcd(o, o_part)
        orders.append(o)
    return [frozenset(i for i, o in enumerate(orders) if D % o == 0)
            for D in divisors(n)]


def _general_subgroups(spec: FrobeniusSpec) -> list[frozenset]:
    n = spec.kernel_order
    elements = spec.elements()
    index = {h: i for i, h in enumerate(elements)}
    complement = spec.complement_elements()
    vadd = _vector_adder(spec)
    kappa_idx = [[index[spec.apply(kappa, h)] for h in elements] for kappa in complement]

    def orbit(i: int) -> list[int]:
        return sorted({km[i] for km in kappa_idx})

    def close(gen_indices, cap=None) -> frozenset:
        """Additive closure of a complement-invariant generating set.

        A proper subgroup has order at most n/2, so exceeding the cap
        proves the closure is the whole kernel.
        """
        gens = np.unique(np.asarray(list(gen_indices), dtype=np.int64))
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        seen[gens] = True
        frontier = gens
        while frontier.size:
            nxt = np.unique(vadd(frontier[:, None], gens[None, :]))
            nxt = nxt[~seen[nxt]]
            if nxt.size == 0:
                break
            seen[nxt] = True
            if cap is not None and int(seen.sum()) > cap:
                return frozenset(range(n))
            frontier = nxt
        return frozenset(np.flatnonzero(seen).tolist())

    half = n // 2
    minimal: dict[frozenset, list[int]] = {}
    covered = [False] * n
    for i in range(1, n):
        if covered[i]:
            continue
        orb = orbit(i)
        for j in orb:
            covered[j] = True
        sub = close(orb, cap=half)
        if sub not in minimal:
            minimal[sub] = orb
    found: dict[frozenset, list[int]] = {frozenset([0]): [], frozenset(range(n)): [0]}
    for s, gens in minimal.items():
        found.setdefault(s, gens)
    divs = divisors(n)
    full = frozenset(range(n))

    def join(sub, other, gens, ogens) -> frozenset:
        """Join of two incomparable members, avoiding the generic closure
        when the order arithmetic already pins the answer down.

        The join's order divides n, is a common multiple of both orders,
        and strictly exceeds each of them.  If the smallest feasible order
        exceeds n/2 the join is the whole kernel; if a known subgroup of
        exactly that order contains the union it is the join (uniqueness:
        two distinct candidates would intersect in a smaller one).
        """
        la, lb = len(sub), len(other)
        l = la * lb // gcd(la, lb)
        floor = min(d for d in divs if d % l == 0 and d > max(la, lb))
        if floor > half:
            return full
        for s in found:
            if len(s) == floor and sub <= s and other <= s:
                return s
        return close(gens + ogens, cap=half)

    work = list(minimal.items())
    while work:
        sub, gens = work.pop(0)
        for other, ogens in list(found.items()):
            if other <= sub or sub <= other:
                continue
            joined = join(sub, other, gens, ogens)
            if joined not in found:
                found[joined] = sorted(set(gens + ogens))
                work.append((joined, found[joined]))
    return list(found)


def _vector_adder(spec: FrobeniusSpec):
    """Vectorized kernel addition on element indices.

    Element indices are little-endian mixed-radix: each factor contributes
    one digit of radix |factor|, and inside an elementary abelian factor
    the digit is itself little-endian base p.  Addition is digitwise, so
    it vectorizes as masked modular arithmetic on index arrays.
    """
    strides = []
    stride = 1
    for f in spec.kernel_factors:
        strides.append(stride)
        stride *= f.size

    def add(xs, ys):
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        out = np.zeros(np.broadcast(xs, ys).shape, dtype=np.int64)
        for f, st in zip(spec.kernel_factors, strides):
            a = (xs // st) % f.size
            b = (ys // st) % f.size
            if isinstance(f, CyclicFactor):
                out += ((a + b) % f.modulus) * st
            else:
                pj = 1
                for _ in range(f.dim):
                    out += ((a // pj + b // pj) % f.p) * pj * st
                    pj *= f.p
        return out

    return add


# -- principal sections -------------------------------------------------


@dataclass(frozen=True)
class PrincipalSection:
    """Quotient of consecutive members of a maximal invariant chain."""

    degree: int
    orbit_count: int          # complement orbits on the nonzero cosets
    prime: int
    exponent: int

    @property
    def rank(self) -> int:
        return 1 + self.orbit_count

    @property
    def two_transitive(self) -> bool:
        return self.rank == 2


def principal_sections(spec: FrobeniusSpec,
                       lattice: InvariantLattice | None = None) -> list[PrincipalSection]:
    """Sections along the deterministic maximal chain of the lattice.

    Each degree must be a prime power (principal sections are primitive of
    prime power degree); a violation raises, since it would contradict the
    fixed-point-free action.
    """
    if lattice is None:
        lattice = invariant_lattice(spec)
    elements = spec.elements()
    index = {h: i for i, h in enumerate(elements)}
    complement = spec.complement_elements()
    kappa_idx = [[index[spec.apply(kappa, h)] for h in elements] for kappa in complement]
    chain = lattice.maximal_chain()
    out = []
    for lo_i, hi_i in zip(chain, chain[1:]):
        lo = sorted(lattice.subgroups[lo_i].elements)
        hi = sorted(lattice.subgroups[hi_i].elements)
        degree = len(hi) // len(lo)
        rep = {}
        reps = []
        for h in hi:
            if h in rep:
                continue
            coset = sorted(index[spec.add(elements[h], elements[l])] for l in lo)
            r = coset[0]
            for c in coset:
                rep[c] = r
            reps.append(r)
        zero_rep = rep[0]
        seen = set()
        orbits = 0
        for r in reps:
            if r == zero_rep or r in seen:
                continue
            orbits += 1
            frontier = [r]
            seen.add(r)
            while frontier:
                nxt = []
                for x in frontier:
                    for km in kappa_idx:
                        y = rep[km[x]]
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
        pp = prime_power(degree)
        if pp is None:
            raise FrobeniusError("principal section of degree %d is not a prime power" % degree)
        out.append(PrincipalSection(degree=degree, orbit_count=orbits,
                                    prime=pp[0], exponent=pp[1]))
    return out


# -- properness profile (arithmetic classification) -----------------------


@dataclass(frozen=True)
class ClassificationProfile:
    """Arithmetic profile deciding whether proper pseudofrobenius schemes
    are excluded for this group's schemes."""

    n: int
    k: int
    pi: tuple[int, ...]
    d: int
    primitive: bool
    in_table: bool                     # (|pi|, d) in {1,2} x {2,3}
    section_degrees: tuple[int, ...]
    section_ranks: tuple[int, ...]
    d3_cases: tuple[str, ...]          # matching d=3 case labels, if any
    verdict: str                       # "excluded" | "open" | "primitive"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "pi": list(self.pi), "d": self.d,
            "primitive": self.primitive, "in_table": self.in_table,
            "section_degrees": list(self.section_degrees),
            "section_ranks": list(self.section_ranks),
            "d3_cases": list(self.d3_cases), "verdict": self.verdict,
        }


def thm2_profile(spec: FrobeniusSpec,
                 lattice: InvariantLattice | None = None) -> ClassificationProfile:
    """(|pi|, d) table membership plus the d = 3 parameter cases.

    d = 3 admits proper schemes only when |H| = (k+1)^3 with every section
    two-transitive of degree k+1 (one prime), or |H| = (k+1)^2 (2k+1) with
    k+1 and 2k+1 prime powers and one rank-3 section of degree 2k+1 (two
    primes).  Anything else in the table stays "open" only for d = 2.
    """
    if lattice is None:
        lattice = invariant_lattice(spec)
    n = spec.kernel_order
    k = spec.complement_order
    d = lattice.d
    pi = lattice.pi
    if d <= 1:
        return ClassificationProfile(
            n=n, k=k, pi=pi, d=d, primitive=True, in_table=False,
            section_degrees=(), section_ranks=(), d3_cases=(),
            verdict="primitive")
    sections = principal_sections(spec, lattice)
    degrees = tuple(s.degree for s in sections)
    ranks = tuple(s.rank for s in sections)
    in_table = len(pi) in (1, 2) and d in (2, 3)
    cases: list[str] = []
    if d == 3 and in_table:
        if (len(pi) == 1 and n == (k + 1) ** 3 and prime_power(k + 1)
                and all(s.degree == k + 1 and s.rank == 2 for s in sections)):
            cases.append("one-prime-cube")
        if (len(pi) == 2 and n == (k + 1) ** 2 * (2 * k + 1)
                and prime_power(k + 1) and prime_power(2 * k + 1)
                and sorted(degrees) == sorted([k + 1, k + 1, 2 * k + 1])
                and all((s.degree == k + 1 and s.rank == 2)
                        or (s.degree == 2 * k + 1 and s.rank == 3) for s in sections)):
            cases.append("two-prime-double")
    if not in_table:
        verdict = "excluded"
    elif d == 3 and not cases:
        verdict = "excluded"
    else:
        verdict = "open"
    return ClassificationProfile(
        n=n, k=k, pi=pi, d=d, primitive=False, in_table=in_table,
        section_degrees=degrees, section_ranks=ranks,
        d3_cases=tuple(cases), verdict=verdict)
