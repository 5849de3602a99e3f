"""Permutations on {0,...,n-1} and finitely generated permutation groups.

Composition is a right action throughout: (p * q)(x) = q(p(x)), so that
x^(p*q) = (x^p)^q.  Group order comes from a deterministic Schreier-Sims
stabilizer chain with base 0, 1, 2, ...
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class Permutation:
    """Immutable permutation stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("not a permutation of 0..%d: %r" % (len(imgs) - 1, imgs))
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        o = other.images
        return Permutation([o[i] for i in self.images])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def image_string(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse either an image list "[1,2,0]" or cycles "(0 1 2)(3 4)".

        Image lists carry their own degree; cycle notation needs `degree`
        unless every point up to the maximum moved one is meant.
        """
        text = text.strip()
        if text.startswith("["):
            body = text.strip("[]").strip()
            images = [int(t) for t in body.split(",")] if body else []
            if degree is not None and len(images) != degree:
                raise ValueError("image list has degree %d, expected %d" % (len(images), degree))
            return cls(images)
        if text == "()":
            if degree is None:
                raise ValueError("identity in cycle notation needs an explicit degree")
            return cls.identity(degree)
        cycles = []
        for part in re.findall(r"\(([^()]*)\)", text):
            pts = [int(t) for t in re.split(r"[,\s]+", part.strip()) if t]
            if len(pts) != len(set(pts)):
                raise ValueError("repeated point in cycle %r" % (part,))
            cycles.append(pts)
        if not cycles:
            raise ValueError("cannot parse permutation from %r" % (text,))
        top = max(max(c) for c in cycles) + 1
        deg = degree if degree is not None else top
        if top > deg:
            raise ValueError("cycle moves point %d beyond degree %d" % (top - 1, deg))
        return cls.from_cycles(cycles, deg)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return "Permutation(%s)" % (self.cycle_string(),)


class _ChainLevel:
    """One level of a stabilizer chain: a base point with its basic orbit."""

    __slots__ = ("base", "transversal", "gens")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.transversal: dict[int, tuple[int, ...]] = {base: tuple(range(degree))}
        self.gens: list[tuple[int, ...]] = []


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[i] for i in p)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class PermGroup:
    """Permutation group given by generators, with lazy stabilizer chain."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree %d != %d" % (g.degree, degree))
        self.degree = degree
        self.generators = [g for g in gens if not g.is_identity()]
        self._chain: list[_ChainLevel] | None = None
        self._order: int | None = None

    def orbit(self, point: int) -> set[int]:
        """Orbit of a point under the generated group (BFS, ascending gens)."""
        seen = {point}
        frontier = [point]
        gens = [g.images for g in self.generators]
        while frontier:
            nxt = []
            for x in frontier:
                for img in gens:
                    y = img[x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def orbits(self) -> list[list[int]]:
        """All point orbits, each sorted, ordered by smallest point."""
        seen = [False] * self.degree
        out = []
        for x in range(self.degree):
            if seen[x]:
                continue
            orb = sorted(self.orbit(x))
            for y in orb:
                seen[y] = True
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def orbitals(self) -> list[int]:
        """Class labels for the diagonal action on ordered pairs.

        Returns a flat row-major list of length degree**2; labels are
        assigned in BFS discovery order starting from pair (0, 0).
        Requires a transitive group.
        """
        if not self.is_transitive():
            raise ValueError("orbitals require a transitive group")
        n = self.degree
        labels = [-1] * (n * n)
        gens = [g.images for g in self.generators]
        cls = 0
        for start in range(n * n):
            if labels[start] != -1:
                continue
            labels[start] = cls
            frontier = [start]
            while frontier:
                nxt = []
                for code in frontier:
                    a, b = divmod(code, n)
                    for img in gens:
                        c = img[a] * n + img[b]
                        if labels[c] == -1:
                            labels[c] = cls
                            nxt.append(c)
                frontier = nxt
            cls += 1
        return labels

    # -- stabilizer chain ------------------------------------------------

    def _sift(self, p: tuple[int, ...], start: int = 0):
        """Factor p through the chain; return (residue, level it stuck at)."""
        chain = self._chain
        for lvl in range(start, len(chain)):
            level = chain[lvl]
            target = p[level.base]
            rep = level.transversal.get(target)
            if rep is None:
                return p, lvl
            p = _compose(p, _invert(rep))
        return p, len(chain)

    def _extend_orbit(self, lvl: int, new_gens: list[tuple[int, ...]]):
        """Grow level lvl's basic orbit; sift fresh Schreier generators."""
        chain = self._chain
        level = chain[lvl]
        level.gens.extend(new_gens)
        frontier = list(level.transversal)
        while frontier:
            nxt = []
            for x in frontier:
                rep = level.transversal[x]
                for g in level.gens:
                    y = g[x]
                    if y not in level.transversal:
                        level.transversal[y] = _compose(rep, g)
                        nxt.append(y)
                    else:
                        schreier = _compose(_compose(rep, g), _invert(level.transversal[y]))
                        self._add_strong(schreier, lvl + 1)
            frontier = nxt

    def _add_strong(self, p: tuple[int, ...], lvl: int):
        residue, stuck = self._sift(p, lvl)
        if all(i == j for i, j in enumerate(residue)):
            return
        chain = self._chain
        if stuck == len(chain):
            base = min(i for i, j in enumerate(residue) if i != j)
            chain.append(_ChainLevel(base, self.degree))
        self._extend_orbit(stuck, [residue])
        # the new strong generator also acts on the levels above its own
        for up in range(stuck - 1, lvl - 1, -1):
            self._extend_orbit(up, [residue])

    def _build_chain(self):
        if self._chain is not None:
            return
        self._chain = []
        for g in self.generators:
            self._add_strong(g.images, 0)

    def order(self) -> int:
        """Group order via the product of basic orbit lengths."""
        if self._order is None:
            self._build_chain()
            n = 1
            for level in self._chain:
                n *= len(level.transversal)
            self._order = n
        return self._order

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        self._build_chain()
        residue, _ = self._sift(p.images)
        return all(i == j for i, j in enumerate(residue))

    def __repr__(self) -> str:
        return "PermGroup(degree=%d, gens=%d)" % (self.degree, len(self.generators))


def group_order(generators: Sequence[Permutation], degree: int | None = None) -> int:
    return PermGroup(generators, degree).order()
