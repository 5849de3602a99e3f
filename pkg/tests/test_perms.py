"""Permutations, Schreier-Sims order, orbits, and orbitals on small groups."""

import pytest

from pfscheme.perms import Permutation, PermGroup, group_order


def test_permutation_compose_inverse():
    a = Permutation([1, 2, 0])
    b = Permutation([0, 2, 1])
    assert (a * a.inverse()).is_identity()
    assert (a.inverse() * a).is_identity()
    # composition acts left-to-right on points: (a*b)(x) == b(a(x))
    ab = a * b
    for x in range(3):
        assert ab(x) == b(a(x))


def test_permutation_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 1, 3])


def test_permutation_cycles_and_fixed_points():
    c = Permutation([1, 2, 3, 4, 0])
    assert sorted(map(len, c.cycles())) == [5]
    assert c.fixed_points() == []
    t = Permutation([1, 0, 2])
    assert (t * t).is_identity()
    assert t.fixed_points() == [2]


def test_group_order_symmetric_and_cyclic():
    # S_n from a transposition and an n-cycle
    for n in range(2, 8):
        cyc = Permutation([(i + 1) % n for i in range(n)])
        swap = Permutation([1, 0] + list(range(2, n)))
        G = PermGroup([cyc, swap], n)
        expected = 1
        for i in range(2, n + 1):
            expected *= i
        assert G.order() == expected
    # C_12
    cyc = Permutation([(i + 1) % 12 for i in range(12)])
    assert group_order([cyc], 12) == 12


def test_group_order_dihedral():
    for n in (3, 4, 5, 6, 9):
        rot = Permutation([(i + 1) % n for i in range(n)])
        ref = Permutation([(-i) % n for i in range(n)])
        G = PermGroup([rot, ref], n)
        assert G.order() == 2 * n


def test_membership_contains():
    n = 5
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    G = PermGroup([rot, ref], n)
    assert rot * rot * ref in G
    assert Permutation([1, 0, 2, 3, 4]) not in G


def test_orbits_partition_points():
    # two disjoint 3-cycles on 6 points
    g = Permutation([1, 2, 0, 4, 5, 3])
    G = PermGroup([g], 6)
    orbs = sorted(sorted(o) for o in G.orbits())
    assert orbs == [[0, 1, 2], [3, 4, 5]]


def test_orbitals_of_regular_cyclic_group():
    n = 7
    g = Permutation([(i + 1) % n for i in range(n)])
    G = PermGroup([g], n)
    labels = G.orbitals()
    # regular action: orbitals are the difference classes, n of them
    assert len(set(labels)) == n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert labels[((i + k) % n) * n + ((j + k) % n)] == labels[i * n + j]


def test_orbitals_count_matches_rank_of_frobenius_group():
    # AGL(1,5) on 5 points: x -> ax+b, 2-transitive, orbital rank 2
    pts = list(range(5))
    add = Permutation([(x + 1) % 5 for x in pts])
    mul = Permutation([(2 * x) % 5 for x in pts])
    G = PermGroup([add, mul], 5)
    assert G.order() == 20
    assert len(set(G.orbitals())) == 2


def test_membership_agrees_with_brute_force_closure():
    n = 6
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    G = PermGroup([rot, ref], n)
    # brute-force closure of the dihedral generators
    frontier = {rot.images, ref.images}
    closure = set(frontier)
    while frontier:
        nxt = set()
        for a in frontier:
            for b in (rot, ref):
                c = (Permutation(a) * b).images
                if c not in closure:
                    closure.add(c)
                    nxt.add(c)
        frontier = nxt
    assert len(closure) == 12 == G.order()
    for images in closure:
        assert Permutation(images) in G
    import itertools
    inside = sum(1 for p in itertools.permutations(range(n))
                 if Permutation(p) in G)
    assert inside == 12
