"""Algebraic isomorphisms, base-triple coordinates, induced maps, schurity."""

import numpy as np
import pytest

from pfscheme.algiso import (
    BaseTriple,
    RelationBijection,
    algebraic_automorphisms,
    base_coordinates,
    base_triples,
    find_algebraic_isomorphisms,
    induced_isomorphism,
    is_base_triple,
    schurity_via_base_triples,
)
from pfscheme.catalog import cyclic_unit_spec, negation_spec
from pfscheme.frobenius import build_frobenius
from pfscheme.parabolic import enumerate_parabolics, parabolic_closure
from pfscheme.scheme import Scheme, SchemeError, from_orbitals
from pfscheme.spreads import desarguesian_spread, hall_spread, spread_scheme


def frobenius_scheme(spec):
    return from_orbitals(build_frobenius(spec))


def z9():
    return frobenius_scheme(negation_spec(9))


def test_relation_bijection_validates():
    s = z9()
    ident = RelationBijection(s, s, tuple(range(s.rank)))
    assert ident.is_identity()
    assert ident.inverse().is_identity()
    # diagonal must stay fixed
    with pytest.raises(SchemeError):
        RelationBijection(s, s, (1, 0, 2, 3, 4))
    # swapping colors with different tensor behavior is rejected:
    # classes 1 (generator +-1) and 3 (subgroup +-3) are distinguishable
    with pytest.raises(SchemeError):
        RelationBijection(s, s, (0, 3, 2, 1, 4))


def test_algebraic_automorphisms_of_z9():
    s = z9()
    isos, truncated = algebraic_automorphisms(s)
    assert not truncated
    # multiplication by units modulo +-1 gives the three tensor symmetries
    assert len(isos) == 3
    assert any(iso.is_identity() for iso in isos)
    maps = {iso.mapping for iso in isos}
    # x -> 2x sends classes (+-1, +-2, +-3, +-4) to (+-2, +-4, +-3, +-1)
    assert (0, 2, 4, 3, 1) in maps
    isos1, truncated1 = algebraic_automorphisms(s, limit=1)
    assert len(isos1) == 1 and truncated1


def test_find_algebraic_isomorphisms_rejects_mismatched_shapes():
    a = z9()
    b = frobenius_scheme(negation_spec(15))
    isos, truncated = find_algebraic_isomorphisms(a, b)
    assert isos == [] and not truncated


def test_hall_desarguesian_tensors_agree():
    hall = spread_scheme(hall_spread(9))
    desarg = spread_scheme(desarguesian_spread(9))
    isos, _ = find_algebraic_isomorphisms(hall, desarg, limit=1)
    assert len(isos) == 1
    assert np.array_equal(hall.tensor().c, desarg.tensor().c)


def test_base_triples_and_predicate():
    s = z9()
    e = parabolic_closure(s, {3})
    triples = list(base_triples(s, e, transversal_only=False))
    assert triples
    for tr in triples[:50]:
        assert is_base_triple(s, e, tr.mu, tr.nu, tr.rho)
    # brute-force count: mu anything, nu in mu's class, rho outside
    count = 0
    for mu in range(9):
        for nu in range(9):
            for rho in range(9):
                if is_base_triple(s, e, mu, nu, rho):
                    count += 1
    assert len(triples) == count == 9 * 2 * 6
    transversal = list(base_triples(s, e, transversal_only=True))
    assert len(transversal) == 3 * 2 * 6


def test_base_coordinates_bijective_on_frobenius_scheme():
    s = z9()
    e = parabolic_closure(s, {3})
    tr = next(base_triples(s, e))
    f = base_coordinates(s, e, tr)
    assert f.bijective
    assert f.pair_count == 9
    assert len(f.point_of) == 9
    assert sorted(f.point_of.values()) == list(range(9))
    # coordinates are colors: x inside-agnostic, y switches on membership
    in_e = {0, 3}
    for alpha in range(9):
        assert f.x[alpha] == s.colors[tr.mu][alpha]
        expect = s.colors[tr.rho][alpha] if int(f.x[alpha]) in in_e \
            else s.colors[tr.nu][alpha]
        assert f.y[alpha] == expect


def test_base_coordinates_requires_base_triple():
    s = z9()
    e = parabolic_closure(s, {3})
    with pytest.raises(SchemeError):
        base_coordinates(s, e, BaseTriple(0, 0, 1))


def test_induced_isomorphism_identity():
    s = z9()
    ident = RelationBijection(s, s, tuple(range(s.rank)))
    res = induced_isomorphism(s, s, ident)
    assert res is not None
    g = res.g
    assert sorted(g) == list(range(9))
    for x in range(9):
        for y in range(9):
            assert s.colors[g[x]][g[y]] == s.colors[x][y]


def test_induced_isomorphism_nontrivial_color_map():
    s = z9()
    # x -> 2x induces the color map (0, 2, 4, 3, 1)
    psi = RelationBijection(s, s, (0, 2, 4, 3, 1))
    res = induced_isomorphism(s, s, psi)
    assert res is not None
    g = res.g
    for x in range(9):
        for y in range(9):
            assert s.colors[g[x]][g[y]] == psi[s.colors[x][y]]


def test_schurity_of_frobenius_schemes():
    res = schurity_via_base_triples(z9())
    assert res.schurian
    assert res.four_condition_passed
    assert res.group_order == 18
    assert all(res.relation_transitive)
    assert res.orbital_scheme_equal
    d = res.to_json_dict()
    assert d["schurian"] is True and d["group_order"] == 18

    res65 = schurity_via_base_triples(frobenius_scheme(cyclic_unit_spec(65, 57)))
    assert res65.schurian
    assert res65.group_order == 260


def test_schurity_bails_out_when_4condition_fails():
    hall = spread_scheme(hall_spread(9))
    res = schurity_via_base_triples(hall)
    assert not res.schurian
    assert not res.four_condition_passed
    assert res.group_order == 0
    assert "4-condition" in res.reason


def test_schurity_complete_scheme_shortcut():
    M = np.full((4, 4), 1, dtype=np.int64)
    np.fill_diagonal(M, 0)
    res = schurity_via_base_triples(Scheme(M))
    assert res.schurian
    assert res.group_order == 24
    assert res.orbital_scheme_equal
