"""Frobenius specs: validation, indexing, lattices, sections, classification."""

import pytest

from pfscheme.catalog import (
    negation_spec,
    cyclic_unit_spec,
    field_cube_spec,
    double_prime_spec,
    mixed_spec,
)
from pfscheme.frobenius import (
    CyclicFactor,
    ElementaryAbelianFactor,
    FrobeniusError,
    FrobeniusSpec,
    build_frobenius,
    invariant_lattice,
    principal_sections,
    thm2_profile,
)
from pfscheme.scheme import from_orbitals
from pfscheme.spreads import scalar_spec


def test_cyclic_factor_rejects_non_units():
    with pytest.raises(FrobeniusError):
        CyclicFactor(9, (3,))
    with pytest.raises(FrobeniusError):
        CyclicFactor(1, (1,))
    assert CyclicFactor(9, (8,)).size == 9


def test_elementary_abelian_factor_validation():
    with pytest.raises(FrobeniusError):
        ElementaryAbelianFactor(4, 2, (((1, 0), (0, 1)),))
    with pytest.raises(FrobeniusError):
        ElementaryAbelianFactor(3, 2, (((1, 1), (1, 1)),))
    f = ElementaryAbelianFactor(3, 2, (((2, 0), (0, 2)),))
    assert f.size == 9


def test_spec_rejects_fixed_points():
    # 4 fixes 5 modulo 15 (4*5 = 20 = 5), so x -> 4x is not fixed point free
    spec = FrobeniusSpec((CyclicFactor(15, (4,)),), 2)
    with pytest.raises(FrobeniusError) as info:
        spec.validate()
    assert "fixes" in str(info.value)


def test_spec_rejects_wrong_complement_order():
    # x -> 2x mod 9 has order 6, not 3
    spec = FrobeniusSpec((CyclicFactor(9, (2,)),), 3)
    with pytest.raises(FrobeniusError):
        spec.validate()


def test_negation_spec_validates_for_odd_moduli():
    for m in (9, 15, 21, 25, 27, 33):
        spec = negation_spec(m)
        elems = spec.validate()
        assert len(elems) == 2


def test_element_index_round_trip_mixed_kernel():
    spec = mixed_spec(7, 2, 4)
    elems = spec.elements()
    assert len(elems) == spec.kernel_order == 7 * 16
    for i, h in enumerate(elems):
        assert spec.element_index(h) == i
    # addition agrees with per-part arithmetic
    a, b = elems[5], elems[23]
    s = spec.add(a, b)
    assert s[0] == (a[0] + b[0]) % 7
    assert s[1] == tuple((x + y) % 2 for x, y in zip(a[1], b[1]))
    assert spec.add(s, spec.neg(s)) == spec.identity_element()


def test_build_frobenius_order_and_rank():
    spec = negation_spec(9)
    G = build_frobenius(spec)
    assert G.order() == 18
    s = from_orbitals(G)
    assert s.n == 9
    assert s.rank == 1 + (9 - 1) // 2
    assert s.is_equivalenced() == 2

    spec = cyclic_unit_spec(65, 57)
    G = build_frobenius(spec)
    assert G.order() == 65 * 4
    s = from_orbitals(G)
    assert s.rank == 1 + 64 // 4
    assert s.is_equivalenced() == 4


def test_invariant_lattice_cyclic_is_divisor_lattice():
    lat = invariant_lattice(negation_spec(105))
    orders = sorted(s.order for s in lat.subgroups)
    assert orders == [1, 3, 5, 7, 15, 21, 35, 105]
    assert lat.d == 3
    assert lat.pi == (3, 5, 7)
    assert lat.chain_lengths_equal

    lat9 = invariant_lattice(negation_spec(9))
    assert [s.order for s in lat9.subgroups] == [1, 3, 9]
    assert lat9.d == 2
    assert lat9.pi == (3,)


def test_invariant_lattice_general_matches_cyclic_on_crt_split():
    # Z_45 as one cyclic factor vs Z_9 x Z_5: same kernel, same lattice shape
    one = invariant_lattice(negation_spec(45))
    spec = FrobeniusSpec((CyclicFactor(9, (8,)), CyclicFactor(5, (4,))), 2)
    two = invariant_lattice(spec)
    assert sorted(s.order for s in one.subgroups) == sorted(s.order for s in two.subgroups)
    assert one.d == two.d == 3
    assert one.pi == two.pi == (3, 5)


def test_invariant_lattice_elementary_abelian_negation():
    # (Z_3)^2 with -I invariant under every subgroup: 4 lines + trivial + full
    spec = FrobeniusSpec(
        (ElementaryAbelianFactor(3, 2, (((2, 0), (0, 2)),)),), 2)
    lat = invariant_lattice(spec)
    assert sorted(s.order for s in lat.subgroups) == [1, 3, 3, 3, 3, 9]
    assert lat.d == 2
    # two cyclic factors Z_3 x Z_3 with negation hit the general path too
    alt = FrobeniusSpec((CyclicFactor(3, (2,)), CyclicFactor(3, (2,))), 2)
    lat2 = invariant_lattice(alt)
    assert sorted(s.order for s in lat2.subgroups) == [1, 3, 3, 3, 3, 9]


def test_invariant_lattice_scalar_action_keeps_only_line_orbits():
    # scalars of order 4 on F_9^2: invariant subgroups are spanned by
    # F_9-lines closed under the scalar orbit
    spec = scalar_spec(9)
    lat = invariant_lattice(spec)
    assert lat.subgroups[0].order == 1
    assert lat.subgroups[-1].order == 81
    assert lat.d >= 2


def test_principal_sections_negation():
    secs = principal_sections(negation_spec(105))
    assert sorted(s.degree for s in secs) == [3, 5, 7]
    by_degree = {s.degree: s for s in secs}
    assert by_degree[3].rank == 2
    assert by_degree[5].rank == 3
    assert by_degree[7].rank == 4
    assert by_degree[3].two_transitive
    assert all(s.exponent == 1 for s in secs)

    secs9 = principal_sections(negation_spec(9))
    assert [s.degree for s in secs9] == [3, 3]
    assert all(s.rank == 2 for s in secs9)


def test_thm2_profile_frozen_examples():
    # |pi| = 3 leaves the table no matter what d is
    prof = thm2_profile(negation_spec(105))
    assert (len(prof.pi), prof.d) == (3, 3)
    assert not prof.in_table
    assert prof.verdict == "excluded"

    # d = 4 leaves the table even with one prime
    prof81 = thm2_profile(negation_spec(81))
    assert (len(prof81.pi), prof81.d) == (1, 4)
    assert prof81.verdict == "excluded"

    # (1, 2) stays open
    prof9 = thm2_profile(negation_spec(9))
    assert (len(prof9.pi), prof9.d) == (1, 2)
    assert prof9.verdict == "open"
    assert prof9.d3_cases == ()

    # full scalar group acts 2-transitively: no proper invariant subgroup
    full = FrobeniusSpec(
        (ElementaryAbelianFactor(3, 2, (((0, 1), (1, 1)),)),), 8)
    proffull = thm2_profile(full)
    assert proffull.primitive
    assert proffull.verdict == "primitive"


def test_thm2_profile_d3_one_prime_cube():
    # |H| = 7^3 = (6+1)^3 with k = 6: every section two-transitive of degree 7
    prof = thm2_profile(field_cube_spec(7, 6))
    assert prof.d == 3
    assert prof.in_table
    assert prof.d3_cases == ("one-prime-cube",)
    assert prof.verdict == "open"
    assert set(prof.section_degrees) == {7}
    assert set(prof.section_ranks) == {2}

    # same kernel with a smaller complement misses the case
    prof2 = thm2_profile(field_cube_spec(7, 3))
    assert prof2.d == 3
    assert prof2.d3_cases == ()
    assert prof2.verdict == "excluded"


def test_thm2_profile_d3_two_prime_double():
    # |H| = (k+1)^2 (2k+1) = 9 * 5 = 45 with k = 2: negation on F_3^2 x Z_5
    spec = FrobeniusSpec(
        (ElementaryAbelianFactor(3, 2, (((2, 0), (0, 2)),)),
         CyclicFactor(5, (4,))), 2)
    prof = thm2_profile(spec)
    assert prof.d == 3
    assert len(prof.pi) == 2
    assert prof.d3_cases == ("two-prime-double",)
    assert prof.verdict == "open"
    assert sorted(prof.section_degrees) == [3, 3, 5]

    # the square kernel (Z_3)^2 x (Z_5)^2 has d = 4 and leaves the table
    prof2 = thm2_profile(double_prime_spec(3, 5, 2))
    assert prof2.d == 4
    assert prof2.verdict == "excluded"


def test_spec_json_round_trip():
    for spec in (negation_spec(21), mixed_spec(7, 2, 4), scalar_spec(9)):
        again = FrobeniusSpec.from_json(spec.to_json())
        assert again == spec
        assert again.kernel_order == spec.kernel_order
