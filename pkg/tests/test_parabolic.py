"""Parabolic lattice, divide check, indistinguishing number, separability."""

import numpy as np
import pytest

from pfscheme.catalog import (
    cyclic_unit_spec,
    double_prime_spec,
    field_cube_spec,
    negation_spec,
)
from pfscheme.frobenius import build_frobenius
from pfscheme.parabolic import (
    SeparabilityVerdict,
    _verdict_from_chains,
    divide_check,
    enumerate_parabolics,
    exhaustive_parabolics,
    indistinguishing_number,
    is_primitive,
    parabolic_closure,
    separability_verdict,
)
from pfscheme.scheme import Scheme, SchemeError, from_orbitals
from pfscheme.spreads import scalar_spec


def frobenius_scheme(spec):
    return from_orbitals(build_frobenius(spec))


def complete_scheme(n):
    M = np.full((n, n), 1, dtype=np.int64)
    np.fill_diagonal(M, 0)
    return Scheme(M)


def paley_13():
    n = 13
    squares = {x * x % n for x in range(1, n)}
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j:
                M[i][j] = 1 if (j - i) % n in squares else 2
    return Scheme(M)


def test_parabolic_closure_of_single_relation():
    s = frobenius_scheme(negation_spec(9))
    # the +-3 difference class generates the subgroup {0, 3, 6}
    e = parabolic_closure(s, {3})
    assert e.n_e == 3
    assert e.num_classes == 3
    assert e.relations == frozenset({0, 3})
    assert e.class_of[0] == e.class_of[3] == e.class_of[6]
    # the +-1 class generates everything
    full = parabolic_closure(s, {1})
    assert full.is_full()
    trivial = parabolic_closure(s, set())
    assert trivial.is_trivial()


def test_enumerate_matches_exhaustive_scan():
    for spec in (negation_spec(9), negation_spec(15), negation_spec(21)):
        s = frobenius_scheme(spec)
        fast = enumerate_parabolics(s)
        slow = exhaustive_parabolics(s)
        assert [e.key() for e in fast] == [e.key() for e in slow]
    s45 = frobenius_scheme(negation_spec(45))
    assert sorted(e.n_e for e in enumerate_parabolics(s45)) == [1, 3, 5, 9, 15, 45]


def test_is_primitive():
    assert is_primitive(complete_scheme(5))
    assert is_primitive(paley_13())
    assert not is_primitive(frobenius_scheme(negation_spec(9)))


def test_divide_check_records():
    s = frobenius_scheme(negation_spec(9))
    records = divide_check(s)
    assert len(records) == 3
    assert all(r.ok for r in records)
    pairs = sorted((r.n_lower, r.n_upper) for r in records)
    assert pairs == [(1, 3), (1, 9), (3, 9)]
    assert all(r.quotient == r.n_upper // r.n_lower for r in records)


def test_divide_check_needs_equivalenced():
    # Z_12 with negation: class {6} has valency 1, the rest valency 2
    n = 12
    label = {}
    M = np.zeros((n, n), dtype=np.int64)
    nxt = 0
    for d in range(n):
        key = min(d, n - d)
        if key not in label:
            label[key] = nxt
            nxt += 1
        for i in range(n):
            M[i][(i + d) % n] = label[key]
    s = Scheme(M)
    with pytest.raises(SchemeError):
        divide_check(s)


def test_indistinguishing_number_of_negation_schemes():
    # c(S) = k - 1 = 1 for the negation action
    for m in (9, 15, 25):
        s = frobenius_scheme(negation_spec(m))
        assert indistinguishing_number(s) == 1
    # order-4 action on Z_65: c(S) = k - 1 = 3
    s65 = frobenius_scheme(cyclic_unit_spec(65, 57))
    assert indistinguishing_number(s65) == 3


def test_separability_bound_fires_for_negation():
    v = separability_verdict(negation_spec(9))
    assert v.separable
    assert v.reason == "bound"
    assert v.witness == (9, 6)
    assert (v.pi_count, v.d) == (1, 2)
    # same verdict through the scheme route
    vs = separability_verdict(frobenius_scheme(negation_spec(9)))
    assert vs.separable and vs.reason == "bound"
    assert (vs.pi_count, vs.d) == (1, 2)


def test_separability_scheme_route_annotates_d3_case():
    # n = 45 = (k+1)^2 (2k+1) with k = 2; separable by the bound, but the
    # d = 3 parameter case is still recorded
    s = frobenius_scheme(negation_spec(45))
    v = separability_verdict(s)
    assert v.separable and v.reason == "bound"
    assert v.d == 3
    assert v.cases == ("two-prime-double",)


def test_separability_complete_shortcut():
    v = separability_verdict(complete_scheme(7))
    assert v.separable
    assert v.reason == "complete"
    assert (v.n, v.k) == (7, 6)


def test_separability_raises_on_primitive():
    with pytest.raises(SchemeError):
        separability_verdict(paley_13())
    with pytest.raises(ValueError):
        # full scalar group: no nontrivial invariant subgroup
        separability_verdict(scalar_spec(3, dim=1))


def test_separability_undecided_cases():
    v = separability_verdict(cyclic_unit_spec(65, 57))
    assert not v.separable
    assert v.undecided
    assert (v.pi_count, v.d) == (2, 2)
    assert v.cases == ()

    v = separability_verdict(scalar_spec(4))
    assert not v.separable
    assert (v.pi_count, v.d) == (1, 2)

    v = separability_verdict(field_cube_spec(7, 6))
    assert not v.separable
    assert (v.pi_count, v.d) == (1, 3)
    assert v.cases == ("one-prime-cube",)


def test_separability_undecided_two_prime_case_first_instance():
    # smallest two-prime parameter set surviving the bound: k = 12, so
    # |H| = 13^2 * 25 = 4225 <= 3 * 12 * 121 = 4356
    spec = double_prime_spec(13, 5, 12)
    assert spec.kernel_order == 4225
    v = separability_verdict(spec)
    assert not v.separable
    assert (v.pi_count, v.d) == (2, 3)
    assert v.cases == ("two-prime-double",)


def test_verdict_chain_arithmetic_long_chain_branch():
    # three nested nontrivial members below the bound
    sizes = [2, 10, 50]
    incl = np.array([[False, True, True],
                     [False, False, True],
                     [False, False, False]])
    v = _verdict_from_chains(100, 4, sizes, incl, 4, ())
    assert v.separable
    assert v.reason == "long-chain"
    assert v.witness == (1, 2, 10, 50, 100)


def test_verdict_chain_arithmetic_multiset_branch():
    sizes = [5, 20]
    incl = np.array([[False, True], [False, False]])
    v = _verdict_from_chains(100, 4, sizes, incl, 3, ())
    assert v.separable
    assert v.reason == "multiset"
    assert v.witness[:2] == (5, 20)
    assert tuple(sorted(v.witness[2:])) == (3, 4, 4)


def test_verdict_chain_arithmetic_allowed_multiset_is_undecided():
    sizes = [6, 36]
    incl = np.array([[False, True], [False, False]])
    v = _verdict_from_chains(216, 5, sizes, incl, 3, ())
    assert not v.separable
    assert v.reason is None


def test_verdict_json_shape():
    v = separability_verdict(negation_spec(9))
    d = v.to_json_dict()
    assert d["verdict"] == "separable"
    assert d["reason"] == "bound"
    assert d["witness"] == [9, 6]
    u = SeparabilityVerdict(False, 65, 4, pi_count=2, d=2)
    assert u.to_json_dict()["verdict"] == "undecided"
