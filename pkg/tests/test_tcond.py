"""t-condition checks: t = 3 always passes on coherent input, t = 4 separates."""

import numpy as np
import pytest

from pfscheme.catalog import negation_spec
from pfscheme.frobenius import build_frobenius
from pfscheme.scheme import Scheme, from_orbitals
from pfscheme.spreads import desarguesian_spread, hall_spread, spread_scheme
from pfscheme.tcond import check_t_condition, four_condition_frobenius_verdict


def srg_scheme_from_adjacency(A):
    n = len(A)
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j:
                M[i][j] = 1 if A[i][j] else 2
    return Scheme(M)


def rook_4x4():
    """Line graph of K_{4,4}: srg(16, 6, 2, 2)."""
    A = np.zeros((16, 16), dtype=np.int64)
    for i in range(16):
        for j in range(16):
            if i != j and (i // 4 == j // 4 or i % 4 == j % 4):
                A[i][j] = 1
    return srg_scheme_from_adjacency(A)


def shrikhande():
    """Cayley graph of Z_4 x Z_4 with connection {+-(1,0), +-(0,1), +-(1,1)}:
    srg(16, 6, 2, 2), same parameters as the rook graph."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    A = np.zeros((16, 16), dtype=np.int64)
    for x in range(16):
        for y in range(16):
            d = ((y // 4 - x // 4) % 4, (y % 4 - x % 4) % 4)
            if d in conn:
                A[x][y] = 1
    return srg_scheme_from_adjacency(A)


def test_t3_restates_coherence():
    for s in (rook_4x4(), shrikhande(),
              from_orbitals(build_frobenius(negation_spec(9)))):
        s.tensor()
        rep = check_t_condition(s, 3)
        assert rep.passed
        assert rep.witness is None
        assert rep.pairs_checked == s.n * s.n


def test_rook_and_shrikhande_share_tensor_but_t4_separates():
    rook = rook_4x4()
    shr = shrikhande()
    assert np.array_equal(rook.tensor().c, shr.tensor().c)
    assert check_t_condition(rook, 4).passed
    rep = check_t_condition(shr, 4)
    assert not rep.passed
    assert rep.witness is not None
    w = rep.witness
    # recount the witness pattern by brute force on both pairs
    P = shr.colors
    R = shr.rank
    g3a, g3b, g4a, g4b, g34 = w.pattern
    def count(a, b):
        total = 0
        for c in range(16):
            for d in range(16):
                if (P[a][c] == g3a and P[b][c] == g3b and P[a][d] == g4a
                        and P[b][d] == g4b and P[c][d] == g34):
                    total += 1
        return total
    assert count(w.ref_alpha, w.ref_beta) == w.ref_count
    assert count(w.alpha, w.beta) == w.count
    assert w.ref_count != w.count
    assert P[w.alpha][w.beta] == P[w.ref_alpha][w.ref_beta] == w.color


def test_worker_count_does_not_change_report():
    shr = shrikhande()
    r1 = check_t_condition(shr, 4, workers=1)
    r4 = check_t_condition(shr, 4, workers=4)
    assert r1.to_json_dict() == r4.to_json_dict()


def test_spread_schemes_frozen_t4_outcomes():
    desarg = spread_scheme(desarguesian_spread(9))
    hall = spread_scheme(hall_spread(9))
    rep_d = check_t_condition(desarg, 4)
    assert rep_d.passed
    rep_h = check_t_condition(hall, 4)
    assert not rep_h.passed
    assert rep_h.witness.pattern_dict() == {
        "alpha_g3": 2, "beta_g3": 3, "alpha_g4": 3, "beta_g4": 5, "g3_g4": 7}
    assert four_condition_frobenius_verdict(rep_d, True) == "frobenius"
    assert four_condition_frobenius_verdict(rep_h, True) == "proper"
    assert four_condition_frobenius_verdict(rep_h, False) == "inapplicable"


def test_verdict_requires_t4_report():
    rep3 = check_t_condition(rook_4x4(), 3)
    with pytest.raises(ValueError):
        four_condition_frobenius_verdict(rep3, True)


def test_unsupported_t_rejected():
    with pytest.raises(ValueError):
        check_t_condition(rook_4x4(), 5)
