import pytest

from leibnizx.scalars import Q
from leibnizx.linalg import LinearMap, zero_subspace
from leibnizx.leibniz import zero_action
from leibnizx.xmod import LeibnizXMod, identity_xmod, zero_xmod
from leibnizx.xul import (check_trunc_xmod, embedding_squares_check,
                          lemma41_check, prop42_check, xul)


def test_xul_rejects_bad_input(l2):
    broken = LeibnizXMod(l2, l2, LinearMap.identity(2), zero_action(l2, l2))
    with pytest.raises(ValueError):
        xul(broken, 3)


def test_xul_rejects_bad_report_degree(a1):
    with pytest.raises(ValueError):
        xul(identity_xmod(a1), 3, report_degree=2)


def test_xul_identity_a1(a1):
    tx = xul(identity_xmod(a1), 3)
    assert tx.report_degree == 1
    assert tx.certificates["ul_semidirect_stabilized"]
    assert tx.certificates["ul_p_stabilized"]
    # B is the kernel of the unital map bar_s, so it avoids the unit class
    assert tx.b_dim_upto(1) == 2
    assert not check_trunc_xmod(tx)


def test_xul_zero_xmod_is_trivial(a1, l2):
    for p in (a1, l2):
        tx = xul(zero_xmod(p), 3)
        assert tx.B == zero_subspace(tx.ambient.dim)
        assert tx.ambient.dim == tx.ul_p.dim
        assert not check_trunc_xmod(tx)


def test_xul_inclusion_l2(xmods):
    tx = xul(xmods["xmod-incl-l2.json"], 3)
    assert not check_trunc_xmod(tx)
    # rho lands in UL(p) and is compatible with the boundary on degree 1
    for deg, v in tx.b_filtration(1):
        bc = tx.B.coords(tx.ambient.to_coords(v))
        out = tx.rho.apply({i: c for i, c in enumerate(bc) if c})
        assert set(out) <= set(range(tx.ul_p.dim))


def test_lemma41_identity_a1(a1):
    rec = lemma41_check(identity_xmod(a1), 3)
    assert rec["verdict"] == "pass"
    assert rec["lhs_dim"] == rec["rhs_dim"] == 2
    assert rec["stabilized"] and rec["slack_stable"] and rec["degree_stable"]


def test_prop42_a1(a1):
    rec = prop42_check(a1, 3)
    assert rec["verdict"] == "pass"
    assert rec["composite_on_ul_is_id"] and rec["composite_on_b_is_id"]
    # the identification misses the unit: one fewer class on the B side
    assert rec["b_dim_upto_d"] == rec["ul_dim_upto_d"] - 1


def test_embedding_squares(a1, l2, r2):
    for p in (a1, l2, r2):
        rec = embedding_squares_check(p, 3)
        assert rec["verdict"] == "pass"
        assert rec["b_dim"] == 0
        assert rec["ambient_dim"] == rec["ul_p_dim"]
