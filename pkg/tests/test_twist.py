from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sl3skein.qcomb import q_binom
from sl3skein.qlaurent import QLaurent, qpow
from sl3skein.twist import (
    ANTIPARALLEL, K_FORM, L_FORM, PARALLEL, CommutationViolated, LatticeCoeffFns,
    antiparallel_multi, chains, check_commutation, lattice_expand, oracle_check, parallel_multi,
    recurrence_coeffs, twist_expansion, verify_recurrence,
)

colors = st.integers(0, 5)
kinds = st.sampled_from([PARALLEL, ANTIPARALLEL])


def test_parallel_single_strands_by_hand():
    # sigma = q^(1/3) id - q^(-1/6) I and I.I = [2] I, so
    # sigma^2 = q^(2/3) id + (q^(-5/6) - q^(1/6)) I
    e = twist_expansion(PARALLEL, 1, 1)
    assert e.coefficient(1) == qpow(4)
    assert e.coefficient(0) == qpow(-5) - qpow(1)


def test_antiparallel_single_strands_frozen():
    e = twist_expansion(ANTIPARALLEL, 1, 1)
    assert e.coefficient(1) == qpow(2)
    assert e.coefficient(0) == qpow(-10) - qpow(-4)


@given(kinds, colors, colors)
def test_l_form_matches_k_form(kind, s, t):
    assert twist_expansion(kind, s, t).forms_agree()


@given(kinds, colors, colors)
def test_one_twist_chain_sum_matches_closed_form(kind, s, t):
    single = twist_expansion(kind, s, t)
    multi = (parallel_multi if kind == PARALLEL else antiparallel_multi)(s, t, 1)
    assert multi.entries == single.entries


@given(kinds, colors, colors, st.integers(1, 3))
def test_symmetric_in_colors(kind, s, t, m):
    assert twist_expansion(kind, s, t, m).entries == twist_expansion(kind, t, s, m).entries


@given(kinds, colors, colors)
def test_convention_relabels(kind, s, t):
    e = twist_expansion(kind, s, t)
    d = e.d
    lf = e.form(L_FORM)
    assert all(lf[d - k] == c for k, c in e.form(K_FORM).items())
    assert e.as_convention(L_FORM).records() == sorted(lf.items())


def test_zero_color_is_trivial():
    for kind in (PARALLEL, ANTIPARALLEL):
        for t in range(4):
            assert twist_expansion(kind, 0, t, 2).entries == {0: QLaurent.one()}


def test_chain_count():
    # weakly decreasing m-tuples from {0..d}: C(d+m, m)
    assert len(list(chains(3, 2))) == 10
    assert all(a >= b for c in chains(4, 3) for a, b in zip(c, c[1:]))


def test_bad_arguments():
    with pytest.raises(ValueError):
        twist_expansion("sideways", 1, 1)
    with pytest.raises(ValueError):
        twist_expansion(PARALLEL, 1, 1).form("other")


@pytest.mark.parametrize("kind", [PARALLEL, ANTIPARALLEL])
@pytest.mark.parametrize("s, t, m", [(1, 1, 1), (1, 2, 1), (1, 1, 2)])
def test_oracle_small(kind, s, t, m):
    assert all(lhs == rhs for _, lhs, rhs in oracle_check(kind, s, t, m))


def test_commutation_holds_for_shifted_coefficients():
    for d in range(5):
        for de in range(5 - d):
            assert check_commutation(d + de, recurrence_coeffs(d, d + de)) == []


def test_lattice_expand_rejects_noncommuting():
    fns = LatticeCoeffFns(lambda k, l: qpow(6 * (k + 1)), lambda k, l: QLaurent.one())
    with pytest.raises(CommutationViolated):
        lattice_expand(3, fns)


def test_lattice_expand_q_commuting_case():
    # with Y = 1 the condition reads X(k, l) = q X(k, l+1), so X = q^(-l)
    fns = LatticeCoeffFns(lambda k, l: qpow(-6 * l), lambda k, l: QLaurent.one())
    out = lattice_expand(3, fns)
    assert out == {(k, 3 - k): qpow(-6 * k * (3 - k)) * q_binom(3, k) for k in range(4)}


@pytest.mark.parametrize("s, t", [(1, 1), (1, 2)])
def test_recurrence_under_engine(s, t):
    assert verify_recurrence(s, t).ok


def test_unshifted_recurrence_fails_with_unequal_colors():
    rep = verify_recurrence(1, 2, "unshifted")
    assert not rep.ok
    assert rep.commutation_failures == []
