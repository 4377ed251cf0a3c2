from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from sl3skein.invariants import LITERAL, VERIFIED
from sl3skein.qcomb import one_minus_q
from sl3skein.qlaurent import QRational, series_truncate
from sl3skein.tails import (
    TailSeries, normalized_jones, stabilization_report, tail_chains, tail_series,
)
from sl3skein.twist import ANTIPARALLEL, PARALLEL

kinds = st.sampled_from([PARALLEL, ANTIPARALLEL])

FROZEN_LITERAL = {
    (PARALLEL, 1): [1, 3, 7, 13, 23, 37, 58, 86, 125, 176, 244],
    (PARALLEL, 2): [1, 2, 5, 10, 19, 32, 52, 80, 121, 177, 256],
    (ANTIPARALLEL, 1): [1, 2, 4, 6, 10, 14, 21, 28, 39, 51, 68],
    (ANTIPARALLEL, 2): [1, 1, 2, 3, 6, 9, 14, 19, 27, 36, 50],
}


@pytest.mark.parametrize("key", sorted(FROZEN_LITERAL))
def test_literal_tail_frozen(key):
    kind, m = key
    assert tail_series(kind, m, 10, LITERAL).coefficients() == FROZEN_LITERAL[key]


def test_corrected_tails_for_one_twist_have_product_forms():
    # opposed strands: sum q^(k^2) / (q)_k^2 = 1 / (q)_inf collapses the series
    anti = series_truncate(QRational(1, one_minus_q(1) * one_minus_q(2)), 12)
    assert tail_series(ANTIPARALLEL, 1, 12, VERIFIED).series == anti
    par = series_truncate(QRational(1, one_minus_q(1) ** 2 * one_minus_q(2)), 12)
    assert tail_series(PARALLEL, 1, 12, VERIFIED).series == par


@given(kinds, st.integers(1, 3), st.integers(0, 6))
def test_truncation_is_consistent(kind, m, order):
    big = tail_series(kind, m, 8)
    assert big.truncate(order).series == tail_series(kind, m, order).series


def test_truncate_cannot_extend():
    with pytest.raises(ValueError):
        tail_series(PARALLEL, 1, 3).truncate(4)


@given(kinds, st.integers(1, 3), st.integers(0, 12))
def test_chain_valuations(kind, m, order):
    c = 2 if kind == ANTIPARALLEL else 1
    seen = list(tail_chains(kind, m, order))
    assert len(seen) == len(set(ks for ks, _ in seen))
    for ks, v in seen:
        assert list(ks) == sorted(ks, reverse=True)
        assert v == sum(k * k + c * k for k in ks) - c * ks[-1] <= order


def test_chains_are_complete():
    # brute force over a box that certainly contains every chain
    for kind in (PARALLEL, ANTIPARALLEL):
        c = 2 if kind == ANTIPARALLEL else 1
        for m in (1, 2):
            got = {ks for ks, _ in tail_chains(kind, m, 9)}
            want = {ks for ks in itertools.product(range(5), repeat=m)
                    if list(ks) == sorted(ks, reverse=True)
                    and sum(k * k + c * k for k in ks) - c * ks[-1] <= 9}
            assert got == want


@given(kinds, st.integers(1, 3), st.integers(0, 6))
def test_normalized_invariant_is_a_power_series(kind, m, n):
    f = normalized_jones(kind, m, n)
    assert f.q_exponents_integral()
    assert f.valuation == 0 and f.coeff(0) == 1


@pytest.mark.parametrize("kind", [PARALLEL, ANTIPARALLEL])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_corrected_tail_stabilizes(kind, m):
    rep = stabilization_report(kind, m, 7, VERIFIED)
    assert rep.ok and rep.first_failure is None


def test_literal_tail_differs_at_first_order():
    rep = stabilization_report(ANTIPARALLEL, 1, 3, LITERAL)
    assert rep.rows[0] == (0, True, None)
    assert rep.first_failure == 1
    assert rep.rows[1] == (1, False, 1)
    assert "fail" in rep.render()


@given(kinds, st.integers(1, 3))
def test_tail_coefficients_nonnegative(kind, m):
    # exploratory: no positivity claim is made for these series
    for variant in (LITERAL, VERIFIED):
        assert min(tail_series(kind, m, 15, variant).coefficients()) >= 0


def test_argument_checks():
    with pytest.raises(ValueError):
        tail_series("sideways", 1, 3)
    with pytest.raises(ValueError):
        tail_series(PARALLEL, 0, 3)
    with pytest.raises(ValueError):
        normalized_jones(PARALLEL, 1, -1)
    assert isinstance(tail_series(PARALLEL, 1, 0), TailSeries)
