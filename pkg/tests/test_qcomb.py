from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from sl3skein.qcomb import (
    NegativeArgument, PartsSumMismatch, QCombCache, q_binom, q_multinom, q_pochhammer,
    quantum_binom, quantum_factorial, quantum_int,
)
from sl3skein.qlaurent import QLaurent, qpow

small = st.integers(0, 10)


def _inversion_binom(n: int, k: int) -> QLaurent:
    """Gaussian binomial by counting inversions of 0/1 words (independent of the library)."""
    acc = QLaurent.zero()
    for ones in itertools.combinations(range(n), k):
        word = [1 if i in ones else 0 for i in range(n)]
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])
        acc = acc + qpow(6 * inv)
    return acc


def test_quantum_integers():
    assert quantum_int(0) == 0
    assert quantum_int(1) == 1
    assert quantum_int(2) == qpow(3) + qpow(-3)
    assert quantum_int(3) == qpow(6) + 1 + qpow(-6)


@pytest.mark.parametrize("n", range(8))
def test_q_binom_counts_inversions(n):
    for k in range(n + 1):
        assert q_binom(n, k) == _inversion_binom(n, k)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_pascal(nk):
    n, k = nk
    assert q_binom(n, k) == q_binom(n - 1, k - 1) + qpow(6 * k) * q_binom(n - 1, k)


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_balanced_and_unbalanced_agree(nk):
    n, k = nk
    assert quantum_binom(n, k) == qpow(-3 * k * (n - k)) * q_binom(n, k)
    assert quantum_binom(n, k) == quantum_binom(n, n - k)


def test_out_of_range_binomials_vanish():
    assert q_binom(3, 5) == 0
    assert quantum_binom(2, 3) == 0


@given(small)
def test_pochhammer_values(n):
    expect = QLaurent.one()
    for i in range(1, n + 1):
        expect = expect * (QLaurent.one() - qpow(6 * i))
    assert q_pochhammer(n) == expect


@given(small)
def test_factorial_recursion(n):
    assert quantum_factorial(n + 1) == quantum_factorial(n) * quantum_int(n + 1)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_multinomial_is_product_of_binomials(parts):
    n = sum(parts)
    expect, rest = QLaurent.one(), n
    for p in parts:
        expect = expect * q_binom(rest, p)
        rest -= p
    assert q_multinom(n, parts) == expect


def test_argument_errors():
    with pytest.raises(NegativeArgument):
        q_pochhammer(-1)
    with pytest.raises(PartsSumMismatch):
        q_multinom(3, [1, 1])


def test_small_cache_matches_default():
    c = QCombCache(maxsize=3)
    for n in range(8):
        assert c.q_pochhammer(n) == q_pochhammer(n)
        assert c.quantum_factorial(n) == quantum_factorial(n)
    assert max(c.sizes()) <= 3
