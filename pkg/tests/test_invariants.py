from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sl3skein.invariants import (
    LITERAL, VERIFIED, ColoredLinkSpec, IndexOutOfRange, build_basis_closure, build_torus_diagram,
    closure_eval, delta, jones_torus, torus_oracle,
)
from sl3skein.qcomb import NegativeArgument, quantum_int
from sl3skein.qlaurent import QLaurent, QRational
from sl3skein.twist import ANTIPARALLEL, PARALLEL
from sl3skein.webcore import evaluate_closed

kinds = st.sampled_from([PARALLEL, ANTIPARALLEL])

# engine values of the clasped (2,2) torus link, one full twist, exponents in sixths
FROZEN = {
    (PARALLEL, 1, 1): [(-14, 1), (-8, 2), (-2, 2), (4, 2), (10, 1), (16, 1)],
    (PARALLEL, 1, 2): [(-22, 1), (-16, 2), (-10, 3), (-4, 3), (2, 3), (8, 2), (14, 2), (20, 1), (26, 1)],
    (ANTIPARALLEL, 1, 1): [(-16, 1), (-10, 1), (-4, 2), (2, 2), (8, 2), (14, 1)],
    (ANTIPARALLEL, 1, 2): [(-26, 1), (-20, 1), (-14, 2), (-8, 2), (-2, 3), (4, 3), (10, 3), (16, 2), (22, 1)],
}


def test_quantum_dimensions():
    assert delta(0) == 1
    assert delta(1) == quantum_int(3)
    assert delta(2) == QLaurent.from_pairs([(-12, 1), (-6, 1), (0, 2), (6, 1), (12, 1)])
    with pytest.raises(NegativeArgument):
        delta(-1)


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_values(key):
    kind, s, t = key
    assert jones_torus(ColoredLinkSpec(kind, 1, s, t)).to_pairs() == FROZEN[key]


@pytest.mark.parametrize("kind", [PARALLEL, ANTIPARALLEL])
def test_hopf_link_against_engine(kind):
    formula, engine = torus_oracle(ColoredLinkSpec(kind, 1, 1, 1))
    assert engine == QRational(formula)


def test_literal_parallel_denominator_disagrees_with_engine():
    spec = ColoredLinkSpec(PARALLEL, 1, 1, 1)
    engine = evaluate_closed(build_torus_diagram(spec))
    assert QRational(jones_torus(spec, VERIFIED)) == engine
    assert QRational(jones_torus(spec, LITERAL)) != engine


def test_variants_agree_for_opposed_strands():
    for s in range(3):
        for t in range(3):
            spec = ColoredLinkSpec(ANTIPARALLEL, 2, s, t)
            assert jones_torus(spec, VERIFIED) == jones_torus(spec, LITERAL)


@given(kinds, st.integers(0, 4), st.integers(0, 4), st.integers(1, 3))
def test_color_symmetry(kind, s, t, m):
    assert jones_torus(ColoredLinkSpec(kind, m, s, t)) == jones_torus(ColoredLinkSpec(kind, m, t, s))


@given(kinds, st.integers(0, 5), st.integers(1, 3))
def test_zero_color_gives_unknot(kind, t, m):
    # with one color 0 the link is a single clasped unknot
    assert jones_torus(ColoredLinkSpec(kind, m, 0, t)) == delta(t)


@given(kinds, st.integers(0, 4), st.integers(0, 4), st.integers(1, 3))
def test_classical_limit(kind, s, t, m):
    # at q = 1 a full twist acts trivially, leaving the product of dimensions
    j = jones_torus(ColoredLinkSpec(kind, m, s, t))
    dim = lambda n: (n + 1) * (n + 2) // 2
    assert sum(c for _, c in j.to_pairs()) == dim(s) * dim(t)


@pytest.mark.parametrize("kind", [PARALLEL, ANTIPARALLEL])
@pytest.mark.parametrize("s, t", [(1, 1), (1, 2), (2, 1)])
def test_closed_basis_webs(kind, s, t):
    for k in range(min(s, t) + 1):
        assert evaluate_closed(build_basis_closure(kind, s, t, k)) == closure_eval(s, t, k, kind)


def test_closure_index_range():
    with pytest.raises(IndexOutOfRange):
        closure_eval(1, 2, 2)
    with pytest.raises(IndexOutOfRange):
        build_basis_closure(PARALLEL, 1, 1, -1)


@pytest.mark.parametrize("bad", [
    dict(orientation="twisted", m=1, s=1, t=1),
    dict(orientation=PARALLEL, m=0, s=1, t=1),
    dict(orientation=PARALLEL, m=1, s=-1, t=1),
])
def test_spec_validation(bad):
    with pytest.raises(ValueError):
        ColoredLinkSpec(**bad)
