from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from sl3skein import verify
from sl3skein.invariants import delta
from sl3skein.qlaurent import QRational, qpow
from sl3skein.webcore import (
    ClaspPresent, ParseError, ValidationError, WebDiagram, WebSum, build_web, evaluate,
    evaluate_closed, expand_clasp, format_web, parse_web, reduce_to_basis, resolve_crossings,
)
from sl3skein.webcore import builder as tb
from sl3skein.webcore import corpus, webs
from sl3skein.webcore.parser import __doc__ as parser_doc

Q3 = qpow(6) + 1 + qpow(-6)
Q2 = qpow(3) + qpow(-3)

H_WEB = parser_doc.split("::", 1)[1].split("Lines", 1)[0]


def closed(t: tb.Tangle) -> QRational:
    return evaluate_closed(tb.trace(t).diagram)


# ----------------------------------------------------------------------
# file format


def test_parse_example_matches_builder():
    assert parse_web(H_WEB).key == tb.web_crossing("+", "-").diagram.key


def test_format_roundtrip():
    for t in (tb.web_crossing("+", "+"), tb.crossing("+", "-", True), tb.box(2, 1), tb.trace(tb.ident("+-"))):
        d = t.diagram
        assert parse_web(format_web(d)).key == d.key


def test_loop_only():
    assert evaluate_closed(build_web("edges:\n  e1: loop\n")) == Q3


def test_comments_and_blank_lines():
    text = "# an unknot\n\nedges:   # one loop\n  e1: loop\n  e2: loop\n"
    assert evaluate_closed(build_web(text)) == Q3 * Q3


@pytest.mark.parametrize("text, err", [
    ("boundary: p+\n", ValidationError),                           # degree 0
    ("junk\n", ParseError),                                        # content before a section
    ("edges:\n  e1: loop\nedges:\n  e2: loop\n", ParseError),      # repeated section
    ("vertices:\n  u widget\n", ParseError),                       # unknown kind
    ("boundary: p\n", ParseError),                                 # missing sign
    ("boundary: a+ b-\nedges:\n  e1: a -> b\n", ValidationError),  # signs disagree with the edge
    ("boundary: a+ b-\nedges:\n  e1: a -> zz\n", ParseError),      # unknown endpoint
    ("boundary: a+ a-\n", ParseError),                             # duplicate name
    ("vertices:\n  u sink\nedges:\n  e1: loop\n", ValidationError),  # vertex without rotation
])
def test_rejects_bad_descriptions(text, err):
    with pytest.raises(err):
        parse_web(text)


def test_rotation_must_be_planar():
    bad = H_WEB.replace("w: e3 e4 e5", "w: e4 e3 e5")
    with pytest.raises(ValidationError):
        parse_web(bad)


# ----------------------------------------------------------------------
# skein relations


def test_circle():
    assert closed(tb.ident("+")) == Q3
    assert closed(tb.ident("-")) == Q3


def test_empty_diagram():
    assert evaluate_closed(WebDiagram()) == 1


def test_bigon():
    for x in "+-":
        lhs = evaluate(tb.compose(tb.split(x), tb.merge(x)).diagram)
        assert lhs == evaluate(tb.ident(tb.flip(x)).diagram).scale(Q2)


def test_square():
    lhs = evaluate(tb.compose(tb.web_crossing("+", "-"), tb.web_crossing("-", "+")).diagram)
    rhs = evaluate(tb.ident("+-").diagram) + evaluate(tb.compose(tb.cap("+-"), tb.cup("+-")).diagram)
    assert lhs == rhs


def test_crossing_relation():
    flat = evaluate(tb.ident("++").diagram)
    web = evaluate(tb.web_crossing("+", "+").diagram)
    pos = tb.crossing("+", "+", True).diagram
    neg = tb.crossing("+", "+", False).diagram
    assert [pos.crossing_sign(v) for v in pos.internal_nodes()] == [1]
    assert [neg.crossing_sign(v) for v in neg.internal_nodes()] == [-1]
    assert evaluate(pos) == flat.scale(qpow(2)) + web.scale(-qpow(-1))
    assert evaluate(neg) == flat.scale(qpow(-2)) + web.scale(-qpow(1))


def test_theta_graph():
    # two vertices joined by three edges: [3][2]
    theta = tb.trace(tb.compose(tb.split("-"), tb.merge("-")))
    assert evaluate_closed(theta.diagram) == Q3 * Q2


def test_resolve_crossings_keeps_webs():
    s = resolve_crossings(tb.trace(tb.crossing("+", "+", True)).diagram)
    assert len(s) == 2
    with pytest.raises(ClaspPresent):
        resolve_crossings(tb.box(2, 0).diagram)


def test_basis_is_fixed_by_reduction():
    w = tb.web_crossing("+", "-").diagram
    s = reduce_to_basis(w)
    assert s == WebSum.of(w)


# ----------------------------------------------------------------------
# Reidemeister moves and confluence


def test_single_kinks_are_framing():
    assert closed(corpus.kink("+", True)) == qpow(-8) * Q3
    assert closed(corpus.kink("+", False)) == qpow(8) * Q3
    assert closed(corpus.kink("+", True, "left")) == closed(corpus.kink("+", True))


@pytest.mark.parametrize("x", "+-")
@pytest.mark.parametrize("over", [True, False])
def test_double_kink_is_identity(x, over):
    assert evaluate(corpus.double_kink(x, over).diagram) == evaluate(tb.ident(x).diagram)


@pytest.mark.parametrize("mp", corpus.r2_pairs() + corpus.r3_pairs(), ids=lambda mp: mp.name)
def test_braid_moves_as_morphisms(mp):
    assert evaluate(mp.left.diagram) == evaluate(mp.right.diagram)


@pytest.mark.parametrize("mp", corpus.r4_pairs(), ids=lambda mp: mp.name)
def test_vertex_slides_as_morphisms(mp):
    assert evaluate(mp.left.diagram) == evaluate(mp.right.diagram)


def test_move_corpus_in_context():
    pairs = corpus.move_corpus(seed=7, per_move=2)
    assert len(pairs) >= 50
    assert all(max(a.num_crossings, b.num_crossings) <= 6 for _, a, b in pairs)
    bad = [n for n, a, b in pairs if evaluate_closed(a) != evaluate_closed(b)]
    assert not bad


def test_confluence_under_random_reduction_order():
    rng = random.Random(2024)
    for i in range(100):
        d = corpus.random_closed(rng)
        ref = evaluate_closed(d)
        assert evaluate_closed(d, random.Random(i)) == ref


@given(st.integers(0, 10**6))
def test_canonical_key_ignores_relabeling(seed):
    d = corpus.random_closed(random.Random(seed))
    e = build_web(format_web(d))
    assert e.key == d.key


# ----------------------------------------------------------------------
# clasps


@pytest.mark.parametrize("n", range(4))
def test_clasped_circle(n):
    assert closed(tb.box(n, 0)) == delta(n)
    assert closed(tb.box(0, n)) == delta(n)


def test_clasped_circle_mixed():
    # the adjoint representation: [3]^2 - 1
    assert closed(tb.box(1, 1)) == Q3 * Q3 - 1


@pytest.mark.parametrize("a, b", [(1, 0), (2, 0), (0, 2), (1, 1), (3, 0), (2, 1)])
def test_absorption(a, b):
    box = tb.box(a, b)
    assert evaluate(tb.compose(box, box).diagram) == evaluate(box.diagram)


@pytest.mark.parametrize("a, b", [(2, 0), (0, 2), (1, 1), (3, 0), (2, 1), (1, 2)])
def test_annihilation(a, b):
    for name, t in verify.clasp_annihilators(a, b):
        assert len(evaluate(t.diagram)) == 0, name


def test_single_strand_clasp_is_identity():
    assert expand_clasp(1, 0) == evaluate(tb.ident("+").diagram)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 1)])
def test_braiding_eigenvalues(m, n):
    lhs, base = verify.braiding_parallel(m, n, True)
    assert lhs == base.scale(qpow(2 * m * n))
    lhs, base = verify.braiding_parallel(m, n, False)
    assert lhs == base.scale(qpow(-2 * m * n))
    lhs, base = verify.braiding_antiparallel(m, n, True)
    assert lhs == base.scale((-qpow(1)) ** (m * n))
    lhs, base = verify.braiding_antiparallel(m, n, False)
    assert lhs == base.scale((-qpow(-1)) ** (m * n))


# ----------------------------------------------------------------------
# test closures separate the basis webs


def _det(rows: list[list[QRational]]) -> QRational:
    a = [list(r) for r in rows]
    n, det = len(a), QRational(1)
    for i in range(n):
        p = next((r for r in range(i, n) if a[r][i]), None)
        if p is None:
            return QRational(0)
        if p != i:
            a[i], a[p] = a[p], a[i]
            det = -det
        det = det * a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return det


@pytest.mark.parametrize("kind", ["parallel", "antiparallel"])
@pytest.mark.parametrize("s, t", [(1, 1), (1, 2), (2, 2)])
def test_test_closures_are_nondegenerate(kind, s, t):
    d = min(s, t)
    cores = [webs.basis_core(kind, s, t, k) for k in range(d + 1)]
    gram = [[evaluate_closed(webs.test_closure(kind, s, t, c, j)) for c in cores] for j in range(d + 1)]
    assert _det(gram) != 0
