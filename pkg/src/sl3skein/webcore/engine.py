"""Skein rewriting: crossing resolution, face reduction and clasp expansion.

Internally a linear combination is a dict ``key -> [diagram, numerator]``.
Clasp expansions carry denominators; instead of rational arithmetic in the
hot loop every clasp color gets one common denominator, and a term's true
coefficient is its numerator divided by the product of the denominators of
the clasps already expanded.  Terms with equal keys contain the same clasps,
so they share that implied denominator and can be merged numerator-wise.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..qcomb import quantum_binom, quantum_int
from ..qlaurent import QLaurent, QRational, qpow
from . import builder as tb
from .diagram import (
    BOUNDARY, CLASP, CROSSING, TRIVALENT, WebDiagram,
)

__all__ = [
    "StuckDiagram", "ClaspPresent", "WebSum", "resolve_crossings", "reduce_to_basis",
    "expand_clasp", "evaluate_closed", "evaluate", "clasp_expansion",
]

ONE = QLaurent.one()
ZERO = QLaurent.zero()
Q2 = quantum_int(2)
Q3 = quantum_int(3)

# skein coefficients (smoothing, web) for positive and negative crossings
_CROSS_COEFFS = {
    1: (qpow(2), -qpow(-1)),
    -1: (qpow(-2), -qpow(1)),
}


class StuckDiagram(RuntimeError):
    """No reducible face was found in a crossingless, clasp-free non-basis web."""


class ClaspPresent(ValueError):
    pass


# ----------------------------------------------------------------------
# WebSum


@dataclass
class WebSum:
    """Formal linear combination of diagrams with QRational coefficients."""

    terms: dict[tuple, tuple[WebDiagram, QRational]] = field(default_factory=dict)

    @classmethod
    def of(cls, w: WebDiagram, coeff=1) -> WebSum:
        s = cls()
        s.add(w, coeff)
        return s

    def add(self, w: WebDiagram, coeff) -> None:
        c = QRational.coerce(coeff)
        if c.is_zero():
            return
        k = w.key
        if k in self.terms:
            c = self.terms[k][1] + c
            if c.is_zero():
                del self.terms[k]
                return
            w = self.terms[k][0]
        self.terms[k] = (w, c)

    def items(self) -> Iterator[tuple[WebDiagram, QRational]]:
        return iter(self.terms.values())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: WebSum) -> WebSum:
        r = WebSum(dict(self.terms))
        for w, c in other.items():
            r.add(w, c)
        return r

    def scale(self, c) -> WebSum:
        r = WebSum()
        for w, x in self.items():
            r.add(w, x * c)
        return r

    def coefficient(self, w: WebDiagram) -> QRational:
        t = self.terms.get(w.key)
        return t[1] if t else QRational(0)

    def scalar(self) -> QRational:
        """Coefficient of the empty diagram."""
        return self.coefficient(WebDiagram())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WebSum):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k][1] == other.terms[k][1] for k in self.terms)

    def __repr__(self) -> str:
        return f"WebSum({len(self)} terms)"


# ----------------------------------------------------------------------
# local moves (each takes a private diagram it may mutate)


def _resolve_crossing(d: WebDiagram, x: int) -> list[tuple[QLaurent, WebDiagram]]:
    ds = d.nodes[x]
    sign = d.crossing_sign(x)
    for p in range(4):
        if not d.out[ds[p]] and not d.out[ds[(p + 1) % 4]]:
            break
    a, b, c, e = (ds[(p + i) % 4] for i in range(4))
    smooth_c, web_c = _CROSS_COEFFS[sign]

    d1 = d.copy()
    d1.detach([x], ds)
    d1.fuse(b, c)
    d1.fuse(a, e)

    d2 = d.copy()
    d2.detach([x], ds)
    _, s = d2.new_node("sink", [False] * 3)
    _, t = d2.new_node("source", [True] * 3)
    d2.attach(a, s[0])
    d2.attach(b, s[1])
    d2.link(t[0], s[2])
    d2.attach(c, t[1])
    d2.attach(e, t[2])
    return [(smooth_c, d1), (web_c, d2)]


def _face_externals(d: WebDiagram, cyc: list[int]) -> list[int]:
    ext = []
    n = len(cyc)
    for i in range(n):
        arrive = d.mate[cyc[i - 1]]
        depart = cyc[i]
        (e,) = [z for z in d.nodes[d.dnode[depart]] if z != arrive and z != depart]
        ext.append(e)
    return ext


def _find_face(d: WebDiagram, rng: random.Random | None) -> list[int] | None:
    kind, dnode = d.kind, d.dnode
    bigons, squares = [], []
    for cyc in d.faces():
        n = len(cyc)
        if n != 2 and n != 4:
            continue
        corners = [dnode[z] for z in cyc]
        if len(set(corners)) != n or any(kind[v] not in TRIVALENT for v in corners):
            continue
        if n == 2:
            if rng is None:
                return cyc
            bigons.append(cyc)
        else:
            squares.append(cyc)
    pool = bigons or squares
    if not pool:
        return None
    return rng.choice(pool) if rng is not None else pool[0]


def _reduce_face(d: WebDiagram, cyc: list[int]) -> list[tuple[QLaurent, WebDiagram]]:
    ext = _face_externals(d, cyc)
    corners = [d.dnode[z] for z in cyc]
    if len(cyc) == 2:
        d.detach(corners, ext)
        d.fuse(ext[0], ext[1])
        return [(Q2, d)]
    d2 = d.copy()
    d.detach(corners, ext)
    d.fuse(ext[0], ext[1])
    d.fuse(ext[2], ext[3])
    d2.detach(corners, ext)
    d2.fuse(ext[1], ext[2])
    d2.fuse(ext[3], ext[0])
    return [(ONE, d), (ONE, d2)]


def _extract(d: WebDiagram, vs: list[int]) -> WebDiagram:
    """Move the nodes ``vs`` (a union of closed components) into a new diagram."""
    sub = WebDiagram()
    sub._next = d._next
    for v in vs:
        ds = d.nodes.pop(v)
        sub.nodes[v] = ds
        sub.kind[v] = d.kind.pop(v)
        sub.param[v] = d.param.pop(v)
        for z in ds:
            sub.dnode[z] = d.dnode.pop(z)
            sub.pos[z] = d.pos.pop(z)
            sub.mate[z] = d.mate.pop(z)
            sub.out[z] = d.out.pop(z)
    d._canon = None
    d._counts = None
    return sub


def _strip(c: QLaurent, d: WebDiagram, ctx: _Context, check: bool = True) -> QLaurent:
    """Evaluate free loops and closed components of ``d`` into the scalar."""
    if d.loops:
        c = c * Q3 ** d.loops
        d.loops = 0
    if check and d.boundary and len(d.nodes) > len(d.boundary):
        order, _, _ = d._traverse([(b, 0) for b in d.boundary])
        if len(order) < len(d.nodes):
            reached = set(order)
            sub = _extract(d, [v for v in d.nodes if v not in reached])
            c = c * _closed_numerator(sub, ctx)
    return c


def _simplify(c: QLaurent, d: WebDiagram, ctx: _Context) -> list[tuple[QLaurent, WebDiagram]]:
    stack = [(c, d, True)]
    done = []
    while stack:
        c, d, check = stack.pop()
        c = _strip(c, d, ctx, check)
        if not c:
            continue
        face = _find_face(d, ctx.rng)
        if face is None:
            d._canon = None
            d._counts = None
            done.append((c, d))
            continue
        # removing a bigon never disconnects; smoothing a square may
        square = len(face) == 4
        for c2, d2 in _reduce_face(d, face):
            stack.append((c * c2, d2, square))
    return done


# ----------------------------------------------------------------------
# the reduction driver


class _Context:
    __slots__ = ("rng", "expand_clasps")

    def __init__(self, rng: random.Random | None = None, expand_clasps: bool = True):
        self.rng = rng
        self.expand_clasps = expand_clasps


def _first_active(d: WebDiagram, ctx: _Context) -> int | None:
    nc, nk = d.counts()
    if not nc and not nk:
        return None
    _, order = d.canonical()
    cands = [v for v in order if d.kind[v] == CLASP] if nk else []
    if not cands:
        cands = [v for v in order if d.kind[v] == CROSSING]
    if ctx.rng is not None:
        return ctx.rng.choice(cands)
    return cands[0]


def _expand_at(d: WebDiagram, x: int) -> list[tuple[QLaurent, WebDiagram]]:
    a, b = d.param[x]
    _, terms = clasp_expansion(a, b)
    ds = d.nodes[x]
    res = []
    for num, t in terms:
        d2 = d.copy()
        d2.detach([x], ds)
        ports = d2.import_diagram(t)
        for p, r in zip(ds, ports):
            d2.fuse(p, r)
        res.append((num, d2))
    return res


def _reduce(inputs: Iterable[tuple[QLaurent, WebDiagram]], ctx: _Context) -> dict[tuple, list]:
    """Fully reduce; returns ``key -> [diagram, numerator]`` over basis webs."""
    state: dict[tuple, list] = {}

    def push(c: QLaurent, d: WebDiagram) -> None:
        for c2, d2 in _simplify(c, d, ctx):
            k = d2.key
            ent = state.get(k)
            if ent is None:
                state[k] = [d2, c2]
            else:
                s = ent[1] + c2
                if s:
                    ent[1] = s
                else:
                    del state[k]

    for c, d in inputs:
        push(c, d.copy())
    while True:
        work = [(k, ent) for k, ent in state.items() if any(ent[0].counts())]
        if not work:
            break
        for k, _ in work:
            del state[k]
        for _, (d, c) in work:
            x = _first_active(d, ctx)
            moves = _expand_at(d, x) if d.kind[x] == CLASP else _resolve_crossing(d, x)
            for c2, d2 in moves:
                push(c * c2, d2)
    return state


def _clasp_denominator(d: WebDiagram) -> QLaurent:
    den = ONE
    for v, k in d.kind.items():
        if k == CLASP:
            den = den * clasp_expansion(*d.param[v])[0]
    return den


def _cut(d: WebDiagram) -> WebDiagram:
    """Open a closed diagram along one edge into a ``(-, +)`` tangle."""
    d = d.copy()
    tail = min(z for z, o in d.out.items() if o)
    head = d.mate[tail]
    b0, (z0,) = d.new_node(BOUNDARY, [True])
    b1, (z1,) = d.new_node(BOUNDARY, [False])
    d.link(tail, z1)
    d.link(z0, head)
    d.boundary = (b0, b1)
    return d


_closed_memo: dict[tuple, QLaurent] = {}
_CLOSED_MEMO_NODES = 24
_CLOSED_MEMO_SIZE = 1 << 16


def _closed_numerator(d: WebDiagram, ctx: _Context) -> QLaurent:
    """Value of a closed diagram times the product of its clasp denominators."""
    val = Q3 ** d.loops
    if not d.nodes:
        return val
    d = d.copy()
    d.loops = 0
    key = None
    if ctx.rng is None and len(d.nodes) <= _CLOSED_MEMO_NODES:
        key = d.key
        hit = _closed_memo.get(key)
        if hit is not None:
            return val * hit
    res = _closed_value(d, ctx)
    if key is not None and len(_closed_memo) < _CLOSED_MEMO_SIZE:
        _closed_memo[key] = res
    return val * res


def _closed_value(d: WebDiagram, ctx: _Context) -> QLaurent:
    state = _reduce([(ONE, _cut(d))], ctx)
    if not state:
        return ZERO
    if len(state) != 1:
        raise StuckDiagram("closed evaluation left more than one term")
    (w, c), = state.values()
    if w.num_vertices or w.loops:
        raise StuckDiagram("closed evaluation did not reduce to an arc")
    return c * Q3


# ----------------------------------------------------------------------
# clasps

_clasp_lock = threading.RLock()
_clasp_memo: dict[tuple[int, int], tuple[QLaurent, list[tuple[QLaurent, WebDiagram]]]] = {}


def _rational_lincomb(tangles: list[tuple[QRational, tb.Tangle]]) -> list[tuple[QRational, WebDiagram]]:
    acc: dict[tuple, list] = {}
    ctx = _Context()
    for coef, t in tangles:
        d = t.diagram
        den = _clasp_denominator(d)
        for _, (w, num) in _reduce([(ONE, d)], ctx).items():
            val = QRational(num, den) * coef
            k = w.key
            if k in acc:
                acc[k][1] = acc[k][1] + val
            else:
                acc[k] = [w, val]
    return [(c, w) for w, c in acc.values() if not c.is_zero()]


def _lcm(a: QLaurent, b: QLaurent) -> QLaurent:
    r = QRational(b, a)
    return a * r.num


def clasp_expansion(a: int, b: int) -> tuple[QLaurent, list[tuple[QLaurent, WebDiagram]]]:
    """``(den, [(num, basis web)])`` with ``JW(a,b) = sum num/den * web``."""
    if a < 0 or b < 0:
        raise ValueError("clasp colors must be nonnegative")
    key = (a, b)
    hit = _clasp_memo.get(key)
    if hit is not None:
        return hit
    with _clasp_lock:
        hit = _clasp_memo.get(key)
        if hit is not None:
            return hit
        terms = _build_clasp(a, b)
        den = ONE
        for c, _ in terms:
            den = _lcm(den, c.den)
        res = (den, [((c * den).to_laurent(), w) for c, w in terms])
        _clasp_memo[key] = res
        return res


def _build_clasp(a: int, b: int) -> list[tuple[QRational, WebDiagram]]:
    n = a + b
    if n <= 1:
        return [(QRational(1), tb.ident("+" * a + "-" * b).diagram)]
    if b == 0 or a == 0:
        x = "+" if b == 0 else "-"
        m = n - 1
        inner = tb.box(m, 0) if x == "+" else tb.box(0, m)
        jw = tb.tensor(inner, tb.ident(x))
        mid = tb.tensor(tb.ident(x * (m - 1)), tb.web_crossing(x, x))
        coef = -QRational(quantum_int(m), quantum_int(m + 1))
        return _rational_lincomb([
            (QRational(1), jw),
            (coef, tb.compose(jw, mid, jw)),
        ])
    outer = tb.tensor(tb.box(a, 0), tb.box(0, b))
    parts = []
    for i in range(min(a, b) + 1):
        c = QRational(quantum_binom(a, i) * quantum_binom(b, i), quantum_binom(n + 1, i))
        if i % 2:
            c = -c
        turn = tb.compose(tb.caps("+" * i), tb.cups("+" * i))
        mid = tb.tensor(tb.ident("+" * (a - i)), turn, tb.ident("-" * (b - i)))
        parts.append((c, tb.compose(outer, mid, outer)))
    return _rational_lincomb(parts)


def expand_clasp(a: int, b: int) -> WebSum:
    den, terms = clasp_expansion(a, b)
    s = WebSum()
    for num, w in terms:
        s.add(w, QRational(num, den))
    return s


# ----------------------------------------------------------------------
# public operations


def resolve_crossings(w: WebDiagram) -> WebSum:
    """Apply the crossing relation at every crossing (no face reduction)."""
    if w.num_clasps:
        raise ClaspPresent("expand clasps before resolving crossings")
    todo = [(ONE, w.copy())]
    while True:
        nxt = []
        progressed = False
        for c, d in todo:
            xs = [v for v, k in d.kind.items() if k == CROSSING]
            if not xs:
                nxt.append((c, d))
                continue
            progressed = True
            for c2, d2 in _resolve_crossing(d, min(xs)):
                nxt.append((c * c2, d2))
        todo = nxt
        if not progressed:
            break
    s = WebSum()
    for c, d in todo:
        d._canon = None
        d._counts = None
        s.add(d, c)
    return s


def _reduce_sum(s: WebSum, rng: random.Random | None, allow_active: bool) -> WebSum:
    out = WebSum()
    ctx = _Context(rng)
    for w, coef in s.items():
        nc, nk = w.counts()
        if not allow_active:
            if nk:
                raise ClaspPresent("reduce_to_basis needs clasp-free input")
            if nc:
                raise ValueError("reduce_to_basis needs crossingless input")
        den = _clasp_denominator(w)
        if w.is_closed():
            out.add(WebDiagram(), QRational(_closed_numerator(w, ctx), den) * coef)
            continue
        for d, num in _reduce([(ONE, w)], ctx).values():
            out.add(d, QRational(num, den) * coef)
    return out


def reduce_to_basis(s: WebSum | WebDiagram, rng: random.Random | None = None) -> WebSum:
    """Reduce crossingless, clasp-free webs to basis webs."""
    if isinstance(s, WebDiagram):
        s = WebSum.of(s)
    return _reduce_sum(s, rng, allow_active=False)


def evaluate(s: WebSum | WebDiagram, rng: random.Random | None = None) -> WebSum:
    """Expand clasps, resolve crossings and reduce to basis webs."""
    if isinstance(s, WebDiagram):
        s = WebSum.of(s)
    return _reduce_sum(s, rng, allow_active=True)


def evaluate_closed(w: WebDiagram, rng: random.Random | None = None) -> QRational:
    if not w.is_closed():
        raise ValueError("evaluate_closed needs an empty boundary")
    return QRational(_closed_numerator(w, _Context(rng)), _clasp_denominator(w))
