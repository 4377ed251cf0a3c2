"""Tangles built from elementary pieces by stacking and juxtaposition.

A :class:`Tangle` is a web in a rectangle with a bottom word and a top word
over ``{'+', '-'}`` (``+`` is a strand pointing up).  Its diagram's boundary
runs counter-clockwise: bottom ports left to right, then top ports right to
left, which is also the port order of a clasp box.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .diagram import BOUNDARY, CLASP, CROSSING, SINK, SOURCE, WebDiagram, clasp_out_flags

__all__ = [
    "Tangle", "flip", "dual", "compose", "tensor", "empty", "ident", "cup", "cap",
    "merge", "split", "crossing", "web_crossing", "box", "bundle_crossing",
    "web_bundle_crossing", "cups", "caps", "trace", "full_twist",
]


def flip(x: str) -> str:
    return "-" if x == "+" else "+"


def dual(word: str) -> str:
    """Reversed word with flipped letters (the other end of nested turnbacks)."""
    return "".join(flip(x) for x in reversed(word))


@dataclass(frozen=True)
class Tangle:
    diagram: WebDiagram
    bottom: str
    top: str

    def __matmul__(self, lower: Tangle) -> Tangle:
        """``upper @ lower`` stacks ``upper`` on top of ``lower``."""
        return compose(lower, self)

    def __or__(self, right: Tangle) -> Tangle:
        return tensor(self, right)


def _boundary_flags(bottom: str, top: str) -> list[bool]:
    # a boundary dart is "out" when its strand enters the rectangle there
    return [x == "+" for x in bottom] + [x == "-" for x in reversed(top)]


def _piece(bottom: str, top: str, body: Callable[[WebDiagram, list[int], list[int]], None]) -> Tangle:
    """Create boundary points and let ``body`` wire the bottom and top darts."""
    d = WebDiagram()
    flags = _boundary_flags(bottom, top)
    bnodes, bdarts = [], []
    for f in flags:
        v, (dart,) = d.new_node(BOUNDARY, [f])
        bnodes.append(v)
        bdarts.append(dart)
    d.boundary = tuple(bnodes)
    nb = len(bottom)
    bot = bdarts[:nb]
    tp = bdarts[nb:][::-1]
    body(d, bot, tp)
    return Tangle(d, bottom, top)


def _reassemble(d: WebDiagram, bottom_ports: list[int], top_ports: list[int], bottom: str, top: str) -> Tangle:
    """Give the dangling ports of ``d`` fresh boundary nodes."""
    bnodes = []
    for p in bottom_ports + top_ports[::-1]:
        v, (dart,) = d.new_node(BOUNDARY, [d.out[p]])
        d.attach(p, dart)
        bnodes.append(v)
    d.boundary = tuple(bnodes)
    return Tangle(d, bottom, top)


def _ports(t: Tangle, d: WebDiagram) -> tuple[list[int], list[int]]:
    ports = d.import_diagram(t.diagram)
    nb = len(t.bottom)
    return ports[:nb], ports[nb:][::-1]


def compose(*layers: Tangle) -> Tangle:
    """Stack tangles bottom to top."""
    if not layers:
        raise ValueError("compose needs at least one tangle")
    cur = layers[0]
    for up in layers[1:]:
        if cur.top != up.bottom:
            raise ValueError(f"cannot stack {up.bottom!r} onto {cur.top!r}")
        d = WebDiagram()
        lb, lt = _ports(cur, d)
        ub, ut = _ports(up, d)
        for a, b in zip(lt, ub):
            d.fuse(a, b)
        cur = _reassemble(d, lb, ut, cur.bottom, up.top)
    return cur


def tensor(*pieces: Tangle) -> Tangle:
    """Place tangles side by side, left to right."""
    d = WebDiagram()
    bots: list[int] = []
    tops: list[int] = []
    for p in pieces:
        b, t = _ports(p, d)
        bots += b
        tops += t
    return _reassemble(d, bots, tops, "".join(p.bottom for p in pieces), "".join(p.top for p in pieces))


def empty() -> Tangle:
    return _piece("", "", lambda d, b, t: None)


def ident(word: str) -> Tangle:
    def body(d, bot, tp):
        for x, y in zip(bot, tp):
            d.link(x, y)
    return _piece(word, word, body)


def cup(top: str) -> Tangle:
    """A turnback creating the two adjacent top points ``top``."""
    if len(top) != 2 or top[0] == top[1]:
        raise ValueError("cup needs a word of two opposite letters")
    return _piece("", top, lambda d, b, t: d.link(t[0], t[1]))


def cap(bottom: str) -> Tangle:
    if len(bottom) != 2 or bottom[0] == bottom[1]:
        raise ValueError("cap needs a word of two opposite letters")
    return _piece(bottom, "", lambda d, b, t: d.link(b[0], b[1]))


def merge(x: str) -> Tangle:
    """Two parallel strands ``xx`` meeting at a vertex; one strand ``flip(x)`` leaves upward."""
    kind = SINK if x == "+" else SOURCE

    def body(d, bot, tp):
        _, ds = d.new_node(kind, [kind == SOURCE] * 3)
        d.link(bot[0], ds[0])
        d.link(bot[1], ds[1])
        d.link(tp[0], ds[2])
    return _piece(x + x, flip(x), body)


def split(x: str) -> Tangle:
    """One strand ``flip(x)`` from below, opening into ``xx`` above."""
    kind = SOURCE if x == "+" else SINK

    def body(d, bot, tp):
        _, ds = d.new_node(kind, [kind == SOURCE] * 3)
        d.link(bot[0], ds[0])
        d.link(tp[1], ds[1])
        d.link(tp[0], ds[2])
    return _piece(flip(x), x + x, body)


def crossing(x: str, y: str, left_over: bool = True) -> Tangle:
    """Strands from bottom-left to top-right (``x``) and bottom-right to top-left (``y``)."""

    def body(d, bot, tp):
        bl, br = bot
        tl, tr = tp
        geo = [bl, br, tr, tl]                 # ccw around the crossing
        ins = [x == "+", y == "+", x == "-", y == "-"]
        over_in = 0 if (left_over and x == "+") else 2 if left_over else 1 if y == "+" else 3
        order = [(over_in + i) % 4 for i in range(4)]
        _, ds = d.new_node(CROSSING, [not ins[i] for i in order])
        for dart, i in zip(ds, order):
            d.link(geo[i], dart)
    return _piece(x + y, y + x, body)


def web_crossing(x: str, y: str) -> Tangle:
    """The crossingless I- or H-web with bottom ``xy`` and top ``yx``."""

    def body(d, bot, tp):
        bl, br = bot
        tl, tr = tp
        if x == y:
            lo_kind = SINK if x == "+" else SOURCE
            hi_kind = SOURCE if x == "+" else SINK
            _, lo = d.new_node(lo_kind, [lo_kind == SOURCE] * 3)
            _, hi = d.new_node(hi_kind, [hi_kind == SOURCE] * 3)
            d.link(bl, lo[0])
            d.link(br, lo[1])
            d.link(lo[2], hi[0])
            d.link(tr, hi[1])
            d.link(tl, hi[2])
        else:
            left_kind = SINK if x == "+" else SOURCE
            right_kind = SOURCE if x == "+" else SINK
            _, lf = d.new_node(left_kind, [left_kind == SOURCE] * 3)
            _, rt = d.new_node(right_kind, [right_kind == SOURCE] * 3)
            d.link(bl, lf[0])
            d.link(lf[1], rt[2])
            d.link(tl, lf[2])
            d.link(br, rt[0])
            d.link(tr, rt[1])
    return _piece(x + y, y + x, body)


def box(a: int, b: int) -> Tangle:
    """The clasp ``JW(a, b)`` on the word ``+^a -^b``."""
    word = "+" * a + "-" * b
    if a + b == 0:
        return empty()

    def body(d, bot, tp):
        _, ds = d.new_node(CLASP, clasp_out_flags(a, b), (a, b))
        for p, dart in zip(bot + tp[::-1], ds):
            d.link(p, dart)
    return _piece(word, word, body)


def _sweep(left: str, right: str, piece: Callable[[str, str], Tangle]) -> Tangle:
    word = left + right
    layers = [ident(word)]
    w = list(word)
    for i in reversed(range(len(left))):
        for p in range(i, i + len(right)):
            layers.append(tensor(ident("".join(w[:p])), piece(w[p], w[p + 1]), ident("".join(w[p + 2:]))))
            w[p], w[p + 1] = w[p + 1], w[p]
    return compose(*layers)


def bundle_crossing(left: str, right: str, left_over: bool = True) -> Tangle:
    """Bundle ``left`` crosses bundle ``right``; every crossing has the left strand over iff ``left_over``."""
    return _sweep(left, right, lambda x, y: crossing(x, y, left_over))


def web_bundle_crossing(left: str, right: str) -> Tangle:
    """The bundle crossing with every crossing replaced by its I/H web (a stair-step)."""
    return _sweep(left, right, web_crossing)


def cups(word: str) -> Tangle:
    """Nested turnbacks ``0 -> word + dual(word)``."""
    if not word:
        return empty()
    x = word[0]
    inner = cups(word[1:])
    return compose(cup(x + flip(x)), tensor(ident(x), inner, ident(flip(x))))


def caps(word: str) -> Tangle:
    """Nested turnbacks ``word + dual(word) -> 0``."""
    if not word:
        return empty()
    x = word[0]
    inner = caps(word[1:])
    return compose(tensor(ident(x), inner, ident(flip(x))), cap(x + flip(x)))


def trace(t: Tangle) -> Tangle:
    """Close an endomorphism by arcs around its right side."""
    if t.bottom != t.top:
        raise ValueError("trace needs equal bottom and top words")
    w = t.bottom
    return compose(cups(w), tensor(t, ident(dual(w))), caps(w))


def full_twist(left: str, right: str, m: int = 1) -> Tangle:
    """``m`` full twists of two bundles, every crossing with the left strand over."""
    layers = [ident(left + right)]
    a, b = left, right
    for _ in range(2 * m):
        layers.append(bundle_crossing(a, b, True))
        a, b = b, a
    return compose(*layers)
