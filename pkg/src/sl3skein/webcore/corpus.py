"""Small closed diagrams for move-invariance and confluence checks.

Each local move is a pair of tangles with the same ends.  Placing both in a
random context and closing gives two closed diagrams that must evaluate to
the same scalar.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import builder as tb
from .builder import Tangle, flip
from .diagram import WebDiagram

__all__ = [
    "MovePair", "kink", "double_kink", "r2_pairs", "r3_pairs", "r4_pairs",
    "random_layers", "random_closed", "move_corpus",
]


@dataclass(frozen=True)
class MovePair:
    """Two tangles related by one move; ``closer`` is a crossingless way back to the bottom word."""

    name: str
    left: Tangle
    right: Tangle
    closer: Tangle | None = None


def _at(word: str, p: int, piece: Tangle) -> Tangle:
    """``piece`` acting on positions ``p, p+1, ...`` of ``word``."""
    n = len(piece.bottom)
    return tb.tensor(tb.ident(word[:p]), piece, tb.ident(word[p + n:]))


def kink(x: str, over: bool, side: str = "right") -> Tangle:
    """A one-crossing curl on a single strand ``x``."""
    y = flip(x)
    if side == "right":
        return tb.compose(
            tb.tensor(tb.ident(x), tb.cup(y + x)),
            tb.tensor(tb.crossing(x, y, over), tb.ident(x)),
            tb.tensor(tb.cap(y + x), tb.ident(x)),
        )
    return tb.compose(
        tb.tensor(tb.cup(x + y), tb.ident(x)),
        tb.tensor(tb.ident(x), tb.crossing(y, x, over)),
        tb.tensor(tb.ident(x), tb.cap(x + y)),
    )


def double_kink(x: str, over: bool = True) -> Tangle:
    """Two curls of opposite crossing type, one on each side; isotopic to a plain strand."""
    return tb.compose(kink(x, over, "right"), kink(x, not over, "left"))


def r2_pairs() -> list[MovePair]:
    out = []
    for x in "+-":
        for y in "+-":
            for lo in (True, False):
                lhs = tb.compose(tb.crossing(x, y, lo), tb.crossing(y, x, not lo))
                out.append(MovePair(f"R2 {x}{y} {'over' if lo else 'under'}", lhs, tb.ident(x + y)))
    return out


def _sigma(word: str, p: int, over: bool) -> Tangle:
    return _at(word, p, tb.crossing(word[p], word[p + 1], over))


def _braid(word: str, gens: list[tuple[int, bool]]) -> Tangle:
    layers = [tb.ident(word)]
    w = list(word)
    for p, over in gens:
        layers.append(_sigma("".join(w), p, over))
        w[p], w[p + 1] = w[p + 1], w[p]
    return tb.compose(*layers)


def r3_pairs() -> list[MovePair]:
    out = []
    for word in ("+++", "++-", "+-+", "-++", "+--", "---"):
        for o in (True, False):
            out.append(MovePair(f"R3 {word} {o}",
                                _braid(word, [(0, o), (1, o), (0, o)]),
                                _braid(word, [(1, o), (0, o), (1, o)])))
        # mixed form s1 s2 s1^-1 = s2^-1 s1 s2
        out.append(MovePair(f"R3 {word} mixed",
                            _braid(word, [(0, True), (1, True), (0, False)]),
                            _braid(word, [(1, False), (0, True), (1, True)])))
    return out


def r4_pairs() -> list[MovePair]:
    """A strand slides across a trivalent vertex, over or under."""
    out = []
    for x in "+-":
        for y in "+-":
            z = flip(y)
            for lo in (True, False):
                # strand x on the left passes a merge of y y
                lhs = tb.compose(
                    _at(x + y + y, 0, tb.crossing(x, y, lo)),
                    _at(y + x + y, 1, tb.crossing(x, y, lo)),
                    _at(y + y + x, 0, tb.merge(y)),
                )
                rhs = tb.compose(_at(x + y + y, 1, tb.merge(y)), tb.crossing(x, z, lo))
                back = tb.compose(tb.web_crossing(z, x), _at(x + z, 1, tb.split(y)))
                out.append(MovePair(f"R4 merge {x}{y} {lo}", lhs, rhs, back))
                # strand x on the left passes a split into y y
                lhs = tb.compose(tb.crossing(x, z, lo), _at(z + x, 0, tb.split(y)))
                rhs = tb.compose(
                    _at(x + z, 1, tb.split(y)),
                    _at(x + y + y, 0, tb.crossing(x, y, lo)),
                    _at(y + x + y, 1, tb.crossing(x, y, lo)),
                )
                back = tb.compose(_at(y + y + x, 0, tb.merge(y)), tb.web_crossing(z, x))
                out.append(MovePair(f"R4 split {x}{y} {lo}", lhs, rhs, back))
    return out


def random_layers(rng: random.Random, word: str, n: int, webs: bool = True) -> Tangle:
    """``n`` random adjacent crossings or I/H webs on ``word`` (returns to a permuted word)."""
    layers = [tb.ident(word)]
    w = list(word)
    for _ in range(n):
        if len(w) < 2:
            break
        p = rng.randrange(len(w) - 1)
        cur = "".join(w)
        if webs and rng.random() < 0.3:
            piece = tb.web_crossing(w[p], w[p + 1])
        else:
            piece = tb.crossing(w[p], w[p + 1], rng.random() < 0.5)
        layers.append(_at(cur, p, piece))
        w[p], w[p + 1] = w[p + 1], w[p]
    return tb.compose(*layers)


def _unpermute(word: str, top: str) -> Tangle:
    """Web crossings taking ``top`` back to ``word`` so the result is an endomorphism."""
    layers = [tb.ident(top)]
    w = list(top)
    target = list(word)
    # move the letter each position needs into place with I/H webs (crossingless)
    for j in range(len(w)):
        k = next((k for k in range(j, len(w)) if w[k] == target[j]), None)
        if k is None:
            break
        for i in range(k - 1, j - 1, -1):
            layers.append(_at("".join(w), i, tb.web_crossing(w[i], w[i + 1])))
            w[i], w[i + 1] = w[i + 1], w[i]
    if w != target:
        raise AssertionError("could not restore the word")
    return tb.compose(*layers)


def _closed(word: str, body: Tangle) -> WebDiagram:
    fix = _unpermute(word, body.top)
    return tb.trace(tb.compose(body, fix)).diagram


def random_closed(rng: random.Random, max_crossings: int = 6) -> WebDiagram:
    """A random closed diagram with at most ``max_crossings`` crossings."""
    n = rng.randint(2, 3)
    word = "".join(rng.choice("+-") for _ in range(n))
    body = random_layers(rng, word, rng.randint(1, max_crossings))
    return _closed(word, body)


def _endo(rng: random.Random, word: str, n: int, webs: bool = True) -> Tangle:
    """Random layers followed by crossingless webs restoring ``word``."""
    body = random_layers(rng, word, n, webs)
    return tb.compose(body, _unpermute(word, body.top))


def move_corpus(seed: int = 0, per_move: int = 1, max_crossings: int = 6) -> list[tuple[str, WebDiagram, WebDiagram]]:
    """Closed pairs differing by one move, each in a random context.

    The context adds crossings only while the total stays within ``max_crossings``.
    """
    rng = random.Random(seed)
    pairs = r2_pairs() + r3_pairs() + r4_pairs()
    for x in "+-":
        for o in (True, False):
            pairs.append(MovePair(f"R1 double kink {x} {o}", double_kink(x, o), tb.ident(x)))
    out = []
    for mp in pairs:
        word = mp.left.bottom
        closer = mp.closer if mp.closer is not None else _unpermute(word, mp.left.top)
        own = max(mp.left.diagram.num_crossings, mp.right.diagram.num_crossings)
        for _ in range(per_move):
            room = max(0, max_crossings - own)
            below = _endo(rng, word, rng.randint(0, min(room, 2)))
            room -= below.diagram.num_crossings
            above = _endo(rng, word, rng.randint(0, room))
            lhs = tb.trace(tb.compose(below, mp.left, closer, above)).diagram
            rhs = tb.trace(tb.compose(below, mp.right, closer, above)).diagram
            out.append((mp.name, lhs, rhs))
    return out
