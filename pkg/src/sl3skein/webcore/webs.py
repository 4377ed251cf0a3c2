"""Standard webs: stair-steps, triangles, twist basis webs and test closures.

Everything is drawn bottom to top.  A two-bundle tangle has the ``t``-colored
bundle on the left and the ``s``-colored bundle on the right; horizontal
pictures of twist regions become vertical ones by a quarter turn.
"""

from __future__ import annotations

from . import builder as tb
from .builder import Tangle, flip
from .diagram import WebDiagram

__all__ = [
    "make_stairstep", "make_triangle", "triangle_merge", "triangle_split",
    "clasps", "basis_core", "basis_web", "twist_core", "twisted_tangle",
    "test_closure", "sigma_web", "torus_tangle",
]

PARALLEL = "parallel"
ANTIPARALLEL = "antiparallel"


def make_stairstep(n: int, m: int, sign: str = "+") -> WebDiagram:
    """The ``n x m`` stair-step: ``n`` strands pass ``m`` strands through I-webs.

    Bottom word ``sign^(n+m)``; the top word is the same.
    """
    if n < 1 or m < 1:
        raise ValueError("stair-step sizes must be positive")
    return tb.web_bundle_crossing(sign * n, sign * m).diagram


def triangle_merge(n: int, x: str = "+") -> Tangle:
    """Two bundles ``x^n`` meeting a third bundle ``flip(x)^n`` (leaving upward)."""
    if n == 1:
        return tb.merge(x)
    y = flip(x)
    return tb.compose(
        tb.tensor(tb.ident(x * (n - 1)), tb.merge(x), tb.ident(x * (n - 1))),
        tb.tensor(tb.web_bundle_crossing(x * (n - 1), y), tb.ident(x * (n - 1))),
        tb.tensor(tb.ident(y), triangle_merge(n - 1, x)),
    )


def triangle_split(n: int, x: str = "+") -> Tangle:
    """Mirror image of :func:`triangle_merge`: ``flip(x)^n -> x^n x^n``."""
    if n == 1:
        return tb.split(x)
    y = flip(x)
    return tb.compose(
        tb.tensor(tb.ident(y), triangle_split(n - 1, x)),
        tb.tensor(tb.web_bundle_crossing(y, x * (n - 1)), tb.ident(x * (n - 1))),
        tb.tensor(tb.ident(x * (n - 1)), tb.split(x), tb.ident(x * (n - 1))),
    )


def make_triangle(n: int, sign: str = "+") -> WebDiagram:
    """The triangle web on three bundles of ``n`` strands, built recursively."""
    if n < 1:
        raise ValueError("triangle size must be positive")
    return triangle_merge(n, sign).diagram


def _words(kind: str, s: int, t: int) -> tuple[str, str]:
    if kind == PARALLEL:
        return "+" * t, "+" * s
    if kind == ANTIPARALLEL:
        return "-" * t, "+" * s
    raise ValueError(f"unknown orientation {kind!r}")


def clasps(kind: str, s: int, t: int) -> Tangle:
    left = tb.box(t, 0) if kind == PARALLEL else tb.box(0, t)
    return tb.tensor(left, tb.box(s, 0))


def basis_core(kind: str, s: int, t: int, k: int) -> Tangle:
    """Basis web number ``k`` without its clasps; ``d - k`` strands take part in the stair or turnbacks."""
    d = min(s, t)
    if not 0 <= k <= d:
        raise ValueError(f"basis index {k} outside [0, {d}]")
    wl, wr = _words(kind, s, t)
    n = d - k
    if kind == PARALLEL:
        mid = tb.web_bundle_crossing("+" * n, "+" * n) if n else tb.empty()
    else:
        mid = tb.compose(tb.caps("-" * n), tb.cups("-" * n)) if n else tb.empty()
    return tb.tensor(tb.ident(wl[n:]), mid, tb.ident(wr[n:]))


def basis_web(kind: str, s: int, t: int, k: int) -> Tangle:
    c = clasps(kind, s, t)
    return tb.compose(c, basis_core(kind, s, t, k), c)


def twist_core(kind: str, s: int, t: int, m: int) -> Tangle:
    wl, wr = _words(kind, s, t)
    return tb.full_twist(wl, wr, m)


def twisted_tangle(kind: str, s: int, t: int, m: int) -> Tangle:
    c = clasps(kind, s, t)
    return tb.compose(c, twist_core(kind, s, t, m), c)


def test_closure(kind: str, s: int, t: int, core: Tangle, j: int) -> WebDiagram:
    """Close ``clasps . core . clasps . basis_core(j)`` into a closed diagram.

    For ``j = 0..d`` these give ``d+1`` functionals on the clasped endomorphisms.
    """
    c = clasps(kind, s, t)
    return tb.trace(tb.compose(basis_core(kind, s, t, j), c, core, c)).diagram


def sigma_web(s: int, t: int, k: int, l: int, middle_clasps: bool = False,
              outer_clasps: bool = True) -> Tangle:
    """The intermediate web of the parallel full twist recurrence (requires ``s <= t``).

    ``l`` strands of each bundle meet in a pair of triangles; the joining bundle
    runs past ``k`` strands, and the remaining ``t-l`` and ``s-k-l`` strands
    carry one full twist.  Clasps sit on the outer ends only unless
    ``middle_clasps`` adds the removable inner ones.
    """
    if s > t:
        raise ValueError("sigma_web expects s <= t")
    if k < 0 or l < 0 or k + l > s:
        raise ValueError("need k, l >= 0 and k + l <= s")
    a = "+" * (t - l)
    r = "+" * (s - l)
    neg = "-" * l
    layers = [clasps(PARALLEL, s, t) if outer_clasps else tb.ident("+" * (s + t))]
    if l:
        layers.append(tb.tensor(tb.ident(a), triangle_merge(l), tb.ident(r)))
        if middle_clasps:
            layers.append(tb.tensor(tb.box(t - l, 0), tb.box(0, l), tb.box(s - l, 0)))
        layers.append(tb.tensor(tb.ident(a), tb.web_bundle_crossing(neg, r)))
        if middle_clasps:
            layers.append(tb.tensor(tb.box(t - l, 0), tb.box(s - l, l)))
    layers.append(tb.tensor(tb.full_twist(a, "+" * (s - k - l)), tb.ident("+" * k + neg)))
    if l:
        if middle_clasps:
            layers.append(tb.tensor(tb.box(t - l, 0), tb.box(s - l, l)))
        layers.append(tb.tensor(tb.ident(a), tb.web_bundle_crossing(r, neg)))
        if middle_clasps:
            layers.append(tb.tensor(tb.box(t - l, 0), tb.box(0, l), tb.box(s - l, 0)))
        layers.append(tb.tensor(tb.ident(a), triangle_split(l), tb.ident(r)))
    if outer_clasps:
        layers.append(clasps(PARALLEL, s, t))
    return tb.compose(*layers)


def torus_tangle(kind: str, s: int, t: int, m: int) -> Tangle:
    """Clasped ``2m``-crossing twist closed into the torus link ``T(2, 2m)``."""
    return tb.trace(twisted_tangle(kind, s, t, m))
