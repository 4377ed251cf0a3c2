"""Reading and writing the plain-text web description format.

Example (an H-web; the boundary is read counter-clockwise)::

    boundary: p1- p2+ p3+ p4-
    vertices:
      u sink
      w source
    edges:
      e1: p1 -> u
      e2: p4 -> u
      e3: w -> p2
      e4: w -> p3
      e5: w -> u
    rotation:
      u: e1 e5 e2
      w: e3 e4 e5

Lines are ``#``-commented.  Sections may appear in any order but at most once.

``boundary:``
    boundary point names in counter-clockwise order, each followed by its
    sign.  ``+`` means the edge at that point points into it.
``vertices:``
    one ``name kind`` per line; kind is ``sink``, ``source``, ``crossing``,
    or ``clasp a b``.
``edges:``
    one ``name: tail -> head`` per line, or ``name: loop`` for a closed
    circle with no vertices.
``rotation:``
    ``node: end end ...`` listing the edge ends at a vertex counter-clockwise.
    An end is an edge name, or ``edge.t`` / ``edge.h`` (tail / head) when
    the edge has both ends at that vertex.  A crossing lists the incoming
    end of its over-strand first.  A clasp lists its bottom ports left to
    right and then its top ports right to left.
"""

from __future__ import annotations

import re

from .diagram import BOUNDARY, CLASP, CROSSING, SINK, SOURCE, ValidationError, WebDiagram

__all__ = ["ParseError", "build_web", "parse_web", "format_web"]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_SECTIONS = ("boundary", "vertices", "edges", "rotation")
_KINDS = {"sink": SINK, "source": SOURCE, "crossing": CROSSING, "clasp": CLASP}


class ParseError(ValueError):
    """The text is not a well-formed web description."""


def _name(tok: str, lineno: int) -> str:
    if not _NAME.match(tok):
        raise ParseError(f"line {lineno}: bad name {tok!r}")
    return tok


def _sections(text: str) -> dict[str, list[tuple[int, str]]]:
    out: dict[str, list[tuple[int, str]]] = {}
    cur: str | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if sep and head.strip() in _SECTIONS:
            cur = head.strip()
            if cur in out:
                raise ParseError(f"line {lineno}: section {cur!r} repeated")
            out[cur] = []
            if rest.strip():
                out[cur].append((lineno, rest.strip()))
            continue
        if cur is None:
            raise ParseError(f"line {lineno}: content before any section")
        out[cur].append((lineno, line))
    return out


def parse_web(text: str) -> WebDiagram:
    """Parse and validate; raises :class:`ParseError` or :class:`ValidationError`."""
    sec = _sections(text)
    names: set[str] = set()

    def claim(n: str, lineno: int) -> None:
        if n in names:
            raise ParseError(f"line {lineno}: name {n!r} used twice")
        names.add(n)

    # boundary points
    bsign: dict[str, str] = {}
    border: list[str] = []
    for lineno, line in sec.get("boundary", []):
        for tok in line.split():
            if len(tok) < 2 or tok[-1] not in "+-":
                raise ParseError(f"line {lineno}: boundary point {tok!r} needs a sign")
            n = _name(tok[:-1], lineno)
            claim(n, lineno)
            bsign[n] = tok[-1]
            border.append(n)

    # vertices
    vkind: dict[str, tuple[str, tuple]] = {}
    for lineno, line in sec.get("vertices", []):
        toks = line.split()
        if len(toks) < 2 or toks[1] not in _KINDS:
            raise ParseError(f"line {lineno}: expected 'name kind'")
        n = _name(toks[0], lineno)
        claim(n, lineno)
        k = _KINDS[toks[1]]
        if k == CLASP:
            if len(toks) != 4 or not all(t.isdigit() for t in toks[2:]):
                raise ParseError(f"line {lineno}: clasp needs two nonnegative integers")
            a, b = int(toks[2]), int(toks[3])
            if a + b == 0:
                raise ParseError(f"line {lineno}: empty clasp")
            vkind[n] = (k, (a, b))
        else:
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: unexpected parameters")
            vkind[n] = (k, ())

    # edges
    edges: dict[str, tuple[str, str] | None] = {}
    for lineno, line in sec.get("edges", []):
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'name: tail -> head'")
        e = _name(head.strip(), lineno)
        claim(e, lineno)
        rest = rest.strip()
        if rest == "loop":
            edges[e] = None
            continue
        parts = [p.strip() for p in rest.split("->")]
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'tail -> head'")
        for p in parts:
            _name(p, lineno)
            if p not in bsign and p not in vkind:
                raise ParseError(f"line {lineno}: unknown endpoint {p!r}")
        edges[e] = (parts[0], parts[1])

    # rotation
    rot: dict[str, list[tuple[int, str]]] = {}
    for lineno, line in sec.get("rotation", []):
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'node: ends'")
        v = head.strip()
        if v not in vkind:
            raise ParseError(f"line {lineno}: rotation for unknown vertex {v!r}")
        if v in rot:
            raise ParseError(f"line {lineno}: rotation for {v!r} given twice")
        ends = []
        for tok in rest.split():
            e, dot, side = tok.partition(".")
            if e not in edges or edges[e] is None:
                raise ParseError(f"line {lineno}: unknown edge {e!r}")
            tail, hd = edges[e]
            if dot:
                if side not in ("t", "h"):
                    raise ParseError(f"line {lineno}: end suffix must be .t or .h")
                end = 0 if side == "t" else 1
            elif tail == hd:
                raise ParseError(f"line {lineno}: edge {e!r} is a loop at {v!r}; write {e}.t or {e}.h")
            elif v == tail:
                end = 0
            elif v == hd:
                end = 1
            else:
                raise ParseError(f"line {lineno}: edge {e!r} does not meet {v!r}")
            if (tail, hd)[end] != v:
                raise ParseError(f"line {lineno}: end {tok!r} is not at {v!r}")
            ends.append((end, e))
        rot[v] = ends

    return _assemble(border, bsign, vkind, edges, rot)


def _assemble(border, bsign, vkind, edges, rot) -> WebDiagram:
    d = WebDiagram()
    # every non-loop edge end must be used exactly once
    used: dict[tuple[str, int], str] = {}
    for v, ends in rot.items():
        for end, e in ends:
            if (e, end) in used:
                raise ValidationError(f"edge end {e}.{'th'[end]} listed twice")
            used[(e, end)] = v
    for v in vkind:
        if v not in rot:
            raise ValidationError(f"vertex {v!r} has no rotation")
    bdeg = {b: 0 for b in border}
    for e, ends in edges.items():
        if ends is None:
            d.loops += 1
            continue
        for i, p in enumerate(ends):
            if p in bdeg:
                bdeg[p] += 1
            elif (e, i) not in used:
                raise ValidationError(f"edge {e!r} end at {p!r} missing from its rotation")
    for b, k in bdeg.items():
        if k != 1:
            raise ValidationError(f"boundary point {b!r} has degree {k}, expected 1")

    dart: dict[tuple[str, int], int] = {}
    bnodes = []
    for b in border:
        # find the unique edge end at b
        (e, i), = [(e, i) for e, ends in edges.items() if ends for i, p in enumerate(ends) if p == b]
        out = i == 0
        if (bsign[b] == "+") == out:
            raise ValidationError(f"boundary point {b!r} sign does not match its edge direction")
        v, (z,) = d.new_node(BOUNDARY, [out])
        dart[(e, i)] = z
        bnodes.append(v)
    d.boundary = tuple(bnodes)
    for vname in sorted(vkind):
        k, param = vkind[vname]
        ends = rot[vname]
        _, zs = d.new_node(k, [end == 0 for end, _ in ends], param)
        for z, (end, e) in zip(zs, ends):
            dart[(e, end)] = z
    for e, ends in edges.items():
        if ends is None:
            continue
        a, b = dart[(e, 0)], dart[(e, 1)]
        d.mate[a] = b
        d.mate[b] = a
    return d.validate()


def build_web(desc: str) -> WebDiagram:
    """Build a validated diagram from its text description."""
    return parse_web(desc)


def format_web(d: WebDiagram) -> str:
    """Render ``d`` in the text format (names are generated)."""
    vname: dict[int, str] = {}
    for i, b in enumerate(d.boundary):
        vname[b] = f"p{i + 1}"
    internal = [v for v in sorted(d.nodes) if d.kind[v] != BOUNDARY]
    for i, v in enumerate(internal):
        vname[v] = f"v{i + 1}"
    ename: dict[int, tuple[str, int]] = {}
    lines_e = []
    for z in sorted(d.mate):
        if not d.out[z] or z in ename:
            continue
        m = d.mate[z]
        e = f"e{len(lines_e) + 1}"
        ename[z] = (e, 0)
        ename[m] = (e, 1)
        lines_e.append(f"  {e}: {vname[d.dnode[z]]} -> {vname[d.dnode[m]]}")
    for _ in range(d.loops):
        lines_e.append(f"  e{len(lines_e) + 1}: loop")
    signs = d.boundary_signs()
    out = ["boundary: " + " ".join(f"{vname[b]}{s}" for b, s in zip(d.boundary, signs)), "vertices:"]
    for v in internal:
        k = d.kind[v]
        extra = " " + " ".join(map(str, d.param[v])) if k == CLASP else ""
        out.append(f"  {vname[v]} {k}{extra}")
    out.append("edges:")
    out.extend(lines_e)
    out.append("rotation:")
    for v in internal:
        toks = []
        for z in d.nodes[v]:
            e, end = ename[z]
            toks.append(f"{e}.{'th'[end]}")
        out.append(f"  {vname[v]}: " + " ".join(toks))
    return "\n".join(out) + "\n"
