"""Planar web diagrams stored as rotation systems on half-edges (darts).

Every edge is a pair of darts ``d, mate[d]``; ``out[d]`` is True when the
edge leaves the node owning ``d``.  ``nodes[v]`` lists the darts of node
``v`` in counter-clockwise order.  Node kinds:

``sink`` / ``source``
    trivalent vertices with three incoming / outgoing edges.
``crossing``
    four darts; position 0 is where the over-strand enters and position 2
    where it leaves.  Positions 1 and 3 carry the under-strand.
``clasp``
    ``2(a+b)`` darts for the box ``JW(a, b)``: bottom ports left to right,
    then top ports right to left.  The bottom word is ``+^a -^b`` (``+`` is
    an upward strand) and so is the top word.
``boundary``
    one dart; ``boundary`` lists these nodes counter-clockwise around the
    disk.  A boundary point has sign ``+`` when its edge points into it.

Vertex-free closed circles are kept as the integer ``loops``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

SINK = "sink"
SOURCE = "source"
CROSSING = "crossing"
CLASP = "clasp"
BOUNDARY = "boundary"

TRIVALENT = (SINK, SOURCE)

_KIND_CODE = {BOUNDARY: 0, SINK: 1, SOURCE: 2, CROSSING: 3, CLASP: 4}


class ValidationError(ValueError):
    """A diagram violates the web invariants."""


class WebDiagram:
    __slots__ = (
        "nodes", "kind", "param", "dnode", "pos", "mate", "out",
        "boundary", "loops", "_next", "_canon", "_counts",
    )

    def __init__(self) -> None:
        self.nodes: dict[int, tuple[int, ...]] = {}
        self.kind: dict[int, str] = {}
        self.param: dict[int, tuple] = {}
        self.dnode: dict[int, int] = {}
        self.pos: dict[int, int] = {}
        self.mate: dict[int, int] = {}
        self.out: dict[int, bool] = {}
        self.boundary: tuple[int, ...] = ()
        self.loops = 0
        self._next = 0
        self._canon: tuple | None = None
        self._counts: tuple[int, int] | None = None

    # ------------------------------------------------------------------
    # construction primitives (only used while a diagram is being built)

    def copy(self) -> WebDiagram:
        d = WebDiagram.__new__(WebDiagram)
        d.nodes = dict(self.nodes)
        d.kind = dict(self.kind)
        d.param = dict(self.param)
        d.dnode = dict(self.dnode)
        d.pos = dict(self.pos)
        d.mate = dict(self.mate)
        d.out = dict(self.out)
        d.boundary = self.boundary
        d.loops = self.loops
        d._next = self._next
        d._canon = None
        d._counts = None
        return d

    def _fresh(self) -> int:
        self._next += 1
        return self._next

    def new_node(self, kind: str, outs: Sequence[bool], param: tuple = ()) -> tuple[int, list[int]]:
        """Add a node whose darts (ccw) have the given orientation flags."""
        v = self._fresh()
        darts = []
        for i, o in enumerate(outs):
            d = self._fresh()
            self.dnode[d] = v
            self.pos[d] = i
            self.out[d] = bool(o)
            darts.append(d)
        self.nodes[v] = tuple(darts)
        self.kind[v] = kind
        self.param[v] = param
        return v, darts

    def link(self, a: int, b: int) -> None:
        if self.out[a] == self.out[b]:
            raise ValidationError("edge direction mismatch while linking darts")
        self.mate[a] = b
        self.mate[b] = a

    def detach(self, vs: Iterable[int], keep: Iterable[int]) -> None:
        """Delete nodes ``vs``; darts in ``keep`` survive as dangling ports."""
        vs = set(vs)
        keep = set(keep)
        for v in vs:
            for d in self.nodes.pop(v):
                del self.dnode[d]
                del self.pos[d]
                if d not in keep:
                    m = self.mate.pop(d)
                    self.out.pop(d)
                    if m in self.dnode and self.dnode[m] not in vs:
                        raise ValidationError("detached region has an edge leaving it")
            del self.kind[v]
            del self.param[v]

    def fuse(self, p: int, r: int) -> None:
        """Join the strands ending at dangling ports ``p`` and ``r``."""
        a = self.mate.pop(p)
        if a == r:
            del self.mate[r]
            self.loops += 1
        else:
            b = self.mate.pop(r)
            if self.out[a] == self.out[b]:
                raise ValidationError("strand orientation mismatch while fusing ports")
            self.mate[a] = b
            self.mate[b] = a
        del self.out[p]
        del self.out[r]

    def attach(self, p: int, d: int) -> None:
        """Connect the strand ending at dangling port ``p`` to the new dart ``d``."""
        a = self.mate.pop(p)
        del self.out[p]
        if self.out[a] == self.out[d]:
            raise ValidationError("orientation mismatch while attaching a dart")
        self.mate[a] = d
        self.mate[d] = a

    def import_diagram(self, other: WebDiagram) -> list[int]:
        """Copy ``other`` in with fresh ids; its boundary darts become ports.

        Returns the ports in ``other``'s boundary order.
        """
        ren: dict[int, int] = {}
        bset = set(other.boundary)

        def rn(x: int) -> int:
            y = ren.get(x)
            if y is None:
                y = ren[x] = self._fresh()
            return y

        for v, ds in other.nodes.items():
            if v in bset:
                continue
            nv = rn(v)
            nds = tuple(rn(d) for d in ds)
            self.nodes[nv] = nds
            self.kind[nv] = other.kind[v]
            self.param[nv] = other.param[v]
            for i, d in enumerate(nds):
                self.dnode[d] = nv
                self.pos[d] = i
        for d, m in other.mate.items():
            self.mate[rn(d)] = rn(m)
            self.out[rn(d)] = other.out[d]
        self.loops += other.loops
        return [ren[other.nodes[b][0]] for b in other.boundary]

    # ------------------------------------------------------------------
    # queries

    def is_closed(self) -> bool:
        return not self.boundary

    def boundary_signs(self) -> tuple[str, ...]:
        return tuple("-" if self.out[self.nodes[b][0]] else "+" for b in self.boundary)

    def counts(self) -> tuple[int, int]:
        """``(#crossings, #clasps)``."""
        if self._counts is None:
            nc = nk = 0
            for k in self.kind.values():
                if k == CROSSING:
                    nc += 1
                elif k == CLASP:
                    nk += 1
            self._counts = (nc, nk)
        return self._counts

    @property
    def num_crossings(self) -> int:
        return self.counts()[0]

    @property
    def num_clasps(self) -> int:
        return self.counts()[1]

    @property
    def num_vertices(self) -> int:
        """Internal nodes (everything but boundary points)."""
        return len(self.nodes) - len(self.boundary)

    @property
    def num_edges(self) -> int:
        return len(self.mate) // 2 + self.loops

    def internal_nodes(self) -> list[int]:
        bset = set(self.boundary)
        return [v for v in self.nodes if v not in bset]

    def crossing_sign(self, v: int) -> int:
        ds = self.nodes[v]
        return 1 if not self.out[ds[1]] else -1

    def edges(self) -> list[tuple[int, int]]:
        """Directed edges as (tail dart, head dart)."""
        return [(d, m) for d, m in self.mate.items() if self.out[d]]

    def faces(self) -> list[list[int]]:
        """Dart cycles of the faces, each traced with the face on its left."""
        nodes, dnode, pos, mate = self.nodes, self.dnode, self.pos, self.mate
        seen: set[int] = set()
        faces = []
        for d0 in mate:
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                m = mate[d]
                ds = nodes[dnode[m]]
                d = ds[pos[m] - 1]
            faces.append(cyc)
        return faces

    # ------------------------------------------------------------------
    # canonical form

    def _traverse(self, starts: Sequence[tuple[int, int]]) -> tuple[list[int], dict[int, int], dict[int, int]]:
        """Breadth-first order of the nodes reachable from ``starts``."""
        order, label, entry, _ = self._walk(starts, False)
        return order, label, entry

    def _walk(self, starts: Sequence[tuple[int, int]], encode: bool
              ) -> tuple[list[int], dict[int, int], dict[int, int], list[int]]:
        """One pass assigning labels in BFS order and (optionally) emitting the code.

        Labels of neighbours are assigned the moment they are first seen, so
        every reference can be written out immediately.
        """
        nodes, kind, param, mate, dnode, pos, out = (
            self.nodes, self.kind, self.param, self.mate, self.dnode, self.pos, self.out)
        label: dict[int, int] = {}
        entry: dict[int, int] = {}
        order: list[int] = []
        code: list = []
        for v, e in starts:
            if v not in label:
                label[v] = len(order)
                order.append(v)
                entry[v] = e
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            ds = nodes[v]
            k = len(ds)
            s = entry[v]
            kv = kind[v]
            if encode:
                code.append(_KIND_CODE[kv])
                if kv == CLASP:
                    code.extend(param[v])
                elif kv == CROSSING:
                    code.append(s & 1)
            for j in range(k):
                d = ds[(s + j) % k]
                m = mate[d]
                w = dnode[m]
                lw = label.get(w)
                if lw is None:
                    lw = label[w] = len(order)
                    order.append(w)
                    entry[w] = 0 if kind[w] == CLASP else pos[m]
                if encode:
                    code.append(lw)
                    code.append((pos[m] - entry[w]) % len(nodes[w]))
                    code.append(out[d])
        return order, label, entry, code

    def canonical(self) -> tuple[tuple, list[int]]:
        """``(key, order)`` where ``order`` lists nodes reachable from the boundary.

        For closed diagrams every starting dart is tried and the least code
        wins, component by component.
        """
        if self._canon is None:
            if self.boundary:
                order, _, _, code = self._walk([(b, 0) for b in self.boundary], True)
                key = (tuple(code), self.loops)
            else:
                key, order = self._closed_canonical()
            self._canon = (key, order)
        return self._canon

    def _closed_canonical(self) -> tuple[tuple, list[int]]:
        remaining = set(self.nodes)
        comps = []
        order_all: list[int] = []
        while remaining:
            v0 = min(remaining)
            comp_order, _, _ = self._traverse([(v0, 0)])
            best = None
            best_order = None
            # only start at nodes of the rarest kind present (a canonical choice)
            tally: dict[str, int] = {}
            for v in comp_order:
                tally[self.kind[v]] = tally.get(self.kind[v], 0) + 1
            rare = min(tally, key=lambda k: (tally[k], _KIND_CODE[k]))
            for v in comp_order:
                if self.kind[v] != rare:
                    continue
                if self.kind[v] == CLASP:
                    starts = [0]
                else:
                    starts = range(len(self.nodes[v]))
                for e in starts:
                    o, _, _, c = self._walk([(v, e)], True)
                    c = tuple(c)
                    if best is None or c < best:
                        best, best_order = c, o
            comps.append(best)
            order_all.extend(best_order)
            remaining.difference_update(comp_order)
        comps.sort()
        return (tuple(comps), self.loops), order_all

    @property
    def key(self) -> tuple:
        return self.canonical()[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WebDiagram):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    # ------------------------------------------------------------------
    # validation

    def validate(self) -> WebDiagram:
        nodes, kind, mate, out, dnode = self.nodes, self.kind, self.mate, self.out, self.dnode
        for d, m in mate.items():
            if mate.get(m) != d:
                raise ValidationError(f"dart {d} has an asymmetric mate")
            if out[d] == out[m]:
                raise ValidationError("edge with inconsistent direction")
            if d not in dnode:
                raise ValidationError(f"dangling dart {d}")
        for v, ds in nodes.items():
            for d in ds:
                if d not in mate:
                    raise ValidationError(f"node {v} has an unconnected dart")
            k = kind[v]
            flags = [out[d] for d in ds]
            if k in TRIVALENT:
                if len(ds) != 3:
                    raise ValidationError(f"vertex {v} must be trivalent")
                if k == SINK and any(flags) or k == SOURCE and not all(flags):
                    raise ValidationError(f"vertex {v} is not all-in or all-out")
            elif k == CROSSING:
                if len(ds) != 4:
                    raise ValidationError(f"crossing {v} must have four darts")
                if flags[0] or not flags[2] or flags[1] == flags[3]:
                    raise ValidationError(f"crossing {v} strands are not through-oriented")
            elif k == CLASP:
                a, b = self.param[v]
                n = a + b
                if len(ds) != 2 * n:
                    raise ValidationError(f"clasp {v} has the wrong number of ports")
                if flags != clasp_out_flags(a, b):
                    raise ValidationError(f"clasp {v} ports have the wrong directions")
            elif k == BOUNDARY:
                if len(ds) != 1:
                    raise ValidationError("boundary point must have degree one")
            else:
                raise ValidationError(f"unknown node kind {k!r}")
        if sorted(self.boundary) != sorted(v for v, k in kind.items() if k == BOUNDARY):
            raise ValidationError("boundary list does not match boundary nodes")
        if euler_defect(self):
            raise ValidationError("rotation data is not a planar embedding")
        return self

    def __repr__(self) -> str:
        nc, nk = self.counts()
        return (f"WebDiagram(boundary={''.join(self.boundary_signs())!r}, "
                f"vertices={self.num_vertices}, crossings={nc}, clasps={nk}, loops={self.loops})")


def clasp_out_flags(a: int, b: int) -> list[bool]:
    """Orientation of the box darts of ``JW(a, b)`` in ccw order."""
    n = a + b
    bottom = [i >= a for i in range(n)]            # + strands enter, - strands leave
    top = [j < a for j in range(n)][::-1]          # + strands leave, - strands enter
    return bottom + top


def euler_defect(w: WebDiagram) -> int:
    """``2c - (V - E + F)`` for the map with the disk boundary collapsed to one vertex."""
    nodes, mate, dnode, pos = w.nodes, w.mate, w.dnode, w.pos
    bset = set(w.boundary)
    if not mate:
        return 0
    # virtual vertex: boundary darts in clockwise order
    bdarts = [nodes[b][0] for b in w.boundary][::-1]
    bpos = {d: i for i, d in enumerate(bdarts)}

    def prev(m: int) -> int:
        if m in bpos:
            return bdarts[bpos[m] - 1]
        ds = nodes[dnode[m]]
        return ds[pos[m] - 1]

    seen: set[int] = set()
    f = 0
    for d0 in mate:
        if d0 in seen:
            continue
        f += 1
        d = d0
        while d not in seen:
            seen.add(d)
            d = prev(mate[d])
    e = len(mate) // 2
    internal = [v for v in nodes if v not in bset]
    v_count = len(internal) + (1 if bset else 0)
    # connected components of the collapsed map
    parent: dict[object, object] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def owner(d: int):
        v = dnode[d]
        return "B" if v in bset else v

    for v in internal:
        find(v)
    if bset:
        find("B")
    for d, m in mate.items():
        ra, rb = find(owner(d)), find(owner(m))
        if ra != rb:
            parent[ra] = rb
    c = len({find(x) for x in list(parent)})
    return 2 * c - (v_count - e + f)
