"""Finite balls in the quasi-median Cayley graph of a graph product.

Vertices are canonical words; two of them are joined when they differ by a
single non-trivial vertex-group element.  Hyperplanes are computed with a
union-find over edges (opposite sides of induced squares, sides of triangles).
Anything that might be cut by the ball boundary is flagged so that no answer
about the infinite graph is certified from partial data.
"""
from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .exceptions import WreathKitError
from .graphprod import GPContext, gp_inv, gp_mul


@dataclass(frozen=True)
class QMEdge:
    id: int
    lo: tuple
    hi: tuple
    vertex: object
    elem: object  # lo * (vertex, elem) == hi


@dataclass(frozen=True)
class Hyperplane:
    id: int
    edges: frozenset
    carrier: frozenset
    truncated: bool


class SectorCount(NamedTuple):
    count: int
    approximate: bool


class Separation(enum.Enum):
    CERTIFIED_TRUE = "certified-true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"


class QMBall:
    """The ball of a given radius around ``center``; immutable once built."""

    def __init__(self, ctx, center, radius, dist, adjacency, edges, triangles, squares, boundary):
        self.ctx = ctx
        self.center = center
        self.radius = radius
        self.dist = dist
        self.adjacency = adjacency
        self.edges = edges
        self.triangles = triangles
        self.squares = squares
        self.boundary = boundary
        self._edge_index = {frozenset((e.lo, e.hi)): e.id for e in edges}
        self._hyperplanes = None

    @property
    def vertices(self) -> list:
        return list(self.dist)

    def edge_id(self, x, y) -> int:
        return self._edge_index[frozenset((x, y))]

    def hyperplanes(self) -> list:
        if self._hyperplanes is None:
            self._hyperplanes = _compute_hyperplanes(self)
        return self._hyperplanes

    def hyperplane_of(self) -> dict:
        return {eid: h.id for h in self.hyperplanes() for eid in h.edges}

    def hyperplane(self, hid: int) -> Hyperplane:
        hs = self.hyperplanes()
        if not 0 <= hid < len(hs):
            raise WreathKitError(f"unknown hyperplane {hid}")
        return hs[hid]

    def bfs_distances(self, source) -> dict:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def to_json(self) -> dict:
        ctx = self.ctx
        hmap = self.hyperplane_of()
        return {
            "center": ctx.encode(self.center),
            "radius": self.radius,
            "vertices": [ctx.encode(v) for v in self.dist],
            "edges": [
                {"u": ctx.encode(e.lo), "v": ctx.encode(e.hi), "vertex": _enc_vertex(ctx, e.vertex),
                 "elem": ctx.spec(e.vertex).encode(e.elem), "hyperplane": hmap[e.id]}
                for e in self.edges
            ],
        }


def _enc_vertex(ctx, u):
    return ctx.graph.base.encode(u) if ctx.is_lazy else u


def build_ball(ctx: GPContext, radius: int, center=(), vertices=None) -> QMBall:
    """BFS ball of ``QM(Γ, G)``.

    Every vertex group must be finite.  For a lazy Cayley graph ``vertices``
    must name the finite set of vertex groups whose elements are used as
    generators; the ball then lives in the sub-graph-product they span.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if ctx.is_lazy and vertices is None:
        raise ValueError("a lazy Cayley context needs an explicit finite vertex set")
    verts = ctx.vertices() if vertices is None else sorted(set(vertices), key=ctx.vertex_key)
    for u in verts:
        if not ctx.spec(u).is_finite:
            raise WreathKitError(f"vertex group at {u!r} is infinite; balls would be infinite")
    gens = ctx.generators(verts)
    center = ctx.elem(center)

    dist = {center: 0}
    order = [center]
    frontier = [center]
    for r in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for s in gens:
                y = gp_mul(ctx, x, (s,))
                if y not in dist:
                    dist[y] = r
                    nxt.append(y)
                    order.append(y)
        frontier = nxt

    adjacency = {x: set() for x in order}
    boundary = set()
    pairs = {}
    for x in order:
        for s in gens:
            y = gp_mul(ctx, x, (s,))
            if y not in dist:
                boundary.add(x)
                continue
            adjacency[x].add(y)
            key = frozenset((x, y))
            if key not in pairs:
                pairs[key] = (x, y, s)

    pos = {x: i for i, x in enumerate(order)}
    raw = []
    for x, y, s in pairs.values():
        lo, hi = (x, y) if pos[x] < pos[y] else (y, x)
        label = gp_mul(ctx, gp_inv(ctx, lo), hi)
        (u, g), = label
        raw.append((pos[lo], pos[hi], lo, hi, u, g))
    raw.sort(key=lambda t: (t[0], t[1]))
    edges = [QMEdge(i, lo, hi, u, g) for i, (_, _, lo, hi, u, g) in enumerate(raw)]

    triangles = set()
    for e in edges:
        for w in adjacency[e.lo] & adjacency[e.hi]:
            triangles.add(frozenset((e.lo, e.hi, w)))

    squares = {}
    for x in order:
        nbrs = sorted(adjacency[x], key=pos.__getitem__)
        for i, y in enumerate(nbrs):
            for z in nbrs[i + 1:]:
                if z in adjacency[y]:
                    continue
                for w in adjacency[y] & adjacency[z]:
                    if w == x or w in adjacency[x]:
                        continue
                    key = frozenset((x, y, z, w))
                    if key not in squares:
                        squares[key] = (x, y, w, z)

    ball = QMBall(ctx, center, radius, dist, {x: frozenset(n) for x, n in adjacency.items()},
                  edges, sorted(triangles, key=lambda t: sorted(pos[v] for v in t)),
                  [squares[k] for k in sorted(squares, key=lambda t: sorted(pos[v] for v in t))],
                  frozenset(boundary))
    return ball


def _square_pairs(ball, sq):
    x, y, w, z = sq
    eid = ball.edge_id
    # (x-y, z-w) and (x-z, y-w) are the two pairs of opposite sides
    return (eid(x, y), eid(z, w)), (eid(x, z), eid(y, w))


def _compute_hyperplanes(ball: QMBall) -> list:
    parent = list(range(len(ball.edges)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for sq in ball.squares:
        for a, b in _square_pairs(ball, sq):
            union(a, b)
    for tri in ball.triangles:
        x, y, z = tuple(tri)
        union(ball.edge_id(x, y), ball.edge_id(y, z))
        union(ball.edge_id(x, y), ball.edge_id(x, z))

    classes = {}
    for e in ball.edges:
        classes.setdefault(find(e.id), []).append(e)
    out = []
    for hid, root in enumerate(sorted(classes)):
        members = classes[root]
        carrier = frozenset(v for e in members for v in (e.lo, e.hi))
        truncated = bool(carrier & ball.boundary)
        out.append(Hyperplane(hid, frozenset(e.id for e in members), carrier, truncated))
    return out


def hyperplanes(ball: QMBall) -> list:
    return ball.hyperplanes()


def sector_count(ball: QMBall, h: Hyperplane) -> SectorCount:
    """Components of the ball minus the edges of ``h`` that meet its carrier."""
    h = ball.hyperplane(h.id)
    removed = {frozenset((ball.edges[i].lo, ball.edges[i].hi)) for i in h.edges}
    seen = {}
    comp = 0
    for start in h.carrier:
        if start in seen:
            continue
        seen[start] = comp
        stack = [start]
        while stack:
            x = stack.pop()
            for y in ball.adjacency[x]:
                if y not in seen and frozenset((x, y)) not in removed:
                    seen[y] = comp
                    stack.append(y)
        comp += 1
    return SectorCount(comp, h.truncated)


def _transverse_table(ball: QMBall) -> dict:
    hmap = ball.hyperplane_of()
    table = {}
    for sq in ball.squares:
        (a, _), (b, _) = _square_pairs(ball, sq)
        ha, hb = hmap[a], hmap[b]
        if ha != hb:
            table.setdefault(ha, set()).add(hb)
            table.setdefault(hb, set()).add(ha)
    return table


def are_transverse(ball: QMBall, h1: Hyperplane, h2: Hyperplane) -> bool:
    if h1.id == h2.id:
        return False
    return h2.id in _transverse_table(ball).get(h1.id, set())


def strongly_separated_in_ball(ball: QMBall, h1: Hyperplane, h2: Hyperplane) -> Separation:
    """Ball-local strong separation.

    ``FALSE`` is always sound (a common transverse hyperplane is seen).  A
    certificate is only issued when both hyperplanes and every hyperplane
    transverse to one of them lie entirely inside the ball.
    """
    if h1.id == h2.id:
        raise ValueError("strong separation is a relation between distinct hyperplanes")
    table = _transverse_table(ball)
    t1 = table.get(h1.id, set()) - {h1.id, h2.id}
    t2 = table.get(h2.id, set()) - {h1.id, h2.id}
    if t1 & t2:
        return Separation.FALSE
    hs = ball.hyperplanes()
    involved = {h1.id, h2.id} | t1 | t2
    if any(hs[i].truncated for i in involved):
        return Separation.INCONCLUSIVE
    return Separation.CERTIFIED_TRUE


_PALETTE = ("red", "blue", "forestgreen", "orange", "purple", "brown", "deeppink", "teal",
            "goldenrod", "navy", "olive", "maroon", "gray40", "darkcyan", "crimson", "indigo")


def export_dot(ball: QMBall, highlight=()) -> str:
    ctx = ball.ctx
    highlight = set(highlight)
    hmap = ball.hyperplane_of()
    lines = ["digraph qm {", "  edge [dir=none];"]
    for v in ball.dist:
        lines.append(f"  {json.dumps(ctx.text(v))};")
    for e in ball.edges:
        hid = hmap[e.id]
        attrs = [f'color="{_PALETTE[hid % len(_PALETTE)]}"', f'label="h{hid}"']
        if hid in highlight:
            attrs.append("penwidth=3")
        lines.append(f"  {json.dumps(ctx.text(e.lo))} -> {json.dumps(ctx.text(e.hi))} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
