"""Finite simplicial graphs and lazily explored Cayley graphs Cayl(B, S)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional

from .exceptions import SpecMismatchError, UnknownVertexError
from .groups import GroupSpec


@dataclass(frozen=True)
class SimpGraph:
    """A finite simplicial graph.

    The vertex order given at construction is the order used for every
    lexicographic tie-break downstream.
    """

    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex ids")
        vset = set(verts)
        edges = set()
        for e in self.edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in vset or v not in vset:
                raise UnknownVertexError(f"edge {e!r} uses an unknown vertex")
            edges.add(frozenset((u, v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))
        adj = {v: set() for v in verts}
        for e in edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(verts)})

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def complement(self) -> "SimpGraph":
        vs = self.vertices
        edges = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if not self.adjacent(u, v)]
        return SimpGraph(vs, frozenset(frozenset(e) for e in edges))

    def components(self) -> list:
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def to_json(self) -> dict:
        edges = sorted((sorted(e, key=self.index) for e in self.edges),
                       key=lambda e: (self.index(e[0]), self.index(e[1])))
        return {"vertices": list(self.vertices), "edges": [list(e) for e in edges]}

    @classmethod
    def from_json(cls, obj) -> "SimpGraph":
        return cls(tuple(obj["vertices"]), frozenset(frozenset(e) for e in obj.get("edges", [])))

    @classmethod
    def from_edges(cls, vertices: Iterable[Hashable], edges: Iterable) -> "SimpGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))


def is_join(g: SimpGraph) -> Optional[tuple]:
    """Return a join witness ``(V1, V2)`` or ``None``.

    A graph is a join exactly when its complement is disconnected; ``V1`` is
    the complement component containing the first vertex.
    """
    if len(g) < 2:
        raise ValueError("is_join needs at least two vertices")
    comps = g.complement().components()
    if len(comps) == 1:
        return None
    first = comps[0]
    return first, frozenset(g.vertices) - first


def clique_number(g: SimpGraph) -> int:
    """Maximum clique size (Bron-Kerbosch with pivoting)."""
    if not len(g):
        return 0
    best = 0

    def expand(size, candidates, excluded):
        nonlocal best
        if not candidates and not excluded:
            best = max(best, size)
            return
        if size + len(candidates) <= best:
            return
        pivot = max(candidates | excluded, key=lambda v: len(g.neighbors(v) & candidates))
        for v in list(candidates - g.neighbors(pivot)):
            nbrs = g.neighbors(v)
            expand(size + 1, candidates & nbrs, excluded & nbrs)
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand(0, frozenset(g.vertices), frozenset())
    return best


def induced(g: SimpGraph, vs) -> SimpGraph:
    vs = set(vs)
    for v in vs:
        if v not in g:
            raise UnknownVertexError(f"unknown vertex {v!r}")
    verts = tuple(v for v in g.vertices if v in vs)
    return SimpGraph(verts, frozenset(e for e in g.edges if e <= vs))


class LazyCayley:
    """Cayl(B, S) for a (possibly infinite) group B, explored on demand.

    ``S`` is symmetrised and the identity removed on construction.
    """

    def __init__(self, base: GroupSpec, connection_set: Iterable):
        self.base = base
        conn = set()
        for s in connection_set:
            s = base.elem(s)
            if base.is_identity(s):
                continue
            conn.add(s)
            conn.add(base.inv(s))
        self.S = frozenset(conn)

    def __repr__(self):
        return f"LazyCayley({self.base}, {self.sorted_S()})"

    def __eq__(self, other):
        return isinstance(other, LazyCayley) and (self.base, self.S) == (other.base, other.S)

    def __hash__(self):
        return hash((self.base, self.S))

    def __contains__(self, b) -> bool:
        return self.base.contains(b)

    def sorted_S(self) -> list:
        return sorted(self.S, key=lambda s: (self.base.norm(s), self.base.sort_key(s)))

    def adjacent(self, b1, b2) -> bool:
        B = self.base
        return b1 != b2 and B.mul(B.inv(b1), b2) in self.S

    def induced(self, vs) -> SimpGraph:
        """The finite subgraph of Cayl(B, S) spanned by ``vs``."""
        B = self.base
        verts = sorted(set(vs), key=B.sort_key)
        for v in verts:
            B.check(v)
        edges = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:] if self.adjacent(u, v)]
        return SimpGraph(tuple(verts), frozenset(frozenset(e) for e in edges))


def cayley_adjacent(c: LazyCayley, b1, b2) -> bool:
    if not (c.base.contains(b1) and c.base.contains(b2)):
        raise SpecMismatchError(f"{b1!r} or {b2!r} is not in {c.base}")
    return c.adjacent(b1, b2)
