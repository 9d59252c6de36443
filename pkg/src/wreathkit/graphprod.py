"""Normal forms in graph products of groups.

A word is a tuple of syllables ``(vertex, element)``.  A *canonical* word
(``Canon``) is graphically reduced and, among all words obtained from it by
swapping adjacent commuting syllables, the lexicographically least one for
the order ``(vertex order, element order)``.  Canonical words are therefore
hashable keys for the group elements they represent.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Union

from .exceptions import SpecMismatchError, UnknownVertexError
from .groups import GroupSpec, ensure_valid
from .sgraph import LazyCayley, SimpGraph, induced, is_join

Syllable = tuple
Word = tuple


class GPContext:
    """A graph together with a vertex group for each of its vertices.

    ``graph`` is a :class:`SimpGraph` or a :class:`LazyCayley`; for the lazy
    graph the vertices are the elements of ``B`` and ``groups`` must be a
    single spec shared by every vertex.
    """

    def __init__(self, graph: Union[SimpGraph, LazyCayley], groups: Union[GroupSpec, Mapping]):
        self.graph = graph
        self.is_lazy = isinstance(graph, LazyCayley)
        if isinstance(groups, GroupSpec):
            self._uniform = ensure_valid(groups)
            self._groups = None
        else:
            if self.is_lazy:
                raise ValueError("a lazy Cayley graph needs a single uniform vertex group")
            self._uniform = None
            self._groups = {}
            for v in graph.vertices:
                if v not in groups:
                    raise UnknownVertexError(f"no vertex group for {v!r}")
                self._groups[v] = ensure_valid(groups[v])
            extra = set(groups) - set(graph.vertices)
            if extra:
                raise UnknownVertexError(f"groups given for unknown vertices {sorted(map(str, extra))}")

    def __repr__(self):
        return f"GPContext({self.graph!r})"

    def has_vertex(self, u) -> bool:
        return u in self.graph

    def spec(self, u) -> GroupSpec:
        if not self.has_vertex(u):
            raise UnknownVertexError(f"unknown vertex {u!r}")
        return self._uniform if self._groups is None else self._groups[u]

    def adjacent(self, u, v) -> bool:
        return self.graph.adjacent(u, v)

    def vertex_key(self, u):
        if self.is_lazy:
            return self.graph.base.sort_key(u)
        return self.graph.index(u)

    def syllable_key(self, syl):
        u, g = syl
        return self.vertex_key(u), self.spec(u).sort_key(g)

    def word_key(self, word):
        return tuple(self.syllable_key(s) for s in word)

    def check_syllable(self, syl):
        if not (isinstance(syl, tuple) and len(syl) == 2):
            raise SpecMismatchError(f"bad syllable {syl!r}")
        u, g = syl
        self.spec(u).check(g)
        return syl

    def vertices(self):
        if self.is_lazy:
            raise ValueError("the lazy Cayley graph has infinitely many vertices")
        return self.graph.vertices

    def finite_graph(self, vs=None) -> SimpGraph:
        if self.is_lazy:
            if vs is None:
                raise ValueError("a finite vertex set is required for a lazy Cayley graph")
            return self.graph.induced(vs)
        return self.graph if vs is None else induced(self.graph, vs)

    def generators(self, vs=None) -> list:
        """All syllables of the vertex groups in ``vs`` (default: every vertex)."""
        verts = self.vertices() if vs is None else sorted(vs, key=self.vertex_key)
        gens = []
        for u in verts:
            spec = self.spec(u)
            gens.extend((u, g) for g in spec.elements() if not spec.is_identity(g))
        return gens

    # group structure on canonical words
    identity = ()

    def mul(self, u, v):
        return gp_mul(self, u, v)

    def inv(self, u):
        return gp_inv(self, u)

    def elem(self, word):
        return canonicalize(self, word)

    def text(self, word) -> str:
        if not word:
            return "1"
        parts = []
        for u, g in word:
            name = self.graph.base.text(u) if self.is_lazy else str(u)
            parts.append(f"{name}^{self.spec(u).text(g)}")
        return "*".join(parts)

    def encode(self, word) -> list:
        enc = self.graph.base.encode if self.is_lazy else (lambda u: u)
        return [[enc(u), self.spec(u).encode(g)] for u, g in word]

    def decode(self, obj) -> Word:
        word = []
        for item in obj:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise SpecMismatchError(f"bad syllable {item!r}")
            u, g = item
            if self.is_lazy:
                u = self.graph.base.decode(u)
            g = self.spec(u).decode(g)
            word.append((u, g))
        return canonicalize(self, word)


def reduce_push(ctx: GPContext, w: Word, h: Syllable) -> Word:
    """Graphically reduce the product of a reduced word ``w`` with one syllable."""
    u, g = ctx.check_syllable(h)
    spec = ctx.spec(u)
    if spec.is_identity(g):
        return w
    # the only syllable that can interact with h is the last one of h's vertex
    # that shuffles to the end, and all syllables after it commute with u
    for i in range(len(w) - 1, -1, -1):
        v = w[i][0]
        if v == u:
            merged = spec.mul(w[i][1], g)
            rest = w[:i] + w[i + 1:]
            return rest if spec.is_identity(merged) else rest + ((u, merged),)
        if not ctx.adjacent(u, v):
            break
    return w + ((u, g),)


def _lex_least(ctx: GPContext, word: Word) -> Word:
    remaining = list(word)
    out = []
    while remaining:
        best_key, best_idx = None, None
        blockers = []
        for idx, (u, g) in enumerate(remaining):
            if all(ctx.adjacent(u, b) for b in blockers):
                key = ctx.syllable_key((u, g))
                if best_key is None or key < best_key:
                    best_key, best_idx = key, idx
            blockers.append(u)
        out.append(remaining.pop(best_idx))
    return tuple(out)


def canonicalize(ctx: GPContext, w: Iterable) -> Word:
    """Reduce ``w`` left to right, then pick the lexicographically least
    shuffle-equivalent word greedily."""
    reduced = ()
    for syl in w:
        reduced = reduce_push(ctx, reduced, tuple(syl))
    return _lex_least(ctx, reduced)


def gp_mul(ctx: GPContext, u: Word, v: Word) -> Word:
    w = u
    for syl in v:
        w = reduce_push(ctx, w, syl)
    return _lex_least(ctx, w)


def gp_inv(ctx: GPContext, u: Word) -> Word:
    return _lex_least(ctx, tuple((v, ctx.spec(v).inv(g)) for v, g in reversed(u)))


def gp_pow(ctx: GPContext, u: Word, n: int) -> Word:
    if n < 0:
        u, n = gp_inv(ctx, u), -n
    result = ()
    for _ in range(n):
        result = gp_mul(ctx, result, u)
    return result


def _shuffles_left(ctx, w, i) -> bool:
    u = w[i][0]
    return all(ctx.adjacent(u, w[j][0]) for j in range(i))


def _shuffles_right(ctx, w, i) -> bool:
    u = w[i][0]
    return all(ctx.adjacent(u, w[j][0]) for j in range(i + 1, len(w)))


def _cyclic_pivot(ctx, w):
    left = [i for i in range(len(w)) if _shuffles_left(ctx, w, i)]
    right = [j for j in range(len(w)) if _shuffles_right(ctx, w, j)]
    for i in left:
        for j in right:
            if i < j and w[i][0] == w[j][0]:
                return i
    return None


def is_cyclically_reduced(ctx: GPContext, w: Word) -> bool:
    return _cyclic_pivot(ctx, w) is None


@dataclass(frozen=True)
class CyclicCanon:
    """``g = conjugator * core * conjugator^-1`` with ``core`` cyclically
    reduced; ``rep`` is the conjugacy-class invariant of ``g``."""

    conjugator: Word
    core: Word
    rep: Word


def _cyclic_reduce_pair(ctx, g):
    x, y = (), canonicalize(ctx, g)
    while True:
        i = _cyclic_pivot(ctx, y)
        if i is None:
            return x, y
        s = y[i]
        # y = s * rest, so y = s * (rest * s) * s^-1
        x = gp_mul(ctx, x, (s,))
        y = canonicalize(ctx, y[:i] + y[i + 1:] + (s,))


def _class_rep(ctx, core):
    # syllables commuting with the whole rest of the core can be conjugated
    # inside their own vertex group without touching anything else
    if len(core) == 0:
        return core
    adjusted = []
    for i, (u, g) in enumerate(core):
        if all(ctx.adjacent(u, v) for j, (v, _) in enumerate(core) if j != i):
            g = ctx.spec(u).conj_rep(g)
        adjusted.append((u, g))
    start = canonicalize(ctx, adjusted)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for idx in range(len(w)):
                if not _shuffles_left(ctx, w, idx):
                    continue
                rotated = canonicalize(ctx, w[:idx] + w[idx + 1:] + (w[idx],))
                if rotated not in seen:
                    seen.add(rotated)
                    nxt.append(rotated)
        frontier = nxt
    return min(seen, key=ctx.word_key)


def cyclic_reduce(ctx: GPContext, g: Word) -> CyclicCanon:
    x, y = _cyclic_reduce_pair(ctx, g)
    return CyclicCanon(conjugator=x, core=y, rep=_class_rep(ctx, y))


def cyclic_canon(ctx: GPContext, g: Word) -> Word:
    return cyclic_reduce(ctx, g).rep


def is_conjugate(ctx: GPContext, g: Word, h: Word) -> bool:
    return cyclic_canon(ctx, g) == cyclic_canon(ctx, h)


def essential_support(ctx: GPContext, g: Word) -> frozenset:
    _, core = _cyclic_reduce_pair(ctx, g)
    return frozenset(u for u, _ in core)


def is_irreducible(ctx: GPContext, g: Word) -> bool:
    """Essential support has at least two vertices and does not span a join."""
    supp = essential_support(ctx, g)
    if len(supp) < 2:
        return False
    return is_join(ctx.finite_graph(supp)) is None


def support_of_generated_bounded(ctx: GPContext, gens, depth: int) -> frozenset:
    """Union of essential supports of all products of at most ``depth``
    generators and inverses: a lower bound for the support of the subgroup."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    letters = []
    for g in gens:
        g = canonicalize(ctx, g)
        letters.extend([g, gp_inv(ctx, g)])
    support = set()
    seen = {()}
    frontier = [()]
    for _ in range(depth):
        nxt = []
        for w, s in product(frontier, letters):
            ws = gp_mul(ctx, w, s)
            if ws not in seen:
                seen.add(ws)
                nxt.append(ws)
                support |= essential_support(ctx, ws)
        frontier = nxt
    return frozenset(support)


def enumerate_ball(ctx: GPContext, radius: int, vs=None) -> dict:
    """Canonical words of syllable length at most ``radius`` (finite vertex
    groups only), mapped to their length."""
    gens = ctx.generators(vs)
    dist = {(): 0}
    frontier = [()]
    for r in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for s in gens:
                ws = gp_mul(ctx, w, (s,))
                if ws not in dist:
                    dist[ws] = r
                    nxt.append(ws)
        frontier = nxt
    return dist
