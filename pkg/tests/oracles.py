"""Independent reference implementations used only by the tests.

None of these reuse the rewriting engine: words are explored by brute force
over elementary moves, finite direct products are multiplied coordinatewise
and lamplighter elements are multiplied as 2x2 matrices over Laurent
polynomials.
"""
from collections import deque
from itertools import combinations, product


def move_closure(word, adjacent, spec_of, limit=200000):
    """Every word reachable from ``word`` with the moves delete-identity,
    merge-neighbours and swap-commuting-neighbours."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        nxt = []
        for i, (u, g) in enumerate(w):
            if spec_of(u).is_identity(g):
                nxt.append(w[:i] + w[i + 1:])
        for i in range(len(w) - 1):
            (u, g), (v, h) = w[i], w[i + 1]
            if u == v:
                nxt.append(w[:i] + ((u, spec_of(u).mul(g, h)),) + w[i + 2:])
            elif adjacent(u, v):
                nxt.append(w[:i] + ((v, h), (u, g)) + w[i + 2:])
        for x in nxt:
            if x not in seen:
                seen.add(x)
                queue.append(x)
                if len(seen) > limit:
                    raise RuntimeError("closure too large")
    return seen


def brute_canon(ctx, word):
    """Shortest reachable word, lexicographically least among those."""
    reach = move_closure(word, ctx.adjacent, ctx.spec)
    reach = [w for w in reach if all(not ctx.spec(u).is_identity(g) for u, g in w)]
    n = min(len(w) for w in reach)
    return min((w for w in reach if len(w) == n), key=ctx.word_key)


def shuffle_class(word, adjacent):
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if w[i][0] != w[i + 1][0] and adjacent(w[i][0], w[i + 1][0]):
                x = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
    return seen


class DirectProduct:
    """Coordinatewise product of finite vertex groups (complete graph)."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.verts = list(ctx.graph.vertices)
        self.specs = [ctx.spec(u) for u in self.verts]

    def identity(self):
        return tuple(s.identity for s in self.specs)

    def mul(self, x, y):
        return tuple(s.mul(a, b) for s, a, b in zip(self.specs, x, y))

    def inv(self, x):
        return tuple(s.inv(a) for s, a in zip(self.specs, x))

    def elements(self):
        return list(product(*[list(s.elements()) for s in self.specs]))

    def from_word(self, word):
        x = list(self.identity())
        for u, g in word:
            i = self.verts.index(u)
            x[i] = self.specs[i].mul(x[i], g)
        return tuple(x)

    def to_word(self, x):
        return tuple((u, a) for u, s, a in zip(self.verts, self.specs, x) if not s.is_identity(a))

    def conjugate(self, g, h):
        return any(self.mul(self.mul(x, g), self.inv(x)) == h for x in self.elements())


class Dihedral:
    """The infinite dihedral group as affine maps ``t -> s*t + n`` of Z.

    The two involutions are ``a: t -> -t`` and ``c: t -> 1 - t``.
    """

    gens = {"a": (-1, 0), "c": (-1, 1)}

    @staticmethod
    def mul(f, g):
        # (f o g)(t) = f(g(t))
        s1, n1 = f
        s2, n2 = g
        return s1 * s2, s1 * n2 + n1

    @classmethod
    def from_word(cls, word):
        x = (1, 0)
        for u, _ in word:
            x = cls.mul(x, cls.gens[u])
        return x

    @staticmethod
    def class_invariant(f):
        s, n = f
        return ("rot", abs(n)) if s == 1 else ("refl", n % 2)


def lamplighter_matrix(k, lamps, pos):
    """``(c, p) -> [[X^p, c], [0, 1]]`` as a pair (p, {degree: coeff})."""
    return pos, {q: a % k if k else a for q, a in lamps if (a % k if k else a)}


def matrix_mul(k, x, y):
    p1, c1 = x
    p2, c2 = y
    c = dict(c1)
    for q, a in c2.items():
        c[q + p1] = c.get(q + p1, 0) + a
    if k:
        c = {q: a % k for q, a in c.items()}
    return p1 + p2, {q: a for q, a in c.items() if a}


def is_join_brute(vertices, edges):
    vs = list(vertices)
    es = {frozenset(e) for e in edges}
    n = len(vs)
    for r in range(1, n):
        for part in combinations(vs, r):
            if vs[0] not in part:
                continue
            rest = [v for v in vs if v not in part]
            if all(frozenset((a, b)) in es for a in part for b in rest):
                return True
    return False


def clique_brute(vertices, edges):
    es = {frozenset(e) for e in edges}
    best = 1 if vertices else 0
    vs = list(vertices)
    for r in range(2, len(vs) + 1):
        for sub in combinations(vs, r):
            if all(frozenset(p) in es for p in combinations(sub, 2)):
                best = r
    return best


def bounded_order(mul, identity, x, bound=64):
    y = x
    for r in range(1, bound + 1):
        if y == identity:
            return r
        y = mul(y, x)
    return None
