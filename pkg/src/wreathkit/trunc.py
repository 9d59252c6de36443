"""Truncated wreath products ``A box_S B = Gamma_S A  x|  B``.

``Gamma_S A`` is the graph product of copies of ``A`` over the Cayley graph
``Cayl(B, S)``; ``B`` acts on it by translating syllable positions.  The
quotient map onto ``A wr B`` multiplies the syllables sitting at each
position.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .exceptions import FactorizationError, ParseError, SpecMismatchError
from .graphprod import GPContext, canonicalize, gp_inv, gp_mul
from .groups import GroupSpec, ensure_valid
from .sgraph import LazyCayley, SimpGraph, clique_number
from .wreath import WreathElem, WreathProduct


class Truncation:
    """The group ``A box_S B`` for a finite connection set ``S``."""

    def __init__(self, A: GroupSpec, B: GroupSpec, S=()):
        self.A = ensure_valid(A)
        self.B = ensure_valid(B)
        self.cayley = LazyCayley(B, S)
        self.S = self.cayley.S
        self.ctx = GPContext(self.cayley, A)

    def __repr__(self):
        return f"Truncation({self.A}, {self.B}, S={self.cayley.sorted_S()})"

    def __eq__(self, other):
        return isinstance(other, Truncation) and (self.A, self.B, self.S) == (other.A, other.B, other.S)

    def __hash__(self):
        return hash((self.A, self.B, self.S))

    @property
    def wreath(self) -> WreathProduct:
        return WreathProduct(self.A, self.B)

    @property
    def identity(self) -> "TruncElem":
        return TruncElem(self, (), self.B.identity)

    def make(self, word=(), pos=None) -> "TruncElem":
        B = self.B
        word = [(B.elem(q), self.A.elem(a)) for q, a in word]
        return TruncElem(self, canonicalize(self.ctx, word), B.identity if pos is None else B.elem(pos))

    def lamp(self, b, a=1) -> "TruncElem":
        return self.make([(b, a)])

    def move(self, b) -> "TruncElem":
        return self.make(pos=b)

    def shift(self, b, word) -> tuple:
        """Translate every syllable position of ``word`` by ``b`` on the left."""
        B = self.B
        if B.is_identity(b):
            return word
        return canonicalize(self.ctx, [(B.mul(b, q), a) for q, a in word])

    def lift(self, x: WreathElem) -> "TruncElem":
        """The obvious preimage: one syllable per lamp, then the cursor."""
        if x.group != self.wreath:
            raise SpecMismatchError(f"{x.group} is not the target of {self}")
        return TruncElem(self, canonicalize(self.ctx, list(x.lamps)), x.cursor)

    def with_S(self, S) -> "Truncation":
        return Truncation(self.A, self.B, S)


@dataclass(frozen=True)
class TruncElem:
    group: Truncation = field(repr=False)
    gp: tuple
    cursor: object

    def __mul__(self, other):
        return t_mul(self, other)

    def __invert__(self):
        return t_inv(self)

    def to_json(self) -> dict:
        g = self.group
        return {"word": g.ctx.encode(self.gp), "pos": g.B.encode(self.cursor)}


def _same(x, y):
    if x.group != y.group:
        raise SpecMismatchError(f"elements of {x.group!r} and {y.group!r} cannot be combined")


def t_mul(x: TruncElem, y: TruncElem) -> TruncElem:
    _same(x, y)
    T = x.group
    return TruncElem(T, gp_mul(T.ctx, x.gp, T.shift(x.cursor, y.gp)), T.B.mul(x.cursor, y.cursor))


def t_inv(x: TruncElem) -> TruncElem:
    T = x.group
    binv = T.B.inv(x.cursor)
    return TruncElem(T, T.shift(binv, gp_inv(T.ctx, x.gp)), binv)


def is_trivial(x: TruncElem) -> bool:
    return not x.gp and x.group.B.is_identity(x.cursor)


def t_act(h: TruncElem, v: tuple) -> tuple:
    """Action of ``h = g b`` on a vertex ``v`` of the quasi-median graph of
    ``Gamma_S A``: ``v -> g b v b^-1``."""
    T = h.group
    return gp_mul(T.ctx, h.gp, T.shift(h.cursor, v))


def pi_S(x: TruncElem) -> WreathElem:
    T = x.group
    A = T.A
    lamps = {}
    for q, a in x.gp:
        lamps[q] = A.mul(lamps[q], a) if q in lamps else a
    W = T.wreath
    return WreathElem(W, W._sorted(lamps), x.cursor)


def commutator(x, y):
    return x * y * ~x * ~y


@dataclass(frozen=True)
class FinitePresentation:
    """Generators and relators; a relator is a tuple of ``(generator, exponent)``."""

    gens: tuple
    rels: tuple

    def __post_init__(self):
        gens = tuple(self.gens)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        rels = tuple(tuple(_letter(tok) if isinstance(tok, str) else tuple(tok) for tok in rel)
                     for rel in self.rels)
        for rel in rels:
            for name, _ in rel:
                if name not in gens:
                    raise ParseError(f"relator uses undeclared generator {name!r}", 0, name)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "rels", rels)

    @classmethod
    def from_json(cls, obj) -> "FinitePresentation":
        return cls(tuple(obj["gens"]), tuple(tuple(r) for r in obj.get("rels", [])))

    def to_json(self) -> dict:
        return {"gens": list(self.gens), "rels": [[_token(n, e) for n, e in rel] for rel in self.rels]}

    def relator_text(self, rel) -> str:
        names = {n for n, _ in rel}
        if len(names) == 1 and all(e > 0 for _, e in rel):
            (name,) = names
            total = sum(e for _, e in rel)
            return name if total == 1 else f"{name}^{total}"
        if all(len(n) == 1 and e > 0 for n, e in rel):
            return "".join(n * e for n, e in rel)
        return "*".join(_token(n, e) for n, e in rel)

    def to_text(self) -> str:
        return f"<{','.join(self.gens)} | {', '.join(self.relator_text(r) for r in self.rels)}>"


_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([+-]?\d+))?\s*$")


def _letter(tok: str) -> tuple:
    m = _TOKEN.match(tok)
    if not m:
        raise ParseError(f"bad relator letter {tok!r}", 0, tok)
    return m.group(1), int(m.group(2)) if m.group(2) else 1


def _token(name, e) -> str:
    return name if e == 1 else f"{name}^{e}"


def _evaluate(rel, images, mul, inv, identity):
    result = identity
    for name, e in rel:
        g = images[name]
        if e < 0:
            g, e = inv(g), -e
        for _ in range(e):
            result = mul(result, g)
    return result


def check_hom(pres: FinitePresentation, images: dict):
    """Index of the first relator not killed in ``A wr B``, or ``None``."""
    missing = set(pres.gens) - set(images)
    if missing:
        raise SpecMismatchError(f"no image for generators {sorted(missing)}")
    groups = {img.group for img in images.values()}
    if len(groups) > 1:
        raise SpecMismatchError("generator images live in different wreath products")
    if not groups:
        return None
    (W,) = groups
    for i, rel in enumerate(pres.rels):
        if not _evaluate(rel, images, lambda a, b: a * b, lambda a: ~a, W.identity).is_identity():
            return i
    return None


def _visited_positions(rel, images, B):
    positions = set()
    cursor = B.identity
    for name, e in rel:
        g = images[name]
        if e < 0:
            g, e = ~g, -e
        for _ in range(e):
            positions.update(B.mul(cursor, q) for q, _ in g.lamps)
            cursor = B.mul(cursor, g.cursor)
    return positions


@dataclass
class FactorizationResult:
    S: list
    truncation: Truncation
    lifted: dict
    trace: list

    def to_json(self) -> dict:
        B = self.truncation.B
        return {
            "S": [B.encode(s) for s in self.S],
            "lifted_images": {k: v.to_json() for k, v in self.lifted.items()},
            "relator_trace": self.trace,
        }


def relators_trivial(pres: FinitePresentation, lifted: dict) -> list:
    """Indices of relators that are non-trivial for the lifted images."""
    bad = []
    for i, rel in enumerate(pres.rels):
        T = next(iter(lifted.values())).group
        if not is_trivial(_evaluate(rel, lifted, t_mul, t_inv, T.identity)):
            bad.append(i)
    return bad


def factor_through_truncation(pres: FinitePresentation, images: dict, max_S_size: int = 64) -> FactorizationResult:
    """Find a finite symmetric ``S`` such that the assignment of ``images``
    lifts to a morphism into ``A box_S B``.

    Starts from the empty set and, for the first relator that survives,
    adds the shortest difference between two lamp positions it visits.
    """
    failing = check_hom(pres, images)
    if failing is not None:
        raise FactorizationError(f"relator {failing} is not trivial in the wreath product")
    if not images:
        raise FactorizationError("no generators")
    W = next(iter(images.values())).group
    B = W.B
    S = set()
    trace = []
    while True:
        T = Truncation(W.A, B, S)
        lifted = {name: T.lift(img) for name, img in images.items()}
        bad = relators_trivial(pres, lifted)
        if not bad:
            ordered = T.cayley.sorted_S()
            return FactorizationResult(ordered, T, {n: lifted[n] for n in pres.gens}, trace)
        i = bad[0]
        visited = sorted(_visited_positions(pres.rels[i], images, B), key=B.sort_key)
        candidates = set()
        for b in visited:
            for b2 in visited:
                d = B.mul(B.inv(b), b2)
                if b != b2 and d not in S:
                    candidates.add(d)
        if not candidates:
            raise FactorizationError(f"relator {i} survives although all visited positions commute")
        d = min(candidates, key=lambda s: (B.norm(s), B.sort_key(s)))
        new_S = S | {d, B.inv(d)}
        if len(new_S) > max_S_size:
            raise FactorizationError(f"|S| would exceed {max_S_size}")
        trace.append({"relator": i, "added": B.encode(d), "S_size": len(new_S)})
        S = new_S


def cayley_clique(B: GroupSpec, S) -> int:
    """Clique number of ``Cayl(B, S)``.

    By left-invariance a maximum clique may be assumed to contain the
    identity; its other members are pairwise adjacent elements of ``S``.
    """
    cay = LazyCayley(B, S)
    elems = sorted(cay.S, key=B.sort_key)
    graph = SimpGraph(tuple(range(len(elems))),
                      frozenset(frozenset((i, j)) for i in range(len(elems)) for j in range(i)
                                if cay.adjacent(elems[i], elems[j])))
    return 1 + clique_number(graph)
