"""Exact arithmetic in wreath products A wr B.

An element is a pair ``(c, p)`` where ``c`` is a finitely supported lamp map
``B -> A`` and ``p`` is the cursor.  Multiplication follows

    (c1, p1)(c2, p2) = (c1(.) c2(p1^-1 .), p1 p2)

so the lamps of the right factor are shifted by left multiplication with p1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .exceptions import SpecMismatchError, WreathKitError
from .groups import GroupSpec, ensure_valid


@dataclass(frozen=True)
class WreathProduct:
    A: GroupSpec
    B: GroupSpec

    def __post_init__(self):
        ensure_valid(self.A)
        ensure_valid(self.B)

    def __str__(self):
        return f"{self.A} wr {self.B}"

    def _sorted(self, lamps: dict) -> tuple:
        A = self.A
        return tuple(sorted(((b, a) for b, a in lamps.items() if not A.is_identity(a)),
                            key=lambda kv: self.B.sort_key(kv[0])))

    def make(self, lamps=None, pos=None) -> "WreathElem":
        A, B = self.A, self.B
        clean = {}
        for b, a in (lamps or {}).items():
            b, a = B.elem(b), A.elem(a)
            if b in clean:
                raise SpecMismatchError(f"duplicate lamp position {b!r}")
            clean[b] = a
        return WreathElem(self, self._sorted(clean), B.identity if pos is None else B.elem(pos))

    @property
    def identity(self) -> "WreathElem":
        return WreathElem(self, (), self.B.identity)

    def lamp(self, b, a=1) -> "WreathElem":
        return self.make({b: a})

    def move(self, b) -> "WreathElem":
        return self.make(pos=b)

    def random_element(self, rng, window: int = 3, lamps: int = 3) -> "WreathElem":
        A, B = self.A, self.B
        c = {}
        for _ in range(rng.randint(0, lamps)):
            c[B.random_element(rng, window)] = A.random_element(rng, window)
        return WreathElem(self, self._sorted(c), B.random_element(rng, window))

    def decode(self, obj) -> "WreathElem":
        if not isinstance(obj, dict):
            raise SpecMismatchError(f"wreath element must be an object, got {obj!r}")
        lamps = {}
        for key, val in obj.get("lamps", {}).items():
            lamps[self.decode_key(key)] = self.A.decode(val)
        return self.make(lamps, self.B.decode(obj.get("pos", self.B.encode(self.B.identity))))

    def encode_key(self, b) -> str:
        enc = self.B.encode(b)
        return str(enc) if isinstance(enc, int) else json.dumps(enc, separators=(",", ":"))

    def decode_key(self, key: str):
        try:
            return self.B.decode(json.loads(key))
        except json.JSONDecodeError:
            raise SpecMismatchError(f"bad lamp position key {key!r}") from None


@dataclass(frozen=True)
class WreathElem:
    group: WreathProduct
    lamps: tuple  # sorted ((position, colour), ...), no identity colours
    cursor: object

    @property
    def lamp_map(self) -> dict:
        return dict(self.lamps)

    def __mul__(self, other):
        return w_mul(self, other)

    def __invert__(self):
        return w_inv(self)

    def __pow__(self, n: int):
        return w_pow(self, n)

    def is_identity(self) -> bool:
        return not self.lamps and self.group.B.is_identity(self.cursor)

    def to_json(self) -> dict:
        g = self.group
        return {"lamps": {g.encode_key(b): g.A.encode(a) for b, a in self.lamps},
                "pos": g.B.encode(self.cursor)}

    def text(self) -> str:
        g = self.group
        parts = [f"lamp({g.B.text(b)},{g.A.text(a)})" for b, a in self.lamps]
        if not g.B.is_identity(self.cursor):
            parts.append(f"move({g.B.text(self.cursor)})")
        return "*".join(parts) or "1"


def _same_group(x: WreathElem, y: WreathElem):
    if x.group != y.group:
        raise SpecMismatchError(f"elements of {x.group} and {y.group} cannot be combined")


def w_mul(x: WreathElem, y: WreathElem) -> WreathElem:
    _same_group(x, y)
    G = x.group
    A, B = G.A, G.B
    lamps = dict(x.lamps)
    for r, a in y.lamps:
        q = B.mul(x.cursor, r)
        lamps[q] = A.mul(lamps[q], a) if q in lamps else a
    return WreathElem(G, G._sorted(lamps), B.mul(x.cursor, y.cursor))


def w_inv(x: WreathElem) -> WreathElem:
    G = x.group
    A, B = G.A, G.B
    pinv = B.inv(x.cursor)
    lamps = {B.mul(pinv, q): A.inv(a) for q, a in x.lamps}
    return WreathElem(G, G._sorted(lamps), pinv)


def w_pow(x: WreathElem, n: int) -> WreathElem:
    if n < 0:
        x, n = w_inv(x), -n
    result, base = x.group.identity, x
    while n:
        if n & 1:
            result = w_mul(result, base)
        base = w_mul(base, base)
        n >>= 1
    return result


def support(x: WreathElem) -> frozenset:
    return frozenset(b for b, _ in x.lamps)


def rho_sum(x: WreathElem):
    """Sum of all lamp colours (A must be abelian)."""
    A = x.group.A
    if not A.is_abelian():
        raise WreathKitError(f"rho_sum needs an abelian lamp group, {A} is not")
    total = A.identity
    for _, a in x.lamps:
        total = A.mul(total, a)
    return total


def project_B(x: WreathElem):
    return x.cursor


def normalizes_base(x: WreathElem) -> bool:
    """Whether ``x`` normalises the copy of B, i.e. has a constant lamp map."""
    G = x.group
    if G.B.is_finite:
        n = G.B.order()
        colours = {a for _, a in x.lamps}
        return not x.lamps or (len(x.lamps) == n and len(colours) == 1)
    return not x.lamps
