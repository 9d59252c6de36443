"""Automorphisms of lamplighter-type groups F wr H.

``F`` is cyclic and ``H`` is Z, a finite cyclic group or a free product of
cyclic groups.  Automorphisms are words of elementary ones, each acting on
concrete elements; equality is decided on the finite generating set made of
the unit lamp at the identity and one generator per free factor of ``H``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .exceptions import InvalidAutomorphismError, SpecMismatchError
from .groupring import Laurent, unit_invert
from .groups import INFINITE, Cyclic, FreeProductOfCyclics
from .wreath import WreathElem, WreathProduct, rho_sum, w_inv, w_mul, w_pow


# elementary automorphisms

@dataclass(frozen=True)
class Inner:
    g: WreathElem


@dataclass(frozen=True)
class Lift:
    """Automorphism of H given on factor generators, with its inverse."""

    images: tuple
    inverse: tuple


@dataclass(frozen=True)
class Trans:
    """``z_i -> a z_i``, fixing the lamps and the other factors."""

    factor: int
    a: WreathElem


@dataclass(frozen=True)
class PConj:
    """``z_i -> a z_i a^-1``, fixing the lamps and the other factors."""

    factor: int
    a: WreathElem


@dataclass(frozen=True)
class Unit:
    u: Laurent


@dataclass(frozen=True)
class Mirror:
    pass


ElemAuto = Union[Inner, Lift, Trans, PConj, Unit, Mirror]


# structure of H

def _check_lamplighter(W: WreathProduct):
    if not isinstance(W.A, Cyclic):
        raise SpecMismatchError(f"lamp group must be cyclic, got {W.A}")
    if not isinstance(W.B, (Cyclic, FreeProductOfCyclics)):
        raise SpecMismatchError(f"H must be cyclic or a free product of cyclics, got {W.B}")


def h_factors(H) -> list:
    """``[(index, generator, order), ...]`` for the free factors of ``H``."""
    if isinstance(H, Cyclic):
        return [] if H.m == 1 else [(0, 1, INFINITE if H.m == 0 else H.m)]
    return [(i, H.generator(i), INFINITE if m == 0 else m)
            for i, m in enumerate(H.moduli) if m != 1]


def h_syllables(H, p) -> list:
    """``p`` as a word ``[(factor, exponent), ...]`` in the factor generators."""
    if isinstance(H, Cyclic):
        return [(0, p)] if p != 0 else []
    return list(p)


def _eval_on_h(H, images: dict, p, mul, power, identity):
    result = identity
    for i, e in h_syllables(H, p):
        result = mul(result, power(images[i], e))
    return result


def is_integers(H) -> bool:
    return isinstance(H, Cyclic) and H.m == 0


def _lamp_part(W, a: WreathElem) -> WreathElem:
    if a.group != W:
        raise SpecMismatchError(f"lamp datum lives in {a.group}, not {W}")
    if not W.B.is_identity(a.cursor):
        raise InvalidAutomorphismError("a lamp datum must have a trivial cursor")
    return a


def _lift_maps(W, e: Lift):
    H = W.B
    idx = [i for i, _, _ in h_factors(H)]
    if len(e.images) != len(idx) or len(e.inverse) != len(idx):
        raise InvalidAutomorphismError(f"a lift needs one image per factor ({len(idx)})")
    fwd = {i: H.elem(g) for i, g in zip(idx, e.images)}
    bwd = {i: H.elem(g) for i, g in zip(idx, e.inverse)}
    return fwd, bwd


def _phi(H, images, p):
    return _eval_on_h(H, images, p, H.mul, H.pow, H.identity)


def validate(W: WreathProduct, e: ElemAuto) -> Optional[str]:
    """``None`` if ``e`` is a well-defined automorphism of ``W``, otherwise
    a short diagnostic."""
    try:
        _check_lamplighter(W)
    except SpecMismatchError as exc:
        return str(exc)
    F, H = W.A, W.B
    factors = {i: (z, r) for i, z, r in h_factors(H)}
    if isinstance(e, Inner):
        if e.g.group != W:
            return f"conjugator lives in {e.g.group}, not {W}"
        return None
    if isinstance(e, Mirror):
        return None if is_integers(H) else "the mirror is only defined for H = Z"
    if isinstance(e, Unit):
        if not is_integers(H):
            return "unit automorphisms are only implemented for H = Z"
        if e.u.k != F.m:
            return f"unit has coefficients in Z/{e.u.k}, lamps are {F}"
        return None if unit_invert(e.u) is not None else f"{e.u} is not a unit"
    if isinstance(e, (Trans, PConj)):
        if e.factor not in factors:
            return f"no free factor {e.factor}"
        if e.a.group != W or not H.is_identity(e.a.cursor):
            return "a lamp datum must be a lamp-only element of the same group"
        z, r = factors[e.factor]
        if isinstance(e, Trans) and r != INFINITE:
            if not w_pow(w_mul(e.a, W.move(z)), r).is_identity():
                return f"(az)^{r} is not trivial"
        return None
    if isinstance(e, Lift):
        try:
            fwd, bwd = _lift_maps(W, e)
        except (InvalidAutomorphismError, SpecMismatchError, ValueError) as exc:
            return str(exc)
        for i, (z, r) in factors.items():
            if r != INFINITE:
                for images in (fwd, bwd):
                    if not H.is_identity(H.pow(images[i], r)):
                        return f"image of factor {i} does not have order dividing {r}"
            if _phi(H, fwd, bwd[i]) != z or _phi(H, bwd, fwd[i]) != z:
                return f"declared inverse does not invert the lift on factor {i}"
        return None
    return f"unknown automorphism {e!r}"


def ensure_valid(W: WreathProduct, e: ElemAuto) -> ElemAuto:
    msg = validate(W, e)
    if msg is not None:
        raise InvalidAutomorphismError(msg)
    return e


def _kappa(W, e, p) -> WreathElem:
    H = W.B
    images = {i: W.move(z) for i, z, _ in h_factors(H)}
    image = w_mul(e.a, images[e.factor])
    if isinstance(e, PConj):
        image = w_mul(image, w_inv(e.a))
    images[e.factor] = image
    return _eval_on_h(H, images, p, w_mul, w_pow, W.identity)


def apply_elem(W: WreathProduct, e: ElemAuto, x: WreathElem) -> WreathElem:
    if x.group != W:
        raise SpecMismatchError(f"{x.text()} is not an element of {W}")
    F, H = W.A, W.B
    if isinstance(e, Inner):
        return w_mul(w_mul(e.g, x), w_inv(e.g))
    if isinstance(e, Mirror):
        return W.make({-q: a for q, a in x.lamps}, -x.cursor)
    if isinstance(e, Lift):
        fwd, _ = _lift_maps(W, e)
        return W.make({_phi(H, fwd, q): a for q, a in x.lamps}, _phi(H, fwd, x.cursor))
    if isinstance(e, Unit):
        out = {}
        for q, c in x.lamps:
            for n, u in e.u.coeffs:
                out[q + n] = F.elem(out.get(q + n, 0) + c * u)
        return W.make(out, x.cursor)
    if isinstance(e, (Trans, PConj)):
        return w_mul(WreathElem(W, x.lamps, H.identity), _kappa(W, e, x.cursor))
    raise InvalidAutomorphismError(f"unknown automorphism {e!r}")


def inverse_elem(W: WreathProduct, e: ElemAuto) -> ElemAuto:
    if isinstance(e, Inner):
        return Inner(w_inv(e.g))
    if isinstance(e, Mirror):
        return e
    if isinstance(e, Lift):
        return Lift(e.inverse, e.images)
    if isinstance(e, Unit):
        return Unit(unit_invert(e.u))
    if isinstance(e, Trans):
        return Trans(e.factor, w_inv(e.a))
    if isinstance(e, PConj):
        return PConj(e.factor, w_inv(e.a))
    raise InvalidAutomorphismError(f"unknown automorphism {e!r}")


@dataclass(frozen=True)
class AutoWord:
    """Elementary automorphisms applied left to right."""

    group: WreathProduct
    autos: tuple = ()

    def __post_init__(self):
        _check_lamplighter(self.group)
        object.__setattr__(self, "autos", tuple(self.autos))
        for e in self.autos:
            ensure_valid(self.group, e)

    def __call__(self, x: WreathElem) -> WreathElem:
        return apply(self, x)

    def to_json(self) -> list:
        return [auto_to_json(self.group, e) for e in self.autos]

    @classmethod
    def from_json(cls, W: WreathProduct, obj) -> "AutoWord":
        return cls(W, tuple(auto_from_json(W, item) for item in obj))


def apply(w: AutoWord, x: WreathElem) -> WreathElem:
    for e in w.autos:
        x = apply_elem(w.group, e, x)
    return x


def compose(w1: AutoWord, w2: AutoWord) -> AutoWord:
    """``w1 o w2``: apply ``w2`` first."""
    if w1.group != w2.group:
        raise SpecMismatchError("automorphisms of different groups cannot be composed")
    return AutoWord(w1.group, w2.autos + w1.autos)


def inverse(w: AutoWord) -> AutoWord:
    return AutoWord(w.group, tuple(inverse_elem(w.group, e) for e in reversed(w.autos)))


def generators(W: WreathProduct) -> list:
    """Unit lamp at the identity, then one generator per free factor of H."""
    return [W.lamp(W.B.identity, 1)] + [W.move(z) for _, z, _ in h_factors(W.B)]


def equal(w1: AutoWord, w2: AutoWord) -> bool:
    if w1.group != w2.group:
        raise SpecMismatchError("automorphisms of different groups cannot be compared")
    return all(apply(w1, s) == apply(w2, s) for s in generators(w1.group))


def is_identity(w: AutoWord) -> bool:
    return equal(w, AutoWord(w.group))


def trans_is_inner(W: WreathProduct, g: WreathElem) -> Optional[WreathElem]:
    """The conjugator ``a`` with ``Trans(g) = Inner(a)``, or ``None``.

    Over H = Z the transvection by ``g`` is inner exactly when the colours
    of ``g`` sum to zero; ``a`` is then the sequence of prefix sums.
    """
    if not is_integers(W.B):
        raise SpecMismatchError("transvection conjugators are computed for H = Z only")
    _lamp_part(W, g)
    if not W.A.is_identity(rho_sum(g)):
        return None
    F = W.A
    a, running = {}, F.identity
    if g.lamps:
        lo, hi = g.lamps[0][0], g.lamps[-1][0]
        colours = g.lamp_map
        for q in range(lo, hi + 1):
            running = F.mul(running, colours.get(q, F.identity))
            a[q] = running
    conj = W.make(a)
    if not equal(AutoWord(W, (Trans(0, g),)), AutoWord(W, (Inner(conj),))):
        raise AssertionError("prefix-sum conjugator does not realise the transvection")
    return conj


def transvection_orbit_data(W: WreathProduct, factor: int, orbits) -> WreathElem:
    """Assemble a transvection datum from colourings of ``<z>``-orbits.

    ``orbits`` is a sequence of ``(h, colours)``: colour ``colours[j]`` is put
    at ``z^j h``.  Each orbit must have exactly ``r = ord(z)`` colours whose
    sum is trivial, and orbits must be disjoint.
    """
    _check_lamplighter(W)
    F, H = W.A, W.B
    factors = {i: (z, r) for i, z, r in h_factors(H)}
    if factor not in factors:
        raise InvalidAutomorphismError(f"no free factor {factor}")
    z, r = factors[factor]
    if r == INFINITE:
        raise InvalidAutomorphismError("orbit data needs a generator of finite order")
    lamps = {}
    for h, colours in orbits:
        h = H.elem(h)
        colours = [F.elem(c) for c in colours]
        if len(colours) != r:
            raise InvalidAutomorphismError(f"orbit of {H.text(h)} needs {r} colours, got {len(colours)}")
        total = F.identity
        for c in colours:
            total = F.mul(total, c)
        if not F.is_identity(total):
            raise InvalidAutomorphismError(f"colours on the orbit of {H.text(h)} sum to {total}, not 0")
        point = h
        for c in colours:
            if point in lamps:
                raise InvalidAutomorphismError(f"orbits overlap at {H.text(point)}")
            lamps[point] = c
            point = H.mul(z, point)
    a = W.make(lamps)
    ensure_valid(W, Trans(factor, a))
    return a


# JSON

def _lamps_json(W, a: WreathElem) -> dict:
    return {W.encode_key(q): W.A.encode(c) for q, c in a.lamps}


def _lamps_from_json(W, obj) -> WreathElem:
    return W.make({W.decode_key(k): W.A.decode(v) for k, v in obj.items()})


def auto_to_json(W: WreathProduct, e: ElemAuto) -> dict:
    if isinstance(e, Inner):
        return {"kind": "inner", "g": e.g.to_json()}
    if isinstance(e, Mirror):
        return {"kind": "mirror"}
    if isinstance(e, Unit):
        return {"kind": "unit", "u": e.u.to_json()}
    if isinstance(e, Lift):
        H = W.B
        return {"kind": "lift", "images": [H.encode(g) for g in e.images],
                "inverse": [H.encode(g) for g in e.inverse]}
    kind = "trans" if isinstance(e, Trans) else "pconj"
    return {"kind": kind, "factor": e.factor, "a": _lamps_json(W, e.a)}


def auto_from_json(W: WreathProduct, obj) -> ElemAuto:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidAutomorphismError(f"bad automorphism entry {obj!r}")
    kind = obj["kind"]
    if kind == "inner":
        return Inner(W.decode(obj["g"]))
    if kind == "mirror":
        return Mirror()
    if kind == "unit":
        return Unit(Laurent.from_json(obj["u"]))
    if kind == "lift":
        H = W.B
        return Lift(tuple(H.decode(g) for g in obj["images"]), tuple(H.decode(g) for g in obj["inverse"]))
    if kind in ("trans", "pconj"):
        cls = Trans if kind == "trans" else PConj
        return cls(int(obj.get("factor", 0)), _lamps_from_json(W, obj.get("a", {})))
    raise InvalidAutomorphismError(f"unknown automorphism kind {kind!r}")
