"""Expression grammars used on the command line.

gp-word   ``u^3 * v^-1``            syllables ``vertex^element`` (or ``1``, unless 1 is a vertex)
wreath    ``lamp(0,1) * t^3``        ``lamp(pos[,colour])``, ``move(pos)``,
                                    ``t``/``t0``/``t1``... with ``^int``
laurent   ``10*X + 6 (mod 15)``      terms ``[c][*]X[^n]``
gword     ``abcd``                  letters of the Grigorchuk alphabet

Every parser reports the offset of the first token it could not use.
"""
from __future__ import annotations

import json
import re

from .exceptions import ParseError
from .graphprod import GPContext, canonicalize
from .groupring import Laurent
from .groups import Cyclic, FreeAbelian, FreeProductOfCyclics
from .grig import check_gword
from .wreath import WreathElem, WreathProduct, w_mul, w_pow

_TOKENS = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[()*^,+\-\[\]]))")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKENS.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def expect(self, value):
        tok = self.next()
        if tok[1] != value:
            self.error(f"expected {value!r}, got {tok[1]!r}" if tok[0] else f"expected {value!r} at end of input", tok)
        return tok

    def accept(self, value):
        if self.peek()[1] == value:
            return self.next()
        return None

    def integer(self):
        tok = self.next()
        if tok[0] == "int":
            return int(tok[1])
        if tok[1] == "-" and self.peek()[0] == "int":
            return -int(self.next()[1])
        self.error(f"expected an integer, got {tok[1]!r}" if tok[0] else "expected an integer at end of input", tok)

    def done(self):
        tok = self.peek()
        if tok[0] is not None:
            self.error(f"unexpected token {tok[1]!r}")


def _products(sc: _Scanner, factor):
    items = [factor()]
    while sc.accept("*"):
        items.append(factor())
    return items


def _element_literal(sc: _Scanner, spec):
    """Integer for cyclic/table groups, ``[..]`` for Z^d."""
    if isinstance(spec, FreeAbelian):
        start = sc.expect("[")
        vals = [sc.integer()]
        while sc.accept(","):
            vals.append(sc.integer())
        sc.expect("]")
        try:
            return spec.elem(tuple(vals))
        except ValueError as exc:
            sc.error(str(exc), start)
    tok = sc.peek()
    n = sc.integer()
    try:
        if n < 0 and not isinstance(spec, Cyclic):
            return spec.inv(spec.elem(-n))
        return spec.elem(n)
    except ValueError as exc:
        sc.error(str(exc), tok)


def _vertex(ctx: GPContext, sc: _Scanner, tok):
    raw = tok[1]
    candidates = [raw] + ([int(raw)] if tok[0] == "int" else [])
    for c in candidates:
        if ctx.has_vertex(c):
            return c
    sc.error(f"unknown vertex {raw!r}", tok)


def parse_gp_word(ctx: GPContext, text: str):
    sc = _Scanner(text)

    def factor():
        tok = sc.next()
        if tok[0] is None:
            sc.error("expected a syllable at end of input", tok)
        # "1" is the identity unless the graph has a vertex named 1
        if tok[0] == "int" and tok[1] == "1" and sc.peek()[1] != "^" and not ctx.has_vertex(1):
            return []
        if tok[0] not in ("name", "int"):
            sc.error(f"expected a vertex name, got {tok[1]!r}", tok)
        u = _vertex(ctx, sc, tok)
        spec = ctx.spec(u)
        if sc.accept("^"):
            g = _element_literal(sc, spec)
        elif isinstance(spec, Cyclic):
            g = spec.elem(1)
        else:
            sc.error(f"vertex {u!r} needs an explicit element", tok)
        return [(u, g)]

    word = [syl for f in _products(sc, factor) for syl in f]
    sc.done()
    return canonicalize(ctx, word)


def _h_generator(H, name, sc, tok):
    if isinstance(H, Cyclic):
        if name == "t":
            return 1
    elif isinstance(H, FreeProductOfCyclics):
        m = re.fullmatch(r"t(\d+)", name)
        if m and int(m.group(1)) < len(H.moduli):
            return H.generator(int(m.group(1)))
        if name == "t" and len(H.moduli) == 1:
            return H.generator(0)
    sc.error(f"{name!r} is not a generator of {H}", tok)


def _position(sc: _Scanner, H):
    """A position in H: an element literal or a product of t-generators."""
    if isinstance(H, Cyclic) or sc.peek()[1] == "[" and isinstance(H, FreeAbelian):
        return _element_literal(sc, H)
    if isinstance(H, FreeProductOfCyclics):
        def factor():
            tok = sc.next()
            if tok[0] == "int" and tok[1] == "1":
                return H.identity
            if tok[0] != "name":
                sc.error(f"expected a generator, got {tok[1]!r}", tok)
            g = _h_generator(H, tok[1], sc, tok)
            return H.pow(g, sc.integer()) if sc.accept("^") else g

        out = H.identity
        for f in _products(sc, factor):
            out = H.mul(out, f)
        return out
    return _element_literal(sc, H)


def parse_wreath(W: WreathProduct, text: str) -> WreathElem:
    sc = _Scanner(text)
    A, B = W.A, W.B

    def factor():
        tok = sc.next()
        if tok[0] == "int" and tok[1] == "1":
            return W.identity
        if tok[0] != "name":
            sc.error(f"expected lamp(...), move(...) or a generator, got {tok[1]!r}" if tok[0]
                     else "expected a factor at end of input", tok)
        name = tok[1]
        if name == "lamp":
            sc.expect("(")
            pos = _position(sc, B)
            colour = _element_literal(sc, A) if sc.accept(",") else A.elem(1)
            sc.expect(")")
            g = W.make({pos: colour})
        elif name == "move":
            sc.expect("(")
            pos = _position(sc, B)
            sc.expect(")")
            g = W.move(pos)
        else:
            g = W.move(_h_generator(B, name, sc, tok))
        if sc.accept("^"):
            g = w_pow(g, sc.integer())
        return g

    out = W.identity
    for f in _products(sc, factor):
        out = w_mul(out, f)
    sc.done()
    return out


_MOD = re.compile(r"\(\s*mod\s+(\d+)\s*\)\s*$")


def parse_laurent(text: str, modulus=None) -> Laurent:
    m = _MOD.search(text)
    body = text
    k = modulus
    if m:
        k_text = int(m.group(1))
        if modulus is not None and modulus != k_text:
            raise ParseError(f"modulus {k_text} conflicts with requested modulus {modulus}", m.start(), text)
        k = k_text
        body = text[:m.start()]
    k = 0 if k is None else k
    if k == 1 or k < 0:
        raise ParseError("modulus must be 0 or at least 2", m.start() if m else 0, text)
    sc = _Scanner(body)
    sc.text = text
    terms = {}
    first = True
    while True:
        tok = sc.peek()
        sign = 1
        if tok[1] in ("+", "-"):
            sc.next()
            sign = -1 if tok[1] == "-" else 1
        elif not first:
            if tok[0] is None:
                break
            sc.error(f"expected '+' or '-', got {tok[1]!r}")
        elif tok[0] is None:
            sc.error("empty polynomial")
        first = False
        coeff, degree = 1, 0
        tok = sc.peek()
        if tok[0] == "int":
            sc.next()
            coeff = int(tok[1])
            if sc.accept("*"):
                xt = sc.next()
                if xt[1] != "X":
                    sc.error(f"expected 'X', got {xt[1]!r}", xt)
                degree = sc.integer() if sc.accept("^") else 1
            elif sc.peek()[1] == "X":
                sc.next()
                degree = sc.integer() if sc.accept("^") else 1
        elif tok[1] == "X":
            sc.next()
            degree = sc.integer() if sc.accept("^") else 1
        else:
            sc.error(f"expected a term, got {tok[1]!r}" if tok[0] else "expected a term at end of input")
        terms[degree] = terms.get(degree, 0) + sign * coeff
        if sc.peek()[0] is None:
            break
    return Laurent(k, tuple(terms.items()))


def parse_gword(text: str) -> str:
    stripped = "".join(text.split())
    try:
        return check_gword(stripped)
    except ParseError as exc:
        # report the offset in the original text
        seen = -1
        for i, ch in enumerate(text):
            if not ch.isspace():
                seen += 1
                if seen == exc.position:
                    raise ParseError(exc.message, i, text) from None
        raise


def parse_element_expr(tag: str, text: str, ctx=None, modulus=None):
    if tag == "gp-word":
        return parse_gp_word(ctx, text)
    if tag == "wreath":
        return parse_wreath(ctx, text)
    if tag == "laurent":
        return parse_laurent(text, modulus)
    if tag == "gword":
        return parse_gword(text)
    raise ValueError(f"unknown grammar {tag!r}")


def load_json_arg(arg: str):
    """Inline JSON (starting with ``{`` or ``[``) or a path to a JSON file."""
    s = arg.lstrip()
    if s.startswith(("{", "[")):
        return json.loads(arg)
    with open(arg, encoding="utf-8") as fh:
        return json.load(fh)
