"""The Grigorchuk substitution and the truncated presentations it generates.

Words are plain strings over ``abcd``.  ``presentation(n)`` lists the
involution relators, ``bcd`` and the words ``u_0..u_n``, ``v_0..v_{n-1}``
verbatim, without any reduction.
"""
from __future__ import annotations

from .exceptions import ParseError
from .trunc import FinitePresentation

ALPHABET = "abcd"
SIGMA = {"a": "aca", "b": "d", "c": "b", "d": "c"}
U0 = "ad" * 4
V0 = "adacac" * 4


def check_gword(w: str) -> str:
    for i, ch in enumerate(w):
        if ch not in SIGMA:
            raise ParseError(f"letter {ch!r} is not in {{a,b,c,d}}", i, w)
    return w


def sigma_sub(w: str) -> str:
    return "".join(SIGMA[ch] for ch in check_gword(w))


def sigma_power(w: str, n: int) -> str:
    if n < 0:
        raise ValueError("n must be non-negative")
    for _ in range(n):
        w = sigma_sub(w)
    return w


def u_word(n: int) -> str:
    return sigma_power(U0, n)


def v_word(n: int) -> str:
    return sigma_power(V0, n)


def free_involutive_reduce(w: str) -> str:
    """Cancel adjacent equal letters (every generator is an involution)."""
    out = []
    for ch in check_gword(w):
        if out and out[-1] == ch:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def presentation(n: int) -> FinitePresentation:
    if n < 0:
        raise ValueError("n must be non-negative")
    rels = [(("a", 2),), (("b", 2),), (("c", 2),), (("d", 2),), (("b", 1), ("c", 1), ("d", 1))]
    words = [u_word(i) for i in range(n + 1)] + [v_word(i) for i in range(n)]
    rels += [tuple((ch, 1) for ch in w) for w in words]
    return FinitePresentation(tuple(ALPHABET), tuple(rels))
