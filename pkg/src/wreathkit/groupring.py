"""Laurent polynomials over Z and Z/k: ring arithmetic and units.

The group ring of Z with coefficients in a cyclic group is identified with
``R[X, X^-1]``.  Degrees are arbitrary integers and are never shifted
implicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional


@dataclass(frozen=True)
class Laurent:
    """``sum c_n X^n`` over Z (``k == 0``) or Z/k, zero coefficients pruned."""

    k: int
    coeffs: tuple = ()  # sorted ((degree, coefficient), ...)

    def __post_init__(self):
        if self.k < 0 or self.k == 1:
            raise ValueError(f"coefficient modulus must be 0 or at least 2, got {self.k}")
        merged = {}
        for n, c in self.coeffs:
            merged[n] = merged.get(n, 0) + c
        object.__setattr__(self, "coeffs", _clean(self.k, merged))

    @classmethod
    def from_dict(cls, k: int, mapping: Mapping[int, int]) -> "Laurent":
        return cls(k, tuple(mapping.items()))

    @classmethod
    def monomial(cls, k: int, c: int = 1, n: int = 0) -> "Laurent":
        return cls(k, ((n, c),))

    @classmethod
    def one(cls, k: int) -> "Laurent":
        return cls.monomial(k, 1, 0)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def degrees(self) -> tuple:
        return (self.coeffs[0][0], self.coeffs[-1][0]) if self.coeffs else (0, -1)

    def reduce(self, m: int) -> "Laurent":
        """Reduce the coefficients modulo ``m`` (``m`` must divide ``k``)."""
        if self.k and self.k % m:
            raise ValueError(f"{m} does not divide {self.k}")
        return Laurent(m, self.coeffs)

    def __add__(self, other):
        return l_add(self, other)

    def __neg__(self):
        return Laurent(self.k, tuple((n, -c) for n, c in self.coeffs))

    def __sub__(self, other):
        return l_add(self, -other)

    def __mul__(self, other):
        return l_mul(self, other)

    def __pow__(self, e: int):
        if e < 0:
            inverse = unit_invert(self)
            if inverse is None:
                raise ValueError(f"{self} is not a unit")
            return inverse ** -e
        result, base = Laurent.one(self.k), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_json(self) -> dict:
        return {"k": self.k, "coeffs": {str(n): c for n, c in self.coeffs}}

    @classmethod
    def from_json(cls, obj) -> "Laurent":
        return cls(int(obj["k"]), tuple((int(n), int(c)) for n, c in obj.get("coeffs", {}).items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for n, c in reversed(self.coeffs):
            if n == 0:
                body = str(abs(c))
            else:
                mono = "X" if n == 1 else f"X^{n}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out + (f" (mod {self.k})" if self.k else "")


def _clean(k, mapping) -> tuple:
    items = []
    for n, c in mapping.items():
        if k:
            c %= k
        if c:
            items.append((n, c))
    return tuple(sorted(items))


def _same_ring(p: Laurent, q: Laurent):
    if p.k != q.k:
        raise ValueError(f"coefficient rings differ: Z/{p.k} vs Z/{q.k}")


def l_add(p: Laurent, q: Laurent) -> Laurent:
    _same_ring(p, q)
    return Laurent(p.k, p.coeffs + q.coeffs)


def l_mul(p: Laurent, q: Laurent) -> Laurent:
    _same_ring(p, q)
    out = {}
    for n, a in p.coeffs:
        for m, b in q.coeffs:
            out[n + m] = out.get(n + m, 0) + a * b
    return Laurent(p.k, tuple(out.items()))


def factor_modulus(k: int) -> list:
    """Prime factorisation ``[(p, r), ...]`` by trial division."""
    if k < 2:
        raise ValueError("factor_modulus needs k >= 2")
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            r = 0
            while k % p == 0:
                k //= p
                r += 1
            out.append((p, r))
        p += 1
    if k > 1:
        out.append((k, 1))
    return out


def _scalar_is_unit(k: int, c: int) -> bool:
    return abs(c) == 1 if k == 0 else math.gcd(c, k) == 1


def _invert_prime_power(p: Laurent, prime: int, r: int) -> Optional[Laurent]:
    q = prime ** r
    local = p.reduce(q)
    residue = local.reduce(prime)
    if not residue.is_monomial():
        return None
    ((n, _),) = residue.coeffs
    c = local.as_dict()[n]
    c_inv = pow(c, -1, q)
    lead_inv = Laurent.monomial(q, c_inv, -n)
    a = lead_inv * local - Laurent.one(q)  # p = c X^n (1 + a), a = 0 mod prime
    # (1 + a)^-1 = 1 - a + a^2 - ... ; a^r = 0 mod prime^r
    series, power = Laurent.one(q), Laurent.one(q)
    for _ in range(1, r):
        power = power * (-a)
        series = series + power
    return lead_inv * series


def _crt(parts, k) -> Laurent:
    out = {}
    for local, q in parts:
        cofactor = k // q
        weight = cofactor * pow(cofactor, -1, q)
        for n, c in local.coeffs:
            out[n] = out.get(n, 0) + c * weight
    return Laurent(k, tuple(out.items()))


def unit_invert(p: Laurent) -> Optional[Laurent]:
    """The multiplicative inverse of ``p``, or ``None`` if ``p`` is not a unit.

    Over Z the units are ``+-X^n``.  Over Z/k, ``p`` is a unit exactly when
    its reduction modulo every prime divisor of ``k`` is a non-zero monomial;
    the inverse is built per prime power (monomial part times a finite
    geometric series in a nilpotent) and glued by the Chinese remainder
    theorem.
    """
    if p.k == 0:
        if p.is_monomial() and abs(p.coeffs[0][1]) == 1:
            (n, c), = p.coeffs
            return Laurent.monomial(0, c, -n)
        return None
    parts = []
    for prime, r in factor_modulus(p.k):
        local = _invert_prime_power(p, prime, r)
        if local is None:
            return None
        parts.append((local, prime ** r))
    inverse = _crt(parts, p.k)
    assert (p * inverse) == Laurent.one(p.k), "inverse construction failed"
    return inverse


def is_unit(p: Laurent) -> bool:
    return unit_invert(p) is not None


def is_trivial_unit(p: Laurent) -> bool:
    """Scalar unit times a power of X."""
    return p.is_monomial() and _scalar_is_unit(p.k, p.coeffs[0][1])


def brute_inverse(p: Laurent, degree_window) -> Optional[Laurent]:
    """Search for ``q`` supported on ``degree_window`` with ``p * q == 1``.

    Independent of any structure theory: the coefficients of ``q`` are fixed
    one at a time from the lowest degree up, enumerating all residues and
    keeping those consistent with the lowest still-open coefficient of the
    product (and with all product coefficients once ``q`` is complete).
    """
    k = p.k
    if k < 2:
        raise ValueError("brute_inverse works over Z/k with k >= 2")
    lo, hi = degree_window
    if p.is_zero() or hi < lo:
        return None
    pc = p.as_dict()
    plo, phi = p.degrees()
    size = hi - lo + 1
    q = [0] * size

    def product_coeff(d, upto):
        # coefficient of X^d in p*q using q[0..upto]
        total = 0
        for j in range(upto + 1):
            c = pc.get(d - (lo + j))
            if c:
                total += c * q[j]
        return total % k

    def search(j):
        if j == size:
            for d in range(plo + lo, phi + hi + 1):
                if product_coeff(d, size - 1) != (1 if d == 0 else 0):
                    return False
            return True
        # the product coefficient at degree plo + lo + j is final once q[j] is set
        d = plo + lo + j
        target = 1 if d == 0 else 0
        for v in range(k):
            q[j] = v
            if product_coeff(d, j) == target and search(j + 1):
                return True
        q[j] = 0
        return False

    if not search(0):
        return None
    return Laurent(k, tuple((lo + j, c) for j, c in enumerate(q)))


def radical_generator(k: int) -> int:
    """Product of the distinct primes dividing ``k``."""
    return math.prod(p for p, _ in factor_modulus(k))


def standard_unit_generators(k: int, degree_window=(-1, 1)) -> list:
    """``X^{+-1}``, the scalar units and ``1 + rad(k) * m`` for the monomials
    ``m`` in ``degree_window``: finitely many members of the classical
    candidate generating family for the units of (Z/k)[X, X^-1]."""
    gens = [Laurent.monomial(k, 1, 1), Laurent.monomial(k, 1, -1)]
    gens += [Laurent.monomial(k, c, 0) for c in range(2, k) if math.gcd(c, k) == 1]
    rad = radical_generator(k)
    lo, hi = degree_window
    for n in range(lo, hi + 1):
        for c in range(1, k // rad):
            u = Laurent.one(k) + Laurent.monomial(k, c * rad, n)
            if u != Laurent.one(k):
                gens.append(u)
    return gens


def generated_within(target: Laurent, gens, max_factors: int) -> bool:
    """Whether ``target`` is a product of at most ``max_factors`` of ``gens``."""
    one = Laurent.one(target.k)
    seen, frontier = {one}, [one]
    if target == one:
        return True
    for _ in range(max_factors):
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y == target:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return False
