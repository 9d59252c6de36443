"""Base groups: cyclic groups, finite groups given by a multiplication table,
free abelian groups and free products of cyclic groups.

Elements are plain, hashable Python values (``int``, tuples of ``int`` or a
graph-product normal form) and all arithmetic goes through the GroupSpec object, so
the same payload can be used as a dictionary key anywhere downstream.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, ClassVar, Iterator, Optional

from .exceptions import InvalidSpecError, SpecMismatchError

INFINITE = math.inf


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class GroupSpec(ABC):
    """Common interface of every base group."""

    kind: ClassVar[str]

    @property
    @abstractmethod
    def identity(self) -> Any: ...

    @abstractmethod
    def contains(self, x) -> bool: ...

    @abstractmethod
    def _mul(self, x, y): ...

    @abstractmethod
    def _inv(self, x): ...

    @abstractmethod
    def order(self):
        """Group order, or ``INFINITE``."""

    @abstractmethod
    def elem_order(self, x): ...

    @abstractmethod
    def is_abelian(self) -> bool: ...

    @abstractmethod
    def to_json(self) -> dict: ...

    @abstractmethod
    def random_element(self, rng, size: int = 3): ...

    def check(self, x):
        if not self.contains(x):
            raise SpecMismatchError(f"{x!r} is not an element of {self}")
        return x

    def elem(self, x):
        """Coerce a loosely written payload into canonical form."""
        return self.check(x)

    def mul(self, x, y):
        return self._mul(self.check(x), self.check(y))

    def inv(self, x):
        return self._inv(self.check(x))

    def pow(self, x, n: int):
        self.check(x)
        if n < 0:
            x, n = self._inv(x), -n
        result, base = self.identity, x
        while n:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return result

    def is_identity(self, x) -> bool:
        return x == self.identity

    @property
    def is_finite(self) -> bool:
        return self.order() != INFINITE

    def elements(self) -> Iterator:
        raise InvalidSpecError(f"{self} is infinite; cannot enumerate")

    def sort_key(self, x):
        return x

    def norm(self, x) -> int:
        """A word-length style size used to rank differences of positions."""
        return 0 if self.is_identity(x) else 1

    def conj_rep(self, x):
        """A canonical representative of the conjugacy class of ``x``."""
        return x

    def encode(self, x):
        return x

    def decode(self, obj):
        return self.elem(obj)

    def text(self, x) -> str:
        return str(x)


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    """The cyclic group of order ``m``; ``m == 0`` encodes the integers."""

    m: int
    kind: ClassVar[str] = "cyclic"

    def __post_init__(self):
        if not _is_int(self.m) or self.m < 0:
            raise InvalidSpecError(f"cyclic modulus must be a non-negative integer, got {self.m!r}")

    @property
    def identity(self):
        return 0

    def contains(self, x):
        return _is_int(x) and (self.m == 0 or 0 <= x < self.m)

    def elem(self, x):
        if not _is_int(x):
            raise SpecMismatchError(f"{x!r} is not an integer")
        return x % self.m if self.m else x

    def _mul(self, x, y):
        return (x + y) % self.m if self.m else x + y

    def _inv(self, x):
        return (-x) % self.m if self.m else -x

    def order(self):
        return self.m if self.m else INFINITE

    def elements(self):
        if not self.m:
            return super().elements()
        return iter(range(self.m))

    def elem_order(self, x):
        self.check(x)
        if self.m == 0:
            return 1 if x == 0 else INFINITE
        return self.m // math.gcd(x, self.m)

    def is_abelian(self):
        return True

    def norm(self, x):
        return abs(x) if self.m == 0 else min(x, self.m - x)

    def to_json(self):
        return {"kind": "cyclic", "m": self.m}

    def random_element(self, rng, size=3):
        return rng.randint(-size, size) if self.m == 0 else rng.randrange(self.m)

    def __str__(self):
        return "Z" if self.m == 0 else f"Z/{self.m}"


@dataclass(frozen=True)
class FiniteTable(GroupSpec):
    """A finite group given by its multiplication table; index 0 is the identity.

    The constructor does not validate the table, use :func:`validate_spec`.
    """

    table: tuple
    kind: ClassVar[str] = "table"

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def identity(self):
        return 0

    @cached_property
    def _inverses(self):
        inverses = []
        for x in range(self.size):
            inverses.append(next(y for y in range(self.size) if self.table[x][y] == 0))
        return tuple(inverses)

    def contains(self, x):
        return _is_int(x) and 0 <= x < self.size

    def _mul(self, x, y):
        return self.table[x][y]

    def _inv(self, x):
        return self._inverses[x]

    def order(self):
        return self.size

    def elements(self):
        return iter(range(self.size))

    def elem_order(self, x):
        self.check(x)
        r, y = 1, x
        while y != 0:
            y = self.table[y][x]
            r += 1
        return r

    def is_abelian(self):
        n = self.size
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))

    def conj_rep(self, x):
        return min(self.table[self.table[k][x]][self._inverses[k]] for k in range(self.size))

    def to_json(self):
        return {"kind": "table", "table": [list(row) for row in self.table]}

    def random_element(self, rng, size=3):
        return rng.randrange(self.size)

    def __str__(self):
        return f"Table({self.size})"


@dataclass(frozen=True)
class FreeAbelian(GroupSpec):
    """Z^d with payloads given as length-``d`` integer tuples."""

    d: int
    kind: ClassVar[str] = "zd"

    def __post_init__(self):
        if not _is_int(self.d) or self.d < 0:
            raise InvalidSpecError(f"rank must be a non-negative integer, got {self.d!r}")

    @property
    def identity(self):
        return (0,) * self.d

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == self.d and all(_is_int(c) for c in x)

    def elem(self, x):
        if _is_int(x) and self.d == 1:
            x = (x,)
        if isinstance(x, list):
            x = tuple(x)
        return self.check(x)

    def _mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def _inv(self, x):
        return tuple(-a for a in x)

    def order(self):
        return INFINITE if self.d else 1

    def elements(self):
        if self.d:
            return super().elements()
        return iter([()])

    def elem_order(self, x):
        self.check(x)
        return 1 if not any(x) else INFINITE

    def is_abelian(self):
        return True

    def norm(self, x):
        return sum(abs(c) for c in x)

    def basis(self, i: int):
        return tuple(1 if j == i else 0 for j in range(self.d))

    def encode(self, x):
        return list(x)

    def to_json(self):
        return {"kind": "zd", "d": self.d}

    def random_element(self, rng, size=3):
        return tuple(rng.randint(-size, size) for _ in range(self.d))

    def text(self, x):
        return "(" + ",".join(map(str, x)) + ")"

    def __str__(self):
        return f"Z^{self.d}"


@dataclass(frozen=True)
class FreeProductOfCyclics(GroupSpec):
    """Free product of cyclic groups ``Z/m_0 * Z/m_1 * ...`` (0 encodes Z).

    Elements are normal forms of the graph product over the edgeless graph on
    the factor indices, i.e. tuples of ``(factor, exponent)`` syllables.
    """

    moduli: tuple
    kind: ClassVar[str] = "freeprod"

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(self.moduli))
        for m in self.moduli:
            if not _is_int(m) or m < 0:
                raise InvalidSpecError(f"free-product moduli must be non-negative integers, got {m!r}")

    @cached_property
    def context(self):
        from .graphprod import GPContext
        from .sgraph import SimpGraph

        n = len(self.moduli)
        return GPContext(SimpGraph(tuple(range(n)), ()), {i: Cyclic(m) for i, m in enumerate(self.moduli)})

    @property
    def identity(self):
        return ()

    def generator(self, i: int):
        if self.moduli[i] == 1:
            return ()
        return ((i, 1),)

    def contains(self, x):
        if not isinstance(x, tuple):
            return False
        for syl in x:
            if not (isinstance(syl, tuple) and len(syl) == 2 and _is_int(syl[0])
                    and 0 <= syl[0] < len(self.moduli)):
                return False
            spec = Cyclic(self.moduli[syl[0]])
            if not spec.contains(syl[1]) or syl[1] == 0:
                return False
        # distinct adjacent factors is exactly the reduced condition here
        return all(a[0] != b[0] for a, b in zip(x, x[1:]))

    def elem(self, x):
        from .graphprod import canonicalize

        if isinstance(x, (list, tuple)):
            word = []
            for syl in x:
                if not (isinstance(syl, (list, tuple)) and len(syl) == 2):
                    raise SpecMismatchError(f"bad syllable {syl!r}")
                i, e = syl
                if not (_is_int(i) and 0 <= i < len(self.moduli)):
                    raise SpecMismatchError(f"no free factor {i!r}")
                e = Cyclic(self.moduli[i]).elem(e)
                if e != 0:
                    word.append((i, e))
            return canonicalize(self.context, word)
        raise SpecMismatchError(f"{x!r} is not a free-product word")

    def _mul(self, x, y):
        from .graphprod import gp_mul

        return gp_mul(self.context, x, y)

    def _inv(self, x):
        from .graphprod import gp_inv

        return gp_inv(self.context, x)

    def _nontrivial_factors(self):
        return [m for m in self.moduli if m != 1]

    def order(self):
        factors = self._nontrivial_factors()
        if not factors:
            return 1
        if len(factors) == 1:
            return factors[0] if factors[0] else INFINITE
        return INFINITE

    def elements(self):
        if not self.is_finite:
            return super().elements()
        out = [()]
        for i, m in enumerate(self.moduli):
            if m > 1:
                out.extend(((i, e),) for e in range(1, m))
        return iter(out)

    def elem_order(self, x):
        from .graphprod import cyclic_reduce

        self.check(x)
        core = cyclic_reduce(self.context, x).core
        if not core:
            return 1
        if len(core) == 1:
            i, e = core[0]
            return Cyclic(self.moduli[i]).elem_order(e)
        return INFINITE

    def is_abelian(self):
        return len(self._nontrivial_factors()) <= 1

    def norm(self, x):
        return sum(Cyclic(self.moduli[i]).norm(e) for i, e in x)

    def conj_rep(self, x):
        from .graphprod import cyclic_canon

        return cyclic_canon(self.context, x)

    def encode(self, x):
        return [[i, e] for i, e in x]

    def to_json(self):
        return {"kind": "freeprod", "moduli": list(self.moduli)}

    def random_element(self, rng, size=3):
        word = []
        for _ in range(rng.randint(0, size)):
            i = rng.randrange(len(self.moduli))
            word.append([i, Cyclic(self.moduli[i]).random_element(rng, 2)])
        return self.elem(word)

    def text(self, x):
        if not x:
            return "1"
        return "*".join(f"z{i}^{e}" for i, e in x)

    def __str__(self):
        return " * ".join(str(Cyclic(m)) for m in self.moduli) or "1"


def validate_spec(spec: GroupSpec) -> Optional[str]:
    """Return ``None`` if ``spec`` is a valid group, otherwise a diagnostic."""
    if not isinstance(spec, FiniteTable):
        return None
    table, n = spec.table, spec.size
    if n == 0:
        return "empty table"
    for i, row in enumerate(table):
        if len(row) != n:
            return f"table is not square: row {i} has length {len(row)}, expected {n}"
        for j, v in enumerate(row):
            if not _is_int(v) or not 0 <= v < n:
                return f"entry ({i},{j}) = {v!r} out of range"
    for x in range(n):
        if table[0][x] != x or table[x][0] != x:
            return f"0 is not an identity: 0*{x} = {table[0][x]}, {x}*0 = {table[x][0]}"
    for x in range(n):
        if not any(table[x][y] == 0 and table[y][x] == 0 for y in range(n)):
            return f"no inverse for {x}"
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    return f"associativity fails for ({x},{y},{z})"
    return None


def ensure_valid(spec: GroupSpec) -> GroupSpec:
    problem = validate_spec(spec)
    if problem:
        raise InvalidSpecError(problem)
    return spec


def mul(spec: GroupSpec, x, y):
    return spec.mul(x, y)


def inv(spec: GroupSpec, x):
    return spec.inv(x)


def elem_order(spec: GroupSpec, x):
    return spec.elem_order(x)


def spec_from_json(obj: dict) -> GroupSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidSpecError(f"group spec must be an object with a 'kind', got {obj!r}")
    kind = obj["kind"]
    try:
        if kind == "cyclic":
            spec = Cyclic(obj["m"])
        elif kind == "table":
            spec = FiniteTable(obj["table"])
        elif kind == "zd":
            spec = FreeAbelian(obj["d"])
        elif kind == "freeprod":
            spec = FreeProductOfCyclics(obj["moduli"])
        else:
            raise InvalidSpecError(f"unknown group kind {kind!r}")
    except (KeyError, TypeError) as exc:
        raise InvalidSpecError(f"malformed {kind!r} spec: {exc}") from None
    return ensure_valid(spec)


def symmetric_group_table(n: int) -> FiniteTable:
    """Multiplication table of S_n, permutations listed with the identity first."""
    from itertools import permutations

    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FiniteTable(table)
