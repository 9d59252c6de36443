import itertools

import pytest

from wreathkit.autlamp import (AutoWord, Inner, Lift, Mirror, PConj, Trans, Unit, apply, compose, equal,
                               generators, inverse, is_identity, trans_is_inner, transvection_orbit_data,
                               validate)
from wreathkit.exceptions import InvalidAutomorphismError, SpecMismatchError
from wreathkit.groupring import Laurent
from wreathkit.groups import Cyclic, FreeProductOfCyclics
from wreathkit.wreath import WreathProduct, w_mul

L2 = WreathProduct(Cyclic(2), Cyclic(0))
LZ = WreathProduct(Cyclic(0), Cyclic(0))
L4 = WreathProduct(Cyclic(4), Cyclic(0))
D2 = WreathProduct(Cyclic(2), FreeProductOfCyclics((2, 2)))
M23 = WreathProduct(Cyclic(3), FreeProductOfCyclics((2, 3, 0)))


def word(W, *autos):
    return AutoWord(W, autos)


def test_validate_examples():
    z1 = D2.B.generator(1)
    good = D2.make({D2.B.identity: 1, z1: 1})
    assert validate(D2, Trans(1, good)) is None
    assert validate(D2, Trans(1, D2.make({z1: 1}))) is not None
    assert validate(L4, Unit(Laurent.from_dict(4, {0: 1, 1: 2}))) is None
    assert validate(L4, Unit(Laurent.from_dict(4, {0: 2}))) is not None
    assert validate(D2, Mirror()) is not None
    assert validate(L2, Unit(Laurent.one(4))) is not None


def test_invalid_entries_rejected():
    with pytest.raises(InvalidAutomorphismError):
        word(L4, Unit(Laurent.from_dict(4, {0: 1, 1: 1})))
    with pytest.raises(InvalidAutomorphismError):
        word(L2, Trans(0, L2.make({0: 1}, 1)))
    with pytest.raises(InvalidAutomorphismError):
        word(L2, Trans(3, L2.make({0: 1})))
    # a lift that is not invertible as declared
    with pytest.raises(InvalidAutomorphismError):
        word(L2, Lift((2,), (1,)))


def test_apply_examples():
    assert apply(word(L2, Mirror()), L2.make({2: 1}, 3)) == L2.make({-2: 1}, -3)
    assert apply(word(LZ, Trans(0, LZ.make({0: 1}))), LZ.move(1)) == LZ.make({0: 1}, 1)


@pytest.mark.parametrize("W", [L2, LZ])
def test_unit_x_is_conjugation_by_cursor(W, rng):
    unit = word(W, Unit(Laurent.monomial(W.A.m, 1, 1)))
    inner = word(W, Inner(W.move(1)))
    assert equal(unit, inner)
    for _ in range(100):
        x = W.random_element(rng, window=5, lamps=4)
        assert apply(unit, x) == apply(inner, x)


def _samples():
    z = [M23.B.generator(i) for i in range(3)]
    return [
        (L2, Inner(L2.make({0: 1, 3: 1}, -2))),
        (LZ, Inner(LZ.make({-1: 2, 1: -1}, 1))),
        (L2, Mirror()),
        (LZ, Lift((-1,), (-1,))),
        (L4, Unit(Laurent.from_dict(4, {0: 1, 1: 2}))),
        (WreathProduct(Cyclic(15), Cyclic(0)), Unit(Laurent.from_dict(15, {1: 10, 0: 6}))),
        (LZ, Trans(0, LZ.make({0: 1, 2: -3}))),
        (LZ, PConj(0, LZ.make({1: 2}))),
        (D2, Trans(1, D2.make({D2.B.identity: 1, D2.B.generator(1): 1}))),
        (D2, PConj(0, D2.make({D2.B.generator(1): 1}))),
        (M23, PConj(1, M23.make({z[0]: 1, z[2]: 2}))),
        (M23, Trans(2, M23.make({z[1]: 2}))),
        (M23, Lift((z[0], z[1], M23.B.mul(z[2], z[0])), (z[0], z[1], M23.B.mul(z[2], z[0])))),
    ]


SAMPLES = _samples()
IDS = [f"{type(e).__name__}-{i}" for i, (_, e) in enumerate(SAMPLES)]


@pytest.mark.parametrize("W,e", SAMPLES, ids=IDS)
def test_apply_is_homomorphic(W, e, rng):
    w = word(W, e)
    for _ in range(500):
        x, y = W.random_element(rng), W.random_element(rng)
        assert apply(w, w_mul(x, y)) == w_mul(apply(w, x), apply(w, y))


@pytest.mark.parametrize("W,e", SAMPLES, ids=IDS)
def test_inverse_word(W, e, rng):
    w = word(W, e)
    inv = inverse(w)
    assert is_identity(compose(w, inv)) and is_identity(compose(inv, w))
    for _ in range(50):
        x = W.random_element(rng)
        assert apply(inv, apply(w, x)) == x


def test_compose_order(rng):
    m, t = Mirror(), Trans(0, LZ.make({0: 1}))
    w = compose(word(LZ, m), word(LZ, t))
    for _ in range(20):
        x = LZ.random_element(rng)
        assert apply(w, x) == apply(word(LZ, m), apply(word(LZ, t), x))


def test_composition_laws(rng):
    assert is_identity(word(L2, Mirror(), Mirror()))
    g, h = L2.make({0: 1}, 2), L2.make({1: 1, -1: 1}, -1)
    # Inner(g) after Inner(h) is Inner(gh)
    assert equal(compose(word(L2, Inner(g)), word(L2, Inner(h))), word(L2, Inner(w_mul(g, h))))
    u1, u2 = Laurent.from_dict(4, {0: 1, 1: 2}), Laurent.from_dict(4, {0: 3, -2: 2})
    assert equal(word(L4, Unit(u1), Unit(u2)), word(L4, Unit(u1 * u2)))


def test_unit_is_equivariant(rng):
    u = Laurent.from_dict(15, {1: 10, 0: 6})
    W = WreathProduct(Cyclic(15), Cyclic(0))
    w = word(W, Unit(u))
    for _ in range(100):
        x = W.random_element(rng)
        assert apply(w, x).cursor == x.cursor
        s = W.move(rng.randint(-3, 3))
        assert apply(w, w_mul(w_mul(s, x), s ** -1)) == w_mul(w_mul(s, apply(w, x)), s ** -1)


def test_generators_of_free_product_base():
    assert generators(M23) == [M23.lamp(M23.B.identity, 1)] + [M23.move(M23.B.generator(i)) for i in range(3)]


def test_trans_is_inner_examples():
    conj = trans_is_inner(LZ, LZ.make({0: 1, 1: -1}))
    assert conj == LZ.make({0: 1})
    assert equal(word(LZ, Trans(0, LZ.make({0: 1, 1: -1}))), word(LZ, Inner(conj)))
    assert trans_is_inner(LZ, LZ.make({0: 1})) is None
    assert trans_is_inner(LZ, LZ.identity) == LZ.identity


def inner_search(W, e, colours, lo=-4, hi=4):
    """Every (a, m) with lamps in [lo, hi] whose conjugation equals ``e``."""
    target = word(W, e)
    found = []
    for cs in itertools.product(colours, repeat=hi - lo + 1):
        a = dict(zip(range(lo, hi + 1), cs))
        for m in range(lo, hi + 1):
            g = W.make(a, m)
            if equal(target, word(W, Inner(g))):
                found.append(g)
    return found


def test_trans_is_inner_matches_bounded_search(rng):
    cases = [L2.make({0: 1}), L2.make({0: 1, 2: 1}), L2.make({-1: 1, 0: 1, 3: 1}), L2.identity]
    for g in cases:
        found = inner_search(L2, Trans(0, g), range(2))
        conj = trans_is_inner(L2, g)
        assert (conj is None) == (not found)
        if conj is not None:
            assert conj in found


def test_trans_is_inner_integer_coefficients(rng):
    for _ in range(200):
        g = LZ.make({q: rng.randint(-3, 3) for q in rng.sample(range(-4, 5), 3)})
        conj = trans_is_inner(LZ, g)
        assert (conj is None) == (sum(g.lamp_map.values()) != 0)


def test_orbit_data():
    z = D2.B.generator(1)
    a = transvection_orbit_data(D2, 1, [(D2.B.identity, (1, 1))])
    assert a == D2.make({D2.B.identity: 1, z: 1})
    W3 = WreathProduct(Cyclic(3), FreeProductOfCyclics((3, 2)))
    a3 = transvection_orbit_data(W3, 0, [(W3.B.generator(1), (1, 1, 1))])
    assert validate(W3, Trans(0, a3)) is None
    with pytest.raises(InvalidAutomorphismError):
        transvection_orbit_data(D2, 1, [(D2.B.identity, (1, 0))])
    with pytest.raises(InvalidAutomorphismError):
        transvection_orbit_data(D2, 1, [(D2.B.identity, (1, 1, 0))])
    with pytest.raises(InvalidAutomorphismError):
        transvection_orbit_data(D2, 1, [(D2.B.identity, (1, 1)), (z, (1, 1))])


def test_orbit_validity_matches_order_condition():
    # colourings of the finite support {1, z0, z1, z1 z0} are valid exactly when
    # each <z1>-orbit has trivial colour sum
    H = D2.B
    z0, z1 = H.generator(0), H.generator(1)
    points = [H.identity, z1, z0, H.mul(z1, z0)]
    for cs in itertools.product(range(2), repeat=4):
        a = D2.make(dict(zip(points, cs)))
        orbit_ok = (cs[0] + cs[1]) % 2 == 0 and (cs[2] + cs[3]) % 2 == 0
        assert (validate(D2, Trans(1, a)) is None) == orbit_ok


def test_mismatched_groups():
    with pytest.raises(SpecMismatchError):
        apply(word(L2, Mirror()), LZ.identity)
    with pytest.raises(SpecMismatchError):
        equal(word(L2), word(LZ))


def test_json_round_trip():
    w = word(L2, Trans(0, L2.make({0: 1})), Unit(Laurent.from_dict(2, {0: 1, 1: 0})), Mirror(),
             Inner(L2.make({1: 1}, 2)), Lift((-1,), (-1,)))
    obj = w.to_json()
    assert obj[0] == {"kind": "trans", "factor": 0, "a": {"0": 1}}
    assert AutoWord.from_json(L2, obj) == w
