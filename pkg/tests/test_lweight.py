import pytest
from hypothesis import given, settings, strategies as st

from snakelab.lweight import (
    Character,
    CharacterTooLarge,
    Codec,
    LWeight,
    NotInQPlus,
    Weight,
    Y,
    decompose_in_qplus,
    fundamental_weight,
    in_qplus,
    left_dual,
    omega_flip,
    parse_monomial,
    product_coefficient,
    product_coefficients,
    right_dual,
    simple_root,
    weight_in_qplus,
    weyl_dimension,
)

import oracles

N = 4


def lweights(n=N, size=5, lo=-6, hi=6):
    gen = st.tuples(st.integers(1, n), st.integers(lo, hi))
    return st.lists(st.tuples(gen, st.integers(-2, 2)), max_size=size).map(lambda xs: LWeight(n, xs))


def root_products(n=N):
    return st.lists(st.tuples(st.integers(1, n), st.integers(-4, 4)), max_size=6)


def test_nodes_outside_rank_are_dropped():
    x = LWeight(3, [((0, 1), 1), ((4, 2), 1), ((2, 0), 1)])
    assert x == Y(3, 2, 0)


def test_simple_root_shape():
    a = simple_root(3, 2, 5)
    assert a == LWeight(3, {(1, 5): -1, (2, 4): 1, (2, 6): 1, (3, 5): -1})
    assert simple_root(3, 1, 0) == LWeight(3, {(1, -1): 1, (1, 1): 1, (2, 0): -1})


@given(lweights(), lweights(), lweights())
def test_group_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * x.inverse() == LWeight.one(N)


@given(lweights())
def test_duals_are_inverse(x):
    assert left_dual(right_dual(x)) == x
    assert omega_flip(omega_flip(x)) == x


@given(lweights())
def test_text_and_json_round_trip(x):
    assert LWeight.from_json(x.to_json()) == x
    assert parse_monomial(str(x), N) == x


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_monomial("Y[1;0]", 3)


@given(root_products())
def test_decompose_products_of_roots(roots):
    x = LWeight.one(N)
    want = {}
    for i, a in roots:
        x = x * simple_root(N, i, a)
        want[(i, a)] = want.get((i, a), 0) + 1
    assert decompose_in_qplus(x) == want


@settings(max_examples=60, deadline=None)
@given(lweights(n=3, size=4, lo=-3, hi=3))
def test_qplus_matches_linear_algebra(x):
    expected = oracles.qplus_exponents(oracles.as_dict(x), 3)
    if expected is None:
        assert not in_qplus(x)
        with pytest.raises(NotInQPlus):
            decompose_in_qplus(x)
    else:
        assert decompose_in_qplus(x) == expected


@settings(max_examples=40, deadline=None)
@given(root_products(n=3), lweights(n=3, size=2, lo=-3, hi=3))
def test_qplus_oracle_on_near_products(roots, noise):
    x = noise
    for i, a in roots:
        x = x * simple_root(3, i, a)
    expected = oracles.qplus_exponents(oracles.as_dict(x), 3)
    assert in_qplus(x) == (expected is not None)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_weyl_dimension_matches_gt_patterns(w):
    assert weyl_dimension(Weight(w)) == oracles.gt_dimension(w)


def test_fundamental_dimensions():
    from math import comb

    for n in range(1, 8):
        for i in range(1, n + 1):
            assert weyl_dimension(fundamental_weight(n, i)) == comb(n + 1, i)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_weight_qplus_membership(c):
    w = Weight([0, 0, 0])
    for k, v in enumerate(c):
        w = w + Weight([2 if j == k else -1 if abs(j - k) == 1 else 0 for j in range(3)]).scale(v)
    assert weight_in_qplus(w) == all(v >= 0 for v in c)


@given(lweights(), lweights())
def test_codec_round_trip_and_addition(x, y):
    codec = Codec.for_product({x: 1}, {y: 1})
    assert codec.decode(codec.encode(x)) == x
    assert codec.decode(codec.encode(x) + codec.encode(y)) == x * y


def _small_char(pairs):
    return Character(N, {LWeight(N, [((i, a), e)]): c for (i, a, e, c) in pairs})


chars = st.lists(
    st.tuples(st.integers(1, N), st.integers(-3, 3), st.integers(-2, 2).filter(bool), st.integers(1, 3)),
    min_size=1,
    max_size=4,
).map(_small_char)


@given(st.lists(chars, min_size=1, max_size=4))
def test_product_coefficients_agree_with_full_product(cs):
    full = cs[0]
    for c in cs[1:]:
        full = full * c
    targets = sorted(full.monomials())[:5] + [Y(N, 1, 99)]
    assert product_coefficients(cs, targets) == [full.coefficient(t) for t in targets]
    assert product_coefficient(cs, targets[0]) == full.coefficient(targets[0])


def test_character_cap():
    a = Character(2, {Y(2, 1, k): 1 for k in range(0, 40, 2)})
    b = Character(2, {Y(2, 2, k): 1 for k in range(0, 40, 2)})
    with pytest.raises(CharacterTooLarge):
        a.multiply(b, max_terms=100)


def test_character_json_round_trip():
    ch = Character(2, {Y(2, 1, 0): 2, Y(2, 2, 1, -1): -1})
    assert Character.from_json(2, ch.to_json()) == ch
