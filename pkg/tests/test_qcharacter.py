from collections import defaultdict
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from snakelab.lweight import LWeight, Y, in_qplus, product_coefficient
from snakelab.qcharacter import (
    NotCertified,
    RingExpression,
    certified_route,
    check_witness,
    dominant_below,
    ext_tsystem,
    hom_candidates,
    hw_order_admissible,
    simple_char,
    snake_char,
    socle_filter,
    tensor_irreducible_kr,
    verify_identity,
    weyl_char,
)
from snakelab.segments import position, segment_monomial, tsys_overlap
from snakelab.verify import prime_snakes

import oracles


def fm(x: LWeight):
    return oracles.fm_character(oracles.as_dict(x), x.n)


def fm_product(classes):
    n = classes[0].n
    acc = {frozenset(): 1}
    for x in classes:
        nxt = defaultdict(int)
        for m1, c1 in acc.items():
            for m2, c2 in fm(x).items():
                nxt[oracles.freeze(oracles.mono_mul(dict(m1), dict(m2), n))] += c1 * c2
        acc = nxt
    return acc


def fm_expression(expr: RingExpression):
    out = defaultdict(int)
    for c, classes in expr.terms:
        for m, v in fm_product(list(classes)).items():
            out[m] += c * v
    return {m: v for m, v in out.items() if v}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_snake_characters_match_fm(n):
    for s in prime_snakes(n, 3, 6):
        assert oracles.char_as_frozen(snake_char(s)) == fm(s)


def test_snake_characters_are_thin_with_one_dominant_monomial():
    for s in prime_snakes(4, 3, 10):
        ch = snake_char(s)
        assert all(c == 1 for _, c in ch)
        assert ch.dominant_monomials() == [s]


def test_weyl_character_dimension():
    x = Y(3, 1, 0) * Y(3, 2, 5) * Y(3, 2, 5)
    assert weyl_char(x).dimension() == comb(4, 1) * comb(4, 2) ** 2
    with pytest.raises(ValueError):
        weyl_char(Y(3, 1, 0, -1))


def test_routes():
    assert certified_route(LWeight.one(2)) == "trivial"
    assert certified_route(Y(3, 1, 0) * Y(3, 2, 3)) == "prime-snake"
    assert certified_route(Y(3, 2, 0) * Y(3, 2, 2) * Y(3, 2, 2)) == "segments"
    assert certified_route(Y(3, 1, 0) * Y(3, 3, 20)) == "fundamentals"
    assert certified_route(Y(3, 1, 0) * Y(3, 2, 3) * Y(3, 2, 13)) == "snake"
    x = Y(3, 1, 0) * Y(3, 1, 0) * Y(3, 2, 3)
    assert certified_route(x) is None
    with pytest.raises(NotCertified):
        simple_char(x)


@pytest.mark.parametrize(
    "x",
    [Y(3, 1, 0) * Y(3, 2, 3) * Y(3, 2, 13), Y(3, 1, 0) * Y(3, 1, 8), Y(4, 2, 0) * Y(4, 3, 9)],
)
def test_general_snake_characters_match_fm(x):
    assert oracles.char_as_frozen(simple_char(x)) == fm(x)


def test_segment_route_characters():
    # two segments in general position: the simple module is the tensor product
    x = Y(3, 2, 0) * Y(3, 2, 2) * Y(3, 2, 2)
    got = oracles.char_as_frozen(simple_char(x))
    assert got == fm_product([Y(3, 2, 0) * Y(3, 2, 2), Y(3, 2, 2)])


def test_n1_tsystem_dimensions():
    y0, y2 = Y(1, 1, 0), Y(1, 1, 2)
    t = ext_tsystem(y0, y2)
    assert [simple_char(x).dimension() for x in (y0, y2, y0 * y2)] == [2, 2, 3]
    assert verify_identity(t.lhs, t.rhs)
    assert t.omega_plus.is_one() and t.omega_minus.is_one()


@pytest.mark.parametrize(
    "n, x, y",
    [
        (2, ((1, 0), (1, 2)), ((1, 2), (1, 4))),
        (3, ((2, 0), (2, 2)), ((2, 2), (2, 4))),
        (3, ((2, 0), (2, 4)), ((2, 4), (2, 6))),
        (3, ((1, 0), (2, 3)), ((2, 3), (1, 6))),
        (4, ((2, 0), (3, 3)), ((3, 3), (1, 7))),
    ],
)
def test_tsystem_against_fm(n, x, y):
    t = ext_tsystem(LWeight.from_factors(n, x), LWeight.from_factors(n, y))
    assert verify_identity(t.lhs, t.rhs)
    assert fm_expression(t.lhs) == fm_expression(t.rhs)
    pm = t.omega_plus * t.omega_minus
    assert product_coefficient([simple_char(t.top), simple_char(t.bottom)], pm) == 0


def test_tsystem_rejects_non_continuation():
    with pytest.raises(ValueError):
        ext_tsystem(Y(3, 2, 0) * Y(3, 2, 2), Y(3, 2, 4) * Y(3, 2, 6))


@settings(max_examples=30)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(1, 3))))
def test_tsystem_on_kr_strings(args):
    n, i, r = args
    seg = tuple(range(0, 2 * (r + 1), 2))
    t = ext_tsystem(segment_monomial(seg[:-1], i, n), segment_monomial(seg[1:], i, n))
    assert verify_identity(t.lhs, t.rhs)


def test_hom_candidates_fundamental():
    # χ(Y[1,0]) = Y[1,0] + Y[1,2]^{-1}, so π₁·m is never trivial here
    assert hom_candidates(Y(1, 1, 0), Y(1, 1, 0)) == [Y(1, 1, 0) ** 2]
    # the dual pair does produce the trivial candidate
    got = hom_candidates(Y(1, 1, 2), Y(1, 1, 0))
    assert got == [LWeight.one(1), Y(1, 1, 0) * Y(1, 1, 2)]
    for pi in got:
        assert socle_filter(pi, Y(1, 1, 2), Y(1, 1, 0))


def test_hw_order_checks_all_pairs():
    # only the non-adjacent pair (first, last) has a difference in S
    assert not hw_order_admissible([(1, 0), (1, 4), (1, 2)], 2)
    assert not hw_order_admissible([(1, 0), (1, 2)], 2)
    assert hw_order_admissible([(1, 2), (1, 0)], 2)
    assert not hw_order_admissible([(1, 2), (1, 0)], 2, both_directions=True)


def test_tensor_irreducible_kr():
    assert tensor_irreducible_kr([(0, 2), (2,)], 2, 3)
    assert not tensor_irreducible_kr([(0, 2), (4,)], 2, 3)


def test_reducibility_witnesses():
    count = 0
    for a in [(0,), (0, 2), (0, 4), (2, 4)]:
        for b in [(2,), (4,), (4, 6), (6,)]:
            if position(a, b, 2, 3).general or tsys_overlap(a, b, 2, 3) is None:
                continue
            w = check_witness(a, b, 2, 3)
            assert w.ok, (a, b)
            count += 1
    assert count >= 3


def test_dominant_below():
    x = Y(1, 1, 0) * Y(1, 1, 2)
    ch = weyl_char(x)
    assert dominant_below(x, ch) == [LWeight.one(1)]
    assert in_qplus(x)
