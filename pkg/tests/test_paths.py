from math import comb

import pytest
from hypothesis import given, strategies as st

from snakelab.lweight import LWeight, Y, in_qplus
from snakelab.paths import (
    Path,
    PrimeSnake,
    Snake,
    dominates,
    dual_path,
    enumerate_paths,
    enumerate_tuples,
    g_path,
    is_prime_snake,
    is_snake,
    lowest_path,
    p_path,
    tuple_monomials,
)
from snakelab.verify import prime_snakes

import oracles


@st.composite
def node(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return draw(st.integers(1, n)), draw(st.integers(-5, 5)), n


def test_path_validation():
    with pytest.raises(ValueError):
        Path(2, 1, 0, (1, 2, 3, 3))
    with pytest.raises(ValueError):
        Path(2, 1, 0, (1, 2, 3))


def test_counts_are_binomial():
    for n in range(1, 9):
        for i in range(1, n + 1):
            assert len(enumerate_paths(i, 0, n)) == comb(n + 1, i)


@given(node())
def test_extreme_paths(x):
    i, a, n = x
    assert lowest_path(i, a, n).monomial() == Y(n, i, a)
    assert dual_path(i, a, n).monomial() == Y(n, n + 1 - i, a + n + 1, -1)
    for p in enumerate_paths(i, a, n):
        assert dominates(lowest_path(i, a, n), p)
        assert dominates(p, dual_path(i, a, n))


@given(node(max_n=5))
def test_fundamental_character_matches_fm(x):
    i, a, n = x
    mons = [p.monomial() for p in enumerate_paths(i, a, n)]
    assert len(set(mons)) == len(mons)
    fm = oracles.fm_character({(i, a): 1}, n)
    assert {frozenset(m.items): 1 for m in mons} == fm


def test_g_and_p_paths():
    n = 5
    for j in range(1, n + 1):
        for m in range(0, min(j, n + 1 - j) + 1):
            g, p = g_path(j, 0, m, n), p_path(j, 0, m, n)
            assert g in enumerate_paths(j, 0, n)
            assert p in enumerate_paths(j, 0, n)
            if m:
                assert g.lower_corners() == [n + 1 - j]
                assert p.lower_corners() == [j]
                assert p.values[j] == 2 * m
    with pytest.raises(ValueError):
        g_path(2, 0, 3, 5)


def test_p_path_monomial():
    # peak at (j, a+2m) with valleys at j-m and j+m
    p = p_path(3, 0, 2, 6)
    assert p.monomial() == LWeight(6, {(1, 2): 1, (5, 2): 1, (3, 4): -1})


def test_snake_validation():
    assert is_prime_snake(Y(3, 2, 0) * Y(3, 2, 4))
    assert not is_prime_snake(Y(3, 2, 0) * Y(3, 2, 6))
    assert is_snake(Y(3, 2, 0) * Y(3, 2, 6))
    with pytest.raises(ValueError):
        PrimeSnake(3, ((2, 0), (2, 6)))
    with pytest.raises(ValueError):
        Snake(3, ((2, 4), (2, 0)))


def test_tuple_enumeration_and_counts_agree():
    s = PrimeSnake(3, ((1, 0), (2, 3)))
    tuples = list(enumerate_tuples(s))
    counts = tuple_monomials(s)
    assert sum(counts.values()) == len(tuples)
    for t in tuples:
        assert all(p.strictly_below(q) for p, q in zip(t, t[1:]))


@pytest.mark.parametrize(
    "n, factors",
    [
        (2, ((1, 0), (1, 2))),
        (3, ((1, 0), (2, 3))),
        (3, ((2, 0), (2, 4), (1, 7))),
        (4, ((2, 0), (3, 3), (1, 7))),
    ],
)
def test_snake_tuples_match_fm(n, factors):
    s = PrimeSnake(n, factors)
    got = {frozenset(m.items): c for m, c in tuple_monomials(s).items()}
    assert got == oracles.fm_character(dict(((i, a), 1) for i, a in factors), n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dominates_is_membership_in_qplus(n):
    for i in range(1, n + 1):
        ps = enumerate_paths(i, 0, n)
        for p in ps:
            for q in ps:
                assert dominates(p, q) == in_qplus(p.monomial() * q.monomial().inverse())


def test_dominates_against_linear_solve():
    ps = enumerate_paths(2, 0, 3)
    for p in ps:
        for q in ps:
            x = p.monomial() * q.monomial().inverse()
            assert dominates(p, q) == (oracles.qplus_exponents(oracles.as_dict(x), 3) is not None)


def _in_tuple_set(snake, paths):
    fams = [enumerate_paths(i, a, snake.n) for i, a in snake.factors]
    return all(p in f for p, f in zip(paths, fams)) and all(
        p.strictly_below(q) for p, q in zip(paths, paths[1:])
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_restriction_and_padding_of_tuples(n):
    for x in prime_snakes(n, 3, 7 if n < 5 else 6):
        s = Snake.from_lweight(x)
        fs = s.factors
        r = len(fs)
        tuples = list(enumerate_tuples(s))
        for j in range(r):
            for t in range(j, r):
                sub = Snake(n, fs[j : t + 1])
                # restriction lands in the sub-snake's tuples
                assert {tp[j : t + 1] for tp in tuples} <= set(enumerate_tuples(sub))
                # lowest paths before, highest paths after stay non-crossing
                low = tuple(lowest_path(i, a, n) for i, a in fs[:j])
                high = tuple(dual_path(i, a, n) for i, a in fs[t + 1 :])
                for mid in enumerate_tuples(sub):
                    assert _in_tuple_set(s, low + mid + high)
