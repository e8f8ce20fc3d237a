"""Lattice paths and the monomials they carry.

A path in ``P_{i,a}`` is a sequence ``p(0), ..., p(n+1)`` of integers with
``p(0) = i + a``, ``p(n+1) = n + 1 - i + a`` and steps of ``±1``.  Valleys
contribute ``Y[r, p(r)]`` and peaks ``Y[r, p(r)]^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .lweight import LWeight
from .segments import s_mrn


@dataclass(frozen=True)
class CornerData:
    plus: frozenset[int]
    minus: frozenset[int]


@dataclass(frozen=True, order=True)
class Path:
    n: int
    i: int
    a: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        v = self.values
        if len(v) != self.n + 2:
            raise ValueError(f"path needs {self.n + 2} values, got {len(v)}")
        if v[0] != self.i + self.a or v[-1] != self.n + 1 - self.i + self.a:
            raise ValueError(f"bad endpoints {v[0]}, {v[-1]} for P_({self.i},{self.a})")
        if any(abs(y - x) != 1 for x, y in zip(v, v[1:])):
            raise ValueError("path steps must be ±1")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def upper_corners(self) -> list[int]:
        """Valleys: ``p(r-1) = p(r) + 1 = p(r+1)``."""
        v = self.values
        return [r for r in range(1, self.n + 1) if v[r - 1] == v[r] + 1 == v[r + 1]]

    def lower_corners(self) -> list[int]:
        """Peaks: ``p(r-1) = p(r) - 1 = p(r+1)``."""
        v = self.values
        return [r for r in range(1, self.n + 1) if v[r - 1] == v[r] - 1 == v[r + 1]]

    def corners(self) -> CornerData:
        return CornerData(frozenset(self.upper_corners()), frozenset(self.lower_corners()))

    def monomial(self) -> LWeight:
        v = self.values
        ex = [((r, v[r]), 1) for r in self.upper_corners()]
        ex += [((r, v[r]), -1) for r in self.lower_corners()]
        return LWeight(self.n, ex)

    def steps(self) -> tuple[int, ...]:
        v = self.values
        return tuple(y - x for x, y in zip(v, v[1:]))

    def strictly_below(self, other: "Path") -> bool:
        return all(x < y for x, y in zip(self.values, other.values))

    def __str__(self) -> str:
        return f"P({self.i},{self.a}):" + ",".join(map(str, self.values))


def path_monomial(p: Path) -> LWeight:
    return p.monomial()


@lru_cache(maxsize=4096)
def _paths(n: int, i: int, a: int) -> tuple[Path, ...]:
    out = []
    for downs in combinations(range(n + 1), i):
        d = set(downs)
        v = [i + a]
        for k in range(n + 1):
            v.append(v[-1] + (-1 if k in d else 1))
        out.append(Path(n, i, a, tuple(v)))
    out.sort(key=lambda p: p.values)
    return tuple(out)


def enumerate_paths(i: int, a: int, n: int) -> tuple[Path, ...]:
    """All paths in ``P_{i,a}``, sorted lexicographically by values."""
    if not 1 <= i <= n:
        raise ValueError(f"node {i} out of range [1,{n}]")
    return _paths(n, i, a)


def lowest_path(i: int, a: int, n: int) -> Path:
    """``p(j) = |i - j| + a``; its monomial is ``Y[i,a]``."""
    return Path(n, i, a, tuple(abs(i - j) + a for j in range(n + 2)))


def dual_path(i: int, a: int, n: int) -> Path:
    """Highest path; its monomial is ``Y[n+1-i, a+n+1]^{-1}``."""
    v = tuple(a + i + j if j <= n + 1 - i else a + 2 * n + 2 - i - j for j in range(n + 2))
    return Path(n, i, a, v)


def single_peak_path(i: int, a: int, n: int, x: int, top: int) -> Path:
    """The path in ``P_{i,a}`` that rises to a single peak ``(x, top)``.

    Between an endpoint and the peak the path first descends, then ascends.
    """
    start, end = i + a, n + 1 - i + a
    up1, down1 = (x + top - start) // 2, (x - top + start) // 2
    down2, up2 = (n + 1 - x + top - end) // 2, (n + 1 - x - top + end) // 2
    if min(up1, down1, up2, down2) < 0 or (x + top - start) % 2:
        raise ValueError(f"no single-peak path through ({x},{top}) in P_({i},{a})")
    v = [start]
    for s in [-1] * down1 + [1] * up1 + [-1] * down2 + [1] * up2:
        v.append(v[-1] + s)
    return Path(n, i, a, tuple(v))


def _check_m(j: int, m: int, n: int) -> None:
    if not 1 <= j <= n:
        raise ValueError(f"node {j} out of range [1,{n}]")
    if not 0 <= m <= min(j, n + 1 - j):
        raise ValueError(f"m={m} out of range [0,{min(j, n + 1 - j)}]")


def g_path(j: int, a: int, m: int, n: int) -> Path:
    """``g^m_{j,a}``: lowest path for ``m = 0``, else a single peak at ``n+1-j``."""
    _check_m(j, m, n)
    if m == 0:
        return lowest_path(j, a, n)
    x = n + 1 - j
    top = a + n + 1 - 2 * j + 2 * m if 2 * j <= n + 1 else a - n - 1 + 2 * j + 2 * m
    return single_peak_path(j, a, n, x, top)


def p_path(j: int, a: int, m: int, n: int) -> Path:
    """``p^m_{j,a}``: lowest path for ``m = 0``, else peak ``(j, a+2m)`` with valleys at ``j±m``."""
    _check_m(j, m, n)
    if m == 0:
        return lowest_path(j, a, n)
    return single_peak_path(j, a, n, j, a + 2 * m)


def dominates(p: Path, q: Path) -> bool:
    """``q(k) >= p(k)`` everywhere, i.e. ``ω(p) ∈ ω(q)·Q⁺``."""
    if (p.n, p.i, p.a) != (q.n, q.i, q.a):
        raise ValueError("paths come from different families")
    return all(x <= y for x, y in zip(p.values, q.values))


# -- snakes -------------------------------------------------------------

def snake_defect(n: int, factors: Sequence[tuple[int, int]], prime: bool = True) -> str | None:
    """``None`` when the factors, sorted by shift, form a (prime) snake.

    Consecutive factors ``(i, a), (j, b)`` of a snake satisfy
    ``b - a >= |i - j| + 2`` and ``b - a ≡ i - j (mod 2)``; a prime snake
    also needs ``b - a <= min(i + j, 2n + 2 - i - j)``, i.e. ``b - a ∈ S_{j,i,n}``.
    """
    fs = sorted(factors, key=lambda f: (f[1], f[0]))
    for i, _ in fs:
        if not 1 <= i <= n:
            return f"node {i} out of range [1,{n}]"
    for (i0, a0), (i1, a1) in zip(fs, fs[1:]):
        d = a1 - a0
        if prime:
            if d not in s_mrn(i1, i0, n):
                return f"gap {d} between Y[{i0},{a0}] and Y[{i1},{a1}] not in S_({i1},{i0},{n})"
        elif d < abs(i1 - i0) + 2 or (d - i1 + i0) % 2:
            return f"Y[{i0},{a0}] and Y[{i1},{a1}] are not in snake position"
    return None


def prime_snake_defect(n: int, factors: Sequence[tuple[int, int]]) -> str | None:
    return snake_defect(n, factors, prime=True)


@dataclass(frozen=True)
class Snake:
    """Fundamental factors ``(i_p, a_p)`` sorted by shift, consecutive ones in snake position."""

    n: int
    factors: tuple[tuple[int, int], ...]

    _prime = False

    def __post_init__(self) -> None:
        fs = tuple(sorted(self.factors, key=lambda f: (f[1], f[0])))
        if fs != tuple(self.factors):
            raise ValueError("snake factors must be sorted by (shift, node)")
        reason = snake_defect(self.n, fs, prime=self._prime)
        if reason:
            raise ValueError(reason)

    @classmethod
    def from_lweight(cls, x: LWeight):
        if not x.is_dominant():
            raise ValueError(f"{x} is not dominant")
        return cls(x.n, tuple(x.factors()))

    def lweight(self) -> LWeight:
        return LWeight.from_factors(self.n, self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return str(self.lweight())


@dataclass(frozen=True)
class PrimeSnake(Snake):
    """A snake whose consecutive gaps satisfy ``a_p - a_{p-1} ∈ S_{i_p, i_{p-1}, n}``."""

    _prime = True


def is_prime_snake(x: LWeight) -> bool:
    return x.is_dominant() and snake_defect(x.n, x.factors(), prime=True) is None


def is_snake(x: LWeight) -> bool:
    return x.is_dominant() and snake_defect(x.n, x.factors(), prime=False) is None


def _tuple_graph(snake: Snake):
    lists = [enumerate_paths(i, a, snake.n) for i, a in snake.factors]
    nxt = [
        [[t for t, q in enumerate(lists[s + 1]) if p.strictly_below(q)] for p in lists[s]]
        for s in range(len(lists) - 1)
    ]
    return lists, nxt


def enumerate_tuples(snake: Snake) -> Iterator[tuple[Path, ...]]:
    """Strictly non-crossing tuples ``(p_1, ..., p_k)``, ``p_s ∈ P_{i_s,a_s}``.

    Tuples come out in lexicographic order of their path indices.  Only the
    next path is compared with the previous one; strictness is transitive.
    """
    if not snake.factors:
        yield ()
        return
    lists, nxt = _tuple_graph(snake)
    k = len(lists)
    stack: list[int] = []

    def rec(s: int, options):
        for t in options:
            stack.append(t)
            if s == k - 1:
                yield tuple(lists[u][stack[u]] for u in range(k))
            else:
                yield from rec(s + 1, nxt[s][t])
            stack.pop()

    yield from rec(0, range(len(lists[0])))


def tuple_monomials(snake: Snake) -> dict[LWeight, int]:
    """``{ω(p̲): count}`` over all non-crossing tuples, computed in packed form."""
    from .lweight import Codec

    n = snake.n
    if not snake.factors:
        return {LWeight.one(n): 1}
    lists, nxt = _tuple_graph(snake)
    gens = {g for paths in lists for p in paths for g, _ in p.monomial().items}
    codec = Codec(n, gens, len(lists))
    codes = [[codec.encode(p.monomial()) for p in paths] for paths in lists]
    k = len(lists)
    # counts of partial sums, layer by layer: state = (last path index, packed monomial)
    layer: dict[tuple[int, int], int] = {(t, codes[0][t]): 1 for t in range(len(lists[0]))}
    for s in range(k - 1):
        new: dict[tuple[int, int], int] = {}
        row, cs = nxt[s], codes[s + 1]
        for (t, v), c in layer.items():
            for u in row[t]:
                key = (u, v + cs[u])
                new[key] = new.get(key, 0) + c
        layer = new
    out: dict[int, int] = {}
    for (_, v), c in layer.items():
        out[v] = out.get(v, 0) + c
    return {codec.decode(v): c for v, c in out.items()}
