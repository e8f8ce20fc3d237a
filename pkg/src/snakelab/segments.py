"""(i,n)-segments: general position, factorization and overlap patterns.

A segment of type ``(i, n)`` is a strictly increasing tuple of shifts whose
consecutive gaps lie in ``S_{i,n} = {2, 4, ..., 2 min(i, n+1-i)}``.  It
encodes the Kirillov-Reshetikhin monomial ``ω_{i,a_1} ... ω_{i,a_r}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lweight import LWeight

Segment = tuple[int, ...]


def s_mrn(m: int, r: int, n: int) -> frozenset[int]:
    """``S_{m,r,n} = {2p+2-m-r : max(m,r) <= p <= min(m+r-1, n)}``."""
    lo, hi = max(m, r), min(m + r - 1, n)
    return frozenset(2 * p + 2 - m - r for p in range(lo, hi + 1))


def s_set(i: int, n: int) -> frozenset[int]:
    return frozenset(2 * j for j in range(1, min(i, n + 1 - i) + 1))


def max_gap(i: int, n: int) -> int:
    return 2 * min(i, n + 1 - i)


def _check_type(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"node {i} out of range [1,{n}]")


def is_segment(a: Sequence[int], i: int, n: int) -> bool:
    _check_type(i, n)
    if not a:
        return False
    gaps = s_set(i, n)
    return all(y - x in gaps for x, y in zip(a, a[1:]))


def as_segment(a: Iterable[int], i: int, n: int) -> Segment:
    seg = tuple(a)
    if not is_segment(seg, i, n):
        raise ValueError(f"{seg} is not an ({i},{n})-segment")
    return seg


def segment_monomial(a: Sequence[int], i: int, n: int) -> LWeight:
    return LWeight.from_factors(n, [(i, x) for x in a])


def star(a: Sequence[int], i: int, n: int) -> Segment:
    """Shifts of the right dual ``(ω_{i,a})*``, which lives at node ``n+1-i``."""
    return tuple(x + n + 1 for x in a)


def left_star(a: Sequence[int], i: int, n: int) -> Segment:
    return tuple(x - n - 1 for x in a)


# -- general position ---------------------------------------------------

@dataclass(frozen=True)
class PositionVerdict:
    """Outcome of the position test.

    ``clause`` names the criterion that fired.  For special pairs ``evidence``
    is a segment inside the union that is longer than both inputs.
    """

    general: bool
    clause: str
    evidence: Segment | None = None

    def __str__(self) -> str:
        kind = "general" if self.general else "special"
        tail = f" evidence={list(self.evidence)}" if self.evidence else ""
        return f"{kind} [{self.clause}]{tail}"


def position(a: Sequence[int], b: Sequence[int], i: int, n: int) -> PositionVerdict:
    """Decide whether two ``(i, n)``-segments are in general position."""
    a, b = as_segment(a, i, n), as_segment(b, i, n)
    if len(b) > len(a):
        a, b = b, a
    r, m = len(a), len(b)
    w = max_gap(i, n)
    if b[0] - a[-1] > w:
        return PositionVerdict(True, "far-right")
    if a[0] - b[-1] > w:
        return PositionVerdict(True, "far-left")
    if (b[0] - a[0]) % 2:
        return PositionVerdict(True, "parity")
    if set(b) <= set(a):
        return PositionVerdict(True, "containment")
    gaps = s_set(i, n)
    for j in range(m):
        bj = b[j]
        if bj - a[-1] in gaps:
            return PositionVerdict(False, "extends-right", a + (bj,))
        if a[0] - bj in gaps:
            return PositionVerdict(False, "extends-left", (bj,) + a)
        for k in range(r - 1):
            if a[k] < bj < a[k + 1]:
                return PositionVerdict(False, "interleaves", a[: k + 1] + (bj,) + a[k + 1 :])
    raise AssertionError(f"position criterion is inconclusive for {a}, {b}")  # pragma: no cover


def longest_segment_in(values: Iterable[int], i: int, n: int) -> Segment:
    """Longest ``(i, n)``-segment drawn from a set of shifts (dynamic programming)."""
    pts = sorted(set(values))
    gaps = s_set(i, n)
    best: dict[int, Segment] = {}
    for x in pts:
        cand: Segment = (x,)
        for g in gaps:
            prev = best.get(x - g)
            if prev is not None and len(prev) + 1 > len(cand):
                cand = prev + (x,)
        best[x] = cand
    return max(best.values(), key=len, default=())


def position_bruteforce(a: Sequence[int], b: Sequence[int], i: int, n: int) -> bool:
    """General position by definition: no long segment inside the union."""
    return len(longest_segment_in(set(a) | set(b), i, n)) <= max(len(a), len(b))


# -- factorization ------------------------------------------------------

def segment_sort_key(seg: Segment) -> tuple:
    return (seg[0], -len(seg), seg)


def factorize(multiset: Iterable[int], i: int, n: int) -> list[Segment]:
    """Split a multiset of shifts into segments pairwise in general position.

    The result is unique up to order and is returned sorted by first entry,
    then by length (longest first), then lexicographically.

    Parameters
    ----------
    multiset : iterable of int
        Shifts ``a_1, ..., a_k`` of ``ω_{i,a_1} ... ω_{i,a_k}``, repetitions allowed.
    i, n : int
        Segment type.

    Returns
    -------
    list of tuple of int
    """
    _check_type(i, n)
    left = Counter(multiset)
    w = max_gap(i, n)
    out: list[Segment] = []
    while left:
        x = min(left)
        seg = [x]
        for y in sorted(v for v in left if v > x and (v - x) % 2 == 0):
            if y - seg[-1] > w:
                break
            seg.append(y)
        for y in seg:
            left[y] -= 1
            if not left[y]:
                del left[y]
        out.append(tuple(seg))
    out.sort(key=segment_sort_key)
    return out


def factorize_monomial(x: LWeight) -> tuple[int, list[Segment]]:
    """Factorize a dominant monomial supported on a single node."""
    nodes = x.nodes()
    if len(nodes) != 1 or not x.is_dominant():
        raise ValueError(f"{x} is not a dominant single-node monomial")
    (i,) = nodes
    return i, factorize([a for _, a in x.factors()], i, x.n)


# -- overlap patterns for the T-system ----------------------------------

@dataclass(frozen=True)
class OverlapPattern:
    """Sub-segments ``(a_j..a_{j+p})`` and ``(b_m..b_{m+p})`` (1-based) whose
    union is a segment of length ``p + 2``.

    One of them is the other moved up by one place: ``lower`` starts first and
    ``upper = lower[1:] + (c,)``.  ``union`` is ``lower + (c,)``.
    """

    j: int
    m: int
    p: int
    lower: Segment
    upper: Segment

    @property
    def union(self) -> Segment:
        return self.lower + (self.upper[-1],)


def tsys_overlap(a: Sequence[int], b: Sequence[int], i: int, n: int) -> OverlapPattern | None:
    """Find the overlap pattern with smallest ``(j, m, p)``, or ``None``.

    Beyond the ordering and shift conditions, the union of the two pieces must
    itself be a segment.  For ``p >= 1`` this is automatic; for ``p = 0`` it
    rules out pairs of far-apart singletons.
    """
    a, b = as_segment(a, i, n), as_segment(b, i, n)
    gaps = s_set(i, n)
    inf = float("inf")
    r, s = len(a), len(b)
    for j in range(1, r + 1):
        for m in range(1, s + 1):
            for p in range(0, min(r - j, s - m) + 1):
                lo = a[j - 1 : j + p]
                up = b[m - 1 : m + p]
                before = max(a[j - 2] if j > 1 else -inf, b[m - 2] if m > 1 else -inf)
                after = min(a[j + p] if j + p < r else inf, b[m + p] if m + p < s else inf)
                if not before < min(lo[0], up[0]) or not after > max(lo[-1], up[-1]):
                    continue
                if up[:-1] == lo[1:] and up[-1] - lo[-1] in gaps:
                    return OverlapPattern(j, m, p, lo, up)
                if lo[:-1] == up[1:] and lo[-1] - up[-1] in gaps:
                    return OverlapPattern(j, m, p, up, lo)
    return None


def tsystem_pm(points: Sequence[tuple[int, int]], n: int) -> tuple[LWeight, LWeight]:
    """The pair ``(ω⁺, ω⁻)`` attached to a chain ``(i_1,a_1), ..., (i_{k+1},a_{k+1})``.

    Factor ``p`` of ``ω^±`` is
    ``ω_{(i_p+i_{p+1} ± (a_p-a_{p+1}))/2, (a_p+a_{p+1} ± (i_p-i_{p+1}))/2}``.
    """
    plus: list[tuple[int, int]] = []
    minus: list[tuple[int, int]] = []
    for (i1, a1), (i2, a2) in zip(points, points[1:]):
        for sign, acc in ((1, plus), (-1, minus)):
            node2 = i1 + i2 + sign * (a1 - a2)
            shift2 = a1 + a2 + sign * (i1 - i2)
            if node2 % 2 or shift2 % 2:
                raise ValueError(f"parity failure in chain at {(i1, a1)}, {(i2, a2)}")
            acc.append((node2 // 2, shift2 // 2))
    return LWeight.from_factors(n, plus), LWeight.from_factors(n, minus)


# -- reducibility witness -----------------------------------------------

@dataclass(frozen=True)
class ReducibilityWitness:
    """Dominant monomial separating ``χ(A)χ(B)`` from a triple tensor product.

    ``omega`` occurs in ``χ(A)χ(B)`` but not in
    ``W(A0 ∪ B0) ⊗ V(A1 ∪ B1) ⊗ W(A2 ∪ B2)``; the parts are the outer,
    overlapping and trailing pieces of the two segments.
    """

    i: int
    n: int
    a: Segment
    b: Segment
    pattern: OverlapPattern
    parts: tuple[tuple[Segment, Segment], tuple[Segment, Segment], tuple[Segment, Segment]]
    omega: LWeight


def reducibility_witness(a: Sequence[int], b: Sequence[int], i: int, n: int) -> ReducibilityWitness:
    """Construct the witness monomial for a special pair with an overlap pattern."""
    a, b = as_segment(a, i, n), as_segment(b, i, n)
    pat = tsys_overlap(a, b, i, n)
    if pat is None:
        raise ValueError(f"no overlap pattern for {a}, {b}")
    j, m, p = pat.j, pat.m, pat.p
    a0, a1, a2 = a[: j - 1], a[j - 1 : j + p], a[j + p :]
    b0, b1, b2 = b[: m - 1], b[m - 1 : m + p], b[m + p :]
    chain = [(i, x) for x in pat.union]
    plus, minus = tsystem_pm(chain, n)
    omega = (
        segment_monomial(a0, i, n)
        * segment_monomial(b0, i, n)
        * plus
        * minus
        * LWeight.from_factors(n, [(n + 1 - i, x) for x in star(a2, i, n) + star(b2, i, n)]).inverse()
    )
    return ReducibilityWitness(i, n, a, b, pat, ((a0, b0), (a1, b1), (a2, b2)), omega)


__all__ = [
    "OverlapPattern",
    "PositionVerdict",
    "ReducibilityWitness",
    "Segment",
    "as_segment",
    "factorize",
    "factorize_monomial",
    "is_segment",
    "left_star",
    "longest_segment_in",
    "max_gap",
    "position",
    "position_bruteforce",
    "reducibility_witness",
    "s_mrn",
    "s_set",
    "segment_monomial",
    "star",
    "tsys_overlap",
    "tsystem_pm",
]
