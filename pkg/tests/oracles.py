"""Independent reference implementations used by the test suite.

Nothing here imports the library's algorithms.  Monomials are plain dicts
``{(i, a): e}``; conversion helpers at the bottom bridge to the library types.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import combinations, product

import sympy


def _clean(d):
    return {k: v for k, v in d.items() if v}


def mono_mul(x, y, n):
    out = dict(x)
    for k, e in y.items():
        out[k] = out.get(k, 0) + e
    return _clean({k: e for k, e in out.items() if 1 <= k[0] <= n})


def a_root(n, i, a):
    """``A_{i,a}`` with nodes outside ``[1, n]`` dropped."""
    d = {(i, a - 1): 1, (i, a + 1): 1, (i - 1, a): -1, (i + 1, a): -1}
    return _clean({k: e for k, e in d.items() if 1 <= k[0] <= n})


def freeze(d):
    return frozenset(d.items())


# -- Q+ membership by exact linear algebra -------------------------------

def qplus_exponents(x, n):
    """Solve ``x = ∏ A_{i,a}^{c}`` over the rationals.

    Returns the exponent dict when a solution exists with non-negative
    integer entries, otherwise ``None``.  The roots are independent, so any
    solution is the unique one.
    """
    if not x:
        return {}
    shifts = [a for _, a in x]
    lo, hi = min(shifts) - 2, max(shifts) + 2
    unknowns = [(i, a) for i in range(1, n + 1) for a in range(lo, hi + 1)]
    gens = sorted({(i, a) for i in range(1, n + 1) for a in range(lo - 1, hi + 2)})
    row = {g: k for k, g in enumerate(gens)}
    M = sympy.zeros(len(gens), len(unknowns))
    for col, (i, a) in enumerate(unknowns):
        for g, e in a_root(n, i, a).items():
            M[row[g], col] = e
    b = sympy.zeros(len(gens), 1)
    for g, e in x.items():
        if g not in row:
            return None
        b[row[g], 0] = e
    try:
        sol, params = M.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        raise AssertionError("simple roots should be independent")
    out = {}
    for (i, a), v in zip(unknowns, sol):
        if not v.is_integer or v < 0:
            return None
        if v:
            out[(i, a)] = int(v)
    return out


# -- classical dimensions by Gelfand-Tsetlin patterns --------------------

def gt_dimension(w):
    """Count Gelfand-Tsetlin patterns with top row given by the partition of ``w``."""
    n = len(w)
    top = [sum(w[k:]) for k in range(n)] + [0]

    def count(row):
        if len(row) == 1:
            return 1
        ranges = [range(row[k + 1], row[k] + 1) for k in range(len(row) - 1)]
        return sum(count(list(r)) for r in product(*ranges))

    return count(top)


# -- segments -----------------------------------------------------------

def gap_set(i, n):
    return {2 * j for j in range(1, min(i, n + 1 - i) + 1)}


def longest_segment_brute(values, i, n):
    pts = sorted(set(values))
    gaps = gap_set(i, n)
    for size in range(len(pts), 0, -1):
        for c in combinations(pts, size):
            if all(y - x in gaps for x, y in zip(c, c[1:])):
                return size
    return 0


def general_position_brute(a, b, i, n):
    return longest_segment_brute(set(a) | set(b), i, n) <= max(len(a), len(b))


def multiset_partitions(items):
    """All partitions of a list into blocks (blocks keep original indices)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in multiset_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]
        yield [[first]] + part


def segment_factorizations(values, i, n):
    """Every way to split ``values`` into segments pairwise in general position."""
    gaps = gap_set(i, n)
    found = set()
    for part in multiset_partitions(sorted(values)):
        segs = [tuple(sorted(b)) for b in part]
        if any(len(set(s)) != len(s) for s in segs):
            continue
        if not all(all(y - x in gaps for x, y in zip(s, s[1:])) for s in segs):
            continue
        if all(
            general_position_brute(segs[p], segs[q], i, n)
            for p in range(len(segs))
            for q in range(p + 1, len(segs))
        ):
            found.add(tuple(sorted(segs)))
    return found


# -- Frenkel-Mukhin algorithm --------------------------------------------

def _sl2_strings(exps):
    """Split ``∏ Y_a^{e_a}`` (all ``e_a >= 0``) into q-strings with step 2."""
    left = Counter({a: e for a, e in exps.items() if e})
    out = []
    while left:
        a = min(left)
        s = [a]
        while left.get(s[-1] + 2):
            s.append(s[-1] + 2)
        for x in s:
            left[x] -= 1
            if not left[x]:
                del left[x]
        out.append(s)
    return out


def _sl2_lowerings(exps):
    """q-character of the simple sl2-module as ``{multiset of A-shifts: coeff}``."""
    terms = {(): 1}
    for s in _sl2_strings(exps):
        k = len(s)
        opts = [tuple(s[k - 1 - t] + 1 for t in range(j)) for j in range(k + 1)]
        nxt = defaultdict(int)
        for base, c in terms.items():
            for o in opts:
                nxt[tuple(sorted(base + o))] += c
        terms = nxt
    return terms


def fm_character(top, n, max_terms=20000):
    """Frenkel-Mukhin algorithm from the dominant monomial ``top``.

    Returns ``{frozenset(monomial.items()): multiplicity}``.  Raises when a
    monomial is left uncoloured, which signals a non-special module.
    """
    coeff = {freeze(top): 1}
    mono = {freeze(top): dict(top)}
    colour = defaultdict(int)
    depth = {freeze(top): 0}
    levels = defaultdict(list)
    levels[0].append(freeze(top))
    d = 0
    while d in levels or any(k > d for k in levels):
        for key in levels.pop(d, []):
            m, c = mono[key], coeff[key]
            for j in range(1, n + 1):
                part = {a: e for (i, a), e in m.items() if i == j}
                if any(e < 0 for e in part.values()):
                    if colour[(key, j)] != c:
                        raise RuntimeError("FM algorithm failed: uncoloured monomial")
                    continue
                new = c - colour[(key, j)]
                if new < 0:
                    raise RuntimeError("FM algorithm failed: over-coloured monomial")
                if not new:
                    continue
                for shifts, mult in _sl2_lowerings(part).items():
                    m2 = dict(m)
                    for b in shifts:
                        m2 = mono_mul(m2, {k: -e for k, e in a_root(n, j, b).items()}, n)
                    k2 = freeze(m2)
                    if k2 not in mono:
                        mono[k2] = m2
                        depth[k2] = d + len(shifts)
                        levels[d + len(shifts)].append(k2)
                        coeff[k2] = 0
                        if len(mono) > max_terms:
                            raise RuntimeError("FM algorithm exceeded term cap")
                    colour[(k2, j)] += new * mult
                    coeff[k2] = max(coeff[k2], colour[(k2, j)])
        d += 1
    return {k: v for k, v in coeff.items() if v}


# -- bridges ------------------------------------------------------------

def as_dict(lw):
    return dict(lw.items)


def char_as_frozen(ch):
    return {frozenset(m.items): c for m, c in ch}
