"""Highest ℓ-weights of imaginary modules and the certificates behind them.

Given an ``(i, n)``-segment ``b`` with every gap below ``2i`` and the shifted
segment ``a = b - n - 1``, the module ``V(ω)`` built by ``imaginary_weight``
sits inside ``V(ω_{i,b}) ⊗ V(ω_{n+1-i,a})`` above the trivial module.  Whether
a module is imaginary is a statement about tensor squares, which is not
decided here.  Instead this module checks the combinatorial facts that
argument consumes: dominance, the path factorization of ``ω``, the
one-dimensional ``𝟙`` weight space, and the classification of dominant
candidates under the two socle filters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lweight import (
    Character,
    LWeight,
    left_dual,
    product_coefficient,
    product_coefficients,
    right_dual,
    simple_root,
)
from .paths import Path, PrimeSnake, enumerate_tuples, g_path, is_prime_snake
from .qcharacter import fundamental_char, snake_char
from .segments import is_segment, segment_monomial


@dataclass(frozen=True)
class ImaginaryInput:
    n: int
    i: int
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        n, i, b = self.n, self.i, self.b
        if n < 3:
            raise ValueError(f"rank must be at least 3, got n={n}")
        if not 2 <= i <= n - 1:
            raise ValueError(f"node i={i} must lie in [2, n-1] = [2,{n - 1}]")
        if 2 * i > n + 1:
            raise ValueError(f"need 2i <= n+1, got i={i}, n={n}")
        if len(b) < 2:
            raise ValueError(f"segment needs r >= 2 entries, got {len(b)}")
        if not is_segment(b, i, n):
            raise ValueError(f"{b} is not an ({i},{n})-segment")
        for x, y in zip(b, b[1:]):
            if y - x >= 2 * i:
                raise ValueError(f"gap {y - x} between {x} and {y} is not below 2i = {2 * i}")

    @property
    def r(self) -> int:
        return len(self.b)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(x - self.n - 1 for x in self.b)

    def s(self, j: int) -> int:
        """``s_j = (b_{j-1} - b_j + 2i) / 2`` for ``j`` in ``[2, r]`` (1-based)."""
        if not 2 <= j <= self.r:
            raise IndexError(f"s_j is defined for j in [2,{self.r}]")
        return (self.b[j - 2] - self.b[j - 1] + 2 * self.i) // 2

    def kr_top(self) -> LWeight:
        """``ω_{i,b}``."""
        return segment_monomial(self.b, self.i, self.n)

    def kr_bottom(self) -> LWeight:
        """``ω_{n+1-i,a}``, the left dual of ``ω_{i,b}``."""
        return segment_monomial(self.a, self.n + 1 - self.i, self.n)


def _pair(inp: ImaginaryInput, j: int) -> list[tuple[int, int]]:
    n, i, b, a, s = inp.n, inp.i, inp.b, inp.a, inp.s(j)
    return [(i - s, b[j - 2] - s), (n + 1 - i + s, a[j - 1] + s)]


def truncated_weight(inp: ImaginaryInput, j: int) -> LWeight:
    """``ω_{i,b_j} (pair_j) ... (pair_2) ω_{n+1-i,a_1}``; ``j = r`` gives ``ω``."""
    if not 1 <= j <= inp.r:
        raise IndexError(f"j must lie in [1,{inp.r}]")
    f = [(inp.i, inp.b[j - 1]), (inp.n + 1 - inp.i, inp.a[0])]
    for k in range(2, j + 1):
        f += _pair(inp, k)
    return LWeight.from_factors(inp.n, f)


def imaginary_weight(inp: ImaginaryInput) -> LWeight:
    return truncated_weight(inp, inp.r)


def path_tuple(inp: ImaginaryInput, m: Sequence[int]) -> tuple[Path, ...]:
    """``(g^{m_1}_{n+1-i,a_1}, ..., g^{m_r}_{n+1-i,a_r})``."""
    node = inp.n + 1 - inp.i
    return tuple(g_path(node, x, mj, inp.n) for x, mj in zip(inp.a, m))


def tuple_monomial(paths: Sequence[Path], n: int) -> LWeight:
    out = LWeight.one(n)
    for p in paths:
        out = out * p.monomial()
    return out


def path_factorization_holds(inp: ImaginaryInput) -> bool:
    """``ω = ω_{i,b} ω(g^0_{a_1}, g^{s_2}_{a_2}, ..., g^{s_r}_{a_r})``."""
    m = [0] + [inp.s(j) for j in range(2, inp.r + 1)]
    return imaginary_weight(inp) == inp.kr_top() * tuple_monomial(path_tuple(inp, m), inp.n)


def bpiposs(inp: ImaginaryInput) -> list[LWeight]:
    """The candidates ``truncated_weight(j)`` for ``j`` in ``[1, r-1]``."""
    return [truncated_weight(inp, j) for j in range(1, inp.r)]


def admissible_m(inp: ImaginaryInput) -> list[tuple[int, ...]]:
    """Vectors ``m`` with ``m_1 ∈ {0, i}``, ``m_j ∈ {s_j, i}`` and ``m_j = i ⟹ m_{j+1} = i``."""
    i, r = inp.i, inp.r
    out = [tuple([i] * r)]
    for switch in range(2, r + 2):
        out.append(tuple([0] + [inp.s(j) for j in range(2, switch)] + [i] * (r + 1 - switch)))
    return out


# -- dominant targets ---------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    pi: LWeight
    m: tuple[int, ...] | None
    in_weyl: bool
    second_filter: bool


@dataclass(frozen=True)
class Classification:
    omega: LWeight
    candidates: tuple[Candidate, ...]
    expected: tuple[LWeight, ...] = field(default=())

    @property
    def dominant(self) -> list[LWeight]:
        return [c.pi for c in self.candidates]

    @property
    def filtered(self) -> list[LWeight]:
        """Candidates in ``wt W(ω)`` passing the second socle filter."""
        return [c.pi for c in self.candidates if c.in_weyl and c.second_filter]

    def shape_violations(self) -> list[LWeight]:
        """Candidates in ``wt W(ω)`` that are neither ``𝟙``, ``ω`` nor a truncation."""
        allowed = set(self.expected)
        return [c.pi for c in self.candidates if c.in_weyl and (c.pi not in allowed or c.m is None)]

    @property
    def ok(self) -> bool:
        target = {LWeight.one(self.omega.n), self.omega}
        return not self.shape_violations() and set(self.filtered) == target

    def verdict(self) -> str:
        return "pass" if self.ok else "fail"


def _m_vector(inp: ImaginaryInput, paths: Sequence[Path]) -> tuple[int, ...] | None:
    node = inp.n + 1 - inp.i
    top = min(node, inp.n + 1 - node)
    m = []
    for x, p in zip(inp.a, paths):
        for k in range(top + 1):
            if g_path(node, x, k, inp.n) == p:
                m.append(k)
                break
        else:
            return None
    return tuple(m)


def dominant_targets(inp: ImaginaryInput) -> list[LWeight]:
    """Dominant ``ω_{i,b}·ω(g̲)`` over non-crossing tuples ``g̲ ∈ ℙ_{n+1-i,a}``."""
    top = inp.kr_top()
    snake = PrimeSnake.from_lweight(inp.kr_bottom())
    out = {top * tuple_monomial(t, inp.n) for t in enumerate_tuples(snake)}
    return sorted(pi for pi in out if pi.is_dominant())


def classify_dominant_targets(inp: ImaginaryInput) -> Classification:
    """Run both socle filters over the dominant targets.

    For each candidate ``π`` record an ``m``-vector from ``admissible_m``
    realising it (or ``None``), membership in ``wt W(ω)`` and the second
    filter ``(π*)^{-1} ω_{i,b} ∈ wt V(ω_{i,b})``.
    """
    n = inp.n
    omega = imaginary_weight(inp)
    top, bottom = inp.kr_top(), inp.kr_bottom()
    snake = PrimeSnake.from_lweight(bottom)
    found: dict[LWeight, tuple[int, ...] | None] = {}
    allowed_m = set(admissible_m(inp))
    for t in enumerate_tuples(snake):
        pi = top * tuple_monomial(t, n)
        if not pi.is_dominant():
            continue
        m = _m_vector(inp, t)
        if m not in allowed_m:
            m = None
        if found.get(pi) is None:
            found[pi] = m
    weyl = [fundamental_char(i, a, n) for i, a in omega.factors()]
    ch_top = snake_char(top)
    dual_bottom = right_dual(bottom)
    order = sorted(found)
    weyl_coeffs = product_coefficients(weyl, order)
    cands = []
    for pi, wc in zip(order, weyl_coeffs):
        in_weyl = wc > 0
        second = ch_top.coefficient(right_dual(pi).inverse() * dual_bottom) > 0
        cands.append(Candidate(pi, found[pi], in_weyl, second))
    expected = (LWeight.one(n), omega, *bpiposs(inp))
    return Classification(omega, tuple(cands), expected)


# -- the trivial weight space -------------------------------------------

def _snake_pair(pi: LWeight | PrimeSnake) -> tuple[LWeight, LWeight]:
    x = pi.lweight() if isinstance(pi, PrimeSnake) else pi
    if not is_prime_snake(x):
        raise ValueError(f"{x} is not a prime snake")
    dual = left_dual(x)
    if not is_prime_snake(dual):
        raise ValueError(f"left dual {dual} is not a prime snake")
    return x, dual


def certificate_dim_one(pi: LWeight | PrimeSnake, squared: bool = False) -> int:
    """Number of ways to write ``𝟙`` as a product of ℓ-weights of ``V(π)`` and ``V(*π)``.

    With ``squared`` the factors come from two copies of each.
    """
    x, dual = _snake_pair(pi)
    chars = [snake_char(x), snake_char(dual)]
    if squared:
        chars = chars * 2
    return product_coefficient(chars, LWeight.one(x.n))


def dual_product(pi: LWeight | PrimeSnake) -> Character:
    x, dual = _snake_pair(pi)
    return snake_char(x).multiply(snake_char(dual))


def lowest_dual_exponent(pi: LWeight | PrimeSnake) -> int:
    """Largest exponent of ``Y[n+1-i_1, c_1-n-1]`` among ℓ-weights of ``V(π) ⊗ V(*π)``.

    ``(i_1, c_1)`` is the factor of ``π`` with smallest shift.
    """
    x, _ = _snake_pair(pi)
    n = x.n
    i1, c1 = x.factors()[0]
    return max(m.exponent(n + 1 - i1, c1 - n - 1) for m in dual_product(x).monomials())


# -- diagonal subalgebra weights ----------------------------------------

@dataclass(frozen=True)
class DsubWeights:
    j: int
    k: int
    pi: LWeight
    pi_right: LWeight
    pi_left: LWeight
    pi_plus: LWeight
    pi_minus: LWeight
    alpha: LWeight
    alpha_minus: LWeight
    alpha_printed: LWeight

    def plus_identity(self) -> bool:
        """``π'·π·α^{-1} = π⁺``."""
        return self.pi_right * self.pi / self.alpha == self.pi_plus

    def minus_identity(self) -> bool:
        """``'π·π·α_-^{-1} = π⁻``."""
        return self.pi * self.pi_left / self.alpha_minus == self.pi_minus

    def printed_identity(self) -> bool:
        """The plus identity with the root product exactly as displayed."""
        return self.pi_right * self.pi / self.alpha_printed == self.pi_plus


def _dsub_alpha(n: int, j: int, k: int, fs, corrected: bool = True, sign: int = 1) -> LWeight:
    # root α_{r-t, c ± (t+1+(r-j_p))}; the displayed product omits the (r-j_p) term
    alpha = LWeight.one(n)
    for jp, c in fs:
        for r in range(jp, k):
            lift = r - jp if corrected else 0
            for t in range(jp - j):
                alpha = alpha * simple_root(n, r - t, c + sign * (t + 1 + lift))
    return alpha


def dsub_weights(
    j: int,
    k: int,
    pi: LWeight,
    pi1: LWeight | None = None,
    pi2: LWeight | None = None,
) -> DsubWeights:
    """Weights attached to ``J = [j+1, k-1]`` and ``π`` supported on ``J``.

    ``π₁`` and ``π₂`` are optional and only checked for support off ``J``.
    ``alpha`` is the root product that makes ``π'·π·α^{-1} = π⁺`` hold;
    ``alpha_minus`` plays the same role for ``π⁻``.  ``alpha_printed`` drops
    the ``r - j_p`` term from each root shift and agrees with ``alpha`` only
    when every factor sits on node ``k - 1``.
    """
    n = pi.n
    if not 0 <= j < k <= n + 1 or k - j < 2:
        raise ValueError(f"need 0 <= j < j+1 < k <= n+1, got j={j}, k={k}")
    inside = range(j + 1, k)
    if not pi.is_dominant() or any(node not in inside for node in pi.nodes()):
        raise ValueError(f"π = {pi} must be dominant and supported on [{j + 1},{k - 1}]")
    for name, x in (("π₁", pi1), ("π₂", pi2)):
        if x is not None and (not x.is_dominant() or any(node in inside for node in x.nodes())):
            raise ValueError(f"{name} = {x} must be dominant and supported off [{j + 1},{k - 1}]")
    fs = pi.factors()
    right = LWeight.from_factors(n, [(k + j - jp, c + k - j) for jp, c in fs])
    left = LWeight.from_factors(n, [(k + j - jp, c - k + j) for jp, c in fs])
    plus = LWeight.from_factors(n, [f for jp, c in fs for f in ((j, c + jp - j), (k, c + k - jp))])
    minus = LWeight.from_factors(n, [f for jp, c in fs for f in ((j, c - jp + j), (k, c - k + jp))])
    return DsubWeights(
        j, k, pi, right, left, plus, minus,
        _dsub_alpha(n, j, k, fs),
        _dsub_alpha(n, j, k, fs, sign=-1),
        _dsub_alpha(n, j, k, fs, corrected=False),
    )


def omega_zero(inp: ImaginaryInput) -> LWeight:
    """``ω_0 = ∏_{j=2}^{r} ω_{n+1-s_j, a_j-i+s_j}``."""
    n, i, a = inp.n, inp.i, inp.a
    return LWeight.from_factors(n, [(n + 1 - inp.s(j), a[j - 1] - i + inp.s(j)) for j in range(2, inp.r + 1)])


def omega_halves(inp: ImaginaryInput) -> tuple[LWeight, LWeight]:
    """``(ω_1, ω_2)``: the factors of ``ω`` on nodes ``<= i`` and ``>= n+1-i``."""
    n, i, b, a = inp.n, inp.i, inp.b, inp.a
    one = [(i, b[-1])] + [(i - inp.s(j), b[j - 2] - inp.s(j)) for j in range(2, inp.r + 1)]
    two = [(n + 1 - i, a[0])] + [(n + 1 - i + inp.s(j), a[j - 1] + inp.s(j)) for j in range(2, inp.r + 1)]
    return LWeight.from_factors(n, one), LWeight.from_factors(n, two)


@dataclass(frozen=True)
class HomSourceCheck:
    source: LWeight
    left: LWeight
    right: LWeight
    expected: tuple[LWeight, LWeight, LWeight]

    @property
    def ok(self) -> bool:
        return (self.source, self.left, self.right) == self.expected


def hom_source_checks(inp: ImaginaryInput) -> tuple[HomSourceCheck, HomSourceCheck]:
    """Instantiate the diagonal-subalgebra maps used for the converse direction.

    First map: ``J = [n+2-i, n]``, ``π = ω_0``, ``π₁ = ω_{n+1-i,a_1}``, giving
    ``W(ω_{n+1-i,a}) → V(ω_2) ⊗ V(ω_0)``.  Second map: ``J = [1, i-1]``,
    ``π = ω_0*``, ``π₂ = ω_{i,b_r}``, giving ``W(ω_{i,b}) → V(ω_0*) ⊗ V(ω_1)``.
    """
    n, i = inp.n, inp.i
    w0 = omega_zero(inp)
    w1, w2 = omega_halves(inp)
    d1 = dsub_weights(n + 1 - i, n + 1, w0)
    p1 = LWeight.from_factors(n, [(n + 1 - i, inp.a[0])])
    first = HomSourceCheck(p1 * d1.pi_plus, p1 * d1.pi_right, w0, (inp.kr_bottom(), w2, w0))
    w0s = right_dual(w0)
    d2 = dsub_weights(0, i, w0s)
    p2 = LWeight.from_factors(n, [(i, inp.b[-1])])
    second = HomSourceCheck(d2.pi_minus * p2, w0s, d2.pi_left * p2, (inp.kr_top(), w0s, w1))
    return first, second


# -- the A_2 family -----------------------------------------------------

@dataclass(frozen=True)
class A2Family:
    r1: int
    r2: int
    b1: int
    b2: int
    pi: LWeight
    dual: LWeight
    product: LWeight


def a2_family(r1: int, r2: int, b1: int) -> A2Family:
    """Evaluation-type snake ``π = ω_{1,b_1} ω_{2,b_2}`` in rank 2 and ``*π·π``.

    ``b_2`` solves ``b_1 - 3 = b_2 + 2r_2 - 2``.
    """
    if r1 < 2 or r2 < 2:
        raise ValueError(f"need r1, r2 >= 2, got r1={r1}, r2={r2}")
    b2 = b1 - 1 - 2 * r2
    pi = LWeight.from_factors(2, [(1, b1 + 2 * t) for t in range(r1)] + [(2, b2 + 2 * t) for t in range(r2)])
    shown = LWeight.from_factors(
        2, [(1, b2 - 3 + 2 * t) for t in range(r2)] + [(2, b1 - 3 + 2 * t) for t in range(r1)]
    )
    if left_dual(pi) != shown:  # pragma: no cover
        raise AssertionError("left dual disagrees with the displayed segments")
    return A2Family(r1, r2, b1, b2, pi, shown, shown * pi)


# -- certificate bundle -------------------------------------------------

@dataclass(frozen=True)
class ImaginaryCertificate:
    input: ImaginaryInput
    omega: LWeight
    dominant: bool
    path_factorization: bool
    dim_one: int
    classification: str
    hom_sources: tuple[bool, bool] | None = None

    @property
    def ok(self) -> bool:
        return (
            self.dominant
            and self.path_factorization
            and self.dim_one == 1
            and self.classification == "pass"
            and (self.hom_sources is None or all(self.hom_sources))
        )

    def to_json(self) -> dict:
        certs: dict = {
            "dominant": self.dominant,
            "path_factorization": self.path_factorization,
            "dim_one": self.dim_one,
            "classification": self.classification,
        }
        if self.hom_sources is not None:
            certs["hom_sources"] = list(self.hom_sources)
        return {
            "n": self.input.n,
            "i": self.input.i,
            "b": list(self.input.b),
            "omega": str(self.omega),
            "omega_json": self.omega.to_json(),
            "certificates": certs,
            "verdict": "imaginary" if self.ok else "uncertified",
        }

    def recheck(self) -> bool:
        """Recompute every stored check and compare."""
        return certify(self.input, with_hom_sources=self.hom_sources is not None) == self


def certify(inp: ImaginaryInput, with_hom_sources: bool = True) -> ImaginaryCertificate:
    omega = imaginary_weight(inp)
    hom = tuple(c.ok for c in hom_source_checks(inp)) if with_hom_sources else None
    return ImaginaryCertificate(
        inp,
        omega,
        omega.is_dominant(),
        path_factorization_holds(inp),
        certificate_dim_one(inp.kr_top()),
        classify_dominant_targets(inp).verdict(),
        hom,
    )
