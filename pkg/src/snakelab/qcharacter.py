"""q-characters of prime snakes and identities in the Grothendieck ring.

Only characters with a proof behind them are produced:

* prime snakes, through the path model;
* dominant monomials on one node, through the segment factorization (the
  tensor product of the factors is irreducible);
* products of fundamental ℓ-weights whose shifts avoid every reducibility
  point, where the tensor product of fundamentals is already simple.

Anything else raises ``NotCertified``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .lweight import (
    DEFAULT_MAX_TERMS,
    Character,
    CharacterTooLarge,
    LWeight,
    expand_products,
    in_qplus,
    product_coefficient,
    right_dual,
)
from .paths import PrimeSnake, Snake, is_prime_snake, is_snake, prime_snake_defect, tuple_monomials
from .segments import (
    ReducibilityWitness,
    factorize,
    position,
    reducibility_witness,
    s_mrn,
    segment_monomial,
    tsystem_pm,
)


class NotCertified(ValueError):
    """No certified route to the character of this simple module."""


_disk_cache = None


def use_cache(cache) -> None:
    """Install (or remove, with ``None``) a persistent character cache."""
    global _disk_cache
    _disk_cache = cache


def _as_snake(x: LWeight | PrimeSnake) -> PrimeSnake:
    return x if isinstance(x, PrimeSnake) else PrimeSnake.from_lweight(x)


@lru_cache(maxsize=8192)
def _snake_terms(n: int, factors: tuple[tuple[int, int], ...], prime: bool = True) -> Character:
    snake = PrimeSnake(n, factors) if prime else Snake(n, factors)
    ch = Character(n)
    ch.terms = tuple_monomials(snake)
    return ch


def snake_char(x: LWeight | PrimeSnake) -> Character:
    """q-character of a prime snake module, one term per non-crossing tuple."""
    snake = _as_snake(x)
    if _disk_cache is not None:
        hit = _disk_cache.get(snake)
        if hit is not None:
            return hit
    ch = _snake_terms(snake.n, snake.factors)
    if _disk_cache is not None:
        _disk_cache.put(snake, ch)
    return ch


def fundamental_char(i: int, a: int, n: int) -> Character:
    return _snake_terms(n, ((i, a),))


def weyl_char(x: LWeight, max_terms: int = DEFAULT_MAX_TERMS) -> Character:
    """Character of the local Weyl module: product of fundamental characters."""
    if not x.is_dominant():
        raise ValueError(f"{x} is not dominant")
    ch = Character.one(x.n)
    for i, a in x.factors():
        ch = ch.multiply(fundamental_char(i, a, x.n), max_terms)
    return ch


def hw_order_admissible(
    factors: Sequence[tuple[int, int]], n: int, both_directions: bool = False
) -> bool:
    """Cyclicity test for ``V(ω_{i_1,a_1}) ⊗ ... ⊗ V(ω_{i_k,a_k})`` in the given order.

    Every ordered pair ``j < l`` must satisfy ``a_l - a_j ∉ S_{i_l,i_j,n}``.
    With ``both_directions`` the reversed differences are tested too, which
    gives a sufficient condition for irreducibility.
    """
    for j in range(len(factors)):
        for l in range(j + 1, len(factors)):
            (ij, aj), (il, al) = factors[j], factors[l]
            s = s_mrn(il, ij, n)
            if al - aj in s or (both_directions and aj - al in s):
                return False
    return True


def certified_route(x: LWeight) -> str | None:
    """Name of the route ``simple_char`` would take, or ``None``."""
    if not x.is_dominant():
        return None
    if x.is_one():
        return "trivial"
    if is_prime_snake(x):
        return "prime-snake"
    if len(x.nodes()) == 1:
        return "segments"
    if hw_order_admissible(x.factors(), x.n, both_directions=True):
        return "fundamentals"
    if is_snake(x):
        return "snake"
    return None


def simple_char(x: LWeight, max_terms: int = DEFAULT_MAX_TERMS) -> Character:
    """q-character of the simple module ``V(x)`` when a certified route exists."""
    route = certified_route(x)
    if route is None:
        raise NotCertified(f"no certified character for V({x})")
    if route == "trivial":
        return Character.one(x.n)
    if route == "prime-snake":
        return _capped(snake_char(x), max_terms)
    if route == "fundamentals":
        return weyl_char(x, max_terms)
    if route == "snake":
        return _capped(_snake_terms(x.n, tuple(x.factors()), prime=False), max_terms)
    (i,) = x.nodes()
    ch = Character.one(x.n)
    for seg in factorize([a for _, a in x.factors()], i, x.n):
        ch = ch.multiply(_capped(snake_char(segment_monomial(seg, i, x.n)), max_terms), max_terms)
    return ch


def _capped(ch: Character, max_terms: int) -> Character:
    if len(ch) > max_terms:
        raise CharacterTooLarge(f"character has {len(ch)} terms, cap is {max_terms}")
    return ch


# -- Grothendieck ring expressions -------------------------------------

@dataclass(frozen=True)
class RingExpression:
    """Signed sum of products of simple classes ``[V(ω)]``."""

    n: int
    terms: tuple[tuple[int, tuple[LWeight, ...]], ...] = field(default=())

    @classmethod
    def product(cls, *classes: LWeight, coeff: int = 1) -> "RingExpression":
        n = classes[0].n
        return cls(n, ((coeff, tuple(classes)),))

    def __add__(self, other: "RingExpression") -> "RingExpression":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return RingExpression(self.n, self.terms + other.terms)

    def __neg__(self) -> "RingExpression":
        return RingExpression(self.n, tuple((-c, cl) for c, cl in self.terms))

    def classes(self) -> list[LWeight]:
        return [x for _, cl in self.terms for x in cl]

    def expand(self, max_terms: int = DEFAULT_MAX_TERMS) -> Character:
        return expand_products(
            self.n, [(c, [simple_char(x, max_terms) for x in cl]) for c, cl in self.terms], max_terms
        )

    def __str__(self) -> str:
        parts = []
        for c, cl in self.terms:
            body = "".join(f"[V({x})]" for x in cl)
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts) if parts else "0"


def identity_difference(lhs: RingExpression, rhs: RingExpression) -> Character:
    for x in lhs.classes() + rhs.classes():
        if certified_route(x) is None:
            raise NotCertified(f"class [V({x})] has no certified character")
    return (lhs + -rhs).expand()


def verify_identity(lhs: RingExpression, rhs: RingExpression) -> bool:
    """Compare both sides through their q-characters (an injective map)."""
    return len(identity_difference(lhs, rhs)) == 0


@dataclass(frozen=True)
class TSystem:
    lhs: RingExpression
    rhs: RingExpression
    omega_plus: LWeight
    omega_minus: LWeight
    top: LWeight
    bottom: LWeight


def ext_tsystem(x: LWeight | PrimeSnake, y: LWeight | PrimeSnake) -> TSystem:
    """Extended T-system relation for two overlapping prime snakes.

    ``x = ω_{i_1,a_1}...ω_{i_k,a_k}`` and ``y = ω_{j_1,b_1}...ω_{j_k,b_k}``
    with ``(j_s, b_s) = (i_{s+1}, a_{s+1})`` for ``s < k`` and ``x·ω_{j_k,b_k}``
    a prime snake.  Then
    ``[V(x)][V(y)] = [V(x ω_{j_k,b_k})][V(y ω_{j_k,b_k}^{-1})] + [V(ω⁺)][V(ω⁻)]``.
    """
    sx, sy = _as_snake(x), _as_snake(y)
    n = sx.n
    fx, fy = sx.factors, sy.factors
    k = len(fx)
    if len(fy) != k or k == 0:
        raise ValueError("the two snakes must have the same positive length")
    if tuple(fy[:-1]) != tuple(fx[1:]):
        raise ValueError("second snake must continue the first: (j_s, b_s) = (i_{s+1}, a_{s+1})")
    last = fy[-1]
    chain = list(fx) + [last]
    reason = prime_snake_defect(n, chain)
    if reason or last[1] <= fx[-1][1]:
        raise ValueError(f"joined snake is not prime: {reason or 'shifts not increasing'}")
    plus, minus = tsystem_pm(chain, n)
    top = LWeight.from_factors(n, chain)
    bottom = LWeight.from_factors(n, fx[1:])
    lhs = RingExpression.product(sx.lweight(), sy.lweight())
    rhs = RingExpression.product(top, bottom) + RingExpression.product(plus, minus)
    return TSystem(lhs, rhs, plus, minus, top, bottom)


def tensor_irreducible_kr(segments: Iterable[Sequence[int]], i: int, n: int) -> bool:
    """Irreducibility of a tensor product of KR-type modules on node ``i``."""
    segs = [tuple(s) for s in segments]
    return all(
        position(segs[p], segs[q], i, n).general
        for p in range(len(segs))
        for q in range(p + 1, len(segs))
    )


def hom_candidates(pi1: LWeight, pi2: LWeight) -> list[LWeight]:
    """Dominant ``π`` surviving both monomial filters for ``W(π) → V(π₁) ⊗ V(π₂)``.

    ``π = π₁·m`` with ``m`` an ℓ-weight of ``V(π₂)``, and
    ``(π*)^{-1} π₂*`` must be an ℓ-weight of ``V(π₁)``.
    """
    ch1, ch2 = simple_char(pi1), simple_char(pi2)
    out = set()
    for m in ch2.monomials():
        pi = pi1 * m
        if pi.is_dominant() and ch1.coefficient(right_dual(pi).inverse() * right_dual(pi2)):
            out.add(pi)
    return sorted(out)


def socle_filter(pi: LWeight, pi1: LWeight, pi2: LWeight) -> bool:
    """Both necessary conditions for ``Hom(W(π), V(π₁) ⊗ V(π₂)) ≠ 0``."""
    ch1, ch2 = simple_char(pi1), simple_char(pi2)
    return bool(ch2.coefficient(pi / pi1)) and bool(
        ch1.coefficient(right_dual(pi).inverse() * right_dual(pi2))
    )


# -- reducibility witnesses ---------------------------------------------

@dataclass(frozen=True)
class WitnessCheck:
    witness: ReducibilityWitness
    in_product: int
    in_triple: int

    @property
    def ok(self) -> bool:
        return self.in_product > 0 and self.in_triple == 0


def check_witness(a: Sequence[int], b: Sequence[int], i: int, n: int) -> WitnessCheck:
    """Build the witness and evaluate its coefficient in both products."""
    w = reducibility_witness(a, b, i, n)
    (a0, b0), (a1, b1), (a2, b2) = w.parts
    prod = product_coefficient(
        [snake_char(segment_monomial(w.a, i, n)), snake_char(segment_monomial(w.b, i, n))], w.omega
    )
    middle = segment_monomial(a1, i, n) * segment_monomial(b1, i, n)
    triple = [
        weyl_char(segment_monomial(a0 + b0, i, n)),
        simple_char(middle),
        weyl_char(segment_monomial(a2 + b2, i, n)),
    ]
    return WitnessCheck(w, prod, product_coefficient(triple, w.omega))


def dominant_below(x: LWeight, ch: Character) -> list[LWeight]:
    """Dominant monomials of ``ch`` other than ``x`` that lie in ``x·Q⁻``."""
    return [m for m in ch.dominant_monomials() if m != x and in_qplus(x / m)]
