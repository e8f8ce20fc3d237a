"""ℓ-weights of type A_n, classical weights and q-characters.

An ℓ-weight is a Laurent monomial in the fundamental ℓ-weights
``Y[i,a] = ω_{i,a}``, 1 <= i <= n, a in Z.  Nodes outside ``[1, n]`` are
trivial and silently dropped, which is the convention the snake and path
formulas rely on (``ω_{0,a} = ω_{n+1,a} = 1``).

Characters are finite sums of ℓ-weights with integer multiplicities.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Key = tuple[tuple[tuple[int, int], int], ...]

DEFAULT_MAX_TERMS = 10**6


class CharacterTooLarge(RuntimeError):
    """Raised when a character product would exceed the configured size cap."""


class NotInQPlus(ValueError):
    """Raised when an ℓ-weight is not a product of simple affine roots."""


class LWeight:
    """Immutable Laurent monomial ``∏ Y[i,a]^e`` in rank ``n``.

    Parameters
    ----------
    n : int
        Rank of the underlying sl_{n+1}.
    exps : mapping or iterable of ((i, a), e)
        Exponents.  Zero exponents and nodes outside ``[1, n]`` are dropped.
    """

    __slots__ = ("n", "_items", "_hash")

    def __init__(self, n: int, exps: Mapping[tuple[int, int], int] | Iterable = ()):
        if n < 1:
            raise ValueError(f"rank must be positive, got {n}")
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[tuple[int, int], int] = {}
        for (i, a), e in items:
            if 1 <= i <= n and e:
                acc[(i, a)] = acc.get((i, a), 0) + e
        self.n = n
        self._items: Key = tuple(sorted((k, e) for k, e in acc.items() if e))
        self._hash = hash((n, self._items))

    @classmethod
    def _raw(cls, n: int, items: Key) -> "LWeight":
        obj = cls.__new__(cls)
        obj.n = n
        obj._items = items
        obj._hash = hash((n, items))
        return obj

    @classmethod
    def one(cls, n: int) -> "LWeight":
        return cls._raw(n, ())

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[tuple[int, int]]) -> "LWeight":
        """Product of ``Y[i,a]`` over ``(i, a)`` pairs, with repetition."""
        return cls(n, [((i, a), 1) for i, a in factors])

    # -- basic protocol -------------------------------------------------
    @property
    def items(self) -> Key:
        return self._items

    def exps(self) -> dict[tuple[int, int], int]:
        return dict(self._items)

    def exponent(self, i: int, a: int) -> int:
        for k, e in self._items:
            if k == (i, a):
                return e
        return 0

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LWeight):
            return NotImplemented
        return self.n == other.n and self._items == other._items

    def __lt__(self, other: "LWeight") -> bool:
        return (self.n, self._items) < (other.n, other._items)

    def __bool__(self) -> bool:
        return True

    def is_one(self) -> bool:
        return not self._items

    def _check(self, other: "LWeight") -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "LWeight") -> "LWeight":
        self._check(other)
        if not other._items:
            return self
        if not self._items:
            return other
        acc = dict(self._items)
        for k, e in other._items:
            v = acc.get(k, 0) + e
            if v:
                acc[k] = v
            else:
                del acc[k]
        return LWeight._raw(self.n, tuple(sorted(acc.items())))

    def __truediv__(self, other: "LWeight") -> "LWeight":
        return self * other.inverse()

    def __pow__(self, k: int) -> "LWeight":
        if k == 0:
            return LWeight.one(self.n)
        return LWeight._raw(self.n, tuple((key, e * k) for key, e in self._items))

    def inverse(self) -> "LWeight":
        return self**-1

    # -- structure ------------------------------------------------------
    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self._items)

    def factors(self) -> list[tuple[int, int]]:
        """Fundamental factors of a dominant monomial, sorted by (shift, node)."""
        if not self.is_dominant():
            raise ValueError(f"{self} is not dominant")
        out = [(i, a) for (i, a), e in self._items for _ in range(e)]
        out.sort(key=lambda f: (f[1], f[0]))
        return out

    def nodes(self) -> set[int]:
        return {i for (i, _), _ in self._items}

    def weight(self) -> "Weight":
        c = [0] * self.n
        for (i, _), e in self._items:
            c[i - 1] += e
        return Weight(tuple(c))

    def shift(self, k: int) -> "LWeight":
        return LWeight._raw(self.n, tuple(((i, a + k), e) for (i, a), e in self._items))

    def restrict(self, lo: int, hi: int) -> "LWeight":
        """Restriction to the interval ``[lo, hi]``, renumbered from 1."""
        if not 1 <= lo <= hi <= self.n:
            raise ValueError(f"bad interval [{lo},{hi}] for rank {self.n}")
        return LWeight(
            hi - lo + 1,
            [((i - lo + 1, a), e) for (i, a), e in self._items if lo <= i <= hi],
        )

    def map(self, f: Callable[[int, int], tuple[int, int]], n: int | None = None) -> "LWeight":
        m = self.n if n is None else n
        return LWeight(m, [(f(i, a), e) for (i, a), e in self._items])

    def min_shift(self) -> int:
        return min(a for (_, a), _ in self._items)

    def max_shift(self) -> int:
        return max(a for (_, a), _ in self._items)

    # -- rendering ------------------------------------------------------
    def __str__(self) -> str:
        if not self._items:
            return "1"
        parts = []
        for (i, a), e in self._items:
            parts.append(f"Y[{i},{a}]" + ("" if e == 1 else f"^{e}"))
        return "·".join(parts)

    def __repr__(self) -> str:
        return f"LWeight({self.n}, {str(self)})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "factors": [{"i": i, "a": a, "e": e} for (i, a), e in self._items],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LWeight":
        return cls(int(obj["n"]), [((int(f["i"]), int(f["a"])), int(f.get("e", 1))) for f in obj["factors"]])


def Y(n: int, i: int, a: int, e: int = 1) -> LWeight:
    """The fundamental ℓ-weight ``ω_{i,a}^e`` in rank ``n``."""
    return LWeight(n, [((i, a), e)])


_PRINTED = re.compile(r"Y\[(-?\d+),(-?\d+)\](?:\^(-?\d+))?")


def parse_monomial(text: str, n: int) -> LWeight:
    """Parse ``node:shift[^exp][,...]`` or the printed form ``Y[i,a]^e·...``.

    ``1`` (or the empty string) is the identity.
    """
    text = text.strip()
    if text in ("", "1"):
        return LWeight.one(n)
    if text.startswith("Y["):
        toks = re.split(r"[·*]", text)
        items = []
        for tok in toks:
            m = _PRINTED.fullmatch(tok.strip())
            if not m:
                raise ValueError(f"bad monomial token {tok!r}; expected Y[i,a]^e")
            items.append(((int(m[1]), int(m[2])), int(m[3] or 1)))
    else:
        items = []
        for tok in text.split(","):
            tok = tok.strip()
            exp = 1
            if "^" in tok:
                tok, e = tok.split("^", 1)
                exp = int(e)
            try:
                i, a = tok.split(":")
                items.append(((int(i), int(a)), exp))
            except ValueError:
                raise ValueError(f"bad monomial token {tok!r}; expected node:shift") from None
    for (node, _), _ in items:
        if not 1 <= node <= n:
            raise ValueError(f"node {node} out of range [1,{n}]")
    return LWeight(n, items)


# -- roots and duals ----------------------------------------------------

def simple_root(n: int, i: int, a: int) -> LWeight:
    """Simple affine root ``α_{i,a}``."""
    if not 1 <= i <= n:
        raise ValueError(f"node {i} out of range [1,{n}]")
    return LWeight(
        n,
        [((i - 1, a), -1), ((i, a - 1), 1), ((i, a + 1), 1), ((i + 1, a), -1)],
    )


def decompose_in_qplus(x: LWeight) -> dict[tuple[int, int], int]:
    """Write ``x`` as a product of simple affine roots with non-negative exponents.

    Returns the exponent map ``{(i, a): m}``.  Raises ``NotInQPlus`` when no
    such expression exists.

    Notes
    -----
    In a product of roots whose largest root shift is ``A``, only the roots
    ``α_{i,A}`` reach shift ``A+1``, each contributing ``Y[i,A+1]``.  So the
    exponents at the top shift of ``x`` are the multiplicities of those roots;
    peel them off and repeat.  The bottom shift of a non-trivial product sits
    one below its smallest root shift, which bounds the descent.
    """
    n = x.n
    if x.is_one():
        return {}
    floor = x.min_shift() + 1
    cur = dict(x.items)
    out: dict[tuple[int, int], int] = {}
    while cur:
        c = max(a for (_, a) in cur)
        top = [(i, e) for (i, a), e in cur.items() if a == c]
        if any(e < 0 for _, e in top) or c - 1 < floor:
            raise NotInQPlus(f"{x} is not in Q+")
        for i, e in top:
            out[(i, c - 1)] = out.get((i, c - 1), 0) + e
            for (j, b), f in simple_root(n, i, c - 1).items:
                v = cur.get((j, b), 0) - e * f
                if v:
                    cur[(j, b)] = v
                else:
                    cur.pop((j, b), None)
    return out


def in_qplus(x: LWeight) -> bool:
    try:
        decompose_in_qplus(x)
    except NotInQPlus:
        return False
    return True


def right_dual(x: LWeight) -> LWeight:
    """``ω* : Y[i,a] -> Y[n+1-i, a+n+1]``."""
    n = x.n
    return x.map(lambda i, a: (n + 1 - i, a + n + 1))


def left_dual(x: LWeight) -> LWeight:
    """``*ω : Y[i,a] -> Y[n+1-i, a-n-1]``."""
    n = x.n
    return x.map(lambda i, a: (n + 1 - i, a - n - 1))


def omega_flip(x: LWeight) -> LWeight:
    """The involution ``Y[i,a] -> Y[n+1-i, -a]``."""
    n = x.n
    return x.map(lambda i, a: (n + 1 - i, -a))


# -- classical weights --------------------------------------------------

class Weight(tuple):
    """Integral weight of sl_{n+1} in the fundamental-weight basis."""

    @property
    def n(self) -> int:
        return len(self)

    def __add__(self, other):  # type: ignore[override]
        return Weight(x + y for x, y in zip(self, other))

    def __sub__(self, other):
        return Weight(x - y for x, y in zip(self, other))

    def __neg__(self):
        return Weight(-x for x in self)

    def scale(self, k: int) -> "Weight":
        return Weight(k * x for x in self)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self)


def fundamental_weight(n: int, i: int) -> Weight:
    c = [0] * n
    if 1 <= i <= n:
        c[i - 1] = 1
    return Weight(c)


def simple_root_weight(n: int, i: int) -> Weight:
    """``α_i = 2ω_i - ω_{i-1} - ω_{i+1}``."""
    c = [0] * n
    c[i - 1] = 2
    if i > 1:
        c[i - 2] = -1
    if i < n:
        c[i] = -1
    return Weight(c)


def root_coordinates(w: Weight) -> tuple[Fraction, ...]:
    """Coordinates of ``w`` in the simple-root basis (inverse Cartan matrix)."""
    n = len(w)
    return tuple(
        sum(Fraction(min(j, k) * (n + 1 - max(j, k)), n + 1) * w[k - 1] for k in range(1, n + 1))
        for j in range(1, n + 1)
    )


def weight_in_qplus(w: Weight) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in root_coordinates(w))


def weyl_dimension(w: Weight) -> int:
    """Dimension of the irreducible sl_{n+1}-module of highest weight ``w``."""
    n = len(w)
    num, den = 1, 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 2):
            num *= sum(w[i - 1 : j - 1]) + j - i
            den *= j - i
    return num // den


# -- characters ---------------------------------------------------------

class Character:
    """Finite formal sum of ℓ-weights with integer multiplicities."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[LWeight, int] | None = None):
        self.n = n
        self.terms: dict[LWeight, int] = {}
        if terms:
            for m, c in terms.items():
                if m.n != n:
                    raise ValueError("rank mismatch in character")
                if c:
                    self.terms[m] = self.terms.get(m, 0) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def of(cls, m: LWeight) -> "Character":
        return cls(m.n, {m: 1})

    @classmethod
    def one(cls, n: int) -> "Character":
        return cls.of(LWeight.one(n))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[LWeight, int]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def coefficient(self, m: LWeight) -> int:
        return self.terms.get(m, 0)

    def dimension(self) -> int:
        return sum(self.terms.values())

    def monomials(self) -> set[LWeight]:
        return set(self.terms)

    def dominant_monomials(self) -> list[LWeight]:
        return sorted(m for m in self.terms if m.is_dominant())

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Character(self.n, out)

    def __neg__(self) -> "Character":
        return Character(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, k: int) -> "Character":
        return Character(self.n, {m: k * c for m, c in self.terms.items()})

    def multiply(self, other: "Character", max_terms: int = DEFAULT_MAX_TERMS) -> "Character":
        if self.n != other.n:
            raise ValueError("rank mismatch in character product")
        codec = Codec.for_product(self.terms, other.terms)
        right = [(codec.encode(m), c) for m, c in other.terms.items()]
        out: dict[int, int] = {}
        get = out.get
        for m1, c1 in self.terms.items():
            x = codec.encode(m1)
            for y, c2 in right:
                k = x + y
                out[k] = get(k, 0) + c1 * c2
        if len(out) > max_terms:
            raise CharacterTooLarge(f"character has {len(out)} terms, cap is {max_terms}")
        ch = Character(self.n)
        ch.terms = {codec.decode(k): c for k, c in out.items() if c}
        return ch

    __mul__ = multiply

    def truncate(self, keep: Callable[[LWeight], bool]) -> "Character":
        return Character(self.n, {m: c for m, c in self.terms.items() if keep(m)})

    def map(self, f: Callable[[LWeight], LWeight], n: int | None = None) -> "Character":
        out: dict[LWeight, int] = {}
        for m, c in self.terms.items():
            k = f(m)
            out[k] = out.get(k, 0) + c
        return Character(self.n if n is None else n, out)

    def weights(self) -> dict[Weight, int]:
        out: dict[Weight, int] = {}
        for m, c in self.terms.items():
            w = m.weight()
            out[w] = out.get(w, 0) + c
        return out

    def sorted_terms(self) -> list[tuple[LWeight, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].items)

    def to_json(self) -> list[dict]:
        return [{"monomial": m.to_json(), "mult": c} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, n: int, arr: list[dict]) -> "Character":
        return cls(n, {LWeight.from_json(t["monomial"]): int(t["mult"]) for t in arr})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            parts.append(str(m) if c == 1 else f"{c}*{m}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Character(n={self.n}, terms={len(self.terms)})"


class Codec:
    """Packs monomials into integers so that multiplication becomes addition.

    Each generator owns a fixed-width signed digit.  Exponents of every
    product formed with one codec must stay inside the digit range, which
    ``for_product`` guarantees by summing the largest exponents involved.
    """

    __slots__ = ("n", "gens", "pos", "width", "bits", "half", "offset", "nbytes", "fmt")

    def __init__(self, n: int, gens: Iterable[tuple[int, int]], bound: int):
        self.n = n
        self.gens = sorted(set(gens))
        self.pos = {g: k for k, g in enumerate(self.gens)}
        for width, fmt in ((1, "B"), (2, "H"), (4, "I"), (8, "Q")):
            if bound < (1 << (8 * width - 1)) - 1:
                break
        else:  # pragma: no cover
            raise CharacterTooLarge(f"exponent bound {bound} too large")
        self.width, self.fmt = width, fmt
        self.bits = 8 * width
        self.half = 1 << (self.bits - 1)
        self.nbytes = width * len(self.gens)
        self.offset = sum(self.half << (self.bits * k) for k in range(len(self.gens)))

    @classmethod
    def for_product(cls, *term_maps: Mapping[LWeight, int]) -> "Codec":
        gens: set[tuple[int, int]] = set()
        bound = 0
        n = 1
        for terms in term_maps:
            top = 0
            for m in terms:
                n = m.n
                for g, e in m.items:
                    gens.add(g)
                    if abs(e) > top:
                        top = abs(e)
            bound += top
        return cls(n, gens, max(bound, 1))

    def encode(self, m: LWeight) -> int:
        b, pos = self.bits, self.pos
        return sum(e << (b * pos[g]) for g, e in m.items)

    def decode(self, v: int) -> LWeight:
        data = (v + self.offset).to_bytes(self.nbytes, "little")
        digits = data if self.width == 1 else memoryview(data).cast(self.fmt)
        half, gens = self.half, self.gens
        return LWeight._raw(
            self.n, tuple((gens[k], d - half) for k, d in enumerate(digits) if d != half)
        )


def expand_products(
    n: int, terms: Iterable[tuple[int, Sequence[Character]]], max_terms: int = DEFAULT_MAX_TERMS
) -> Character:
    """``Σ coeff · ∏ chars`` computed in packed form with a single decode pass."""
    terms = [(c, list(chs)) for c, chs in terms]
    gens: set[tuple[int, int]] = set()
    bound = 0
    for _, chs in terms:
        tot = 0
        for ch in chs:
            top = 0
            for m in ch.terms:
                for g, e in m.items:
                    gens.add(g)
                    top = max(top, abs(e))
            tot += top
        bound = max(bound, tot)
    codec = Codec(n, gens, max(bound, 1))
    packed: dict[int, list[tuple[int, int]]] = {}
    acc: dict[int, int] = {}
    for coeff, chs in terms:
        cur = {0: coeff}
        for ch in sorted(chs, key=len):
            key = id(ch)
            if key not in packed:
                packed[key] = [(codec.encode(m), c) for m, c in ch.terms.items()]
            nxt: dict[int, int] = {}
            get = nxt.get
            for x, c1 in cur.items():
                for y, c2 in packed[key]:
                    k = x + y
                    nxt[k] = get(k, 0) + c1 * c2
            if len(nxt) > max_terms:
                raise CharacterTooLarge(f"character has {len(nxt)} terms, cap is {max_terms}")
            cur = nxt
        for k, c in cur.items():
            acc[k] = acc.get(k, 0) + c
    out = Character(n)
    out.terms = {codec.decode(k): c for k, c in acc.items() if c}
    return out


def _packed_expand(codec: Codec, chars: Sequence[Character]) -> dict[int, int]:
    cur = {0: 1}
    for ch in chars:
        nxt: dict[int, int] = {}
        get = nxt.get
        packed = [(codec.encode(m), c) for m, c in ch.terms.items()]
        for x, c1 in cur.items():
            for y, c2 in packed:
                nxt[x + y] = get(x + y, 0) + c1 * c2
        cur = nxt
    return cur


def product_coefficients(chars: Sequence[Character], targets: Sequence[LWeight]) -> list[int]:
    """Coefficients of several ``targets`` in the product of ``chars``.

    The factors are split into two groups of similar expanded size; each
    group is expanded once and the targets are looked up by matching halves.
    """
    targets = list(targets)
    if not chars:
        return [int(t.is_one()) for t in targets]
    n = chars[0].n
    gens = {g for t in targets for g, _ in t.items}
    bound = max((abs(e) for t in targets for _, e in t.items), default=0)
    for ch in chars:
        top = 0
        for m in ch.terms:
            for g, e in m.items:
                gens.add(g)
                top = max(top, abs(e))
        bound += top
    codec = Codec(n, gens, max(bound, 1))
    left: list[Character] = []
    right: list[Character] = []
    lsize = rsize = 1
    for ch in sorted(chars, key=len, reverse=True):
        if lsize <= rsize:
            left.append(ch)
            lsize *= max(len(ch), 1)
        else:
            right.append(ch)
            rsize *= max(len(ch), 1)
    a, b = _packed_expand(codec, left), _packed_expand(codec, right)
    if len(a) > len(b):
        a, b = b, a
    out = []
    for t in targets:
        want = codec.encode(t)
        get = b.get
        out.append(sum(c * get(want - x, 0) for x, c in a.items()))
    return out


def product_coefficient(chars: Sequence[Character], target: LWeight) -> int:
    """Coefficient of ``target`` in the product of ``chars`` without a full expansion."""
    return product_coefficients(chars, [target])[0]
