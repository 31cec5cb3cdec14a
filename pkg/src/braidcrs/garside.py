"""
Garside arithmetic for the Artin braid group B_n.

Simple elements (permutation braids) are stored as permutation tables. A table
``p`` is 0-based: ``p[j]`` is the final position of the strand that starts at
position ``j``. Braid words are read left to right, top to bottom, so the table
of a product ``s*t`` is ``t∘s`` (see :func:`compose`).

A braid is kept in left normal form Δ^k β_1 ⋯ β_N as a :class:`CanonicalBraid`.
Every element handed out by this module is normalized; words only exist inside
the parser.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Perm = tuple[int, ...]


class BraidError(ValueError):
    """Base class for invalid braid input."""


class InvalidGeneratorError(BraidError):
    """A letter of a braid word is out of range for the strand count."""


class StrandMismatchError(BraidError):
    """Two braids with different strand counts were combined."""


class MalformedWordError(BraidError):
    """A token of a braid word is not a nonzero integer."""


class StrandCountError(BraidError):
    """The strand count is below 2."""


# ---------------------------------------------------------------------------
# permutation tables

@functools.lru_cache(maxsize=None)
def identity_perm(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def delta_perm(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@functools.lru_cache(maxsize=None)
def atom_perm(n: int, i: int) -> Perm:
    """Table of the generator σ_i (1-based index)."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose(p: Perm, q: Perm) -> Perm:
    """Table of the braid product p·q (p acts first)."""
    return tuple([q[x] for x in p])


def perm_inverse(p: Perm) -> Perm:
    r = [0] * len(p)
    for j, x in enumerate(p):
        r[x] = j
    return tuple(r)


@functools.lru_cache(maxsize=None)
def starting_set(p: Perm) -> frozenset[int]:
    """Atoms σ_i with σ_i ≼ p: the strands starting at i, i+1 cross."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


@functools.lru_cache(maxsize=None)
def finishing_set(p: Perm) -> frozenset[int]:
    """Atoms σ_i with p ≽ σ_i: the strands ending at i, i+1 crossed."""
    return starting_set(perm_inverse(p))


def perm_length(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@functools.lru_cache(maxsize=None)
def tau_perm(p: Perm) -> Perm:
    """Conjugation by Δ; an involution on simple elements (σ_i ↦ σ_{n-i})."""
    n = len(p)
    return tuple([n - 1 - p[n - 1 - j] for j in range(n)])


def tau_power(p: Perm, k: int) -> Perm:
    return tau_perm(p) if k % 2 else p


@functools.lru_cache(maxsize=None)
def right_complement(p: Perm) -> Perm:
    """The simple x with p·x = Δ."""
    return compose(perm_inverse(p), delta_perm(len(p)))


@functools.lru_cache(maxsize=None)
def left_complement(p: Perm) -> Perm:
    """The simple x with x·p = Δ."""
    return compose(delta_perm(len(p)), perm_inverse(p))


@functools.lru_cache(maxsize=None)
def meet_perm(p: Perm, q: Perm) -> Perm:
    """Greatest common prefix of two simple elements (head recursion)."""
    n = len(p)
    result = identity_perm(n)
    while True:
        for i in range(n - 1):
            if p[i] > p[i + 1] and q[i] > q[i + 1]:
                break
        else:
            return result
        a = atom_perm(n, i + 1)
        result = compose(result, a)
        p = compose(a, p)
        q = compose(a, q)


def is_prefix_perm(p: Perm, q: Perm) -> bool:
    """p ≼ q for simple elements."""
    return meet_perm(p, q) == p


@functools.lru_cache(maxsize=None)
def left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Left-weighted factorization (a', b') of the product a·b."""
    t = meet_perm(right_complement(a), b)
    if t == identity_perm(len(a)):
        return a, b
    return compose(a, t), compose(perm_inverse(t), b)


def perm_word(p: Perm) -> list[int]:
    """A positive word (1-based generators) for the permutation braid p."""
    n = len(p)
    word = []
    while True:
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                break
        else:
            return word
        word.append(i + 1)
        p = compose(atom_perm(n, i + 1), p)


@functools.lru_cache(maxsize=None)
def word_key(p: Perm) -> tuple[int, ...]:
    """Lexicographically least reduced word of p, used to order simples."""
    return tuple(perm_word(p))


@functools.lru_cache(maxsize=None)
def all_simples(n: int) -> tuple[Perm, ...]:
    """Every simple element except 1, sorted by table (Δ included)."""
    ident = identity_perm(n)
    return tuple(p for p in itertools.permutations(range(n)) if p != ident)


# ---------------------------------------------------------------------------
# normal form engine

def _append(n: int, k: int, fs: list[Perm], s: Perm) -> int:
    """Right-multiply Δ^k·fs (normal) by the simple s in place; return new inf."""
    fs.append(s)
    for i in range(len(fs) - 2, -1, -1):
        a, b = left_weight(fs[i], fs[i + 1])
        if a == fs[i]:
            break
        fs[i], fs[i + 1] = a, b
    delta = delta_perm(n)
    ident = identity_perm(n)
    lead = 0
    while lead < len(fs) and fs[lead] == delta:
        lead += 1
    if lead:
        del fs[:lead]
    while fs and fs[-1] == ident:
        fs.pop()
    return k + lead


def _normalize_sequence(n: int, k: int, seq: Iterable[Perm],
                        start: Sequence[Perm] = ()) -> tuple[int, tuple[Perm, ...]]:
    """Normal form of Δ^k·start·seq, where start is already in normal form."""
    fs = list(start)
    for s in seq:
        k = _append(n, k, fs, s)
    return k, tuple(fs)


def _prepend(n: int, s: Perm, factors: Sequence[Perm]) -> tuple[int, tuple[Perm, ...]]:
    """Normal form of s·β_1⋯β_N for a normal sequence β; returns (inf, factors)."""
    fs = [s, *factors]
    for i in range(len(fs) - 1):
        a, b = left_weight(fs[i], fs[i + 1])
        if a == fs[i] and b == fs[i + 1]:
            break
        fs[i], fs[i + 1] = a, b
    # a second right-to-left sweep repairs anything the forward pass left behind
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 2, -1, -1):
            a, b = left_weight(fs[i], fs[i + 1])
            if a != fs[i]:
                fs[i], fs[i + 1] = a, b
                changed = True
    delta = delta_perm(n)
    ident = identity_perm(n)
    lead = 0
    while lead < len(fs) and fs[lead] == delta:
        lead += 1
    fs = fs[lead:]
    while fs and fs[-1] == ident:
        fs.pop()
    return lead, tuple(fs)


# ---------------------------------------------------------------------------
# public types

@dataclass(frozen=True)
class SimpleElement:
    """A permutation braid on ``n`` strands; ``perm`` is a 0-based table."""

    n: int
    perm: Perm

    @classmethod
    def identity(cls, n: int) -> SimpleElement:
        return cls(n, identity_perm(n))

    @classmethod
    def delta(cls, n: int) -> SimpleElement:
        return cls(n, delta_perm(n))

    @classmethod
    def atom(cls, n: int, i: int) -> SimpleElement:
        return cls(n, atom_perm(n, i))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> SimpleElement:
        """Build from a positive word; raises if the word is not simple."""
        p = identity_perm(n)
        for i in word:
            if not 1 <= i <= n - 1:
                raise InvalidGeneratorError(f"generator {i} out of range for B_{n}")
            if i in finishing_set(p):
                raise BraidError(f"word {list(word)} is not a permutation braid")
            p = compose(p, atom_perm(n, i))
        return cls(n, p)

    @property
    def starting_set(self) -> frozenset[int]:
        return starting_set(self.perm)

    @property
    def finishing_set(self) -> frozenset[int]:
        return finishing_set(self.perm)

    @property
    def length(self) -> int:
        return perm_length(self.perm)

    def is_identity(self) -> bool:
        return self.perm == identity_perm(self.n)

    def is_delta(self) -> bool:
        return self.perm == delta_perm(self.n)

    def is_proper(self) -> bool:
        return not (self.is_identity() or self.is_delta())

    def __le__(self, other: SimpleElement) -> bool:
        """Prefix order s ≼ t."""
        return is_prefix_perm(self.perm, other.perm)

    def word(self) -> list[int]:
        return perm_word(self.perm)

    def one_line(self) -> str:
        return ",".join(str(x + 1) for x in self.perm)

    def braid(self) -> CanonicalBraid:
        return CanonicalBraid.from_simple(self.perm)

    def __str__(self) -> str:
        return self.one_line()


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class CanonicalBraid:
    """Left normal form Δ^inf·β_1⋯β_N of a braid on ``n`` strands.

    Instances are only built normalized, so field equality is group equality.
    """

    n: int
    inf: int = 0
    factors: tuple[Perm, ...] = ()

    # -- constructors ------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> CanonicalBraid:
        return cls(n, 0, ())

    @classmethod
    def delta(cls, n: int, k: int = 1) -> CanonicalBraid:
        return cls(n, k, ())

    @classmethod
    def from_simple(cls, p: Perm) -> CanonicalBraid:
        n = len(p)
        if p == identity_perm(n):
            return cls(n, 0, ())
        if p == delta_perm(n):
            return cls(n, 1, ())
        return cls(n, 0, (p,))

    @classmethod
    def from_simples(cls, n: int, seq: Iterable[Perm], inf: int = 0) -> CanonicalBraid:
        k, fs = _normalize_sequence(n, inf, seq)
        return cls(n, k, fs)

    # -- derived data ------------------------------------------------------
    @property
    def strand_count(self) -> int:
        return self.n

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def is_delta_power(self) -> bool:
        return not self.factors

    def is_positive(self) -> bool:
        return self.inf >= 0

    def simple_factors(self) -> list[SimpleElement]:
        return [SimpleElement(self.n, p) for p in self.factors]

    def sort_key(self) -> tuple:
        """Total order: strand count, inf, canonical length, then factor words shortlex."""
        return (self.n, self.inf, len(self.factors), tuple(word_key(p) for p in self.factors))

    def __lt__(self, other: CanonicalBraid) -> bool:
        return self.sort_key() < other.sort_key()

    # -- group operations --------------------------------------------------
    def __mul__(self, other: CanonicalBraid) -> CanonicalBraid:
        return multiply(self, other)

    def __pow__(self, m: int) -> CanonicalBraid:
        return power(self, m)

    def inverse(self) -> CanonicalBraid:
        return inverse(self)

    def conjugate(self, c: CanonicalBraid) -> CanonicalBraid:
        """The conjugate c⁻¹·self·c (written self^c)."""
        return multiply(multiply(inverse(c), self), c)

    def commutes_with(self, other: CanonicalBraid) -> bool:
        return multiply(self, other) == multiply(other, self)

    # -- serialization -----------------------------------------------------
    def to_word(self) -> list[int]:
        """A signed word representing the braid (Δ^k expanded)."""
        dw = perm_word(delta_perm(self.n))
        if self.inf >= 0:
            word = dw * self.inf
        else:
            word = [-i for i in reversed(dw)] * (-self.inf)
        for p in self.factors:
            word.extend(perm_word(p))
        return word

    def __str__(self) -> str:
        parts = [f"Δ^{self.inf}"]
        parts.extend(",".join(str(x + 1) for x in p) for p in self.factors)
        return " | ".join(parts)

    def __repr__(self) -> str:
        return f"CanonicalBraid(n={self.n}, {self})"


def parse_canonical(text: str, n: int) -> CanonicalBraid:
    """Inverse of ``str(CanonicalBraid)``; the result is re-normalized."""
    parts = [t.strip() for t in text.split("|")]
    head = parts[0]
    if not head.startswith("Δ^"):
        raise BraidError(f"malformed canonical braid: {text!r}")
    k = int(head[2:])
    seq = []
    for part in parts[1:]:
        perm = tuple(int(x) - 1 for x in part.split(","))
        if sorted(perm) != list(range(n)):
            raise BraidError(f"factor {part!r} is not a permutation of 1..{n}")
        seq.append(perm)
    return CanonicalBraid.from_simples(n, seq, k)


# ---------------------------------------------------------------------------
# operations

def normalize(word: Sequence[int], n: int) -> CanonicalBraid:
    """Left normal form of a signed word (i ↦ σ_i, -i ↦ σ_i⁻¹)."""
    if n < 2:
        raise StrandCountError("a braid group needs at least 2 strands")
    k = 0
    fs: list[Perm] = []
    for letter in word:
        i = abs(letter)
        if letter == 0 or i > n - 1:
            raise InvalidGeneratorError(f"generator {letter} out of range for B_{n}")
        if letter > 0:
            k = _append(n, k, fs, atom_perm(n, i))
        else:
            # σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹) and X·Δ⁻¹ = Δ⁻¹·τ(X)
            fs = [tau_perm(p) for p in fs]
            k = _append(n, k - 1, fs, left_complement(atom_perm(n, i)))
    return CanonicalBraid(n, k, tuple(fs))


def _check_same(a: CanonicalBraid, b: CanonicalBraid) -> None:
    if a.n != b.n:
        raise StrandMismatchError(f"cannot combine B_{a.n} and B_{b.n}")


def multiply(a: CanonicalBraid, b: CanonicalBraid) -> CanonicalBraid:
    _check_same(a, b)
    if not b.factors:
        return CanonicalBraid(a.n, a.inf + b.inf, tuple(tau_power(p, b.inf) for p in a.factors))
    start = [tau_power(p, b.inf) for p in a.factors]
    k, fs = _normalize_sequence(a.n, a.inf + b.inf, b.factors, start)
    return CanonicalBraid(a.n, k, fs)


def inverse(a: CanonicalBraid) -> CanonicalBraid:
    n = a.n
    k = 0
    fs: list[Perm] = []
    for p in reversed(a.factors):
        fs = [tau_perm(q) for q in fs]
        k = _append(n, k - 1, fs, left_complement(p))
    # X·Δ^{-inf} = Δ^{-inf}·τ^{inf}(X)
    return CanonicalBraid(n, k - a.inf, tuple(tau_power(q, a.inf) for q in fs))


def power(a: CanonicalBraid, m: int) -> CanonicalBraid:
    if m < 0:
        return power(inverse(a), -m)
    result = CanonicalBraid.identity(a.n)
    base = a
    while m:
        if m & 1:
            result = multiply(result, base)
        m >>= 1
        if m:
            base = multiply(base, base)
    return result


def tau(a: CanonicalBraid) -> CanonicalBraid:
    """Δ⁻¹·a·Δ."""
    return CanonicalBraid(a.n, a.inf, tuple(tau_perm(p) for p in a.factors))


def conjugate_by_simple(a: CanonicalBraid, s: Perm) -> CanonicalBraid:
    """s⁻¹·a·s for a simple s, avoiding a general inversion."""
    n = a.n
    # s⁻¹ = Δ⁻¹·L(s) and L(s)·Δ^k = Δ^k·τ^k(L(s))
    lead, fs = _prepend(n, tau_power(left_complement(s), a.inf), a.factors)
    fs = list(fs)
    k = _append(n, a.inf - 1 + lead, fs, s)
    return CanonicalBraid(n, k, tuple(fs))


def meet_simple(s: SimpleElement, t: SimpleElement) -> SimpleElement:
    if s.n != t.n:
        raise StrandMismatchError(f"cannot combine B_{s.n} and B_{t.n}")
    return SimpleElement(s.n, meet_perm(s.perm, t.perm))


def first_simple(a: CanonicalBraid) -> Perm:
    """a ∧ Δ for a positive braid a."""
    if a.inf > 0:
        return delta_perm(a.n)
    if a.inf < 0:
        raise BraidError("first_simple needs a positive braid")
    return a.factors[0] if a.factors else identity_perm(a.n)


def meet(a: CanonicalBraid, b: CanonicalBraid) -> CanonicalBraid:
    """Greatest common prefix a ∧ b in the prefix lattice of B_n."""
    _check_same(a, b)
    shift = max(0, -a.inf, -b.inf)
    x = multiply(CanonicalBraid.delta(a.n, shift), a)
    y = multiply(CanonicalBraid.delta(a.n, shift), b)
    ident = identity_perm(a.n)
    g = CanonicalBraid.delta(a.n, 0)
    while True:
        s = meet_perm(first_simple(x), first_simple(y))
        if s == ident:
            break
        sb = CanonicalBraid.from_simple(s)
        g = multiply(g, sb)
        si = inverse(sb)
        x = multiply(si, x)
        y = multiply(si, y)
    return multiply(CanonicalBraid.delta(a.n, -shift), g)


def mirror(a: CanonicalBraid) -> CanonicalBraid:
    """Word reversal; an involutive anti-automorphism of B_n."""
    # rev(Δ^k β_1⋯β_N) = rev(β_N)⋯rev(β_1)·Δ^k = Δ^k·τ^k(rev(β_N))⋯τ^k(rev(β_1))
    seq = [tau_power(perm_inverse(p), a.inf) for p in reversed(a.factors)]
    return CanonicalBraid.from_simples(a.n, seq, a.inf)


def right_meet(a: CanonicalBraid, b: CanonicalBraid) -> CanonicalBraid:
    """Greatest common suffix a ∧^↰ b."""
    return mirror(meet(mirror(a), mirror(b)))


def is_suffix_atom(a: CanonicalBraid, i: int) -> bool:
    """Whether the positive braid a satisfies a ≽ σ_i."""
    return i in starting_set(first_simple(mirror(a)))


@dataclass(frozen=True)
class PnDecomposition:
    """δ = a·b⁻¹ with a, b positive and a ∧^↰ b = 1."""

    a: CanonicalBraid
    b: CanonicalBraid

    def reassemble(self) -> CanonicalBraid:
        return multiply(self.a, inverse(self.b))


def pn_normal_form(x: CanonicalBraid) -> PnDecomposition:
    n = x.n
    if x.inf >= 0:
        return PnDecomposition(x, CanonicalBraid.identity(n))
    # left np-form of the mirror: y = Δ^{-m}·Y = u⁻¹·v with g = Δ^m ∧ Y = y_1⋯y_j
    y = mirror(x)
    m = -y.inf
    j = min(m, len(y.factors))
    g = CanonicalBraid(n, 0, y.factors[:j])
    v = CanonicalBraid(n, 0, y.factors[j:])
    u = multiply(inverse(g), CanonicalBraid.delta(n, m))
    return PnDecomposition(mirror(v), mirror(u))


def boundary_factors(a: CanonicalBraid) -> tuple[SimpleElement, SimpleElement]:
    """(ι(a), φ(a)): initial and final factors."""
    n = a.n
    if not a.factors:
        return SimpleElement.identity(n), SimpleElement.delta(n)
    return (SimpleElement(n, tau_power(a.factors[0], a.inf)),
            SimpleElement(n, a.factors[-1]))


def preferred_prefix(a: CanonicalBraid) -> SimpleElement:
    """ι(a) ∧ ι(a⁻¹)."""
    if not a.factors:
        return SimpleElement.identity(a.n)
    init, _ = boundary_factors(a)
    init_inv, _ = boundary_factors(inverse(a))
    return meet_simple(init, init_inv)


def cyclic_sliding(a: CanonicalBraid) -> CanonicalBraid:
    p = preferred_prefix(a)
    if p.is_identity():
        return a
    return conjugate_by_simple(a, p.perm)


def underlying_permutation(a: CanonicalBraid) -> tuple[int, ...]:
    """Induced permutation of the punctures, as 1-based images."""
    p = delta_perm(a.n) if a.inf % 2 else identity_perm(a.n)
    for f in a.factors:
        p = compose(p, f)
    return tuple(x + 1 for x in p)


def is_pure(a: CanonicalBraid) -> bool:
    return underlying_permutation(a) == tuple(range(1, a.n + 1))


def parse_braid_word(text: str, n: int) -> CanonicalBraid:
    """Parse whitespace-separated nonzero integers into a normal form."""
    tokens = text.replace(",", " ").split()
    word = []
    for tok in tokens:
        try:
            letter = int(tok)
        except ValueError:
            raise MalformedWordError(f"malformed token {tok!r}") from None
        if letter == 0:
            raise MalformedWordError("0 is not a generator")
        word.append(letter)
    return normalize(word, n)
