"""
Standard curves of the punctured disk and their central elements.

A standard curve ``[a, b]`` is a round curve enclosing the consecutive punctures
a..b. It stands for the standard parabolic subgroup ⟨σ_a, …, σ_{b-1}⟩, whose
center is generated by ``z = σ_a`` (when b = a+1) or ``z = Δ_{[a,b]}²``.
Braids act on curves on the right: ``C^β`` has central element ``z^β``.

Non-standard images are reported as ``None``; no geometry is ever computed
for them.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .garside import (
    BraidError,
    CanonicalBraid,
    Perm,
    SimpleElement,
    conjugate_by_simple,
    first_simple,
    identity_perm,
    is_prefix_perm,
    multiply,
    pn_normal_form,
    starting_set,
)


class InvalidCurveError(BraidError):
    """Curve or multicurve data that violates its invariants."""


@functools.total_ordering
@dataclass(frozen=True)
class StandardCurve:
    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        if not (1 <= self.a < self.b <= self.n) or (self.a, self.b) == (1, self.n):
            raise InvalidCurveError(f"[{self.a},{self.b}] is not a standard curve of D_{self.n}")

    def __lt__(self, other: StandardCurve) -> bool:
        return (self.n, self.a, self.b) < (other.n, other.a, other.b)

    @property
    def punctures(self) -> range:
        return range(self.a, self.b + 1)

    def contains(self, other: StandardCurve) -> bool:
        """Whether ``other`` lies strictly inside this curve."""
        return self.a <= other.a and other.b <= self.b and self != other

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"

    def __repr__(self) -> str:
        return f"C{self}"


class _Boundary:
    """The boundary of the disk, treated as the outermost curve."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Boundary"


BOUNDARY = _Boundary()


def parse_curve(text: str, n: int) -> StandardCurve:
    """Parse ``[a,b]`` or ``a,b``."""
    body = text.strip().strip("[]")
    try:
        a, b = (int(x) for x in body.split(","))
    except ValueError:
        raise InvalidCurveError(f"malformed curve {text!r}") from None
    return StandardCurve(a, b, n)


def all_standard_curves(n: int) -> list[StandardCurve]:
    """Every interval [a,b] with 1 ≤ a < b ≤ n other than [1,n], sorted."""
    return [StandardCurve(a, b, n)
            for a in range(1, n) for b in range(a + 1, n + 1) if (a, b) != (1, n)]


@functools.lru_cache(maxsize=None)
def _block_delta(n: int, a: int, b: int) -> Perm:
    p = list(range(n))
    p[a - 1:b] = reversed(p[a - 1:b])
    return tuple(p)


@functools.lru_cache(maxsize=None)
def central_element(c: StandardCurve) -> CanonicalBraid:
    """Positive generator of the center of ⟨σ_a, …, σ_{b-1}⟩."""
    half = _block_delta(c.n, c.a, c.b)
    if c.b == c.a + 1:
        return CanonicalBraid.from_simple(half)
    return CanonicalBraid.from_simples(c.n, [half, half])


def curve_from_central_element(z: CanonicalBraid) -> StandardCurve | None:
    """The standard curve whose central element is ``z``, if there is one."""
    if z.inf < 0 or z.is_identity():
        return None
    atoms = sorted(starting_set(first_simple(z)))
    a, last = atoms[0], atoms[-1]
    if atoms != list(range(a, last + 1)) or (a, last + 1) == (1, z.n):
        return None
    c = StandardCurve(a, last + 1, z.n)
    return c if central_element(c) == z else None


def adjacent(c1: StandardCurve, c2: StandardCurve) -> bool:
    """Nested or disjoint puncture intervals (distinct curves)."""
    if c1 == c2:
        return False
    nested = (c1.a <= c2.a and c2.b <= c1.b) or (c2.a <= c1.a and c1.b <= c2.b)
    return nested or c1.b < c2.a or c2.b < c1.a


def z_commute(c1: StandardCurve, c2: StandardCurve) -> bool:
    """Adjacency decided by commutation of central elements."""
    return central_element(c1).commutes_with(central_element(c2))


def tau_curve(c: StandardCurve, k: int = 1) -> StandardCurve:
    if k % 2 == 0:
        return c
    return StandardCurve(c.n + 1 - c.b, c.n + 1 - c.a, c.n)


@functools.lru_cache(maxsize=None)
def _apply_perm(c: StandardCurve, s: Perm) -> StandardCurve | None:
    z = central_element(c)
    zs = multiply(z, CanonicalBraid.from_simple(s))
    if not is_prefix_perm(s, first_simple(zs)):
        return None
    image = conjugate_by_simple(z, s)
    result = curve_from_central_element(image)
    if result is None:
        raise RuntimeError(f"positive conjugate {image} of z{c} is not a central element")
    return result


def apply_simple(c: StandardCurve, s: SimpleElement) -> StandardCurve | None:
    """``C^s`` for a simple ``s``: standard iff s ≼ z_C·s."""
    if s.n != c.n:
        raise InvalidCurveError("strand count mismatch")
    if s.perm == identity_perm(c.n):
        return c
    return _apply_perm(c, s.perm)


def apply_braid(c: StandardCurve, beta: CanonicalBraid) -> StandardCurve | None:
    """``C^β`` factor by factor, stopping at the first non-standard image.

    Powers of Δ always keep curves standard, and along the left normal form a
    standard final image forces every intermediate image to be standard, so
    the early exit never misses a standard result.
    """
    if beta.n != c.n:
        raise InvalidCurveError("strand count mismatch")
    cur: StandardCurve | None = tau_curve(c, beta.inf)
    for p in beta.factors:
        cur = _apply_perm(cur, p)
        if cur is None:
            return None
    return cur


def interval_image(c: StandardCurve, s: Perm) -> StandardCurve | None:
    """Puncture-interval rule for simple elements; used only as a cross-check."""
    image = sorted(s[j - 1] + 1 for j in c.punctures)
    if image[-1] - image[0] != len(image) - 1:
        return None
    return StandardCurve(image[0], image[-1], c.n)


@dataclass(frozen=True)
class OrbitResult:
    closed: bool
    curves: tuple[StandardCurve, ...]

    def __len__(self) -> int:
        return len(self.curves)


def curve_orbit(c: StandardCurve, beta: CanonicalBraid) -> OrbitResult:
    """The forward orbit C, C^β, C^{β²}, … while it stays standard."""
    orbit = [c]
    seen = {c}
    cur = c
    while True:
        cur = apply_braid(cur, beta)
        if cur is None:
            return OrbitResult(False, tuple(orbit))
        if cur == c:
            return OrbitResult(True, tuple(orbit))
        if cur in seen:
            raise RuntimeError("curve orbit is not purely periodic")
        seen.add(cur)
        orbit.append(cur)


def minimal_standardizer(z: CanonicalBraid) -> CanonicalBraid:
    """Minimal positive ``b`` with ``z^b`` the central element of a standard curve.

    ``b`` is the denominator of the pn-normal form ``z = a·b⁻¹``.
    """
    b = pn_normal_form(z).b
    if curve_from_central_element(z.conjugate(b)) is None:
        raise InvalidCurveError(f"{z} is not the central element of a curve")
    return b


@dataclass(frozen=True)
class Multicurve:
    """Pairwise adjacent standard curves, sorted by (a, b)."""

    n: int
    curves: tuple[StandardCurve, ...] = field(default=())

    def __post_init__(self) -> None:
        cs = tuple(sorted(set(self.curves)))
        object.__setattr__(self, "curves", cs)
        for c in cs:
            if c.n != self.n:
                raise InvalidCurveError("strand count mismatch")
        for c1, c2 in itertools.combinations(cs, 2):
            if not adjacent(c1, c2):
                raise InvalidCurveError(f"{c1} and {c2} intersect")
        if len(cs) > max(self.n - 2, 0):
            raise InvalidCurveError("a multicurve has at most n-2 curves")

    @classmethod
    def of(cls, n: int, curves: Iterable[StandardCurve]) -> Multicurve:
        return cls(n, tuple(curves))

    def __iter__(self) -> Iterator[StandardCurve]:
        return iter(self.curves)

    def __len__(self) -> int:
        return len(self.curves)

    def __contains__(self, c: object) -> bool:
        return c in self.curves

    def as_set(self) -> frozenset[StandardCurve]:
        return frozenset(self.curves)

    def image(self, beta: CanonicalBraid) -> set[StandardCurve | None]:
        return {apply_braid(c, beta) for c in self.curves}

    def is_invariant(self, beta: CanonicalBraid) -> bool:
        return self.image(beta) == set(self.curves)

    def to_list(self) -> list[list[int]]:
        return [[c.a, c.b] for c in self.curves]

    def __str__(self) -> str:
        return "{" + ",".join(str(c) for c in self.curves) + "}"


def parse_multicurve(text: str, n: int) -> Multicurve:
    """Parse ``{[a1,b1],[a2,b2],...}``; ``{}`` is the empty multicurve."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InvalidCurveError(f"malformed multicurve {text!r}")
    body = body[1:-1].strip()
    if not body:
        return Multicurve(n)
    pieces = body.replace(" ", "").split("],[")
    return Multicurve(n, tuple(parse_curve(p, n) for p in pieces))


@dataclass(frozen=True)
class GeneralCurve:
    """The curve ``base^conj``; equality is equality of central elements."""

    base: StandardCurve
    conj: CanonicalBraid

    @property
    def central_element(self) -> CanonicalBraid:
        return central_element(self.base).conjugate(self.conj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralCurve):
            return NotImplemented
        return self.central_element == other.central_element

    def __hash__(self) -> int:
        return hash(self.central_element)

    def is_standard(self) -> bool:
        return curve_from_central_element(self.central_element) is not None
