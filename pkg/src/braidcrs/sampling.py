"""
Random braids for tests, acceptance runs and demos.

Uniform random words are almost always pseudo-Anosov, so the corpus also mixes
in reducible braids built from block-preserving pieces and disguised by a
short conjugation.
"""

from __future__ import annotations

import random
from typing import Sequence

from .garside import CanonicalBraid, Perm, normalize, power


def random_word(rng: random.Random, n: int, length: int) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]


def random_braid(rng: random.Random, n: int, length: int) -> CanonicalBraid:
    return normalize(random_word(rng, n, length), n)


def block_perm(tube_perm: Perm, widths: Sequence[int]) -> Perm:
    """The simple element moving whole blocks of strands as ``tube_perm`` moves tubes."""
    starts = [sum(widths[:i]) for i in range(len(widths))]
    target_width = [0] * len(widths)
    for i, w in enumerate(widths):
        target_width[tube_perm[i]] = w
    target_start = [sum(target_width[:j]) for j in range(len(widths))]
    perm = [0] * sum(widths)
    for i, w in enumerate(widths):
        for k in range(w):
            perm[starts[i] + k] = target_start[tube_perm[i]] + k
    return tuple(perm)


def cable(tube: CanonicalBraid, widths: Sequence[int]) -> CanonicalBraid:
    """Replace tube i of ``tube`` by ``widths[i]`` parallel strands."""
    k = len(widths)
    result = _power_of_flips(widths, tube.inf)
    current = list(widths) if tube.inf % 2 == 0 else list(reversed(widths))
    seq = []
    for p in tube.factors:
        seq.append(block_perm(p, current))
        moved = [0] * k
        for i, w in enumerate(current):
            moved[p[i]] = w
        current = moved
    return result * CanonicalBraid.from_simples(sum(widths), seq)


def _power_of_flips(widths: Sequence[int], m: int) -> CanonicalBraid:
    """Tube-level Δ^m cabled, alternating between mirrored width sequences."""
    n = sum(widths)
    k = len(widths)
    reverse = tuple(range(k - 1, -1, -1))
    result = CanonicalBraid.identity(n)
    current = list(widths)
    for _ in range(abs(m)):
        if m > 0:
            step = CanonicalBraid.from_simple(block_perm(reverse, current))
            result = result * step
            current.reverse()
        else:
            current.reverse()
            step = CanonicalBraid.from_simple(block_perm(reverse, current))
            result = result * step.inverse()
    return result


def interior_braid(rng: random.Random, widths: Sequence[int], length: int) -> CanonicalBraid:
    """Random letters acting inside the blocks only."""
    n = sum(widths)
    letters = []
    start = 0
    for w in widths:
        letters.extend(range(start + 1, start + w))
        start += w
    if not letters:
        return CanonicalBraid.identity(n)
    return normalize([rng.choice((1, -1)) * rng.choice(letters) for _ in range(length)], n)


def rotation(n: int, k: int = 1) -> CanonicalBraid:
    """(σ_{n-1}⋯σ_1)^k, whose n-th power is Δ²."""
    return power(normalize(list(range(n - 1, 0, -1)), n), k)


def periodic_braid(rng: random.Random, n: int) -> CanonicalBraid:
    """A random power of one of the two periodic roots of Δ² on n strands."""
    if n == 1:
        return CanonicalBraid.identity(1)
    if rng.random() < 0.5:
        return rotation(n, rng.randint(-n, n))
    eps = normalize(list(range(n - 1, 0, -1)) + [1], n)
    return power(eps, rng.randint(1 - n, n - 1))


def periodic_pieces_braid(rng: random.Random, n: int, conj_length: int = 2) -> CanonicalBraid:
    """Periodic tube braid with periodic or trivial block interiors, conjugated.

    Such braids have many invariant round curves that are not essential, which
    exercises the discarding step.
    """
    widths = random_widths(rng, n)
    beta = cable(periodic_braid(rng, len(widths)), widths)
    start = 0
    for w in widths:
        if w > 1 and rng.random() < 0.7:
            inner = periodic_braid(rng, w)
            word = [(abs(x) + start) * (1 if x > 0 else -1) for x in inner.to_word()]
            beta = beta * normalize(word, n)
        start += w
    return beta.conjugate(random_braid(rng, n, conj_length))


def random_widths(rng: random.Random, n: int) -> list[int]:
    """A random composition of n into at least two blocks, one of them wider than 1."""
    while True:
        cuts = sorted(rng.sample(range(1, n), rng.randint(1, n - 2))) if n > 2 else [1]
        widths = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        if max(widths) > 1:
            return widths


def reducible_braid(rng: random.Random, n: int, length: int, conj_length: int = 2) -> CanonicalBraid:
    """A braid preserving a family of round curves, conjugated by a short word."""
    widths = random_widths(rng, n)
    tube = random_braid(rng, len(widths), length)
    beta = cable(tube, widths) * interior_braid(rng, widths, length)
    w = random_braid(rng, n, conj_length)
    return beta.conjugate(w)


def corpus(seed: int, size: int, max_n: int = 5, max_length: int = 6) -> list[CanonicalBraid]:
    """Mixed corpus of uniform words, reducible constructions and periodic pieces.

    Only braids of canonical length at most ``max_length`` are kept.
    """
    rng = random.Random(seed)
    out: list[CanonicalBraid] = []
    while len(out) < size:
        n = rng.randint(3, max_n)
        kind = rng.random()
        if kind < 0.4:
            b = random_braid(rng, n, rng.randint(1, 10))
        elif kind < 0.7:
            b = reducible_braid(rng, n, rng.randint(1, 4), rng.randint(0, 2))
        else:
            b = periodic_pieces_braid(rng, n, rng.randint(0, 2))
        if b.canonical_length <= max_length:
            out.append(b)
    return out


def cabled_pairs(rng: random.Random, k: int, length: int) -> CanonicalBraid:
    """A 2k-strand braid preserving the k curves [2i-1, 2i].

    A random k-strand braid of canonical length exactly ``length`` is cabled
    into pairs of strands, and each pair gets one twist of its own. Needs
    k ≥ 3 when ``length`` > 0, since B_2 has no proper simple elements.
    """
    if k < 3 and length > 0:
        raise ValueError("no braid on fewer than 3 strands has positive canonical length")

    def random_perm() -> Perm:
        p = list(range(k))
        rng.shuffle(p)
        return tuple(p)

    while True:
        tube = CanonicalBraid.from_simples(k, [random_perm() for _ in range(length)])
        if tube.canonical_length == length:
            break
    twists = normalize([2 * i + 1 for i in range(k)], 2 * k)
    return cable(tube, [2] * k) * twists
