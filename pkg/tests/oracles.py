"""Independent reference implementations used only by the tests.

None of these go through the normal form engine: braid equality is decided by
the faithful Artin action on a free group, simple prefixes by inversion counts
in the weak order, and summit sets by bounded exhaustive search.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from braidcrs.curves import adjacent
from braidcrs.garside import CanonicalBraid, conjugate_by_simple, normalize

# --- Artin action on the free group F_n -------------------------------------

Word = tuple[int, ...]


def _reduce(word) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _invert(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


def _letter_images(n: int, letter: int) -> dict[int, Word]:
    i = abs(letter)
    images = {j: (j,) for j in range(1, n + 1)}
    if letter > 0:
        images[i] = (i, i + 1, -i)
        images[i + 1] = (i,)
    else:
        images[i] = (i + 1,)
        images[i + 1] = (-(i + 1), i, i + 1)
    return images


def _substitute(word: Word, images: dict[int, Word]) -> Word:
    out: list[int] = []
    for x in word:
        out.extend(images[x] if x > 0 else _invert(images[-x]))
    return _reduce(out)


def artin_action(word, n: int) -> tuple[Word, ...]:
    """Images of the free generators; equal tuples iff the braids are equal."""
    images = tuple((j,) for j in range(1, n + 1))
    for letter in word:
        sub = _letter_images(n, letter)
        images = tuple(_substitute(w, sub) for w in images)
    return images


def same_braid(a, b, n: int) -> bool:
    wa = a.to_word() if isinstance(a, CanonicalBraid) else a
    wb = b.to_word() if isinstance(b, CanonicalBraid) else b
    return artin_action(wa, n) == artin_action(wb, n)


# --- random rewriting by the defining relations ------------------------------

def rewrite(word: list[int], n: int, rng: random.Random, steps: int = 30) -> list[int]:
    """Apply random relation moves; the braid represented never changes."""
    w = list(word)
    for _ in range(steps):
        move = rng.randrange(4)
        if move == 0:
            i = rng.randint(1, n - 1) * rng.choice((1, -1))
            pos = rng.randint(0, len(w))
            w[pos:pos] = [i, -i]
        elif move == 1:
            spots = [k for k in range(len(w) - 1) if w[k] == -w[k + 1]]
            if spots:
                k = rng.choice(spots)
                del w[k:k + 2]
        elif move == 2:
            spots = [k for k in range(len(w) - 1) if abs(abs(w[k]) - abs(w[k + 1])) >= 2]
            if spots:
                k = rng.choice(spots)
                w[k], w[k + 1] = w[k + 1], w[k]
        else:
            spots = [k for k in range(len(w) - 2)
                     if w[k] == w[k + 2] and abs(abs(w[k]) - abs(w[k + 1])) == 1
                     and (w[k] > 0) == (w[k + 1] > 0)]
            if spots:
                k = rng.choice(spots)
                a, b = w[k], w[k + 1]
                w[k:k + 3] = [b, a, b]
    return w


# --- weak order on permutations ----------------------------------------------

def inversions(p) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


def weak_prefix(s, p) -> bool:
    """s ≼ p for permutation braids, via l(p) = l(s) + l(s⁻¹p)."""
    s_inv = [0] * len(s)
    for i, x in enumerate(s):
        s_inv[x] = i
    rest = tuple(p[s_inv[j]] for j in range(len(p)))
    return inversions(p) == inversions(s) + inversions(rest)


def brute_meet(s, t):
    n = len(s)
    best = tuple(range(n))
    for u in itertools.permutations(range(n)):
        if weak_prefix(u, s) and weak_prefix(u, t) and inversions(u) > inversions(best):
            best = u
    return best


def atom(n: int, i: int):
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def brute_starting_set(p) -> set[int]:
    return {i for i in range(1, len(p)) if weak_prefix(atom(len(p), i), p)}


def brute_finishing_set(p) -> set[int]:
    n = len(p)
    out = set()
    for i in range(1, n):
        # p ≽ σ_i iff p·σ_i⁻¹ is shorter, i.e. σ_i swaps two inverted targets
        a = atom(n, i)
        q = tuple(a[p[j]] for j in range(n))
        if inversions(q) == inversions(p) - 1:
            out.add(i)
    return out


# --- exhaustive summit set ---------------------------------------------------

def exhaustive_super_summit(alpha: CanonicalBraid) -> set[CanonicalBraid]:
    """Conjugates by atoms and their inverses inside an (inf, sup) window.

    Conjugating by any prefix u of a simple element gives inf ≥ inf(x) - 1 and
    sup ≤ sup(x) + 1, since u⁻¹ ∈ Δ⁻¹·(simple). Cycling, decycling and moves
    inside the summit set are simple conjugations that never worsen inf or
    sup, so writing them as atom words keeps every intermediate conjugate
    inside [inf(α) - 1, sup(α) + 1].
    """
    n = alpha.n
    atoms = [normalize([i], n) for i in range(1, n)] + [normalize([-i], n) for i in range(1, n)]
    lo, hi = alpha.inf - 1, alpha.sup + 1
    seen = {alpha}
    queue = deque([alpha])
    while queue:
        x = queue.popleft()
        for a in atoms:
            y = x.conjugate(a)
            if y.inf >= lo and y.sup <= hi and y not in seen:
                seen.add(y)
                queue.append(y)
    best_inf = max(x.inf for x in seen)
    best_sup = min(x.sup for x in seen)
    return {x for x in seen if x.inf == best_inf and x.sup == best_sup}


def cycles_of(table) -> set[CanonicalBraid]:
    """Entries returning to themselves under cyclic sliding, by direct iteration."""
    from braidcrs.garside import cyclic_sliding

    out = set()
    for g in table:
        y = cyclic_sliding(g)
        for _ in range(len(table) + 1):
            if y == g:
                out.add(g)
                break
            y = cyclic_sliding(y)
    return out


# --- cliques -----------------------------------------------------------------

def brute_force_maximum_simplices(orbits) -> tuple[int, list[frozenset]]:
    """Largest total size over pairwise adjacent orbit subsets, by enumeration."""
    best = 0
    winners: list[frozenset] = []
    for k in range(1, len(orbits) + 1):
        for combo in itertools.combinations(range(len(orbits)), k):
            curves = [c for i in combo for c in orbits[i].curves]
            if all(adjacent(x, y) for x, y in itertools.combinations(curves, 2)):
                size = len(curves)
                if size > best:
                    best, winners = size, [frozenset(curves)]
                elif size == best:
                    winners.append(frozenset(curves))
    return best - 1, winners


def simple_conjugates(x: CanonicalBraid, simples) -> list[CanonicalBraid]:
    return [conjugate_by_simple(x, s) for s in simples]
