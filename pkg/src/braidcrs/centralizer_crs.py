"""
CRS membership decided through centralizers of powers of the braid.

A curve C of a braid α with standard CRS is essential exactly when either the
two smallest punctures of D_C have orbits with lcm l > n, or every element of
Z(α^l) keeps C standard. The second condition is checked by closing {C} under
the centralizer generators and their inverses; the standard family is finite,
so the closure terminates or exhibits a witness.

This is an oracle for the gluing test in :mod:`braidcrs.crs`, not a faster path.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .conjugacy import DEFAULT_MAX_SIZE, CentralizerGenerators, centralizer_generators
from .crs import disk_objects
from .curves import InvalidCurveError, Multicurve, StandardCurve, apply_braid, curve_orbit
from .garside import CanonicalBraid, inverse, multiply, power, underlying_permutation


class Reason(enum.Enum):
    LCM_EXCEEDS_N = "LcmExceedsN"
    CLOSURE_ALL_STANDARD = "ClosureAllStandard"
    WITNESS_NON_STANDARD = "WitnessNonStandard"


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    reason: Reason
    l: int
    witness: CanonicalBraid | None = None


def _puncture_cycle_length(perm: tuple[int, ...], x: int) -> int:
    k, y = 1, perm[x - 1]
    while y != x:
        y = perm[y - 1]
        k += 1
    return k


def _checked_orbit(beta: CanonicalBraid, c: StandardCurve, M: Iterable[StandardCurve]) -> set[StandardCurve]:
    orbit = curve_orbit(c, beta)
    if not orbit.closed:
        raise InvalidCurveError(f"{c} has no finite orbit")
    if set(orbit.curves) != set(M):
        raise InvalidCurveError("M must be the orbit of the curve")
    return set(orbit.curves)


def puncture_orbit_lcm(beta: CanonicalBraid, c: StandardCurve, M: Iterable[StandardCurve],
                       candidates: Iterable[StandardCurve] = ()) -> int:
    """lcm of the orbit sizes of the two leftmost punctures of D_C.

    Punctures of D_C are real punctures or curves of ``M ∪ candidates`` lying
    directly inside C.
    """
    orbit = _checked_orbit(beta, c, M)
    objects = disk_objects(orbit | set(candidates), c, beta.n)
    perm = underlying_permutation(beta)
    sizes = []
    for obj in objects[:2]:
        if isinstance(obj, int):
            sizes.append(_puncture_cycle_length(perm, obj))
        else:
            inner = curve_orbit(obj, beta)
            if not inner.closed:
                raise InvalidCurveError(f"inner curve {obj} has no finite orbit")
            sizes.append(len(inner))
    return math.lcm(*sizes)


def orbit_closure(c: StandardCurve, gens: Iterable[CanonicalBraid]
                  ) -> tuple[dict[StandardCurve, CanonicalBraid], CanonicalBraid | None]:
    """BFS closure of {C} under the generators and their inverses.

    Returns every standard curve reached with a braid taking C to it, and the
    first braid found that takes C off the standard family (or ``None``).
    """
    moves = []
    for g in gens:
        moves.extend((g, inverse(g)))
    reached = {c: CanonicalBraid.identity(c.n)}
    queue = deque([c])
    while queue:
        cur = queue.popleft()
        for g in moves:
            image = apply_braid(cur, g)
            path = multiply(reached[cur], g)
            if image is None:
                return reached, path
            if image not in reached:
                reached[image] = path
                queue.append(image)
    return reached, None


def membership_via_centralizer(alpha: CanonicalBraid, c: StandardCurve,
                               M: Iterable[StandardCurve] | None = None,
                               candidates: Iterable[StandardCurve] = (),
                               max_size: int = DEFAULT_MAX_SIZE) -> MembershipVerdict:
    """Decide whether C lies in CRS(α), for α whose CRS is standard.

    ``M`` defaults to the orbit of C; ``candidates`` are further invariant
    curves known to contain CRS(α), used to locate the punctures of D_C.
    """
    if M is None:
        M = curve_orbit(c, alpha).curves
    l = puncture_orbit_lcm(alpha, c, M, candidates)
    if l > alpha.n:
        return MembershipVerdict(True, Reason.LCM_EXCEEDS_N, l)
    gens = centralizer_generators(power(alpha, l), max_size).generators
    _, witness = orbit_closure(c, gens)
    if witness is not None:
        return MembershipVerdict(False, Reason.WITNESS_NON_STANDARD, l, witness)
    return MembershipVerdict(True, Reason.CLOSURE_ALL_STANDARD, l)


def refine_by_centralizer(M0: Multicurve, gens: CentralizerGenerators | Iterable[CanonicalBraid]) -> Multicurve:
    """Largest subset of M0 mapped into itself by every generator and its inverse."""
    zs = gens.generators if isinstance(gens, CentralizerGenerators) else tuple(gens)
    moves = [z for g in zs for z in (g, inverse(g))]
    current = set(M0)
    while True:
        keep = {c for c in current if all(apply_braid(c, z) in current for z in moves)}
        if keep == current:
            return Multicurve(M0.n, tuple(keep))
        current = keep
