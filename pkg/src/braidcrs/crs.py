"""
Canonical reduction system of a braid and its Nielsen–Thurston type.

The pipeline picks a sliding-circuit conjugate β whose standard reduction
simplices have maximal dimension, intersects those simplices into a candidate
multicurve M ⊇ CRS(β), and then discards every orbit of M whose removal glues
two components into a periodic one.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable

from .conjugacy import DEFAULT_MAX_SIZE, sliding_circuits_set
from .curves import (
    BOUNDARY,
    GeneralCurve,
    InvalidCurveError,
    Multicurve,
    StandardCurve,
    _Boundary,
    apply_braid,
    curve_orbit,
)
from .garside import CanonicalBraid, Perm, power
from .reduction import ReductionCatalog, reduction_catalog

log = logging.getLogger(__name__)

CurveOrBoundary = StandardCurve | _Boundary


def enclosing_curve(M: Iterable[StandardCurve], c: StandardCurve) -> CurveOrBoundary:
    """The smallest curve of ``M`` strictly enclosing ``c``, else the boundary."""
    outer = [x for x in M if x.contains(c)]
    if not outer:
        return BOUNDARY
    return min(outer, key=lambda x: (x.b - x.a, x.a))


def disk_objects(M: Iterable[StandardCurve], c: CurveOrBoundary, n: int) -> list[StandardCurve | int]:
    """Punctures of D_{M,C}: maximal M-curves inside C and the bare punctures.

    Returned in left-to-right order; real punctures are 1-based integers.
    """
    if c is BOUNDARY:
        lo, hi = 1, n
        inside = list(M)
    else:
        lo, hi = c.a, c.b
        inside = [x for x in M if c.contains(x)]
    outermost = [x for x in inside if not any(y.contains(x) for y in inside)]
    objects: list[StandardCurve | int] = []
    j = lo
    for x in sorted(outermost):
        objects.extend(range(j, x.a))
        objects.append(x)
        j = x.b + 1
    objects.extend(range(j, hi + 1))
    return objects


def _orbit_size(beta: CanonicalBraid, c: CurveOrBoundary) -> int:
    if c is BOUNDARY:
        return 1
    orbit = curve_orbit(c, beta)
    if not orbit.closed:
        raise InvalidCurveError(f"{c} has no finite orbit under {beta}")
    return len(orbit)


def _induced(before: list[int], after: list[int]) -> Perm:
    """Permutation induced on kept strands: rank at ``before`` to rank at ``after``."""
    rank_before = sorted(range(len(before)), key=before.__getitem__)
    order_after = sorted(after)
    q = [0] * len(before)
    for r, i in enumerate(rank_before):
        q[r] = order_after.index(after[i])
    return tuple(q)


def restrict_to_strands(beta: CanonicalBraid, strands: Iterable[int]) -> CanonicalBraid:
    """Delete every strand not starting at one of ``strands`` (1-based positions).

    Each permutation braid restricts to the permutation braid of the induced
    permutation, and Δ^k restricts to Δ_r^k.
    """
    n = beta.n
    pos = sorted(s - 1 for s in strands)
    r = len(pos)
    if r < 2:
        raise InvalidCurveError("a component needs at least two strands")
    if beta.inf % 2:
        pos = [n - 1 - j for j in pos]
    seq = []
    for p in beta.factors:
        new = [p[j] for j in pos]
        seq.append(_induced(pos, new))
        pos = new
    return CanonicalBraid.from_simples(r, seq, beta.inf)


def component_braid(beta: CanonicalBraid, M: Iterable[StandardCurve], c: CurveOrBoundary,
                    representative: str = "min") -> CanonicalBraid:
    """The braid induced by β^m on D_{M,C}, with m the orbit size of C.

    ``representative`` picks the smallest (``"min"``) or largest (``"max"``)
    puncture inside each inner curve as its strand.
    """
    curves = set(M)
    if {apply_braid(x, beta) for x in curves} != curves:
        raise InvalidCurveError("the multicurve is not invariant under the braid")
    if c is not BOUNDARY and c not in curves:
        raise InvalidCurveError(f"{c} is not a curve of the multicurve")
    pick = (lambda x: x.a) if representative == "min" else (lambda x: x.b)
    strands = [o if isinstance(o, int) else pick(o) for o in disk_objects(curves, c, beta.n)]
    m = _orbit_size(beta, c)
    return restrict_to_strands(power(beta, m), strands)


def is_periodic(delta: CanonicalBraid) -> bool:
    """Whether δ^{r-1} or δ^r is a power of Δ on r strands."""
    r = delta.n
    if r <= 1:
        return True
    return power(delta, r - 1).is_delta_power() or power(delta, r).is_delta_power()


class NTClass(enum.Enum):
    PERIODIC = "periodic"
    REDUCIBLE = "reducible"
    PSEUDO_ANOSOV = "pA"


@dataclass(frozen=True)
class CrsResult:
    """CRS(α) = curves^conjugator, where representative^conjugator = α when curves is nonempty."""

    alpha: CanonicalBraid
    curves: Multicurve
    conjugator: CanonicalBraid
    representative: CanonicalBraid
    candidates: Multicurve
    catalog: ReductionCatalog | None = field(default=None, compare=False)

    def general_curves(self) -> frozenset[GeneralCurve]:
        return frozenset(GeneralCurve(c, self.conjugator) for c in self.curves)

    def to_dict(self) -> dict:
        return {
            "curves": self.curves.to_list(),
            "conjugator": " ".join(str(x) for x in self.conjugator.to_word()),
        }


def select_representative(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE
                          ) -> tuple[CanonicalBraid, CanonicalBraid, ReductionCatalog]:
    """The smallest sliding-circuit conjugate with maximal simplex dimension."""
    sc = sliding_circuits_set(alpha, max_size)
    best: ReductionCatalog | None = None
    for gamma in sc:
        cat = reduction_catalog(gamma)
        if best is None or cat.dimension > best.dimension:
            best = cat
    assert best is not None
    return best.braid, sc.conjugator(best.braid), best


def canonical_reduction_system(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE) -> CrsResult:
    """Compute CRS(α) as a standard multicurve of a conjugate plus the conjugator."""
    n = alpha.n
    beta, c_beta, catalog = select_representative(alpha, max_size)
    simplices = catalog.maximal_multicurves()
    M: set[StandardCurve] = set(frozenset.intersection(*simplices)) if simplices else set()
    candidates = Multicurve(n, tuple(M))
    for c in sorted(candidates):
        if c not in M:
            continue
        orbit = set(curve_orbit(c, beta).curves)
        rest = M - orbit
        outer = enclosing_curve(rest, c)
        glued = component_braid(beta, rest, outer)
        if is_periodic(glued):
            log.debug("dropping orbit of %s: glued component %s is periodic", c, glued)
            M -= orbit
    conj = c_beta if M else CanonicalBraid.identity(n)
    return CrsResult(alpha, Multicurve(n, tuple(M)), conj, beta, candidates, catalog)


def classify(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE) -> NTClass:
    if is_periodic(alpha):
        return NTClass.PERIODIC
    if canonical_reduction_system(alpha, max_size).curves:
        return NTClass.REDUCIBLE
    return NTClass.PSEUDO_ANOSOV


def crs_json(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE) -> str:
    result = canonical_reduction_system(alpha, max_size)
    if is_periodic(alpha):
        kind = NTClass.PERIODIC
    else:
        kind = NTClass.REDUCIBLE if result.curves else NTClass.PSEUDO_ANOSOV
    return json.dumps({"class": kind.value, "crs": result.to_dict()})
