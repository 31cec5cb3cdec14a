"""
Finite conjugacy-invariant sets with tracked conjugators.

Every table entry ``γ`` carries ``c_γ`` with ``γ^{c_γ} = α`` where ``α`` is the
braid the table was built from and ``x^c = c⁻¹·x·c``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .garside import (
    CanonicalBraid,
    Perm,
    SimpleElement,
    _append,
    all_simples,
    conjugate_by_simple,
    cyclic_sliding,
    delta_perm,
    identity_perm,
    inverse,
    is_prefix_perm,
    meet_perm,
    multiply,
    preferred_prefix,
    starting_set,
    tau_power,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 10**6


class TableOverflowError(RuntimeError):
    """A conjugacy table grew past its configured size cap."""


def sliding_circuit_representative(alpha: CanonicalBraid) -> tuple[CanonicalBraid, CanonicalBraid]:
    """Iterate cyclic sliding until the first repetition.

    Returns ``(γ, c)`` with γ the first recurring element of the trajectory and
    ``γ^c = α``.
    """
    n = alpha.n
    seen = {alpha: 0}
    trajectory = [alpha]
    prefixes: list[Perm] = []
    current = alpha
    while True:
        p = preferred_prefix(current).perm
        nxt = conjugate_by_simple(current, p) if p != identity_perm(n) else current
        prefixes.append(p)
        if nxt in seen:
            j = seen[nxt]
            break
        seen[nxt] = len(trajectory)
        trajectory.append(nxt)
        current = nxt
    # α_j = P⁻¹·α·P with P = p_0⋯p_{j-1}, so α = α_j^{P⁻¹}
    P = CanonicalBraid.from_simples(n, prefixes[:j])
    return trajectory[j], inverse(P)


@dataclass(frozen=True)
class ConjugacyTable:
    """A finite invariant subset of the conjugacy class of ``base``."""

    base: CanonicalBraid
    kind: str
    entries: Mapping[CanonicalBraid, CanonicalBraid]
    edges: tuple[tuple[CanonicalBraid, SimpleElement, CanonicalBraid], ...]
    summit: tuple[int, int]
    root: CanonicalBraid = field(compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, x: object) -> bool:
        return x in self.entries

    def __iter__(self):
        return iter(sorted(self.entries))

    def conjugator(self, gamma: CanonicalBraid) -> CanonicalBraid:
        return self.entries[gamma]

    def dump(self) -> str:
        """One entry per line: serialized braid, tab, serialized conjugator."""
        return "".join(f"{g}\t{self.entries[g]}\n" for g in sorted(self.entries))


def _first_factor_times(fs: tuple[Perm, ...], n: int, s: Perm) -> Perm:
    """(X·s) ∧ Δ for the positive braid X = β_1⋯β_N and a simple s."""
    work = list(fs)
    lead = _append(n, 0, work, s)
    if lead:
        return delta_perm(n)
    return work[0] if work else identity_perm(n)


def _stays_in_summit(x: CanonicalBraid, x_inv: CanonicalBraid, s: Perm) -> bool:
    """Whether x^s keeps inf(x) and sup(x) (x assumed super summit).

    inf(x^s) ≥ p iff τ^p(s) ≼ X·s; the sup test is the same on x⁻¹.
    """
    n = x.n
    if not is_prefix_perm(tau_power(s, x.inf), _first_factor_times(x.factors, n, s)):
        return False
    return is_prefix_perm(tau_power(s, x_inv.inf), _first_factor_times(x_inv.factors, n, s))


def super_summit_set(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE) -> ConjugacyTable:
    """BFS over conjugation by every non-trivial simple element.

    The super summit set is connected under simple conjugations, so starting
    from one summit element and keeping conjugates with the same (inf, sup)
    reaches all of it.
    """
    n = alpha.n
    start, c0 = sliding_circuit_representative(alpha)
    summit = (start.inf, start.sup)
    entries = {start: c0}
    edges = []
    queue = deque([start])
    candidates = all_simples(n)
    while queue:
        gamma = queue.popleft()
        g_inv = inverse(gamma)
        c_gamma = entries[gamma]
        for s in candidates:
            if gamma.factors and not _stays_in_summit(gamma, g_inv, s):
                continue
            image = conjugate_by_simple(gamma, s)
            if (image.inf, image.sup) != summit:
                # the filter is exact; anything else means start was not summit
                if image.inf > summit[0] or image.sup < summit[1]:
                    raise RuntimeError(f"{start} is not a super summit element")
                continue
            edges.append((gamma, SimpleElement(n, s), image))
            if image not in entries:
                if len(entries) >= max_size:
                    raise TableOverflowError(
                        f"super summit set exceeds the cap of {max_size} entries")
                # image^{s⁻¹ c_γ} = α
                entries[image] = multiply(inverse(CanonicalBraid.from_simple(s)), c_gamma)
                queue.append(image)
    log.debug("SSS of %s: %d entries, %d edges", alpha, len(entries), len(edges))
    return ConjugacyTable(alpha, "SSS", MappingProxyType(entries), tuple(edges), summit, start)


def _recurrent(table: ConjugacyTable) -> set[CanonicalBraid]:
    """Entries lying on a cycle of the cyclic sliding map."""
    image = {g: cyclic_sliding(g) for g in table.entries}
    on_cycle: set[CanonicalBraid] = set()
    done: set[CanonicalBraid] = set()
    for g in sorted(image):
        if g in done:
            continue
        path = []
        index = {}
        x = g
        while x not in done and x not in index:
            if x not in image:
                raise RuntimeError("cyclic sliding left the super summit set")
            index[x] = len(path)
            path.append(x)
            x = image[x]
        if x in index:
            on_cycle.update(path[index[x]:])
        done.update(path)
    return on_cycle


class _CircuitMembership:
    """Memoized test of whether a braid lies on a cyclic sliding circuit."""

    def __init__(self) -> None:
        self.known: dict[CanonicalBraid, bool] = {}

    def __call__(self, x: CanonicalBraid) -> bool:
        path: list[CanonicalBraid] = []
        index: dict[CanonicalBraid, int] = {}
        y = x
        while y not in self.known and y not in index:
            index[y] = len(path)
            path.append(y)
            y = cyclic_sliding(y)
        cycle_start = index.get(y, len(path))
        for i, z in enumerate(path):
            self.known[z] = i >= cycle_start
        return self.known[x]


def _sliding_circuits_bfs(alpha: CanonicalBraid, max_size: int) -> ConjugacyTable:
    n = alpha.n
    start, c0 = sliding_circuit_representative(alpha)
    summit = (start.inf, start.sup)
    on_circuit = _CircuitMembership()
    if not on_circuit(start):
        raise RuntimeError(f"{start} does not recur under cyclic sliding")
    entries = {start: c0}
    edges = []
    queue = deque([start])
    while queue:
        gamma = queue.popleft()
        g_inv = inverse(gamma)
        c_gamma = entries[gamma]
        for s in all_simples(n):
            if gamma.factors and not _stays_in_summit(gamma, g_inv, s):
                continue
            image = conjugate_by_simple(gamma, s)
            if (image.inf, image.sup) != summit or not on_circuit(image):
                continue
            edges.append((gamma, SimpleElement(n, s), image))
            if image not in entries:
                if len(entries) >= max_size:
                    raise TableOverflowError(
                        f"sliding circuits set exceeds the cap of {max_size} entries")
                entries[image] = multiply(inverse(CanonicalBraid.from_simple(s)), c_gamma)
                queue.append(image)
    log.debug("SC of %s: %d entries, %d edges", alpha, len(entries), len(edges))
    return ConjugacyTable(alpha, "SC", MappingProxyType(entries), tuple(edges), summit, start)


def sliding_circuits_set(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE,
                         sss: ConjugacyTable | None = None) -> ConjugacyTable:
    """Elements of the super summit set that recur under cyclic sliding.

    Without ``sss`` the set is explored directly: it is connected under
    conjugation by simple elements that stay inside it, and membership is
    decided by following the sliding trajectory until it repeats. With
    ``sss`` the given super summit set is filtered instead.
    """
    if sss is None:
        return _sliding_circuits_bfs(alpha, max_size)
    keep = _recurrent(sss)
    entries = {g: sss.entries[g] for g in sss.entries if g in keep}
    edges = tuple(e for e in sss.edges if e[0] in keep and e[2] in keep)
    root = sss.root if sss.root in keep else min(keep)
    return ConjugacyTable(alpha, "SC", MappingProxyType(entries), edges, sss.summit, root)


@dataclass(frozen=True)
class CentralizerGenerators:
    element: CanonicalBraid
    generators: tuple[CanonicalBraid, ...]


def _minimal_edges(table: ConjugacyTable) -> dict[CanonicalBraid, list[tuple[Perm, CanonicalBraid]]]:
    """Per entry, the conjugations by c(σ_i) = ∧{s : σ_i ≼ s, γ^s in table}."""
    by_source: dict[CanonicalBraid, list[tuple[Perm, CanonicalBraid]]] = {}
    for g, s, h in table.edges:
        by_source.setdefault(g, []).append((s.perm, h))
    result = {}
    for g, out in by_source.items():
        n = g.n
        target = dict(out)
        chosen = []
        for i in range(1, n):
            m = None
            for s, _ in out:
                if i in starting_set(s):
                    m = s if m is None else meet_perm(m, s)
            if m is not None and m not in chosen:
                chosen.append(m)
        result[g] = [(m, target[m]) for m in sorted(chosen)]
    return result


def centralizer_generators(alpha: CanonicalBraid, max_size: int = DEFAULT_MAX_SIZE,
                           sss: ConjugacyTable | None = None) -> CentralizerGenerators:
    """Generators of Z(α) from fundamental loops of the super summit graph.

    Loops are taken in the graph of minimal simple conjugators; every positive
    conjugator between summit elements factors through it, so its loops
    generate the centralizer of the root, which is then conjugated back to α.
    """
    if sss is None:
        sss = super_summit_set(alpha, max_size)
    n = alpha.n
    root = sss.root
    graph = _minimal_edges(sss)
    path = {root: CanonicalBraid.identity(n)}
    tree: set[tuple[CanonicalBraid, Perm]] = set()
    queue = deque([root])
    while queue:
        g = queue.popleft()
        for s, h in graph.get(g, []):
            if h not in path:
                path[h] = multiply(path[g], CanonicalBraid.from_simple(s))
                tree.add((g, s))
                queue.append(h)
    if len(path) != len(sss):
        raise RuntimeError("minimal conjugator graph is not connected")
    c_root = sss.entries[root]
    c_root_inv = inverse(c_root)
    gens = set()
    for g in sorted(graph):
        for s, h in graph[g]:
            if (g, s) in tree:
                continue
            loop = multiply(multiply(path[g], CanonicalBraid.from_simple(s)), inverse(path[h]))
            if loop.is_identity():
                continue
            z = multiply(multiply(c_root_inv, loop), c_root)
            if not z.commutes_with(alpha):
                raise RuntimeError(f"loop {z} does not commute with {alpha}")
            gens.add(z)
    if not gens:
        # Z(α) always contains Δ²
        gens.add(CanonicalBraid.delta(n, 2))
    return CentralizerGenerators(alpha, tuple(sorted(gens)))
