"""
Catalog of invariant standard multicurves of a braid.

Closed orbits of standard curves that are pairwise adjacent become vertices of
a graph; its complete subgraphs are the invariant standard multicurves, and
the largest ones give the maximal simplices.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .curves import StandardCurve, adjacent, all_standard_curves, curve_orbit
from .garside import CanonicalBraid


@dataclass(frozen=True)
class OrbitSimplex:
    """A closed orbit of pairwise adjacent standard curves."""

    curves: tuple[StandardCurve, ...]

    def __len__(self) -> int:
        return len(self.curves)

    @property
    def witness(self) -> StandardCurve:
        """The seed the orbit was generated from (its smallest curve)."""
        return self.curves[0]

    @property
    def size(self) -> int:
        return len(self.curves)

    def adjacent_to(self, other: OrbitSimplex) -> bool:
        return all(adjacent(c1, c2) for c1 in self.curves for c2 in other.curves)

    def to_list(self) -> list[list[int]]:
        return [[c.a, c.b] for c in self.curves]


@dataclass(frozen=True)
class ReductionCatalog:
    braid: CanonicalBraid
    orbits: tuple[OrbitSimplex, ...]
    edges: tuple[tuple[int, int], ...]
    dimension: int
    maximal: tuple[tuple[int, ...], ...]

    def cliques(self) -> list[tuple[int, ...]]:
        """Every nonempty complete subgraph of the orbit graph, as sorted index tuples."""
        adj = {i: set() for i in range(len(self.orbits))}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        found: set[tuple[int, ...]] = set()
        for clique in bron_kerbosch(adj):
            members = sorted(clique)
            for k in range(1, len(members) + 1):
                found.update(itertools.combinations(members, k))
        return sorted(found, key=lambda t: (len(t), t))

    def simplices(self) -> list[frozenset[StandardCurve]]:
        """All nonempty standard reduction simplices: unions over complete subgraphs."""
        return [frozenset(c for i in clique for c in self.orbits[i].curves)
                for clique in self.cliques()]

    def maximal_multicurves(self) -> list[frozenset[StandardCurve]]:
        return [frozenset(c for i in clique for c in self.orbits[i].curves)
                for clique in self.maximal]

    def to_json(self) -> str:
        return json.dumps({
            "orbits": [o.to_list() for o in self.orbits],
            "edges": [list(e) for e in self.edges],
            "d": self.dimension,
            "maximal": [list(m) for m in self.maximal],
        })


def orbit_simplices(beta: CanonicalBraid) -> list[OrbitSimplex]:
    """Closed, pairwise adjacent orbits of standard curves, in (a, b) order.

    Every curve met along an orbit is marked, so each orbit is produced once,
    from its smallest member.
    """
    visited: set[StandardCurve] = set()
    result = []
    for c in all_standard_curves(beta.n):
        if c in visited:
            continue
        orbit = curve_orbit(c, beta)
        visited.update(orbit.curves)
        if not orbit.closed:
            continue
        if all(adjacent(x, y) for x, y in itertools.combinations(orbit.curves, 2)):
            result.append(OrbitSimplex(orbit.curves))
    return result


def bron_kerbosch(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    """Maximal cliques of an undirected graph, Bron–Kerbosch with pivoting."""
    cliques: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(adj), set())
    return cliques


def complete_subgraphs(orbits: list[OrbitSimplex]) -> tuple[tuple[tuple[int, int], ...], list[frozenset[int]]]:
    """Edges of the orbit adjacency graph and its maximal cliques."""
    edges = tuple((i, j) for i, j in itertools.combinations(range(len(orbits)), 2)
                  if orbits[i].adjacent_to(orbits[j]))
    adj: dict[int, set[int]] = {i: set() for i in range(len(orbits))}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    return edges, bron_kerbosch(adj)


def reduction_catalog(beta: CanonicalBraid) -> ReductionCatalog:
    """Orbits, their adjacency graph, the dimension d and the simplices of dimension d.

    A clique's simplex has one vertex per curve, so its dimension is the
    number of curves minus one; d = -1 when no curve is invariant.
    """
    orbits = orbit_simplices(beta)
    edges, cliques = complete_subgraphs(orbits)
    sizes = [sum(len(orbits[i]) for i in clique) for clique in cliques]
    top = max(sizes, default=0)
    maximal = sorted(tuple(sorted(clique)) for clique, size in zip(cliques, sizes)
                     if size == top and top > 0)
    return ReductionCatalog(beta, tuple(orbits), edges, top - 1, tuple(maximal))
