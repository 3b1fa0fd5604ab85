"""Canonicalization machinery: bipartite graph, spanning forest, rephasing.

Every phirotope with {1, ..., r} a basis and a connected associated bipartite
graph can be rephased (plus a global phase) so that the entries along the
canonical spanning tree of any standard-form realization carry phase 1 and
the value on {1, ..., r} is 1.  Whether the result takes only real values
decides essential orientability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DisconnectedGraphError,
    FirstSubsetNotBasisError,
    PhasedMatroidError,
    UnsupportedMinorSizeError,
)
from .phases import DEFAULT_TOLERANCE, Phase, Tolerance, circular_distance
from .phirotopes import Phirotope, Rephasing, UnderlyingMatroid, rephase, scale_global, underlying_matroid


def shuffle_sign(subset, rank: int) -> int:
    """Sign of the shuffle permutation replacing the rows in ``subset``.

    sigma counts, for each h in the subset, the elements of [rank] outside the
    subset that exceed h; the sign is (-1)**sigma.
    """
    h = set(subset)
    if not h <= set(range(1, rank + 1)):
        raise ValueError(f"subset {sorted(h)} not contained in [1, {rank}]")
    complement = [k for k in range(1, rank + 1) if k not in h]
    sigma = sum(1 for x in h for k in complement if k > x)
    return (-1) ** (sigma % 2)


def entry_phase(phi: Phirotope, i: int, j: int) -> Phase:
    """Forced phase of entry (i, j), j > rank, in any standard-form realization."""
    r = phi.r
    if not (1 <= i <= r):
        raise ValueError(f"row {i} outside [1, {r}]")
    if not (r < j <= phi.n):
        raise ValueError(f"column {j} outside ({r}, {phi.n}]")
    basis = tuple(k for k in range(1, r + 1) if k != i) + (j,)
    return phi.evaluate(basis).times_sign((-1) ** ((r - i) % 2))


def minor_phase(phi: Phirotope, row_subset, col_subset) -> Phase:
    """Forced phase of the k x k minor on the given rows and columns (> rank).

    Only k in {1, 2} is supported.
    """
    h = tuple(sorted(row_subset))
    j = tuple(sorted(col_subset))
    if len(h) != len(j) or len(h) not in (1, 2):
        raise UnsupportedMinorSizeError("only 1x1 and 2x2 minors are supported")
    r = phi.r
    if any(not (r < c <= phi.n) for c in j):
        raise ValueError("minor columns must lie beyond the identity block")
    complement = tuple(k for k in range(1, r + 1) if k not in set(h))
    value = phi.evaluate(complement + j)
    return value.times_sign(shuffle_sign(h, r))


@dataclass(frozen=True)
class AssociatedBipartiteGraph:
    """Bipartite graph on [n]: rows 1..r on the left, columns r+1..n on the
    right, with an edge (i, j) iff swapping i out of {1..r} for j gives a basis."""

    rank: int
    ground_size: int
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))

    def neighbors_of_row(self, i: int):
        return sorted(j for (a, j) in self.edges if a == i)

    def rows_of_column(self, j: int):
        return sorted(i for (i, b) in self.edges if b == j)


def associated_bipartite_graph(m: UnderlyingMatroid) -> AssociatedBipartiteGraph:
    r, n = m.rank, m.ground_size
    if not m.is_basis(range(1, r + 1)):
        raise FirstSubsetNotBasisError("{1..r} must be a basis")
    edges = set()
    for i in range(1, r + 1):
        rest = tuple(k for k in range(1, r + 1) if k != i)
        for j in range(r + 1, n + 1):
            if m.is_basis(rest + (j,)):
                edges.add((i, j))
    return AssociatedBipartiteGraph(r, n, frozenset(edges))


@dataclass(frozen=True)
class SpanningForest:
    """An acyclic edge subset spanning all n vertices of the bipartite graph."""

    edges: tuple
    component_count: int


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def canonical_spanning_forest(g: AssociatedBipartiteGraph) -> SpanningForest:
    """Deterministic greedy spanning forest.

    First the edge to the smallest incident column of each row, then a scan of
    columns in ascending order (rows bottom-to-top within a column), adding
    every edge that does not close a cycle.
    """
    r, n = g.rank, g.ground_size
    uf = _UnionFind(n + 1)
    chosen = []

    def add(i, j):
        if uf.union(i, j):
            chosen.append((i, j))

    for i in range(1, r + 1):
        nbrs = g.neighbors_of_row(i)
        if nbrs:
            add(i, nbrs[0])
    for j in range(r + 1, n + 1):
        for i in range(r, 0, -1):
            if (i, j) in g.edges:
                add(i, j)
    components = len({uf.find(v) for v in range(1, n + 1)})
    return SpanningForest(tuple(sorted(chosen)), components)


@dataclass(frozen=True)
class CanonicalizationResult:
    """Rephasing, global phase and the resulting canonical phirotope."""

    rho: Rephasing
    global_phase: Phase
    canonical: Phirotope


def canonical_targets(phi_or_n, r=None):
    """Bases whose canonical values are pinned, with their target phases.

    Covers {1..r} (target 1), the row-r bases {1..r-1, j} for j > r (target 1)
    and the column-(r+1) bases {1..r}-{i}+{r+1} for i < r (target (-1)**(r-i)).
    """
    if isinstance(phi_or_n, Phirotope):
        n, r = phi_or_n.n, phi_or_n.r
    else:
        n = phi_or_n
    first = tuple(range(1, r + 1))
    targets = {first: Phase(0.0)}
    for j in range(r + 1, n + 1):
        targets[tuple(range(1, r)) + (j,)] = Phase(0.0)
    for i in range(1, r):
        basis = tuple(k for k in first if k != i) + (r + 1,)
        targets[tuple(sorted(basis))] = Phase(0.0 if (r - i) % 2 == 0 else math.pi)
    return targets


def canonicalize(phi: Phirotope) -> CanonicalizationResult:
    """Rephase and globally scale a phirotope into canonical form.

    The rephasing is propagated along the canonical spanning tree with the
    gauge rho[r+1] = 1; the global phase then normalizes the value on
    {1, ..., r} to 1.  Requires {1..r} to be a basis and the associated
    bipartite graph to be connected (direct sums are rejected).
    """
    r, n = phi.r, phi.n
    matroid = underlying_matroid(phi)
    graph = associated_bipartite_graph(matroid)
    forest = canonical_spanning_forest(graph)
    if forest.component_count != 1:
        raise DisconnectedGraphError(
            f"associated bipartite graph has {forest.component_count} components")

    first_value = phi.value(range(1, r + 1))
    # tree edge (i, j) forces rho[j] - rho[i] = ang(phi(1..r)) - ang(entry_phase)
    adjacency = {v: [] for v in range(1, n + 1)}
    for (i, j) in forest.edges:
        delta = first_value.angle - entry_phase(phi, i, j).angle
        adjacency[i].append((j, delta))
        adjacency[j].append((i, -delta))
    rho_angle = {r + 1: 0.0}
    stack = [r + 1]
    while stack:
        v = stack.pop()
        for w, delta in adjacency[v]:
            if w not in rho_angle:
                rho_angle[w] = rho_angle[v] + delta
                stack.append(w)
    if len(rho_angle) != n:
        raise DisconnectedGraphError("spanning tree does not reach every vertex")

    rho = Rephasing(tuple(Phase.from_angle(rho_angle[k]) for k in range(1, n + 1)))
    alpha = Phase.from_angle(-first_value.angle - sum(rho_angle[k] for k in range(1, r + 1)))
    canonical = scale_global(rephase(phi, rho), alpha)

    # pinned values are assigned exactly, not left to float accumulation
    values = dict(canonical.values)
    for basis, target in canonical_targets(phi).items():
        got = values[basis]
        if got.is_zero:
            continue
        if circular_distance(got.angle, target.angle) > 1e-6:
            raise PhasedMatroidError(
                f"canonicalization failed to pin basis {basis}: got {got}, want {target}")
        values[basis] = target
    canonical = Phirotope(n, r, values, phi.tolerance, validate=False)
    return CanonicalizationResult(rho, alpha, canonical)


def is_canonical(phi: Phirotope, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff every pinned basis with nonzero value matches its target."""
    for basis, target in canonical_targets(phi).items():
        got = phi.values[basis]
        if not got.is_zero and not got.isclose(target, tol):
            return False
    return not phi.value(range(1, phi.r + 1)).is_zero


def is_essentially_oriented(phi: Phirotope, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff the canonical form takes values in {-1, 0, +1} only."""
    canonical = canonicalize(phi).canonical
    return all(p.is_real(tol) for p in canonical.values.values())
