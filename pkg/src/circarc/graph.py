"""Loopless simple graphs with implicit loops at every vertex.

All adjacency questions are asked about closed neighbourhoods: a vertex is
always considered adjacent to itself.  The adjacency matrix we store has a
False diagonal; helpers that need the closed version OR in the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: np.ndarray  # bool (n, n), symmetric, False diagonal
    names: tuple[str, ...]

    def __post_init__(self):
        if self.adj.shape != (self.n, self.n):
            raise GraphError("adjacency shape does not match vertex count")
        if self.adj.dtype != np.bool_:
            raise GraphError("adjacency must be boolean")
        if self.n and not np.array_equal(self.adj, self.adj.T):
            raise GraphError("adjacency must be symmetric")
        if self.n and self.adj.diagonal().any():
            raise GraphError("no explicit loops; loops are implicit")
        if len(self.names) != self.n:
            raise GraphError("one name per vertex required")
        if len(set(self.names)) != self.n:
            raise GraphError("vertex names must be distinct")

    def adjacent(self, u: int, v: int) -> bool:
        """Closed adjacency: every vertex is adjacent to itself."""
        return u == v or bool(self.adj[u, v])

    def closed_adj(self) -> np.ndarray:
        return self.adj | np.eye(self.n, dtype=bool)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.adj[v])) | {v}

    def degree(self, v: int) -> int:
        """Closed degree |N[v]|."""
        return int(self.adj[v].sum()) + 1

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adj))
        return list(zip(iu.tolist(), ju.tolist()))

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex name: {name!r}") from None

    def induced(self, vertices: Sequence[int]) -> "Graph":
        vs = list(vertices)
        idx = np.array(vs, dtype=int)
        sub = self.adj[np.ix_(idx, idx)] if vs else np.zeros((0, 0), dtype=bool)
        return Graph(len(vs), sub, tuple(self.names[v] for v in vs))


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                names: Optional[Sequence[str]] = None) -> Graph:
    """Build a graph from an edge list, rejecting loops and out-of-range ends."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    if names is None:
        names = [str(i) for i in range(n)]
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range")
        if u == v:
            raise GraphError(f"explicit loop at {u} not allowed")
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj, tuple(names))


@dataclass(frozen=True)
class RemoveUniversal:
    vertex: int  # index in the graph the step was applied to


@dataclass(frozen=True)
class MergeTwins:
    kept: int
    removed: int


ReductionStep = RemoveUniversal | MergeTwins


@dataclass
class ReductionTrace:
    """Record of a reduction run.

    Each step stores vertex indices of the original graph.  ``survivors``
    lists the original indices that remain, in increasing order; the reduced
    graph uses their rank in that list as its vertex index.
    """
    n_original: int
    steps: list[ReductionStep] = field(default_factory=list)
    survivors: list[int] = field(default_factory=list)


def reduce(G: Graph) -> tuple[Graph, ReductionTrace]:
    """Strip universal vertices and merge true twins to a fixed point.

    Universal removals are preferred over twin merges at each step; ties go
    to the smallest index.  Twin merges keep the smaller index.  Reduction
    stops once fewer than two vertices remain.
    """
    live = list(range(G.n))
    adj = G.adj.copy()
    steps: list[ReductionStep] = []
    while len(live) >= 2:
        idx = np.array(live, dtype=int)
        sub = adj[np.ix_(idx, idx)]
        closed = sub | np.eye(len(live), dtype=bool)
        universal = np.flatnonzero(closed.all(axis=1))
        if universal.size:
            pos = int(universal[0])
            steps.append(RemoveUniversal(live[pos]))
            del live[pos]
            continue
        twin = None
        for a in range(len(live)):
            for b in range(a + 1, len(live)):
                if sub[a, b] and np.array_equal(closed[a], closed[b]):
                    twin = (a, b)
                    break
            if twin:
                break
        if twin is None:
            break
        a, b = twin
        steps.append(MergeTwins(live[a], live[b]))
        del live[b]
    reduced = G.induced(live)
    return reduced, ReductionTrace(G.n, steps, list(live))


def replay_reduction(G: Graph, trace: ReductionTrace) -> Graph:
    """Apply a recorded trace to G and return the surviving induced subgraph.

    Only removal is replayed; step legality is not re-checked here because an
    induced subgraph certificate does not depend on it.
    """
    if trace.n_original != G.n:
        raise GraphError("trace does not match graph size")
    removed = set()
    for step in trace.steps:
        v = step.vertex if isinstance(step, RemoveUniversal) else step.removed
        if not (0 <= v < G.n) or v in removed:
            raise GraphError("trace removes an invalid vertex")
        if isinstance(step, MergeTwins):
            if not (0 <= step.kept < G.n) or step.kept in removed:
                raise GraphError("trace merge references a removed vertex")
        removed.add(v)
    survivors = [v for v in range(G.n) if v not in removed]
    if survivors != trace.survivors:
        raise GraphError("trace survivors are inconsistent")
    return G.induced(survivors)
