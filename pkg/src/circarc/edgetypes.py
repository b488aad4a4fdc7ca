"""Edge classification, spanning pairs, and the circular completion.

Every edge of a reduced graph is either an inclusion (one closed
neighbourhood inside the other) or an overlap, and an overlap is a
2-overlap exactly when its ends form a spanning pair.  Non-adjacent
spanning pairs are circular pairs; completing a graph means adding, for
each vertex that has no circular partner, a new vertex that becomes its
partner, until every vertex is paired.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Optional, Sequence

import numpy as np

from .graph import Graph


class EdgeType(IntEnum):
    NONEDGE = 0
    OVERLAP1 = 1
    OVERLAP2 = 2
    INCLUSION = 3


class UnreducedGraphError(ValueError):
    """Raised when classification meets a universal vertex or true twins."""


class InternalError(AssertionError):
    """A structural guarantee failed; indicates a bug, not bad input."""


def _matrices(closed: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """contains[u,v] = N[v] subset of N[u]; spanning[u,v] = spanning pair."""
    ci = closed.astype(np.int32)
    co = (~closed).astype(np.int32)
    contains = (co @ ci.T) == 0
    # (C1) for (u,v): every x outside N[v] has N[x] inside N[u]
    span_c1 = ((~contains).astype(np.int32) @ co.T) == 0
    return contains, span_c1 & span_c1.T


@dataclass(frozen=True)
class TypedGraph:
    graph: Graph
    types: np.ndarray    # int8 (n, n); diagonal INCLUSION
    contains: np.ndarray  # bool (n, n); contains[u,v] = N[v] subset of N[u]
    spanning: np.ndarray  # bool (n, n)

    def type_of(self, u: int, v: int) -> EdgeType:
        return EdgeType(int(self.types[u, v]))

    def overlaps(self, u: int, v: int) -> bool:
        return self.types[u, v] in (EdgeType.OVERLAP1, EdgeType.OVERLAP2)


def classify_all(G: Graph) -> TypedGraph:
    """Classify every vertex pair of a reduced graph.

    Raises UnreducedGraphError if G still has a universal vertex or true
    twins (their edges would admit no type).  Graphs with at most one
    vertex pass trivially.
    """
    closed = G.closed_adj()
    contains, spanning = _matrices(closed)
    if G.n >= 2:
        universal = np.flatnonzero(closed.all(axis=1))
        if universal.size:
            raise UnreducedGraphError(f"universal vertex {int(universal[0])}")
        twins = contains & contains.T & G.adj
        if twins.any():
            u, v = map(int, np.argwhere(twins)[0])
            raise UnreducedGraphError(f"true twins {u}, {v}")
    types = np.zeros((G.n, G.n), dtype=np.int8)
    incl = G.adj & (contains | contains.T)
    types[incl] = EdgeType.INCLUSION
    types[G.adj & ~incl & spanning] = EdgeType.OVERLAP2
    types[G.adj & ~incl & ~spanning] = EdgeType.OVERLAP1
    np.fill_diagonal(types, EdgeType.INCLUSION)
    return TypedGraph(G, types, contains, spanning)


@dataclass(frozen=True)
class CircularPairing:
    partner: dict[int, int]

    @property
    def paired_vertices(self) -> frozenset[int]:
        return frozenset(self.partner)


def circular_pairs(T: TypedGraph) -> CircularPairing:
    """Match each vertex with its circular partner, if it has one."""
    circ = T.spanning & ~T.graph.closed_adj()
    counts = circ.sum(axis=1)
    if (counts > 1).any():
        v = int(np.flatnonzero(counts > 1)[0])
        raise InternalError(f"vertex {v} has two circular partners")
    partner = {int(u): int(np.flatnonzero(circ[u])[0])
               for u in np.flatnonzero(counts)}
    return CircularPairing(partner)


def complete(T: TypedGraph) -> tuple[TypedGraph, dict[int, int]]:
    """Build the circular completion of T and its full pairing.

    Repeatedly takes the smallest-index unpaired vertex v and adds a new
    vertex adjacent to exactly the vertices whose closed neighbourhood is
    not inside N[v]; the new vertex becomes v's circular partner.  Returns
    the completed typed graph and the partner map covering all of it.
    """
    n0 = T.graph.n
    s0 = len(circular_pairs(T).partner)
    adj = T.graph.adj
    names = list(T.graph.names)
    for _ in range(n0 + 1):
        m = adj.shape[0]
        closed = adj | np.eye(m, dtype=bool)
        contains, spanning = _matrices(closed)
        circ = spanning & ~closed
        unpaired = np.flatnonzero(~circ.any(axis=1))
        if unpaired.size == 0:
            break
        v = int(unpaired[0])
        if v >= n0:
            raise InternalError("an added vertex failed to stay paired")
        row = ~contains[v]
        row[v] = False
        adj = np.block([[adj, row[:, None]], [row[None, :], np.zeros((1, 1), bool)]])
        names.append("~" + names[v])
    else:
        raise InternalError("completion did not converge")
    m = adj.shape[0]
    if m != 2 * n0 - s0:
        raise InternalError("completion has the wrong cardinality")
    H = classify_all(Graph(m, adj, tuple(names)))
    if not np.array_equal(H.types[:n0, :n0], T.types):
        raise InternalError("completion changed an edge type")
    pairing = circular_pairs(H).partner
    if len(pairing) != m:
        raise InternalError("completion is not circularly paired")
    return H, pairing


def avoids(T: TypedGraph, z: int, walk: Sequence[int]) -> bool:
    """Does z avoid the given walk?

    Requires every neighbour of z on the walk (including z itself, which
    never overlaps itself) to overlap z, and forbids the walk from using an
    overlap edge between two vertices that both overlap z.  Repeated
    vertices in the walk denote loops and are allowed.
    """
    for a, b in zip(walk, walk[1:]):
        if a != b and not T.graph.adjacent(a, b):
            raise ValueError(f"not a walk: {a} and {b} are non-adjacent")
    for x in walk:
        if T.graph.adjacent(z, x) and not T.overlaps(z, x):
            return False
    for a, b in zip(walk, walk[1:]):
        if a != b and T.overlaps(z, a) and T.overlaps(z, b) and T.overlaps(a, b):
            return False
    return True


def completion_error(Gt: TypedGraph, Ht: TypedGraph,
                     pairing: dict[int, int]) -> Optional[str]:
    """First-principles check that (Ht, pairing) completes Gt; None if OK.

    Gt's vertices must be the first vertices of Ht.
    """
    n, m = Gt.graph.n, Ht.graph.n
    if m < n:
        return "completion smaller than input"
    if not np.array_equal(Ht.graph.adj[:n, :n], Gt.graph.adj):
        return "input graph is not induced in the completion"
    if not np.array_equal(Ht.types[:n, :n], Gt.types):
        return "edge types not preserved"
    if m != 2 * n - len(circular_pairs(Gt).partner):
        return "wrong completion cardinality"
    if set(pairing) != set(range(m)):
        return "pairing does not cover the completion"
    for u, v in pairing.items():
        if u == v or pairing.get(v) != u:
            return "pairing is not an involution without fixed points"
        if Ht.graph.adjacent(u, v) or not Ht.spanning[u, v]:
            return f"{u}, {v} paired but not a circular pair"
        if u >= n and v >= n:
            return f"added vertices {u}, {v} paired together"
    closed = Ht.graph.closed_adj()
    if m >= 2 and closed.all(axis=1).any():
        return "completion has a universal vertex"
    twins = Ht.contains & Ht.contains.T & Ht.graph.adj
    if twins.any():
        return "completion has true twins"
    return None


def verify_completion(Gt: TypedGraph, Ht: TypedGraph,
                      pairing: dict[int, int]) -> bool:
    return completion_error(Gt, Ht, pairing) is None
