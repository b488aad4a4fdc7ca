"""Anchored knotting graph, disagreement bipartition, and the set Z.

For a fixed anchor z of a completed graph, every vertex u that z does not
include gets one copy per component of the "safe" subgraph around u: the
vertices that both u and z tolerate, with overlap edges jumped over by u
or z removed.  Walks inside such a component avoid both u and z.  An odd
cycle among the copies rolls out into two mutually avoiding walks anchored
at z; bipartiteness certifies there are none.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .edgetypes import InternalError, TypedGraph, avoids, circular_pairs

Copy = tuple[int, int]  # (vertex, component index)


@dataclass(frozen=True)
class AvoidWalkPair:
    anchor: int
    pair: tuple[int, int]
    walk_p: list[int]  # pair[0] -> pair[1]
    walk_q: list[int]  # pair[1] -> pair[0]


def walk_pair_error(H: TypedGraph, awp: AvoidWalkPair) -> Optional[str]:
    """First-principles check of an anchored pair of avoiding walks."""
    n = H.graph.n
    x, y = awp.pair
    z = awp.anchor
    p, q = awp.walk_p, awp.walk_q
    for v in [x, y, z, *p, *q]:
        if not 0 <= v < n:
            return f"vertex {v} out of range"
    if x == y:
        return "pair members must be distinct"
    if z in (x, y):
        return "anchor may not belong to the pair"
    if len(p) != len(q) or not p:
        return "walks must be nonempty and of equal length"
    if p[0] != x or p[-1] != y or q[0] != y or q[-1] != x:
        return "walk endpoints do not match the pair"
    for walk in (p, q):
        for a, b in zip(walk, walk[1:]):
            if a != b and not H.graph.adjacent(a, b):
                return f"step {a}-{b} is not an edge"
    if not avoids(H, z, p):
        return "anchor does not avoid the first walk"
    if not avoids(H, z, q):
        return "anchor does not avoid the second walk"
    for i in range(len(p) - 1):
        if not avoids(H, p[i], [q[i], q[i + 1]]):
            return f"{p[i]} does not avoid step {i} of the second walk"
        if not avoids(H, q[i + 1], [p[i], p[i + 1]]):
            return f"{q[i + 1]} does not avoid step {i} of the first walk"
    return None


def tolerated(H: TypedGraph, z: int) -> np.ndarray:
    """Vertices z does not include: non-adjacent to z or overlapping it."""
    from .edgetypes import EdgeType

    return np.asarray(H.types[z] != EdgeType.INCLUSION)


def _pruned_subgraph(H: TypedGraph, u: int, z: int) -> tuple[np.ndarray, np.ndarray]:
    """Members and pruned adjacency of the safe subgraph for the pair u, z."""
    from .edgetypes import EdgeType

    members = tolerated(H, u) & tolerated(H, z)
    ov = (H.types == EdgeType.OVERLAP1) | (H.types == EdgeType.OVERLAP2)
    adj = H.graph.adj & members[:, None] & members[None, :]
    jumped = ov & ((ov[u][:, None] & ov[u][None, :]) | (ov[z][:, None] & ov[z][None, :]))
    return members, adj & ~jumped


@dataclass
class KnottingGraph:
    anchor: int
    copies: list[Copy]
    copy_index: dict[Copy, int]
    members: dict[Copy, tuple[int, ...]]  # component vertex sets
    gamma: dict[tuple[int, int], int]     # (u, v) -> component of v around u
    adjacency: list[list[int]]            # by copy index, sorted
    _pruned: dict[int, np.ndarray]        # per-u pruned adjacency for path replay

    def component_path(self, u: int, comp: int, a: int, b: int) -> list[int]:
        """Shortest a-b path inside component comp of u's safe subgraph."""
        allowed = set(self.members[(u, comp)])
        if a not in allowed or b not in allowed:
            raise InternalError(f"path endpoints outside component {u}/{comp}")
        adj = self._pruned[u]
        prev = {a: None}
        queue = [a]
        while queue:
            cur = queue.pop(0)
            if cur == b:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            for nxt in np.flatnonzero(adj[cur]).tolist():
                if nxt in allowed and nxt not in prev:
                    prev[nxt] = cur
                    queue.append(nxt)
        raise InternalError(f"no path {a}-{b} in component {u}/{comp}")


def build_knotting(H: TypedGraph, z: int) -> KnottingGraph:
    """Assemble the anchored knotting graph of H at z."""
    from .edgetypes import EdgeType

    n = H.graph.n
    az = tolerated(H, z)
    az_list = [u for u in range(n) if az[u] and u != z]
    copies: list[Copy] = []
    members: dict[Copy, tuple[int, ...]] = {}
    gamma: dict[tuple[int, int], int] = {}
    pruned: dict[int, np.ndarray] = {}
    for u in az_list:
        mem, adj = _pruned_subgraph(H, u, z)
        mem[u] = False
        mem[z] = False
        pruned[u] = adj
        seen = set()
        comp = 0
        for s in np.flatnonzero(mem).tolist():
            if s in seen:
                continue
            stack, group = [s], [s]
            seen.add(s)
            while stack:
                cur = stack.pop()
                for nxt in np.flatnonzero(adj[cur]).tolist():
                    if mem[nxt] and nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
                        group.append(nxt)
            key = (u, comp)
            copies.append(key)
            members[key] = tuple(sorted(group))
            for v in group:
                gamma[(u, v)] = comp
            comp += 1
    copy_index = {c: i for i, c in enumerate(copies)}
    adjacency: list[set[int]] = [set() for _ in copies]
    # copies meet for every non-inclusion pair, adjacent or not
    ni = np.asarray(H.types != EdgeType.INCLUSION)
    for u in az_list:
        for v in np.flatnonzero(ni[u]).tolist():
            if v <= u or not az[v]:
                continue
            a = copy_index[(u, gamma[(u, v)])]
            b = copy_index[(v, gamma[(v, u)])]
            adjacency[a].add(b)
            adjacency[b].add(a)
    return KnottingGraph(z, copies, copy_index, members, gamma,
                         [sorted(s) for s in adjacency], pruned)


def bipartite_or_odd_cycle(K: KnottingGraph) -> Union[dict[Copy, int], list[Copy]]:
    """Two-color the copies, or return an odd closed walk of copies."""
    color: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    for root in range(len(K.copies)):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            cur = queue.pop(0)
            for nxt in K.adjacency[cur]:
                if nxt not in color:
                    color[nxt] = 1 - color[cur]
                    parent[nxt] = cur
                    queue.append(nxt)
                elif color[nxt] == color[cur]:
                    return _close_cycle(K, parent, cur, nxt)
    return {K.copies[i]: c for i, c in color.items()}


def _close_cycle(K: KnottingGraph, parent, a: int, b: int) -> list[Copy]:
    def ancestry(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    pa, pb = ancestry(a), ancestry(b)
    while len(pa) > 1 and len(pb) > 1 and pa[-2] == pb[-2]:
        pa.pop()
        pb.pop()
    # pa and pb now share only their last entry; walk a..lca..b closes on ba
    cycle = pa + pb[-2::-1]
    if len(cycle) % 2 == 0 or len(cycle) < 3:
        raise InternalError("odd cycle extraction produced an even walk")
    return [K.copies[i] for i in cycle]


def extract_invertible_pair(H: TypedGraph, K: KnottingGraph,
                            cycle: list[Copy]) -> AvoidWalkPair:
    """Roll an odd copy cycle out into two mutually avoiding walks.

    For each cycle position j, a path inside that copy's component links the
    neighbouring cycle vertices; the two walks take turns following these
    paths while the other side waits, looping in place.
    """
    k = len(cycle)
    if k < 3 or k % 2 == 0:
        raise InternalError("need an odd cycle of length at least 3")
    us = [c[0] for c in cycle]
    walk_p = [us[0]]
    walk_q = [us[-1]]
    for j in range(k):
        u, comp = cycle[j]
        path = K.component_path(u, comp, us[j - 1], us[(j + 1) % k])
        if j % 2 == 0:
            if walk_q[-1] != path[0]:
                raise InternalError("walk assembly lost continuity")
            for w in path[1:]:
                walk_q.append(w)
                walk_p.append(u)
        else:
            if walk_p[-1] != path[0]:
                raise InternalError("walk assembly lost continuity")
            for w in path[1:]:
                walk_p.append(w)
                walk_q.append(u)
    awp = AvoidWalkPair(K.anchor, (us[0], us[-1]), walk_p, walk_q)
    err = walk_pair_error(H, awp)
    if err is not None:
        raise InternalError(f"extracted walks fail verification: {err}")
    return awp


def _graph_avoid_cube(H: TypedGraph) -> np.ndarray:
    """cube[x,y,w] = the edge (or loop) xy exists in H and w avoids it."""
    from .edgetypes import EdgeType

    edge = H.graph.closed_adj()
    incl = np.asarray(H.types == EdgeType.INCLUSION)
    ov = (H.types == EdgeType.OVERLAP1) | (H.types == EdgeType.OVERLAP2)
    return (edge[:, :, None] & ~incl[:, None, :] & ~incl[None, :, :]
            & ~(ov[:, None, :] & ov[None, :, :] & ov[:, :, None]))


class _PairSearch:
    """Forcing components over ordered vertex pairs, restricted to walks
    that keep avoiding the anchor z throughout."""

    def __init__(self, H: TypedGraph, z: int):
        self.n = H.graph.n
        self.z = z
        self.cube = _graph_avoid_cube(H)
        self.comp = -np.ones((self.n, self.n), dtype=np.int64)
        self.parent: dict[tuple[int, int], Optional[tuple[int, int]]] = {}
        self.next_comp = 0

    def component(self, p: int, q: int) -> int:
        if self.comp[p, q] >= 0:
            return int(self.comp[p, q])
        cid = self.next_comp
        self.next_comp += 1
        self.comp[p, q] = cid
        self.parent[(p, q)] = None
        queue = [(p, q)]
        cube, z = self.cube, self.z
        while queue:
            a, b = queue.pop(0)
            step_a = np.flatnonzero(cube[a, :, b] & cube[a, :, z]).tolist()
            step_b = np.flatnonzero(cube[b, :, a] & cube[b, :, z]).tolist()
            for c in step_a:
                if self.comp[c, b] < 0:
                    self.comp[c, b] = cid
                    self.parent[(c, b)] = (a, b)
                    queue.append((c, b))
            for c in step_b:
                if self.comp[a, c] < 0:
                    self.comp[a, c] = cid
                    self.parent[(a, c)] = (a, b)
                    queue.append((a, c))
        return cid

    def chain(self, s: tuple[int, int], t: tuple[int, int]) -> list[tuple[int, int]]:
        def ancestry(state):
            path = [state]
            while self.parent[path[-1]] is not None:
                path.append(self.parent[path[-1]])
            return path

        a, b = ancestry(s), ancestry(t)
        while len(a) > 1 and len(b) > 1 and a[-2] == b[-2]:
            a.pop()
            b.pop()
        return a + b[-2::-1]


def disagreement_partition(H: TypedGraph, z: int) -> Union[set[int], AvoidWalkPair]:
    """Split the overlappers of z into two agreeing sides, or fail.

    Two overlappers x, y of z disagree when walks x -> z' and z' -> y (z'
    being z's circular partner) can avoid each other while avoiding z.  The
    disagreement graph must be bipartite; one side is returned as Y.  An odd
    disagreement cycle concatenates into a pair of mutually avoiding walks
    anchored at z, returned instead.
    """
    from .edgetypes import EdgeType

    pairing = circular_pairs(H).partner
    if z not in pairing:
        raise InternalError("anchor is not circularly paired")
    zbar = pairing[z]
    xs = [x for x in range(H.graph.n)
          if H.types[x, z] in (EdgeType.OVERLAP1, EdgeType.OVERLAP2)]
    for x in xs:
        if H.types[x, z] != EdgeType.OVERLAP1:
            raise InternalError(f"overlapper {x} of a minimum-degree anchor "
                                "must form a 1-overlap edge")
    if not xs:
        return set()
    search = _PairSearch(H, z)
    outgoing = {x: search.component(x, zbar) for x in xs}

    def disagree(x: int, y: int) -> bool:
        return outgoing[x] == int(search.comp[zbar, y]) and search.comp[zbar, y] >= 0

    for x in xs:
        if disagree(x, x):
            return _cycle_to_walks(H, z, zbar, search, [x])
    color: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    for root in xs:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            cur = queue.pop(0)
            for nxt in xs:
                if nxt == cur or not disagree(cur, nxt):
                    continue
                if nxt not in color:
                    color[nxt] = 1 - color[cur]
                    parent[nxt] = cur
                    queue.append(nxt)
                elif color[nxt] == color[cur]:
                    pa, pb = [cur], [nxt]
                    while parent[pa[-1]] is not None:
                        pa.append(parent[pa[-1]])
                    while parent[pb[-1]] is not None:
                        pb.append(parent[pb[-1]])
                    while len(pa) > 1 and len(pb) > 1 and pa[-2] == pb[-2]:
                        pa.pop()
                        pb.pop()
                    return _cycle_to_walks(H, z, zbar, search, pa + pb[-2::-1])
    return {x for x in xs if color[x] == 0}


def _cycle_to_walks(H: TypedGraph, z: int, zbar: int, search: "_PairSearch",
                    cycle: list[int]) -> AvoidWalkPair:
    """Concatenate the witness chains of an odd disagreement cycle."""
    if len(cycle) % 2 == 0:
        raise InternalError("disagreement cycle must be odd")
    states: list[tuple[int, int]] = []
    for j, x in enumerate(cycle):
        nxt = cycle[(j + 1) % len(cycle)]
        seg = search.chain((x, zbar), (zbar, nxt))
        if j % 2 == 1:
            seg = [(b, a) for a, b in seg]
        if states:
            if states[-1] != seg[0]:
                raise InternalError("chain concatenation lost continuity")
            seg = seg[1:]
        states.extend(seg)
    walk_p = [s[0] for s in states]
    walk_q = [s[1] for s in states]
    awp = AvoidWalkPair(z, (cycle[0], zbar), walk_p, walk_q)
    err = walk_pair_error(H, awp)
    if err is not None:
        raise InternalError(f"disagreement walks fail verification: {err}")
    return awp


def build_Z(H: TypedGraph, z: int, Y: set[int]) -> list[int]:
    """Non-inverting set: everything z does not see, plus one side of Y."""
    from .edgetypes import EdgeType

    n = H.graph.n
    closed_z = H.graph.closed_neighborhood(z)
    zset = sorted(set(range(n)) - closed_z | set(Y))
    if not zset:
        raise InternalError("non-inverting set came out empty")
    pairing = circular_pairs(H).partner
    inz = set(zset)
    for u in range(n):
        if (u in inz) == (pairing[u] in inz):
            raise InternalError(f"pair {u},{pairing[u]} not split by Z")
    for i, u in enumerate(zset):
        for v in zset[i + 1:]:
            if H.types[u, v] == EdgeType.OVERLAP2:
                raise InternalError(f"2-overlap edge {u},{v} inside Z")
    return zset
