"""Forcing machinery on edge-labelled graphs.

A labelled graph carries a {NonEdge, Overlap, Inclusion} label per vertex
pair plus a transitive orientation of its inclusion edges.  The labels are
data: they may come from an ambient graph and need not agree with the
neighborhoods of the labelled graph itself.

Ordered pairs with Overlap or NonEdge labels force each other: (x,z) and
(y,z) must orient the same way whenever the edge xy avoids z.  The
connected classes of this forcing relation drive the construction of an
interval ordering, recursing on modules (vertex sets seen uniformly from
outside), or fail by exhibiting a pair forced into both orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Optional

import numpy as np

from .edgetypes import EdgeType, InternalError, TypedGraph

Pair = tuple[int, int]


class Label(IntEnum):
    NONEDGE = 0
    OVERLAP = 1
    INCLUSION = 2


class DeltaInvertiblePair(Exception):
    """A pair is forced into both orientations; no interval ordering exists.

    chain is a forcing sequence of ordered pairs from .pair to its reversal,
    each consecutive two related by a single step.
    """

    def __init__(self, pair: Pair, chain: list[Pair]):
        super().__init__(f"pair {pair} is forced onto its own reversal")
        self.pair = pair
        self.chain = chain


class NonUniformQuotientLabel(InternalError):
    pass


class TournamentNotTransitive(InternalError):
    pass


@dataclass(frozen=True)
class LabelledGraph:
    n: int
    labels: np.ndarray  # int8 (n, n), symmetric, diagonal INCLUSION
    inside: np.ndarray  # bool (n, n); inside[u,v]: v's interval must sit inside u's

    def __post_init__(self):
        lb, ins = self.labels, self.inside
        if not np.array_equal(lb, lb.T):
            raise ValueError("labels must be symmetric")
        if self.n and not (lb.diagonal() == Label.INCLUSION).all():
            raise ValueError("loops must be labelled inclusion")
        incl = (lb == Label.INCLUSION) & ~np.eye(self.n, dtype=bool)
        if not np.array_equal(incl, ins | ins.T):
            raise ValueError("orientation must cover exactly the inclusion edges")
        if (ins & ins.T).any():
            raise ValueError("orientation must be antisymmetric")
        via = (ins.astype(np.int8) @ ins.astype(np.int8)) > 0
        if (via & ~ins).any():
            raise ValueError("orientation must be transitive")

    def label(self, u: int, v: int) -> Label:
        return Label(int(self.labels[u, v]))

    def induced(self, vertices: list[int]) -> "LabelledGraph":
        idx = np.array(vertices, dtype=int)
        if len(vertices) == 0:
            return LabelledGraph(0, np.zeros((0, 0), np.int8), np.zeros((0, 0), bool))
        return LabelledGraph(len(vertices), self.labels[np.ix_(idx, idx)],
                             self.inside[np.ix_(idx, idx)])


def labelled_from_typed(T: TypedGraph, vertices: list[int]) -> LabelledGraph:
    """Restrict a typed graph to a vertex subset, keeping the ambient types.

    1-overlap and 2-overlap collapse to Overlap; inclusion edges are
    oriented by the ambient closed-neighborhood containment.
    """
    idx = np.array(vertices, dtype=int)
    k = len(vertices)
    if k == 0:
        return LabelledGraph(0, np.zeros((0, 0), np.int8), np.zeros((0, 0), bool))
    t = T.types[np.ix_(idx, idx)]
    labels = np.zeros((k, k), dtype=np.int8)
    labels[(t == EdgeType.OVERLAP1) | (t == EdgeType.OVERLAP2)] = Label.OVERLAP
    labels[t == EdgeType.INCLUSION] = Label.INCLUSION
    incl = (labels == Label.INCLUSION) & ~np.eye(k, dtype=bool)
    inside = incl & T.contains[np.ix_(idx, idx)]
    if not np.array_equal(incl, inside | inside.T):
        raise InternalError("ambient containment does not orient an inclusion edge")
    return LabelledGraph(k, labels, inside)


def avoid_cube(L: LabelledGraph) -> np.ndarray:
    """cube[x,y,z] = the edge xy exists and label-avoids z (loops x=y allowed)."""
    edge = L.labels != Label.NONEDGE  # diagonal True: loops
    ni = L.labels != Label.INCLUSION  # diagonal False: z never avoids its loop
    ov = L.labels == Label.OVERLAP
    cube = (edge[:, :, None] & ni[:, None, :] & ni[None, :, :]
            & ~(ov[:, None, :] & ov[None, :, :] & ov[:, :, None]))
    return cube


def label_avoids(L: LabelledGraph, x: int, y: int, z: int) -> bool:
    if x != y and L.labels[x, y] == Label.NONEDGE:
        return False
    if L.labels[x, z] == Label.INCLUSION or L.labels[y, z] == Label.INCLUSION:
        return False
    if z in (x, y):
        return False
    if (L.labels[x, z] == Label.OVERLAP and L.labels[y, z] == Label.OVERLAP
            and x != y and L.labels[x, y] == Label.OVERLAP):
        return False
    return True


def delta_step(L: LabelledGraph, p: Pair, q: Pair) -> bool:
    """Single forcing step between two ordered pairs sharing a coordinate."""
    if p[1] == q[1] and label_avoids(L, p[0], q[0], p[1]):
        return True
    if p[0] == q[0] and label_avoids(L, p[1], q[1], p[0]):
        return True
    return False


@dataclass(frozen=True)
class PairClass:
    id: int
    pairs: frozenset[Pair]
    inverse_id: int


@dataclass
class DeltaClasses:
    classes: list[PairClass]
    class_of: dict[Pair, int]
    parent: dict[Pair, Optional[Pair]] = field(default_factory=dict)

    def chain(self, p: Pair, q: Pair) -> list[Pair]:
        """Forcing chain from p to q inside their common class."""
        if self.class_of[p] != self.class_of[q]:
            raise ValueError("pairs lie in different classes")

        def to_root(r: Pair) -> list[Pair]:
            path = [r]
            while self.parent[path[-1]] is not None:
                path.append(self.parent[path[-1]])
            return path

        a, b = to_root(p), to_root(q)
        while len(a) > 1 and len(b) > 1 and a[-2] == b[-2]:
            a.pop()
            b.pop()
        return a + b[-2::-1]


def span(c: PairClass) -> frozenset[int]:
    return frozenset(v for p in c.pairs for v in p)


def implication_classes(L: LabelledGraph) -> DeltaClasses:
    """Partition the ordered Overlap/NonEdge pairs into forcing classes.

    Breadth-first closure of delta_step, seeded in lexicographic order; a
    BFS forest is kept so chains between class members can be replayed.
    """
    n = L.n
    cube = avoid_cube(L)
    active = [(int(a), int(b)) for a in range(n) for b in range(n)
              if a != b and L.labels[a, b] != Label.INCLUSION]
    class_of: dict[Pair, int] = {}
    parent: dict[Pair, Optional[Pair]] = {}
    classes: list[frozenset[Pair]] = []
    for seed in active:
        if seed in class_of:
            continue
        cid = len(classes)
        class_of[seed] = cid
        parent[seed] = None
        queue = [seed]
        members = [seed]
        while queue:
            a, b = queue.pop(0)
            # (a,b) -> (c,b) when edge ac avoids b; -> (a,c) when bc avoids a
            for c in np.flatnonzero(cube[a, :, b]).tolist():
                nxt = (c, b)
                if nxt not in class_of:
                    class_of[nxt] = cid
                    parent[nxt] = (a, b)
                    queue.append(nxt)
                    members.append(nxt)
            for c in np.flatnonzero(cube[b, :, a]).tolist():
                nxt = (a, c)
                if nxt not in class_of:
                    class_of[nxt] = cid
                    parent[nxt] = (a, b)
                    queue.append(nxt)
                    members.append(nxt)
        classes.append(frozenset(members))
    out = []
    for cid, members in enumerate(classes):
        a, b = min(members)
        out.append(PairClass(cid, members, class_of[(b, a)]))
    return DeltaClasses(out, class_of, parent)


@dataclass(frozen=True)
class Orientation:
    order: list[int]
    oriented: frozenset[Pair]  # one direction per Overlap/NonEdge pair


def _containment_order(L: LabelledGraph) -> list[int]:
    # all pairs inclusion-labelled: 'inside' is a transitive tournament
    deg = L.inside.sum(axis=1)
    order = sorted(range(L.n), key=lambda u: (-int(deg[u]), u))
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if not L.inside[u, v]:
                raise TournamentNotTransitive(f"containment not total at {u},{v}")
    return order


def _order_vertices(L: LabelledGraph) -> list[int]:
    n = L.n
    if n <= 1:
        return list(range(n))
    cls = implication_classes(L)
    if not cls.classes:
        return _containment_order(L)
    for c in cls.classes:
        if c.inverse_id == c.id:
            pair = min(c.pairs)
            raise DeltaInvertiblePair(pair, cls.chain(pair, (pair[1], pair[0])))
    spans = [(len(span(c)), min(c.pairs), c) for c in cls.classes]
    proper = [s for s in spans if s[0] < n]
    if proper:
        _, _, c = min(proper, key=lambda s: (s[0], s[1]))
        return _splice_module(L, sorted(span(c)))
    # every class spans all vertices: a single class and its inverse remain
    if len(cls.classes) != 2 or cls.classes[0].inverse_id != 1:
        raise InternalError("expected exactly one spanning class up to reversal")
    least = min(min(c.pairs) for c in cls.classes)
    chosen = cls.classes[cls.class_of[least]]
    rel = np.zeros((n, n), dtype=bool)
    for a, b in chosen.pairs:
        rel[a, b] = True
    if (rel & rel.T).any():
        raise InternalError("spanning class contains a pair and its reversal")
    tournament = rel | L.inside
    deg = tournament.sum(axis=1)
    order = sorted(range(n), key=lambda u: (-int(deg[u]), u))
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if not tournament[u, v]:
                raise TournamentNotTransitive(f"orientation cyclic at {u},{v}")
    return order


def _splice_module(L: LabelledGraph, module: list[int]) -> list[int]:
    """Order L by contracting the module to its least vertex and recursing."""
    rep = module[0]
    inside_set = set(module)
    outside = [v for v in range(L.n) if v not in inside_set]
    for x in outside:
        labs = {int(L.labels[x, s]) for s in module}
        if len(labs) != 1:
            raise NonUniformQuotientLabel(f"vertex {x} sees mixed labels in module")
        if labs == {int(Label.INCLUSION)}:
            dirs = {bool(L.inside[x, s]) for s in module}
            if len(dirs) != 1:
                raise NonUniformQuotientLabel(f"vertex {x} sees mixed directions")
    quotient_verts = sorted(outside + [rep])
    qorder = _order_vertices(L.induced(quotient_verts))
    sorder = _order_vertices(L.induced(module))
    order: list[int] = []
    for qi in qorder:
        v = quotient_verts[qi]
        if v == rep:
            order.extend(module[si] for si in sorder)
        else:
            order.append(v)
    return order


def interval_orientation(L: LabelledGraph) -> Orientation:
    """Construct an interval orientation, or fail with DeltaInvertiblePair.

    The derived linear order, together with the inclusion orientation, is
    checked to be a transitive tournament that never puts an avoided vertex
    between the ends of the edge it avoids.
    """
    order = _order_vertices(L)
    pos = np.empty(L.n, dtype=int)
    for i, v in enumerate(order):
        pos[v] = i
    inside_bad = L.inside & (pos[:, None] > pos[None, :])
    if inside_bad.any():
        u, v = map(int, np.argwhere(inside_bad)[0])
        raise TournamentNotTransitive(f"order contradicts containment at {u},{v}")
    if L.n:
        cube = avoid_cube(L)
        px, py, pz = pos[:, None, None], pos[None, :, None], pos[None, None, :]
        between = ((px < pz) & (pz < py)) | ((py < pz) & (pz < px))
        bad = cube & between
        if bad.any():
            x, y, z = map(int, np.argwhere(bad)[0])
            raise TournamentNotTransitive(f"{z} placed between avoided edge {x},{y}")
    oriented = frozenset(
        (u, v) if pos[u] < pos[v] else (v, u)
        for u in range(L.n) for v in range(u + 1, L.n)
        if L.labels[u, v] != Label.INCLUSION)
    violation = ordering_violation(L, order)
    if violation is not None:
        raise InternalError(f"constructed order fails pattern check: {violation}")
    return Orientation(order, oriented)


def ordering_violation(L: LabelledGraph, order: list[int]) -> Optional[tuple]:
    """First forbidden triple in the candidate interval ordering, if any."""
    n = L.n
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    idx = np.array(order, dtype=int)
    lab = L.labels[np.ix_(idx, idx)]
    non = lab == Label.NONEDGE
    ov = lab == Label.OVERLAP
    inc = lab == Label.INCLUSION
    np.fill_diagonal(inc, False)
    edge = ov | inc
    for bpos in range(1, n - 1):
        a_rng = slice(0, bpos)
        c_rng = slice(bpos + 1, n)
        an, ao, ai = non[a_rng, bpos], ov[a_rng, bpos], inc[a_rng, bpos]
        cn, co, ci = non[bpos, c_rng], ov[bpos, c_rng], inc[bpos, c_rng]
        ac_n = non[a_rng, c_rng]
        ac_e = edge[a_rng, c_rng]
        ac_o = ov[a_rng, c_rng]
        ac_i = inc[a_rng, c_rng]
        pats = [
            (an[:, None] & ac_e, "i"),
            (ai[:, None] & ac_n & (co | ci)[None, :], "ii"),
            (ao[:, None] & ac_e & cn[None, :], "iii"),
            (ao[:, None] & co[None, :] & ac_i, "iv"),
            (ai[:, None] & ci[None, :] & ac_o, "v"),
        ]
        for m, name in pats:
            if m.any():
                ai_, ci_ = map(int, np.argwhere(m)[0])
                return (name, order[ai_], order[bpos], order[ci_ + bpos + 1])
    return None


def verify_interval_ordering(L: LabelledGraph, order: list[int]) -> bool:
    return ordering_violation(L, order) is None
