import itertools
import random

import numpy as np
import pytest

from circarc.delta import (DeltaInvertiblePair, Label, LabelledGraph,
                           delta_step, implication_classes,
                           interval_orientation, label_avoids,
                           labelled_from_typed, ordering_violation, span,
                           verify_interval_ordering)
from circarc.edgetypes import classify_all, complete
from circarc.knotting import build_Z, disagreement_partition
from conftest import make_labelled


def overlap_path():
    # ab Overlap, bc Overlap, ac NonEdge
    return make_labelled(3, overlaps=[(0, 1), (1, 2)])


def random_labelled(rng, n):
    """Random consistent labelling: an edge may carry the Inclusion label
    only when the containment it asserts holds in the edge graph itself,
    and the chosen inclusion edges are closed under chaining."""
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            adj[u, v] = adj[v, u] = rng.random() < 0.5
    closed = adj.copy()
    np.fill_diagonal(closed, True)

    def outer(u, v):
        # u's closed neighborhood covers v's, ties broken by index
        if (closed[v] & ~closed[u]).any():
            return False
        return not np.array_equal(closed[u], closed[v]) or u < v

    inside = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(n):
            if u != v and adj[u, v] and outer(u, v) and rng.random() < 0.5:
                inside[u, v] = True
    changed = True
    while changed:
        changed = False
        for a, b, c in itertools.permutations(range(n), 3):
            if inside[a, b] and inside[b, c] and not inside[a, c]:
                inside[a, c] = True
                changed = True
    labels = np.where(adj, Label.OVERLAP, Label.NONEDGE).astype(np.int8)
    labels[inside | inside.T] = Label.INCLUSION
    np.fill_diagonal(labels, Label.INCLUSION)
    return LabelledGraph(n, labels, inside)


class TestDeltaStep:
    def test_avoiding_edge_forces(self):
        L = overlap_path()
        assert delta_step(L, (0, 2), (1, 2))

    def test_loop_step(self):
        L = overlap_path()
        assert delta_step(L, (0, 1), (0, 1))
        assert not delta_step(L, (0, 0), (0, 0))

    def test_double_overlap_blocks(self):
        L = make_labelled(3, overlaps=[(0, 1), (1, 2), (0, 2)])
        assert not delta_step(L, (0, 2), (1, 2))

    def test_inclusion_end_blocks(self):
        L = make_labelled(3, overlaps=[(0, 1)], inclusions=[(1, 2)])
        assert not label_avoids(L, 0, 1, 2)


class TestImplicationClasses:
    def test_single_overlap_edge(self):
        L = make_labelled(2, overlaps=[(0, 1)])
        cls = implication_classes(L)
        assert len(cls.classes) == 2
        sets = {c.pairs for c in cls.classes}
        assert sets == {frozenset({(0, 1)}), frozenset({(1, 0)})}
        assert cls.classes[0].inverse_id == 1

    def test_overlap_path_closure(self):
        cls = implication_classes(overlap_path())
        sets = {c.pairs for c in cls.classes}
        assert frozenset({(0, 1), (0, 2), (1, 2)}) in sets
        assert frozenset({(1, 0), (2, 0), (2, 1)}) in sets

    def test_all_inclusion_no_classes(self):
        L = make_labelled(3, inclusions=[(0, 1), (1, 2), (0, 2)])
        assert implication_classes(L).classes == []

    def test_partition_and_inverse_bijection(self):
        rng = random.Random(5)
        for _ in range(30):
            L = random_labelled(rng, rng.randint(2, 5))
            cls = implication_classes(L)
            seen = set()
            for c in cls.classes:
                assert not (c.pairs & seen)
                seen |= c.pairs
                inv = cls.classes[c.inverse_id]
                assert inv.pairs == frozenset((b, a) for a, b in c.pairs)
            want = {(a, b) for a in range(L.n) for b in range(L.n)
                    if a != b and L.labels[a, b] != Label.INCLUSION}
            assert seen == want

    def test_chain_replay(self):
        L = overlap_path()
        cls = implication_classes(L)
        chain = cls.chain((0, 1), (1, 2))
        assert chain[0] == (0, 1) and chain[-1] == (1, 2)
        for p, q in zip(chain, chain[1:]):
            assert delta_step(L, p, q)


class TestSpan:
    def test_singleton(self):
        L = make_labelled(2, overlaps=[(0, 1)])
        c = implication_classes(L).classes[0]
        assert span(c) == {0, 1}

    def test_closure_span(self):
        cls = implication_classes(overlap_path())
        big = max(cls.classes, key=lambda c: len(c.pairs))
        assert span(big) == {0, 1, 2}

    def test_span_equals_inverse_span(self):
        rng = random.Random(11)
        for _ in range(20):
            L = random_labelled(rng, rng.randint(2, 5))
            cls = implication_classes(L)
            for c in cls.classes:
                assert span(c) == span(cls.classes[c.inverse_id])


class TestOrdering:
    def test_overlap_path_order(self):
        L = overlap_path()
        orient = interval_orientation(L)
        assert orient.order in ([0, 1, 2], [2, 1, 0])
        assert verify_interval_ordering(L, orient.order)

    def test_all_inclusion(self):
        L = make_labelled(3, inclusions=[(0, 1), (1, 2), (0, 2)])
        orient = interval_orientation(L)
        assert orient.order == [0, 1, 2]
        assert orient.oriented == frozenset()

    def test_invertible_pair_from_pipeline_labels(self, biclaw):
        # the forcing in the biclaw completion must trip an invertible pair
        H, _ = complete(classify_all(biclaw))
        z = min(range(H.graph.n), key=lambda v: (H.graph.degree(v), v))
        side = disagreement_partition(H, z)
        zset = build_Z(H, z, side)
        L = labelled_from_typed(H, zset)
        with pytest.raises(DeltaInvertiblePair) as exc:
            interval_orientation(L)
        a, b = exc.value.pair
        chain = exc.value.chain
        assert chain[0] == (a, b) and chain[-1] == (b, a)
        for p, q in zip(chain, chain[1:]):
            assert delta_step(L, p, q)

    def test_verify_examples(self):
        L = overlap_path()
        assert verify_interval_ordering(L, [0, 1, 2])
        violation = ordering_violation(L, [1, 0, 2])
        assert violation is not None and violation[0] == "iii"

    def test_single_vertex(self):
        L = make_labelled(1)
        assert verify_interval_ordering(L, [0])
        assert interval_orientation(L).order == [0]

    def test_module_recursion(self):
        # vertices 2,3 overlap each other and look identical from 0,1
        L = make_labelled(4, overlaps=[(2, 3)],
                          inclusions=[(0, 2), (0, 3), (1, 2), (1, 3), (0, 1)])
        orient = interval_orientation(L)
        assert verify_interval_ordering(L, orient.order)

    def test_brute_force_agreement(self):
        rng = random.Random(23)
        for _ in range(150):
            L = random_labelled(rng, rng.randint(1, 5))
            try:
                interval_orientation(L)
                ok = True
            except DeltaInvertiblePair:
                ok = False
            brute = any(
                verify_interval_ordering(L, list(p))
                for p in itertools.permutations(range(L.n)))
            assert ok == brute


class TestDisjointClassSpans:
    def test_disjoint_class_avoids_shared_vertex(self):
        # three distinct classes meeting pairwise cannot all touch one vertex
        rng = random.Random(31)
        for _ in range(40):
            L = random_labelled(rng, rng.randint(3, 5))
            cls = implication_classes(L)
            for a in range(L.n):
                for b in range(L.n):
                    for c in range(L.n):
                        if len({a, b, c}) != 3:
                            continue
                        pab, pbc, pac = (a, b), (b, c), (a, c)
                        if not all(p in cls.class_of for p in (pab, pbc, pac)):
                            continue
                        C = cls.class_of[pab]
                        A = cls.class_of[pbc]
                        B = cls.class_of[pac]
                        if A in (B, C, cls.classes[C].inverse_id):
                            continue
                        touched = span(cls.classes[A])
                        assert a not in touched
