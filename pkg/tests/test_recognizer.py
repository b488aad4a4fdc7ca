import itertools

from circarc.arcs import ArcRepresentation
from circarc.graph import build_graph
from circarc.knotting import AvoidWalkPair
from circarc.recognizer import (NEGATIVE, POSITIVE, Certificate, recognize,
                                verify_negative, verify_positive)


class TestRecognize:
    def test_biclaw_negative(self, biclaw):
        cert = recognize(biclaw)
        assert cert.verdict == NEGATIVE
        assert cert.completion.graph.n == 14
        assert verify_negative(biclaw, cert)

    def test_near_biclaw_positive(self, near_biclaw):
        cert = recognize(near_biclaw)
        assert cert.verdict == POSITIVE
        assert verify_positive(near_biclaw, cert)

    def test_c4_positive(self, c4):
        cert = recognize(c4)
        assert cert.verdict == POSITIVE
        assert verify_positive(c4, cert)
        # the four arcs jointly cover the whole circle
        m = cert.arcs.circle_size
        assert all(any(cert.arcs.covers(v, s) for v in range(4))
                   for s in range(m))

    def test_c4_plus_isolated_negative(self):
        G = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3)])
        cert = recognize(G)
        assert cert.verdict == NEGATIVE
        assert verify_negative(G, cert)

    def test_trivial_graphs(self):
        for n in (0, 1, 2):
            edges = [(0, 1)] if n == 2 else []
            G = build_graph(n, edges)
            cert = recognize(G)
            assert cert.verdict == POSITIVE
            assert verify_positive(G, cert)

    def test_deterministic(self, biclaw, near_biclaw):
        from circarc.formats import serialize_certificate
        for G in (biclaw, near_biclaw):
            a, b = recognize(G), recognize(G)
            assert serialize_certificate(G, a) == serialize_certificate(G, b)


class TestVerifyPositive:
    def test_wrong_graph(self, c4, p4):
        cert = recognize(c4)
        assert not verify_positive(p4, cert)

    def test_single_vertex(self):
        G = build_graph(1, [])
        cert = Certificate(POSITIVE, recognize(G).reduction,
                           arcs=ArcRepresentation(4, {0: (0, 1)}))
        assert verify_positive(G, cert)

    def test_verdict_mismatch(self, biclaw):
        assert not verify_positive(biclaw, recognize(biclaw))


class TestVerifyNegative:
    def test_perturbed_walk_rejected(self, biclaw):
        cert = recognize(biclaw)
        awp = cert.obstruction
        bad_walk = list(awp.walk_p)
        bad_walk[0] = awp.anchor
        broken = Certificate(NEGATIVE, cert.reduction,
                             completion=cert.completion,
                             pairing=cert.pairing,
                             obstruction=AvoidWalkPair(
                                 awp.anchor, (awp.anchor, awp.pair[1]),
                                 bad_walk, awp.walk_q))
        assert not verify_negative(biclaw, broken)

    def test_hand_certificate(self, biclaw):
        # hand-built obstruction, independent of what recognize emits
        cert = recognize(biclaw)
        H = cert.completion
        idx = H.graph.index_of
        hand = Certificate(
            NEGATIVE, cert.reduction, completion=H, pairing=cert.pairing,
            obstruction=AvoidWalkPair(
                idx("c"), (idx("a"), idx("b")),
                [idx(v) for v in ["a", "f", "d", "d", "g", "b"]],
                [idx(v) for v in ["b", "b", "b", "~h", "a", "a"]]))
        assert verify_negative(biclaw, hand)

    def test_verdict_mismatch(self, c4):
        assert not verify_negative(c4, recognize(c4))


class TestOracleAgreementSmall:
    def test_all_four_vertex_graphs(self):
        from circarc.oracle import oracle_is_ca
        pairs = list(itertools.combinations(range(4), 2))
        for mask in range(1 << len(pairs)):
            G = build_graph(4, [p for i, p in enumerate(pairs)
                                if mask >> i & 1])
            cert = recognize(G)
            assert (cert.verdict == POSITIVE) == oracle_is_ca(G)
            if cert.verdict == POSITIVE:
                assert verify_positive(G, cert)
            else:
                assert verify_negative(G, cert)
