"""Intervals from an interval ordering, and the lift onto a circle.

The builder processes the ordering right to left, always giving the new
leftmost vertex a fresh global-minimum left endpoint and a right endpoint
squeezed into a fresh slot just past everything it must reach.  Endpoint
positions are integers 1..2n, all distinct.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arcs import ArcRepresentation
from .delta import Label, LabelledGraph, ordering_violation
from .edgetypes import InternalError, TypedGraph


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: dict[int, tuple[int, int]]  # vertex -> (l, r), l < r


def _consistency_error(L: LabelledGraph, iv: dict[int, tuple[int, int]]) -> str | None:
    for u in range(L.n):
        lu, ru = iv[u]
        if not lu < ru:
            return f"degenerate interval for {u}"
        for v in range(u + 1, L.n):
            lv, rv = iv[v]
            disjoint = ru < lv or rv < lu
            contained = (lu < lv and rv < ru) or (lv < lu and ru < rv)
            lab = L.label(u, v)
            if lab == Label.NONEDGE and not disjoint:
                return f"{u},{v} labelled non-edge but intervals meet"
            if lab == Label.OVERLAP and (disjoint or contained):
                return f"{u},{v} labelled overlap but intervals do not overlap"
            if lab == Label.INCLUSION:
                want = (lu < lv and rv < ru) if L.inside[u, v] else (lv < lu and ru < rv)
                if not want:
                    return f"{u},{v} containment direction wrong"
    return None


def build_intervals(L: LabelledGraph, order: list[int]) -> IntervalRepresentation:
    """Realize an interval ordering as concrete integer intervals.

    Left endpoints come out in exactly the given order.  The result is
    checked against the labels; a failure means the ordering was not an
    interval ordering and is reported as an internal error.
    """
    bad = ordering_violation(L, order)
    if bad is not None:
        raise ValueError(f"not an interval ordering: pattern {bad}")
    seq: list[tuple[str, int]] = []
    for k in range(L.n - 1, -1, -1):
        x = order[k]
        seq.insert(0, ("L", x))
        suffix = order[k:]
        y = x
        for v in suffix:
            if L.labels[x, v] != Label.NONEDGE:
                y = v
        incl = [v for v in suffix if v != x and L.labels[x, v] == Label.INCLUSION]
        for v in incl:
            if not L.inside[x, v]:
                raise InternalError(
                    f"vertex {v} inclusion-tied to leftmost {x} but not inside it")
        t = seq.index(("L", y))
        for v in incl:
            t = max(t, seq.index(("R", v)))
        seq.insert(t + 1, ("R", x))
    iv: dict[int, tuple[int, int]] = {}
    for pos, (side, v) in enumerate(seq, start=1):
        if side == "L":
            iv[v] = (pos, 0)
        else:
            iv[v] = (iv[v][0], pos)
    err = _consistency_error(L, iv)
    if err is not None:
        raise InternalError(f"built intervals inconsistent with labels: {err}")
    lefts = sorted(iv, key=lambda v: iv[v][0])
    if lefts != order:
        raise InternalError("left endpoints out of order")
    return IntervalRepresentation(iv)


def lift_to_circle(ivals: IntervalRepresentation, zmap: list[int],
                   pairing: dict[int, int], H: TypedGraph) -> ArcRepresentation:
    """Lift intervals on one side of every circular pair to arcs for all of H.

    zmap sends the interval vertices (0..|Z|-1) to their H indices.  Each
    lifted interval is scaled by 4 onto a circle of 8|Z|+8 slots; the
    partner of each vertex gets the complementary arc shrunk by one slot at
    both ends.  The result must verify against H, else the pipeline is
    broken.
    """
    from .arcs import representation_error

    k = len(zmap)
    m = 8 * k + 8
    arcs: dict[int, tuple[int, int]] = {}
    for i, u in enumerate(zmap):
        l, r = ivals.intervals[i]
        arcs[u] = (4 * l, 4 * r)
        arcs[pairing[u]] = ((4 * r + 1) % m, (4 * l - 1) % m)
    if set(arcs) != set(range(H.graph.n)):
        raise InternalError("lift does not cover the completion")
    err = representation_error(H.graph, ArcRepresentation(m, arcs))
    if err is not None:
        raise InternalError(f"lifted arcs fail verification: {err}")
    return ArcRepresentation(m, arcs)
