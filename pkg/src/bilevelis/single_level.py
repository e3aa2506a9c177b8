"""Single-level subroutines.

Two exact maximizers over lexicographic weights: a dynamic program for
selecting pairwise-disjoint intervals, and a min-cut based maximum-weight
independent set solver for bipartite graphs.  Both are pure functions and
reentrant.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import BisGraph, CompositeWeight, IntervalInstance, weight_sum
from .errors import EmptyRestrict, NotBipartite


@dataclass(frozen=True)
class SortedIntervals:
    """Intervals arranged for the selection dynamic program.

    ``order`` lists interval ids by non-decreasing end point (ties broken
    by start, then id; equal-end intervals necessarily overlap, so the tie
    order is harmless).  Positions are 1-based; position 0 is a sentinel
    that ends before every real interval and carries zero weight.
    ``prev_disjoint[k]`` is the largest position below ``k`` whose interval
    ends at or before the start of interval ``k``, or 0 if none exists.
    """

    order: tuple[int, ...]
    prev_disjoint: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)


def sort_and_index(instance: IntervalInstance) -> SortedIntervals:
    """Sort intervals by end point and index each one's latest disjoint
    predecessor via binary search over the sorted end points."""
    items = sorted(instance.intervals, key=lambda iv: (iv.end, iv.start, iv.id))
    ends = [iv.end for iv in items]
    prev = [0]
    for k, iv in enumerate(items, start=1):
        prev.append(bisect.bisect_right(ends, iv.start, 0, k - 1))
    return SortedIntervals(tuple(iv.id for iv in items), tuple(prev))


def frank_dp(
    instance: IntervalInstance,
    weight: Mapping[int, CompositeWeight],
    restrict: Iterable[int],
) -> tuple[CompositeWeight, frozenset[int]]:
    """Maximum-weight set of pairwise-disjoint intervals within ``restrict``.

    Weights are lexicographic pairs summed componentwise; the classic
    take-or-skip recursion over end-sorted intervals applies unchanged
    because comparison of the pair sums is a total order.  Returns the
    optimal value and one optimal set (deterministic: skips on ties).
    """
    chosen_ids = set(restrict)
    for iid in chosen_ids:
        instance.item(iid)
    items = sorted(
        (instance.by_id[iid] for iid in chosen_ids),
        key=lambda iv: (iv.end, iv.start, iv.id),
    )
    ends = [iv.end for iv in items]
    n = len(items)
    prev = [0] * (n + 1)
    best = [CompositeWeight.ZERO] * (n + 1)
    take = [False] * (n + 1)
    for k in range(1, n + 1):
        prev[k] = bisect.bisect_right(ends, items[k - 1].start, 0, k - 1)
        with_k = best[prev[k]] + weight[items[k - 1].id]
        if with_k > best[k - 1]:
            best[k] = with_k
            take[k] = True
        else:
            best[k] = best[k - 1]
    chosen = []
    k = n
    while k > 0:
        if take[k]:
            chosen.append(items[k - 1].id)
            k = prev[k]
        else:
            k -= 1
    return best[n], frozenset(chosen)


def bipartition(
    graph: BisGraph, restrict: Iterable[int] | None = None
) -> tuple[frozenset[int], frozenset[int]]:
    """Two-color the induced subgraph, raising ``NotBipartite`` on an odd
    cycle.  Returns the two color classes."""
    nodes = set(graph.ids) if restrict is None else set(restrict)
    for vid in nodes:
        graph.item(vid)
    color: dict[int, int] = {}
    for start in sorted(nodes):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if v not in nodes:
                    continue
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotBipartite(
                        f"odd cycle through vertices {u} and {v}"
                    )
    sides = ({v for v, c in color.items() if c == 0},
             {v for v, c in color.items() if c == 1})
    return frozenset(sides[0]), frozenset(sides[1])


def is_bipartite(graph: BisGraph, restrict: Iterable[int] | None = None) -> bool:
    try:
        bipartition(graph, restrict)
        return True
    except NotBipartite:
        return False


class _MaxFlow:
    """Dinic's algorithm on integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u: int, t: int, limit: int, level, it) -> int:
        if u == t:
            return limit
        while it[u] < len(self.head[u]):
            eid = self.head[u][it[u]]
            v = self.to[eid]
            if self.cap[eid] > 0 and level[v] == level[u] + 1:
                got = self._push(u=v, t=t, limit=min(limit, self.cap[eid]),
                                 level=level, it=it)
                if got > 0:
                    self.cap[eid] -= got
                    self.cap[eid ^ 1] += got
                    return got
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.n
            while (got := self._push(s, t, 1 << 62, level, it)) > 0:
                flow += got
        return flow

    def reachable(self, s: int) -> set[int]:
        """Source side of the minimum cut after ``max_flow`` has run."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def mwis_bipartite(
    graph: BisGraph,
    weight: Mapping[int, CompositeWeight],
    restrict: Iterable[int],
    require_nonempty: bool = False,
) -> tuple[CompositeWeight, frozenset[int]]:
    """Maximum-weight independent set of a bipartite induced subgraph.

    Lexicographic weights are collapsed to single integers with a base
    exceeding the total |secondary| mass, which preserves the order of all
    achievable sums exactly.  The optimum is then the total positive weight
    minus a minimum s-t cut (source -> one side, other side -> sink,
    unbounded arcs across edges); the independent set is read off the cut.

    Vertices whose collapsed weight is non-positive can never improve the
    optimum and are dropped up front.  With ``require_nonempty`` an empty
    optimum is replaced by the best single vertex (when all weights are
    non-positive any optimal nonempty set is a single vertex).
    """
    nodes = set(restrict)
    for vid in nodes:
        graph.item(vid)
    if require_nonempty and not nodes:
        raise EmptyRestrict("nonempty selection requested from empty set")
    side_a, side_b = bipartition(graph, nodes)

    base = 1 + sum(abs(weight[v].secondary) for v in nodes)
    scaled = {v: weight[v].scaled(base) for v in nodes}
    keep = {v for v in nodes if scaled[v] > 0}

    index = {v: i for i, v in enumerate(sorted(keep))}
    source = len(index)
    sink = source + 1
    net = _MaxFlow(sink + 1)
    inf = 1 + sum(scaled[v] for v in keep)
    for v in sorted(keep):
        if v in side_a:
            net.add_edge(source, index[v], scaled[v])
        else:
            net.add_edge(index[v], sink, scaled[v])
    for u, v in graph.edges:
        if u in keep and v in keep:
            a, b = (u, v) if u in side_a else (v, u)
            if a in side_a and b in side_b:
                net.add_edge(index[a], index[b], inf)
    net.max_flow(source, sink)
    reach = net.reachable(source)
    chosen = {
        v
        for v in keep
        if (v in side_a and index[v] in reach)
        or (v in side_b and index[v] not in reach)
    }

    if require_nonempty and not chosen:
        best = max(nodes, key=lambda v: (weight[v], -v))
        chosen = {best}
    return weight_sum(weight[v] for v in chosen), frozenset(chosen)
