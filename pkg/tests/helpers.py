"""Shared test utilities: reference implementations and enumerators.

Everything here is deliberately independent of the package's own search
code: subsets come from itertools, optima from plain max() over fully
materialized candidate lists.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

from bilevelis.core import (
    BisGraph,
    CompositeWeight,
    IntervalInstance,
    intervals_pairwise_disjoint,
    is_independent,
    weight_sum,
)
from bilevelis.reductions import B2cnfFormula, Literal


def powerset(items):
    items = list(items)
    for size in range(len(items) + 1):
        yield from (frozenset(c) for c in combinations(items, size))


def reference_best_disjoint(instance: IntervalInstance, weight, restrict):
    """Brute-force maximizer over all pairwise-disjoint subsets."""
    best_val, best_set = CompositeWeight.ZERO, frozenset()
    for subset in powerset(restrict):
        if not intervals_pairwise_disjoint(instance, subset):
            continue
        val = weight_sum(weight[i] for i in subset)
        if val > best_val:
            best_val, best_set = val, subset
    return best_val, best_set


def reference_mwis(graph: BisGraph, weight, restrict):
    """Brute-force maximizer over all independent subsets."""
    best_val, best_set = CompositeWeight.ZERO, frozenset()
    for subset in powerset(restrict):
        if not is_independent(graph, subset):
            continue
        val = weight_sum(weight[v] for v in subset)
        if val > best_val:
            best_val, best_set = val, subset
    return best_val, best_set


def random_leader_action(rng: random.Random, instance) -> frozenset[int]:
    """A random feasible leader action (independent / pairwise disjoint)."""
    chosen: list[int] = []
    ids = list(instance.leader_ids)
    rng.shuffle(ids)
    for candidate in ids:
        if rng.random() < 0.5:
            continue
        if isinstance(instance, BisGraph):
            ok = not any(u in instance.adjacency[candidate] for u in chosen)
        else:
            item = instance.by_id[candidate]
            ok = not any(item.overlaps(instance.by_id[u]) for u in chosen)
        if ok:
            chosen.append(candidate)
    return frozenset(chosen)


def connected_graphs_up_to_iso(max_n: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """All connected simple graphs with at most ``max_n`` vertices, one
    representative per isomorphism class (canonicalized by minimizing the
    relabeled edge set over all vertex permutations)."""
    from itertools import permutations

    out: list[tuple[int, list[tuple[int, int]]]] = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if not _connected(n, edges):
                continue
            canon = min(
                tuple(
                    sorted(
                        (min(p[u], p[v]), max(p[u], p[v])) for u, v in edges
                    )
                )
                for p in permutations(range(n))
            )
            if canon not in seen:
                seen.add(canon)
                out.append((n, list(canon)))
    return out


def _connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def all_small_b2cnf(max_clauses: int) -> list[B2cnfFormula]:
    """Every formula over x1, y1 with up to ``max_clauses`` clauses, where
    a clause is a multiset of three of the four possible literals."""
    literals = [
        Literal("X", 1, False),
        Literal("X", 1, True),
        Literal("Y", 1, False),
        Literal("Y", 1, True),
    ]
    clause_patterns = list(combinations_with_replacement(literals, 3))
    formulas = []
    for m in range(1, max_clauses + 1):
        for clause_mix in combinations_with_replacement(clause_patterns, m):
            formulas.append(B2cnfFormula(1, 1, tuple(clause_mix)))
    return formulas
