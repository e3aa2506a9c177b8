"""Exact follower-reaction oracles.

Given a leader action, each oracle returns one optimal follower reaction
for its variant.  Reactions returned by different oracles (or by the brute
enumerator) may differ as sets, but both players' objective values of the
union are always identical.
"""

from __future__ import annotations

from typing import Iterable

from .core import (
    BisGraph,
    CompositeWeight,
    Instance,
    IntervalInstance,
    Objective,
    Owner,
    Setting,
    Variant,
)
from .errors import Infeasible, NotBipartite, OracleUnavailable
from .single_level import frank_dp, mwis_bipartite


def perturb(
    instance: Instance, setting: Setting
) -> dict[int, CompositeWeight]:
    """Tie-breaking weights: follower weight primary, leader weight as a
    signed secondary (positive when optimistic, negative when pessimistic).

    Maximizing these lexicographic weights maximizes the follower's sum
    first and then pushes the leader's sum in the direction the setting
    dictates, which is exactly the infinitesimal-epsilon weight update.
    """
    sign = 1 if setting is Setting.OPTIMISTIC else -1
    if isinstance(instance, BisGraph):
        items = instance.vertices
    else:
        items = instance.intervals
    return {it.id: CompositeWeight(it.wf, sign * it.wl) for it in items}


def _check_leader_action(instance: Instance, leader_set: frozenset[int]) -> None:
    for iid in leader_set:
        item = instance.item(iid)
        if item.owner is not Owner.LEADER:
            raise ValueError(f"item {iid} is not leader-owned")


def react_intervals(
    instance: IntervalInstance, leader_set: Iterable[int], setting: Setting
) -> frozenset[int]:
    """Follower reaction for interval instances under sum objectives.

    The follower solves interval selection over his intervals that avoid
    the leader's, with perturbed weights.  May be empty; intervals carry no
    nonemptiness constraint.
    """
    lset = frozenset(leader_set)
    _check_leader_action(instance, lset)
    taken = [instance.by_id[i] for i in lset]
    free = [
        iv.id
        for iv in instance.intervals
        if iv.owner is Owner.FOLLOWER
        and not any(iv.overlaps(t) for t in taken)
    ]
    _, chosen = frank_dp(instance, perturb(instance, setting), free)
    return chosen


def _free_follower_vertices(
    graph: BisGraph, leader_set: frozenset[int]
) -> list[int]:
    blocked = graph.neighbors_of(leader_set)
    return [v for v in graph.follower_ids if v not in blocked]


def react_sum_graph(
    graph: BisGraph,
    leader_set: Iterable[int],
    setting: Setting,
    require_nonempty: bool | None = None,
) -> frozenset[int]:
    """Sum-objective follower on a graph: perturbed max-weight independent
    set over the follower vertices not adjacent to the leader's action.

    The free subgraph must be bipartite.  When the leader plays the empty
    action the joint solution must be nonempty, so the reaction is forced
    nonempty (infeasible if the graph has no follower vertices at all).
    """
    lset = frozenset(leader_set)
    _check_leader_action(graph, lset)
    if require_nonempty is None:
        require_nonempty = not lset
    if not lset and not graph.follower_ids:
        raise Infeasible("empty leader action with no follower vertices")
    free = _free_follower_vertices(graph, lset)
    if not free:
        if require_nonempty:
            raise Infeasible("no follower vertex available for a nonempty reaction")
        return frozenset()
    _, chosen = mwis_bipartite(
        graph, perturb(graph, setting), free, require_nonempty=require_nonempty
    )
    return chosen


def _single(
    graph: BisGraph, candidates: Iterable[int], prefer_high_wl: bool
) -> frozenset[int]:
    """One follower vertex maximizing wf; wl breaks ties per setting,
    vertex id breaks the rest."""
    sign = 1 if prefer_high_wl else -1
    best = max(
        candidates,
        key=lambda v: (graph.item(v).wf, sign * graph.item(v).wl, -v),
    )
    return frozenset({best})


def react_bottleneck(
    graph: BisGraph, leader_set: Iterable[int], variant: Variant
) -> frozenset[int]:
    """Closed-form reactions for a bottleneck-objective follower.

    With a nonempty leader action the follower's value is capped at the
    smallest follower-weight in the action, so every reaction drawn from
    non-adjacent vertices at or above that cap is optimal for him:

    * leader sum, optimistic: the max-leader-weight independent set among
      the eligible vertices (helps the leader as much as possible).
    * leader sum, pessimistic: the empty set (never helps).
    * leader bottleneck, optimistic: the empty set (cannot raise a min).
    * leader bottleneck, pessimistic: a single eligible vertex of minimum
      leader weight (drags the leader's min down as far as possible).

    With the empty leader action the reaction must be nonempty: a single
    vertex of maximum follower weight, tie-broken on leader weight per the
    setting; for (sum, optimistic) a max-leader-weight nonempty independent
    set inside the max-follower-weight class.
    """
    if variant.follower_obj is not Objective.BOTTLENECK:
        raise ValueError("react_bottleneck requires a bottleneck follower objective")
    lset = frozenset(leader_set)
    _check_leader_action(graph, lset)
    optimistic = variant.setting is Setting.OPTIMISTIC
    leader_sum = variant.leader_obj is Objective.SUM

    if not lset:
        if not graph.follower_ids:
            raise Infeasible("empty leader action with no follower vertices")
        top = max(graph.item(v).wf for v in graph.follower_ids)
        pool = [v for v in graph.follower_ids if graph.item(v).wf == top]
        if leader_sum and optimistic:
            _, chosen = mwis_bipartite(
                graph,
                {v: CompositeWeight(graph.item(v).wl, 0) for v in pool},
                pool,
                require_nonempty=True,
            )
            return chosen
        return _single(graph, pool, prefer_high_wl=optimistic)

    cap = min(graph.item(v).wf for v in lset)
    eligible = [
        v for v in _free_follower_vertices(graph, lset)
        if graph.item(v).wf >= cap
    ]
    if leader_sum and optimistic:
        if not eligible:
            return frozenset()
        _, chosen = mwis_bipartite(
            graph,
            {v: CompositeWeight(graph.item(v).wl, 0) for v in eligible},
            eligible,
        )
        return chosen
    if not leader_sum and not optimistic:
        if not eligible:
            return frozenset()
        worst = min(eligible, key=lambda v: (graph.item(v).wl, v))
        return frozenset({worst})
    return frozenset()


def _max_follower_sum(
    graph: BisGraph, pool: Iterable[int]
) -> tuple[int, frozenset[int]]:
    weights = {v: CompositeWeight(graph.item(v).wf, 0) for v in pool}
    value, chosen = mwis_bipartite(graph, weights, pool)
    return value.primary, chosen


def react_sum_graph_bottleneck(
    graph: BisGraph, leader_set: Iterable[int], setting: Setting
) -> frozenset[int]:
    """Sum-objective follower whose ties must be broken on the leader's
    bottleneck value (bipartite graphs).

    The epsilon perturbation does not apply here: among his maximum-sum
    reactions the follower must extremize the minimum leader weight, not
    the leader's sum.  Optimistically that is the highest leader-weight
    threshold whose surviving vertices still admit a maximum-sum reaction;
    pessimistically, the cheapest single vertex that some maximum-sum
    reaction contains.  Both scans need one independent-set computation per
    candidate, so they stay polynomial.
    """
    lset = frozenset(leader_set)
    _check_leader_action(graph, lset)
    if not lset and not graph.follower_ids:
        raise Infeasible("empty leader action with no follower vertices")
    free = _free_follower_vertices(graph, lset)
    if not free:
        if not lset:
            raise Infeasible("no follower vertex available for a nonempty reaction")
        return frozenset()
    target, _ = _max_follower_sum(graph, free)
    wl = {v: graph.item(v).wl for v in free}

    if target == 0:
        # Every reaction sums to zero for the follower, so all subsets of
        # the free set tie; only the leader-bottleneck tie-break matters.
        if setting is Setting.OPTIMISTIC:
            if lset:
                return frozenset()
            best = max(free, key=lambda v: (wl[v], -v))
            return frozenset({best})
        worst = min(free, key=lambda v: (wl[v], v))
        return frozenset({worst})

    if setting is Setting.OPTIMISTIC:
        for threshold in sorted(set(wl.values()), reverse=True):
            pool = [v for v in free if wl[v] >= threshold]
            value, chosen = _max_follower_sum(graph, pool)
            if value == target:
                return chosen
        raise AssertionError("threshold scan must hit the unrestricted optimum")

    for forced in sorted(free, key=lambda v: (wl[v], v)):
        rest = [
            v for v in free
            if v != forced and v not in graph.adjacency[forced]
        ]
        value, chosen = _max_follower_sum(graph, rest)
        if value + graph.item(forced).wf == target:
            return chosen | {forced}
    raise AssertionError("some maximum-sum reaction must contain a vertex")


def react(
    instance: Instance, leader_set: Iterable[int], variant: Variant
) -> frozenset[int]:
    """Dispatch to the reaction oracle matching the variant and instance.

    Raises ``OracleUnavailable`` where no polynomial oracle exists: a
    sum-objective follower whose free subgraph is not two-colorable, an
    optimistic sum-objective leader over a non-two-colorable eligible
    pool, or bottleneck objectives on intervals.  Callers should fall back
    to the brute enumerator there.
    """
    if isinstance(instance, IntervalInstance):
        if (
            variant.follower_obj is Objective.SUM
            and variant.leader_obj is Objective.SUM
        ):
            return react_intervals(instance, leader_set, variant.setting)
        raise OracleUnavailable(
            f"no interval oracle for variant {variant.code}"
        )
    try:
        if variant.follower_obj is Objective.BOTTLENECK:
            return react_bottleneck(instance, leader_set, variant)
        if variant.leader_obj is Objective.SUM:
            return react_sum_graph(instance, leader_set, variant.setting)
        return react_sum_graph_bottleneck(instance, leader_set, variant.setting)
    except NotBipartite as exc:
        raise OracleUnavailable(
            f"variant {variant.code} needs a two-colorable subgraph: {exc}"
        ) from exc
