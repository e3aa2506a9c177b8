"""Exact solver for bilevel interval selection under sum objectives.

A prefix dynamic program over the end-sorted intervals.  For a prefix
ending in a leader interval the usual take-or-skip recursion applies.  For
a prefix ending in a follower interval, the optimum is decomposed at the
last leader interval of the joint solution: everything before that
interval's latest disjoint predecessor is a smaller prefix of the same
problem, and the follower fills the region after it with his own optimal
selection, which the leader cannot influence.  Runs in polynomial time
(the follower-block computations dominate).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    BilevelOutcome,
    IntervalInstance,
    Owner,
    Setting,
    Variant,
    Objective,
    make_outcome,
)
from .errors import CorruptTables, IndexOutOfRange
from .follower import perturb, react_intervals
from .single_level import SortedIntervals, frank_dp, sort_and_index


@dataclass
class DpTables:
    """Prefix optima plus the records needed to rebuild a witness.

    ``opt[k]`` is the leader's optimal value on the first ``k`` intervals
    in end order.  ``choice[k]`` records how it was reached: ``("take",)``
    or ``("skip",)`` for a leader interval, ``("block", j)`` for a follower
    interval where ``j`` is the position of the last leader interval used
    (0 for none).  ``sol_leader_weight`` caches the leader-weight of the
    follower's optimal block per ``(j, k)`` pair.

    ``opt`` need not be monotone: extending the prefix by a follower
    interval can reshuffle the follower's selection against the leader.
    """

    sorted_intervals: SortedIntervals
    setting: Setting
    opt: list[int] = field(default_factory=list)
    choice: dict[int, tuple] = field(default_factory=dict)
    sol_leader_weight: dict[tuple[int, int], int] = field(default_factory=dict)
    block_sets: dict[tuple[int, int], frozenset[int]] = field(default_factory=dict)


def follower_block(
    instance: IntervalInstance,
    ordered: SortedIntervals,
    j: int,
    k: int,
    setting: Setting,
) -> tuple[int, frozenset[int]]:
    """The follower's optimal selection in the window after position ``j``.

    Candidates are the follower intervals at positions ``j+1..k`` that do
    not meet interval ``j`` (every candidate ends at or after interval
    ``j`` does, so disjointness reduces to starting at or after its end;
    ``j = 0`` is the sentinel and excludes nothing).  Returns the block's
    total leader weight and the block itself, computed with perturbed
    weights so ties already respect the setting.
    """
    n = len(ordered)
    if not (0 <= j < k <= n):
        raise IndexOutOfRange(f"need 0 <= j < k <= {n}, got j={j}, k={k}")
    if j > 0 and instance.by_id[ordered.order[j - 1]].owner is not Owner.LEADER:
        raise IndexOutOfRange(f"position {j} is not a leader interval")
    cutoff = None if j == 0 else instance.by_id[ordered.order[j - 1]].end
    window = [
        iid
        for iid in ordered.order[j:k]
        if instance.by_id[iid].owner is Owner.FOLLOWER
        and (cutoff is None or instance.by_id[iid].start >= cutoff)
    ]
    _, block = frank_dp(instance, perturb(instance, setting), window)
    return sum(instance.by_id[iid].wl for iid in block), block


def compute_tables(instance: IntervalInstance, setting: Setting) -> DpTables:
    """Fill the prefix-optimum tables bottom-up."""
    ordered = sort_and_index(instance)
    tables = DpTables(sorted_intervals=ordered, setting=setting)
    n = len(ordered)
    opt = [0] * (n + 1)
    prev = ordered.prev_disjoint
    leader_positions: list[int] = []

    def block_weight(j: int, k: int) -> int:
        key = (j, k)
        if key not in tables.sol_leader_weight:
            weight, block = follower_block(instance, ordered, j, k, setting)
            tables.sol_leader_weight[key] = weight
            tables.block_sets[key] = block
        return tables.sol_leader_weight[key]

    for k in range(1, n + 1):
        interval = instance.by_id[ordered.order[k - 1]]
        if interval.owner is Owner.LEADER:
            take = interval.wl + opt[prev[k]]
            if take > opt[k - 1]:
                opt[k] = take
                tables.choice[k] = ("take",)
            else:
                opt[k] = opt[k - 1]
                tables.choice[k] = ("skip",)
            leader_positions.append(k)
        else:
            best, best_j = None, None
            for j in [0, *leader_positions]:
                wl_j = 0 if j == 0 else instance.by_id[ordered.order[j - 1]].wl
                value = opt[prev[j]] + wl_j + block_weight(j, k)
                if best is None or value > best:
                    best, best_j = value, j
            opt[k] = best
            tables.choice[k] = ("block", best_j)
    tables.opt = opt
    return tables


def reconstruct(
    tables: DpTables, instance: IntervalInstance, setting: Setting
) -> tuple[frozenset[int], frozenset[int]]:
    """Rebuild a witness leader action from the backtracking records and
    recompute the follower's reaction to it on the full instance.

    Each record is cross-checked against the stored optima; a mismatch
    raises ``CorruptTables``.
    """
    ordered = tables.sorted_intervals
    prev = ordered.prev_disjoint
    opt = tables.opt
    leader: set[int] = set()
    k = len(ordered)
    while k > 0:
        record = tables.choice.get(k)
        if record is None:
            raise CorruptTables(f"no record for position {k}")
        interval = instance.by_id[ordered.order[k - 1]]
        if record[0] == "take":
            if opt[k] != interval.wl + opt[prev[k]]:
                raise CorruptTables(f"take record at {k} contradicts optima")
            leader.add(interval.id)
            k = prev[k]
        elif record[0] == "skip":
            if opt[k] != opt[k - 1]:
                raise CorruptTables(f"skip record at {k} contradicts optima")
            k -= 1
        else:
            j = record[1]
            wl_j = 0 if j == 0 else instance.by_id[ordered.order[j - 1]].wl
            cached = tables.sol_leader_weight.get((j, k))
            if cached is None or opt[k] != opt[prev[j]] + wl_j + cached:
                raise CorruptTables(f"block record at {k} contradicts optima")
            if j == 0:
                break
            leader.add(ordered.order[j - 1])
            k = prev[j]
    lset = frozenset(leader)
    return lset, react_intervals(instance, lset, setting)


def solve_bisel(instance: IntervalInstance, setting: Setting) -> BilevelOutcome:
    """Optimal bilevel interval selection under sum objectives."""
    if not len(instance):
        variant = Variant(Objective.SUM, Objective.SUM, setting)
        return make_outcome(instance, variant, frozenset(), frozenset())
    tables = compute_tables(instance, setting)
    leader, follower = reconstruct(tables, instance, setting)
    variant = Variant(Objective.SUM, Objective.SUM, setting)
    return make_outcome(instance, variant, leader, follower)
