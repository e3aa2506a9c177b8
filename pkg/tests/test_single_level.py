import random

import pytest

from bilevelis.core import (
    BisGraph,
    CompositeWeight,
    Interval,
    IntervalInstance,
    Owner,
    Vertex,
    weight_sum,
)
from bilevelis.errors import EmptyRestrict, NotBipartite, UnknownId
from bilevelis.fixtures import g2, i1, i2
from bilevelis.randgen import gen_random_graph, gen_random_intervals
from bilevelis.single_level import (
    bipartition,
    frank_dp,
    is_bipartite,
    mwis_bipartite,
    sort_and_index,
)
from helpers import reference_best_disjoint, reference_mwis

LEAD, FOLL = Owner.LEADER, Owner.FOLLOWER


class TestSortAndIndex:
    def test_three_intervals(self):
        ordered = sort_and_index(i1())
        assert ordered.order == (1, 2, 3)
        assert ordered.prev_disjoint == (0, 0, 0, 2)

    def test_single_interval(self):
        inst = IntervalInstance((Interval(7, 5, 9, LEAD, 1, 1),))
        ordered = sort_and_index(inst)
        assert ordered.order == (7,)
        assert ordered.prev_disjoint == (0, 0)

    def test_touching_intervals_chain(self):
        inst = IntervalInstance(
            (Interval(0, 0, 3, LEAD, 1, 1), Interval(1, 3, 5, FOLL, 1, 1))
        )
        assert sort_and_index(inst).prev_disjoint == (0, 0, 1)

    def test_equal_ends_sorted_by_start_then_id(self):
        inst = IntervalInstance(
            (
                Interval(5, 2, 4, LEAD, 1, 1),
                Interval(3, 1, 4, LEAD, 1, 1),
                Interval(4, 1, 4, LEAD, 1, 1),
            )
        )
        assert sort_and_index(inst).order == (3, 4, 5)

    def test_invariants_on_random_instances(self):
        rng = random.Random(11)
        for trial in range(100):
            inst = gen_random_intervals(rng.randint(0, 14), 12, 0.5, 4, seed=trial)
            ordered = sort_and_index(inst)
            ends = [inst.by_id[i].end for i in ordered.order]
            assert ends == sorted(ends)
            for k in range(1, len(ordered) + 1):
                p = ordered.prev_disjoint[k]
                start_k = inst.by_id[ordered.order[k - 1]].start
                if p:
                    assert inst.by_id[ordered.order[p - 1]].end <= start_k
                if p < k - 1:
                    assert inst.by_id[ordered.order[p]].end > start_k


class TestFrankDp:
    def test_follower_pair_of_i1(self):
        weight = {i: CompositeWeight(iv.wf, 0) for i, iv in i1().by_id.items()}
        value, chosen = frank_dp(i1(), weight, {2, 3})
        assert value == CompositeWeight(6, 0)
        assert chosen == frozenset({2, 3})

    def test_empty_restrict(self):
        weight = {i: CompositeWeight(iv.wf, 0) for i, iv in i1().by_id.items()}
        assert frank_dp(i1(), weight, set()) == (CompositeWeight.ZERO, frozenset())

    def test_secondary_breaks_primary_tie(self):
        inst = i2()
        weight = {i: CompositeWeight(iv.wf, iv.wl) for i, iv in inst.by_id.items()}
        value, chosen = frank_dp(inst, weight, {1, 2})
        assert value == CompositeWeight(2, 3)
        assert chosen == frozenset({1})

    def test_unknown_id(self):
        with pytest.raises(UnknownId):
            frank_dp(i1(), {}, {42})

    @pytest.mark.parametrize("sign", [1, -1])
    def test_matches_reference_on_random_instances(self, sign):
        rng = random.Random(sign)
        for trial in range(250):
            inst = gen_random_intervals(
                rng.randint(0, 12), 15, 0.5, 6, seed=trial * 2 + (sign > 0)
            )
            weight = {
                i: CompositeWeight(iv.wf, sign * iv.wl)
                for i, iv in inst.by_id.items()
            }
            restrict = {i for i in inst.ids if rng.random() < 0.8}
            got_value, got_set = frank_dp(inst, weight, restrict)
            want_value, _ = reference_best_disjoint(inst, weight, restrict)
            assert got_value == want_value
            assert got_set <= restrict
            assert weight_sum(weight[i] for i in got_set) == got_value

    def test_scaled_integer_route_agrees(self):
        rng = random.Random(9)
        for trial in range(100):
            inst = gen_random_intervals(rng.randint(1, 10), 12, 0.5, 6, seed=trial)
            base = 1 + sum(iv.wl for iv in inst.intervals)
            for sign in (1, -1):
                weight = {
                    i: CompositeWeight(iv.wf, sign * iv.wl)
                    for i, iv in inst.by_id.items()
                }
                value, chosen = frank_dp(inst, weight, set(inst.ids))
                best_scaled = max(
                    weight_sum(weight[i] for i in subset).scaled(base)
                    for _, subset in [reference_best_disjoint(inst, weight, set(inst.ids))]
                )
                assert value.scaled(base) == best_scaled


class TestMwisBipartite:
    def test_four_cycle(self):
        graph = g2()
        weight = {v: CompositeWeight(graph.item(v).wl, 0) for v in graph.ids}
        value, chosen = mwis_bipartite(graph, weight, set(graph.ids))
        assert value == CompositeWeight(7, 0)
        assert chosen == frozenset({0, 2})

    def test_single_vertex(self):
        graph = BisGraph((Vertex(0, LEAD, 9, 1),), ())
        value, chosen = mwis_bipartite(
            graph, {0: CompositeWeight(9, 0)}, {0}
        )
        assert (value, chosen) == (CompositeWeight(9, 0), frozenset({0}))

    def test_all_zero_weights_with_nonempty_requirement(self):
        graph = g2()
        weight = {v: CompositeWeight.ZERO for v in graph.ids}
        value, chosen = mwis_bipartite(
            graph, weight, set(graph.ids), require_nonempty=True
        )
        assert value == CompositeWeight.ZERO
        assert len(chosen) >= 1

    def test_not_bipartite(self):
        triangle = BisGraph(
            tuple(Vertex(i, LEAD, 1, 1) for i in range(3)),
            ((0, 1), (1, 2), (0, 2)),
        )
        with pytest.raises(NotBipartite):
            mwis_bipartite(
                triangle,
                {v: CompositeWeight(1, 0) for v in range(3)},
                {0, 1, 2},
            )

    def test_empty_restrict_with_nonempty_requirement(self):
        with pytest.raises(EmptyRestrict):
            mwis_bipartite(g2(), {}, set(), require_nonempty=True)

    @pytest.mark.parametrize("sign", [0, 1, -1])
    def test_matches_reference_on_random_bipartite_graphs(self, sign):
        rng = random.Random(sign + 3)
        for trial in range(250):
            graph = gen_random_graph(
                rng.randint(0, 14), rng.uniform(0.1, 0.6), 0.5, 6,
                bipartite=True, seed=trial * 3 + sign,
            )
            weight = {
                v: CompositeWeight(graph.item(v).wf, sign * graph.item(v).wl)
                for v in graph.ids
            }
            restrict = {v for v in graph.ids if rng.random() < 0.8}
            got_value, got_set = mwis_bipartite(graph, weight, restrict)
            want_value, _ = reference_mwis(graph, weight, restrict)
            assert got_value == want_value
            assert got_set <= restrict
            assert weight_sum(weight[v] for v in got_set) == got_value

    def test_nonempty_matches_restricted_reference(self):
        # all-nonpositive weights force the single-vertex fallback
        rng = random.Random(17)
        for trial in range(100):
            graph = gen_random_graph(
                rng.randint(1, 10), 0.3, 0.5, 4, bipartite=True, seed=trial
            )
            weight = {
                v: CompositeWeight(0, -graph.item(v).wl) for v in graph.ids
            }
            value, chosen = mwis_bipartite(
                graph, weight, set(graph.ids), require_nonempty=True
            )
            assert chosen
            best_single = max(weight[v] for v in graph.ids)
            assert value == best_single


class TestBipartition:
    def test_even_cycle(self):
        side_a, side_b = bipartition(g2())
        assert {frozenset(side_a), frozenset(side_b)} == {
            frozenset({0, 2}), frozenset({1, 3})
        }

    def test_restriction_can_make_bipartite(self):
        triangle = BisGraph(
            tuple(Vertex(i, LEAD, 1, 1) for i in range(3)),
            ((0, 1), (1, 2), (0, 2)),
        )
        assert not is_bipartite(triangle)
        assert is_bipartite(triangle, {0, 1})
