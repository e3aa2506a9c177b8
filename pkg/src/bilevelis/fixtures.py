"""Small shared instances used by tests and documentation examples."""

from .core import BisGraph, Interval, IntervalInstance, Owner, Vertex

L = Owner.LEADER
F = Owner.FOLLOWER


def g1() -> BisGraph:
    """Three-vertex path: leader endpoints, follower middle."""
    return BisGraph(
        vertices=(
            Vertex(0, L, wl=5, wf=1),  # v0
            Vertex(1, F, wl=3, wf=4),  # v1
            Vertex(2, L, wl=2, wf=7),  # v2
        ),
        edges=((0, 1), (1, 2)),
    )


def g2() -> BisGraph:
    """Bipartite 4-cycle a-b-c-d with alternating ownership."""
    return BisGraph(
        vertices=(
            Vertex(0, L, wl=3, wf=2),  # a
            Vertex(1, F, wl=1, wf=5),  # b
            Vertex(2, L, wl=4, wf=1),  # c
            Vertex(3, F, wl=2, wf=5),  # d
        ),
        edges=((0, 1), (1, 2), (2, 3), (3, 0)),
    )


def i1() -> IntervalInstance:
    return IntervalInstance(
        (
            Interval(1, 0, 2, L, wl=4, wf=1),
            Interval(2, 1, 3, F, wl=0, wf=5),
            Interval(3, 3, 4, F, wl=2, wf=1),
        )
    )


def i2() -> IntervalInstance:
    """Two coinciding follower intervals, no leader intervals."""
    return IntervalInstance(
        (
            Interval(1, 0, 1, F, wl=3, wf=2),
            Interval(2, 0, 1, F, wl=0, wf=2),
        )
    )


def showcase() -> IntervalInstance:
    """Twelve-interval showcase instance.

    Endpoints are scaled by 100 so that every coordinate is an integer;
    scaling is monotone, so the overlap structure is unchanged.
    """
    data = [
        # (id, start, end, owner, wl, wf)
        (1, 0, 100, F, 9, 3),
        (2, 200, 400, L, 1, 5),
        (3, 300, 455, F, 2, 2),
        (4, 0, 500, F, 5, 4),
        (5, 400, 600, F, 3, 1),
        (6, 550, 700, L, 4, 8),
        (7, 700, 900, L, 10, 2),
        (8, 800, 1000, F, 8, 9),
        (9, 700, 1100, F, 2, 5),
        (10, 1100, 1200, L, 0, 10),
        (11, 1100, 1400, L, 3, 4),
        (12, 1300, 1500, F, 7, 2),
    ]
    return IntervalInstance(
        tuple(Interval(i, a, b, o, wl, wf) for i, a, b, o, wl, wf in data)
    )
