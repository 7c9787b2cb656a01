"""Tests for quiver.py"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import InputError, UnsupportedInputError
from quiver import (
    Quiver,
    Root,
    Side,
    enumerate_paths,
    has_oriented_cycle,
    incident_arrows,
    left_filtration,
    linear_quiver,
    opposite,
    require_rooted,
    right_filtration,
    rootedness,
    topological_order,
)
from samples import random_quivers


@st.composite
def quivers(draw, max_vertices: int = 5, max_arrows: int = 6) -> Quiver:
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertices = [str(k) for k in range(1, n + 1)]
    ends = st.tuples(st.sampled_from(vertices), st.sampled_from(vertices))
    pairs = draw(st.lists(ends, max_size=max_arrows))
    return Quiver.build(vertices, [(f"x{k}", s, t) for k, (s, t) in enumerate(pairs)])


def test_fork_filtration(fork):
    f = left_filtration(fork)
    assert f.levels == ((), ("1", "2"), ("1", "2", "3"), ("1", "2", "3", "4")), f"Unexpected levels {f.levels}"
    assert f.stabilized_at == 3
    assert f.added_at(2) == ("3",)
    assert f.added_at(3) == ("4",)
    assert f.added_at(4) == ()
    print("✓ Fork filtration test passed")


def test_right_filtration_of_fork(fork):
    f = right_filtration(fork)
    assert f.levels[1] == ("4",)
    assert f.levels[2] == ("3", "4")
    assert f.final == ("1", "2", "3", "4")


def test_loop_is_not_rooted(loop):
    verdict = rootedness(loop, Root.LEFT)
    assert not verdict.rooted
    assert verdict.filtration.levels == ((),)
    assert verdict.filtration.stabilized_at == 0
    with pytest.raises(UnsupportedInputError):
        require_rooted(loop, Root.RIGHT)


def test_incident_arrows_follow_declaration_order(fork):
    assert [a.id for a in incident_arrows(fork, "3", Side.INTO)] == ["a", "b"]
    assert [a.id for a in incident_arrows(fork, "3", Side.OUT_OF)] == ["c"]
    with pytest.raises(InputError):
        incident_arrows(fork, "9", Side.INTO)


def test_opposite_reverses_arrows(fork):
    op = opposite(fork)
    assert op.arrow("c").source == "4" and op.arrow("c").target == "3"
    assert opposite(op) == fork


def test_enumerate_paths():
    q = Quiver.build(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3"), ("d", "1", "3")])
    assert enumerate_paths(q, "1", "3") == [("a", "c"), ("b", "c"), ("d",)]
    assert enumerate_paths(q, "2", "2") == [()], "Only the trivial path from a vertex to itself"
    assert enumerate_paths(q, "3", "1") == []


def test_enumerate_paths_rejects_cycles(loop):
    with pytest.raises(UnsupportedInputError):
        enumerate_paths(loop, "v", "v")


def test_topological_order_breaks_ties_by_declaration():
    q = Quiver.build(["b", "a", "c"], [("x", "c", "a")])
    assert topological_order(q) == ("b", "c", "a")


def test_invalid_quivers():
    with pytest.raises(InputError):
        Quiver.build(["1", "1"])
    with pytest.raises(InputError):
        Quiver.build(["1"], [("a", "1", "2")])
    with pytest.raises(InputError):
        Quiver.build(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])


def test_linear_quiver_names():
    q = linear_quiver(3)
    assert q.vertices == ("1", "2", "3")
    assert [(a.id, a.source, a.target) for a in q.arrows] == [("a", "1", "2"), ("b", "2", "3")]


def test_long_linear_quiver_runs_past_the_alphabet():
    q = linear_quiver(30)
    assert len(q.arrows) == 29
    assert q.arrows[25].id == "z" and q.arrows[26].id == "v26" and q.arrows[28].id == "v28"
    assert left_filtration(q).stabilized_at == 30


@settings(deadline=None, max_examples=300)
@given(quivers())
def test_filtration_is_monotone_and_arrows_start_one_level_down(q):
    for f, qq in ((left_filtration(q), q), (right_filtration(q), opposite(q))):
        for alpha in range(f.stabilized_at):
            before, after = set(f.levels[alpha]), set(f.levels[alpha + 1])
            assert before <= after, f"V_{alpha} is not inside V_{alpha + 1}"
            for a in qq.arrows:
                if a.target in after:
                    assert a.source in before, f"Arrow {a.id} enters level {alpha + 1} from outside level {alpha}"


def test_rootedness_matches_cycle_search_on_samples():
    for q in random_quivers(300, seed=11):
        left = rootedness(q, Root.LEFT).rooted
        right = rootedness(q, Root.RIGHT).rooted
        assert left == right == (not has_oriented_cycle(q)), f"Disagreement on {q}"


if __name__ == "__main__":
    from quiver import fork_quiver, loop_quiver

    test_fork_filtration(fork_quiver())
    test_loop_is_not_rooted(loop_quiver())
    test_enumerate_paths()
    print("\nAll tests passed!")
