"""Desk-scale sweeps over seeded and exhaustive samples."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from base import instance, lookup_pair, lookup_subcategory
from cli import fork_identity_target
from construct import phi_precover, phiL_precover, psi_preenvelope, stalk_converse_probe
from ext import adjunction_check, euler_ext1, ext1_dim, projective_present, verify_orthogonality
from quiver import Root, fork_quiver, has_oriented_cycle, left_filtration, rootedness
from rep import Representation, class_membership, cokernel_at, phi_class, psi_class, structure_maps, vertexwise_class
from samples import all_objects, all_representations, random_quivers, random_representations

PAIRS = [("finvect", "all_all"), ("dual", "free_all"), ("dual", "all_free")]


def test_fork_filtration_and_trace_shape(vect, fork):
    assert left_filtration(fork).levels[1:] == (("1", "2"), ("1", "2", "3"), ("1", "2", "3", "4"))
    c = phi_precover(fork_identity_target(vect), lookup_pair(vect, "all_all"))
    assert [level.changed for level in c.trace.levels[1:]] == [("3",), ("4",)]
    assert class_membership(c.result.middle, phi_class(lambda m: True))


def test_rootedness_equivalence():
    quivers = random_quivers(10_000, seed=2024)
    for q in quivers:
        acyclic = not has_oriented_cycle(q)
        assert rootedness(q, Root.LEFT).rooted == acyclic
        assert rootedness(q, Root.RIGHT).rooted == acyclic


@settings(deadline=None, max_examples=30)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_rootedness_equivalence_by_seed(seed):
    for q in random_quivers(5, seed=seed):
        assert rootedness(q, Root.LEFT).rooted == (not has_oriented_cycle(q))


def test_ext_agrees_with_euler_form_on_a2(vect, a2):
    reps = list(all_representations(a2, vect, 2))
    presentations = [projective_present(m) for m in reps]
    for m, pres in zip(reps, presentations):
        for n in reps:
            assert ext1_dim(m, n, pres) == euler_ext1(m, n)


def test_ext_agrees_with_euler_form_on_every_small_fork_representation(vect, fork):
    reps = list(all_representations(fork, vect, 1))
    assert len(reps) == 35
    for m in reps:
        pres = projective_present(m)
        for n in reps:
            assert ext1_dim(m, n, pres) == euler_ext1(m, n)


def test_ext_agrees_with_euler_form_on_sampled_fork_representations(vect, fork):
    reps = random_representations(fork, vect, 2, 40, seed=3)
    for m in reps:
        pres = projective_present(m)
        for n in reps:
            assert ext1_dim(m, n, pres) == euler_ext1(m, n)


@pytest.mark.parametrize("kind,name", PAIRS)
def test_cotorsion_sweep_over_builtin_pairs(kind, name, a2, fork, vect, dual):
    cat = vect if kind == "finvect" else dual
    pair = lookup_pair(cat, name)
    for q in (a2, fork):
        for x in random_representations(q, cat, 2, 34, seed=100):
            pre = phi_precover(x, pair)
            env = psi_preenvelope(x, pair)
            assert pre.result.is_exact() and env.result.is_exact()
            assert class_membership(pre.result.middle, phi_class(pair.member_x))
            assert class_membership(pre.result.sub, vertexwise_class(pair.member_y))
            assert class_membership(env.result.middle, psi_class(pair.member_y))
            assert class_membership(env.result.quotient, vertexwise_class(pair.member_x))


def test_constructed_sub_is_orthogonal_to_phi_all(dual, a2):
    pair = lookup_pair(dual, "all_free")
    ts = [t for t in all_representations(a2, dual, 2) if class_membership(t, phi_class(lambda m: True))]
    presentations = [projective_present(t) for t in ts]
    for x in random_representations(a2, dual, 2, 10, seed=5):
        b = phi_precover(x, pair).result.sub
        for t, pres in zip(ts, presentations):
            assert ext1_dim(t, b, pres) == 0


@pytest.mark.parametrize("name", ["free_all", "all_free"])
def test_psi_middles_are_orthogonal_to_left_valued_reps(name, dual, a2):
    pair = lookup_pair(dual, name)
    left = [m for m in all_representations(a2, dual, 2) if class_membership(m, vertexwise_class(pair.member_x))]
    right = [psi_preenvelope(x, pair).result.middle for x in random_representations(a2, dual, 2, 8, seed=32)]
    assert left and right
    report = verify_orthogonality(left, right)
    assert report.passed, f"Ext¹ {report.witness} should vanish"


@pytest.fixture(scope="module")
def dual_fork_reps() -> list[Representation]:
    return list(all_representations(fork_quiver(), instance("dual", 2), 2))


def test_phi_free_members_have_free_values(dual_fork_reps):
    dual = instance("dual", 2)
    members = [x for x in dual_fork_reps if class_membership(x, phi_class(dual.is_free))]
    assert members, "f_1(Λ) alone is a member"
    for x in members:
        assert class_membership(x, vertexwise_class(dual.is_free)), f"{x} is in Φ(Free) with a non-free value"


def test_psi_free_members_have_free_values(dual_fork_reps):
    dual = instance("dual", 2)
    members = [x for x in dual_fork_reps if class_membership(x, psi_class(dual.is_free))]
    assert members, "g_4(Λ) alone is a member"
    for x in members:
        assert class_membership(x, vertexwise_class(dual.is_free)), f"{x} is in Ψ(Free) with a non-free value"


def test_free_precovers_are_projective(dual, a2):
    pair = lookup_pair(dual, "free_all")
    ns = list(all_representations(a2, dual, 2))
    for x in random_representations(a2, dual, 2, 6, seed=8):
        a = phi_precover(x, pair).result.middle
        pres = projective_present(a)
        assert all(ext1_dim(a, n, pres) == 0 for n in ns)


def test_even_dimension_sweep_on_fork(vect, fork):
    even = lookup_subcategory(vect, "even_dim")
    for x in random_representations(fork, vect, 2, 100, seed=77):
        c = phiL_precover(x, even)
        assert c.result.is_exact()
        for v in fork.vertices:
            assert structure_maps(c.result.middle, v).phi.is_mono()
            assert cokernel_at(c.result.middle, v).dim % 2 == 0
        for level in c.trace.levels[1:]:
            assert all(step.splitting is not None for step in level.steps)


def test_converse_probe_at_every_vertex(dual, a2):
    pair = lookup_pair(dual, "free_all")
    k = dual.simple()
    for i in a2.vertices:
        probe = stalk_converse_probe(i, k, pair, a2)
        assert dual.ses_iso(probe.base_cover, dual.free_cover(k))


def test_adjunction_on_every_a2_representation(vect, dual, a2):
    for cat in (vect, dual):
        ys = list(all_representations(a2, cat, 2))
        for m in all_objects(cat, 2):
            for i in a2.vertices:
                for y in ys:
                    assert adjunction_check(m, i, y), f"Ext¹(f_{i}({m}), {y}) differs from Ext¹({m}, y({i}))"


def test_adjunction_on_fork_representations_of_small_dimension(vect, fork):
    ys = list(all_representations(fork, vect, 1))
    for m in all_objects(vect, 2):
        for i in fork.vertices:
            assert all(adjunction_check(m, i, y) for y in ys)
