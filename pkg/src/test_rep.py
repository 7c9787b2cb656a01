"""Tests for rep.py"""

import numpy as np
import pytest

import fp
from base import lookup_pair
from errors import InputError
from ext import base_ext1_dim
from rep import (
    Approx,
    Representation,
    RepMorphism,
    RepSES,
    class_membership,
    cokernel_at,
    evaluate,
    f_free,
    g_cofree,
    hom_rep_basis,
    identity,
    kernel_at,
    phi_class,
    psi_class,
    rep_cokernel,
    rep_direct_sum,
    rep_kernel,
    ses_check,
    stalk,
    structure_maps,
    vertexwise_approx,
    vertexwise_class,
    zero_representation,
)
from samples import all_objects, random_invertible, random_representations


def identity_fork(cat, fork):
    k = cat.simple()
    return Representation.build(fork, cat, {v: k for v in fork.vertices}, {a.id: [[1]] for a in fork.arrows})


def test_build_defaults_to_zero_maps(vect, a2):
    x = Representation.build(a2, vect, {"1": vect.space(1), "2": vect.space(2)})
    assert np.array_equal(x.maps["a"].matrix, np.zeros((2, 1)))
    with pytest.raises(InputError):
        Representation.build(a2, vect, {"1": vect.space(1)})
    with pytest.raises(InputError):
        Representation.build(a2, vect, {"1": vect.space(1), "2": vect.space(1)}, {"z": [[1]]})


def test_naturality_is_enforced(vect, a2):
    k = vect.simple()
    x = Representation.build(a2, vect, {"1": k, "2": k}, {"a": [[1]]})
    y = Representation.build(a2, vect, {"1": k, "2": k}, {"a": [[0]]})
    with pytest.raises(InputError):
        RepMorphism(x, y, {"1": vect.identity(k), "2": vect.identity(k)})


def test_structure_maps_on_fork(vect, fork):
    x = identity_fork(vect, fork)
    sm = structure_maps(x, "3")
    assert sm.phi.matrix.tolist() == [[1, 1]]
    assert sm.cokernel.dim == 0 and not sm.phi.is_mono()
    assert cokernel_at(x, "1").dim == 1, "A source has C_i = X(i)"
    assert kernel_at(x, "4").dim == 1, "A sink has K_i = X(i)"
    assert kernel_at(x, "3").dim == 0


def test_class_membership_witness(vect, fork):
    x = identity_fork(vect, fork)
    phi = class_membership(x, phi_class(lambda m: True))
    assert not phi and phi.witness.vertex == "3"
    assert class_membership(x, psi_class(lambda m: True)), "Every ψ_i of the identity fork is epi"
    assert class_membership(x, vertexwise_class(lambda m: m.dim == 1))


def test_psi_membership_witness_names_first_failure(vect, a2):
    k = vect.simple()
    x = Representation.build(a2, vect, {"1": k, "2": k})
    result = class_membership(x, psi_class(lambda m: True))
    assert not result and result.witness.vertex == "1"
    assert "not epi" in result.witness.reason


def test_f_free_and_g_cofree(dual, fork):
    lam = dual.lam()
    f3 = f_free(lam, "3", fork)
    assert f3.dims() == (0, 0, 2, 2)
    f1 = f_free(lam, "1", fork)
    assert f1.dims() == (2, 0, 2, 2)
    g3 = g_cofree(lam, "3", fork)
    assert g3.dims() == (2, 2, 2, 0)
    assert class_membership(f1, phi_class(dual.is_free))
    assert class_membership(g3, psi_class(dual.is_free))


def test_cokernel_of_free_is_stalk(dual, fork):
    """C_j(f_i(M)) is M at j = i and zero elsewhere."""
    for m in all_objects(dual, 2):
        for i in fork.vertices:
            x = f_free(m, i, fork)
            for j in fork.vertices:
                expected = m if j == i else dual.zero()
                assert dual.is_iso(cokernel_at(x, j), expected)
                assert dual.is_iso(kernel_at(g_cofree(m, i, fork), j), expected)


def test_free_is_left_adjoint_to_evaluation(vect, dual, a2, fork):
    for cat, q in ((vect, a2), (dual, fork)):
        for y in random_representations(q, cat, 2, 6, seed=5):
            for m in all_objects(cat, 2):
                for i in q.vertices:
                    upstairs = len(hom_rep_basis(f_free(m, i, q), y))
                    downstairs = len(cat.hom_basis(m, evaluate(y, i)))
                    assert upstairs == downstairs, f"Hom(f_{i}(m), y) has the wrong dimension"


def test_hom_rep_basis_is_natural(dual, a2):
    for x, y in zip(random_representations(a2, dual, 2, 5, seed=1), random_representations(a2, dual, 2, 5, seed=2)):
        for f in hom_rep_basis(x, y):
            assert f.domain == x and f.codomain == y
    lam = dual.lam()
    s = stalk(lam, "1", a2)
    assert len(hom_rep_basis(s, s)) == 2


def change_basis(x: Representation, rng: np.random.Generator) -> Representation:
    """An isomorphic copy of x: a random invertible g_v at every vertex conjugates N_v and every arrow map."""
    cat, p = x.category, x.category.p
    g = {v: random_invertible(m.dim, p, rng) for v, m in x.objects.items()}
    g_inv = {v: fp.inverse(g[v], p) for v in g}
    objects = {v: cat.obj(fp.matmul(fp.matmul(g[v], m.nil, p), g_inv[v], p)) for v, m in x.objects.items()}
    matrices = {
        a.id: fp.matmul(fp.matmul(g[a.target], x.maps[a.id].matrix, p), g_inv[a.source], p) for a in x.quiver.arrows
    }
    return Representation.build(x.quiver, cat, objects, matrices)


def test_hom_dimension_survives_change_of_basis(dual, a2, fork):
    rng = np.random.default_rng(17)
    for q in (a2, fork):
        xs = random_representations(q, dual, 2, 6, seed=40)
        ys = random_representations(q, dual, 2, 6, seed=41)
        for x, y in zip(xs, ys):
            before = len(hom_rep_basis(x, y))
            after = len(hom_rep_basis(change_basis(x, rng), change_basis(y, rng)))
            assert before == after, f"dim Hom changed from {before} to {after} under a change of basis"


def test_direct_sum_and_identity(vect, fork):
    x = identity_fork(vect, fork)
    ds = rep_direct_sum([x, x])
    assert ds.rep.dims() == (2, 2, 2, 2)
    assert ds.projections[0] @ ds.injections[0] == identity(x)
    empty = rep_direct_sum([], fork, vect)
    assert empty.rep == zero_representation(fork, vect)


def test_kernel_and_cokernel_sequences(dual, a2):
    for x in random_representations(a2, dual, 2, 10, seed=3):
        ds = rep_direct_sum([x, x])
        fold = RepMorphism(ds.rep, x, {
            v: ds.projections[0].components[v] + ds.projections[1].components[v] for v in a2.vertices})
        kernel, embedding = rep_kernel(fold)
        assert ses_check(RepSES(embedding, fold))
        cokernel, projection = rep_cokernel(embedding)
        assert cokernel.dims() == x.dims()
        assert ses_check(RepSES(embedding, projection))


def test_vertexwise_approximations(dual, fork):
    for name in ("free_all", "all_free"):
        pair = lookup_pair(dual, name)
        for x in random_representations(fork, dual, 2, 8, seed=9):
            cover = vertexwise_approx(x, pair, Approx.COVER)
            envelope = vertexwise_approx(x, pair, Approx.ENVELOPE)
            assert cover.quotient == x and envelope.sub == x
            assert class_membership(cover.middle, vertexwise_class(pair.member_x))
            assert class_membership(envelope.middle, vertexwise_class(pair.member_y))


def test_stalk_values(dual, a2):
    k = dual.simple()
    s = stalk(k, "2", a2)
    assert s.dims() == (0, 1)
    assert base_ext1_dim(k, k) == 1, "Λ is a non-split extension of k by k"
