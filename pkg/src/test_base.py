"""Tests for base.py"""

import numpy as np
import pytest

import fp
from base import (
    CotorsionPairOracle,
    Factorization,
    builtin_pairs,
    builtin_subcategories,
    instance,
    lookup_pair,
    lookup_subcategory,
    salce_complete,
)
from errors import InputError, OracleSoundnessError, UnsupportedInputError
from samples import all_objects, square_zero_matrices


def test_instances_are_cached_and_validated():
    assert instance("dual", 3) is instance("dual", 3)
    with pytest.raises(InputError):
        instance("finvect", 4)


def test_objects_validate_structure(vect, dual):
    with pytest.raises(InputError):
        dual.obj([[1, 0], [0, 0]])
    with pytest.raises(InputError):
        vect.obj([[0, 0], [1, 0]])
    lam = dual.lam()
    assert lam.dim == 2 and lam.nil_rank == 1
    assert repr(lam) == "DualNumbers(2)[dim 2, rank 1]"


def test_morphisms_must_be_linear(dual):
    lam, k = dual.lam(), dual.simple()
    with pytest.raises(InputError):
        dual.morphism(lam, k, [[0, 1]])
    top = dual.morphism(lam, k, [[1, 0]])
    assert top.is_epi() and not top.is_mono()
    with pytest.raises(InputError):
        dual.morphism(lam, k, [[1, 0, 0]])


def test_is_iso_classifies_by_dim_and_rank(dual):
    """Every square-zero 2x2 matrix is similar to the canonical form of its rank."""
    for nil in square_zero_matrices(2, 2):
        m = dual.obj(nil)
        assert dual.is_iso(m, dual.canonical(2, int(fp.rank(nil, 2))))
    assert not dual.is_iso(dual.lam(), dual.canonical(2))


def test_hom_dimensions(dual, vect):
    lam, k = dual.lam(), dual.simple()
    assert len(dual.hom_basis(lam, lam)) == 2, "End(Λ) ≅ Λ"
    assert len(dual.hom_basis(k, lam)) == 1, "k embeds into the socle"
    assert len(dual.hom_basis(lam, k)) == 1
    assert len(vect.hom_basis(vect.space(2), vect.space(3))) == 6


def test_kernel_cokernel(dual):
    lam, k = dual.lam(), dual.simple()
    top = dual.morphism(lam, k, [[1, 0]])
    kc = dual.kernel_cokernel(top)
    assert kc.kernel.dim == 1 and kc.cokernel.dim == 0
    assert (top @ kc.embedding).is_zero()


def test_pullback_and_pushout(vect):
    v1, v2 = vect.space(1), vect.space(2)
    f = vect.morphism(v1, v2, [[1], [0]])
    g = vect.morphism(v1, v2, [[0], [1]])
    pb = vect.pullback(f, g)
    assert pb.obj.dim == 0, "Two independent lines meet in zero"
    po = vect.pushout(f, g)
    assert po.obj.dim == 3
    assert po.left @ f == po.right @ g


def test_solve_factorization(dual):
    lam, k = dual.lam(), dual.simple()
    top = dual.morphism(lam, k, [[1, 0]])
    lifted = dual.solve_factorization(dual.identity(k), top, Factorization.LIFT_OVER_EPI)
    assert lifted is None, "k is not a summand of Λ, so Λ -> k has no section"
    socle = dual.morphism(k, lam, [[0], [1]])
    assert dual.solve_factorization(dual.identity(k), socle, Factorization.EXTEND_ALONG_MONO) is None
    twice = dual.morphism(lam, lam, [[0, 0], [1, 0]])
    through = dual.solve_factorization(twice, dual.identity(lam), Factorization.LIFT_OVER_EPI)
    assert through == twice


def test_free_cover_and_injective_hull(dual):
    for m in all_objects(dual, 4):
        cover = dual.free_cover(m).certify("free cover")
        hull = dual.injective_hull(m).certify("injective hull")
        assert dual.is_free(cover.middle) and dual.is_free(hull.middle)
        top_dim = m.dim - m.nil_rank
        assert cover.middle.dim == 2 * top_dim, "Minimal cover has one Λ per generator"
        assert hull.middle.dim == 2 * top_dim, "Socle and top of a dual-numbers module have equal dimension"
    k = dual.simple()
    cover = dual.free_cover(k)
    assert dual.ses_iso(cover, dual.injective_hull(k)), "0 -> k -> Λ -> k -> 0 on both sides"


def test_builtin_pairs_certify(dual, vect):
    for cat in (dual, vect):
        for pair in builtin_pairs(cat).values():
            assert pair.complete
            for m in all_objects(cat, 3):
                cover = pair.cover(m)
                envelope = pair.envelope(m)
                assert cover.quotient == m and envelope.sub == m


def test_salce_without_shortcut(dual):
    free_all = CotorsionPairOracle("free_all", dual, dual.is_free, lambda m: True, approx_cover=dual.free_cover)
    completed = salce_complete(free_all, shortcut=False)
    for m in all_objects(dual, 4):
        envelope = completed.envelope(m)
        assert envelope.sub == m
        assert dual.is_free(envelope.quotient)
    all_free = CotorsionPairOracle("all_free", dual, lambda m: True, dual.is_free, approx_envelope=dual.injective_hull)
    completed = salce_complete(all_free, shortcut=False)
    for m in all_objects(dual, 4):
        cover = completed.cover(m)
        assert cover.quotient == m and dual.is_free(cover.sub)


def test_salce_shortcut_returns_trivial_sequence(dual):
    pair = lookup_pair(dual, "free_all")
    lam = dual.lam()
    envelope = pair.envelope(lam)
    assert envelope.middle == lam and envelope.quotient.dim == 0


def test_oracle_contract_is_checked(dual):
    lying = CotorsionPairOracle(
        "lying", dual, dual.is_free, lambda m: True,
        approx_cover=lambda m: dual.free_cover(dual.lam()), approx_envelope=dual.injective_hull)
    with pytest.raises(OracleSoundnessError):
        lying.cover(dual.simple())


def test_subcategories(vect, dual):
    even = lookup_subcategory(vect, "even_dim")
    for d in range(5):
        m = vect.space(d)
        assert even.precover(m).middle.dim % 2 == 0
        assert even.preenvelope(m).middle.dim % 2 == 0
    assert [m.dim for m in even.sample(4)] == [0, 2, 4]
    free = builtin_subcategories(dual)["free"]
    assert free.member_smd(dual.lam()) and not free.member_l(dual.simple())
    with pytest.raises(UnsupportedInputError):
        lookup_subcategory(vect, "free")
    with pytest.raises(UnsupportedInputError):
        lookup_pair(vect, "free_all")


def test_direct_sum_injections(dual):
    ds = dual.direct_sum([dual.lam(), dual.simple()])
    assert ds.obj.dim == 3 and ds.obj.nil_rank == 1
    for inj, proj in zip(ds.injections, ds.projections):
        assert (proj @ inj) == dual.identity(inj.domain)
    assert np.array_equal(ds.injections[1].matrix, np.array([[0], [0], [1]]))
