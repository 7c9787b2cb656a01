"""Ext¹ via one-step syzygies, the Euler-form cross-check, and orthogonality reports."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

import fp
from base import BaseObject, Kind, category_of
from errors import UnsupportedInputError
from quiver import enumerate_paths, has_oriented_cycle
from rep import (
    RepMorphism,
    Representation,
    RepSES,
    f_free,
    hom_rep_basis,
    path_map,
    rep_direct_sum,
    rep_kernel,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectivePresentation:
    """0 -> Ω -> P₀ -> target -> 0 with P₀ = ⊕_i f_i(P_i)."""

    target: Representation
    cover: RepSES
    summands: tuple[tuple[str, BaseObject], ...]

    @property
    def projective(self) -> Representation:
        return self.cover.middle

    @property
    def syzygy(self) -> Representation:
        return self.cover.sub


@dataclass(frozen=True)
class OrthogonalityReport:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    ext1: tuple[tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return all(v == 0 for row in self.ext1 for v in row)

    @property
    def witness(self) -> tuple[str, str, int] | None:
        """First nonzero entry as (row id, column id, value)."""
        for r, row in enumerate(self.ext1):
            for c, value in enumerate(row):
                if value:
                    return self.rows[r], self.cols[c], value
        return None


def projective_present(m: Representation) -> ProjectivePresentation:
    """Cover m by ⊕_i f_i(P_i), where P_i -> m(i) is the base free cover.

    On the f_i(P_i) summand at vertex j, the copy indexed by a path p: i -> j maps
    through m(p) after the cover P_i -> m(i).
    """
    q, cat = m.quiver, m.category
    if has_oriented_cycle(q):
        raise UnsupportedInputError("Projective presentations need an acyclic quiver")
    covers = {i: cat.free_cover(m.objects[i]) for i in q.vertices}
    free = rep_direct_sum([f_free(covers[i].middle, i, q) for i in q.vertices], q, cat)
    components = {}
    for j in q.vertices:
        blocks = [
            (path_map(m, i, path) @ covers[i].epi).matrix
            for i in q.vertices
            for path in enumerate_paths(q, i, j)
        ]
        components[j] = cat.morphism(free.rep.objects[j], m.objects[j], fp.hstack(blocks, rows=m.objects[j].dim))
    epi = RepMorphism(free.rep, m, components)
    _, inclusion = rep_kernel(epi)
    cover = RepSES(inclusion, epi).certify("projective presentation")
    return ProjectivePresentation(m, cover, tuple((i, covers[i].middle) for i in q.vertices))


def _flatten(f: RepMorphism) -> np.ndarray:
    return np.concatenate([fp.vec(c.matrix) for c in f.components.values()] or [np.zeros(0, dtype=np.int64)])


def ext1_dim(m: Representation, n: Representation, presentation: ProjectivePresentation | None = None) -> int:
    """dim Hom(Ω, n) minus the rank of restriction Hom(P₀, n) -> Hom(Ω, n)."""
    pres = presentation or projective_present(m)
    inclusion = pres.cover.mono
    syzygy_homs = hom_rep_basis(pres.syzygy, n)
    restricted = [_flatten(g @ inclusion) for g in hom_rep_basis(pres.projective, n)]
    image = fp.rank(np.array(restricted), n.category.p) if restricted else 0
    return len(syzygy_homs) - image


def base_ext1_dim(m: BaseObject, n: BaseObject) -> int:
    """Ext¹ inside the base instance by the same syzygy method."""
    cat = category_of(m)
    cover = cat.free_cover(m)
    syzygy_homs = cat.hom_basis(cover.sub, n)
    restricted = [fp.vec((g @ cover.mono).matrix) for g in cat.hom_basis(cover.middle, n)]
    image = fp.rank(np.array(restricted), cat.p) if restricted else 0
    return len(syzygy_homs) - image


def euler_ext1(m: Representation, n: Representation) -> int:
    """Hereditary Euler-form value of Ext¹ over a vector-space base."""
    cat, q = m.category, m.quiver
    if cat.kind is not Kind.FINVECT:
        raise UnsupportedInputError(f"Euler-form Ext¹ needs a FinVect base, got {cat!r}")
    if has_oriented_cycle(q):
        raise UnsupportedInputError("Euler-form Ext¹ needs an acyclic quiver")
    vertex_term = sum(len(cat.hom_basis(m.objects[v], n.objects[v])) for v in q.vertices)
    arrow_term = sum(len(cat.hom_basis(m.objects[a.source], n.objects[a.target])) for a in q.arrows)
    return len(hom_rep_basis(m, n)) - vertex_term + arrow_term


def adjunction_check(m: BaseObject, i: str, y: Representation) -> bool:
    """Ext¹(f_i(m), y) against Ext¹(m, y(i)) computed downstairs."""
    upstairs = ext1_dim(f_free(m, i, y.quiver), y)
    downstairs = base_ext1_dim(m, y.objects[i])
    log.debug("adjunction at %s: %d upstairs, %d downstairs", i, upstairs, downstairs)
    return upstairs == downstairs


def verify_orthogonality(
    left_sample: Sequence[Representation],
    right_sample: Sequence[Representation],
    left_ids: Sequence[str] | None = None,
    right_ids: Sequence[str] | None = None,
) -> OrthogonalityReport:
    rows = tuple(left_ids or (f"L{n}" for n in range(len(left_sample))))
    cols = tuple(right_ids or (f"R{n}" for n in range(len(right_sample))))
    values = []
    for m in left_sample:
        pres = projective_present(m)
        values.append(tuple(ext1_dim(m, n, pres) for n in right_sample))
    report = OrthogonalityReport(rows, cols, tuple(values))
    log.info("orthogonality %dx%d: pass=%s", len(rows), len(cols), report.passed)
    return report
