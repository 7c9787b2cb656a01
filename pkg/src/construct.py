"""Special Φ-precovers and Ψ-preenvelopes of representations, built level by level along the vertex filtration.

Every engine starts from the vertexwise approximation E₁ and, for each new
filtration level, enlarges the vertices that just entered it by a direct
summand D (and, for the subcategory engines, a splitting summand H). Each step
and each level is certified at runtime; nothing the construction relies on is
taken on trust from the oracle.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, replace
from enum import Enum
from functools import partial

import numpy as np

import fp
from base import (
    BaseMorphism,
    BaseObject,
    BaseSES,
    CotorsionPairOracle,
    Factorization,
    Predicate,
    SubcategoryOracle,
    salce_complete,
)
from errors import CertificationError, InputError, OracleSoundnessError, UnsupportedInputError
from ext import base_ext1_dim
from quiver import Quiver, Root, Side, VertexFiltration, incident_arrows, require_rooted
from rep import (
    Approx,
    Membership,
    Representation,
    RepMorphism,
    RepSES,
    class_membership,
    phi_class,
    psi_class,
    stalk,
    structure_maps,
    vertexwise_approx,
    vertexwise_class,
)

log = logging.getLogger(__name__)


class Engine(Enum):
    PHI = "phi"
    PSI = "psi"
    PHI_L = "phiL"
    PSI_L = "psiL"

    @property
    def dual(self) -> bool:
        return self in (Engine.PSI, Engine.PSI_L)


@dataclass(frozen=True)
class VertexStep:
    """What one vertex received at one level.

    `correction` is 0 -> S -> D -> B̄ -> 0 on the Φ side and 0 -> B̄ -> D -> P -> 0 on
    the Ψ side; `maps` holds ε_a (into D) or δ_a (out of D) per incident arrow.
    `snake` is 0 -> A(i) -> C_i -> B̄ -> 0 (Φ) or 0 -> B̄ -> K_i -> B(i) -> 0 (Ψ),
    before any splitting summand is added.
    """

    vertex: str
    level: int
    correction: BaseSES
    maps: tuple[tuple[str, BaseMorphism], ...]
    snake: BaseSES
    h: BaseObject | None = None
    l: BaseObject | None = None
    splitting: BaseMorphism | None = None

    @property
    def d(self) -> BaseObject:
        return self.correction.middle


@dataclass(frozen=True)
class TraceLevel:
    """E_α together with the connecting maps from (Φ) or into (Ψ) the previous level."""

    index: int
    ses: RepSES
    changed: tuple[str, ...]
    middle_map: RepMorphism | None = None
    outer_map: RepMorphism | None = None
    steps: tuple[VertexStep, ...] = ()


@dataclass(frozen=True)
class ConstructionTrace:
    engine: Engine
    filtration: VertexFiltration
    levels: tuple[TraceLevel, ...]


@dataclass(frozen=True)
class ConstructionResult:
    """The final sequence, its per-level trace and the two certified memberships."""

    result: RepSES
    trace: ConstructionTrace
    middle_membership: Membership
    outer_membership: Membership


@dataclass(frozen=True)
class ProbeResult:
    """Both approximations of a stalk, evaluated back at its vertex."""

    base_cover: BaseSES
    base_envelope: BaseSES


@dataclass(frozen=True)
class _Sides:
    engine: Engine
    pair: CotorsionPairOracle
    member_c: Predicate
    member_outer: Predicate
    sub: SubcategoryOracle | None = None


def _outer(ses: RepSES, dual: bool) -> Representation:
    return ses.quotient if dual else ses.sub


def _target(ses: RepSES, dual: bool) -> Representation:
    return ses.sub if dual else ses.quotient


class _Level:
    """Mutable working copy of the current level.

    Φ side: `fixed` holds h(v): A(v) -> X(v) and `link` holds k(v): B(v) -> A(v).
    Ψ side: `fixed` holds u(v): X(v) -> B(v) and `link` holds v(v): B(v) -> A(v).
    """

    def __init__(self, first: RepSES, dual: bool) -> None:
        middle, outer = first.middle, _outer(first, dual)
        self.dual = dual
        self.quiver: Quiver = middle.quiver
        self.category = middle.category
        self.mid_objs = dict(middle.objects)
        self.mid_maps = dict(middle.maps)
        self.out_objs = dict(outer.objects)
        self.out_maps = dict(outer.maps)
        self.fixed = dict(first.mono.components if dual else first.epi.components)
        self.link = dict(first.epi.components if dual else first.mono.components)
        self.connect_mid: dict[str, BaseMorphism] = {}
        self.connect_out: dict[str, BaseMorphism] = {}

    def enlarge_phi(self, i: str, extras: Sequence[tuple[BaseObject, Mapping[str, BaseMorphism]]]) -> None:
        """A(i) becomes A(i) ⊕ E ⊕ ..., B(i) likewise; each extra E comes with maps A(s(a)) -> E."""
        cat, q = self.category, self.quiver
        objs = [obj for obj, _ in extras]
        mid = cat.direct_sum([self.mid_objs[i], *objs])
        out = cat.direct_sum([self.out_objs[i], *objs])
        for a in incident_arrows(q, i, Side.INTO):
            s = a.source
            mid_blocks = [self.mid_maps[a.id].matrix, *(comps[a.id].matrix for _, comps in extras)]
            out_blocks = [self.out_maps[a.id].matrix, *((comps[a.id] @ self.link[s]).matrix for _, comps in extras)]
            self.mid_maps[a.id] = cat.morphism(self.mid_objs[s], mid.obj, fp.vstack(mid_blocks, cols=self.mid_objs[s].dim))
            self.out_maps[a.id] = cat.morphism(self.out_objs[s], out.obj, fp.vstack(out_blocks, cols=self.out_objs[s].dim))
        for a in incident_arrows(q, i, Side.OUT_OF):
            self.mid_maps[a.id] = self.mid_maps[a.id] @ mid.projections[0]
            self.out_maps[a.id] = self.out_maps[a.id] @ out.projections[0]
        self.fixed[i] = self.fixed[i] @ mid.projections[0]
        self.link[i] = cat.morphism(
            out.obj, mid.obj, fp.block_diag([self.link[i].matrix, *(fp.identity(o.dim) for o in objs)]))
        self.connect_mid[i] = mid.projections[0]
        self.connect_out[i] = out.projections[0]
        self.mid_objs[i] = mid.obj
        self.out_objs[i] = out.obj

    def enlarge_psi(self, i: str, extras: Sequence[tuple[BaseObject, Mapping[str, BaseMorphism]]]) -> None:
        """B(i) becomes B(i) ⊕ E ⊕ ..., A(i) likewise; each extra E comes with maps E -> B(t(a))."""
        cat, q = self.category, self.quiver
        objs = [obj for obj, _ in extras]
        mid = cat.direct_sum([self.mid_objs[i], *objs])
        out = cat.direct_sum([self.out_objs[i], *objs])
        for a in incident_arrows(q, i, Side.OUT_OF):
            t = a.target
            mid_blocks = [self.mid_maps[a.id].matrix, *(comps[a.id].matrix for _, comps in extras)]
            out_blocks = [self.out_maps[a.id].matrix, *((self.link[t] @ comps[a.id]).matrix for _, comps in extras)]
            self.mid_maps[a.id] = cat.morphism(mid.obj, self.mid_objs[t], fp.hstack(mid_blocks, rows=self.mid_objs[t].dim))
            self.out_maps[a.id] = cat.morphism(out.obj, self.out_objs[t], fp.hstack(out_blocks, rows=self.out_objs[t].dim))
        for a in incident_arrows(q, i, Side.INTO):
            self.mid_maps[a.id] = mid.injections[0] @ self.mid_maps[a.id]
            self.out_maps[a.id] = out.injections[0] @ self.out_maps[a.id]
        self.fixed[i] = mid.injections[0] @ self.fixed[i]
        self.link[i] = cat.morphism(
            mid.obj, out.obj, fp.block_diag([self.link[i].matrix, *(fp.identity(o.dim) for o in objs)]))
        self.connect_mid[i] = mid.injections[0]
        self.connect_out[i] = out.injections[0]
        self.mid_objs[i] = mid.obj
        self.out_objs[i] = out.obj

    def ses(self, target: Representation, level: int) -> RepSES:
        q, cat = self.quiver, self.category
        try:
            middle = Representation(q, cat, self.mid_objs, self.mid_maps)
            outer = Representation(q, cat, self.out_objs, self.out_maps)
            if self.dual:
                return RepSES(RepMorphism(target, middle, self.fixed), RepMorphism(middle, outer, self.link))
            return RepSES(RepMorphism(outer, middle, self.link), RepMorphism(middle, target, self.fixed))
        except InputError as exc:
            raise CertificationError(f"Level does not assemble into representations: {exc}", level) from exc

    def connecting(self, previous: RepSES, current: RepSES, level: int) -> tuple[RepMorphism, RepMorphism]:
        """(1, 0)-projections A_(α+1) -> A_α on the Φ side, (1, 0)-injections B_α -> B_(α+1) on the Ψ side."""
        cat = self.category
        pairs = (
            (previous.middle, current.middle, self.connect_mid),
            (_outer(previous, self.dual), _outer(current, self.dual), self.connect_out),
        )
        maps = []
        try:
            for before, after, store in pairs:
                components = {v: store.get(v, cat.identity(before.objects[v])) for v in self.quiver.vertices}
                if self.dual:
                    maps.append(RepMorphism(before, after, components))
                else:
                    maps.append(RepMorphism(after, before, components))
        except InputError as exc:
            raise CertificationError(f"Connecting map is not natural: {exc}", level) from exc
        self.connect_mid, self.connect_out = {}, {}
        return maps[0], maps[1]


def _phi_step(state: _Level, i: str, level: int, sides: _Sides) -> VertexStep:
    """Enlarge A(i) and B(i) by D from the envelope of ⊕ A(s(a)), then certify the snake sequence at i."""
    cat, pair = state.category, sides.pair
    into = incident_arrows(state.quiver, i, Side.INTO)
    sources = cat.direct_sum([state.mid_objs[a.source] for a in into])
    correction = pair.envelope(sources.obj)
    d = correction.middle
    if not (pair.member_x(d) and pair.member_y(d)):
        raise OracleSoundnessError(f"D = {d!r} is not in both classes of {pair.name}", level, i)
    eps = {a.id: correction.mono @ sources.injections[n] for n, a in enumerate(into)}

    phi_old = fp.hstack([state.mid_maps[a.id].matrix for a in into], rows=state.mid_objs[i].dim)
    enlarged = cat.direct_sum([state.mid_objs[i], d])
    dagger = cat.morphism(
        sources.obj, enlarged.obj, fp.vstack([phi_old, correction.mono.matrix], cols=sources.obj.dim))
    if not dagger.is_mono():
        raise OracleSoundnessError("Enlarged structure map φ is not mono", level, i)
    kc = cat.kernel_cokernel(dagger)
    onto_quotient = cat.solve_factorization(
        correction.epi @ enlarged.projections[1], kc.projection, Factorization.EXTEND_ALONG_MONO)
    if onto_quotient is None:
        raise OracleSoundnessError("C_i does not map onto B̄", level, i)
    snake = BaseSES(kc.projection @ enlarged.injections[0], onto_quotient).certify("snake sequence", level, i)
    if not pair.member_x(kc.cokernel):
        raise OracleSoundnessError(f"C_i = {kc.cokernel!r} is not in the left class of {pair.name}", level, i)

    extras: list[tuple[BaseObject, Mapping[str, BaseMorphism]]] = [(d, eps)]
    step = VertexStep(i, level, correction, tuple(eps.items()), snake)
    if sides.sub is not None:
        split = sides.sub.precover(kc.cokernel)
        identity = cat.identity(kc.cokernel)
        section = cat.solve_factorization(identity, split.epi, Factorization.LIFT_OVER_EPI)
        if section is None or split.epi @ section != identity:
            raise OracleSoundnessError(f"{sides.sub.name} precover of C_i does not split", level, i)
        if not pair.member_y(split.sub):
            raise OracleSoundnessError(f"H = {split.sub!r} is not orthogonal to {sides.sub.name}", level, i)
        if fp.inverse(np.hstack([section.matrix, split.mono.matrix]), cat.p) is None:
            raise OracleSoundnessError("C_i ⊕ H does not recover L", level, i)
        extras.append((split.sub, {a.id: cat.zero_map(state.mid_objs[a.source], split.sub) for a in into}))
        step = replace(step, h=split.sub, l=split.middle, splitting=section)

    state.enlarge_phi(i, extras)
    log.debug("level %d vertex %s: D dim %d, C dim %d", level, i, d.dim, kc.cokernel.dim)
    return step


def _psi_step(state: _Level, i: str, level: int, sides: _Sides) -> VertexStep:
    """Enlarge B(i) and A(i) by D from the cover of ⊕ B(t(a)), then certify the snake sequence at i."""
    cat, pair = state.category, sides.pair
    out = incident_arrows(state.quiver, i, Side.OUT_OF)
    targets = cat.direct_sum([state.mid_objs[a.target] for a in out])
    correction = pair.cover(targets.obj)
    d = correction.middle
    if not (pair.member_x(d) and pair.member_y(d)):
        raise OracleSoundnessError(f"D = {d!r} is not in both classes of {pair.name}", level, i)
    delta = {a.id: targets.projections[n] @ correction.epi for n, a in enumerate(out)}

    psi_old = fp.vstack([state.mid_maps[a.id].matrix for a in out], cols=state.mid_objs[i].dim)
    enlarged = cat.direct_sum([state.mid_objs[i], d])
    dagger = cat.morphism(
        enlarged.obj, targets.obj, fp.hstack([psi_old, correction.epi.matrix], rows=targets.obj.dim))
    if not dagger.is_epi():
        raise OracleSoundnessError("Enlarged structure map ψ is not epi", level, i)
    kc = cat.kernel_cokernel(dagger)
    into_kernel = cat.solve_factorization(
        enlarged.injections[1] @ correction.mono, kc.embedding, Factorization.LIFT_OVER_EPI)
    if into_kernel is None:
        raise OracleSoundnessError("B̄ does not map into K_i", level, i)
    snake = BaseSES(into_kernel, enlarged.projections[0] @ kc.embedding).certify("snake sequence", level, i)
    if not pair.member_y(kc.kernel):
        raise OracleSoundnessError(f"K_i = {kc.kernel!r} is not in the right class of {pair.name}", level, i)

    extras: list[tuple[BaseObject, Mapping[str, BaseMorphism]]] = [(d, delta)]
    step = VertexStep(i, level, correction, tuple(delta.items()), snake)
    if sides.sub is not None:
        split = sides.sub.preenvelope(kc.kernel)
        identity = cat.identity(kc.kernel)
        retraction = cat.solve_factorization(identity, split.mono, Factorization.EXTEND_ALONG_MONO)
        if retraction is None or retraction @ split.mono != identity:
            raise OracleSoundnessError(f"{sides.sub.name} preenvelope of K_i does not split", level, i)
        if not pair.member_x(split.quotient):
            raise OracleSoundnessError(f"H = {split.quotient!r} is not orthogonal to {sides.sub.name}", level, i)
        if fp.inverse(np.vstack([retraction.matrix, split.epi.matrix]), cat.p) is None:
            raise OracleSoundnessError("K_i ⊕ H does not recover L", level, i)
        h = split.quotient
        extras.append((h, {a.id: cat.zero_map(h, state.mid_objs[a.target]) for a in out}))
        step = replace(step, h=h, l=split.middle, splitting=retraction)

    state.enlarge_psi(i, extras)
    log.debug("level %d vertex %s: D dim %d, K dim %d", level, i, d.dim, kc.kernel.dim)
    return step


def _certify_level(
    level: TraceLevel,
    first: RepSES,
    filtration: VertexFiltration,
    sides: _Sides,
    previous: TraceLevel | None,
) -> None:
    """Exactness onto the fixed target, frozen vertices, memberships up to V_α, comparison squares."""
    alpha, ses, dual = level.index, level.ses, sides.engine.dual
    cat, q = ses.middle.category, ses.middle.quiver
    ses.certify(f"{sides.engine.value} level", alpha)
    if _target(ses, dual) != _target(first, dual):
        raise CertificationError("Level does not approximate the original target", alpha)

    inside = filtration.level(alpha)
    outer, first_outer = _outer(ses, dual), _outer(first, dual)
    corrections = {}
    for v in q.vertices:
        if v not in inside:
            same = (
                ses.middle.objects[v] == first.middle.objects[v]
                and outer.objects[v] == first_outer.objects[v]
                and ses.mono.components[v] == first.mono.components[v]
                and ses.epi.components[v] == first.epi.components[v]
            )
            if not same:
                raise CertificationError("Vertex outside the current level moved away from E₁", alpha, v)
        else:
            sm = structure_maps(ses.middle, v)
            if dual:
                ok, corrections[v] = sm.psi.is_epi(), sm.kernel
            else:
                ok, corrections[v] = sm.phi.is_mono(), sm.cokernel
            if not ok:
                raise CertificationError(f"Structure map at a vertex of level {alpha} is not {'epi' if dual else 'mono'}", alpha, v)
            if not sides.member_c(corrections[v]):
                raise CertificationError(f"{'K' if dual else 'C'}_{v} = {corrections[v]!r} is not in the class", alpha, v)
        if not sides.member_outer(outer.objects[v]):
            raise CertificationError(f"Outer term {outer.objects[v]!r} is not in the class", alpha, v)
    for step in level.steps:
        if step.l is not None and not cat.is_iso(corrections[step.vertex], step.l):
            raise CertificationError("Correction object is not isomorphic to L", alpha, step.vertex)

    if previous is None:
        return
    prev_outer = _outer(previous.ses, dual)
    for v in q.vertices:
        if v not in level.changed and (
            previous.ses.middle.objects[v] != ses.middle.objects[v] or prev_outer.objects[v] != outer.objects[v]
        ):
            raise CertificationError("Unchanged vertex has a different object", alpha, v)
    mid_map, out_map = level.middle_map, level.outer_map
    if dual:
        if not (mid_map.is_mono() and out_map.is_mono()):
            raise CertificationError("Connecting maps are not mono", alpha)
    elif not (mid_map.is_epi() and out_map.is_epi()):
        raise CertificationError("Connecting maps are not epi", alpha)
    for v in q.vertices:
        g, f = mid_map.components[v], out_map.components[v]
        old, new = previous.ses, ses
        if dual:
            commutes = g @ old.mono.components[v] == new.mono.components[v] and (
                f @ old.epi.components[v] == new.epi.components[v] @ g)
        else:
            commutes = old.epi.components[v] @ g == new.epi.components[v] and (
                g @ new.mono.components[v] == old.mono.components[v] @ f)
        if not commutes:
            raise CertificationError("Level comparison square does not commute", alpha, v)


def _certify_result(result: RepSES, sides: _Sides) -> tuple[Membership, Membership]:
    dual = sides.engine.dual
    middle_spec = (psi_class if dual else phi_class)(sides.member_c, sides.engine.value)
    checks = (
        class_membership(result.middle, middle_spec),
        class_membership(_outer(result, dual), vertexwise_class(sides.member_outer, sides.engine.value)),
    )
    for membership in checks:
        if not membership:
            raise CertificationError(membership.witness.reason, vertex=membership.witness.vertex)
    return checks


def _construct(x: Representation, sides: _Sides) -> ConstructionResult:
    q, cat, dual = x.quiver, x.category, sides.engine.dual
    if sides.pair.category != cat:
        raise InputError(f"Pair {sides.pair.name} lives on {sides.pair.category!r}, target on {cat!r}")
    filtration = require_rooted(q, Root.RIGHT if dual else Root.LEFT)
    first = vertexwise_approx(x, sides.pair, Approx.ENVELOPE if dual else Approx.COVER)
    state = _Level(first, dual)
    step = _psi_step if dual else _phi_step

    levels = [TraceLevel(1, first, filtration.added_at(1))]
    _certify_level(levels[0], first, filtration, sides, None)
    for alpha in range(2, filtration.stabilized_at + 1):
        changed = filtration.added_at(alpha)
        steps = tuple(step(state, i, alpha, sides) for i in changed)
        ses = state.ses(x, alpha)
        middle_map, outer_map = state.connecting(levels[-1].ses, ses, alpha)
        level = TraceLevel(alpha, ses, changed, middle_map, outer_map, steps)
        _certify_level(level, first, filtration, sides, levels[-1])
        levels.append(level)
        log.debug("%s level %d certified, changed %s", sides.engine.value, alpha, list(changed))

    result = levels[-1].ses
    middle_ok, outer_ok = _certify_result(result, sides)
    log.info("%s construction of %r finished after %d levels", sides.engine.value, x, len(levels))
    return ConstructionResult(result, ConstructionTrace(sides.engine, filtration, tuple(levels)), middle_ok, outer_ok)


def phi_precover(x: Representation, pair: CotorsionPairOracle) -> ConstructionResult:
    """Special Φ(X)-precover 0 -> B' -> A' -> x -> 0 with B' vertexwise in Y.

    Args:
        x: Target on a left-rooted quiver.
        pair: Complete cotorsion pair (X, Y) on the base instance.

    Raises:
        UnsupportedInputError: The quiver is not left-rooted or the pair is incomplete.
        OracleSoundnessError: A step the pair guarantees could not be carried out.
    """
    return _construct(x, _Sides(Engine.PHI, pair, pair.member_x, pair.member_y))


def psi_preenvelope(x: Representation, pair: CotorsionPairOracle) -> ConstructionResult:
    """Special Ψ(Y)-preenvelope 0 -> x -> B' -> A' -> 0 with A' vertexwise in X."""
    return _construct(x, _Sides(Engine.PSI, pair, pair.member_y, pair.member_x))


def _right_orthogonal(sample: Sequence[BaseObject], m: BaseObject) -> bool:
    return all(base_ext1_dim(s, m) == 0 for s in sample)


def _left_orthogonal(sample: Sequence[BaseObject], m: BaseObject) -> bool:
    return all(base_ext1_dim(m, s) == 0 for s in sample)


def smd_pair_from_precovering(l: SubcategoryOracle, sample_dim: int = 2) -> CotorsionPairOracle:
    """(Smd(L), L^⊥) with special precovers from `l` and preenvelopes by Salce completion.

    L^⊥ is decided against l.sample(sample_dim), which is exact for the built-in
    subcategories since their orthogonals are determined in low dimension.
    """
    cat = l.category
    if l.special_precover is None:
        raise UnsupportedInputError(f"Subcategory {l.name} is not special precovering")
    if not cat.enough_injectives:
        raise UnsupportedInputError(f"{cat!r} lacks injective embeddings")
    half = CotorsionPairOracle(
        f"smd({l.name})",
        cat,
        member_x=l.member_smd,
        member_y=partial(_right_orthogonal, tuple(l.sample(sample_dim))),
        approx_cover=l.precover,
    )
    return salce_complete(half)


def smd_pair_from_preenveloping(l: SubcategoryOracle, sample_dim: int = 2) -> CotorsionPairOracle:
    """(^⊥L, Smd(L)) with special preenvelopes from `l` and precovers by Salce completion."""
    cat = l.category
    if l.special_preenvelope is None:
        raise UnsupportedInputError(f"Subcategory {l.name} is not special preenveloping")
    if not cat.enough_projectives:
        raise UnsupportedInputError(f"{cat!r} lacks projective covers")
    half = CotorsionPairOracle(
        f"smd({l.name})",
        cat,
        member_x=partial(_left_orthogonal, tuple(l.sample(sample_dim))),
        member_y=l.member_smd,
        approx_envelope=l.preenvelope,
    )
    return salce_complete(half)


def phiL_precover(m: Representation, l: SubcategoryOracle) -> ConstructionResult:
    """Special Φ(L)-precover 0 -> K' -> N' -> m -> 0 with K' vertexwise in L^⊥.

    Each step splits the L-precover of C_i and adds the kernel H as a summand, so
    the new cokernel is isomorphic to the middle term of that precover.
    """
    pair = smd_pair_from_precovering(l)
    return _construct(m, _Sides(Engine.PHI_L, pair, l.member_l, pair.member_y, l))


def psiL_preenvelope(m: Representation, l: SubcategoryOracle) -> ConstructionResult:
    """Special Ψ(L)-preenvelope 0 -> m -> N' -> K' -> 0 with K' vertexwise in ^⊥L."""
    pair = smd_pair_from_preenveloping(l)
    return _construct(m, _Sides(Engine.PSI_L, pair, l.member_l, pair.member_x, l))


def stalk_converse_probe(i: str, m: BaseObject, pair: CotorsionPairOracle, q: Quiver) -> ProbeResult:
    """Evaluate the Φ-precover and Ψ-preenvelope of the stalk at i back at i."""
    x = stalk(m, i, q)
    cover = phi_precover(x, pair).result.at(i)
    envelope = psi_preenvelope(x, pair).result.at(i)
    return ProbeResult(cover, envelope)


def subcategory_converse_probe(i: str, m: BaseObject, l: SubcategoryOracle, q: Quiver) -> ProbeResult:
    """Same as stalk_converse_probe with the Φ(L) / Ψ(L) engines; the middle terms land in L."""
    x = stalk(m, i, q)
    cover = phiL_precover(x, l).result.at(i)
    envelope = psiL_preenvelope(x, l).result.at(i)
    return ProbeResult(cover, envelope)
