"""Quiver representations valued in a base category.

Covers the structure maps φ_i / ψ_i with C_i = coker φ_i and K_i = ker ψ_i, the
stalk, evaluation, free and cofree functors, Φ / Ψ / vertexwise class membership,
hom spaces, and short exact sequences of representations.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType

import numpy as np

import fp
from base import (
    BaseCategory,
    BaseMorphism,
    BaseObject,
    BaseSES,
    CotorsionPairOracle,
    Factorization,
    Predicate,
    category_of,
)
from errors import CertificationError, InputError, OracleSoundnessError
from quiver import Quiver, Side, enumerate_paths, incident_arrows, opposite, topological_order

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Representation:
    """A functor from a quiver to a base category: X(i) per vertex, X(a) per arrow."""

    quiver: Quiver
    category: BaseCategory
    objects: Mapping[str, BaseObject]
    maps: Mapping[str, BaseMorphism]

    def __post_init__(self) -> None:
        q = self.quiver
        objects = dict(self.objects)
        maps = dict(self.maps)
        if set(objects) != set(q.vertices):
            raise InputError(f"Objects given for {sorted(objects)}, quiver has {list(q.vertices)}")
        if set(maps) != {a.id for a in q.arrows}:
            raise InputError(f"Maps given for {sorted(maps)}, quiver has {[a.id for a in q.arrows]}")
        self.category.require(*objects.values())
        for a in q.arrows:
            f = maps[a.id]
            if f.domain != objects[a.source] or f.codomain != objects[a.target]:
                raise InputError(f"Map for arrow {a.id} does not run {a.source} -> {a.target}")
        object.__setattr__(self, "objects", MappingProxyType({v: objects[v] for v in q.vertices}))
        object.__setattr__(self, "maps", MappingProxyType({a.id: maps[a.id] for a in q.arrows}))

    @classmethod
    def build(
        cls,
        quiver: Quiver,
        category: BaseCategory,
        objects: Mapping[str, BaseObject],
        matrices: Mapping[str, np.ndarray | Sequence] | None = None,
    ) -> "Representation":
        """Assemble from raw matrices; arrows without a matrix get the zero map."""
        matrices = dict(matrices or {})
        unknown = set(matrices) - {a.id for a in quiver.arrows}
        if unknown:
            raise InputError(f"Matrices for unknown arrows {sorted(unknown)}")
        missing = set(quiver.vertices) - set(objects)
        if missing:
            raise InputError(f"No object at vertices {sorted(missing)}")
        maps = {}
        for a in quiver.arrows:
            src, tgt = objects[a.source], objects[a.target]
            matrix = matrices.get(a.id, fp.zeros(tgt.dim, src.dim))
            maps[a.id] = category.morphism(src, tgt, matrix)
        return cls(quiver, category, objects, maps)

    def dims(self) -> tuple[int, ...]:
        return tuple(self.objects[v].dim for v in self.quiver.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.category == other.category
            and dict(self.objects) == dict(other.objects)
            and dict(self.maps) == dict(other.maps)
        )

    def __hash__(self) -> int:
        return hash((self.quiver, tuple(self.objects.values()), tuple(self.maps.values())))

    def __repr__(self) -> str:
        return f"Representation({self.category!r}, dims={self.dims()})"


@dataclass(frozen=True, eq=False)
class RepMorphism:
    """A natural transformation; naturality is checked on construction."""

    domain: Representation
    codomain: Representation
    components: Mapping[str, BaseMorphism]

    def __post_init__(self) -> None:
        x, y = self.domain, self.codomain
        if x.quiver != y.quiver or x.category != y.category:
            raise InputError("Morphism between representations of different quivers or instances")
        components = dict(self.components)
        for v in x.quiver.vertices:
            f = components.get(v)
            if f is None or f.domain != x.objects[v] or f.codomain != y.objects[v]:
                raise InputError(f"Component at vertex {v} does not run X({v}) -> Y({v})")
        for a in x.quiver.arrows:
            if y.maps[a.id] @ components[a.source] != components[a.target] @ x.maps[a.id]:
                raise InputError(f"Naturality fails at arrow {a.id}")
        object.__setattr__(self, "components", MappingProxyType({v: components[v] for v in x.quiver.vertices}))

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        if other.codomain != self.domain:
            raise InputError("Cannot compose representation morphisms with mismatched ends")
        return RepMorphism(
            other.domain,
            self.codomain,
            {v: self.components[v] @ other.components[v] for v in self.domain.quiver.vertices},
        )

    def is_mono(self) -> bool:
        return all(f.is_mono() for f in self.components.values())

    def is_epi(self) -> bool:
        return all(f.is_epi() for f in self.components.values())

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMorphism):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and dict(self.components) == dict(other.components)
        )

    def __hash__(self) -> int:
        return hash(tuple(self.components.values()))


@dataclass(frozen=True)
class RepSES:
    """0 -> sub -> middle -> quotient -> 0, exact at every vertex."""

    mono: RepMorphism
    epi: RepMorphism

    @property
    def sub(self) -> Representation:
        return self.mono.domain

    @property
    def middle(self) -> Representation:
        return self.mono.codomain

    @property
    def quotient(self) -> Representation:
        return self.epi.codomain

    def at(self, i: str) -> BaseSES:
        return BaseSES(self.mono.components[i], self.epi.components[i])

    def is_exact(self) -> bool:
        if self.mono.codomain != self.epi.domain:
            return False
        return all(self.at(v).is_exact() for v in self.sub.quiver.vertices)

    def certify(self, what: str, level: int | None = None) -> "RepSES":
        """Return self, or raise CertificationError naming the first vertex where exactness fails."""
        for v in self.sub.quiver.vertices:
            if self.mono.codomain != self.epi.domain or not self.at(v).is_exact():
                raise CertificationError(f"{what} is not exact", level, v)
        return self


@dataclass(frozen=True)
class StructureMaps:
    phi: BaseMorphism         # ⊕_{a into i} X(s(a)) -> X(i)
    psi: BaseMorphism         # X(i) -> ⊕_{a out of i} X(t(a))
    cokernel: BaseObject      # C_i
    projection: BaseMorphism  # X(i) -> C_i
    kernel: BaseObject        # K_i
    embedding: BaseMorphism   # K_i -> X(i)


@dataclass(frozen=True)
class RepDirectSum:
    rep: Representation
    injections: tuple[RepMorphism, ...]
    projections: tuple[RepMorphism, ...]


class ClassKind(Enum):
    PHI = "phi"
    PSI = "psi"
    VERTEXWISE = "vertexwise"


class Approx(Enum):
    COVER = "cover"
    ENVELOPE = "envelope"


@dataclass(frozen=True)
class ClassSpec:
    kind: ClassKind
    predicate: Predicate
    name: str = "class"


def phi_class(predicate: Predicate, name: str = "class") -> ClassSpec:
    """Representations whose φ_i are all mono with every C_i satisfying `predicate`."""
    return ClassSpec(ClassKind.PHI, predicate, name)


def psi_class(predicate: Predicate, name: str = "class") -> ClassSpec:
    """Representations whose ψ_i are all epi with every K_i satisfying `predicate`."""
    return ClassSpec(ClassKind.PSI, predicate, name)


def vertexwise_class(predicate: Predicate, name: str = "class") -> ClassSpec:
    """Representations with every X(i) satisfying `predicate`."""
    return ClassSpec(ClassKind.VERTEXWISE, predicate, name)


@dataclass(frozen=True)
class Witness:
    vertex: str
    reason: str


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.member


def zero_representation(q: Quiver, cat: BaseCategory) -> Representation:
    """The zero object of Rep(q, cat)."""
    return Representation.build(q, cat, {v: cat.zero() for v in q.vertices})


def identity(x: Representation) -> RepMorphism:
    return RepMorphism(x, x, {v: x.category.identity(x.objects[v]) for v in x.quiver.vertices})


def stalk(m: BaseObject, i: str, q: Quiver) -> Representation:
    """s_i(m): m at vertex i, zero elsewhere."""
    q.require_vertex(i)
    cat = category_of(m)
    return Representation.build(q, cat, {v: m if v == i else cat.zero() for v in q.vertices})


def evaluate(x: Representation, i: str) -> BaseObject:
    """e_i(x) = x(i)."""
    return x.objects[x.quiver.require_vertex(i)]


def structure_maps(x: Representation, i: str) -> StructureMaps:
    """φ_i, ψ_i and their cokernel / kernel; summands follow incident_arrows order."""
    cat = x.category
    xi = evaluate(x, i)
    into = incident_arrows(x.quiver, i, Side.INTO)
    out = incident_arrows(x.quiver, i, Side.OUT_OF)
    coproduct = cat.direct_sum([x.objects[a.source] for a in into])
    phi = cat.morphism(coproduct.obj, xi, fp.hstack([x.maps[a.id].matrix for a in into], rows=xi.dim))
    product = cat.direct_sum([x.objects[a.target] for a in out])
    psi = cat.morphism(xi, product.obj, fp.vstack([x.maps[a.id].matrix for a in out], cols=xi.dim))
    c = cat.kernel_cokernel(phi)
    k = cat.kernel_cokernel(psi)
    return StructureMaps(phi, psi, c.cokernel, c.projection, k.kernel, k.embedding)


def cokernel_at(x: Representation, i: str) -> BaseObject:
    """C_i(x), the cokernel of φ_i."""
    return structure_maps(x, i).cokernel


def kernel_at(x: Representation, i: str) -> BaseObject:
    """K_i(x), the kernel of ψ_i."""
    return structure_maps(x, i).kernel


def path_map(x: Representation, start: str, path: tuple[str, ...]) -> BaseMorphism:
    """X(p) for a path starting at `start`; the trivial path gives the identity."""
    result = x.category.identity(x.objects[start])
    for arrow_id in path:
        result = x.maps[arrow_id] @ result
    return result


def f_free(m: BaseObject, i: str, q: Quiver) -> Representation:
    """f_i(M)(j) = ⊕_{p ∈ Q(i,j)} M; arrow a sends summand p identically to summand ap."""
    q.require_vertex(i)
    cat = category_of(m)
    paths = {j: enumerate_paths(q, i, j) for j in q.vertices}
    objects = {j: cat.direct_sum([m] * len(paths[j])).obj for j in q.vertices}
    matrices = {}
    for a in q.arrows:
        src, tgt = paths[a.source], paths[a.target]
        index = {p: n for n, p in enumerate(tgt)}
        pattern = fp.zeros(len(tgt), len(src))
        for col, p in enumerate(src):
            pattern[index[p + (a.id,)], col] = 1
        matrices[a.id] = fp.kron(pattern, fp.identity(m.dim))
    return Representation.build(q, cat, objects, matrices)


def g_cofree(m: BaseObject, i: str, q: Quiver) -> Representation:
    """g_i(M)(j) = ⊕_{p ∈ Q(j,i)} M: the free construction on the opposite quiver, transposed."""
    q.require_vertex(i)
    cat = category_of(m)
    op = opposite(q)
    paths = {j: enumerate_paths(op, i, j) for j in q.vertices}
    objects = {j: cat.direct_sum([m] * len(paths[j])).obj for j in q.vertices}
    matrices = {}
    for a in op.arrows:
        src, tgt = paths[a.source], paths[a.target]
        index = {p: n for n, p in enumerate(tgt)}
        pattern = fp.zeros(len(tgt), len(src))
        for col, p in enumerate(src):
            pattern[index[p + (a.id,)], col] = 1
        matrices[a.id] = fp.kron(pattern.T, fp.identity(m.dim))
    return Representation.build(q, cat, objects, matrices)


def class_membership(x: Representation, spec: ClassSpec) -> Membership:
    """Check Φ, Ψ or vertexwise membership; the witness names the first failing vertex."""
    for i in x.quiver.vertices:
        if spec.kind is ClassKind.VERTEXWISE:
            if not spec.predicate(x.objects[i]):
                return Membership(False, Witness(i, f"X({i}) is not in {spec.name}"))
            continue
        sm = structure_maps(x, i)
        if spec.kind is ClassKind.PHI:
            if not sm.phi.is_mono():
                return Membership(False, Witness(i, f"phi_{i} is not mono"))
            if not spec.predicate(sm.cokernel):
                return Membership(False, Witness(i, f"C_{i} is not in {spec.name}"))
        else:
            if not sm.psi.is_epi():
                return Membership(False, Witness(i, f"psi_{i} is not epi"))
            if not spec.predicate(sm.kernel):
                return Membership(False, Witness(i, f"K_{i} is not in {spec.name}"))
    return Membership(True)


def hom_rep_basis(x: Representation, y: Representation) -> list[RepMorphism]:
    """Basis of natural transformations X -> Y from one linear system.

    Unknowns are vec(f(i)) per vertex; rows are ε-linearity per vertex and
    Y(a) f(i) - f(j) X(a) = 0 per arrow.
    """
    if x.quiver != y.quiver or x.category != y.category:
        raise InputError("hom between representations of different quivers or instances")
    cat, q = x.category, x.quiver
    offsets, size = {}, 0
    for v in q.vertices:
        offsets[v] = size
        size += y.objects[v].dim * x.objects[v].dim
    rows = []
    for v in q.vertices:
        block = cat.linearity_rows(x.objects[v], y.objects[v])
        row = fp.zeros(block.shape[0], size)
        row[:, offsets[v]:offsets[v] + block.shape[1]] = block
        rows.append(row)
    for a in q.arrows:
        xi, yj = x.objects[a.source], y.objects[a.target]
        left = fp.kron(fp.identity(xi.dim), y.maps[a.id].matrix)
        right = fp.kron(x.maps[a.id].matrix.T, fp.identity(yj.dim))
        row = fp.zeros(left.shape[0], size)
        row[:, offsets[a.source]:offsets[a.source] + left.shape[1]] += left
        row[:, offsets[a.target]:offsets[a.target] + right.shape[1]] -= right
        rows.append(row)
    null = fp.nullspace(fp.vstack(rows, cols=size), cat.p)
    basis = []
    for k in range(null.shape[1]):
        components = {}
        for v in q.vertices:
            xv, yv = x.objects[v], y.objects[v]
            chunk = null[offsets[v]:offsets[v] + yv.dim * xv.dim, k]
            components[v] = cat.morphism(xv, yv, fp.unvec(chunk, yv.dim, xv.dim))
        basis.append(RepMorphism(x, y, components))
    return basis


def rep_direct_sum(
    reps: Sequence[Representation], quiver: Quiver | None = None, category: BaseCategory | None = None
) -> RepDirectSum:
    """Vertexwise direct sum; `quiver` and `category` are needed only for an empty list."""
    if reps:
        quiver, category = reps[0].quiver, reps[0].category
    if quiver is None or category is None:
        raise InputError("Empty direct sum needs a quiver and an instance")
    for r in reps:
        if r.quiver != quiver or r.category != category:
            raise InputError("Direct sum of representations of different quivers or instances")
    sums = {v: category.direct_sum([r.objects[v] for r in reps]) for v in quiver.vertices}
    total = Representation(
        quiver,
        category,
        {v: sums[v].obj for v in quiver.vertices},
        {
            a.id: category.morphism(
                sums[a.source].obj, sums[a.target].obj, fp.block_diag([r.maps[a.id].matrix for r in reps]))
            for a in quiver.arrows
        },
    )
    injections = tuple(
        RepMorphism(r, total, {v: sums[v].injections[n] for v in quiver.vertices}) for n, r in enumerate(reps))
    projections = tuple(
        RepMorphism(total, r, {v: sums[v].projections[n] for v in quiver.vertices}) for n, r in enumerate(reps))
    return RepDirectSum(total, injections, projections)


def rep_kernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    """Vertexwise kernels with the unique induced arrow maps."""
    x, cat, q = f.domain, f.domain.category, f.domain.quiver
    kcs = {v: cat.kernel_cokernel(f.components[v]) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        g = x.maps[a.id] @ kcs[a.source].embedding
        induced = cat.solve_factorization(g, kcs[a.target].embedding, Factorization.LIFT_OVER_EPI)
        if induced is None:
            raise CertificationError(f"Kernel is not closed under arrow {a.id}")
        maps[a.id] = induced
    kernel = Representation(q, cat, {v: kcs[v].kernel for v in q.vertices}, maps)
    return kernel, RepMorphism(kernel, x, {v: kcs[v].embedding for v in q.vertices})


def rep_cokernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    """Vertexwise cokernels with the unique induced arrow maps."""
    y, cat, q = f.codomain, f.codomain.category, f.codomain.quiver
    kcs = {v: cat.kernel_cokernel(f.components[v]) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        g = kcs[a.target].projection @ y.maps[a.id]
        induced = cat.solve_factorization(g, kcs[a.source].projection, Factorization.EXTEND_ALONG_MONO)
        if induced is None:
            raise CertificationError(f"Image is not closed under arrow {a.id}")
        maps[a.id] = induced
    cokernel = Representation(q, cat, {v: kcs[v].cokernel for v in q.vertices}, maps)
    return cokernel, RepMorphism(y, cokernel, {v: kcs[v].projection for v in q.vertices})


def ses_check(e: RepSES) -> bool:
    """Vertexwise exactness of 0 -> sub -> middle -> quotient -> 0."""
    return e.is_exact()


def vertexwise_approx(m: Representation, pair: CotorsionPairOracle, side: Approx) -> RepSES:
    """Assemble per-vertex special approximations into a short exact sequence of representations.

    Cover: 0 -> B -> A -> M -> 0 with A(a) lifted through h(j) and B(a) induced on kernels.
    Envelope: 0 -> M -> Y -> C -> 0 with Y(a) extended along f(i) and C(a) induced on cokernels.

    Raises:
        UnsupportedInputError: The quiver has an oriented cycle.
        OracleSoundnessError: A lift or extension that the pair guarantees does not exist.
    """
    q, cat = m.quiver, m.category
    order = topological_order(q)
    seqs = {
        v: pair.cover(m.objects[v]) if side is Approx.COVER else pair.envelope(m.objects[v])
        for v in order
    }
    middle_maps, outer_maps = {}, {}
    for i in order:
        for a in incident_arrows(q, i, Side.OUT_OF):
            j = a.target
            if side is Approx.COVER:
                g = m.maps[a.id] @ seqs[i].epi
                middle = cat.solve_factorization(g, seqs[j].epi, Factorization.LIFT_OVER_EPI)
                if middle is None:
                    raise OracleSoundnessError(f"No lift of arrow {a.id} through the cover at {j}", vertex=j)
                outer = cat.solve_factorization(middle @ seqs[i].mono, seqs[j].mono, Factorization.LIFT_OVER_EPI)
            else:
                g = seqs[j].mono @ m.maps[a.id]
                middle = cat.solve_factorization(g, seqs[i].mono, Factorization.EXTEND_ALONG_MONO)
                if middle is None:
                    raise OracleSoundnessError(f"No extension of arrow {a.id} along the envelope at {i}", vertex=i)
                outer = cat.solve_factorization(seqs[j].epi @ middle, seqs[i].epi, Factorization.EXTEND_ALONG_MONO)
            if outer is None:
                raise CertificationError(f"Induced map for arrow {a.id} does not exist", vertex=j)
            middle_maps[a.id] = middle
            outer_maps[a.id] = outer

    middle_rep = Representation(q, cat, {v: seqs[v].middle for v in q.vertices}, middle_maps)
    if side is Approx.COVER:
        sub = Representation(q, cat, {v: seqs[v].sub for v in q.vertices}, outer_maps)
        mono = RepMorphism(sub, middle_rep, {v: seqs[v].mono for v in q.vertices})
        epi = RepMorphism(middle_rep, m, {v: seqs[v].epi for v in q.vertices})
    else:
        quotient = Representation(q, cat, {v: seqs[v].quotient for v in q.vertices}, outer_maps)
        mono = RepMorphism(m, middle_rep, {v: seqs[v].mono for v in q.vertices})
        epi = RepMorphism(middle_rep, quotient, {v: seqs[v].epi for v in q.vertices})
    log.debug("vertexwise %s of %r via %s", side.value, m, pair.name)
    return RepSES(mono, epi).certify(f"vertexwise {side.value}")
