"""Exact-computable abelian base categories, cotorsion-pair oracles and Salce completion.

Two instances are built in: FinVect(p), finite-dimensional F_p-spaces, and
DualNumbers(p), finite-dimensional modules over F_p[ε]/(ε²). Both store an
object as a square-zero matrix N (the ε-action, identically zero for FinVect),
so kernels, cokernels, hom spaces and factorizations are one set of code.
Matrices follow the column-vector convention: a morphism M -> N is a
dim N x dim M matrix and composition is left multiplication.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache, partial

import numpy as np

import fp
from errors import CertificationError, InputError, OracleSoundnessError, UnsupportedInputError

log = logging.getLogger(__name__)


class Kind(Enum):
    FINVECT = "finvect"
    DUAL = "dual"


class Factorization(Enum):
    LIFT_OVER_EPI = "lift_over_epi"          # find f with through ∘ f = g
    EXTEND_ALONG_MONO = "extend_along_mono"  # find f with f ∘ through = g


@dataclass(frozen=True, eq=False)
class BaseObject:
    """A finite-dimensional F_p-space with a square-zero operator `nil`."""

    kind: Kind
    p: int
    nil: np.ndarray

    def __post_init__(self) -> None:
        nil = fp.mod_p(self.nil, self.p)
        if nil.size == 0:
            nil = fp.zeros(0, 0)
        if nil.ndim != 2 or nil.shape[0] != nil.shape[1]:
            raise InputError(f"Structure matrix must be square, got shape {nil.shape}")
        if np.any(fp.matmul(nil, nil, self.p)):
            raise InputError("Structure matrix N does not satisfy N·N = 0")
        if self.kind is Kind.FINVECT and np.any(nil):
            raise InputError("FinVect objects carry the zero operator")
        nil.setflags(write=False)
        object.__setattr__(self, "nil", nil)

    @property
    def dim(self) -> int:
        return self.nil.shape[0]

    @property
    def nil_rank(self) -> int:
        return fp.rank(self.nil, self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BaseObject):
            return NotImplemented
        return (self.kind, self.p) == (other.kind, other.p) and np.array_equal(self.nil, other.nil)

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.nil.shape, self.nil.tobytes()))

    def __repr__(self) -> str:
        if self.kind is Kind.FINVECT:
            return f"FinVect({self.p})[dim {self.dim}]"
        return f"DualNumbers({self.p})[dim {self.dim}, rank {self.nil_rank}]"


@dataclass(frozen=True, eq=False)
class BaseMorphism:
    domain: BaseObject
    codomain: BaseObject
    matrix: np.ndarray

    def __post_init__(self) -> None:
        dom, cod = self.domain, self.codomain
        if (dom.kind, dom.p) != (cod.kind, cod.p):
            raise InputError(f"Morphism between different instances: {dom!r} -> {cod!r}")
        mat = fp.mod_p(self.matrix, dom.p)
        if mat.size == 0 and cod.dim * dom.dim == 0:
            mat = fp.zeros(cod.dim, dom.dim)
        if mat.shape != (cod.dim, dom.dim):
            raise InputError(f"Matrix shape {mat.shape} does not fit {dom!r} -> {cod!r}")
        if not np.array_equal(fp.matmul(mat, dom.nil, dom.p), fp.matmul(cod.nil, mat, dom.p)):
            raise InputError(f"Matrix is not ε-linear for {dom!r} -> {cod!r}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def p(self) -> int:
        return self.domain.p

    def __matmul__(self, other: "BaseMorphism") -> "BaseMorphism":
        """self ∘ other."""
        if other.codomain != self.domain:
            raise InputError(f"Cannot compose {other.codomain!r} into {self.domain!r}")
        return BaseMorphism(other.domain, self.codomain, fp.matmul(self.matrix, other.matrix, self.p))

    def __add__(self, other: "BaseMorphism") -> "BaseMorphism":
        self._require_parallel(other)
        return BaseMorphism(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other: "BaseMorphism") -> "BaseMorphism":
        self._require_parallel(other)
        return BaseMorphism(self.domain, self.codomain, self.matrix - other.matrix)

    def _require_parallel(self, other: "BaseMorphism") -> None:
        if other.domain != self.domain or other.codomain != self.codomain:
            raise InputError("Morphisms are not parallel")

    def is_mono(self) -> bool:
        return fp.is_injective(self.matrix, self.p)

    def is_epi(self) -> bool:
        return fp.is_surjective(self.matrix, self.p)

    def is_iso(self) -> bool:
        return self.is_mono() and self.is_epi()

    def is_zero(self) -> bool:
        return fp.is_zero(self.matrix, self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BaseMorphism):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.matrix.tobytes()))


@dataclass(frozen=True)
class BaseSES:
    """0 -> sub -> middle -> quotient -> 0."""

    mono: BaseMorphism
    epi: BaseMorphism

    @property
    def sub(self) -> BaseObject:
        return self.mono.domain

    @property
    def middle(self) -> BaseObject:
        return self.mono.codomain

    @property
    def quotient(self) -> BaseObject:
        return self.epi.codomain

    def is_exact(self) -> bool:
        if self.mono.codomain != self.epi.domain:
            return False
        return (
            self.mono.is_mono()
            and self.epi.is_epi()
            and (self.epi @ self.mono).is_zero()
            and self.middle.dim == self.sub.dim + self.quotient.dim
        )

    def certify(self, what: str, level: int | None = None, vertex: str | None = None) -> "BaseSES":
        if not self.is_exact():
            raise CertificationError(f"{what} is not a short exact sequence", level, vertex)
        return self


@dataclass(frozen=True)
class DirectSum:
    obj: BaseObject
    injections: tuple[BaseMorphism, ...]
    projections: tuple[BaseMorphism, ...]


@dataclass(frozen=True)
class KernelCokernel:
    kernel: BaseObject
    embedding: BaseMorphism
    cokernel: BaseObject
    projection: BaseMorphism


@dataclass(frozen=True)
class Square:
    """Pullback (legs out of `obj`) or pushout (legs into `obj`)."""

    obj: BaseObject
    left: BaseMorphism
    right: BaseMorphism


class BaseCategory:
    """Operations shared by every instance; subclasses add covers and hulls."""

    kind: Kind
    name: str
    enough_projectives = False
    enough_injectives = False

    def __init__(self, p: int = 2) -> None:
        if not fp.is_prime(p):
            raise InputError(f"p = {p} is not prime")
        self.p = p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseCategory) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    def __repr__(self) -> str:
        return f"{self.name}({self.p})"

    # objects and maps

    def obj(self, nil: np.ndarray | Sequence) -> BaseObject:
        return BaseObject(self.kind, self.p, np.asarray(nil, dtype=np.int64))

    def zero(self) -> BaseObject:
        return self.obj(fp.zeros(0, 0))

    def canonical(self, dim: int, rank: int = 0) -> BaseObject:
        """Normal form: ε sends basis vector 2j to 2j+1 for j < rank."""
        if dim < 0 or rank < 0 or 2 * rank > dim:
            raise InputError(f"No object of dimension {dim} with rank {rank}")
        if rank and self.kind is Kind.FINVECT:
            raise InputError("FinVect objects have rank 0")
        nil = fp.zeros(dim, dim)
        for j in range(rank):
            nil[2 * j + 1, 2 * j] = 1
        return self.obj(nil)

    def contains(self, m: BaseObject) -> bool:
        return m.kind is self.kind and m.p == self.p

    def require(self, *objs: BaseObject) -> None:
        for m in objs:
            if not self.contains(m):
                raise InputError(f"{m!r} does not belong to {self!r}")

    def morphism(self, domain: BaseObject, codomain: BaseObject, matrix: np.ndarray | Sequence) -> BaseMorphism:
        self.require(domain, codomain)
        return BaseMorphism(domain, codomain, np.asarray(matrix, dtype=np.int64))

    def identity(self, m: BaseObject) -> BaseMorphism:
        return self.morphism(m, m, fp.identity(m.dim))

    def zero_map(self, m: BaseObject, n: BaseObject) -> BaseMorphism:
        return self.morphism(m, n, fp.zeros(n.dim, m.dim))

    def is_iso(self, m: BaseObject, n: BaseObject) -> bool:
        """Isomorphism classes are determined by (dim, rank N)."""
        return self.contains(m) and self.contains(n) and (m.dim, m.nil_rank) == (n.dim, n.nil_rank)

    def ses_iso(self, e1: BaseSES, e2: BaseSES) -> bool:
        return all(self.is_iso(a, b) for a, b in (
            (e1.sub, e2.sub), (e1.middle, e2.middle), (e1.quotient, e2.quotient)))

    # limits and colimits

    def direct_sum(self, objs: Sequence[BaseObject]) -> DirectSum:
        self.require(*objs)
        total = self.obj(fp.block_diag([m.nil for m in objs]))
        injections, projections = [], []
        offset = 0
        for m in objs:
            embed = fp.zeros(total.dim, m.dim)
            embed[offset:offset + m.dim, :] = fp.identity(m.dim)
            injections.append(self.morphism(m, total, embed))
            projections.append(self.morphism(total, m, embed.T))
            offset += m.dim
        return DirectSum(total, tuple(injections), tuple(projections))

    def kernel_cokernel(self, f: BaseMorphism) -> KernelCokernel:
        self.require(f.domain)
        p = self.p
        basis = fp.nullspace(f.matrix, p)
        ker_nil = fp.solve(basis, fp.matmul(f.domain.nil, basis, p), p)
        rows = fp.left_nullspace(f.matrix, p)
        coker_nil = fp.solve_left(rows, fp.matmul(rows, f.codomain.nil, p), p)
        if ker_nil is None or coker_nil is None:
            raise CertificationError("Kernel or image of a morphism is not ε-stable")
        kernel = self.obj(ker_nil)
        cokernel = self.obj(coker_nil)
        return KernelCokernel(
            kernel,
            self.morphism(kernel, f.domain, basis),
            cokernel,
            self.morphism(f.codomain, cokernel, rows),
        )

    def pullback(self, f: BaseMorphism, g: BaseMorphism) -> Square:
        if f.codomain != g.codomain:
            raise InputError("Pullback needs a common codomain")
        ds = self.direct_sum([f.domain, g.domain])
        difference = (f @ ds.projections[0]) - (g @ ds.projections[1])
        kc = self.kernel_cokernel(difference)
        return Square(kc.kernel, ds.projections[0] @ kc.embedding, ds.projections[1] @ kc.embedding)

    def pushout(self, f: BaseMorphism, g: BaseMorphism) -> Square:
        if f.domain != g.domain:
            raise InputError("Pushout needs a common domain")
        ds = self.direct_sum([f.codomain, g.codomain])
        difference = (ds.injections[0] @ f) - (ds.injections[1] @ g)
        kc = self.kernel_cokernel(difference)
        return Square(kc.cokernel, kc.projection @ ds.injections[0], kc.projection @ ds.injections[1])

    # hom spaces

    def linearity_rows(self, m: BaseObject, n: BaseObject) -> np.ndarray:
        """Rows expressing f·N_m = N_n·f on vec(f) for f: m -> n."""
        return fp.kron(m.nil.T, fp.identity(n.dim)) - fp.kron(fp.identity(m.dim), n.nil)

    def hom_basis(self, m: BaseObject, n: BaseObject) -> list[BaseMorphism]:
        self.require(m, n)
        null = fp.nullspace(self.linearity_rows(m, n), self.p)
        return [self.morphism(m, n, fp.unvec(null[:, k], n.dim, m.dim)) for k in range(null.shape[1])]

    def solve_factorization(
        self, g: BaseMorphism, through: BaseMorphism, mode: Factorization
    ) -> BaseMorphism | None:
        """Solve through ∘ f = g (lift) or f ∘ through = g (extend) for an ε-linear f.

        Returns:
            The particular solution with free variables zero, or None if the
            system is inconsistent.
        """
        if mode is Factorization.LIFT_OVER_EPI:
            if g.codomain != through.codomain:
                raise InputError("Lift needs g and the epi to share a codomain")
            dom, cod = g.domain, through.domain
            equation = fp.kron(fp.identity(dom.dim), through.matrix)
        else:
            if g.domain != through.domain:
                raise InputError("Extension needs g and the mono to share a domain")
            dom, cod = through.codomain, g.codomain
            equation = fp.kron(through.matrix.T, fp.identity(cod.dim))
        system = np.vstack([equation, self.linearity_rows(dom, cod)])
        rhs = np.concatenate([fp.vec(g.matrix), np.zeros(system.shape[0] - equation.shape[0], dtype=np.int64)])
        x = fp.solve(system, rhs.reshape(-1, 1), self.p)
        if x is None:
            return None
        return self.morphism(dom, cod, fp.unvec(x[:, 0], cod.dim, dom.dim))

    # approximation machinery

    def free(self, rank: int) -> BaseObject:
        raise NotImplementedError

    def simple(self) -> BaseObject:
        return self.canonical(1)

    def is_projective(self, m: BaseObject) -> bool:
        raise NotImplementedError

    def free_cover(self, m: BaseObject) -> BaseSES:
        raise UnsupportedInputError(f"{self!r} has no projective covers")

    def injective_hull(self, m: BaseObject) -> BaseSES:
        raise UnsupportedInputError(f"{self!r} has no injective embeddings")


class FinVect(BaseCategory):
    kind = Kind.FINVECT
    name = "FinVect"
    enough_projectives = True
    enough_injectives = True

    def space(self, dim: int) -> BaseObject:
        return self.canonical(dim)

    def free(self, rank: int) -> BaseObject:
        return self.space(rank)

    def is_projective(self, m: BaseObject) -> bool:
        return True

    def free_cover(self, m: BaseObject) -> BaseSES:
        return BaseSES(self.zero_map(self.zero(), m), self.identity(m))

    def injective_hull(self, m: BaseObject) -> BaseSES:
        return BaseSES(self.identity(m), self.zero_map(m, self.zero()))


class DualNumbers(BaseCategory):
    """Modules over Λ = F_p[ε]/(ε²); Λ is self-injective, so free = projective = injective."""

    kind = Kind.DUAL
    name = "DualNumbers"
    enough_projectives = True
    enough_injectives = True

    def lam(self) -> BaseObject:
        return self.canonical(2, 1)

    def free(self, rank: int) -> BaseObject:
        return self.canonical(2 * rank, rank)

    def is_free(self, m: BaseObject) -> bool:
        return 2 * m.nil_rank == m.dim

    def is_projective(self, m: BaseObject) -> bool:
        return self.is_free(m)

    def free_cover(self, m: BaseObject) -> BaseSES:
        """Minimal free cover Λ^r -> M with r = dim M/εM.

        Generators are a deterministic lift of a basis of M/εM; the j-th copy of Λ
        sends 1 to the generator v_j and ε to N v_j.
        """
        self.require(m)
        p = self.p
        top = fp.left_nullspace(m.nil, p)
        generators = fp.solve(top, fp.identity(top.shape[0]), p)
        columns = []
        for j in range(generators.shape[1]):
            v = generators[:, j]
            columns.extend([v, fp.matmul(m.nil, v, p)])
        cover = self.free(len(columns) // 2)
        epi = self.morphism(cover, m, np.column_stack(columns) if columns else fp.zeros(m.dim, 0))
        kc = self.kernel_cokernel(epi)
        return BaseSES(kc.embedding, epi)

    def injective_hull(self, m: BaseObject) -> BaseSES:
        """Embedding M -> Λ^s with s = dim soc M, by dualizing the free cover of the transpose."""
        self.require(m)
        transpose_cover = self.free_cover(self.obj(m.nil.T)).epi
        rank = transpose_cover.domain.dim // 2
        swap = fp.block_diag([np.array([[0, 1], [1, 0]], dtype=np.int64)] * rank)
        mono = self.morphism(m, self.free(rank), fp.matmul(swap, transpose_cover.matrix.T, self.p))
        kc = self.kernel_cokernel(mono)
        return BaseSES(mono, kc.projection)


@lru_cache(maxsize=None)
def instance(kind: Kind | str, p: int = 2) -> BaseCategory:
    kind = Kind(kind)
    return FinVect(p) if kind is Kind.FINVECT else DualNumbers(p)


def category_of(m: BaseObject) -> BaseCategory:
    return instance(m.kind, m.p)


# oracles

Predicate = Callable[[BaseObject], bool]
Approximation = Callable[[BaseObject], BaseSES]


def _everything(m: BaseObject) -> bool:
    return True


@dataclass(frozen=True)
class CotorsionPairOracle:
    """A cotorsion pair (X, Y) given by membership predicates and approximations.

    `cover` and `envelope` certify every sequence they hand out.
    """

    name: str
    category: BaseCategory
    member_x: Predicate
    member_y: Predicate
    approx_cover: Approximation | None = None
    approx_envelope: Approximation | None = None

    @property
    def complete(self) -> bool:
        return self.approx_cover is not None and self.approx_envelope is not None

    def cover(self, m: BaseObject) -> BaseSES:
        if self.approx_cover is None:
            raise UnsupportedInputError(f"Pair {self.name} has no special precovers")
        ses = self.approx_cover(m).certify(f"{self.name} precover of {m!r}")
        if ses.quotient != m or not self.member_x(ses.middle) or not self.member_y(ses.sub):
            raise OracleSoundnessError(f"{self.name} precover of {m!r} breaks the X/Y contract")
        return ses

    def envelope(self, m: BaseObject) -> BaseSES:
        if self.approx_envelope is None:
            raise UnsupportedInputError(f"Pair {self.name} has no special preenvelopes")
        ses = self.approx_envelope(m).certify(f"{self.name} preenvelope of {m!r}")
        if ses.sub != m or not self.member_y(ses.middle) or not self.member_x(ses.quotient):
            raise OracleSoundnessError(f"{self.name} preenvelope of {m!r} breaks the X/Y contract")
        return ses


@dataclass(frozen=True)
class SubcategoryOracle:
    """A subcategory L with special L-precovers and/or special L-preenvelopes.

    `member_smd` decides membership in the summand closure Smd(L) and `sample`
    lists L-objects up to a dimension bound for orthogonality predicates.
    """

    name: str
    category: BaseCategory
    member_l: Predicate
    member_smd: Predicate
    sample: Callable[[int], list[BaseObject]]
    special_precover: Approximation | None = None
    special_preenvelope: Approximation | None = None

    def precover(self, m: BaseObject) -> BaseSES:
        if self.special_precover is None:
            raise UnsupportedInputError(f"Subcategory {self.name} is not special precovering")
        ses = self.special_precover(m).certify(f"{self.name} precover of {m!r}")
        if ses.quotient != m or not self.member_l(ses.middle):
            raise OracleSoundnessError(f"{self.name} precover of {m!r} does not start in the subcategory")
        return ses

    def preenvelope(self, m: BaseObject) -> BaseSES:
        if self.special_preenvelope is None:
            raise UnsupportedInputError(f"Subcategory {self.name} is not special preenveloping")
        ses = self.special_preenvelope(m).certify(f"{self.name} preenvelope of {m!r}")
        if ses.sub != m or not self.member_l(ses.middle):
            raise OracleSoundnessError(f"{self.name} preenvelope of {m!r} does not land in the subcategory")
        return ses


def _salce_envelope(half: CotorsionPairOracle, shortcut: bool, m: BaseObject) -> BaseSES:
    """0 -> M -> E -> X0 -> 0 from M -> I -> I/M and the special cover of I/M, pulled back."""
    cat = half.category
    if shortcut and half.member_y(m):
        return BaseSES(cat.identity(m), cat.zero_map(m, cat.zero()))
    hull = cat.injective_hull(m)
    cover = half.cover(hull.quotient)
    pb = cat.pullback(hull.epi, cover.epi)
    ds = cat.direct_sum([hull.middle, cover.middle])
    legs = cat.morphism(pb.obj, ds.obj, np.vstack([pb.left.matrix, pb.right.matrix]))
    into_pullback = cat.solve_factorization(ds.injections[0] @ hull.mono, legs, Factorization.LIFT_OVER_EPI)
    if into_pullback is None:
        raise OracleSoundnessError(f"{half.name}: {m!r} does not map into the pullback")
    return BaseSES(into_pullback, pb.right)


def _salce_cover(half: CotorsionPairOracle, shortcut: bool, m: BaseObject) -> BaseSES:
    """0 -> Y0 -> F -> M -> 0 from the free cover of M and the special envelope of its syzygy, pushed out."""
    cat = half.category
    if shortcut and half.member_x(m):
        return BaseSES(cat.zero_map(cat.zero(), m), cat.identity(m))
    free = cat.free_cover(m)
    envelope = half.envelope(free.sub)
    po = cat.pushout(free.mono, envelope.mono)
    ds = cat.direct_sum([free.middle, envelope.middle])
    legs = cat.morphism(ds.obj, po.obj, np.hstack([po.left.matrix, po.right.matrix]))
    out_of_pushout = cat.solve_factorization(free.epi @ ds.projections[0], legs, Factorization.EXTEND_ALONG_MONO)
    if out_of_pushout is None:
        raise OracleSoundnessError(f"{half.name}: the pushout does not map onto {m!r}")
    return BaseSES(po.right, out_of_pushout)


def salce_complete(half: CotorsionPairOracle, shortcut: bool = True) -> CotorsionPairOracle:
    """Synthesize the missing approximation of a half-complete pair.

    Args:
        half: Pair with exactly one of approx_cover / approx_envelope.
        shortcut: Return the trivial approximation when the object already lies
            in the target class; False always runs the pullback/pushout construction.
    """
    cat = half.category
    if half.complete:
        return half
    if half.approx_cover is not None:
        if not cat.enough_injectives:
            raise UnsupportedInputError(f"{cat!r} lacks injective embeddings")
        return replace(half, approx_envelope=partial(_salce_envelope, half, shortcut))
    if half.approx_envelope is not None:
        if not cat.enough_projectives:
            raise UnsupportedInputError(f"{cat!r} lacks projective covers")
        return replace(half, approx_cover=partial(_salce_cover, half, shortcut))
    raise InputError(f"Pair {half.name} has neither approximation")


def builtin_pairs(cat: BaseCategory) -> dict[str, CotorsionPairOracle]:
    if isinstance(cat, FinVect):
        return {
            "all_all": CotorsionPairOracle(
                "all_all", cat, _everything, _everything, cat.free_cover, cat.injective_hull),
        }
    if isinstance(cat, DualNumbers):
        return {
            "free_all": salce_complete(
                CotorsionPairOracle("free_all", cat, cat.is_free, _everything, approx_cover=cat.free_cover)),
            "all_free": salce_complete(
                CotorsionPairOracle("all_free", cat, _everything, cat.is_free, approx_envelope=cat.injective_hull)),
        }
    raise UnsupportedInputError(f"No built-in pairs for {cat!r}")


def _pad_precover(cat: FinVect, m: BaseObject) -> BaseSES:
    ds = cat.direct_sum([m, cat.space(m.dim % 2)])
    return BaseSES(ds.injections[1], ds.projections[0])


def _pad_preenvelope(cat: FinVect, m: BaseObject) -> BaseSES:
    ds = cat.direct_sum([m, cat.space(m.dim % 2)])
    return BaseSES(ds.injections[0], ds.projections[1])


def builtin_subcategories(cat: BaseCategory) -> dict[str, SubcategoryOracle]:
    """EvenDim over FinVect (additive, extension-closed, not summand-closed); Free over DualNumbers."""
    if isinstance(cat, FinVect):
        return {
            "even_dim": SubcategoryOracle(
                "even_dim",
                cat,
                member_l=lambda m: m.dim % 2 == 0,
                member_smd=_everything,
                sample=lambda max_dim: [cat.space(d) for d in range(0, max_dim + 1, 2)],
                special_precover=partial(_pad_precover, cat),
                special_preenvelope=partial(_pad_preenvelope, cat),
            ),
        }
    if isinstance(cat, DualNumbers):
        return {
            "free": SubcategoryOracle(
                "free",
                cat,
                member_l=cat.is_free,
                member_smd=cat.is_free,
                sample=lambda max_dim: [cat.free(r) for r in range(max_dim // 2 + 1)],
                special_precover=cat.free_cover,
                special_preenvelope=cat.injective_hull,
            ),
        }
    raise UnsupportedInputError(f"No built-in subcategories for {cat!r}")


def lookup_pair(cat: BaseCategory, name: str) -> CotorsionPairOracle:
    pairs = builtin_pairs(cat)
    if name not in pairs:
        raise UnsupportedInputError(f"Unknown pair {name!r} for {cat!r}; choose from {sorted(pairs)}")
    return pairs[name]


def lookup_subcategory(cat: BaseCategory, name: str) -> SubcategoryOracle:
    subs = builtin_subcategories(cat)
    if name not in subs:
        raise UnsupportedInputError(f"Unknown subcategory {name!r} for {cat!r}; choose from {sorted(subs)}")
    return subs[name]
