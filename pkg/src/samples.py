"""Seeded and exhaustive enumeration of base objects, representations and quivers for sweeps."""

import itertools
import logging
from collections.abc import Iterator

import numpy as np

import fp
from base import BaseCategory, BaseMorphism, BaseObject, Kind
from quiver import Quiver
from rep import Representation

log = logging.getLogger(__name__)


def random_invertible(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        candidate = rng.integers(0, p, size=(n, n))
        if fp.rank(candidate, p) == n:
            return fp.mod_p(candidate, p)


def random_object(cat: BaseCategory, max_dim: int, rng: np.random.Generator) -> BaseObject:
    """Uniform dimension, uniform rank, and for dual numbers a random change of basis."""
    dim = int(rng.integers(0, max_dim + 1))
    if cat.kind is Kind.FINVECT or dim < 2:
        return cat.canonical(dim)
    rank = int(rng.integers(0, dim // 2 + 1))
    canonical = cat.canonical(dim, rank)
    basis = random_invertible(dim, cat.p, rng)
    nil = fp.matmul(fp.matmul(basis, canonical.nil, cat.p), fp.inverse(basis, cat.p), cat.p)
    return cat.obj(nil)


def random_morphism(cat: BaseCategory, m: BaseObject, n: BaseObject, rng: np.random.Generator) -> BaseMorphism:
    """A uniform element of Hom(m, n)."""
    result = cat.zero_map(m, n)
    for g in cat.hom_basis(m, n):
        coefficient = int(rng.integers(0, cat.p))
        if coefficient:
            result = result + cat.morphism(m, n, coefficient * g.matrix)
    return result


def random_representation(
    q: Quiver, cat: BaseCategory, max_dim: int, rng: np.random.Generator
) -> Representation:
    objects = {v: random_object(cat, max_dim, rng) for v in q.vertices}
    maps = {a.id: random_morphism(cat, objects[a.source], objects[a.target], rng) for a in q.arrows}
    return Representation(q, cat, objects, maps)


def random_representations(
    q: Quiver, cat: BaseCategory, max_dim: int, count: int, seed: int = 0
) -> list[Representation]:
    rng = np.random.default_rng(seed)
    return [random_representation(q, cat, max_dim, rng) for _ in range(count)]


def all_objects(cat: BaseCategory, max_dim: int) -> list[BaseObject]:
    """One object per isomorphism class, i.e. per (dim, rank)."""
    if cat.kind is Kind.FINVECT:
        return [cat.canonical(d) for d in range(max_dim + 1)]
    return [cat.canonical(d, r) for d in range(max_dim + 1) for r in range(d // 2 + 1)]


def square_zero_matrices(dim: int, p: int) -> Iterator[np.ndarray]:
    """Every dim x dim matrix over F_p with N·N = 0; p**(dim*dim) candidates are scanned."""
    for entries in itertools.product(range(p), repeat=dim * dim):
        nil = np.array(entries, dtype=np.int64).reshape(dim, dim)
        if not np.any(fp.matmul(nil, nil, p)):
            yield nil


def all_morphisms(cat: BaseCategory, m: BaseObject, n: BaseObject) -> Iterator[BaseMorphism]:
    basis = cat.hom_basis(m, n)
    for coefficients in itertools.product(range(cat.p), repeat=len(basis)):
        matrix = fp.zeros(n.dim, m.dim)
        for c, g in zip(coefficients, basis):
            matrix = matrix + c * g.matrix
        yield cat.morphism(m, n, matrix)


def all_representations(q: Quiver, cat: BaseCategory, max_dim: int) -> Iterator[Representation]:
    """Every representation with canonical vertex objects up to max_dim and every choice of arrow maps.

    This covers every isomorphism class, possibly more than once.
    """
    choices = all_objects(cat, max_dim)
    for objs in itertools.product(choices, repeat=len(q.vertices)):
        objects = dict(zip(q.vertices, objs))
        per_arrow = [list(all_morphisms(cat, objects[a.source], objects[a.target])) for a in q.arrows]
        for maps in itertools.product(*per_arrow):
            yield Representation(q, cat, objects, {a.id: f for a, f in zip(q.arrows, maps)})


def random_quiver(rng: np.random.Generator, max_vertices: int = 5, max_arrows: int = 6) -> Quiver:
    """Loops and parallel arrows included."""
    n = int(rng.integers(1, max_vertices + 1))
    vertices = [str(k) for k in range(1, n + 1)]
    arrows = [
        (f"x{k}", vertices[int(rng.integers(0, n))], vertices[int(rng.integers(0, n))])
        for k in range(int(rng.integers(0, max_arrows + 1)))
    ]
    return Quiver.build(vertices, arrows)


def random_quivers(count: int, seed: int = 0, max_vertices: int = 5, max_arrows: int = 6) -> list[Quiver]:
    rng = np.random.default_rng(seed)
    quivers = [random_quiver(rng, max_vertices, max_arrows) for _ in range(count)]
    log.debug("sampled %d quivers with seed %d", count, seed)
    return quivers
