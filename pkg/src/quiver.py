"""Finite quivers, opposite quivers, incidence sets, paths and the vertex filtration."""

import logging
import string
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx

from errors import CertificationError, InputError, UnsupportedInputError

log = logging.getLogger(__name__)

Path = tuple[str, ...]  # arrow ids in traversal order; () is the trivial path


class Side(Enum):
    INTO = "into"
    OUT_OF = "out_of"


class Root(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph. Loops and parallel arrows are allowed."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError(f"Duplicate vertex ids in {list(self.vertices)}")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise InputError(f"Duplicate arrow ids in {ids}")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise InputError(f"Arrow {a.id}: {a.source}->{a.target} leaves the vertex set")

    @classmethod
    def build(cls, vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]] = ()) -> "Quiver":
        """Build from plain (id, source, target) triples."""
        return cls(tuple(vertices), tuple(Arrow(str(a), str(s), str(t)) for a, s, t in arrows))

    @cached_property
    def _arrows_by_id(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def position(self) -> dict[str, int]:
        """Declaration index of every vertex."""
        return {v: n for n, v in enumerate(self.vertices)}

    @cached_property
    def arrow_position(self) -> dict[str, int]:
        return {a.id: n for n, a in enumerate(self.arrows)}

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._arrows_by_id[arrow_id]
        except KeyError:
            raise InputError(f"Unknown arrow id: {arrow_id}") from None

    def require_vertex(self, i: str) -> str:
        if i not in self.position:
            raise InputError(f"Unknown vertex id: {i}")
        return i


@dataclass(frozen=True)
class VertexFiltration:
    """V_0 = ∅ ⊆ V_1 ⊆ ... ⊆ V_λ, each level listed in vertex declaration order."""

    levels: tuple[tuple[str, ...], ...]
    stabilized_at: int

    def level(self, alpha: int) -> frozenset[str]:
        return frozenset(self.levels[min(alpha, self.stabilized_at)])

    def added_at(self, alpha: int) -> tuple[str, ...]:
        """V_alpha minus V_(alpha-1), in declaration order."""
        if alpha <= 0 or alpha > self.stabilized_at:
            return ()
        previous = self.level(alpha - 1)
        return tuple(v for v in self.levels[alpha] if v not in previous)

    @property
    def final(self) -> tuple[str, ...]:
        return self.levels[self.stabilized_at]


@dataclass(frozen=True)
class Rootedness:
    rooted: bool
    filtration: VertexFiltration


def opposite(q: Quiver) -> Quiver:
    """Same vertices, every arrow reversed under its own id."""
    return Quiver(q.vertices, tuple(Arrow(a.id, a.target, a.source) for a in q.arrows))


def incident_arrows(q: Quiver, i: str, side: Side) -> tuple[Arrow, ...]:
    """Arrows into or out of i, in declaration order."""
    q.require_vertex(i)
    if side is Side.INTO:
        return tuple(a for a in q.arrows if a.target == i)
    return tuple(a for a in q.arrows if a.source == i)


def left_filtration(q: Quiver) -> VertexFiltration:
    """V_(α+1) collects the vertices all of whose incoming arrows start in V_α."""
    levels: list[tuple[str, ...]] = [()]
    current: frozenset[str] = frozenset()
    while True:
        nxt = tuple(
            i for i in q.vertices
            if all(a.source in current for a in incident_arrows(q, i, Side.INTO))
        )
        if frozenset(nxt) == current:
            break
        levels.append(nxt)
        current = frozenset(nxt)
    return VertexFiltration(tuple(levels), stabilized_at=len(levels) - 1)


def right_filtration(q: Quiver) -> VertexFiltration:
    """The left filtration of the opposite quiver; drives the Ψ engines."""
    return left_filtration(opposite(q))


def to_networkx(q: Quiver) -> nx.MultiDiGraph:
    g = nx.MultiDiGraph()
    g.add_nodes_from(q.vertices)
    for a in q.arrows:
        g.add_edge(a.source, a.target, key=a.id)
    return g


def has_oriented_cycle(q: Quiver) -> bool:
    return not nx.is_directed_acyclic_graph(to_networkx(q))


def rootedness(q: Quiver, side: Root) -> Rootedness:
    """Decide left (or right) rootedness and cross-check it against an independent cycle search.

    For finite quivers either side is rooted exactly when there is no oriented cycle.
    """
    filtration = left_filtration(q if side is Root.LEFT else opposite(q))
    rooted = len(filtration.final) == len(q.vertices)
    if rooted == has_oriented_cycle(q):
        raise CertificationError(
            f"{side.value} filtration says rooted={rooted} but cycle search disagrees"
        )
    log.debug("%s filtration of %d vertices stabilized at %d", side.value, len(q.vertices), filtration.stabilized_at)
    return Rootedness(rooted, filtration)


def require_rooted(q: Quiver, side: Root) -> VertexFiltration:
    result = rootedness(q, side)
    if not result.rooted:
        raise UnsupportedInputError(f"Quiver is not {side.value}-rooted")
    return result.filtration


def topological_order(q: Quiver) -> tuple[str, ...]:
    """Topological order with declaration order breaking ties."""
    try:
        return tuple(nx.lexicographical_topological_sort(to_networkx(q), key=q.position.__getitem__))
    except nx.NetworkXUnfeasible:
        raise UnsupportedInputError("Quiver has an oriented cycle") from None


def enumerate_paths(q: Quiver, i: str, j: str) -> list[Path]:
    """All paths i -> j, lexicographic in arrow declaration order.

    Depth-first search over outgoing arrows in declaration order already yields
    that order, since no path to j can extend another path to j in an acyclic quiver.
    """
    q.require_vertex(i)
    q.require_vertex(j)
    if has_oriented_cycle(q):
        raise UnsupportedInputError("Path sets of a cyclic quiver may be infinite")
    paths: list[Path] = []

    def walk(v: str, prefix: Path) -> None:
        if v == j:
            paths.append(prefix)
            return
        for a in incident_arrows(q, v, Side.OUT_OF):
            walk(a.target, prefix + (a.id,))

    walk(i, ())
    return paths


def linear_quiver(n: int) -> Quiver:
    """A_n oriented 1 -> 2 -> ... -> n, arrows named a, b, c, ... and v26, v27, ... past z."""
    vertices = [str(k) for k in range(1, n + 1)]
    names = [string.ascii_lowercase[k] if k < len(string.ascii_lowercase) else f"v{k}" for k in range(n - 1)]
    return Quiver.build(vertices, [(names[k], vertices[k], vertices[k + 1]) for k in range(n - 1)])


def fork_quiver() -> Quiver:
    """Two sources merging into 3, which feeds the sink 4."""
    return Quiver.build(["1", "2", "3", "4"], [("a", "1", "3"), ("b", "2", "3"), ("c", "3", "4")])


def loop_quiver() -> Quiver:
    return Quiver.build(["v"], [("l", "v", "v")])
