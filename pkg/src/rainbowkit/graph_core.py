"""Bipartite matching primitives: validation, unions of matchings, and
augmenting alternating paths."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Optional

from .errors import NotAugmentingError, OverlapError


class Side(IntEnum):
    LEFT = 0
    RIGHT = 1


@dataclass(frozen=True, slots=True, order=True)
class Vertex:
    """One endpoint of the bipartite graph, identified by side and index."""

    side: Side
    index: int

    def __repr__(self) -> str:
        return f"{'L' if self.side is Side.LEFT else 'R'}{self.index}"


@dataclass(frozen=True, slots=True, order=True)
class Edge:
    """An edge joining a left vertex to a right vertex."""

    left: Vertex
    right: Vertex

    def __post_init__(self) -> None:
        if self.left.side is not Side.LEFT or self.right.side is not Side.RIGHT:
            raise ValueError(f"edge endpoints must be (left, right), got {self!r}")

    def __repr__(self) -> str:
        return f"({self.left.index},{self.right.index})"

    @property
    def vertices(self) -> tuple[Vertex, Vertex]:
        return (self.left, self.right)


def edge(left_index: int, right_index: int) -> Edge:
    """Shorthand edge constructor from a pair of indices."""
    return Edge(Vertex(Side.LEFT, left_index), Vertex(Side.RIGHT, right_index))


@dataclass(frozen=True, slots=True)
class Matching:
    """A set of pairwise vertex-disjoint edges.

    Construction checks disjointness and raises OverlapError naming the first
    conflicting vertex in edge order.
    """

    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        seen: set[Vertex] = set()
        for e in sorted(self.edges):
            for v in e.vertices:
                if v in seen:
                    raise OverlapError(v)
                seen.add(v)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __contains__(self, item: object) -> bool:
        return item in self.edges

    @property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(v for e in self.edges for v in e.vertices)

    def covers(self, vertex: Vertex) -> bool:
        return any(vertex in e.vertices for e in self.edges)

    def key(self) -> tuple[Edge, ...]:
        """Canonical sort key: the edges in ascending order."""
        return tuple(sorted(self.edges))


def validate_matching(edges: Iterable[Edge]) -> Matching:
    """Check pairwise disjointness and wrap the edges as a Matching."""
    return Matching(frozenset(edges))


@dataclass(frozen=True, slots=True)
class MatchingFamily:
    """An ordered list of matchings; positions act as colors."""

    members: tuple[Matching, ...]

    @classmethod
    def of(cls, members: Iterable[Matching | Iterable[Edge]]) -> "MatchingFamily":
        coerced = tuple(
            m if isinstance(m, Matching) else validate_matching(m) for m in members
        )
        return cls(coerced)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Matching]:
        return iter(self.members)

    def __getitem__(self, color: int) -> Matching:
        return self.members[color]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)


@dataclass(frozen=True, slots=True)
class RainbowMatching:
    """An injective partial choice of one edge per color whose range is a matching."""

    entries: tuple[tuple[int, Edge], ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.entries))
        object.__setattr__(self, "entries", ordered)
        colors = [c for c, _ in ordered]
        if len(set(colors)) != len(colors):
            raise ValueError("a color appears twice in the rainbow matching")
        edges = [e for _, e in ordered]
        if len(set(edges)) != len(edges):
            raise ValueError("an edge appears twice in the rainbow matching")
        validate_matching(edges)

    @classmethod
    def of(cls, assignment: Mapping[int, Edge]) -> "RainbowMatching":
        return cls(tuple(assignment.items()))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(c for c, _ in self.entries)

    @property
    def matching(self) -> Matching:
        return Matching(frozenset(e for _, e in self.entries))

    def edge_of(self, color: int) -> Edge:
        return dict(self.entries)[color]

    def as_dict(self) -> dict[int, Edge]:
        return dict(self.entries)


def rainbow_is_valid(rainbow: RainbowMatching, family: MatchingFamily) -> bool:
    """True iff every chosen edge belongs to the matching of its color."""
    return all(0 <= c < len(family) and e in family[c] for c, e in rainbow.entries)


@dataclass(frozen=True, slots=True)
class Component:
    """A path or cycle component of the union of two matchings."""

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    is_cycle: bool


@dataclass(frozen=True, slots=True)
class AlternatingPath:
    """A simple path whose edges alternate in and out of a base matching."""

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    base: Matching


def symmetric_difference_components(g: Matching, h: Matching) -> tuple[Component, ...]:
    """Split the union of two matchings into its path and cycle components.

    Every vertex meets at most one edge of either matching, so each component
    is a simple path or an even cycle alternating between the two matchings;
    an edge shared by both matchings forms a one-edge path of its own. Output
    is canonical: paths start at their smallest endpoint, cycles start at
    their smallest vertex and step toward its smaller neighbor, and the
    components are ordered by smallest vertex.
    """
    union = g.edges | h.edges
    adj: dict[Vertex, list[Vertex]] = {}
    edge_at: dict[tuple[Vertex, Vertex], Edge] = {}
    for e in union:
        adj.setdefault(e.left, []).append(e.right)
        adj.setdefault(e.right, []).append(e.left)
        edge_at[(e.left, e.right)] = e
        edge_at[(e.right, e.left)] = e
    for v in adj:
        adj[v].sort()

    seen: set[Vertex] = set()
    components: list[Component] = []
    for start in sorted(adj):
        if start in seen:
            continue
        members = _component_vertices(start, adj)
        endpoints = sorted(v for v in members if len(adj[v]) == 1)
        is_cycle = not endpoints
        first = min(members) if is_cycle else endpoints[0]
        verts: list[Vertex] = [first]
        edges_out: list[Edge] = []
        prev: Optional[Vertex] = None
        cur = first
        while True:
            nexts = [w for w in adj[cur] if w != prev]
            if not nexts:
                break
            nxt = nexts[0]
            edges_out.append(edge_at[(cur, nxt)])
            if is_cycle and nxt == first:
                break
            verts.append(nxt)
            prev, cur = cur, nxt
        seen.update(members)
        components.append(Component(tuple(verts), tuple(edges_out), is_cycle))
    return tuple(components)


def _component_vertices(start: Vertex, adj: dict[Vertex, list[Vertex]]) -> set[Vertex]:
    out = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in out:
                out.add(w)
                frontier.append(w)
    return out


def augmenting_paths(base: Matching, other: Matching) -> tuple[AlternatingPath, ...]:
    """All vertex-disjoint augmenting paths for ``base`` inside ``base | other``.

    These are exactly the path components of the union whose two endpoints
    are unmatched by ``base``. If ``len(other) == len(base) + q`` then at
    least ``q`` paths are returned.
    """
    matched = base.vertices
    paths = []
    for comp in symmetric_difference_components(base, other):
        if comp.is_cycle:
            continue
        if comp.vertices[0] in matched or comp.vertices[-1] in matched:
            continue
        paths.append(AlternatingPath(comp.vertices, comp.edges, base))
    return tuple(paths)


def _augmenting_defect(base: Matching, path: AlternatingPath) -> Optional[str]:
    verts, edges = path.vertices, path.edges
    if len(verts) < 2 or len(edges) != len(verts) - 1:
        return "not a path"
    if len(set(verts)) != len(verts):
        return "repeated vertex"
    for i, e in enumerate(edges):
        if set(e.vertices) != {verts[i], verts[i + 1]}:
            return "edges do not follow the vertex order"
        if (e in base) != (i % 2 == 1):
            return "edges do not alternate around the base matching"
    if base.covers(verts[0]) or base.covers(verts[-1]):
        return "an endpoint is already matched"
    return None


def apply_augmentation(base: Matching, path: AlternatingPath) -> Matching:
    """Swap the base edges along an augmenting path, growing the matching by one.

    Raises NotAugmentingError when ``path`` is not augmenting for ``base``.
    """
    defect = _augmenting_defect(base, path)
    if defect is not None:
        raise NotAugmentingError(defect)
    result = Matching(base.edges ^ frozenset(path.edges))
    assert len(result) == len(base) + 1
    return result
