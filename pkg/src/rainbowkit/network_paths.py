"""Source-sink networks, families of path groups, and multicolored paths.

A family assigns source-to-sink paths to ordered groups; a path through the
network is *multicolored* when each of its edges lies on a path from a
distinct group. The constructive searches below work by contracting the
source together with the inner endpoints of a pivot group's first edges,
recursing on the remaining groups, and replaying the contractions in reverse
to rebuild a witness.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import (
    DichotomyViolation,
    GuaranteeViolation,
    InnerOverlapError,
    MalformedPathError,
    PreconditionError,
)

SOURCE = "s"
SINK = "t"

NetNode = Union[str, int]


def node_key(node: NetNode) -> tuple[int, int]:
    """Total order: source first, inner nodes by index, sink last."""
    if node == SOURCE:
        return (0, 0)
    if node == SINK:
        return (2, 0)
    return (1, node)


def _is_inner(node: object) -> bool:
    return isinstance(node, int) and not isinstance(node, bool) and node >= 0


@dataclass(frozen=True, slots=True)
class NetPath:
    """A simple source-to-sink path, stored as its node sequence."""

    nodes: tuple[NetNode, ...]

    def __post_init__(self) -> None:
        nodes = tuple(self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if len(nodes) < 2 or nodes[0] != SOURCE or nodes[-1] != SINK:
            raise MalformedPathError(f"path must run source to sink, got {nodes!r}")
        if not all(_is_inner(v) for v in nodes[1:-1]):
            raise MalformedPathError(
                f"inner nodes must be non-negative integers, got {nodes!r}")
        if len(set(nodes)) != len(nodes):
            raise MalformedPathError(f"repeated node in path {nodes!r}")

    @property
    def edges(self) -> tuple[tuple[NetNode, NetNode], ...]:
        return tuple(zip(self.nodes, self.nodes[1:]))

    @property
    def inner_nodes(self) -> frozenset[int]:
        return frozenset(self.nodes[1:-1])

    @property
    def edge_count(self) -> int:
        return len(self.nodes) - 1

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(node_key(v) for v in self.nodes)

    def __repr__(self) -> str:
        return "->".join(str(v) for v in self.nodes)


def make_path(nodes: Iterable[NetNode]) -> NetPath:
    return NetPath(tuple(nodes))


def _inner_conflict(paths: Iterable[NetPath]) -> Optional[int]:
    seen: set[int] = set()
    for p in paths:
        for v in sorted(p.inner_nodes):
            if v in seen:
                return v
            seen.add(v)
    return None


@dataclass(frozen=True, slots=True)
class PathGroup:
    """A set of source-sink paths sharing no inner vertex."""

    paths: tuple[NetPath, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))
        conflict = _inner_conflict(self.paths)
        if conflict is not None:
            raise InnerOverlapError(None, conflict)


@dataclass(frozen=True, slots=True)
class PathGroupFamily:
    """An ordered list of path groups; group positions act as colors."""

    groups: tuple[PathGroup, ...]
    source_indices: tuple[int, ...] = ()
    normalized: bool = False

    def __post_init__(self) -> None:
        if not self.source_indices:
            object.__setattr__(self, "source_indices", tuple(range(len(self.groups))))

    def __len__(self) -> int:
        return len(self.groups)

    def __getitem__(self, color: int) -> PathGroup:
        return self.groups[color]

    @property
    def total_paths(self) -> int:
        return sum(len(g.paths) for g in self.groups)

    @property
    def inner_nodes(self) -> frozenset[int]:
        return frozenset(
            v for g in self.groups for p in g.paths for v in p.inner_nodes)


def build_family(groups: Iterable[Iterable[NetPath]]) -> PathGroupFamily:
    """Validate and normalize raw path groups into a family.

    Groups are sets: exact duplicate paths collapse to one copy, and empty
    groups are dropped entirely since they can color nothing. Either kind of
    cleanup sets the ``normalized`` flag; ``source_indices`` keeps the input
    position of each surviving group. Two distinct paths of one group sharing
    an inner vertex raise InnerOverlapError naming the group and the vertex.
    """
    kept: list[PathGroup] = []
    indices: list[int] = []
    normalized = False
    for pos, raw in enumerate(groups):
        paths = sorted(raw, key=NetPath.key)
        unique = [p for i, p in enumerate(paths) if i == 0 or p != paths[i - 1]]
        if len(unique) != len(paths):
            normalized = True
        if not unique:
            normalized = True
            continue
        conflict = _inner_conflict(unique)
        if conflict is not None:
            raise InnerOverlapError(pos, conflict)
        kept.append(PathGroup(tuple(unique)))
        indices.append(pos)
    return PathGroupFamily(tuple(kept), tuple(indices), normalized)


@dataclass(frozen=True, slots=True)
class ColoredPath:
    """A simple path from the source carrying one distinct group index per edge."""

    nodes: tuple[NetNode, ...]
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        nodes = tuple(self.nodes)
        colors = tuple(self.colors)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "colors", colors)
        if not nodes or nodes[0] != SOURCE:
            raise MalformedPathError(f"colored path must start at the source, got {nodes!r}")
        if len(colors) != len(nodes) - 1:
            raise MalformedPathError("need exactly one color per edge")
        if len(set(nodes)) != len(nodes):
            raise MalformedPathError(f"repeated node in colored path {nodes!r}")
        if any(not _is_inner(v) for v in nodes[1:-1]) or (
                len(nodes) > 1 and nodes[-1] != SINK and not _is_inner(nodes[-1])):
            raise MalformedPathError(f"bad node in colored path {nodes!r}")
        if len(set(colors)) != len(colors):
            raise MalformedPathError("a color repeats along the path")

    @property
    def edges(self) -> tuple[tuple[NetNode, NetNode], ...]:
        return tuple(zip(self.nodes, self.nodes[1:]))

    @property
    def target(self) -> NetNode:
        return self.nodes[-1]

    def __repr__(self) -> str:
        return "->".join(str(v) for v in self.nodes) + f" via {list(self.colors)}"


def colored_path_conforms(path: ColoredPath, family: PathGroupFamily) -> bool:
    """True iff every edge of ``path`` lies on some path of its assigned group."""
    for e, c in zip(path.edges, path.colors):
        if not 0 <= c < len(family.groups):
            return False
        if not any(e in p.edges for p in family.groups[c].paths):
            return False
    return True


def _contract_group(
    paths: tuple[NetPath, ...], removed: set[NetNode]
) -> tuple[tuple[NetPath, ...], dict[NetNode, tuple[NetPath, NetNode]]]:
    """Contract ``{source} | removed`` into the source for one group.

    Returns the contracted group (sorted, duplicates collapsed) plus a map
    from the second node of each contracted path to the original path and the
    node the new source replaced; that map is all a witness needs to undo the
    contraction. Keying by second node is exact: within a group, two
    contracted paths can only collide on the direct source-sink edge.
    """
    starts: dict[NetNode, tuple[NetPath, NetNode]] = {}
    images: list[NetPath] = []
    for p in sorted(paths, key=NetPath.key):
        last = max(i for i, v in enumerate(p.nodes) if v == SOURCE or v in removed)
        image = NetPath((SOURCE,) + p.nodes[last + 1:])
        z = image.nodes[1]
        if z not in starts:
            starts[z] = (p, p.nodes[last])
            images.append(image)
    return tuple(sorted(images, key=NetPath.key)), starts


_Raw = tuple[tuple[NetNode, ...], tuple[int, ...]]


def reachable_witness_set(family: PathGroupFamily) -> dict[NetNode, ColoredPath]:
    """A set of reachable nodes, each with a multicolored witness path.

    Construction: mark the inner endpoints of the first group's source edges
    reachable through that group, contract them into the source, recurse on
    the remaining groups, and prepend the replaced source edge (colored by
    the pivot group) wherever a recursive witness needs it; finally, every
    source edge of every group contributes its one-edge witness, and a
    closure pass extends the witnesses until no single edge can add a node.
    The result is always a subset of the exact reachable set.

    Witness count: when every path ends on a private inner node that no
    other path visits, the count strictly exceeds the number of paths (no
    contraction can then collapse two paths of one group onto the direct
    source-sink edge, so the recursive count telescopes). Without some such
    restriction no bound is possible at all: the whole node set may be
    smaller than the family.
    """
    groups = [(c, g.paths) for c, g in enumerate(family.groups) if g.paths]
    raw = _witnesses(groups)
    for color, paths in groups:
        for p in paths:
            z = p.nodes[1]
            if z not in raw:
                raw[z] = ((SOURCE, z) if z != SINK else (SOURCE, SINK), (color,))
    _close_witnesses(raw, groups)
    return {node: ColoredPath(nodes, colors) for node, (nodes, colors) in raw.items()}


def _close_witnesses(
    raw: dict[NetNode, _Raw], groups: list[tuple[int, tuple[NetPath, ...]]]
) -> None:
    """Grow the witness map to a fixpoint: extend any witness by one edge of
    any group it does not use yet. Each node keeps its first witness."""
    options: dict[NetNode, list[tuple[NetNode, int]]] = {}
    for color, paths in groups:
        for p in paths:
            for u, v in p.edges:
                options.setdefault(u, []).append((v, color))
    for u in options:
        options[u] = sorted(set(options[u]), key=lambda vc: (node_key(vc[0]), vc[1]))
    queue = deque(sorted(raw, key=node_key))
    while queue:
        u = queue.popleft()
        nodes, colors = raw[u]
        for v, c in options.get(u, ()):
            if v not in raw and c not in colors and v not in nodes:
                raw[v] = (nodes + (v,), colors + (c,))
                queue.append(v)


def _witnesses(groups: list[tuple[int, tuple[NetPath, ...]]]) -> dict[NetNode, _Raw]:
    if not groups:
        return {SOURCE: ((SOURCE,), ())}
    pivot_color, pivot_paths = groups[0]
    rest = groups[1:]
    x_inner = sorted({p.nodes[1] for p in pivot_paths if p.nodes[1] != SINK})
    has_direct = any(p.edge_count == 1 for p in pivot_paths)

    if not x_inner:
        # pivot holds only the direct source-sink edge
        wit = dict(_witnesses(rest))
        if SINK not in wit:
            wit[SINK] = ((SOURCE, SINK), (pivot_color,))
        return wit

    removed = set(x_inner)
    contracted: list[tuple[int, tuple[NetPath, ...]]] = []
    starts_by_color: dict[int, dict[NetNode, tuple[NetPath, NetNode]]] = {}
    for color, paths in rest:
        images, starts = _contract_group(paths, removed)
        contracted.append((color, images))
        starts_by_color[color] = starts

    sub = _witnesses(contracted)
    wit: dict[NetNode, _Raw] = {SOURCE: ((SOURCE,), ())}
    for x in x_inner:
        wit[x] = ((SOURCE, x), (pivot_color,))
    for node, (nodes, colors) in sub.items():
        if node == SOURCE:
            continue
        _, replaced = starts_by_color[colors[0]][nodes[1]]
        if replaced == SOURCE:
            wit[node] = (nodes, colors)
        else:
            wit[node] = ((SOURCE, replaced) + nodes[1:], (pivot_color,) + colors)
    if SINK not in wit:
        if has_direct:
            wit[SINK] = ((SOURCE, SINK), (pivot_color,))
        else:
            # a path of another group stepping from a contracted node straight
            # to the sink yields a two-edge witness the recursion cannot see
            for color, paths in rest:
                hit = next(
                    (p for p in sorted(paths, key=NetPath.key)
                     if p.nodes[-2] in removed), None)
                if hit is not None:
                    wit[SINK] = ((SOURCE, hit.nodes[-2], SINK), (pivot_color, color))
                    break
    return wit


def find_multicolored_st_path(
    family: PathGroupFamily, inner_count: int
) -> Optional[ColoredPath]:
    """Find a source-to-sink path using each group for at most one edge.

    With more paths than ``inner_count`` ambient inner nodes a witness always
    exists and is produced by the contraction construction; failing to build
    one in that regime raises GuaranteeViolation, which would flag a bug. At
    or below the threshold, an exhaustive search decides existence exactly
    and returns the lexicographically first witness, or None.

    ``inner_count`` is the ambient network's inner node count; it must cover
    every inner node the family uses.
    """
    used = len(family.inner_nodes)
    if inner_count < used:
        raise PreconditionError(
            f"inner_count {inner_count} is below the {used} inner nodes in use")
    groups = [(c, g.paths) for c, g in enumerate(family.groups) if g.paths]
    if family.total_paths > inner_count:
        found = _contraction_st_path(groups)
        if found is None:
            raise GuaranteeViolation(
                "more paths than inner nodes but no multicolored witness was built")
        return ColoredPath(*found)
    for witness in iter_multicolored_st_paths(family):
        return witness
    return None


def _contraction_st_path(
    groups: list[tuple[int, tuple[NetPath, ...]]]
) -> Optional[_Raw]:
    if not groups:
        return None
    for color, paths in groups:
        if any(p.edge_count == 1 for p in paths):
            return ((SOURCE, SINK), (color,))
    pivot_color, pivot_paths = groups[0]
    removed = {p.nodes[1] for p in pivot_paths}
    for color, paths in groups[1:]:
        for p in sorted(paths, key=NetPath.key):
            if p.nodes[-2] in removed:
                return ((SOURCE, p.nodes[-2], SINK), (pivot_color, color))
    # no direct edges and no sink edges out of the contracted set anywhere, so
    # contracting loses no paths and the group sizes carry over exactly
    contracted: list[tuple[int, tuple[NetPath, ...]]] = []
    starts_by_color: dict[int, dict[NetNode, tuple[NetPath, NetNode]]] = {}
    for color, paths in groups[1:]:
        images, starts = _contract_group(paths, removed)
        contracted.append((color, images))
        starts_by_color[color] = starts
    sub = _contraction_st_path(contracted)
    if sub is None:
        return None
    nodes, colors = sub
    _, replaced = starts_by_color[colors[0]][nodes[1]]
    if replaced == SOURCE:
        return (nodes, colors)
    return ((SOURCE, replaced) + nodes[1:], (pivot_color,) + colors)


def iter_multicolored_st_paths(family: PathGroupFamily) -> Iterator[ColoredPath]:
    """Yield every multicolored source-to-sink path, in lexicographic order.

    Order: by node sequence under the source/inner/sink order, then by color
    sequence. Exhaustive backtracking; meant for small networks.
    """
    options: dict[NetNode, list[tuple[NetNode, int]]] = {}
    for color, group in enumerate(family.groups):
        for p in group.paths:
            for u, v in p.edges:
                options.setdefault(u, []).append((v, color))
    for u in options:
        options[u] = sorted(set(options[u]), key=lambda vc: (node_key(vc[0]), vc[1]))

    nodes: list[NetNode] = [SOURCE]
    colors: list[int] = []
    on_path: set[NetNode] = {SOURCE}
    used: set[int] = set()

    def walk(u: NetNode) -> Iterator[ColoredPath]:
        if u == SINK:
            yield ColoredPath(tuple(nodes), tuple(colors))
            return
        for v, c in options.get(u, ()):
            if v in on_path or c in used:
                continue
            nodes.append(v)
            colors.append(c)
            on_path.add(v)
            used.add(c)
            yield from walk(v)
            nodes.pop()
            colors.pop()
            on_path.remove(v)
            used.remove(c)

    yield from walk(SOURCE)


@dataclass(frozen=True, slots=True)
class Regimentation:
    """Pairwise innerly disjoint representatives with their copy counts."""

    classes: tuple[tuple[NetPath, int], ...]


def is_regimented(paths: Iterable[NetPath]) -> Optional[Regimentation]:
    """Partition identical copies into classes and test the regimented shape.

    A multiset of source-sink paths is regimented when every class of
    identical paths has exactly edge-count-minus-one members and the class
    representatives share no inner vertex. Returns the unique Regimentation,
    or None. A direct source-sink path can never occur in a regimented
    multiset (its class would need zero members).
    """
    counter = Counter(paths)
    reps = sorted(counter, key=NetPath.key)
    for rep in reps:
        if counter[rep] != rep.edge_count - 1:
            return None
    if _inner_conflict(reps) is not None:
        return None
    return Regimentation(tuple((rep, counter[rep]) for rep in reps))


def verify_regimented_dichotomy(
    paths: Iterable[NetPath],
) -> Union[Regimentation, ColoredPath]:
    """Decide which side of the regimented/traversable dichotomy holds.

    Requires exactly as many paths as distinct inner nodes in use. Regimented
    multisets admit no multicolored source-sink path, and non-regimented ones
    always admit one, searched with each path as its own singleton group, so
    witness colors index the paths in input order. Both sides failing would
    be a bug and raises DichotomyViolation.
    """
    plist = list(paths)
    used = len({v for p in plist for v in p.inner_nodes})
    if len(plist) != used:
        raise PreconditionError(
            f"need exactly {used} paths for {used} inner nodes, got {len(plist)}")
    regimentation = is_regimented(plist)
    if regimentation is not None:
        return regimentation
    family = PathGroupFamily(tuple(PathGroup((p,)) for p in plist))
    witness = find_multicolored_st_path(family, used)
    if witness is None:
        raise DichotomyViolation("multiset is neither regimented nor traversable")
    return witness
