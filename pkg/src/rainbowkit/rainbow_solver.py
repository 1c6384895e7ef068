"""Rainbow-matching construction by multicolored augmentation, plus the
classifier for the unique family shape that blocks a full rainbow matching."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Union

from .errors import (
    GuaranteeViolation,
    NoUnrepresentedColors,
    PreconditionError,
    TheoremViolation,
)
from .graph_core import (
    AlternatingPath,
    Edge,
    Matching,
    MatchingFamily,
    RainbowMatching,
    Side,
    Vertex,
    augmenting_paths,
    rainbow_is_valid,
)
from .network_paths import (
    SINK,
    SOURCE,
    NetNode,
    NetPath,
    PathGroup,
    PathGroupFamily,
    find_multicolored_st_path,
    iter_multicolored_st_paths,
)


@dataclass(frozen=True, slots=True)
class RepresentationState:
    """A partial rainbow matching together with its source family."""

    family: MatchingFamily
    current: RainbowMatching

    @property
    def unrepresented(self) -> tuple[int, ...]:
        chosen = self.current.colors
        return tuple(c for c in range(len(self.family)) if c not in chosen)


@dataclass(frozen=True, eq=False)
class NetworkTranslation:
    """Bookkeeping that links a contracted network back to the bipartite graph.

    ``matched_edges`` lists the current rainbow edges in order; inner node i
    of the network stands for ``matched_edges[i]``. ``colors`` maps group
    positions back to family colors. ``edge_origin`` gives, per group, the
    unique graph edge behind each non-direct network edge; ``direct_choices``
    lists, per group, every single-edge augmenting path hiding behind the
    direct source-sink edge.
    """

    matched_edges: tuple[Edge, ...]
    colors: tuple[int, ...]
    edge_origin: tuple[dict[tuple[NetNode, NetNode], Edge], ...]
    direct_choices: tuple[tuple[Edge, ...], ...]


def build_contracted_network(
    state: RepresentationState,
) -> tuple[PathGroupFamily, int, NetworkTranslation]:
    """Translate every augmenting path of every unrepresented color into a
    network over one inner node per currently matched edge.

    Walking an augmenting path from its unmatched left endpoint, each edge
    outside the matching becomes one network edge: entering the matched edge
    f gives source->v(f), stepping from matched f to matched g gives
    v(f)->v(g), leaving f for an unmatched right vertex gives v(f)->sink, and
    a path that is a single edge becomes the direct source->sink edge. Since
    the augmenting paths of one color are vertex disjoint, each group is
    innerly disjoint, and only the direct edge can be shared by several paths
    of a color. Colors with no augmenting path are dropped.

    Returns the network family, the inner node count, and the translation
    needed to pull a network witness back to graph edges.
    """
    unrep = state.unrepresented
    if not unrep:
        raise NoUnrepresentedColors("every color is already represented")
    base = state.current.matching
    matched = tuple(sorted(base.edges))
    node_of = {e: i for i, e in enumerate(matched)}

    groups: list[PathGroup] = []
    colors: list[int] = []
    origins: list[dict[tuple[NetNode, NetNode], Edge]] = []
    directs: list[tuple[Edge, ...]] = []
    for color in unrep:
        origin: dict[tuple[NetNode, NetNode], Edge] = {}
        direct: list[Edge] = []
        nets: list[NetPath] = []
        for alt in augmenting_paths(base, state.family[color]):
            nodes, graph_edges = _translate(alt, node_of)
            if len(nodes) == 2:
                direct.append(graph_edges[0])
                continue
            net = NetPath(nodes)
            nets.append(net)
            for net_edge, graph_edge in zip(net.edges, graph_edges):
                origin[net_edge] = graph_edge
        if direct:
            nets.append(NetPath((SOURCE, SINK)))
        if not nets:
            continue
        groups.append(PathGroup(tuple(sorted(nets, key=NetPath.key))))
        colors.append(color)
        origins.append(origin)
        directs.append(tuple(sorted(direct)))

    family = PathGroupFamily(tuple(groups))
    translation = NetworkTranslation(
        matched, tuple(colors), tuple(origins), tuple(directs))
    return family, len(matched), translation


def _translate(
    path: AlternatingPath, node_of: dict[Edge, int]
) -> tuple[tuple[NetNode, ...], tuple[Edge, ...]]:
    verts, edges = path.vertices, path.edges
    if verts[0].side is Side.RIGHT:
        verts = tuple(reversed(verts))
        edges = tuple(reversed(edges))
    free = edges[0::2]
    through = edges[1::2]
    nodes = (SOURCE,) + tuple(node_of[e] for e in through) + (SINK,)
    return nodes, free


def find_rainbow_matching(
    family: MatchingFamily, size: int
) -> Optional[RainbowMatching]:
    """Search for a rainbow matching with ``size`` edges, one per chosen color.

    The search grows a partial rainbow matching by multicolored augmentation:
    translate all augmenting paths of every unrepresented color into the
    contracted network, take a multicolored source-sink path (constructed
    directly whenever the network holds more paths than matched edges), pull
    it back, and apply the symmetric difference, recoloring each new edge by
    the color that supplied its network edge. Dead ends backtrack over the
    remaining multicolored paths and pull-back choices, so the search is
    exhaustive: None means no rainbow matching of the requested size exists.
    States are memoized up to permuting colors of identical matchings.

    Raises GuaranteeViolation when the sorted-size threshold promises success
    but the search fails, which would flag a bug, not an input property.
    """
    if size < 0:
        raise PreconditionError("size must be non-negative")
    if size == 0:
        return RainbowMatching(())
    result = None
    if size <= len(family):
        canon = _state_canonicalizer(family)
        dead: set[tuple[tuple[int, Edge], ...]] = set()
        start = RepresentationState(family, RainbowMatching(()))
        result = _grow(start, size, canon, dead)
        if result is None and drisko_condition(family.sizes, size):
            raise GuaranteeViolation(
                "size-threshold condition holds but the search failed")
    if result is not None:
        assert rainbow_is_valid(result, family)
    return result


def _state_canonicalizer(
    family: MatchingFamily,
) -> Callable[[dict[int, Edge]], tuple[tuple[int, Edge], ...]]:
    """Quotient states by swapping colors that hold identical matchings."""
    classes: dict[tuple[Edge, ...], list[int]] = {}
    for color, member in enumerate(family):
        classes.setdefault(member.key(), []).append(color)
    class_list = list(classes.values())

    def canon(assignment: dict[int, Edge]) -> tuple[tuple[int, Edge], ...]:
        out: list[tuple[int, Edge]] = []
        for cols in class_list:
            chosen = sorted(e for c, e in assignment.items() if c in cols)
            out.extend(zip(cols, chosen))
        return tuple(sorted(out))

    return canon


def _grow(state, target, canon, dead) -> Optional[RainbowMatching]:
    if len(state.current) == target:
        return state.current
    assignment = state.current.as_dict()
    key = canon(assignment)
    if key in dead:
        return None
    if len(state.current) >= len(state.family):
        dead.add(key)
        return None
    network, inner_count, translation = build_contracted_network(state)
    for nodes, net_colors, new_edges in _augmentation_steps(
            network, inner_count, translation):
        child = _apply_step(state, nodes, net_colors, new_edges, translation)
        result = _grow(child, target, canon, dead)
        if result is not None:
            return result
    dead.add(key)
    return None


def _augmentation_steps(
    network: PathGroupFamily, inner_count: int, translation: NetworkTranslation
) -> Iterator[tuple[tuple[NetNode, ...], tuple[int, ...], tuple[Edge, ...]]]:
    """Candidate augmentations: the constructed witness first, then every
    other multicolored path, each expanded over its pull-back choices."""
    first: Optional[tuple[tuple[NetNode, ...], tuple[int, ...]]] = None
    if network.total_paths > inner_count:
        witness = find_multicolored_st_path(network, inner_count)
        first = (witness.nodes, witness.colors)
        yield from _expand_pullbacks(witness.nodes, witness.colors, translation)
    for witness in iter_multicolored_st_paths(network):
        if (witness.nodes, witness.colors) == first:
            continue
        yield from _expand_pullbacks(witness.nodes, witness.colors, translation)


def _expand_pullbacks(nodes, net_colors, translation):
    if nodes == (SOURCE, SINK):
        for e in translation.direct_choices[net_colors[0]]:
            yield nodes, net_colors, (e,)
        return
    edges = tuple(
        translation.edge_origin[c][ne]
        for ne, c in zip(zip(nodes, nodes[1:]), net_colors))
    yield nodes, net_colors, edges


def _apply_step(state, nodes, net_colors, new_edges, translation):
    removed = {translation.matched_edges[v] for v in nodes[1:-1]}
    assignment = {
        c: e for c, e in state.current.as_dict().items() if e not in removed}
    for group_pos, e in zip(net_colors, new_edges):
        assignment[translation.colors[group_pos]] = e
    grown = RainbowMatching.of(assignment)
    assert len(grown) == len(state.current) + 1
    return RepresentationState(state.family, grown)


def drisko_condition(sizes: Iterable[int], size: int) -> bool:
    """Evaluate the sorted-size threshold that forces a rainbow matching.

    With member sizes ascending, sums (size_i - target + 1) over the first
    (count - target + 1) members and compares the total against the target.
    Summands are taken literally and may be negative.
    """
    ordered = sorted(sizes)
    count = len(ordered)
    if size > count:
        raise PreconditionError(
            f"target {size} exceeds the {count} available colors")
    terms = ordered[: min(count - size + 1, count)]
    return sum(s - size + 1 for s in terms) >= size


def near_rainbow(family: MatchingFamily) -> tuple[Matching, RainbowMatching]:
    """A full-size matching representing all but at most one color.

    For a family of 2n-2 matchings of size n: duplicate the first member,
    solve the enlarged 2n-1 member instance for size n (always possible),
    and fold the synthetic color back onto color 0. The returned assignment
    injectively covers at least n-1 distinct original colors.
    """
    n = _uniform_even_family(family)
    enlarged = MatchingFamily(family.members + (family.members[0],))
    solved = find_rainbow_matching(enlarged, n)
    if solved is None:
        raise GuaranteeViolation("duplicated family must admit a full rainbow")
    assignment = solved.as_dict()
    synthetic = assignment.pop(len(family), None)
    if synthetic is not None and 0 not in assignment:
        assignment[0] = synthetic
    return solved.matching, RainbowMatching.of(assignment)


@dataclass(frozen=True, slots=True)
class HasRainbow:
    witness: RainbowMatching


@dataclass(frozen=True, slots=True)
class ExtremalCycle:
    cycle: tuple[Vertex, ...]
    even_colors: frozenset[int]
    odd_colors: frozenset[int]


FamilyClassification = Union[HasRainbow, ExtremalCycle]


def classify_family(family: MatchingFamily) -> FamilyClassification:
    """Find a full-size rainbow matching or certify the unique blocking shape.

    A family of 2n-2 matchings of size n without a rainbow matching of size n
    must consist of a single cycle on 2n vertices, with half the members
    equal to its even-edge matching and half to its odd-edge matching. The
    solver failing on any other family raises TheoremViolation (a bug flag).
    """
    n = _uniform_even_family(family)
    witness = find_rainbow_matching(family, n)
    if witness is not None:
        return HasRainbow(witness)
    extremal = _cycle_split(family, n)
    if extremal is None:
        raise TheoremViolation("no full rainbow matching and no blocking cycle")
    return extremal


def _uniform_even_family(family: MatchingFamily) -> int:
    count = len(family)
    if count == 0 or count % 2 != 0:
        raise PreconditionError(f"need a non-empty family of 2n-2 members, got {count}")
    n = count // 2 + 1
    if any(len(m) != n for m in family):
        raise PreconditionError(f"every member must have size {n}")
    return n


def _cycle_split(family: MatchingFamily, n: int) -> Optional[ExtremalCycle]:
    distinct: dict[tuple[Edge, ...], list[int]] = {}
    for color, member in enumerate(family):
        distinct.setdefault(member.key(), []).append(color)
    if len(distinct) != 2:
        return None
    (key_a, cols_a), (key_b, cols_b) = sorted(distinct.items())
    if len(cols_a) != n - 1 or len(cols_b) != n - 1:
        return None
    edge_set = set(key_a) | set(key_b)
    if len(edge_set) != 2 * n:
        return None
    cycle = _single_cycle(edge_set)
    if cycle is None or len(cycle) != 2 * n:
        return None
    first_edge = _edge_between(cycle[0], cycle[1])
    even, odd = (cols_a, cols_b) if first_edge in set(key_a) else (cols_b, cols_a)
    return ExtremalCycle(cycle, frozenset(even), frozenset(odd))


def _edge_between(u: Vertex, v: Vertex) -> Edge:
    return Edge(u, v) if u.side is Side.LEFT else Edge(v, u)


def _single_cycle(edges: set[Edge]) -> Optional[tuple[Vertex, ...]]:
    """The vertex sequence of ``edges`` if they form one cycle, else None.

    Canonical: starts at the smallest vertex and steps toward its smaller
    neighbor.
    """
    adj: dict[Vertex, list[Vertex]] = {}
    for e in edges:
        adj.setdefault(e.left, []).append(e.right)
        adj.setdefault(e.right, []).append(e.left)
    if any(len(nbrs) != 2 for nbrs in adj.values()):
        return None
    start = min(adj)
    verts = [start]
    prev: Optional[Vertex] = None
    cur = start
    while True:
        nxt = min(w for w in adj[cur] if w != prev)
        if nxt == start:
            break
        verts.append(nxt)
        prev, cur = cur, nxt
    if len(verts) != len(adj):
        return None
    return tuple(verts)
