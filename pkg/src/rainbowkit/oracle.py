"""Brute-force references and seeded instance generators.

The searches here are deliberately exponential, independent of the
constructive algorithms they are used to check, and count elementary steps
against an explicit budget (default ten million) instead of silently
truncating. Generation uses ``random.Random`` (the Mersenne Twister, stable
across platforms), so one (spec, seed) pair always yields one instance.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import BudgetExceeded, InfeasibleSpec, PreconditionError
from .graph_core import (
    Edge,
    Matching,
    MatchingFamily,
    RainbowMatching,
    Vertex,
    edge,
    validate_matching,
)
from .network_paths import (
    SINK,
    SOURCE,
    ColoredPath,
    NetNode,
    NetPath,
    PathGroupFamily,
    build_family,
    node_key,
)
from .reductions import ResidueMultiset, SymbolMatrix

DEFAULT_BUDGET = 10_000_000


class _Meter:
    __slots__ = ("left",)

    def __init__(self, budget: int) -> None:
        self.left = budget

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded("step budget exhausted")


def brute_rainbow(family: MatchingFamily, size: int,
                  budget: int = DEFAULT_BUDGET) -> Optional[RainbowMatching]:
    """Lexicographically first rainbow matching of the given size, or None.

    Tries every ascending color subset and, inside each, every choice of one
    edge per color, keeping only pairwise disjoint choices.
    """
    count = len(family)
    if size == 0:
        return RainbowMatching(())
    if size > count:
        return None
    meter = _Meter(budget)
    member_edges = [sorted(m.edges) for m in family]

    def extend(colors: tuple[int, ...], k: int,
               chosen: list[Edge], used: set[Vertex]) -> bool:
        if k == size:
            return True
        for e in member_edges[colors[k]]:
            meter.spend()
            if e.left in used or e.right in used:
                continue
            chosen.append(e)
            used.add(e.left)
            used.add(e.right)
            if extend(colors, k + 1, chosen, used):
                return True
            chosen.pop()
            used.discard(e.left)
            used.discard(e.right)
        return False

    for colors in itertools.combinations(range(count), size):
        chosen: list[Edge] = []
        if extend(colors, 0, chosen, set()):
            return RainbowMatching(tuple(zip(colors, chosen)))
    return None


def brute_mc_path(family: PathGroupFamily,
                  budget: int = DEFAULT_BUDGET) -> dict[NetNode, ColoredPath]:
    """Exact reachability: every node with some multicolored path from the
    source, each with a witness.

    Breadth-first over (node, used-color-set) states. Any walk with distinct
    edge colors contains a simple path with the same property (cut out the
    loops), so node revisits need no tracking; the first witness recorded per
    node is shortest and therefore simple.
    """
    meter = _Meter(budget)
    options: dict[NetNode, list[tuple[NetNode, int]]] = {}
    for color, group in enumerate(family.groups):
        for p in group.paths:
            for u, v in p.edges:
                options.setdefault(u, []).append((v, color))
    for u in options:
        options[u] = sorted(set(options[u]), key=lambda vc: (node_key(vc[0]), vc[1]))

    witness = {SOURCE: ColoredPath((SOURCE,), ())}
    queue: deque = deque([(SOURCE, frozenset(), (SOURCE,), ())])
    visited = {(SOURCE, frozenset())}
    while queue:
        u, used, nodes, colors = queue.popleft()
        for v, c in options.get(u, ()):
            meter.spend()
            if c in used:
                continue
            state = (v, used | {c})
            if state in visited:
                continue
            visited.add(state)
            grown = nodes + (v,), colors + (c,)
            if v not in witness:
                witness[v] = ColoredPath(*grown)
            if v != SINK:
                queue.append((v, state[1], *grown))
    return witness


def brute_zero_sum(multiset: ResidueMultiset,
                   budget: int = DEFAULT_BUDGET) -> Optional[tuple[int, ...]]:
    """First size-n sub-multiset (in sorted order) summing to zero mod n."""
    n = multiset.modulus
    if len(multiset) < n:
        return None
    meter = _Meter(budget)
    for combo in itertools.combinations(multiset.elements, n):
        meter.spend()
        if sum(combo) % n == 0:
            return combo
    return None


def enumerate_multisets(n: int, size: int,
                        budget: int = DEFAULT_BUDGET) -> Iterator[ResidueMultiset]:
    """Every multiset of the given size over the residues mod n, ascending."""
    if n < 1 or size < 0:
        raise PreconditionError("need a positive modulus and non-negative size")
    total = math.comb(size + n - 1, n - 1)
    if total > budget:
        raise BudgetExceeded(f"{total} multisets exceed the budget")
    for combo in itertools.combinations_with_replacement(range(n), size):
        yield ResidueMultiset(n, combo)


def enumerate_matchings(size: int, side: int) -> list[Matching]:
    """Every matching of ``size`` edges in the complete bipartite graph with
    ``side`` vertices per side, in a fixed order."""
    out: list[Matching] = []
    for lefts in itertools.combinations(range(side), size):
        for rights in itertools.combinations(range(side), size):
            for image in itertools.permutations(rights):
                out.append(validate_matching(
                    edge(lefts[i], image[i]) for i in range(size)))
    return out


def canonical_cycle_family(n: int) -> MatchingFamily:
    """The tight family: n-1 copies each of the even and the odd edges of a
    cycle on 2n vertices."""
    if n < 2:
        raise InfeasibleSpec("the cycle family needs n >= 2")
    even = validate_matching(edge(i, i) for i in range(n))
    odd = validate_matching(edge((i + 1) % n, i) for i in range(n))
    return MatchingFamily((even,) * (n - 1) + (odd,) * (n - 1))


Instance = Union[MatchingFamily, PathGroupFamily, ResidueMultiset, SymbolMatrix]


@dataclass(frozen=True, slots=True)
class GenSpec:
    """Seeded description of a random instance; equal specs generate equal
    instances, across runs and platforms."""

    kind: str
    seed: int
    n: int = 0
    m: int = 0
    side: int = 0
    sizes: tuple[int, ...] = ()
    inner: int = 0
    groups: int = 0
    paths_per_group: int = 0
    size: int = 0
    symbols: int = 0

    @classmethod
    def family_uniform(cls, n: int, m: int, side: int, seed: int) -> "GenSpec":
        return cls(kind="family-uniform", seed=seed, n=n, m=m, side=side)

    @classmethod
    def family_mixed(cls, sizes, side: int, seed: int) -> "GenSpec":
        return cls(kind="family-mixed", seed=seed, sizes=tuple(sizes), side=side)

    @classmethod
    def network(cls, inner: int, groups: int, paths_per_group: int,
                seed: int) -> "GenSpec":
        return cls(kind="network", seed=seed, inner=inner, groups=groups,
                   paths_per_group=paths_per_group)

    @classmethod
    def multiset(cls, n: int, size: int, seed: int) -> "GenSpec":
        return cls(kind="multiset", seed=seed, n=n, size=size)

    @classmethod
    def matrix(cls, m: int, n: int, symbols: int, seed: int) -> "GenSpec":
        return cls(kind="matrix", seed=seed, m=m, n=n, symbols=symbols)


def generate(spec: GenSpec) -> Instance:
    """Build the instance described by ``spec``, deterministically."""
    rng = random.Random(spec.seed)
    if spec.kind == "family-uniform":
        return _gen_family(rng, [spec.n] * spec.m, spec.side)
    if spec.kind == "family-mixed":
        return _gen_family(rng, list(spec.sizes), spec.side)
    if spec.kind == "network":
        return _gen_network(rng, spec.inner, spec.groups, spec.paths_per_group)
    if spec.kind == "multiset":
        if spec.n < 1 or spec.size < 1:
            raise InfeasibleSpec("multiset needs a positive modulus and size")
        return ResidueMultiset(spec.n, tuple(rng.randrange(spec.n)
                                             for _ in range(spec.size)))
    if spec.kind == "matrix":
        if spec.m < 1 or spec.n < 1:
            raise InfeasibleSpec("matrix needs positive dimensions")
        if spec.symbols < spec.n:
            raise InfeasibleSpec(
                f"{spec.n} distinct symbols per row need at least that many symbols")
        return SymbolMatrix(tuple(
            tuple(rng.sample(range(spec.symbols), spec.n)) for _ in range(spec.m)))
    raise InfeasibleSpec(f"unknown instance kind {spec.kind!r}")


def _gen_family(rng: random.Random, sizes: list[int], side: int) -> MatchingFamily:
    if not sizes or any(s < 1 for s in sizes) or side < 1:
        raise InfeasibleSpec("family needs positive matching sizes and side size")
    if max(sizes) > side:
        raise InfeasibleSpec(
            f"a matching of size {max(sizes)} does not fit side size {side}")
    members = []
    for s in sizes:
        lefts = sorted(rng.sample(range(side), s))
        rights = rng.sample(range(side), s)
        members.append(validate_matching(
            edge(lefts[i], rights[i]) for i in range(s)))
    return MatchingFamily(tuple(members))


def _gen_network(rng: random.Random, inner: int, groups: int,
                 paths_per_group: int) -> PathGroupFamily:
    """Random innerly disjoint groups in which every path ends on a private
    inner node that no other path visits.

    Private exits pin the instances to the regime where the constructive
    witness count provably beats the path count: no contraction step can then
    collapse two paths of a group onto the direct source-sink edge, so the
    recursion's counting goes through level by level. Prefix nodes are drawn
    from a pool shared across groups, so paths still overlap freely away from
    their exits. The total path count is capped by the inner node supply.
    """
    if inner < 1 or groups < 1 or paths_per_group < 1:
        raise InfeasibleSpec("network needs positive inner, group, and path counts")
    wanted = [rng.randint(1, paths_per_group) for _ in range(groups)]
    while sum(wanted) > inner:
        largest = max(range(len(wanted)), key=lambda i: (wanted[i], i))
        wanted[largest] -= 1
    wanted = [w for w in wanted if w > 0]
    total = sum(wanted)
    if total == 0:
        return build_family([])
    exits = rng.sample(range(inner), total)
    shared = [v for v in range(inner) if v not in exits]
    raw: list[list[NetPath]] = []
    taken = 0
    for count in wanted:
        pool = list(shared)
        rng.shuffle(pool)
        member: list[NetPath] = []
        for _ in range(count):
            prefix_len = rng.randint(0, min(2, len(pool)))
            interior = [pool.pop() for _ in range(prefix_len)] + [exits[taken]]
            taken += 1
            member.append(make_net_path(interior))
        raw.append(member)
    return build_family(raw)


def make_net_path(interior: list[int]) -> NetPath:
    return NetPath((SOURCE, *interior, SINK))
