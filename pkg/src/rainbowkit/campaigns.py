"""Verification campaigns: each runs one guarantee over many instances and
counts violations.

Reports are deterministic given the seed (instance streams derive from one
seeded generator), so repeating a campaign reproduces it byte for byte apart
from the elapsed field.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import PreconditionError
from .graph_core import MatchingFamily, edge, rainbow_is_valid, validate_matching
from .network_paths import (
    SINK,
    NetPath,
    PathGroup,
    PathGroupFamily,
    colored_path_conforms,
    is_regimented,
    reachable_witness_set,
    verify_regimented_dichotomy,
    Regimentation,
)
from .oracle import (
    DEFAULT_BUDGET,
    GenSpec,
    brute_mc_path,
    brute_rainbow,
    brute_zero_sum,
    canonical_cycle_family,
    enumerate_matchings,
    enumerate_multisets,
    generate,
)
from .rainbow_solver import (
    ExtremalCycle,
    classify_family,
    drisko_condition,
    find_rainbow_matching,
)
from .reductions import (
    ExtremalPair,
    classify_multiset,
    find_transversal,
    find_zero_sum_subset,
    transversal_is_valid,
)

THEOREMS = ("drisko", "general", "bgs", "extremal", "counting", "dichotomy",
            "egz", "egz-extremal", "transversal", "sharpness")


@dataclass
class CampaignReport:
    theorem: str
    instances_checked: int
    violations: int
    elapsed: float
    seed: int
    parameters: dict

    def to_obj(self) -> dict:
        return {
            "theorem": self.theorem,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "elapsed": self.elapsed,
            "seed": self.seed,
            "parameters": self.parameters,
        }


def run_campaign(theorem: str, *, n: Optional[int] = None,
                 samples: Optional[int] = None, exhaustive: bool = False,
                 seed: int = 0, budget: int = DEFAULT_BUDGET) -> CampaignReport:
    """Run the named campaign and return its report."""
    if theorem not in THEOREMS:
        raise PreconditionError(f"unknown theorem {theorem!r}; pick one of {THEOREMS}")
    runner = {
        "drisko": _run_drisko,
        "general": _run_general,
        "bgs": _run_bgs,
        "extremal": _run_extremal,
        "counting": _run_counting,
        "dichotomy": _run_dichotomy,
        "egz": _run_egz,
        "egz-extremal": _run_egz_extremal,
        "transversal": _run_transversal,
        "sharpness": _run_sharpness,
    }[theorem]
    start = time.perf_counter()
    checked, violations, parameters = runner(n, samples, exhaustive, seed, budget)
    elapsed = time.perf_counter() - start
    return CampaignReport(theorem, checked, violations, round(elapsed, 3),
                          seed, parameters)


def _seeds(seed: int, count: int) -> Iterator[int]:
    rng = random.Random(seed)
    for _ in range(count):
        yield rng.getrandbits(63)


def _run_drisko(n, samples, exhaustive, seed, budget):
    """Every family of 2n-1 matchings of size n has a rainbow matching of
    size n; witnesses are revalidated."""
    n = n or 3
    checked = violations = 0
    if exhaustive:
        pool = enumerate_matchings(n, n + 1)
        for members in itertools.combinations_with_replacement(pool, 2 * n - 1):
            family = MatchingFamily(members)
            found = find_rainbow_matching(family, n)
            checked += 1
            if found is None or len(found) != n or not rainbow_is_valid(found, family):
                violations += 1
        params = {"n": n, "mode": "exhaustive", "side": n + 1}
    else:
        samples = samples or 1000
        for s in _seeds(seed, samples):
            family = generate(GenSpec.family_uniform(n, 2 * n - 1, n + 1, s))
            found = find_rainbow_matching(family, n)
            checked += 1
            if found is None or len(found) != n or not rainbow_is_valid(found, family):
                violations += 1
        params = {"n": n, "mode": "sampled", "samples": samples, "side": n + 1}
    return checked, violations, params


def _run_sharpness(n, samples, exhaustive, seed, budget):
    """The canonical 2n-cycle family of 2n-2 matchings is infeasible at
    target n, per both the solver and the oracle."""
    top = n or 6
    checked = violations = 0
    for k in range(2, top + 1):
        family = canonical_cycle_family(k)
        checked += 1
        if find_rainbow_matching(family, k) is not None:
            violations += 1
        if brute_rainbow(family, k, budget) is not None:
            violations += 1
    return checked, violations, {"n_max": top}


def _run_general(n, samples, exhaustive, seed, budget):
    """Mixed-size families: whenever the sorted-size threshold holds the
    solver must produce a rainbow matching of the target size; otherwise its
    feasibility verdict must match the brute-force oracle."""
    samples = samples or 1000
    max_size = n or 5
    checked = violations = 0
    rng = random.Random(seed)
    for _ in range(samples):
        m = rng.randint(1, 9)
        sizes = [rng.randint(1, max_size) for _ in range(m)]
        side = max(sizes) + rng.randint(0, 2)
        family = generate(GenSpec.family_mixed(tuple(sizes), side, rng.getrandbits(63)))
        target = rng.randint(1, min(m, max_size))
        found = find_rainbow_matching(family, target)
        checked += 1
        if found is not None and (
                len(found) != target or not rainbow_is_valid(found, family)):
            violations += 1
            continue
        if drisko_condition(family.sizes, target):
            if found is None:
                violations += 1
        elif (found is None) != (brute_rainbow(family, target, budget) is None):
            violations += 1
    return checked, violations, {"samples": samples, "max_size": max_size, "max_m": 9}


def _run_bgs(n, samples, exhaustive, seed, budget):
    """Uniform families at the floor((k+2)n/(k+1)) - (k+1) member count have
    a rainbow matching of size n-k, for k in {1, 2}."""
    top = n or 5
    samples = samples or 200
    checked = violations = 0
    rng = random.Random(seed)
    combos = [(nn, k) for k in (1, 2) for nn in range(2, top + 1)
              if (k + 2) * nn // (k + 1) - (k + 1) >= 1 and nn - k >= 1]
    for _ in range(samples):
        nn, k = combos[rng.randrange(len(combos))]
        m = (k + 2) * nn // (k + 1) - (k + 1)
        family = generate(GenSpec.family_uniform(nn, m, nn + 1, rng.getrandbits(63)))
        target = nn - k
        checked += 1
        if not drisko_condition(family.sizes, target):
            violations += 1
            continue
        found = find_rainbow_matching(family, target)
        if found is None or len(found) != target or not rainbow_is_valid(found, family):
            violations += 1
    return checked, violations, {"samples": samples, "n_max": top, "k": [1, 2]}


def _run_counting(n, samples, exhaustive, seed, budget):
    """Constructive reachability: the witness set is valid, lies inside the
    oracle's exact reachable set, and outnumbers the paths."""
    samples = samples or 1000
    max_inner = n or 6
    checked = violations = 0
    rng = random.Random(seed)
    for _ in range(samples):
        spec = GenSpec.network(
            inner=rng.randint(1, max_inner),
            groups=rng.randint(1, 3),
            paths_per_group=rng.randint(1, 2),
            seed=rng.getrandbits(63),
        )
        family = generate(spec)
        witnesses = reachable_witness_set(family)
        exact = brute_mc_path(family, budget)
        checked += 1
        if len(witnesses) <= family.total_paths:
            violations += 1
            continue
        ok = all(
            colored_path_conforms(path, family) and node in exact
            and (path.nodes[-1] == node if len(path.nodes) > 1 else node == "s")
            for node, path in witnesses.items())
        if not ok:
            violations += 1
    return checked, violations, {"samples": samples, "max_inner": max_inner,
                                 "max_paths": 6}


def _all_simple_paths(inner: int) -> list[NetPath]:
    out = []
    for r in range(inner + 1):
        for interior in itertools.permutations(range(inner), r):
            out.append(NetPath(("s", *interior, "t")))
    return out


def _run_dichotomy(n, samples, exhaustive, seed, budget):
    """Multisets of exactly as many source-sink paths as inner nodes in use:
    exactly one of (regimented, oracle finds a multicolored source-sink path)
    holds, and verify_regimented_dichotomy agrees."""
    top = n or 4
    checked = violations = 0
    for inner in range(0, top + 1):
        pool = _all_simple_paths(inner)
        full = frozenset(range(inner))
        for multiset in itertools.combinations_with_replacement(pool, inner):
            used = frozenset(v for p in multiset for v in p.inner_nodes)
            if used != full:
                continue
            checked += 1
            regimentation = is_regimented(multiset)
            family = PathGroupFamily(tuple(PathGroup((p,)) for p in multiset))
            reaches_sink = SINK in brute_mc_path(family, budget)
            if (regimentation is None) == (not reaches_sink):
                violations += 1
                continue
            outcome = verify_regimented_dichotomy(multiset)
            if regimentation is not None:
                if not isinstance(outcome, Regimentation):
                    violations += 1
            elif isinstance(outcome, Regimentation) or not colored_path_conforms(
                    outcome, family):
                violations += 1
    return checked, violations, {"max_inner": top, "mode": "exhaustive"}


def _six_cycle_splits(side: int) -> list[tuple]:
    """The unordered matching pair splitting each 6-cycle of the complete
    bipartite graph with the given side size.

    Two disjoint perfect matchings on three vertices per side always union to
    a single 6-cycle, so the pairs are exactly (matching, derangement)."""
    pairs = set()
    for lefts in itertools.combinations(range(side), 3):
        for rights in itertools.combinations(range(side), 3):
            for first in itertools.permutations(rights):
                even = validate_matching(edge(lefts[i], first[i]) for i in range(3))
                for second in itertools.permutations(rights):
                    if any(second[i] == first[i] for i in range(3)):
                        continue
                    odd = validate_matching(
                        edge(lefts[i], second[i]) for i in range(3))
                    pairs.add(tuple(sorted((even.key(), odd.key()))))
    return [(validate_matching(a), validate_matching(b)) for a, b in sorted(pairs)]


def _check_classification(family: MatchingFamily, n: int, budget: int) -> bool:
    """True when classify_family agrees with brute feasibility and any
    extremal verdict is structurally sound."""
    oracle_found = brute_rainbow(family, n, budget)
    try:
        verdict = classify_family(family)
    except Exception:
        return False
    if isinstance(verdict, ExtremalCycle):
        if oracle_found is not None:
            return False
        counts = (len(verdict.even_colors), len(verdict.odd_colors))
        return counts == (n - 1, n - 1) and len(verdict.cycle) == 2 * n
    return oracle_found is not None and rainbow_is_valid(verdict.witness, family)


def _run_extremal(n, samples, exhaustive, seed, budget):
    """No-rainbow families of 2n-2 size-n matchings are exactly the split
    cycles; classify_family never falls through."""
    n = n or 2
    checked = violations = 0
    if exhaustive:
        pool = enumerate_matchings(n, n + 1)
        for members in itertools.combinations_with_replacement(pool, 2 * n - 2):
            family = MatchingFamily(members)
            checked += 1
            if not _check_classification(family, n, budget):
                violations += 1
        params = {"n": n, "mode": "exhaustive", "side": n + 1}
    else:
        samples = samples or 1000
        for s in _seeds(seed, samples):
            family = generate(GenSpec.family_uniform(n, 2 * n - 2, n + 1, s))
            checked += 1
            if not _check_classification(family, n, budget):
                violations += 1
        if n == 3:
            for even, odd in _six_cycle_splits(4):
                for even_count in range(0, 5):
                    members = (even,) * even_count + (odd,) * (4 - even_count)
                    checked += 1
                    if not _check_classification(MatchingFamily(members), n, budget):
                        violations += 1
        params = {"n": n, "mode": "sampled", "samples": samples, "side": n + 1,
                  "cycle_sweep": n == 3}
    return checked, violations, params


def _run_egz(n, samples, exhaustive, seed, budget):
    """Every multiset of 2n-1 residues mod n has a zero-sum sub-multiset of
    size n; witnesses are revalidated and feasibility matches the oracle."""
    top = n or 6
    checked = violations = 0
    ns = range(1, top + 1) if exhaustive else [top]
    for k in ns:
        for multiset in enumerate_multisets(k, 2 * k - 1, budget):
            checked += 1
            witness = find_zero_sum_subset(multiset)
            if witness is None or brute_zero_sum(multiset, budget) is None:
                violations += 1
    return checked, violations, {"n_max": top, "mode": "exhaustive"}


def _run_egz_extremal(n, samples, exhaustive, seed, budget):
    """Multisets of 2n-2 residues with no zero-sum sub-multiset are exactly
    the coprime-difference double piles."""
    top = n or 6
    checked = violations = 0
    ns = range(2, top + 1) if exhaustive else [top]
    for k in ns:
        for multiset in enumerate_multisets(k, 2 * k - 2, budget):
            checked += 1
            oracle_found = brute_zero_sum(multiset, budget)
            try:
                verdict = classify_multiset(multiset)
            except Exception:
                violations += 1
                continue
            if isinstance(verdict, ExtremalPair):
                counts = {verdict.low: 0, verdict.high: 0}
                for v in multiset.elements:
                    counts[v] = counts.get(v, 0) + 1
                shape_ok = (counts[verdict.low] == counts[verdict.high] == k - 1
                            and math.gcd(verdict.high - verdict.low, k) == 1)
                if oracle_found is not None or not shape_ok:
                    violations += 1
            elif oracle_found is None:
                violations += 1
    return checked, violations, {"n_max": top, "mode": "exhaustive"}


def _run_transversal(n, samples, exhaustive, seed, budget):
    """Row-distinct matrices with 2n-1 rows and n columns always have a full
    transversal satisfying all three distinctness constraints."""
    top = n or 5
    samples = samples or 1000
    checked = violations = 0
    rng = random.Random(seed)
    for _ in range(samples):
        cols = rng.randint(1, top)
        symbols = cols + rng.randint(0, 2)
        spec = GenSpec.matrix(2 * cols - 1, cols, symbols, rng.getrandbits(63))
        matrix = generate(spec)
        found = find_transversal(matrix)
        checked += 1
        if found is None or not transversal_is_valid(matrix, found):
            violations += 1
    return checked, violations, {"samples": samples, "n_max": top}
