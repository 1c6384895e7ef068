import math

import pytest

from rainbowkit import (
    BudgetExceeded,
    GenSpec,
    InfeasibleSpec,
    MatchingFamily,
    ResidueMultiset,
    SINK,
    SOURCE,
    brute_mc_path,
    brute_rainbow,
    brute_zero_sum,
    build_family,
    canonical_cycle_family,
    colored_path_conforms,
    edge,
    enumerate_matchings,
    enumerate_multisets,
    generate,
)
from conftest import path


class TestBruteRainbow:
    def test_cycle_family_infeasible(self, c6_family):
        assert brute_rainbow(c6_family, 3) is None

    def test_single_edge(self):
        fam = MatchingFamily.of([[edge(0, 0)]])
        found = brute_rainbow(fam, 1)
        assert found.entries == ((0, edge(0, 0)),)

    def test_doubled_instance_found(self, even3, odd3):
        fam = MatchingFamily((even3, even3, even3, odd3, odd3))
        assert brute_rainbow(fam, 3) is not None

    def test_lexicographically_first(self, even2, odd2):
        fam = MatchingFamily((even2, odd2, even2))
        found = brute_rainbow(fam, 2)
        assert found.colors == {0, 2}

    def test_budget(self, c6_family):
        with pytest.raises(BudgetExceeded):
            brute_rainbow(c6_family, 3, budget=5)


class TestBruteMcPath:
    def test_empty(self):
        assert set(brute_mc_path(build_family([]))) == {SOURCE}

    def test_two_copies_reach_sink(self):
        fam = build_family([[path("s", 0, "t")], [path("s", 0, "t")]])
        reach = brute_mc_path(fam)
        assert set(reach) == {SOURCE, 0, SINK}
        for node, witness in reach.items():
            assert colored_path_conforms(witness, fam)

    def test_one_group_stops_early(self):
        fam = build_family([[path("s", 0, "t")]])
        assert set(brute_mc_path(fam)) == {SOURCE, 0}

    def test_witnesses_are_shortest(self):
        fam = build_family(
            [[path("s", 0, "t")], [path("s", 0, "t")], [path("s", "t")]])
        reach = brute_mc_path(fam)
        assert reach[SINK].nodes == (SOURCE, SINK)


class TestBruteZeroSum:
    def test_blocking_pair(self):
        assert brute_zero_sum(ResidueMultiset(3, (0, 0, 1, 1))) is None

    def test_first_in_order(self):
        assert brute_zero_sum(ResidueMultiset(3, (0, 0, 1, 1, 2))) == (0, 1, 2)

    def test_pair_of_zeros(self):
        assert brute_zero_sum(ResidueMultiset(2, (0, 0, 1))) == (0, 0)


class TestEnumerateMultisets:
    def test_small_count(self):
        out = list(enumerate_multisets(2, 2))
        assert [m.elements for m in out] == [(0, 0), (0, 1), (1, 1)]

    def test_counts_match_formula(self):
        assert len(list(enumerate_multisets(3, 4))) == math.comb(6, 2) == 15

    def test_single_residue(self):
        out = list(enumerate_multisets(1, 5))
        assert len(out) == 1 and out[0].elements == (0,) * 5

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_multisets(6, 11, budget=100))


class TestEnumerateMatchings:
    def test_k33_size_two_count(self):
        assert len(enumerate_matchings(2, 3)) == 18

    def test_all_valid_and_distinct(self):
        out = enumerate_matchings(2, 3)
        assert len({m.key() for m in out}) == len(out)


class TestGenerate:
    def test_deterministic(self):
        for spec in (
            GenSpec.family_uniform(2, 3, 3, seed=42),
            GenSpec.family_mixed((1, 3, 2), 4, seed=9),
            GenSpec.network(4, 2, 2, seed=5),
            GenSpec.multiset(3, 5, seed=1),
            GenSpec.matrix(3, 2, 4, seed=8),
        ):
            assert generate(spec) == generate(spec)

    def test_seeds_vary_output(self):
        a = generate(GenSpec.multiset(5, 8, seed=1))
        b = generate(GenSpec.multiset(5, 8, seed=2))
        assert a != b

    def test_family_shapes(self):
        fam = generate(GenSpec.family_uniform(2, 3, 3, seed=42))
        assert len(fam) == 3 and all(len(m) == 2 for m in fam)
        mixed = generate(GenSpec.family_mixed((1, 3), 4, seed=0))
        assert mixed.sizes == (1, 3)

    def test_family_infeasible(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec.family_uniform(4, 1, 3, seed=0))

    def test_matrix_infeasible(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec.matrix(2, 3, 2, seed=0))

    def test_network_regime(self):
        for seed in range(200):
            fam = generate(GenSpec.network(5, 3, 2, seed=seed))
            exits = [p.nodes[-2] for g in fam.groups for p in g.paths]
            assert len(set(exits)) == len(exits)
            assert fam.total_paths <= len(fam.inner_nodes)
            for g in fam.groups:
                for p in g.paths:
                    others = [q for h in fam.groups for q in h.paths if q is not p]
                    assert all(p.nodes[-2] not in q.inner_nodes for q in others)

    def test_canonical_cycle_family(self, c6_family):
        assert canonical_cycle_family(3) == c6_family
