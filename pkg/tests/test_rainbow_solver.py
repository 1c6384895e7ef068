import itertools
import random

import pytest

from rainbowkit import (
    ExtremalCycle,
    HasRainbow,
    MatchingFamily,
    NoUnrepresentedColors,
    PreconditionError,
    RainbowMatching,
    RepresentationState,
    brute_rainbow,
    build_contracted_network,
    canonical_cycle_family,
    classify_family,
    drisko_condition,
    edge,
    enumerate_matchings,
    find_rainbow_matching,
    near_rainbow,
    rainbow_is_valid,
    validate_matching,
)


def family(*member_lists):
    return MatchingFamily.of(member_lists)


class TestBuildContractedNetwork:
    def test_empty_base_single_edge_color(self):
        state = RepresentationState(family([edge(0, 0)]), RainbowMatching(()))
        network, inner, translation = build_contracted_network(state)
        assert inner == 0
        assert [tuple(p.nodes for p in g.paths) for g in network.groups] == [
            (("s", "t"),)]
        assert translation.direct_choices[0] == (edge(0, 0),)

    def test_one_matched_edge_translates_long_path(self):
        fam = family([edge(0, 1), edge(1, 0)], [edge(0, 0)], [edge(2, 2)])
        state = RepresentationState(fam, RainbowMatching(((1, edge(0, 0)),)))
        network, inner, translation = build_contracted_network(state)
        assert inner == 1
        assert translation.colors == (0, 2)
        assert tuple(p.nodes for p in network.groups[0].paths) == (("s", 0, "t"),)
        assert translation.edge_origin[0][("s", 0)] == edge(1, 0)
        assert translation.edge_origin[0][(0, "t")] == edge(0, 1)

    def test_cycle_color_contributes_no_paths(self, even3, odd3):
        fam = MatchingFamily((even3, even3, even3, odd3))
        current = RainbowMatching(((0, edge(0, 0)), (1, edge(1, 1)), (2, edge(2, 2))))
        network, inner, translation = build_contracted_network(
            RepresentationState(fam, current))
        assert inner == 3
        assert network.groups == ()
        assert translation.colors == ()

    def test_every_color_represented_raises(self):
        fam = family([edge(0, 0)])
        state = RepresentationState(fam, RainbowMatching(((0, edge(0, 0)),)))
        with pytest.raises(NoUnrepresentedColors):
            build_contracted_network(state)


class TestFindRainbowMatching:
    def test_single_edge(self):
        found = find_rainbow_matching(family([edge(0, 0)]), 1)
        assert found.entries == ((0, edge(0, 0)),)

    def test_canonical_cycle_family_infeasible(self, c6_family):
        assert find_rainbow_matching(c6_family, 3) is None

    def test_doubled_guarantee_instance(self, even3, odd3):
        fam = MatchingFamily((even3, even3, even3, odd3, odd3))
        found = find_rainbow_matching(fam, 3)
        assert found is not None and len(found) == 3
        assert rainbow_is_valid(found, fam)

    def test_zero_target(self):
        assert len(find_rainbow_matching(family([edge(0, 0)]), 0)) == 0

    def test_target_beyond_color_count(self):
        assert find_rainbow_matching(family([edge(0, 0)]), 2) is None

    def test_backtracking_past_a_greedy_dead_end(self):
        fam = family([edge(0, 0), edge(1, 1)], [edge(0, 2)])
        found = find_rainbow_matching(fam, 2)
        assert found is not None
        assert found.as_dict() == {0: edge(1, 1), 1: edge(0, 2)}

    def test_agreement_with_oracle_exhaustive_small(self):
        pool = enumerate_matchings(1, 2) + enumerate_matchings(2, 2)
        for count in (1, 2, 3):
            for members in itertools.combinations_with_replacement(pool, count):
                fam = MatchingFamily(members)
                for target in range(count + 1):
                    mine = find_rainbow_matching(fam, target)
                    ref = brute_rainbow(fam, target)
                    assert (mine is None) == (ref is None)
                    if mine is not None:
                        assert len(mine) == target
                        assert rainbow_is_valid(mine, fam)

    def test_agreement_with_oracle_random_mixed(self):
        rng = random.Random(23)
        for _ in range(400):
            members = []
            for _ in range(rng.randint(1, 5)):
                size = rng.randint(1, 3)
                lefts = sorted(rng.sample(range(4), size))
                rights = rng.sample(range(4), size)
                members.append(validate_matching(
                    edge(lefts[i], rights[i]) for i in range(size)))
            fam = MatchingFamily(tuple(members))
            target = rng.randint(0, min(len(members), 3))
            assert (find_rainbow_matching(fam, target) is None) == (
                brute_rainbow(fam, target) is None)

    def test_agreement_with_empty_and_duplicate_members(self):
        rng = random.Random(37)
        for _ in range(400):
            members = []
            for _ in range(rng.randint(1, 6)):
                if members and rng.random() < 0.3:
                    members.append(members[rng.randrange(len(members))])
                    continue
                size = rng.randint(0, 3)
                side = rng.randint(max(1, size), 4)
                lefts = sorted(rng.sample(range(side), size))
                rights = rng.sample(range(side), size)
                members.append(validate_matching(
                    edge(lefts[i], rights[i]) for i in range(size)))
            fam = MatchingFamily(tuple(members))
            target = rng.randint(0, min(len(members), 4))
            mine = find_rainbow_matching(fam, target)
            assert (mine is None) == (brute_rainbow(fam, target) is None)
            if mine is not None:
                assert len(mine) == target and rainbow_is_valid(mine, fam)


class TestDriskoCondition:
    def test_uniform_doubled(self):
        assert drisko_condition([3] * 5, 3)

    def test_cycle_family_is_below_threshold(self):
        assert not drisko_condition([3, 3, 3, 3], 3)

    def test_empty(self):
        assert drisko_condition([], 0)

    def test_target_beyond_count(self):
        with pytest.raises(PreconditionError):
            drisko_condition([2, 2], 3)

    def test_negative_summands_count(self):
        # sizes 1 and 5 with target 3: first two summands are -1 and 3
        assert not drisko_condition([1, 5, 5], 3)


class TestNearRainbow:
    def test_four_cycle(self, even2, odd2):
        matched, rainbow = near_rainbow(MatchingFamily((even2, odd2)))
        assert matched == even2
        assert len(rainbow) >= 1
        assert all(e in matched.edges for _, e in rainbow.entries)

    def test_cycle_family_covers_two_colors(self, c6_family):
        matched, rainbow = near_rainbow(c6_family)
        assert len(matched) == 3
        assert len(rainbow) >= 2
        assert all(e in c6_family[c] for c, e in rainbow.entries)

    def test_empty_family_rejected(self):
        with pytest.raises(PreconditionError):
            near_rainbow(MatchingFamily(()))

    def test_random_families_always_succeed(self):
        rng = random.Random(41)
        for _ in range(300):
            n = rng.randint(2, 4)
            members = []
            for _ in range(2 * n - 2):
                side = n + rng.randint(0, 1)
                lefts = sorted(rng.sample(range(side), n))
                rights = rng.sample(range(side), n)
                members.append(validate_matching(
                    edge(lefts[i], rights[i]) for i in range(n)))
            fam = MatchingFamily(tuple(members))
            matched, rainbow = near_rainbow(fam)
            assert len(matched) == n
            assert len(rainbow) >= n - 1
            assert all(e in fam[c] and e in matched.edges
                       for c, e in rainbow.entries)


class TestClassifyFamily:
    def test_cycle_family(self, c6_family):
        verdict = classify_family(c6_family)
        assert isinstance(verdict, ExtremalCycle)
        assert len(verdict.cycle) == 6
        assert verdict.even_colors == {0, 1}
        assert verdict.odd_colors == {2, 3}

    def test_four_cycle(self, even2, odd2):
        verdict = classify_family(MatchingFamily((even2, odd2)))
        assert isinstance(verdict, ExtremalCycle)
        assert len(verdict.cycle) == 4

    def test_feasible_family(self, even3, odd3):
        verdict = classify_family(MatchingFamily((even3, even3, even3, odd3)))
        assert isinstance(verdict, HasRainbow)
        assert len(verdict.witness) == 3

    def test_bad_shape_rejected(self, even3):
        with pytest.raises(PreconditionError):
            classify_family(MatchingFamily((even3, even3, even3)))

    def test_canonical_families_all_sizes(self):
        for n in range(2, 6):
            verdict = classify_family(canonical_cycle_family(n))
            assert isinstance(verdict, ExtremalCycle)
            assert len(verdict.cycle) == 2 * n
            assert len(verdict.even_colors) == n - 1
            assert len(verdict.odd_colors) == n - 1
            assert verdict.even_colors | verdict.odd_colors == set(range(2 * n - 2))
