"""Acceptance campaigns, one test per contract criterion.

Each test runs its campaign at full scale and prints a single PASS/FAIL line;
the assertion carries the violation count so a red run names its criterion.
"""

import json

from rainbowkit import (
    brute_rainbow,
    canonical_cycle_family,
    find_rainbow_matching,
)
from rainbowkit.campaigns import run_campaign


def _conclude(name: str, violations: int, checked: int) -> None:
    status = "PASS" if violations == 0 else "FAIL"
    print(f"ACCEPTANCE {status}: {name} "
          f"({checked} instances, {violations} violations)")
    assert violations == 0, f"{name}: {violations} violations over {checked}"


def test_criterion_01_rainbow_guarantee_at_doubled_count():
    reports = [
        run_campaign("drisko", n=2, exhaustive=True),
        run_campaign("drisko", n=3, samples=10_000, seed=101),
        run_campaign("drisko", n=4, samples=10_000, seed=102),
    ]
    assert reports[0].instances_checked == 1140  # C(20, 3) families over 18 matchings
    _conclude("criterion 1 (rainbow guarantee at 2n-1 members)",
              sum(r.violations for r in reports),
              sum(r.instances_checked for r in reports))


def test_criterion_02_sharpness_of_the_cycle_family():
    report = run_campaign("sharpness", n=6)
    for n in (2, 6):
        family = canonical_cycle_family(n)
        assert find_rainbow_matching(family, n) is None
        assert brute_rainbow(family, n) is None
    _conclude("criterion 2 (cycle family infeasible, solver and oracle)",
              report.violations, report.instances_checked)


def test_criterion_03_mixed_size_threshold():
    report = run_campaign("general", samples=10_000, seed=303)
    assert report.instances_checked == 10_000
    _conclude("criterion 3 (mixed sizes: threshold guarantee, oracle agreement)",
              report.violations, report.instances_checked)


def test_criterion_04_reachability_counting():
    report = run_campaign("counting", samples=10_000, seed=404)
    assert report.instances_checked == 10_000
    _conclude("criterion 4 (witness set beats path count, inside exact set)",
              report.violations, report.instances_checked)


def test_criterion_05_regimented_dichotomy():
    report = run_campaign("dichotomy", n=4)
    assert report.instances_checked > 700_000
    _conclude("criterion 5 (regimented or traversable, never both or neither)",
              report.violations, report.instances_checked)


def test_criterion_06_blocking_family_uniqueness():
    reports = [
        run_campaign("extremal", n=2, exhaustive=True),
        run_campaign("extremal", n=3, samples=10_000, seed=606),
    ]
    assert reports[0].instances_checked == 171  # C(19, 2) pairs over 18 matchings
    assert reports[1].instances_checked == 10_000 + 96 * 5  # plus the cycle sweep
    _conclude("criterion 6 (no-rainbow families are exactly split cycles)",
              sum(r.violations for r in reports),
              sum(r.instances_checked for r in reports))


def test_criterion_07_zero_sum_guarantee():
    report = run_campaign("egz", n=6, exhaustive=True)
    assert report.instances_checked == 1 + 4 + 21 + 120 + 715 + 4368
    _conclude("criterion 7 (zero-sum sub-multiset at 2n-1 elements, n <= 6)",
              report.violations, report.instances_checked)


def test_criterion_08_zero_sum_blocking_pairs():
    report = run_campaign("egz-extremal", n=6, exhaustive=True)
    assert report.instances_checked == 3 + 15 + 84 + 495 + 3003
    _conclude("criterion 8 (blocking multisets are exactly coprime pairs)",
              report.violations, report.instances_checked)


def test_criterion_09_transversal_guarantee():
    report = run_campaign("transversal", n=5, samples=1000, seed=909)
    assert report.instances_checked == 1000
    _conclude("criterion 9 (full transversal at 2n-1 rows)",
              report.violations, report.instances_checked)


def test_criterion_10_reports_are_deterministic():
    mismatches = 0
    for theorem, kwargs in (
        ("drisko", {"n": 3, "samples": 200, "seed": 42}),
        ("general", {"samples": 200, "seed": 42}),
        ("counting", {"samples": 200, "seed": 42}),
        ("egz", {"n": 4, "exhaustive": True}),
    ):
        first = run_campaign(theorem, **kwargs).to_obj()
        second = run_campaign(theorem, **kwargs).to_obj()
        first.pop("elapsed")
        second.pop("elapsed")
        if json.dumps(first, sort_keys=True) != json.dumps(second, sort_keys=True):
            mismatches += 1
    _conclude("criterion 10 (byte-identical reports modulo elapsed)", mismatches, 4)
