import threading

import numpy as np
import pytest

from src.algebra.laurent import CoeffRing
from src.certify import fuzz
from src.certify.regions import Region, region_member


@pytest.mark.parametrize("modulus", [2, 3, 5])
def test_closure_rules_hold(modulus):
    report = fuzz.closure_suite(modulus, seed=11, trials=600)
    assert report.clean
    assert report.trials == 600 * len(fuzz.CLOSURE_RULES)
    assert len(report.extra) == len(fuzz.CLOSURE_RULES)


def test_v0_and_disjointness():
    assert fuzz.v0_suite(3, seed=5, trials=500).clean
    assert fuzz.disjointness_suite(2, seed=5, trials=500).clean


def test_action_agreement_and_determinants():
    assert fuzz.action_agreement_suite(5, seed=1, trials=300).clean
    report = fuzz.det_suite(seed=1, trials=300, max_length=12)
    assert report.clean
    assert report.trials == 300


def test_faithfulness_sample():
    report = fuzz.faithful_suite(seed=3, modulus=2, trials=500, max_length=12)
    assert report.clean
    assert dict(report.extra)["identity images"].isdigit()


def test_same_seed_same_report():
    first = fuzz.closure_suite(2, seed=42, trials=300, workers=1)
    second = fuzz.closure_suite(2, seed=42, trials=300, workers=4)
    assert first.render() == second.render()
    other = fuzz.faithful_suite(seed=42, trials=300, workers=3)
    assert other.render() == fuzz.faithful_suite(seed=42, trials=300, workers=1).render()


def test_random_region_vectors_are_members():
    rng = np.random.default_rng([7, 0])
    for modulus in (0, 2, 3):
        ring = CoeffRing(modulus)
        for region in Region:
            for _ in range(50):
                assert region_member(region, fuzz.random_region_vector(rng, ring, region, 5))


def test_random_poly_with_leading_term():
    rng = np.random.default_rng(0)
    ring = CoeffRing(3)
    for top in range(-4, 5):
        assert fuzz.random_poly(rng, ring, -5, top, leading=top).degree() == top


def test_violations_are_reported():
    rules = ((Region.VX, "xy", Region.VX),)
    report = fuzz.closure_suite(2, seed=9, trials=200, rules=rules)
    assert report.violations == 200
    assert not report.clean
    assert len(report.examples) == fuzz.MAX_EXAMPLES
    assert "violation:" in report.render()


def test_stopped_run_is_incomplete():
    stop = threading.Event()
    stop.set()
    report = fuzz.v0_suite(2, seed=0, trials=1000, stop=stop)
    assert not report.complete
    assert report.trials == 0
    assert "complete: no" in report.render()


def test_defaults_come_from_config(restore_config):
    restore_config.update('fuzz', 'closure_trials', 40)
    report = fuzz.disjointness_suite(2, seed=0)
    assert report.trials == 40


@pytest.mark.slow
@pytest.mark.parametrize("modulus", [2, 3, 5])
def test_closure_rules_full_size(modulus):
    report = fuzz.closure_suite(modulus, seed=2024, trials=10000)
    assert report.violations == 0


@pytest.mark.slow
def test_faithfulness_full_size():
    report = fuzz.faithful_suite(seed=2024, modulus=2, trials=10000, max_length=16)
    assert report.violations == 0


@pytest.mark.slow
@pytest.mark.parametrize("modulus", [2, 3, 5])
def test_v0_and_disjointness_full_size(modulus):
    assert fuzz.v0_suite(modulus, seed=2024, trials=10000).clean
    assert fuzz.disjointness_suite(modulus, seed=2024, trials=10000).clean


@pytest.mark.slow
@pytest.mark.parametrize("modulus", [2, 3, 5])
def test_action_agreement_full_size(modulus):
    report = fuzz.action_agreement_suite(modulus, seed=2024, trials=1000)
    assert report.violations == 0


@pytest.mark.slow
def test_det_identity_full_size():
    report = fuzz.det_suite(seed=2024, trials=1000)
    assert report.violations == 0
    assert report.trials == 1000
