"""The ten acceptance criteria, each at its stated size and time limit.

Every test prints one ``PASS``/``FAIL`` line; the session summary repeats them.
"""

import time

import numpy as np
import pytest

from tourpaths.constructions import (
    LEMMA32_VARIANTS,
    build_G,
    lemma32_counterexample,
    remark3_T11,
    remark4_H9,
)
from tourpaths.core import degree_summary, induced_minus
from tourpaths.generators import random_tournament
from tourpaths.spectrum import brute_force_spectrum, path_spectrum, spectrum_matrix
from tourpaths.verifier import (
    CampaignConfig,
    g_family_record,
    run_classical_campaign,
    run_lemma32_campaign,
    run_lemma_properties_campaign,
    run_theorem15_campaign,
    run_theorem16_campaign,
    summarize,
)

from conftest import all_tournaments

RESULTS: dict[int, str] = {}


@pytest.fixture(scope="module", autouse=True)
def warm_kernel():
    # time limits measure the computation, not the one-off JIT load
    spectrum_matrix(random_tournament(4, 0))


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        line = f"{'PASS' if ok else 'FAIL'} criterion {self.number:2d}: {self.title} ({elapsed:.1f}s, limit {self.limit:.0f}s)"
        RESULTS[self.number] = line
        print(line)
        if exc_type is None:
            assert elapsed < self.limit, line
        return False


def xy_lengths(lt, minus, x="x", y="y"):
    sub, kept = induced_minus(lt.tournament, lt[minus])
    return path_spectrum(sub, kept.index(lt.vertex(x)), kept.index(lt.vertex(y))).lengths


def counts(records, claim):
    return summarize(records).get(claim, {"pass": 0, "fail": 0, "vacuous": 0, "precondition-skip": 0})


def test_criterion_01_remark3():
    with Criterion(1, "order-11 fixture: 3 in, 4 out of (x0,x3) spectrum", 1):
        lt = remark3_T11()
        assert lt.order == 11 and degree_summary(lt.tournament).irregularity == 0
        lens = xy_lengths(lt, "S", "x0", "x3")
        assert 3 in lens and 4 not in lens


def test_criterion_02_remark4():
    with Criterion(2, "order-9 fixture minus z: 3 in, 4 out of (x,y) spectrum", 1):
        lens = xy_lengths(remark4_H9(), "z")
        assert 3 in lens and 4 not in lens


def test_criterion_03_family_G():
    with Criterion(3, "family G, k=1..3 and 20 block seeds at k=1,2", 30):
        for k in (1, 2, 3):
            rec = g_family_record(k)
            assert rec.verdict == "pass", rec
            assert rec.witness["semidegree"] == 3 * k + 1
        for k in (1, 2):
            for seed in range(20):
                rec = g_family_record(k, seed)
                assert rec.verdict == "pass", rec


def test_criterion_04_lemma32_counterexamples():
    with Criterion(4, "length-3/4 counterexamples of orders 7, 9, 11, 15", 5):
        for variant in LEMMA32_VARIANTS:
            combos = [(a, b) for a in (True, False) for b in (True, False)] if variant == 15 else [(True, True)]
            for fc in combos:
                lt = lemma32_counterexample(variant, forward_cycles=fc)
                assert degree_summary(lt.tournament).is_regular
                lens = xy_lengths(lt, "S")
                if variant in (7, 9):
                    assert not lens & {3, 4}
                elif variant == 11:
                    assert lens <= {1, 2}
                else:
                    assert not lens & {3, 4}
                    assert {k for k in lens if k > 2} == set(range(5, 11))


@pytest.mark.slow
def test_criterion_05_extension_campaign():
    with Criterion(5, "extension property: 200@11, 50@13, 25@15, zero failures", 300):
        total = {"pass": 0, "vacuous": 0}
        for order, count in ((11, 200), (13, 50), (15, 25)):
            recs = list(run_theorem15_campaign([order], "paper", CampaignConfig(seed=0, count=count)))
            c = counts(recs, "thm1.5")
            assert c["fail"] == 0, [r for r in recs if r.verdict == "fail"][:3]
            total["pass"] += c["pass"]
            total["vacuous"] += c["vacuous"]
        assert total["pass"] > 0


@pytest.mark.slow
def test_criterion_06_lemma32_ii_campaign():
    with Criterion(6, "length 3 or 4 after deleting S: 500 instances, n in [5,7]", 120):
        recs = list(run_lemma32_campaign(CampaignConfig(seed=0, count=500), with_fixtures=False))
        c = counts(recs, "lem3.2.ii")
        assert c["fail"] == 0
        assert c["pass"] > 0
        orders = {r.instance["n"] for r in recs}
        assert orders == {5, 6, 7}


@pytest.mark.slow
def test_criterion_07_semidegree_windows():
    with Criterion(7, "semidegree windows at p=11,13: 4-strong / 3-strong-or-G", 180):
        recs = list(run_theorem16_campaign(CampaignConfig(seed=0, count=100)))
        for claim in ("thm1.6.4", "thm1.6.3", "thm1.6.sharpness"):
            c = counts(recs, claim)
            assert c["fail"] == 0 and c["pass"] > 0, (claim, c)
        assert all(r.instance["m"] <= 2 for r in recs if r.instance["kind"] == "window")


@pytest.mark.slow
def test_criterion_08_oracle_equivalence():
    with Criterion(8, "subset DP equals DFS: all order-5, 1000 random order-10 x 10 pairs", 120):
        for t in all_tournaments(5):
            m = spectrum_matrix(t)
            for x in range(5):
                for y in range(5):
                    if x != y:
                        assert int(m[x, y]) == brute_force_spectrum(t, x, y).mask
        rng = np.random.default_rng(8)
        pairs = [(x, y) for x in range(10) for y in range(10) if x != y]
        for _ in range(1000):
            t = random_tournament(10, rng)
            m = spectrum_matrix(t)
            for i in rng.choice(len(pairs), size=10, replace=False):
                x, y = pairs[i]
                assert int(m[x, y]) == brute_force_spectrum(t, x, y).mask


@pytest.mark.slow
def test_criterion_09_configuration_lemmas():
    with Criterion(9, "configuration lemmas: 500 conforming samples, zero violations", 180):
        recs = list(run_lemma_properties_campaign(CampaignConfig(seed=0, count=500)))
        for claim in ("lem3.3", "lem3.4"):
            c = counts(recs, claim)
            assert c["fail"] == 0
            assert c["pass"] + c["vacuous"] == 500
            assert c["pass"] > 0


@pytest.mark.slow
def test_criterion_10_classical():
    with Criterion(10, "50 random regular of order 11/13 arc pancyclic and strongly panconnected", 120):
        recs = list(run_classical_campaign(CampaignConfig(seed=0, count=50)))
        for claim in ("arc-pancyclic", "strongly-panconnected"):
            c = counts(recs, claim)
            assert c["fail"] == 0 and c["pass"] == 50
