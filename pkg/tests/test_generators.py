import numpy as np
import pytest
from hypothesis import given, strategies as st

from tourpaths.core import Tournament, build_tournament, degree_summary
from tourpaths.errors import OrderTooLarge, WindowInfeasible
from tourpaths.generators import (
    SamplerConfig,
    _is_cyclic,
    _reverse_triangle,
    instance_rng,
    mix_triangles,
    moon_embed,
    orient_to_scores,
    outdegree_window,
    random_regular,
    random_tournament,
    rotational_regular,
    semidegree_window_sample,
)

from conftest import tournaments


def test_rotational_arcs():
    t = rotational_regular(2)
    assert t.out_sets[0] == 0b00110
    assert t.out_sets[4] == 0b00011


def test_random_tournament_deterministic():
    assert random_tournament(9, 3) == random_tournament(9, 3)
    assert random_tournament(9, 3) != random_tournament(9, 4)


def test_random_tournament_limit():
    with pytest.raises(OrderTooLarge):
        random_tournament(27, 0)


def test_instance_rng_streams_differ():
    a = instance_rng(0, 11, 1).integers(1 << 30, size=4)
    b = instance_rng(0, 11, 2).integers(1 << 30, size=4)
    assert not np.array_equal(a, b)
    assert np.array_equal(a, instance_rng(0, 11, 1).integers(1 << 30, size=4))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_random_regular_always_regular(n):
    cfg = SamplerConfig(mix_steps=4 * n)
    for i in range(1000):
        t = random_regular(n, cfg, rng=instance_rng(1, n, i))
        assert degree_summary(t).irregularity == 0


def test_random_regular_default_mixing_moves_away_from_rotational():
    t = random_regular(5, SamplerConfig(seed=2))
    assert degree_summary(t).is_regular
    assert t != rotational_regular(5)


def test_mix_steps_default():
    assert SamplerConfig().steps_for(11) == 1210
    assert SamplerConfig(mix_steps=3).steps_for(11) == 3


@given(tournaments(min_order=3), st.integers(0, 2**32 - 1))
def test_triangle_reversal_preserves_scores(t, seed):
    rng = np.random.default_rng(seed)
    rows = list(t.out_sets)
    cycles = [(a, b, c) for a in range(t.order) for b in range(a + 1, t.order)
              for c in range(b + 1, t.order) if _is_cyclic(rows, a, b, c)]
    if not cycles:
        return
    a, b, c = cycles[int(rng.integers(len(cycles)))]
    _reverse_triangle(rows, a, b, c)
    out = Tournament(t.order, tuple(rows))
    assert degree_summary(out).out_degrees == degree_summary(t).out_degrees
    assert out != t


@given(tournaments(min_order=3), st.integers(0, 2**32 - 1))
def test_mixing_preserves_scores(t, seed):
    out = mix_triangles(t, 20, np.random.default_rng(seed), max_draws=2000)
    assert degree_summary(out).out_degrees == degree_summary(t).out_degrees


def test_orient_to_scores_infeasible():
    # one free pair cannot give both endpoints out-degree 1
    assert orient_to_scores(2, [0, 0], [(0, 1)], [1, 1]) is None
    assert orient_to_scores(2, [0, 0], [(0, 1)], [1, 0]) == [0b10, 0]


def _check_embedding(h):
    emb = moon_embed(h)
    m = degree_summary(h).irregularity
    assert emb.tournament.order == h.order + m
    assert degree_summary(emb.tournament).is_regular
    for u in range(h.order):
        for v in range(h.order):
            if u != v:
                assert emb.tournament.has_arc(u, v) == h.has_arc(u, v)
    return emb


def test_moon_embed_transitive():
    h = build_tournament(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    emb = _check_embedding(h)
    assert emb.added == (4, 5, 6)


def test_moon_embed_regular_is_identity():
    t = rotational_regular(3)
    emb = moon_embed(t)
    assert emb.tournament == t and emb.added == ()


def test_moon_embed_almost_regular_order6():
    h = semidegree_window_sample(6, 2, 3, SamplerConfig(seed=3))
    assert degree_summary(h).is_almost_regular
    assert _check_embedding(h).tournament.order == 7


@given(tournaments(min_order=2, max_order=10))
def test_moon_embed_property(h):
    # irregularity has the parity of p - 1, so p + m is always odd
    assert (h.order + degree_summary(h).irregularity) % 2 == 1
    _check_embedding(h)


def test_outdegree_window():
    assert outdegree_window(13, 5, 7) == (5, 7)
    assert outdegree_window(10, 4, 5) == (4, 5)


@pytest.mark.parametrize("p, lo, hi", [(13, 5, 7), (10, 4, 5), (11, 5, 5), (11, 4, 6), (12, 5, 6)])
def test_window_sample_respects_window(p, lo, hi):
    for i in range(20):
        t = semidegree_window_sample(p, lo, hi, rng=instance_rng(5, p, i))
        s = degree_summary(t)
        assert all(lo <= d <= hi for d in s.out_degrees + s.in_degrees)


def test_window_regular_only():
    t = semidegree_window_sample(11, 5, 5, SamplerConfig(seed=1))
    assert degree_summary(t).is_regular


def test_window_infeasible():
    with pytest.raises(WindowInfeasible):
        semidegree_window_sample(10, 5, 5)
    with pytest.raises(WindowInfeasible):
        semidegree_window_sample(11, 6, 9)
