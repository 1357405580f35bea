"""Tournament generators: rotational, random, random regular, regular completion.

Randomness always comes from an explicit ``numpy.random.Generator``. Campaigns
derive the generator for instance ``i`` of a run seeded with ``seed`` as
``instance_rng(seed, i)``, i.e. ``SeedSequence([seed, i])``, which hashes the
key tuple; extra keys (an order, a stream tag) are appended the same way. No
generator state is shared between instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

import networkx as nx
import numpy as np

from .core import MAX_ORDER, Tournament, bits, degree_summary
from .errors import EmbedFailed, OrderTooLarge, TournamentError, WindowInfeasible


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    order: int | None = None
    mix_steps: int | None = None
    count: int = 1

    def steps_for(self, p: int) -> int:
        return 10 * p * p if self.mix_steps is None else self.mix_steps


def instance_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, *keys]))


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return instance_rng(int(seed))


def rotational_regular(n: int) -> Tournament:
    """Vertices ``Z_{2n+1}`` with ``i -> i + j`` for ``j`` in ``[1, n]``."""
    if n < 1:
        raise TournamentError(f"half-order must be at least 1, got {n}")
    p = 2 * n + 1
    rows = tuple(sum(1 << ((i + j) % p) for j in range(1, n + 1)) for i in range(p))
    return Tournament(p, rows)


def random_tournament(p: int, seed=0) -> Tournament:
    """Each pair ``i < j`` (lexicographic order) is oriented by one fair bit."""
    if p > MAX_ORDER:
        raise OrderTooLarge(f"order {p} exceeds {MAX_ORDER}")
    rng = _rng(seed)
    pairs = list(combinations(range(p), 2))
    coins = rng.integers(0, 2, size=len(pairs))
    rows = [0] * p
    for (i, j), c in zip(pairs, coins):
        if c:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(p, tuple(rows))


def _is_cyclic(rows: list[int], a: int, b: int, c: int) -> bool:
    ab, bc, ca = rows[a] >> b & 1, rows[b] >> c & 1, rows[c] >> a & 1
    return ab == bc == ca


def _reverse_triangle(rows: list[int], a: int, b: int, c: int) -> None:
    cycle = (a, b, c) if rows[a] >> b & 1 else (a, c, b)
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        rows[u] ^= 1 << v
        rows[v] |= 1 << u


def mix_triangles(t: Tournament, steps: int, rng: np.random.Generator, max_draws: int | None = None) -> Tournament:
    """Reverse ``steps`` uniformly random directed 3-cycles.

    Uniformity comes from rejection: triples are drawn uniformly and kept only
    if cyclic. Every reversal preserves all semidegrees.
    """
    p = t.order
    if steps <= 0 or p < 3:
        return t
    rows = list(t.out_sets)
    budget = max_draws if max_draws is not None else 200 * steps + 1000
    accepted = draws = 0
    while accepted < steps and draws < budget:
        batch = rng.integers(0, p, size=(max(64, 4 * (steps - accepted)), 3))
        for a, b, c in batch.tolist():
            draws += 1
            if a == b or b == c or a == c:
                continue
            if _is_cyclic(rows, a, b, c):
                _reverse_triangle(rows, a, b, c)
                accepted += 1
                if accepted == steps:
                    break
    return Tournament(p, tuple(rows))


def random_regular(n: int, config: SamplerConfig = SamplerConfig(), rng: np.random.Generator | None = None) -> Tournament:
    """Rotational regular tournament scrambled by 3-cycle reversals."""
    t = rotational_regular(n)
    steps = config.steps_for(t.order)
    return mix_triangles(t, steps, rng if rng is not None else instance_rng(config.seed))


def orient_to_scores(
    order: int,
    fixed: Sequence[int],
    free_pairs: Sequence[tuple[int, int]],
    targets: Sequence[int],
) -> list[int] | None:
    """Orient ``free_pairs`` so that vertex ``v`` ends with out-degree ``targets[v]``.

    ``fixed`` holds the already decided out-sets. Solved as a bipartite flow
    from pairs to endpoints; returns the completed rows or ``None`` if no
    orientation reaches the targets.
    """
    need = [targets[v] - fixed[v].bit_count() for v in range(order)]
    if any(d < 0 for d in need) or sum(need) != len(free_pairs):
        return None
    g = nx.DiGraph()
    for idx, (a, b) in enumerate(free_pairs):
        g.add_edge("s", ("p", idx), capacity=1)
        g.add_edge(("p", idx), ("v", a), capacity=1)
        g.add_edge(("p", idx), ("v", b), capacity=1)
    for v in range(order):
        if need[v]:
            g.add_edge(("v", v), "t", capacity=need[v])
    if not free_pairs:
        return list(fixed)
    value, flow = nx.maximum_flow(g, "s", "t")
    if value != len(free_pairs):
        return None
    rows = list(fixed)
    for idx, (a, b) in enumerate(free_pairs):
        tail, head = (a, b) if flow[("p", idx)][("v", a)] == 1 else (b, a)
        rows[tail] |= 1 << head
    return rows


class Embedding(NamedTuple):
    tournament: Tournament
    host_of: tuple[int, ...]
    added: tuple[int, ...]


def moon_embed(h: Tournament) -> Embedding:
    """Embed ``h`` into a regular tournament with ``irregularity(h)`` extra vertices.

    The original vertices keep their labels; the new ones are appended. A
    tournament's irregularity has the parity of ``p - 1``, so ``p + m`` is odd
    and the regular target order is always ``p + m``.
    """
    p = h.order
    if p < 2:
        raise TournamentError("moon_embed needs order at least 2")
    m = degree_summary(h).irregularity
    total = p + m
    if total % 2 == 0:
        total += 1
    if total > MAX_ORDER:
        raise OrderTooLarge(f"host order {total} exceeds {MAX_ORDER}")
    half = (total - 1) // 2
    fixed = list(h.out_sets) + [0] * (total - p)
    free = [(a, b) for a, b in combinations(range(total), 2) if b >= p]
    rows = orient_to_scores(total, fixed, free, [half] * total)
    if rows is None:
        raise EmbedFailed(f"no regular completion of order {total}")
    host = Tournament(total, tuple(rows))
    if not degree_summary(host).is_regular:
        raise EmbedFailed("completion is not regular")
    return Embedding(host, tuple(range(p)), tuple(range(p, total)))


def outdegree_window(p: int, lo: int, hi: int) -> tuple[int, int]:
    """Out-degree bounds equivalent to both semidegrees lying in ``[lo, hi]``."""
    return max(lo, p - 1 - hi), min(hi, p - 1 - lo)


def semidegree_window_sample(
    p: int,
    lo: int,
    hi: int,
    config: SamplerConfig = SamplerConfig(),
    rng: np.random.Generator | None = None,
) -> Tournament:
    """Random tournament pushed into the semidegree window, then mixed.

    Repair reverses a path ``v -> w`` or ``v -> u -> w`` from the vertex of
    largest out-degree to the one of smallest; this moves one unit of score and
    strictly decreases the sum of squared out-degrees, so it terminates.
    """
    low, high = outdegree_window(p, lo, hi)
    if not (2 * low <= p - 1 <= 2 * high):
        raise WindowInfeasible(f"no tournament of order {p} has all semidegrees in [{lo}, {hi}]")
    rng = rng if rng is not None else instance_rng(config.seed)
    rows = list(random_tournament(p, rng).out_sets)
    while True:
        outs = [r.bit_count() for r in rows]
        if min(outs) >= low and max(outs) <= high:
            break
        v = max(range(p), key=outs.__getitem__)
        w = min(range(p), key=outs.__getitem__)
        if rows[v] >> w & 1:
            rows[v] ^= 1 << w
            rows[w] |= 1 << v
            continue
        middle = list(bits(rows[v] & ~rows[w] & ~(1 << w)))
        u = middle[int(rng.integers(len(middle)))]
        rows[v] ^= 1 << u
        rows[u] |= 1 << v
        rows[u] ^= 1 << w
        rows[w] |= 1 << u
    t = Tournament(p, tuple(rows))
    steps = config.steps_for(p)
    return mix_triangles(t, steps, rng, max_draws=50 * steps + 1000)
