"""Exact (x, y)-path length spectra and the predicates built on them.

Lengths count arcs and start at 1; checkers impose their own lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernel
from .core import MAX_ORDER, Tournament, bits, induced_minus
from .errors import NoSuchArc, OrderTooLarge, SameVertex, TournamentError

BRUTE_FORCE_MAX_ORDER = 10


@dataclass(frozen=True)
class PathSpectrum:
    source: int
    target: int
    lengths: frozenset[int]

    @classmethod
    def from_mask(cls, source: int, target: int, mask: int) -> PathSpectrum:
        return cls(source, target, frozenset(bits(int(mask))))

    @property
    def mask(self) -> int:
        return sum(1 << k for k in self.lengths)

    def __contains__(self, k: object) -> bool:
        return k in self.lengths


class CheckResult(NamedTuple):
    ok: bool
    failure: tuple | None = None


def _check_pair(t: Tournament, x: int, y: int) -> None:
    t._check_vertex(x)
    t._check_vertex(y)
    if x == y:
        raise SameVertex(f"source and target are both {x}")
    if t.order > MAX_ORDER:
        raise OrderTooLarge(f"order {t.order} exceeds {MAX_ORDER}")


def path_spectrum(t: Tournament, x: int, y: int) -> PathSpectrum:
    _check_pair(t, x, y)
    masks = _kernel.source_spectra(t.out_array, x)
    return PathSpectrum.from_mask(x, y, masks[y])


def spectrum_matrix(t: Tournament) -> np.ndarray:
    """``m[x, y]`` is the bitmask of (x, y)-path lengths; one DP pass per source."""
    return _kernel.all_spectra(t.out_array)


def brute_force_spectrum(t: Tournament, x: int, y: int) -> PathSpectrum:
    """Enumerate every simple path out of ``x`` by depth-first search."""
    _check_pair(t, x, y)
    if t.order > BRUTE_FORCE_MAX_ORDER:
        raise OrderTooLarge(f"brute force is limited to order {BRUTE_FORCE_MAX_ORDER}")
    found: set[int] = set()

    def extend(v: int, visited: int, length: int) -> None:
        for w in bits(t.out_sets[v] & ~visited):
            if w == y:
                found.add(length + 1)
            else:
                extend(w, visited | 1 << w, length + 1)

    extend(x, 1 << x, 0)
    return PathSpectrum(x, y, frozenset(found))


def witness_path(t: Tournament, x: int, y: int, k: int) -> list[int] | None:
    """A concrete (x, y)-path with exactly ``k`` arcs, or ``None``."""
    _check_pair(t, x, y)
    if not 1 <= k <= t.order - 1:
        return None
    table, inm = _kernel.source_table(t.out_array, x)
    compressed = y if y < x else y - 1
    hits = np.nonzero((table >> np.uint32(compressed)) & 1)[0]
    hits = hits[np.bitwise_count(hits) == k]
    if hits.size == 0:
        return None
    m, cur = int(hits[0]), compressed
    rev = [cur]
    while True:
        m ^= 1 << cur
        if m == 0:
            break
        cur = (int(table[m]) & int(inm[cur])).bit_length() - 1
        rev.append(cur)
    return [x] + [v if v < x else v + 1 for v in reversed(rev)]


def is_path(t: Tournament, seq: list[int]) -> bool:
    return len(set(seq)) == len(seq) and all(
        t.out_sets[a] >> b & 1 for a, b in zip(seq, seq[1:])
    )


def cycle_spectrum_through_arc(t: Tournament, u: int, v: int) -> frozenset[int]:
    """Lengths ``k`` such that some ``k``-cycle uses the arc ``u -> v``."""
    if u == v or not t.has_arc(u, v):
        raise NoSuchArc(f"{u} -> {v} is not an arc")
    back = path_spectrum(t, v, u)
    return frozenset(k + 1 for k in back.lengths if k >= 2)


def cycle_lengths_through_vertex(t: Tournament, v: int, matrix: np.ndarray | None = None) -> frozenset[int]:
    m = spectrum_matrix(t) if matrix is None else matrix
    found: set[int] = set()
    for w in bits(t.out_sets[v]):
        found.update(k + 1 for k in bits(int(m[w, v])) if k >= 2)
    return frozenset(found)


def _reach(rows, start: int) -> int:
    reach = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~reach
        reach |= nxt
    return reach


def is_strongly_connected(t: Tournament) -> bool:
    full = t.vertex_mask
    return _reach(t.out_sets, 0) == full and _reach(t.in_sets, 0) == full


def range_mask(lo: int, hi: int) -> int:
    return ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1) if hi >= lo else 0


def is_d_arc_pancyclic(t: Tournament, d: int) -> CheckResult:
    """Every arc on a ``k``-cycle for each ``k`` in ``[d, p]``; failure is ``((u, v), k)``."""
    p = t.order
    if not 3 <= d <= p:
        raise TournamentError(f"d must lie in [3, {p}], got {d}")
    m = spectrum_matrix(t)
    need = range_mask(d - 1, p - 1)
    for u, v in t.arcs():
        missing = need & ~int(m[v, u])
        if missing:
            k = (missing & -missing).bit_length()
            return CheckResult(False, ((u, v), k))
    return CheckResult(True)


def is_d_strongly_panconnected(t: Tournament, d: int, matrix: np.ndarray | None = None) -> CheckResult:
    """All ordered pairs have paths of every length in ``[d, p-1]``; failure is ``(x, y, k)``."""
    p = t.order
    if not 3 <= d <= p - 1:
        raise TournamentError(f"d must lie in [3, {p - 1}], got {d}")
    m = spectrum_matrix(t) if matrix is None else matrix
    need = range_mask(d, p - 1)
    for x in range(p):
        for y in range(p):
            if x == y:
                continue
            missing = need & ~int(m[x, y])
            if missing:
                return CheckResult(False, (x, y, (missing & -missing).bit_length() - 1))
    return CheckResult(True)


@dataclass(frozen=True)
class ExtensionInstance:
    """A regular tournament, a deleted set, an ordered pair and a path length."""

    tournament: Tournament
    removed: frozenset[int]
    x: int
    y: int
    r: int

    def __post_init__(self) -> None:
        p = self.tournament.order
        if p % 2 == 0:
            raise TournamentError("extension instances need odd order")
        if self.x == self.y or self.x in self.removed or self.y in self.removed:
            raise TournamentError("x, y must be distinct vertices outside S")
        n = (p - 1) // 2
        if not 3 <= self.r <= 2 * n - len(self.removed) - 1:
            raise TournamentError(f"r={self.r} outside [3, 2n-|S|-1]")


def extension_holds(inst: ExtensionInstance) -> CheckResult:
    """``r`` in the spectrum of ``T - S`` forces ``r + 1``; failure is ``r``."""
    sub, kept = induced_minus(inst.tournament, inst.removed)
    lens = path_spectrum(sub, kept.index(inst.x), kept.index(inst.y)).lengths
    if inst.r in lens and inst.r + 1 not in lens:
        return CheckResult(False, inst.r)
    return CheckResult(True)


def extension_gaps(mask: int, lo: int, hi: int) -> list[int]:
    """Every ``r`` in ``[lo, hi]`` present in ``mask`` whose successor is absent."""
    gaps = mask & ~(mask >> 1) & range_mask(lo, hi)
    return list(bits(gaps))


def extension_failures(t: Tournament, removed: Iterable[int]) -> list[tuple[int, int, int]]:
    """All ``(x, y, r)`` in original labels where ``T - S`` breaks the extension property."""
    removed = frozenset(removed)
    n = (t.order - 1) // 2
    hi = 2 * n - len(removed) - 1
    sub, kept = induced_minus(t, removed)
    m = spectrum_matrix(sub)
    fails = []
    for i, j in _ordered_pairs(sub.order):
        for r in extension_gaps(int(m[i, j]), 3, hi):
            fails.append((kept[i], kept[j], r))
    return fails


def _ordered_pairs(p: int):
    for i, j in combinations(range(p), 2):
        yield i, j
        yield j, i
