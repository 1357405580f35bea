"""Dense tournament representation and the transforms every other module uses.

A tournament of order ``p`` is stored as ``p`` out-neighbour bitsets: bit ``j``
of ``out_sets[i]`` is set iff the arc ``i -> j`` exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    DuplicatePair,
    FactViolated,
    IndexOutOfRange,
    MissingPair,
    OrderTooLarge,
    SameVertex,
    SelfLoop,
    SIsEverything,
    SOutOfRange,
    TournamentError,
)

MAX_ORDER = 26


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_order(order: int) -> None:
    if order < 1:
        raise TournamentError(f"order must be at least 1, got {order}")
    if order > MAX_ORDER:
        raise OrderTooLarge(f"order {order} exceeds the supported maximum {MAX_ORDER}")


@dataclass(frozen=True)
class Tournament:
    order: int
    out_sets: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.order)
        if len(self.out_sets) != self.order:
            raise TournamentError(
                f"expected {self.order} out-sets, got {len(self.out_sets)}"
            )
        full = (1 << self.order) - 1
        for i, row in enumerate(self.out_sets):
            if row & ~full:
                raise IndexOutOfRange(f"row {i} has bits outside [0, {self.order})")
            if row >> i & 1:
                raise SelfLoop(f"self-arc at vertex {i}")
        for i, j in combinations(range(self.order), 2):
            fwd = self.out_sets[i] >> j & 1
            back = self.out_sets[j] >> i & 1
            if fwd and back:
                raise DuplicatePair(f"pair ({i}, {j}) is oriented both ways")
            if not fwd and not back:
                raise MissingPair(f"pair ({i}, {j}) has no arc")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Tournament:
        rows = tuple(to_mask(j for j, a in enumerate(row) if a) for row in matrix)
        return cls(len(rows), rows)

    @cached_property
    def in_sets(self) -> tuple[int, ...]:
        ins = [0] * self.order
        for i, row in enumerate(self.out_sets):
            for j in bits(row):
                ins[j] |= 1 << i
        return tuple(ins)

    @cached_property
    def out_array(self) -> np.ndarray:
        """Out-sets as a ``uint32`` array, the form the compiled kernels take."""
        return np.array(self.out_sets, dtype=np.uint32)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SameVertex(f"has_arc({u}, {v}) on a single vertex")
        return bool(self.out_sets[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        return self.out_sets[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.order - 1 - self.out_sets[v].bit_count()

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.out_sets) for j in bits(row)]

    def dominates(self, sources: int, targets: int) -> bool:
        """True iff every vertex of mask ``sources`` beats every vertex of ``targets``."""
        return all(self.out_sets[v] & targets == targets for v in bits(sources))

    def matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.order)] for row in self.out_sets]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise IndexOutOfRange(f"vertex {v} not in [0, {self.order})")


def build_tournament(order: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    """Build a tournament from an arc list covering every pair exactly once."""
    _check_order(order)
    rows = [0] * order
    seen: set[tuple[int, int]] = set()
    for u, v in arcs:
        for w in (u, v):
            if not 0 <= w < order:
                raise IndexOutOfRange(f"arc ({u}, {v}) has vertex {w} outside [0, {order})")
        if u == v:
            raise SelfLoop(f"arc ({u}, {v}) is a self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicatePair(f"pair {key} listed more than once (arc ({u}, {v}))")
        seen.add(key)
        rows[u] |= 1 << v
    for key in combinations(range(order), 2):
        if key not in seen:
            raise MissingPair(f"pair {key} has no arc")
    return Tournament(order, tuple(rows))


def has_arc(t: Tournament, u: int, v: int) -> bool:
    return t.has_arc(u, v)


@dataclass(frozen=True)
class DegreeSummary:
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]

    @property
    def irregularity(self) -> int:
        return max(abs(a - b) for a, b in zip(self.out_degrees, self.in_degrees))

    @property
    def is_regular(self) -> bool:
        return self.irregularity == 0

    @property
    def is_almost_regular(self) -> bool:
        return self.irregularity == 1


def degree_summary(t: Tournament) -> DegreeSummary:
    outs = tuple(t.out_degree(v) for v in range(t.order))
    return DegreeSummary(outs, tuple(t.order - 1 - d for d in outs))


def irregularity(t: Tournament) -> int:
    return degree_summary(t).irregularity


def converse(t: Tournament) -> Tournament:
    return Tournament(t.order, t.in_sets)


def relabel(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Rename vertex ``v`` to ``perm[v]``."""
    if sorted(perm) != list(range(t.order)):
        raise TournamentError("perm is not a permutation of the vertex set")
    rows = [0] * t.order
    for v, row in enumerate(t.out_sets):
        rows[perm[v]] = to_mask(perm[w] for w in bits(row))
    return Tournament(t.order, tuple(rows))


def induced(t: Tournament, keep: Sequence[int]) -> Tournament:
    """Subtournament on ``keep``; new vertex ``i`` is old vertex ``keep[i]``."""
    position = {old: new for new, old in enumerate(keep)}
    rows = tuple(
        to_mask(position[w] for w in bits(t.out_sets[old]) if w in position)
        for old in keep
    )
    return Tournament(len(keep), rows)


def induced_minus(t: Tournament, removed: Iterable[int]) -> tuple[Tournament, tuple[int, ...]]:
    """Delete ``removed`` and return ``(T - S, kept)`` with ``kept[new] == old``."""
    removed = set(removed)
    for v in removed:
        if not 0 <= v < t.order:
            raise SOutOfRange(f"vertex {v} not in [0, {t.order})")
    if len(removed) >= t.order:
        raise SIsEverything("cannot delete every vertex")
    kept = tuple(v for v in range(t.order) if v not in removed)
    return induced(t, kept), kept


@dataclass(frozen=True)
class LabeledTournament:
    """A tournament with named vertices or blocks, plus named unions of roles.

    ``roles`` map disjoint names to vertex tuples; ``groups`` name a union of
    roles (``S = {v1, v2}`` where ``v1`` and ``v2`` are roles too).
    """

    tournament: Tournament
    roles: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    groups: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: dict[int, str] = {}
        for name, vs in self.roles.items():
            for v in vs:
                if not 0 <= v < self.tournament.order:
                    raise IndexOutOfRange(f"role {name!r} has vertex {v} out of range")
                if v in seen:
                    raise TournamentError(
                        f"vertex {v} belongs to both {seen[v]!r} and {name!r}"
                    )
                seen[v] = name
        for name, members in self.groups.items():
            if name in self.roles:
                raise TournamentError(f"group {name!r} shadows a role")
            for m in members:
                if m not in self.roles:
                    raise TournamentError(f"group {name!r} references unknown role {m!r}")

    def __getitem__(self, name: str) -> tuple[int, ...]:
        if name in self.roles:
            return tuple(self.roles[name])
        if name in self.groups:
            return tuple(sorted(v for m in self.groups[name] for v in self.roles[m]))
        raise KeyError(name)

    def vertex(self, name: str) -> int:
        vs = self[name]
        if len(vs) != 1:
            raise TournamentError(f"role {name!r} is a block of size {len(vs)}")
        return vs[0]

    def mask(self, name: str) -> int:
        return to_mask(self[name])

    @property
    def order(self) -> int:
        return self.tournament.order

    def minus(self, name: str) -> tuple[Tournament, tuple[int, ...]]:
        """``T - X`` for the named block or group ``X``."""
        return induced_minus(self.tournament, self[name])


@dataclass(frozen=True)
class FactReport:
    applicable: tuple[str, ...]
    held: bool = True


def _two_distinct(degrees: Sequence[int], low_ok, high_ok) -> bool:
    # x with low_ok(d(x)) and y != x with high_ok(d(y))
    lows = [v for v, d in enumerate(degrees) if low_ok(d)]
    highs = [v for v, d in enumerate(degrees) if high_ok(d)]
    return any(a != b for a in lows for b in highs)


def check_degree_facts(t: Tournament) -> FactReport:
    """Evaluate every applicable clause of the elementary degree lemma.

    Raises ``FactViolated`` naming the first clause that fails. All halves are
    compared in doubled integer form to stay exact.
    """
    p = t.order
    if p < 2:
        raise TournamentError("degree facts need order at least 2")
    s = degree_summary(t)
    outs, ins = s.out_degrees, s.in_degrees
    applicable = ["i"]

    for degs in (ins, outs):
        if not _two_distinct(degs, lambda d: 2 * d <= p - 1, lambda d: 2 * d >= p - 1):
            raise FactViolated("i")

    if s.is_regular:
        applicable.append("ii")
        if p % 2 == 0 or any(2 * d != p - 1 for d in outs + ins):
            raise FactViolated("ii")
    else:
        applicable.append("iii")
        for degs in (ins, outs):
            if not _two_distinct(degs, lambda d: 2 * d <= p - 2, lambda d: 2 * d >= p):
                raise FactViolated("iii")

    if s.is_almost_regular:
        applicable.append("iv")
        n = p // 2
        if p % 2 or sum(d == n for d in ins) != n or sum(d == n for d in outs) != n:
            raise FactViolated("iv")
        if any(ins[v] != n and outs[v] != n for v in range(p)):
            raise FactViolated("iv")

    # One-sided bounds do not suffice here: at p = 4 the in-degrees (2, 2, 2, 0)
    # are all below 5/2 with irregularity 3. Both families must be bounded.
    if not s.is_regular and (
        all(2 * d < p + 1 for d in ins) and all(2 * d < p + 1 for d in outs)
    ):
        applicable.append("v")
        if not s.is_almost_regular:
            raise FactViolated("v")

    if all(2 * d < p for d in ins) or all(2 * d < p for d in outs):
        applicable.append("vi")
        if not s.is_regular:
            raise FactViolated("vi")

    return FactReport(tuple(applicable))
