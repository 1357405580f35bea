"""Conditional statements about short paths in ``T - S`` and path configurations.

The configuration lemmas concern a path ``P = x_0 .. x_r`` and an outside
vertex ``z`` with ``{x_{a+1} .. x_r} -> z -> {x_0 .. x_a}`` (``a`` is
``alpha``), under the hypothesis that no ``(x_0, x_r)``-path of length
``r + 1`` runs through exactly ``V(P) | {z}``. That hypothesis is decided
exactly by the subset DP on the induced subtournament.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .constructions import g_roles
from .core import LabeledTournament, Tournament, degree_summary, induced, induced_minus, to_mask
from .errors import PreconditionViolated
from .generators import random_tournament
from .spectrum import is_path, path_spectrum


@dataclass(frozen=True)
class Lemma32Outcome:
    part: str
    holds: bool
    has3: bool
    has4: bool
    g_roles: LabeledTournament | None = None

    @property
    def g_flag(self) -> bool:
        return self.g_roles is not None


def lemma32_check(t: Tournament, removed, x: int, y: int, part: str, matrix=None) -> Lemma32Outcome:
    """Short (x, y)-paths in ``T - S`` for a regular ``T`` of order ``2n + 1``.

    Part ``"i"`` holds when a length-3 path exists, or else when ``T`` has the
    G shape around ``x``, ``y``, ``S`` (the flag is reported, the caller decides).
    Part ``"ii"`` holds when length 3 or 4 is present. ``matrix`` may carry a
    precomputed ``spectrum_matrix(T - S)`` when many pairs share one ``S``.
    """
    removed = frozenset(removed)
    s = degree_summary(t)
    if not s.is_regular:
        raise PreconditionViolated("regular", "T is not regular")
    n = (t.order - 1) // 2
    k = len(removed)
    if x == y or x in removed or y in removed:
        raise PreconditionViolated("pair", "x and y must be distinct vertices outside S")
    if part == "i":
        if n < 3 or 3 * k > n - 1:
            raise PreconditionViolated("bound", f"part (i) needs n >= 3 and |S| <= (n-1)/3 (n={n}, |S|={k})")
    elif part == "ii":
        if n < 5 or 2 * k > n:
            raise PreconditionViolated("bound", f"part (ii) needs n >= 5 and |S| <= n/2 (n={n}, |S|={k})")
    else:
        raise ValueError(f"part must be 'i' or 'ii', got {part!r}")

    sub, kept = induced_minus(t, removed)
    i, j = kept.index(x), kept.index(y)
    mask = int(matrix[i, j]) if matrix is not None else path_spectrum(sub, i, j).mask
    has3, has4 = bool(mask >> 3 & 1), bool(mask >> 4 & 1)
    if part == "ii":
        return Lemma32Outcome(part, has3 or has4, has3, has4)
    roles = None if has3 else g_roles(t, x, y, removed)
    return Lemma32Outcome(part, has3 or roles is not None, has3, has4, roles)


@dataclass(frozen=True)
class Configuration:
    tournament: Tournament
    path: tuple[int, ...]
    z: int
    alpha: int

    @property
    def r(self) -> int:
        return len(self.path) - 1

    def as_dict(self) -> dict:
        return {
            "order": self.tournament.order,
            "rows": list(self.tournament.out_sets),
            "path": list(self.path),
            "z": self.z,
            "alpha": self.alpha,
        }


class PropertyResult(NamedTuple):
    holds: bool
    vacuous: bool
    violation: tuple | None = None


def split_alpha(t: Tournament, path, z: int) -> int | None:
    """The ``alpha`` for which ``z`` splits ``path`` as required, if any."""
    out_z = t.out_sets[z]
    a = 0
    while a < len(path) and out_z >> path[a] & 1:
        a += 1
    if a == 0 or any(out_z >> v & 1 for v in path[a:]):
        return None
    return a - 1


def q_path_exists(c: Configuration) -> bool:
    verts = list(c.path) + [c.z]
    sub = induced(c.tournament, verts)
    return c.r + 1 in path_spectrum(sub, 0, c.r).lengths


def check_configuration(c: Configuration) -> None:
    t, P, r = c.tournament, c.path, c.r
    if not is_path(t, list(P)):
        raise PreconditionViolated("path", "P is not a path of T")
    if c.z in P:
        raise PreconditionViolated("z-outside", f"z={c.z} lies on P")
    if not 2 <= c.alpha <= r - 3:
        raise PreconditionViolated("alpha-range", f"alpha={c.alpha} outside [2, {r - 3}]")
    out_z = t.out_sets[c.z]
    head, tail = to_mask(P[: c.alpha + 1]), to_mask(P[c.alpha + 1:])
    if out_z & head != head or out_z & tail:
        raise PreconditionViolated("domination", "z does not split P at alpha")
    if q_path_exists(c):
        raise PreconditionViolated("no-Q", "an (x0, xr)-path of length r+1 on V(P)+z exists")


def _arc_into(t: Tournament, sources, targets) -> tuple[int, int] | None:
    for a in sources:
        for b in targets:
            if t.out_sets[a] >> b & 1:
                return a, b
    return None


def lemma33_property(c: Configuration, check: bool = True) -> PropertyResult:
    """For arcs ``x_s -> x_t`` with ``s < alpha <= t - 3``: no arcs from early
    vertices into ``{x_{alpha+2} .. x_{t-1}}``.

    The two clauses are checked independently as stated: ``{x_0 .. x_{s-2}}``
    when ``s >= 3`` and ``x_{s-1}`` when ``t - s != 5``. A violation is
    ``(clause, s, t, a, b)`` in path positions.
    """
    if check:
        check_configuration(c)
    t, P, r, al = c.tournament, c.path, c.r, c.alpha
    vacuous = True
    for s in range(1, al):
        for tt in range(al + 3, r + 1):
            if not t.out_sets[P[s]] >> P[tt] & 1:
                continue
            vacuous = False
            targets = range(al + 2, tt)
            if s >= 3:
                hit = _arc_into(t, [P[a] for a in range(0, s - 1)], [P[b] for b in targets])
                if hit:
                    return PropertyResult(False, False, ("prefix", s, tt, P.index(hit[0]), P.index(hit[1])))
            if tt - s != 5:
                hit = _arc_into(t, [P[s - 1]], [P[b] for b in targets])
                if hit:
                    return PropertyResult(False, False, ("predecessor", s, tt, s - 1, P.index(hit[1])))
    return PropertyResult(True, vacuous)


def lemma34_property(c: Configuration, check: bool = True) -> PropertyResult:
    """For arcs ``x_s -> x_t`` with ``alpha <= s`` and ``t >= s + 2``: no arc
    from ``{x_0 .. x_{alpha-1}}`` into ``{x_{s+1} .. x_{s+k}}``, ``k = (t-s)//2``.
    A violation is ``(s, t, a, b)`` in path positions.
    """
    if check:
        check_configuration(c)
    t, P, r, al = c.tournament, c.path, c.r, c.alpha
    vacuous = True
    early = [P[a] for a in range(al)]
    for s in range(al, r - 1):
        for tt in range(s + 2, r + 1):
            if not t.out_sets[P[s]] >> P[tt] & 1:
                continue
            vacuous = False
            k = (tt - s) // 2
            hit = _arc_into(t, early, [P[b] for b in range(s + 1, s + k + 1)])
            if hit:
                return PropertyResult(False, False, (s, tt, P.index(hit[0]), P.index(hit[1])))
    return PropertyResult(True, vacuous)


def hamiltonian_path(t: Tournament, order) -> list[int]:
    """Insertion construction: every tournament has a Hamiltonian path."""
    path: list[int] = []
    for v in order:
        if not path or t.out_sets[v] >> path[0] & 1:
            path.insert(0, v)
            continue
        for i in range(len(path) - 1):
            if t.out_sets[path[i]] >> v & 1 and t.out_sets[v] >> path[i + 1] & 1:
                path.insert(i + 1, v)
                break
        else:
            path.append(v)
    return path


def sample_configuration(rng: np.random.Generator, min_order: int = 7, max_order: int = 12) -> tuple[Configuration | None, str]:
    """Random tournament, then a scan of the windows of one random Hamiltonian
    path (as ``P``) against every outside vertex (as ``z``).

    Candidates are visited in random order and the first one meeting every
    precondition is returned as ``(configuration, "")``. Otherwise the result
    names the precondition that stopped the last candidate: ``"domination"``
    when no vertex splits any window, ``"no-Q"`` when every split admits ``Q``.
    """
    p = int(rng.integers(min_order, max_order + 1))
    t = random_tournament(p, rng)
    ham = hamiltonian_path(t, rng.permutation(p).tolist())
    r = int(rng.integers(5, p - 1))
    candidates = []
    for offset in range(p - r):
        path = tuple(ham[offset: offset + r + 1])
        for z in ham[:offset] + ham[offset + r + 1:]:
            a = split_alpha(t, path, z)
            if a is not None and 2 <= a <= r - 3:
                candidates.append(Configuration(t, path, z, a))
    if not candidates:
        return None, "domination"
    last = None
    for i in rng.permutation(len(candidates)).tolist():
        last = candidates[i]
        if not q_path_exists(last):
            return last, ""
    return last, "no-Q"
