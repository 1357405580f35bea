"""Explicit tournaments: the family G, two sharpness examples, and the
counterexamples to the length-3/4 lemma at its boundary.

Every builder writes its arcs through ``_Builder`` and ends in the validating
``Tournament`` constructor, so a transcription slip surfaces as
``MissingPair`` or ``DuplicatePair`` at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import LabeledTournament, Tournament, bits, build_tournament, degree_summary, induced, to_mask
from .errors import InvalidVariant, TournamentError
from .generators import SamplerConfig, instance_rng, orient_to_scores, random_regular, rotational_regular


class _Builder:
    def __init__(self, names: list[str]):
        self.index = {name: i for i, name in enumerate(names)}
        self.rows = [0] * len(names)

    def ids(self, *names: str) -> list[int]:
        return [self.index[n] for n in names]

    def arc(self, u: int, v: int) -> None:
        self.rows[u] |= 1 << v

    def arcs(self, spec: str) -> None:
        """Whitespace-separated ``u>v`` tokens."""
        for tok in spec.split():
            u, v = tok.split(">")
            self.arc(self.index[u], self.index[v])

    def dominate(self, sources, targets) -> None:
        for u in sources:
            for v in targets:
                self.arc(u, v)

    def place(self, block: list[int], sub: Tournament) -> None:
        for i, j in sub.arcs():
            self.arc(block[i], block[j])

    def build(self) -> Tournament:
        return Tournament(len(self.rows), tuple(self.rows))


def _block_tournament(size: int, block_seed: int | None, slot: int) -> Tournament:
    if size == 1:
        return Tournament(1, (0,))
    n = (size - 1) // 2
    if block_seed is None:
        return rotational_regular(n)
    return random_regular(n, SamplerConfig(), rng=instance_rng(block_seed, slot))


@dataclass(frozen=True)
class GParams:
    k: int
    block_seed: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise TournamentError(f"k must be at least 1, got {self.k}")

    @property
    def order(self) -> int:
        return 6 * self.k + 3


def build_G(params: GParams | int) -> LabeledTournament:
    """A member of the family G of order ``6k + 3``.

    Layout: ``x, y, z``, then blocks ``A`` (2k-1), ``B`` (k+2), ``C`` (2k-1),
    ``S`` (k). Regular pieces on ``A``, ``C`` and ``{z} | B | S`` are
    rotational unless ``block_seed`` asks for seeded random regular ones.
    """
    if isinstance(params, int):
        params = GParams(params)
    k = params.k
    sizes = {"A": 2 * k - 1, "B": k + 2, "C": 2 * k - 1, "S": k}
    names = ["x", "y", "z"]
    blocks: dict[str, list[int]] = {}
    for name, size in sizes.items():
        blocks[name] = list(range(len(names), len(names) + size))
        names += [f"{name.lower()}{i}" for i in range(1, size + 1)]
    b = _Builder(names)
    x, y, z = b.ids("x", "y", "z")
    A, B, C, S = (blocks[n] for n in "ABCS")

    b.dominate(A, B + S)
    b.dominate(B + S, C)
    b.dominate(C, A)
    b.dominate(C, [z])
    b.dominate([z], A)
    b.dominate([x], [y, z] + A + S)
    b.dominate([x, z] + C + S, [y])
    b.dominate([y], A + B)
    b.dominate(B + C, [x])
    seed = params.block_seed
    b.place(A, _block_tournament(len(A), seed, 0))
    b.place(C, _block_tournament(len(C), seed, 1))
    b.place([z] + B + S, _block_tournament(2 * k + 3, seed, 2))

    roles = {"x": (x,), "y": (y,), "z": (z,)}
    roles.update({n: tuple(blocks[n]) for n in "ABCS"})
    return LabeledTournament(b.build(), roles)


def remark3_T11() -> LabeledTournament:
    """The order-11 regular tournament given by in-neighbourhood lists."""
    names = ["x0", "x1", "x2", "x3", "u1", "u2", "u3", "u4", "z", "v1", "v2"]
    in_lists = {
        "x0": "u1 u2 u3 u4 z",
        "x1": "x0 z u3 u4 v2",
        "x2": "x0 x1 z u3 u4",
        "x3": "x0 x1 x2 v1 v2",
        "z": "x3 u1 u2 u3 u4",
        "u1": "x1 x2 x3 u4 v2",
        "u2": "x1 x2 x3 u1 v1",
        "u3": "x3 u1 u2 v1 v2",
        "u4": "x3 u2 u3 v1 v2",
        "v1": "x0 x1 x2 z u1",
        "v2": "x0 x2 z v1 u2",
    }
    idx = {n: i for i, n in enumerate(names)}
    arcs = [(idx[u], idx[v]) for v, ins in in_lists.items() for u in ins.split()]
    t = build_tournament(len(names), arcs)
    roles = {n: (i,) for n, i in idx.items()}
    groups = {"A": ("u1", "u2", "u3", "u4", "z"), "S": ("v1", "v2")}
    return LabeledTournament(t, roles, groups)


def remark4_H9() -> LabeledTournament:
    """The order-9 tournament showing the extension theorem fails at n = 4."""
    names = ["x", "y", "u", "v", "z", "a1", "a2", "b1", "b2"]
    b = _Builder(names)
    x, y, u, v, z = b.ids("x", "y", "u", "v", "z")
    A, B = b.ids("a1", "a2"), b.ids("b1", "b2")
    b.dominate([x], [u, v, z])
    b.dominate([u, v, z], [y])
    b.dominate(B, [u, v])
    b.dominate([u, v], A)
    b.dominate([y], A + B)
    b.dominate(A + B, [x])
    b.dominate(A, [z])
    b.dominate([z], B)
    b.arcs("x>y u>v v>z z>u a1>a2 b1>b2 a1>b1 a2>b2 b2>a1 a2>b1")
    roles = {n: (i,) for n, i in b.index.items()}
    groups = {"A": ("a1", "a2"), "B": ("b1", "b2")}
    return LabeledTournament(b.build(), roles, groups)


LEMMA32_VARIANTS = (7, 9, 11, 15)


def lemma32_counterexample(
    variant: int,
    block_seed: int | None = None,
    forward_cycles: tuple[bool, bool] = (True, True),
) -> LabeledTournament:
    """Regular tournaments where ``T - S`` lacks (x, y)-paths of lengths 3 and 4.

    Variants 7 and 9 sit below the lemma's ``n >= 5`` hypothesis; 11 and 15
    exceed its ``|S| <= n/2`` bound by one half. ``forward_cycles`` picks the
    orientation of the two 3-vertex blocks of variant 15.
    """
    if variant in (7, 9):
        ks, kb = (1, 3) if variant == 7 else (2, 4)
        return _xyz_block_example(variant, "B", kb, ks, block_seed)
    if variant == 11:
        return _xyz_block_example(11, "A", 5, 3, block_seed)
    if variant == 15:
        return _variant15(forward_cycles)
    raise InvalidVariant(f"variant must be one of {LEMMA32_VARIANTS}, got {variant}")


def _xyz_block_example(order: int, other: str, n_other: int, n_s: int, block_seed: int | None) -> LabeledTournament:
    names = ["x", "y", "z"]
    names += [f"{other.lower()}{i}" for i in range(1, n_other + 1)]
    names += [f"s{i}" for i in range(1, n_s + 1)]
    b = _Builder(names)
    x, y, z = b.ids("x", "y", "z")
    O = list(range(3, 3 + n_other))
    S = list(range(3 + n_other, order))
    b.arcs("x>y x>z z>y")
    b.dominate([x], S)
    b.dominate(S, [y])
    b.dominate([y], O)
    b.dominate(O, [x])
    b.place([z] + O + S, _block_tournament(1 + n_other + n_s, block_seed, 0))
    roles = {"x": (x,), "y": (y,), "z": (z,), other: tuple(O), "S": tuple(S)}
    return LabeledTournament(b.build(), roles)


def _variant15(forward_cycles: tuple[bool, bool]) -> LabeledTournament:
    names = ["x", "y", "z", "u", "v", "A1", "A2", "A3", "B1", "B2", "B3", "a1", "a2", "b1", "b2"]
    b = _Builder(names)
    x, y, z, u, v = b.ids("x", "y", "z", "u", "v")
    A, B = b.ids("A1", "A2", "A3"), b.ids("B1", "B2", "B3")
    a12, b12 = b.ids("a1", "a2"), b.ids("b1", "b2")
    S = a12 + b12
    b.arcs("x>y x>z z>y x>u v>y v>u v>z z>u a1>a2 b1>b2 a2>b2 a2>b1 a1>b1 b2>a1")
    b.dominate([x], S)
    b.dominate(S, [y])
    b.dominate([y, z, u, v], A)
    b.dominate(B, [x, u, v, z])
    b.dominate([y], [u] + B)
    b.dominate(A, [x] + B)
    b.dominate([v], [x] + A)
    b.dominate(S, [v])
    b.dominate([u], A + S)
    b.dominate(b12, A)
    b.dominate(A, a12)
    b.dominate(a12, B)
    b.dominate(B, b12)
    b.dominate(b12, [z])
    b.dominate([z], a12)
    for block, forward in zip((A, B), forward_cycles):
        cyc = block if forward else block[::-1]
        for i in range(3):
            b.arc(cyc[i], cyc[(i + 1) % 3])
    roles = {n: (b.index[n],) for n in ("x", "y", "z", "u", "v", "a1", "a2", "b1", "b2")}
    roles.update({"A": tuple(A), "B": tuple(B)})
    return LabeledTournament(b.build(), roles, {"S": ("a1", "a2", "b1", "b2")})


def _is_regular_on(t: Tournament, mask: int) -> bool:
    vs = list(bits(mask))
    return degree_summary(induced(t, vs)).is_regular if len(vs) > 1 else True


def _xy_partition(t: Tournament, x: int, y: int, removed: int):
    rest = t.vertex_mask & ~removed & ~(1 << x) & ~(1 << y)
    ox, oy = t.out_sets[x], t.out_sets[y]
    A = rest & ox & oy
    B = rest & ~ox & oy
    C = rest & ~ox & ~oy
    R = rest & ox & ~oy
    return A, B, C, R


def g_roles(t: Tournament, x: int, y: int, removed) -> LabeledTournament | None:
    """Roles exhibiting ``t`` as a member of G with the given ``x``, ``y`` and ``S``.

    The dominance pattern pins every block once ``x``, ``y`` and ``S`` are known:
    ``A = N+(x) & N+(y)``, ``B = N-(x) & N+(y)``, ``C = N-(x) & N-(y)`` and
    ``{z} = N+(x) & N-(y)`` outside ``S``. Returns ``None`` on any mismatch.
    """
    S = to_mask(removed)
    k = S.bit_count()
    if k < 1 or t.order != 6 * k + 3 or not degree_summary(t).is_regular:
        return None
    if not t.has_arc(x, y):
        return None
    A, B, C, R = _xy_partition(t, x, y, S)
    if R.bit_count() != 1:
        return None
    if A.bit_count() != 2 * k - 1 or C.bit_count() != 2 * k - 1 or B.bit_count() != k + 2:
        return None
    X, Y, Z = 1 << x, 1 << y, R
    d = t.dominates
    ok = (
        d(A, B | S) and d(B | S, C) and d(C, A) and d(C, Z) and d(Z, A)
        and d(X, Y | Z | A | S) and d(X | Z | C | S, Y) and d(Y, A | B) and d(B | C, X)
        and _is_regular_on(t, A) and _is_regular_on(t, C) and _is_regular_on(t, Z | B | S)
    )
    if not ok:
        return None
    roles = {"x": (x,), "y": (y,), "z": tuple(bits(Z))}
    roles.update({n: tuple(bits(m)) for n, m in zip("ABCS", (A, B, C, S))})
    return LabeledTournament(t, roles)


def g_minus_s_roles(t: Tournament, x: int, y: int) -> LabeledTournament | None:
    """Roles exhibiting ``t`` as ``G - S`` for some ``G`` in G.

    Besides the dominance pattern and the regular blocks ``A`` and ``C``, the
    piece on ``{z} | B`` must extend to a regular tournament by ``k`` new
    vertices; that is decided exactly by a degree-constrained orientation.
    """
    A, B, C, R = _xy_partition(t, x, y, 0)
    k = B.bit_count() - 2
    if k < 1 or t.order != 5 * k + 3 or R.bit_count() != 1 or not t.has_arc(x, y):
        return None
    if A.bit_count() != 2 * k - 1 or C.bit_count() != 2 * k - 1:
        return None
    X, Y, Z = 1 << x, 1 << y, R
    d = t.dominates
    ok = (
        d(A, B) and d(B, C) and d(C, A) and d(C, Z) and d(Z, A)
        and d(X, Y | Z | A) and d(X | Z | C, Y) and d(Y, A | B) and d(B | C, X)
        and _is_regular_on(t, A) and _is_regular_on(t, C)
    )
    if not ok:
        return None
    block = list(bits(Z | B))
    sub = induced(t, block)
    size = 2 * k + 3
    fixed = list(sub.out_sets) + [0] * k
    free = [(i, j) for i, j in combinations(range(size), 2) if j >= len(block)]
    if orient_to_scores(size, fixed, free, [k + 1] * size) is None:
        return None
    roles = {"x": (x,), "y": (y,), "z": tuple(bits(Z))}
    roles.update({n: tuple(bits(m)) for n, m in zip("ABC", (A, B, C))})
    return LabeledTournament(t, roles)
