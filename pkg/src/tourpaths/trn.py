"""Reading and writing the ``.trn`` text format.

::

    tournament 3
    -10
    0-1
    10-
    role x 0
    role B 1 2
    group XB x B

Row ``i`` has ``1`` in column ``j`` iff ``i -> j`` and ``-`` on the diagonal.
Whitespace between tokens (and between row characters) is ignored.
"""

from __future__ import annotations

from .core import LabeledTournament, Tournament
from .errors import DuplicatePair, MissingPair, ParseError


def serialize(obj: Tournament | LabeledTournament) -> str:
    if isinstance(obj, LabeledTournament):
        t, roles, groups = obj.tournament, obj.roles, obj.groups
    else:
        t, roles, groups = obj, {}, {}
    lines = [f"tournament {t.order}"]
    for i, row in enumerate(t.out_sets):
        lines.append("".join("-" if j == i else str(row >> j & 1) for j in range(t.order)))
    for name, vs in roles.items():
        lines.append(" ".join(["role", name, *map(str, vs)]))
    for name, members in groups.items():
        lines.append(" ".join(["group", name, *members]))
    return "\n".join(lines) + "\n"


def _tokens(line: str) -> list[str]:
    return line.split()


def parse(text: str) -> LabeledTournament:
    lines = [(no, raw) for no, raw in enumerate(text.splitlines(), start=1) if raw.strip()]
    if not lines:
        raise ParseError("empty input", 1)
    no, header = lines[0]
    toks = _tokens(header)
    if len(toks) != 2 or toks[0] != "tournament":
        raise ParseError("expected 'tournament <order>'", no)
    try:
        p = int(toks[1])
    except ValueError:
        raise ParseError(f"order {toks[1]!r} is not an integer", no, header.index(toks[1]) + 1)
    if p < 1:
        raise ParseError("order must be positive", no)
    if len(lines) < p + 1:
        raise ParseError(f"expected {p} matrix rows", lines[-1][0] + 1)

    matrix: list[str] = []
    for i in range(p):
        no, raw = lines[1 + i]
        row = "".join(raw.split())
        if len(row) != p:
            raise ParseError(f"row {i} has {len(row)} entries, expected {p}", no)
        for j, ch in enumerate(row):
            col = _column_of(raw, j)
            if j == i and ch != "-":
                raise ParseError(f"diagonal entry must be '-', got {ch!r}", no, col)
            if j != i and ch not in "01":
                raise ParseError(f"entry must be 0 or 1, got {ch!r}", no, col)
        matrix.append(row)

    for i in range(p):
        for j in range(i + 1, p):
            a, b = matrix[i][j], matrix[j][i]
            if a == b == "1":
                raise DuplicatePair(f"pair ({i}, {j}) is oriented both ways")
            if a == b == "0":
                raise MissingPair(f"pair ({i}, {j}) has no arc")

    rows = tuple(sum(1 << j for j, ch in enumerate(r) if ch == "1") for r in matrix)
    roles: dict[str, tuple[int, ...]] = {}
    groups: dict[str, tuple[str, ...]] = {}
    for no, raw in lines[1 + p:]:
        toks = _tokens(raw)
        if toks[0] == "role" and len(toks) >= 3:
            try:
                roles[toks[1]] = tuple(int(tok) for tok in toks[2:])
            except ValueError:
                raise ParseError("role indices must be integers", no)
            bad = [v for v in roles[toks[1]] if not 0 <= v < p]
            if bad:
                raise ParseError(f"role vertex {bad[0]} out of range", no)
        elif toks[0] == "group" and len(toks) >= 3:
            groups[toks[1]] = tuple(toks[2:])
        else:
            raise ParseError(f"unexpected line {raw.strip()!r}", no)
    return LabeledTournament(Tournament(p, rows), roles, groups)


def _column_of(raw: str, index: int) -> int:
    # 1-based column of the index-th non-whitespace character
    seen = -1
    for col, ch in enumerate(raw, start=1):
        if not ch.isspace():
            seen += 1
            if seen == index:
                return col
    return len(raw)
