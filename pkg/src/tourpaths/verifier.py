"""Verification campaigns producing streams of report records.

Every record carries a descriptor from which ``rebuild`` reconstructs the exact
instance, so a failure can be replayed from its report line alone. Records are
emitted in instance order whatever the thread count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator

import numpy as np

from .constructions import (
    GParams,
    build_G,
    g_minus_s_roles,
    g_roles,
    lemma32_counterexample,
    remark3_T11,
    remark4_H9,
)
from .core import Tournament, converse, degree_summary, induced, induced_minus
from .errors import PreconditionViolated
from .generators import SamplerConfig, instance_rng, random_regular, semidegree_window_sample
from .lemmas import (
    Configuration,
    lemma32_check,
    lemma33_property,
    lemma34_property,
    sample_configuration,
)
from .spectrum import (
    extension_gaps,
    is_d_arc_pancyclic,
    is_d_strongly_panconnected,
    path_spectrum,
    range_mask,
    spectrum_matrix,
    witness_path,
)

SCHEMA = {"schema": "tourpaths.report", "version": 1}
VERDICTS = ("pass", "fail", "vacuous", "precondition-skip")


@dataclass
class VerificationReport:
    claim_id: str
    instance: dict
    verdict: str
    witness: Any = None
    wall_time: float = 0.0
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> VerificationReport:
        return cls(**json.loads(line))


def write_report(records: Iterable[VerificationReport], fh) -> int:
    """Header line plus one record per line; returns the number of fail records."""
    fh.write(json.dumps(SCHEMA, sort_keys=True) + "\n")
    fails = 0
    for rec in records:
        fh.write(rec.to_json() + "\n")
        fails += rec.verdict == "fail"
    return fails


def read_report(lines: Iterable[str]) -> list[VerificationReport]:
    it = iter(lines)
    header = json.loads(next(it))
    if header.get("schema") != SCHEMA["schema"]:
        raise ValueError(f"not a report stream: {header}")
    return [VerificationReport.from_json(line) for line in it if line.strip()]


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 0
    count: int = 50
    threads: int = 1
    mix_steps: int | None = None

    def sampler(self) -> SamplerConfig:
        return SamplerConfig(seed=self.seed, mix_steps=self.mix_steps)


def _ordered(fn: Callable[[Any], list[VerificationReport]], items: Iterable, threads: int) -> Iterator[VerificationReport]:
    items = list(items)
    if threads <= 1:
        for item in items:
            yield from fn(item)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for batch in pool.map(fn, items):
            yield from batch


def summarize(records: Iterable[VerificationReport]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for rec in records:
        counts = out.setdefault(rec.claim_id, dict.fromkeys(VERDICTS, 0))
        counts[rec.verdict] += 1
    return out


# -- instance reconstruction -------------------------------------------------

FIXTURES: dict[str, Callable[..., Any]] = {
    "remark3": lambda d: remark3_T11(),
    "remark4": lambda d: remark4_H9(),
    "G": lambda d: build_G(GParams(d["k"], d.get("block_seed"))),
    "lemma32": lambda d: lemma32_counterexample(
        d["variant"], d.get("block_seed"), tuple(d.get("forward_cycles", (True, True)))
    ),
}


def rebuild(desc: dict) -> Tournament | Configuration:
    """Reconstruct the instance a record's descriptor names."""
    kind = desc["kind"]
    if kind == "random_regular":
        cfg = SamplerConfig(seed=desc["seed"], mix_steps=desc.get("mix_steps"))
        rng = instance_rng(desc["seed"], *desc["keys"])
        return random_regular(desc["n"], cfg, rng=rng)
    if kind == "window":
        cfg = SamplerConfig(seed=desc["seed"], mix_steps=desc.get("mix_steps"))
        rng = instance_rng(desc["seed"], *desc["keys"])
        return semidegree_window_sample(desc["p"], desc["lo"], desc["hi"], cfg, rng=rng)
    if kind == "fixture":
        lt = FIXTURES[desc["name"]](desc)
        if desc.get("minus"):
            return lt.minus(desc["minus"])[0]
        return lt.tournament
    if kind == "configuration":
        c, _ = sample_configuration(instance_rng(desc["seed"], *desc["keys"]))
        return c
    raise ValueError(f"unknown instance kind {kind!r}")


def _pairs(vertices) -> list[tuple[int, int]]:
    return [pq for a, b in combinations(vertices, 2) for pq in ((a, b), (b, a))]


# -- extension theorem --------------------------------------------------------

def s_sizes(n: int, rule: str) -> list[int]:
    if rule == "paper":
        return list(range(0, (n - 2) // 2 + 1))
    if rule == "boundary":
        return [n // 2]  # ceil((n - 1) / 2)
    raise ValueError(f"rule must be 'paper' or 'boundary', got {rule!r}")


def extension_records(t: Tournament, desc: dict, rule: str, claim: str = "thm1.5") -> list[VerificationReport]:
    """One record per (S, ordered pair) for every S allowed by ``rule``."""
    n = (t.order - 1) // 2
    records = []
    for size in s_sizes(n, rule):
        for S in combinations(range(t.order), size):
            start = time.perf_counter()
            sub, kept = induced_minus(t, S)
            m = spectrum_matrix(sub)
            hi = 2 * n - size - 1
            elapsed = time.perf_counter() - start
            for i, j in _pairs(range(sub.order)):
                mask = int(m[i, j])
                x, y = kept[i], kept[j]
                inst = {**desc, "S": list(S), "pair": [x, y]}
                gaps = extension_gaps(mask, 3, hi)
                if gaps:
                    r = gaps[0]
                    path = [kept[v] for v in witness_path(sub, i, j, r)]
                    records.append(VerificationReport(
                        claim, inst, "fail", {"x": x, "y": y, "r": r, "missing": r + 1, "path": path, "gaps": gaps},
                        elapsed, "sharpness" if rule == "boundary" else "",
                    ))
                elif mask & range_mask(3, hi):
                    records.append(VerificationReport(claim, inst, "pass", None, elapsed))
                else:
                    records.append(VerificationReport(claim, inst, "vacuous", None, elapsed))
    return records


def run_theorem15_campaign(
    orders: Iterable[int],
    rule: str = "paper",
    config: CampaignConfig = CampaignConfig(),
    fixtures: Iterable[str] = (),
) -> Iterator[VerificationReport]:
    """Extension property of ``T - S`` over sampled regular ``T``.

    ``rule="paper"`` takes every ``S`` with ``|S| <= (n-2)/2``; ``"boundary"``
    takes every ``S`` of size ``ceil((n-1)/2)`` and marks failures as sharpness
    witnesses. Named fixtures (``"remark3"``) are appended after the samples.
    """
    orders = list(orders)
    for p in orders:
        if p % 2 == 0 or not 11 <= p <= 21:
            raise ValueError(f"orders must be odd and in [11, 21], got {p}")

    def one(job):
        p, index = job
        n = (p - 1) // 2
        desc = {"kind": "random_regular", "n": n, "seed": config.seed, "keys": [p, index], "mix_steps": config.mix_steps}
        return extension_records(rebuild(desc), desc, rule)

    yield from _ordered(one, [(p, i) for p in orders for i in range(config.count)], config.threads)
    for name in fixtures:
        desc = {"kind": "fixture", "name": name}
        yield from extension_records(rebuild(desc), desc, rule)


# -- length 3 / 4 lemma -------------------------------------------------------

def _lemma32_records(t: Tournament, desc: dict, S, part: str, pairs=None) -> list[VerificationReport]:
    records = []
    S = sorted(S)
    vertices = [v for v in range(t.order) if v not in S]
    matrix = spectrum_matrix(induced_minus(t, S)[0])
    for x, y in pairs or _pairs(vertices):
        inst = {**desc, "S": S, "pair": [x, y], "part": part}
        start = time.perf_counter()
        try:
            out = lemma32_check(t, S, x, y, part, matrix)
        except PreconditionViolated as exc:
            records.append(VerificationReport(f"lem3.2.{part}", inst, "precondition-skip", None,
                                              time.perf_counter() - start, str(exc)))
            continue
        witness: dict[str, Any] = {"has3": out.has3, "has4": out.has4}
        note = ""
        if out.g_flag:
            witness["g_roles"] = {k: list(v) for k, v in out.g_roles.roles.items()}
            note = "G-flag"
        verdict = "pass" if out.holds else "fail"
        records.append(VerificationReport(f"lem3.2.{part}", inst, verdict, witness,
                                          time.perf_counter() - start, note))
    return records


def _random_subset(rng: np.random.Generator, p: int, size: int) -> list[int]:
    return sorted(rng.choice(p, size=size, replace=False).tolist())


def run_lemma32_campaign(config: CampaignConfig = CampaignConfig(count=500), with_fixtures: bool = True) -> Iterator[VerificationReport]:
    """Random regular instances at ``n`` in ``[5, 7]`` for both parts, then the
    G members and the boundary counterexamples."""

    def one(index):
        n = 5 + index % 3
        desc = {"kind": "random_regular", "n": n, "seed": config.seed, "keys": [2 * n + 1, index], "mix_steps": config.mix_steps}
        t = rebuild(desc)
        rng = instance_rng(config.seed, 2 * n + 1, index, 1)
        S2 = _random_subset(rng, t.order, int(rng.integers(0, n // 2 + 1)))
        S1 = _random_subset(rng, t.order, int(rng.integers(0, (n - 1) // 3 + 1)))
        return _lemma32_records(t, desc, S2, "ii") + _lemma32_records(t, desc, S1, "i")

    yield from _ordered(one, range(config.count), config.threads)
    if not with_fixtures:
        return
    for k in (1, 2):
        g = build_G(k)
        desc = {"kind": "fixture", "name": "G", "k": k}
        yield from _lemma32_records(g.tournament, desc, g["S"], "i")
    for variant in (7, 9, 11, 15):
        lt = lemma32_counterexample(variant)
        desc = {"kind": "fixture", "name": "lemma32", "variant": variant}
        pair = [(lt.vertex("x"), lt.vertex("y"))]
        yield from _lemma32_records(lt.tournament, desc, lt["S"], "ii", pair)


# -- semidegree windows -------------------------------------------------------

def semidegree_windows(p: int) -> dict[str, tuple[int, int]]:
    """Integer semidegree windows for the 4-strong and the 3-strong-or-G claims."""
    return {
        "four": (-(-(p + 1) // 3), (2 * (p - 2)) // 3),
        "three": (-(-(2 * p - 1) // 5), (3 * p - 4) // 5),
    }


def theorem16_records(t: Tournament, desc: dict) -> list[VerificationReport]:
    p = t.order
    m = degree_summary(t).irregularity
    inst = {**desc, "p": p, "m": m}
    start = time.perf_counter()
    matrix = spectrum_matrix(t)
    records = []
    if p + m >= 11 and 3 * m <= p - 5:
        res = is_d_strongly_panconnected(t, 4, matrix)
        records.append(VerificationReport("thm1.6.4", inst, "pass" if res.ok else "fail",
                                          None if res.ok else list(res.failure), time.perf_counter() - start))
    if p + m >= 11 and 5 * m <= p - 3:
        res = is_d_strongly_panconnected(t, 3, matrix)
        if res.ok:
            records.append(VerificationReport("thm1.6.3", inst, "pass", None, time.perf_counter() - start))
        else:
            roles = _find_g_minus_s(t, matrix, res.failure)
            verdict = "pass" if roles is not None else "fail"
            witness = {"failure": list(res.failure), "g_roles": roles}
            records.append(VerificationReport("thm1.6.3", inst, verdict, witness,
                                              time.perf_counter() - start, "G-flag" if roles else ""))
    return records


def _find_g_minus_s(t: Tournament, matrix, first_failure) -> dict | None:
    x0, y0, _ = first_failure
    candidates = [(x0, y0)] + [(x, y) for x, y in _pairs(range(t.order)) if not int(matrix[x, y]) >> 3 & 1]
    for x, y in candidates:
        lt = g_minus_s_roles(t, x, y)
        if lt is not None:
            return {k: list(v) for k, v in lt.roles.items()}
    return None


def run_theorem16_campaign(
    config: CampaignConfig = CampaignConfig(count=100),
    orders: Iterable[int] = (11, 13),
    with_fixtures: bool = True,
) -> Iterator[VerificationReport]:
    """Sample each order inside both semidegree windows and check the claims
    that the sampled irregularity makes applicable."""
    jobs = []
    for p in orders:
        for w, (lo, hi) in semidegree_windows(p).items():
            jobs += [(p, w, lo, hi, i) for i in range(config.count)]

    def one(job):
        p, w, lo, hi, index = job
        desc = {"kind": "window", "window": w, "p": p, "lo": lo, "hi": hi, "seed": config.seed,
                "keys": [p, lo, hi, index], "mix_steps": config.mix_steps}
        return theorem16_records(rebuild(desc), desc)

    yield from _ordered(one, jobs, config.threads)
    if not with_fixtures:
        return
    for k in (1, 2):
        desc = {"kind": "fixture", "name": "G", "k": k, "minus": "S"}
        t = rebuild(desc)
        p, m = t.order, degree_summary(t).irregularity
        res = is_d_strongly_panconnected(t, 3)
        exhibit = 5 * m == p - 3 and not res.ok
        yield VerificationReport("thm1.6.sharpness", {**desc, "p": p, "m": m},
                                 "pass" if exhibit else "fail", list(res.failure) if res.failure else None)
        yield from theorem16_records(t, desc)


# -- fixtures -----------------------------------------------------------------

def _check(claim: str, desc: dict, ok: bool, witness: Any = None, note: str = "", start: float | None = None) -> VerificationReport:
    elapsed = 0.0 if start is None else time.perf_counter() - start
    return VerificationReport(claim, desc, "pass" if ok else "fail", witness, elapsed, note)


def _pair_spectrum(lt, minus: str | Iterable[int], x: str, y: str) -> tuple[Tournament, int, int, frozenset[int]]:
    removed = lt[minus] if isinstance(minus, str) else tuple(minus)
    sub, kept = induced_minus(lt.tournament, removed)
    i, j = kept.index(lt.vertex(x)), kept.index(lt.vertex(y))
    return sub, i, j, path_spectrum(sub, i, j).lengths


def _block_regular(t: Tournament, vs) -> bool:
    return len(vs) < 2 or degree_summary(induced(t, list(vs))).is_regular


def g_family_record(k: int, block_seed: int | None = None) -> VerificationReport:
    start = time.perf_counter()
    g = build_G(GParams(k, block_seed))
    t = g.tournament
    s = degree_summary(t)
    blocks_ok = all(_block_regular(t, g[b]) for b in ("A", "C")) and _block_regular(t, g["z"] + g["B"] + g["S"])
    _, _, _, lens = _pair_spectrum(g, "S", "x", "y")
    ok = s.is_regular and set(s.out_degrees) == {3 * k + 1} and blocks_ok and 3 not in lens
    desc = {"kind": "fixture", "name": "G", "k": k, "block_seed": block_seed}
    witness = {"semidegree": s.out_degrees[0], "blocks_regular": blocks_ok, "spectrum": sorted(lens)}
    return _check("G-family", desc, ok, witness, start=start)


def run_paper_examples(block_seeds: Iterable[int] = range(20)) -> Iterator[VerificationReport]:
    """Every explicit claim about the named fixture tournaments; seed-free
    apart from the fixed list of block seeds for the family G."""
    start = time.perf_counter()
    r3 = remark3_T11()
    desc = {"kind": "fixture", "name": "remark3", "S": list(r3["S"])}
    sub, i, j, lens = _pair_spectrum(r3, "S", "x0", "x3")
    path = witness_path(sub, i, j, 3)
    kept = induced_minus(r3.tournament, r3["S"])[1]
    yield _check("remark3", desc, degree_summary(r3.tournament).is_regular and 3 in lens and 4 not in lens,
                 {"path3": [kept[v] for v in path] if path else None, "spectrum": sorted(lens)}, start=start)

    start = time.perf_counter()
    h = remark4_H9()
    desc = {"kind": "fixture", "name": "remark4", "S": list(h["z"])}
    sub, i, j, lens = _pair_spectrum(h, "z", "x", "y")
    path = witness_path(sub, i, j, 3)
    kept = induced_minus(h.tournament, h["z"])[1]
    regular = degree_summary(h.tournament).is_regular
    yield _check("remark4", desc, 3 in lens and 4 not in lens,
                 {"path3": [kept[v] for v in path] if path else None, "spectrum": sorted(lens), "regular": regular},
                 note="H9 is regular" if regular else "H9 is not regular", start=start)

    for k in (1, 2, 3):
        yield g_family_record(k)
    for k in (1, 2):
        for seed in block_seeds:
            yield g_family_record(k, seed)

    for k in (1, 2):
        g = build_G(k)
        sub, i, j, lens = _pair_spectrum(g, "S", "x", "y")
        dual = path_spectrum(converse(sub), j, i).lengths
        yield _check("G-family.duality", {"kind": "fixture", "name": "G", "k": k, "minus": "S"}, dual == lens)
        lt = g_roles(g.tournament, g.vertex("x"), g.vertex("y"), g["S"])
        yield _check("G-family.detect", {"kind": "fixture", "name": "G", "k": k}, lt is not None)

    for variant in (7, 9, 11, 15):
        combos = [(True, True)] if variant != 15 else [(a, b) for a in (True, False) for b in (True, False)]
        for fc in combos:
            start = time.perf_counter()
            lt = lemma32_counterexample(variant, forward_cycles=fc)
            _, _, _, lens = _pair_spectrum(lt, "S", "x", "y")
            regular = degree_summary(lt.tournament).is_regular
            if variant in (7, 9):
                ok = not lens & {3, 4}
            elif variant == 11:
                ok = lens <= {1, 2}
            else:
                ok = not lens & {3, 4} and {k for k in lens if k > 2} == set(range(5, 11))
            desc = {"kind": "fixture", "name": "lemma32", "variant": variant, "forward_cycles": list(fc)}
            yield _check(f"lem3.2.example.{variant}", desc, ok and regular, {"spectrum": sorted(lens)}, start=start)


# -- configuration lemmas -----------------------------------------------------

def run_lemma_properties_campaign(config: CampaignConfig = CampaignConfig(count=500), max_attempts: int | None = None) -> Iterator[VerificationReport]:
    """Sample until ``config.count`` conforming configurations have been checked.

    Nonconforming samples yield ``precondition-skip`` records; the stream stops
    right after the first failure, whose witness is the full configuration.
    """
    budget = max_attempts if max_attempts is not None else 2000 * config.count
    conforming = 0
    index = 0
    while conforming < config.count and index < budget:
        desc = {"kind": "configuration", "seed": config.seed, "keys": [index]}
        start = time.perf_counter()
        c, why = sample_configuration(instance_rng(config.seed, index))
        index += 1
        if why:
            yield VerificationReport("lem3.3-3.4", desc, "precondition-skip", None, time.perf_counter() - start, why)
            continue
        conforming += 1
        for claim, check in (("lem3.3", lemma33_property), ("lem3.4", lemma34_property)):
            res = check(c, check=False)
            if not res.holds:
                yield VerificationReport(claim, desc, "fail", {"violation": list(res.violation), "configuration": c.as_dict()},
                                         time.perf_counter() - start)
                return
            yield VerificationReport(claim, desc, "vacuous" if res.vacuous else "pass", None, time.perf_counter() - start)


# -- classical cross-checks ---------------------------------------------------

def run_classical_campaign(config: CampaignConfig = CampaignConfig(count=50), orders: Iterable[int] = (11, 13)) -> Iterator[VerificationReport]:
    """Regular tournaments are arc pancyclic and strongly panconnected."""
    orders = list(orders)

    def one(index):
        p = orders[index % len(orders)]
        desc = {"kind": "random_regular", "n": (p - 1) // 2, "seed": config.seed, "keys": [p, index, 7], "mix_steps": config.mix_steps}
        t = rebuild(desc)
        start = time.perf_counter()
        arc = is_d_arc_pancyclic(t, 3)
        pan = is_d_strongly_panconnected(t, 3)
        elapsed = time.perf_counter() - start
        return [
            VerificationReport("arc-pancyclic", desc, "pass" if arc.ok else "fail", arc.failure, elapsed),
            VerificationReport("strongly-panconnected", desc, "pass" if pan.ok else "fail", pan.failure, elapsed),
        ]

    yield from _ordered(one, range(config.count), config.threads)
