"""Command line entry point: ``tourpaths {gen,build,spectrum,check,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from . import constructions, generators, verifier
from .core import LabeledTournament
from .spectrum import is_d_arc_pancyclic, is_d_strongly_panconnected, path_spectrum, witness_path
from .trn import parse, serialize


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _read(path: str) -> LabeledTournament:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse(text)


def _vertex(lt: LabeledTournament, token: str) -> int:
    return int(token) if token.lstrip("-").isdigit() else lt.vertex(token)


def _emit_trn(args, obj) -> int:
    with _output(args.out) as fh:
        fh.write(serialize(obj))
    return 0


def cmd_gen(args) -> int:
    if args.kind == "rotational":
        return _emit_trn(args, generators.rotational_regular(args.n))
    if args.kind == "random-regular":
        cfg = generators.SamplerConfig(seed=args.seed, mix_steps=args.mix)
        return _emit_trn(args, generators.random_regular(args.n, cfg))
    h = _read(args.input).tournament
    emb = generators.moon_embed(h)
    roles = {"H": emb.host_of}
    if emb.added:
        roles["added"] = emb.added
    return _emit_trn(args, LabeledTournament(emb.tournament, roles))


def cmd_build(args) -> int:
    if args.what == "G":
        lt = constructions.build_G(constructions.GParams(args.k, args.block_seed))
    elif args.what == "remark3":
        lt = constructions.remark3_T11()
    elif args.what == "remark4":
        lt = constructions.remark4_H9()
    else:
        lt = constructions.lemma32_counterexample(args.variant)
    return _emit_trn(args, lt)


def cmd_spectrum(args) -> int:
    lt = _read(args.input)
    x, y = _vertex(lt, args.source), _vertex(lt, args.target)
    spec = path_spectrum(lt.tournament, x, y)
    lengths = sorted(spec.lengths)
    with _output(args.out) as fh:
        if args.json:
            witnesses = {k: witness_path(lt.tournament, x, y, k) for k in lengths}
            json.dump({"source": x, "target": y, "lengths": lengths, "witnesses": witnesses}, fh)
            fh.write("\n")
        else:
            fh.write(f"({x},{y})-path lengths: {' '.join(map(str, lengths)) or '(none)'}\n")
    return 0


def cmd_check(args) -> int:
    t = _read(args.input).tournament
    if args.prop == "pancyclic":
        res = is_d_arc_pancyclic(t, args.d)
        label = f"{args.d}-arc pancyclic"
    else:
        res = is_d_strongly_panconnected(t, args.d)
        label = f"{args.d}-strongly panconnected"
    with _output(args.out) as fh:
        if args.json:
            json.dump({"property": label, "holds": res.ok, "failure": res.failure}, fh)
            fh.write("\n")
        else:
            fh.write(f"{label}: {'yes' if res.ok else 'no'}")
            fh.write(f" (first failure {res.failure})\n" if res.failure else "\n")
    return 0 if res.ok else 1


def _campaign(args):
    cfg = verifier.CampaignConfig(seed=args.seed, count=args.count, threads=args.threads)
    if args.campaign == "paper-examples":
        return verifier.run_paper_examples()
    if args.campaign == "thm15":
        orders = [int(o) for o in args.orders.split(",")]
        fixtures = ["remark3"] if args.rule == "boundary" and 11 in orders else []
        return verifier.run_theorem15_campaign(orders, args.rule, cfg, fixtures)
    if args.campaign == "lem32":
        return verifier.run_lemma32_campaign(cfg)
    if args.campaign == "thm16":
        return verifier.run_theorem16_campaign(cfg)
    if args.campaign == "lemmas33-34":
        return verifier.run_lemma_properties_campaign(cfg)
    return verifier.run_classical_campaign(cfg)


def cmd_verify(args) -> int:
    records = []
    with _output(args.out if args.json or args.out else None) as fh:
        if args.json or args.out:
            fails = verifier.write_report(_tee(_campaign(args), records), fh)
        else:
            records = list(_campaign(args))
            fails = sum(r.verdict == "fail" for r in records)
    sharp = args.campaign == "thm15" and args.rule == "boundary"
    summary = verifier.summarize(records)
    stream = sys.stderr if args.json and not args.out else sys.stdout
    for claim, counts in summary.items():
        parts = ", ".join(f"{v}={n}" for v, n in counts.items() if n)
        status = "FAIL" if counts["fail"] and not sharp else "ok"
        stream.write(f"{status:4} {claim}: {parts}\n")
    if sharp:
        stream.write(f"sharpness: {fails} boundary failures recorded as witnesses\n")
        return 0
    return 1 if fails else 0


def _tee(it, sink):
    for rec in it:
        sink.append(rec)
        yield rec


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write to FILE instead of stdout")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="tourpaths", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate tournaments").add_subparsers(dest="kind", required=True)
    p = gen.add_parser("rotational", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p = gen.add_parser("random-regular", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mix", type=int, default=None, help="accepted 3-cycle reversals (default 10 p^2)")
    p = gen.add_parser("moon-embed", parents=[common])
    p.add_argument("--in", dest="input", required=True)

    build = sub.add_parser("build", help="explicit constructions").add_subparsers(dest="what", required=True)
    p = build.add_parser("G", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--block-seed", type=int, default=None)
    build.add_parser("remark3", parents=[common])
    build.add_parser("remark4", parents=[common])
    p = build.add_parser("lemma32", parents=[common])
    p.add_argument("--variant", type=int, choices=constructions.LEMMA32_VARIANTS, required=True)

    p = sub.add_parser("spectrum", parents=[common], help="(x,y)-path length spectrum")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--from", dest="source", required=True, help="vertex index or role name")
    p.add_argument("--to", dest="target", required=True)

    check = sub.add_parser("check", help="pancyclicity / panconnectedness").add_subparsers(dest="prop", required=True)
    for name in ("pancyclic", "panconnected"):
        p = check.add_parser(name, parents=[common])
        p.add_argument("--d", type=int, default=3)
        p.add_argument("--in", dest="input", required=True)

    verify = sub.add_parser("verify", help="verification campaigns").add_subparsers(dest="campaign", required=True)
    defaults = {"thm15": 200, "lem32": 500, "thm16": 100, "lemmas33-34": 500, "classical": 50}
    verify.add_parser("paper-examples", parents=[common]).set_defaults(seed=0, count=0)
    for name, count in defaults.items():
        p = verify.add_parser(name, parents=[common])
        p.add_argument("--count", type=int, default=count)
        p.add_argument("--seed", type=int, default=0)
        if name == "thm15":
            p.add_argument("--orders", default="11")
            p.add_argument("--rule", choices=("paper", "boundary"), default="paper")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"gen": cmd_gen, "build": cmd_build, "spectrum": cmd_spectrum, "check": cmd_check, "verify": cmd_verify}
    return handler[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
