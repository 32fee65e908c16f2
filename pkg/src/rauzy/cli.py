"""Command-line front end.

Exit status is 0 on success, 2 when the run configuration is invalid and 1
when a computation fails (for example an incomplete return-word scan).
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import Incomplete, NoSeedLetter, NonPrimitive, RauzyError
from .extension import extension_graph, scan_tree_condition
from .fundamental import abelianization_matrix, connecting_map, rank_profile, spanning_tree, write_matrix_csv
from .graph import build_rauzy, export_dot, write_edges_csv
from .language import build_language, complexity, source_from_json, write_language_csv
from .presets import PRESETS, preset_json
from .returns import (
    DEFAULT_SCAN_BUDGET,
    return_report_rows,
    return_set_at,
    return_words,
    write_return_report_csv,
)
from .verify import checks_as_json, run_checks

DEFAULT_HORIZON = 40


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    source_name: str
    source: dict
    horizon: int
    n_values: tuple
    scan_budget: int
    out: Path | None
    formats: tuple
    seed: int
    extra: dict

    def digest(self):
        payload = {
            "command": self.command,
            "source": self.source,
            "horizon": self.horizon,
            "n": list(self.n_values),
            "scan_budget": self.scan_budget,
            "formats": list(self.formats),
            "seed": self.seed,
            "extra": self.extra,
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def _parse_n_range(text):
    if ".." in text:
        a, _, b = text.partition("..")
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ConfigError(f"bad n-range {text!r}")
    return tuple(range(lo, hi + 1))


def _load_source(args):
    chosen = [x for x in (args.sub, args.periodic, args.preset) if x is not None]
    if len(chosen) != 1:
        raise ConfigError("give exactly one of --sub, --periodic, --preset")
    if args.preset is not None:
        if args.preset not in PRESETS:
            raise ConfigError(f"unknown preset {args.preset!r}")
        return args.preset, preset_json(args.preset)
    if args.periodic is not None:
        return "periodic", {"periodic": args.periodic}
    path = Path(args.sub)
    try:
        obj = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read substitution file {path}: {exc}") from None
    return path.stem, obj


def _requirements(command, n_values, extra, horizon):
    """Minimum horizon for each derived length, as ``(what, length)`` pairs."""
    top = max(n_values)
    if command == "rauzy":
        return [("edges of the Rauzy graph", top + 1)]
    if command == "returns":
        if extra.get("word"):
            return [("return-word base", len(extra["word"]))]
        return [("windows of length 2n", 2 * top), ("nested windows centred at horizon/2", 2 * top)]
    if command == "tree":
        return [("extension graphs", extra["max_center"] + 2)]
    if command == "fg":
        return [("edges of the order-2n Rauzy graph", 2 * top + 1), ("nested base windows", 2 * top)]
    return [("factors", 1)]


def build_config(args):
    name, source = _load_source(args)
    try:
        decoded = source_from_json(source)
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None
    n_values = _parse_n_range(args.n_range) if args.n_range else ((args.n,) if args.n else (1,))
    formats = tuple(args.format or ())
    extra = {}
    if args.command == "tree":
        extra["max_center"] = args.max_center
    if args.command == "returns" and args.word:
        extra["word"] = args.word
    horizon = args.horizon
    report = _requirements(args.command, n_values, extra, horizon)
    short = [(what, need) for what, need in report if need > horizon]
    if short:
        lines = ", ".join(f"{what} need {need}" for what, need in short)
        raise ConfigError(f"horizon {horizon} is too small: {lines}")
    cfg = RunConfig(args.command, name, source, horizon, n_values, args.scan_budget,
                    Path(args.out) if args.out else None, formats, args.seed, extra)
    return cfg, decoded


class Output:
    """Collects artifacts and writes them to ``--out`` or stdout."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.digest = cfg.digest()
        self.files = []

    @property
    def header(self):
        return [f"config-digest: {self.digest}", f"source: {self.cfg.source_name}"]

    def emit(self, suffix, text):
        if self.cfg.out is None:
            sys.stdout.write(text)
            return
        self.cfg.out.mkdir(parents=True, exist_ok=True)
        path = self.cfg.out / f"{self.cfg.command}-{self.cfg.source_name}{suffix}"
        path.write_text(text)
        self.files.append(path)

    def json(self, suffix, obj):
        obj = {"config_digest": self.digest, "source": self.cfg.source_name, **obj}
        self.emit(suffix, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_lang(cfg, lang, out):
    fmts = cfg.formats or ("csv",)
    if "csv" in fmts:
        buf = io.StringIO()
        write_language_csv(lang, buf, out.header)
        out.emit(".csv", buf.getvalue())
    if "json" in fmts:
        out.json(".json", {
            "horizon": lang.horizon,
            "complexity": {k: complexity(lang, k) for k in range(1, lang.horizon + 1)},
            "factors": {k: lang.factors(k) for k in range(1, lang.horizon + 1)},
        })


def cmd_rauzy(cfg, lang, out):
    fmts = cfg.formats or ("csv",)
    for n in cfg.n_values:
        g = build_rauzy(lang, n)
        tag = f"-{n}" if len(cfg.n_values) > 1 else ""
        if "dot" in fmts:
            out.emit(f"{tag}.dot", export_dot(g, comment=" ".join(out.header)))
        if "csv" in fmts:
            buf = io.StringIO()
            write_edges_csv(g, buf, out.header)
            out.emit(f"{tag}.csv", buf.getvalue())
        if "json" in fmts:
            out.json(f"{tag}.json", {"order": g.order, "vertices": list(g.vertices), "edges": list(g.edges)})


def cmd_returns(cfg, lang, out):
    fmts = cfg.formats or ("csv",)
    word = cfg.extra.get("word")
    if word:
        rs = return_words(lang, word, cfg.scan_budget)
        out.json(".json", {"return_words": rs.as_dict()})
        return
    rows = return_report_rows(lang, cfg.n_values, cfg.scan_budget)
    if "csv" in fmts:
        buf = io.StringIO()
        write_return_report_csv(rows, buf, out.header)
        out.emit(".csv", buf.getvalue())
    if "json" in fmts:
        sets = {str(n): return_set_at(lang.default_window(n), lang, cfg.scan_budget).as_dict() for n in cfg.n_values}
        out.json(".json", {"return_sets": sets})


def cmd_tree(cfg, lang, out):
    fmts = cfg.formats or ("json",)
    report = scan_tree_condition(lang, cfg.extra["max_center"])
    if "json" in fmts:
        out.json(".json", {"report": report.as_dict()})
    if "dot" in fmts and report.witness is not None:
        out.emit(".dot", extension_graph(lang, report.witness).to_dot(comment=" ".join(out.header)))


def cmd_fg(cfg, lang, out):
    fmts = cfg.formats or ("csv",)
    levels = list(cfg.n_values)
    if "csv" in fmts:
        buf = io.StringIO()
        for line in out.header:
            buf.write(f"# {line}\n")
        buf.write("n,rank\n")
        for n, r in rank_profile(lang, levels):
            buf.write(f"{n},{r}\n")
        out.emit("-ranks.csv", buf.getvalue())
    bases = {n: spanning_tree(build_rauzy(lang, 2 * n), lang.default_window(n).word) for n in levels}
    maps = {}
    for m, n in zip(levels[1:], levels):
        q = connecting_map(bases[m], bases[n])
        maps[f"{m}->{n}"] = q
        if "csv" in fmts:
            buf = io.StringIO()
            write_matrix_csv(abelianization_matrix(q), q.target_generators, q.source_generators, buf, out.header)
            out.emit(f"-abel-{m}-{n}.csv", buf.getvalue())
    if "json" in fmts:
        out.json(".json", {
            "bases": {str(n): {"base": b.base, "tree": sorted(b.tree), "generators": list(b.generators)}
                      for n, b in bases.items()},
            "connecting_maps": {k: q.as_table() for k, q in maps.items()},
            "abelianization": {k: _abel_summary(q) for k, q in maps.items()},
        })


def _abel_summary(q):
    m = abelianization_matrix(q)
    summary = {"rows": list(q.target_generators), "cols": list(q.source_generators), "matrix": m.tolist()}
    if m.shape[0] == m.shape[1]:
        summary["abs_det"] = abs(round(float(np.linalg.det(m))))
    return summary


COMMANDS = {"lang": cmd_lang, "rauzy": cmd_rauzy, "returns": cmd_returns, "tree": cmd_tree, "fg": cmd_fg}


def _add_common(p):
    src = p.add_argument_group("source")
    src.add_argument("--sub", metavar="FILE", help="substitution JSON file")
    src.add_argument("--periodic", metavar="WORD", help="period of a periodic point")
    src.add_argument("--preset", metavar="NAME", help=f"one of {', '.join(PRESETS)}")
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-range", metavar="A..B", default=None)
    p.add_argument("--scan-budget", type=int, default=DEFAULT_SCAN_BUDGET)
    p.add_argument("--out", metavar="DIR", default=None)
    p.add_argument("--format", action="append", choices=("dot", "csv", "json"))
    p.add_argument("--dot", dest="format", action="append_const", const="dot", help="shorthand for --format dot")
    p.add_argument("--seed", type=int, default=0)


def make_parser():
    parser = argparse.ArgumentParser(prog="rauzy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        _add_common(p)
        if name == "tree":
            p.add_argument("--max-center", type=int, default=10)
        if name == "returns":
            p.add_argument("--word", default=None, help="report R(WORD) instead of windows")
    v = sub.add_parser("verify")
    v.add_argument("preset", choices=PRESETS)
    v.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    v.add_argument("--scan-budget", type=int, default=DEFAULT_SCAN_BUDGET)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", metavar="DIR", default=None)
    return parser


def cmd_verify(args):
    checks = run_checks(args.preset, args.horizon, args.scan_budget, args.seed)
    result = checks_as_json(args.preset, checks)
    blob = json.dumps([args.preset, args.horizon, args.scan_budget, args.seed]).encode()
    result["config_digest"] = hashlib.sha256(blob).hexdigest()[:16]
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"verify-{args.preset}.json").write_text(text)
    else:
        sys.stdout.write(text)
    for c in checks:
        print(c.line(), file=sys.stderr)
    return 0 if result["passed"] else 1


def main(argv=None):
    args = make_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    try:
        cfg, source = build_config(args)
        lang = build_language(source, cfg.horizon)
    except (ConfigError, NonPrimitive, NoSeedLetter, ValueError) as exc:
        print(f"rauzy: error: {exc}", file=sys.stderr)
        return 2
    out = Output(cfg)
    try:
        COMMANDS[cfg.command](cfg, lang, out)
    except Incomplete as exc:
        print(f"rauzy: incomplete: {exc}", file=sys.stderr)
        return 1
    except RauzyError as exc:
        print(f"rauzy: computation failed: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
