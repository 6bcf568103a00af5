"""Command-line interface.

Exit codes: 0 yes, 1 no, 2 unknown; 10 bad input, 11 resource guard,
12 certification failure, 13 well-definedness violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .automaton import export_dot
from .cover import locate_coset
from .document import load
from .errors import CertificationError, ResourceGuardError, UsageError, WellDefinednessViolation
from .hom import extract, image_index
from .paths import EXACT, Bounded, Exact, accepts, is_empty
from .pipeline import PipelineConfig, run_pipeline, write_figures
from .pumpable import enumerate_M, is_pumpable
from .report import (
    cover_json,
    dumps,
    hom_json,
    index_json,
    locator_json,
    minimal_json,
    pump_json,
    text_sections,
    verdict_json,
    view_json,
)
from .wqo import minimal_accepting_paths, pump_constant

EXIT = {"yes": 0, "no": 1, "unknown": 2}
E_INPUT, E_GUARD, E_CERT, E_WELL = 10, 11, 12, 13


def _path(text: str) -> tuple:
    """Comma-separated edge ids; the empty string is the empty path."""
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _mode(args):
    if args.mode == "bounded":
        return Bounded(args.max_len, args.max_counter)
    return EXACT if args.mode == "exact" else Exact()


def _config(args):
    cfg = {"command": args.command, "mode": args.mode, "max_len": args.max_len, "max_counter": args.max_counter}
    for k in ("radius", "explore_len", "seed", "word", "sigma", "mu", "p", "check_len"):
        if hasattr(args, k):
            cfg[k] = getattr(args, k)
    return cfg


def _emit(args, payload: dict, text_rows):
    doc = {"tool": {"name": "gautomata", "version": __version__}, "config": _config(args), **payload}
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        sections = [("run", [("tool", f"gautomata {__version__}")] + sorted(_config(args).items()))]
        sections += text_rows
        sys.stdout.write(text_sections(sections))
    return doc


def _need_rho(doc):
    if doc.rho is None:
        raise UsageError("this command needs 'target_group' and 'rho' in the document")
    return doc.rho


def cmd_accepts(args):
    a = load(args.file).automaton
    v = accepts(a, args.word, _mode(args))
    _emit(args, {"verdict": verdict_json(v)}, [("verdict", sorted(verdict_json(v).items()))])
    return EXIT[v.status]


def cmd_empty(args):
    a = load(args.file).automaton
    v = is_empty(a, _mode(args))
    _emit(args, {"nonempty": verdict_json(v)}, [("nonempty", sorted(verdict_json(v).items()))])
    return EXIT[v.status]


def cmd_minimal_paths(args):
    a = load(args.file).automaton
    mps = minimal_accepting_paths(a, _mode(args), max_len=args.up_to)
    n, exact = pump_constant(mps)
    payload = {"minimal_paths": minimal_json(mps), "pump_constant": {"N": n, "exact": exact}}
    _emit(args, payload, [("minimal paths", sorted(payload["minimal_paths"].items()) + [("N", n), ("exact", exact)])])
    return 0


def cmd_pumpable(args):
    a = load(args.file).automaton
    v = is_pumpable(a, _path(args.sigma), _path(args.mu), _mode(args))
    payload = {"verdict": verdict_json(v)}
    if v.is_yes:
        payload["witness"] = pump_json(v.info["pump"])
    _emit(args, payload, [("pumpable", sorted(payload.items()))])
    return EXIT[v.status]


def cmd_enumerate_m(args):
    a = load(args.file).automaton
    view = enumerate_M(a, _path(args.mu), args.p or a.init, args.explore_len, _mode(args))
    payload = {"monoid": view_json(view)}
    _emit(args, payload, [("M", [("loops", [list(s) for s in view.loops])])])
    return 0


def cmd_extract_hom(args):
    doc = load(args.file)
    rho = _need_rho(doc)
    hom = extract(doc.automaton, rho, _path(args.mu), args.p, args.explore_len, mode=_mode(args))
    data = hom_json(hom, rho.group)
    data["index"] = index_json(image_index(hom))
    _emit(args, {"homomorphism": data}, [("homomorphism", sorted(data.items()))])
    return 0


def cmd_locate_coset(args):
    doc = load(args.file)
    rho = _need_rho(doc)
    loc = locate_coset(doc.automaton, rho, args.word, mode=_mode(args))
    data = locator_json(loc, rho.group)
    _emit(args, {"locator": data}, [("locator", sorted(data.items()))])
    return 0 if loc.ok else E_CERT


def cmd_cover_ball(args):
    from .cover import cover_ball

    doc = load(args.file)
    rho = _need_rho(doc)
    rep = cover_ball(doc.automaton, rho, args.radius, mode=_mode(args), explore_len=args.explore_len)
    data = cover_json(rep, rho.group)
    rows = [("covered", data["covered"]), ("elements", len(data["locators"])), ("cosets", data["cosets"])]
    _emit(args, {"cover": data}, [("cover", rows)])
    return 0 if rep.covered else E_CERT


def cmd_pipeline(args):
    doc = load(args.file)
    rho = _need_rho(doc)
    cfg = PipelineConfig(args.radius, args.explore_len, 2, args.check_len, args.samples, args.seed)
    data, cover = run_pipeline(doc.automaton, rho, cfg, _mode(args))
    sel = data["selection"]
    rows = [
        ("selection", [("mu", sel["mu"]), ("p", sel["p"]), ("index", sel["index"]), ("conclusive", sel["conclusive"])]),
        ("cover", [("covered", data["cover"]["covered"]), ("elements", len(data["cover"]["locators"])), ("cosets", len(data["cover"]["cosets"]))]),
        ("minimal paths", [("paths", data["minimal_paths"]["paths"]), ("N", data["pump_constant"]["N"])]),
    ]
    if args.out:
        out = Path(args.out)
        figures = write_figures(cover, rho.group, out)
        data["figures"] = [f.name for f in figures]
        rows.append(("files", [("report", str(out / "report.json"))] + [("figure", str(f)) for f in figures]))
    full = _emit(args, data, rows)
    if args.out:
        (Path(args.out) / "report.json").write_text(dumps(full))
    ok = data["cover"]["covered"] and sel["conclusive"]
    return 0 if ok else E_CERT


def cmd_export_dot(args):
    a = load(args.file).automaton
    sys.stdout.write(export_dot(a))
    return 0


COMMANDS = {
    "accepts": cmd_accepts,
    "empty": cmd_empty,
    "minimal-paths": cmd_minimal_paths,
    "pumpable": cmd_pumpable,
    "enumerate-m": cmd_enumerate_m,
    "extract-hom": cmd_extract_hom,
    "locate-coset": cmd_locate_coset,
    "cover-ball": cmd_cover_ball,
    "pipeline": cmd_pipeline,
    "export-dot": cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["exact", "bounded"], default="exact")
    common.add_argument("--max-len", type=int, default=12, help="bounded mode: path length cap")
    common.add_argument("--max-counter", type=int, default=24, help="bounded mode: register norm cap")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="gautomata", description="G-automata with an abelian register.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("accepts", parents=[common], help="membership of a word")
    p.add_argument("file")
    p.add_argument("word")
    p = sub.add_parser("empty", parents=[common], help="yes when some accepting path exists")
    p.add_argument("file")
    p = sub.add_parser("minimal-paths", parents=[common], help="minimal accepting paths and the pump constant")
    p.add_argument("file")
    p.add_argument("--up-to", type=int, default=None, help="search only up to this length")
    p = sub.add_parser("pumpable", parents=[common], help="is a loop pumpable in mu")
    p.add_argument("file")
    p.add_argument("--sigma", required=True, help="comma-separated edge ids")
    p.add_argument("--mu", default="", help="comma-separated edge ids (default: empty path)")
    p = sub.add_parser("enumerate-m", parents=[common], help="members of M(mu, p) up to a length")
    p.add_argument("file")
    p.add_argument("--mu", default="")
    p.add_argument("--p", default=None)
    p.add_argument("--explore-len", type=int, default=4)
    p = sub.add_parser("extract-hom", parents=[common], help="generators of G(mu, p) and H(mu, p)")
    p.add_argument("file")
    p.add_argument("--mu", default="")
    p.add_argument("--p", default=None)
    p.add_argument("--explore-len", type=int, default=8)
    p = sub.add_parser("locate-coset", parents=[common], help="coset locator for rho(word)")
    p.add_argument("file")
    p.add_argument("word")
    p = sub.add_parser("cover-ball", parents=[common], help="locate every element of a ball")
    p.add_argument("file")
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--explore-len", type=int, default=8)
    p = sub.add_parser("pipeline", parents=[common], help="full run with report and figures")
    p.add_argument("file")
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--explore-len", type=int, default=8)
    p.add_argument("--check-len", type=int, default=6, help="compare with the word problem up to this length (-1 skips)")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--out", default=None, help="directory for report.json and PNG figures")
    p = sub.add_parser("export-dot", help="Graphviz DOT text")
    p.add_argument("file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "max_len") and (args.max_len <= 0 or args.max_counter <= 0):
        parser.error("bounds must be positive")
    try:
        return COMMANDS[args.command](args)
    except WellDefinednessViolation as exc:
        print(f"error: well-definedness violation: {exc}", file=sys.stderr)
        return E_WELL
    except CertificationError as exc:
        print(f"error: certification failed: {exc}", file=sys.stderr)
        return E_CERT
    except ResourceGuardError as exc:
        print(f"error: resource guard: {exc}", file=sys.stderr)
        return E_GUARD
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return E_INPUT


if __name__ == "__main__":
    sys.exit(main())
