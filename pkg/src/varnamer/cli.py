"""Command line entry point: ``varnamer parse|recommend|evaluate|analyze|mine``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .evaluation import DatasetSchemaError, Engine, analyze_contexts, evaluate, load_dataset
from .generation import default_verbs, load_verbs
from .mining import (
    MiningConfig, build_transactions, extract_declarations, load_corpus, mine_rules,
    mine_universal_initializations,
)
from .recommender import recommend_with_trace
from .reuse import ReuseConfig, UniversalInitializationSet
from .rules import Curation, CurationError, RuleFormatError, compile_rules, default_rules, dump_rules, load_rules
from .search import ScopeLevel, build_scope
from .site import SiteResolutionError, resolve_site_at
from .syntax import UnrecoverableInput, dump_ast, parse_unit

log = logging.getLogger("varnamer")

EXIT_IO = 1
EXIT_INPUT = 2


def _engine_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("engine")
    g.add_argument("--rules", type=Path, help="naming rules JSON (default: bundled rules)")
    g.add_argument("--universal", type=Path, help="universal initializations, one per line")
    g.add_argument("--verbs", type=Path, help="verb list, one per line")
    g.add_argument("--config", type=Path, help="JSON file with fg_sim and ini_length keys")
    g.add_argument("--fg-sim", type=float, help="context similarity threshold (default 0.3)")
    g.add_argument("--ini-length", type=int,
                   help="initializations longer than this skip the context check (default 30)")


def _reuse_config(args) -> ReuseConfig:
    settings = {}
    if args.config:
        loaded = json.loads(args.config.read_text(encoding="utf-8"))
        unknown = set(loaded) - {"fg_sim", "ini_length"}
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        settings.update(loaded)
    if args.fg_sim is not None:
        settings["fg_sim"] = args.fg_sim
    if args.ini_length is not None:
        settings["ini_length"] = args.ini_length
    return ReuseConfig(**settings)


def _engine(args) -> Engine:
    return Engine(
        rules=load_rules(args.rules) if args.rules else default_rules(),
        universal=(UniversalInitializationSet.load(args.universal) if args.universal
                   else UniversalInitializationSet.default()),
        reuse=_reuse_config(args),
        verbs=load_verbs(args.verbs) if args.verbs else default_verbs(),
    )


def _emit(payload: dict, indent=None) -> None:
    sys.stdout.write(json.dumps(payload, indent=indent) + "\n")


def cmd_parse(args) -> int:
    unit = parse_unit(args.file.read_text(encoding="utf-8"), str(args.file))
    if args.dump_ast:
        sys.stdout.write(dump_ast(unit.root) + "\n")
    else:
        _emit({"path": unit.path, "methods": [
            {"name": m.name, "parameters": [p.name for p in m.parameters], "return_type": m.return_type}
            for m in unit.methods]})
    return 0


def cmd_recommend(args) -> int:
    engine = _engine(args)
    unit = parse_unit(args.file.read_text(encoding="utf-8"), str(args.file))
    site = resolve_site_at(unit, args.line, args.col, args.end_line, args.end_col)
    scope = build_scope(unit, args.scope, args.scope_root)
    rec = recommend_with_trace(site, scope, engine.rules, engine.universal, engine.reuse, engine.verbs)
    _emit(rec.to_json())
    return 0


def cmd_evaluate(args) -> int:
    data = load_dataset(args.dataset)
    report = evaluate(data.instances, _engine(args), skipped=data.skipped)
    if args.report_dir:
        from .plotting import write_eval_report
        write_eval_report(report, args.report_dir)
    _emit(report.to_json())
    return 0


def cmd_analyze(args) -> int:
    data = load_dataset(args.dataset)
    report = analyze_contexts(data.instances, skipped=data.skipped)
    if args.report_dir:
        from .plotting import write_context_report
        write_context_report(report, args.report_dir)
    _emit(report.to_json())
    return 0


def cmd_mine(args) -> int:
    cfg = MiningConfig(args.min_support, args.min_confidence, args.project_num)
    curation = Curation.load(args.curation) if args.curation else None
    corpus = load_corpus(args.corpus, args.manifest)
    records = extract_declarations(corpus)
    rules = compile_rules(mine_rules(build_transactions(records), cfg), curation)
    universal = mine_universal_initializations(records, cfg.project_num)
    dump_rules(rules, args.rules_out)
    universal.dump(args.universal_out)
    _emit({"projects": len(corpus), "declarations": len(records), "rules": len(rules),
           "universal": sorted(universal.entries)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="varnamer", description="Name extracted local variables.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a Java file")
    p.add_argument("file", type=Path)
    p.add_argument("--dump-ast", action="store_true", help="print the syntax tree")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("recommend", help="recommend a name for an expression span")
    p.add_argument("--file", type=Path, required=True)
    p.add_argument("--line", type=int, required=True)
    p.add_argument("--col", type=int, required=True)
    p.add_argument("--end-line", type=int, required=True)
    p.add_argument("--end-col", type=int, required=True, help="inclusive, 1-based")
    p.add_argument("--scope", choices=[s.value for s in ScopeLevel], default="document")
    p.add_argument("--scope-root", type=Path, help="directory searched for package/project scope")
    _engine_flags(p)
    p.set_defaults(func=cmd_recommend)

    for name, func, helptext in (("evaluate", cmd_evaluate, "exact-match metrics over a dataset"),
                                 ("analyze", cmd_analyze, "context hitting analysis over a dataset")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--dataset", type=Path, required=True)
        p.add_argument("--report-dir", type=Path, help="also write JSON, CSV and PNG reports here")
        if name == "evaluate":
            _engine_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("mine", help="mine naming rules and universal initializations")
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--manifest", type=Path, help="JSON {project: [paths]} overriding directory grouping")
    p.add_argument("--min-support", type=int, default=50)
    p.add_argument("--min-confidence", type=float, default=0.8)
    p.add_argument("--project-num", type=int, default=80)
    p.add_argument("--rules-out", type=Path, required=True)
    p.add_argument("--universal-out", type=Path, required=True)
    p.add_argument("--curation", type=Path, help="allow/deny list applied to mined rules")
    p.set_defaults(func=cmd_mine)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, DatasetSchemaError, RuleFormatError, CurationError) as exc:
        print(f"varnamer: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UnrecoverableInput, SiteResolutionError, ValueError) as exc:
        print(f"varnamer: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
