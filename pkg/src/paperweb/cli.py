"""Command line driver: one verb per pipeline stage plus end-to-end runs.

Configuration comes from an optional JSON file with flag overrides on
top; every verb exits 0 only when its work fully succeeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .benchmark import bundled_data_dir, bundled_manifest, load_manifest
from .errors import PaperwebError
from .orchestrator import (
    PipelineConfig,
    RunManifest,
    load_config,
    resume,
    run_benchmark,
    run_pipeline,
    run_single_stage,
    start_run,
)

_STAGE_VERBS = ("generate", "build", "score", "merge", "eval")


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="pipeline config JSON file")
    parser.add_argument("--run-root", help="directory holding run artifacts")
    parser.add_argument("--k", type=int, dest="attempts", help="candidates per module")
    parser.add_argument("--screenshot-budget", type=int, help="trajectory screenshots for the evaluator")
    parser.add_argument("--probe-seed", type=int)
    parser.add_argument("--probe-budget", type=int)
    parser.add_argument("--epsilon", type=float, help="screenshot change threshold")
    parser.add_argument("--score-key", choices=("margin", "ratio"))
    parser.add_argument("--gateway-mode", choices=("live", "record", "replay"))
    parser.add_argument("--fixtures", help="fixture directory for record/replay")
    parser.add_argument("--scaffold", choices=("static", "node"))
    parser.add_argument("--frontend", help="frontend template directory for the node scaffold")
    parser.add_argument("--checklist", help="checklist file overriding the plan-derived one")
    parser.add_argument("--judge-mode", choices=("off", "model"))
    parser.add_argument(
        "--model",
        action="append",
        default=[],
        metavar="ROLE=NAME",
        help="model for a role, or default=NAME for all roles; repeatable",
    )


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    config = load_config(args.config) if args.config else PipelineConfig()
    overrides = {
        "attempts": args.attempts,
        "screenshot_budget": args.screenshot_budget,
        "probe_seed": args.probe_seed,
        "probe_budget": args.probe_budget,
        "epsilon": args.epsilon,
        "score_key": args.score_key,
        "gateway_mode": args.gateway_mode,
        "fixtures_dir": args.fixtures,
        "scaffold": args.scaffold,
        "frontend_dir": args.frontend,
        "checklist_path": args.checklist,
        "judge_mode": args.judge_mode,
        "run_root": args.run_root,
    }
    for name, value in overrides.items():
        if value is not None:
            setattr(config, name, value)
    for spec in args.model:
        role, _, name = spec.partition("=")
        if not name:
            raise PaperwebError(f"--model needs ROLE=NAME, got {spec!r}")
        config.models[role.strip()] = name.strip()
    config.validate()
    return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paperweb",
        description="Turn a research paper into an evaluated interactive website.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    plan = verbs.add_parser("plan", help="start a run: ingest a paper and plan its modules")
    plan.add_argument("--paper", required=True)
    plan.add_argument("--run-id")
    _add_config_flags(plan)

    for verb in _STAGE_VERBS:
        stage = verbs.add_parser(verb, help=f"execute the {verb} stage of an existing run")
        stage.add_argument("--run", required=True, dest="run_id")
        stage.add_argument("--run-root", default="runs")

    full = verbs.add_parser("run", help="full pipeline: paper in, evaluated site out")
    full.add_argument("--paper", required=True)
    full.add_argument("--run-id")
    _add_config_flags(full)

    res = verbs.add_parser("resume", help="finish an interrupted run")
    res.add_argument("--run", required=True, dest="run_id")
    res.add_argument("--run-root", default="runs")

    bench = verbs.add_parser("bench", help="run the benchmark manifest")
    bench.add_argument("--manifest", help="topics TSV; defaults to the bundled 19-topic manifest")
    bench.add_argument("--base-dir", help="directory paper/checklist refs resolve against")
    bench.add_argument("--bench-id")
    bench.add_argument("--parallelism", type=int, default=1)
    _add_config_flags(bench)

    return parser


def _print_manifest_summary(manifest: RunManifest) -> None:
    done = sum(1 for status in manifest.stages.values() if status == "done")
    print(f"run {manifest.run_id}: {done}/{len(manifest.stages)} stages done")
    if manifest.topic:
        print(f"  topic: {manifest.topic}")
    for module_id, state in sorted(manifest.modules.items(), key=lambda kv: int(kv[0])):
        winner = state.get("winner")
        chosen = f" winner candidate-{winner}" if winner is not None else ""
        print(f"  module {module_id} [{state['status']}]{chosen}: {state.get('title', '')}")
    if manifest.merged:
        print(f"  site: {manifest.merged['site_ref']} digest {manifest.merged['digest'][:12]}")
    if manifest.eval_refs:
        print(f"  eval: {manifest.eval_refs['report']}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "plan":
            config = _config_from_args(args)
            manifest = start_run(args.paper, config, run_id=args.run_id)
            _print_manifest_summary(manifest)
        elif args.verb in _STAGE_VERBS:
            manifest = run_single_stage(args.run_id, args.verb, run_root=args.run_root)
            _print_manifest_summary(manifest)
        elif args.verb == "run":
            config = _config_from_args(args)
            manifest = run_pipeline(args.paper, config, run_id=args.run_id)
            _print_manifest_summary(manifest)
        elif args.verb == "resume":
            manifest = resume(args.run_id, run_root=args.run_root)
            _print_manifest_summary(manifest)
        elif args.verb == "bench":
            config = _config_from_args(args)
            if args.manifest:
                topics = load_manifest(args.manifest)
                base_dir = Path(args.base_dir) if args.base_dir else Path(args.manifest).parent
            else:
                topics = bundled_manifest()
                base_dir = Path(args.base_dir) if args.base_dir else bundled_data_dir()
            report = run_benchmark(
                topics,
                config,
                base_dir=base_dir,
                bench_id=args.bench_id,
                parallelism=args.parallelism,
            )
            overall = report.overall()
            print(f"benchmark {report.bench_id}: {overall['completed']}/{overall['topics']} topics completed")
            for group, rollup in report.group_rollups().items():
                rate = rollup["completion_rate"]
                ratio = rollup["failure_ratio"]
                print(
                    f"  {group}: {rollup['completed']}/{rollup['topics']} done"
                    + (f", completion {rate:.3f}" if rate is not None else "")
                    + (f", failure ratio {ratio:.3f}" if ratio is not None else "")
                )
        return 0
    except PaperwebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
