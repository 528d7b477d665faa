"""End-to-end pipeline driver with staged, resumable run persistence.

A run lives in its own directory and advances through fixed stages:
ingest, plan, generate, build, score, merge, eval. Every stage reads only
what earlier stages persisted, so an interrupted run resumes by replaying
unfinished stages against the same artifacts. The manifest is the single
source of truth for progress and is rewritten atomically after each
stage.
"""

from __future__ import annotations

import json
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path

from . import blocks, harness, merging, scoring
from .benchmark import BenchmarkManifest, BenchmarkReport, TopicResult
from .document import load_document, read_paper, save_document
from .errors import (
    CorruptManifest,
    EmptyManifest,
    InvalidRequest,
    NoCandidates,
    StorageFailure,
    UnknownRun,
)
from .evaluation import (
    EvaluationReport,
    checklist_from_plan,
    classify_failure,
    extract_module_descriptions,
    gateway_content_judge,
    gateway_visual_judge,
    load_checklist,
    match_checklist,
    measure_complexity,
    model_matcher,
    overlap_matcher,
    probe,
    unmatched_descriptions,
)
from .gateway import HttpBackend, ModelGateway, ROLES
from .minibrowser import DomEngine
from .planning import parse_spec_text, plan_modules, serialize_spec
from .scaffold import node_scaffold, static_scaffold

STAGES = ("ingest", "plan", "generate", "build", "score", "merge", "eval")

MAX_ATTEMPTS = 6


@dataclass
class PipelineConfig:
    """Every knob a run depends on; serialization round-trips byte-identically."""

    attempts: int = 3
    screenshot_budget: int | None = None  # None = full trajectory
    viewport: tuple[int, int] = (1024, 768)
    score_key: str = "margin"  # or "ratio"
    models: dict = field(default_factory=lambda: {"default": "default"})
    probe_seed: int = 0
    probe_budget: int | None = None  # None = 2 x element count
    epsilon: float = 0.002
    build_timeout: float = 180.0
    settle_delay: float = 0.0
    match_threshold: float = 0.5
    misalignment_floor: float = 0.5
    block_temperature: float = 0.8
    base_seed: int = 0
    token_budget: int = 6000
    scaffold: str = "static"  # or "node"
    frontend_dir: str = ""
    target_stack: str = ""  # derived from scaffold when empty
    checklist_path: str = ""  # empty = derive from the plan
    extraction_mode: str = "markers"  # or "model"
    judge_mode: str = "off"  # "model" enables the screenshot/content judges
    gateway_mode: str = "replay"
    fixtures_dir: str = ""
    run_root: str = "runs"
    max_concurrency: int = 4

    def validate(self) -> None:
        if not 1 <= self.attempts <= MAX_ATTEMPTS:
            raise InvalidRequest(f"attempts must be in 1..{MAX_ATTEMPTS}, got {self.attempts}")
        if self.screenshot_budget is not None and self.screenshot_budget < 0:
            raise InvalidRequest("screenshot budget cannot be negative")
        if self.probe_budget is not None and self.probe_budget < 1:
            raise InvalidRequest("probe budget must be >= 1 when set")
        if len(self.viewport) != 2 or min(self.viewport) <= 0:
            raise InvalidRequest(f"bad viewport {self.viewport}")
        if self.epsilon <= 0:
            raise InvalidRequest("epsilon must be positive")
        if self.score_key not in ("margin", "ratio"):
            raise InvalidRequest(f"unknown score key {self.score_key!r}")
        if self.scaffold not in ("static", "node"):
            raise InvalidRequest(f"unknown scaffold {self.scaffold!r}")
        if self.gateway_mode not in ("live", "record", "replay"):
            raise InvalidRequest(f"unknown gateway mode {self.gateway_mode!r}")
        if self.extraction_mode not in ("markers", "model"):
            raise InvalidRequest(f"unknown extraction mode {self.extraction_mode!r}")
        if self.judge_mode not in ("off", "model"):
            raise InvalidRequest(f"unknown judge mode {self.judge_mode!r}")
        if self.max_concurrency < 1:
            raise InvalidRequest("max_concurrency must be >= 1")

    def resolved_stack(self) -> str:
        if self.target_stack:
            return self.target_stack
        if self.scaffold == "node":
            return "React and TypeScript"
        return "a single self-contained HTML file using the declarative data-* dialect"

    def model_for(self, role: str) -> str:
        if role not in ROLES:
            raise InvalidRequest(f"unknown model role {role!r}")
        return self.models.get(role) or self.models.get("default", "default")

    def to_dict(self) -> dict:
        return {
            "attempts": self.attempts,
            "screenshot_budget": self.screenshot_budget,
            "viewport": list(self.viewport),
            "score_key": self.score_key,
            "models": dict(self.models),
            "probe_seed": self.probe_seed,
            "probe_budget": self.probe_budget,
            "epsilon": self.epsilon,
            "build_timeout": self.build_timeout,
            "settle_delay": self.settle_delay,
            "match_threshold": self.match_threshold,
            "misalignment_floor": self.misalignment_floor,
            "block_temperature": self.block_temperature,
            "base_seed": self.base_seed,
            "token_budget": self.token_budget,
            "scaffold": self.scaffold,
            "frontend_dir": self.frontend_dir,
            "target_stack": self.target_stack,
            "checklist_path": self.checklist_path,
            "extraction_mode": self.extraction_mode,
            "judge_mode": self.judge_mode,
            "gateway_mode": self.gateway_mode,
            "fixtures_dir": self.fixtures_dir,
            "run_root": self.run_root,
            "max_concurrency": self.max_concurrency,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise InvalidRequest(f"unknown config fields: {sorted(unknown)}")
        kwargs = dict(data)
        if "viewport" in kwargs:
            kwargs["viewport"] = tuple(kwargs["viewport"])
        config = cls(**kwargs)
        config.validate()
        return config

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PipelineConfig":
        return cls.from_dict(json.loads(text))


def load_config(path: Path) -> PipelineConfig:
    return PipelineConfig.from_json(Path(path).read_text(encoding="utf-8"))


# --- run manifest ----------------------------------------------------------

def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class RunManifest:
    """Progress and artifact index for one run; all refs are run-relative."""

    run_id: str
    config: PipelineConfig
    created_at: str = field(default_factory=_now)
    updated_at: str = ""
    paper_source: str = ""
    paper_digest: str = ""
    topic: str = ""
    stages: dict = field(default_factory=lambda: {stage: "pending" for stage in STAGES})
    document_ref: str = ""
    plan_ref: str = ""
    modules: dict = field(default_factory=dict)  # str(module_id) -> state dict
    merged: dict | None = None
    eval_refs: dict | None = None
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "config": self.config.to_dict(),
            "paper_source": self.paper_source,
            "paper_digest": self.paper_digest,
            "topic": self.topic,
            "stages": dict(self.stages),
            "document_ref": self.document_ref,
            "plan_ref": self.plan_ref,
            "modules": self.modules,
            "merged": self.merged,
            "eval": self.eval_refs,
            "timings": self.timings,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunManifest":
        try:
            return cls(
                run_id=data["run_id"],
                config=PipelineConfig.from_dict(data["config"]),
                created_at=data["created_at"],
                updated_at=data.get("updated_at", ""),
                paper_source=data.get("paper_source", ""),
                paper_digest=data.get("paper_digest", ""),
                topic=data.get("topic", ""),
                stages=dict(data["stages"]),
                document_ref=data.get("document_ref", ""),
                plan_ref=data.get("plan_ref", ""),
                modules=dict(data.get("modules", {})),
                merged=data.get("merged"),
                eval_refs=data.get("eval"),
                timings=dict(data.get("timings", {})),
            )
        except (KeyError, TypeError, InvalidRequest) as exc:
            raise CorruptManifest(f"manifest missing or malformed field: {exc}") from exc

    def stable_payload(self) -> dict:
        """Everything that must survive an interrupt/resume round trip.

        Timestamps and timings are wall-clock noise and excluded.
        """
        payload = self.to_dict()
        for volatile in ("created_at", "updated_at", "timings"):
            payload.pop(volatile, None)
        return payload

    def referenced_paths(self) -> list[str]:
        refs = [ref for ref in (self.document_ref, self.plan_ref) if ref]
        for state in self.modules.values():
            for candidate in state.get("candidates", []):
                for key in ("source_ref", "build_log_ref", "screenshot_ref", "score_ref"):
                    if candidate.get(key):
                        refs.append(candidate[key])
            if state.get("selection_ref"):
                refs.append(state["selection_ref"])
        if self.merged:
            refs += [self.merged[k] for k in ("app_source_ref", "site_ref") if self.merged.get(k)]
        if self.eval_refs:
            refs += [ref for ref in self.eval_refs.values() if ref]
        return refs

    def save(self, run_dir: Path) -> Path:
        run_dir = Path(run_dir)
        for ref in self.referenced_paths():
            if not (run_dir / ref).exists():
                raise StorageFailure(f"manifest references missing artifact {ref}")
        self.updated_at = _now()
        target = run_dir / "manifest.json"
        temp = run_dir / f".manifest.{uuid.uuid4().hex}.tmp"
        temp.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        temp.replace(target)
        return target

    @classmethod
    def load(cls, run_dir: Path) -> "RunManifest":
        path = Path(run_dir) / "manifest.json"
        if not path.is_file():
            raise UnknownRun(f"no manifest under {run_dir}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CorruptManifest(f"unparseable manifest at {path}: {exc}") from exc
        return cls.from_dict(data)


# --- execution context -----------------------------------------------------

@dataclass
class _Context:
    run_dir: Path
    config: PipelineConfig
    manifest: RunManifest
    gateway: ModelGateway
    engine: object

    def log(self, event: str, **fields) -> None:
        line = json.dumps(
            {"event": event, "run": self.manifest.run_id, "at": _now(), **fields},
            sort_keys=True,
        )
        with (self.run_dir / "log.jsonl").open("a", encoding="utf-8") as handle:
            handle.write(line + "\n")

    def block_scaffold(self):
        if self.config.scaffold == "node":
            return node_scaffold(Path(self.config.frontend_dir), "block-host")
        return static_scaffold("block-host")

    def app_scaffold(self):
        if self.config.scaffold == "node":
            return node_scaffold(Path(self.config.frontend_dir), "full-app")
        return static_scaffold("full-app")

    def source_ext(self) -> str:
        return ".tsx" if self.config.scaffold == "node" else ".html"

    def load_spec(self):
        return parse_spec_text((self.run_dir / self.manifest.plan_ref).read_text(encoding="utf-8"))


def build_gateway(config: PipelineConfig, log_path: Path | None = None) -> ModelGateway:
    if config.gateway_mode == "replay":
        if not config.fixtures_dir:
            raise InvalidRequest("replay mode needs fixtures_dir")
        return ModelGateway(
            fixtures=config.fixtures_dir,
            mode="replay",
            max_concurrency=config.max_concurrency,
            log_path=log_path,
        )
    backend = HttpBackend()
    return ModelGateway(
        backend=backend,
        fixtures=config.fixtures_dir or None,
        mode=config.gateway_mode,
        max_concurrency=config.max_concurrency,
        log_path=log_path,
    )


def build_engine(config: PipelineConfig):
    return DomEngine(viewport=tuple(config.viewport))


# --- stages ----------------------------------------------------------------

def _stage_ingest(ctx: _Context) -> None:
    document = read_paper(ctx.manifest.paper_source)
    save_document(document, ctx.run_dir / "spec")
    ctx.manifest.paper_digest = document.digest
    ctx.manifest.document_ref = "spec/document.json"
    ctx.log("ingest", digest=document.digest, pages=document.page_count)


def _stage_plan(ctx: _Context) -> None:
    document = load_document(ctx.run_dir / "spec")
    spec = plan_modules(
        document,
        ctx.gateway,
        model=ctx.config.model_for("planner"),
        target_stack=ctx.config.resolved_stack(),
        token_budget=ctx.config.token_budget,
    )
    (ctx.run_dir / "spec" / "plan.txt").write_text(serialize_spec(spec), encoding="utf-8")
    ctx.manifest.plan_ref = "spec/plan.txt"
    ctx.manifest.topic = spec.topic
    ctx.manifest.modules = {
        str(entry.module_id): {
            "title": entry.title,
            "status": "planned",
            "candidates": [],
            "selection_ref": None,
            "winner": None,
        }
        for entry in spec.modules
    }
    ctx.log("plan", modules=len(spec.modules), topic=spec.topic)


def _stage_generate(ctx: _Context) -> None:
    spec = ctx.load_spec()
    ext = ctx.source_ext()
    for module_id in spec.module_ids():
        candidates = blocks.generate_candidates(
            spec,
            module_id,
            ctx.config.attempts,
            ctx.gateway,
            model=ctx.config.model_for("block-generator"),
            target_stack=ctx.config.resolved_stack(),
            temperature=ctx.config.block_temperature,
            base_seed=ctx.config.base_seed,
            parallelism=ctx.config.max_concurrency,
        )
        state = ctx.manifest.modules[str(module_id)]
        state["candidates"] = []
        for candidate in candidates:
            cand_dir = ctx.run_dir / "blocks" / f"module-{module_id}" / f"candidate-{candidate.variant_index}"
            cand_dir.mkdir(parents=True, exist_ok=True)
            entry = {
                "variant": candidate.variant_index,
                "status": candidate.status,
                "seed": candidate.seed,
                "note": candidate.note,
                "source_ref": None,
                "build_log_ref": None,
                "screenshot_ref": None,
                "score_ref": None,
            }
            if candidate.source:
                source_path = cand_dir / f"source{ext}"
                source_path.write_text(candidate.source, encoding="utf-8")
                entry["source_ref"] = str(source_path.relative_to(ctx.run_dir))
            state["candidates"].append(entry)
        state["status"] = "generated"
        ctx.log("generate", module=module_id, candidates=len(candidates))


def _stage_build(ctx: _Context) -> None:
    scaffold = ctx.block_scaffold()
    jobs = []
    for module_key, state in sorted(ctx.manifest.modules.items(), key=lambda kv: int(kv[0])):
        for entry in state["candidates"]:
            if entry["status"] == blocks.STATUS_GENERATED and entry["source_ref"]:
                jobs.append((module_key, entry))

    def build_one(job):
        module_key, entry = job
        cand_dir = ctx.run_dir / "blocks" / f"module-{module_key}" / f"candidate-{entry['variant']}"
        source = (ctx.run_dir / entry["source_ref"]).read_text(encoding="utf-8")
        result = harness.compile(source, scaffold, timeout=ctx.config.build_timeout)
        (cand_dir / "build.log").write_text(result.log, encoding="utf-8")
        entry["build_log_ref"] = str((cand_dir / "build.log").relative_to(ctx.run_dir))
        if not result.ok:
            entry["status"] = blocks.STATUS_BUILD_FAILED
            entry["note"] = "build timed out" if result.timed_out else "build failed"
            return
        shot = harness.render_screenshot(
            result.site_dir,
            ctx.engine,
            label=f"module-{module_key}-candidate-{entry['variant']}",
            settle_delay=ctx.config.settle_delay,
        )
        shot.save(cand_dir / "screenshot.png")
        entry["screenshot_ref"] = str((cand_dir / "screenshot.png").relative_to(ctx.run_dir))
        entry["status"] = blocks.STATUS_BUILT

    with ThreadPoolExecutor(max_workers=ctx.config.max_concurrency) as pool:
        list(pool.map(build_one, jobs))
    for module_key, state in ctx.manifest.modules.items():
        built = sum(1 for entry in state["candidates"] if entry["status"] == blocks.STATUS_BUILT)
        ctx.log("build", module=int(module_key), built=built, total=len(state["candidates"]))


def _stage_score(ctx: _Context) -> None:
    from .pixels import load_screenshot

    spec = ctx.load_spec()
    for module_id in spec.module_ids():
        state = ctx.manifest.modules[str(module_id)]
        scored: list[scoring.ScoredCandidate] = []
        for entry in state["candidates"]:
            if entry["status"] != blocks.STATUS_BUILT or not entry["screenshot_ref"]:
                scored.append(scoring.ScoredCandidate(entry["variant"], entry["status"], None))
                continue
            shot = load_screenshot(ctx.run_dir / entry["screenshot_ref"])
            quality = scoring.score_screenshot(
                shot, spec, module_id, ctx.gateway, model=ctx.config.model_for("scorer")
            )
            cand_dir = ctx.run_dir / "blocks" / f"module-{module_id}" / f"candidate-{entry['variant']}"
            (cand_dir / "score.json").write_text(
                json.dumps(quality.to_dict(), indent=2) + "\n", encoding="utf-8"
            )
            entry["score_ref"] = str((cand_dir / "score.json").relative_to(ctx.run_dir))
            entry["status"] = blocks.STATUS_SCORED
            scored.append(scoring.ScoredCandidate(entry["variant"], entry["status"], quality))
        try:
            record = scoring.select_best(module_id, scored, key=ctx.config.score_key)
        except NoCandidates as exc:
            state["status"] = "dropped"
            state["note"] = str(exc)
            ctx.log("score", module=module_id, dropped=True)
            continue
        selection_path = ctx.run_dir / "blocks" / f"module-{module_id}" / "selection.json"
        record.save(selection_path)
        state["selection_ref"] = str(selection_path.relative_to(ctx.run_dir))
        state["winner"] = record.winner_index
        state["status"] = "selected"
        ctx.log("score", module=module_id, winner=record.winner_index)


def _stage_merge(ctx: _Context) -> None:
    spec = ctx.load_spec()
    ext = ctx.source_ext()
    winners: dict[int, str] = {}
    for module_id in spec.module_ids():
        state = ctx.manifest.modules[str(module_id)]
        if state["status"] != "selected":
            continue
        source_path = (
            ctx.run_dir / "blocks" / f"module-{module_id}" / f"candidate-{state['winner']}" / f"source{ext}"
        )
        winners[module_id] = source_path.read_text(encoding="utf-8")
    app = merging.merge(
        spec,
        winners,
        ctx.gateway,
        model=ctx.config.model_for("merger"),
        target_stack=ctx.config.resolved_stack(),
    )
    merged_dir = ctx.run_dir / "merged"
    merged_dir.mkdir(parents=True, exist_ok=True)
    app_path = merged_dir / f"app-source{ext}"
    app_path.write_text(app.source, encoding="utf-8")
    artifact = merging.package(
        app, ctx.app_scaffold(), merged_dir / "site", timeout=ctx.config.build_timeout
    )
    ctx.manifest.merged = {
        "app_source_ref": str(app_path.relative_to(ctx.run_dir)),
        "site_ref": "merged/site",
        "digest": artifact.digest,
        "file_count": artifact.file_count,
        "module_ids": list(app.module_ids),
    }
    ctx.log("merge", modules=len(winners), digest=artifact.digest)


def _stage_eval(ctx: _Context) -> None:
    if not ctx.manifest.merged:
        raise StorageFailure("eval stage needs a merged site")
    spec = ctx.load_spec()
    eval_dir = ctx.run_dir / "eval"
    eval_dir.mkdir(parents=True, exist_ok=True)
    source = (ctx.run_dir / ctx.manifest.merged["app_source_ref"]).read_text(encoding="utf-8")
    site_dir = ctx.run_dir / ctx.manifest.merged["site_ref"]

    if ctx.config.checklist_path:
        checklist = load_checklist(ctx.config.checklist_path)
    else:
        checklist = checklist_from_plan(spec)
    if ctx.config.extraction_mode == "model":
        descriptions = extract_module_descriptions(
            source, ctx.gateway, model=ctx.config.model_for("extractor"), mode="model"
        )
    else:
        descriptions = extract_module_descriptions(source, mode="markers")
    if ctx.config.judge_mode == "model":
        matcher = model_matcher(ctx.gateway, ctx.config.model_for("extractor"))
    else:
        matcher = overlap_matcher
    checklist_result = match_checklist(
        descriptions, checklist, matcher, threshold=ctx.config.match_threshold
    )
    checklist_result_path = eval_dir / "checklist.json"
    checklist_result_path.write_text(
        json.dumps(checklist_result.to_dict(), indent=2) + "\n", encoding="utf-8"
    )

    probe_report = probe(
        site_dir,
        ctx.engine,
        seed=ctx.config.probe_seed,
        budget=ctx.config.probe_budget,
        epsilon=ctx.config.epsilon,
    )
    trajectory_dir = eval_dir / "trajectory"
    if probe_report.trajectory is not None:
        harness.save_trajectory(probe_report.trajectory, trajectory_dir)
        probe_report.trajectory_ref = "eval/trajectory"
    probe_report.save(eval_dir / "probe.json")

    trajectory = probe_report.trajectory or harness.InteractionTrajectory()
    budget = ctx.config.screenshot_budget
    if budget is None:
        budget = len(trajectory)
    sampled = harness.sample_screenshots(trajectory, budget)

    visual_judge = None
    content_judge = None
    if ctx.config.judge_mode == "model":
        visual_judge = gateway_visual_judge(ctx.gateway, ctx.config.model_for("scorer"))
        content_judge = gateway_content_judge(ctx.gateway, ctx.config.model_for("extractor"), checklist)
    category = classify_failure(
        checklist_result,
        probe_report,
        extras=unmatched_descriptions(descriptions, checklist_result),
        visual_judge=visual_judge,
        content_judge=content_judge,
        misalignment_floor=ctx.config.misalignment_floor,
        screenshots=sampled,
    )
    complexity = measure_complexity(source, site_dir, ctx.engine)
    report = EvaluationReport(
        topic_id=checklist.topic_id or ctx.manifest.topic,
        checklist=checklist_result,
        probe=probe_report,
        category=category,
        complexity=complexity,
        screenshots_used=len(sampled),
    )
    report.save(eval_dir / "report.json")
    ctx.manifest.eval_refs = {
        "checklist": "eval/checklist.json",
        "probe": "eval/probe.json",
        "report": "eval/report.json",
        "trajectory": probe_report.trajectory_ref or None,
    }
    ctx.manifest.eval_refs = {k: v for k, v in ctx.manifest.eval_refs.items() if v}
    ctx.log(
        "eval",
        completion_rate=checklist_result.completion_rate,
        failure_ratio=probe_report.failure_ratio,
        category=category,
        screenshots_used=len(sampled),
    )


_STAGE_FUNCS = {
    "ingest": _stage_ingest,
    "plan": _stage_plan,
    "generate": _stage_generate,
    "build": _stage_build,
    "score": _stage_score,
    "merge": _stage_merge,
    "eval": _stage_eval,
}


def _run_stage(ctx: _Context, stage: str) -> None:
    started = time.monotonic()
    try:
        _STAGE_FUNCS[stage](ctx)
    except Exception as exc:
        ctx.manifest.stages[stage] = "failed"
        ctx.log("stage_failed", stage=stage, error=str(exc))
        try:
            ctx.manifest.save(ctx.run_dir)
        except StorageFailure:
            pass
        raise
    ctx.manifest.stages[stage] = "done"
    ctx.manifest.timings[stage] = round(time.monotonic() - started, 3)
    ctx.manifest.save(ctx.run_dir)


def _new_run_id() -> str:
    return f"run-{datetime.now(timezone.utc).strftime('%Y%m%d-%H%M%S')}-{uuid.uuid4().hex[:6]}"


def _make_context(
    run_dir: Path,
    config: PipelineConfig,
    manifest: RunManifest,
    gateway: ModelGateway | None,
    engine,
) -> _Context:
    return _Context(
        run_dir=run_dir,
        config=config,
        manifest=manifest,
        gateway=gateway or build_gateway(config, log_path=run_dir / "log.jsonl"),
        engine=engine or build_engine(config),
    )


def run_pipeline(
    paper_path: str | Path,
    config: PipelineConfig,
    *,
    run_id: str | None = None,
    gateway: ModelGateway | None = None,
    engine=None,
    stop_after: str | None = None,
) -> RunManifest:
    """Run every stage from a paper file to an evaluated site.

    The paper is parsed before the run directory exists, so unreadable
    input leaves nothing behind. ``stop_after`` ends the run early with a
    resumable manifest; module-level failures downgrade modules instead of
    aborting the run.
    """
    config.validate()
    if stop_after is not None and stop_after not in STAGES:
        raise InvalidRequest(f"unknown stage {stop_after!r}")
    read_paper(paper_path)  # fail fast, before any residue
    run_id = run_id or _new_run_id()
    run_dir = Path(config.run_root) / run_id
    if (run_dir / "manifest.json").exists():
        raise InvalidRequest(f"run {run_id} already exists under {config.run_root}")
    run_dir.mkdir(parents=True, exist_ok=True)
    manifest = RunManifest(run_id=run_id, config=config, paper_source=str(paper_path))
    ctx = _make_context(run_dir, config, manifest, gateway, engine)
    for stage in STAGES:
        _run_stage(ctx, stage)
        if stage == stop_after:
            break
    return manifest


def resume(
    run_id: str,
    *,
    run_root: str | Path = "runs",
    gateway: ModelGateway | None = None,
    engine=None,
) -> RunManifest:
    """Finish an interrupted run; completed stages are not re-executed."""
    run_dir = Path(run_root) / run_id
    manifest = RunManifest.load(run_dir)
    ctx = _make_context(run_dir, manifest.config, manifest, gateway, engine)
    for stage in STAGES:
        if manifest.stages.get(stage) == "done":
            continue
        _run_stage(ctx, stage)
    return manifest


def run_single_stage(
    run_id: str,
    stage: str,
    *,
    run_root: str | Path = "runs",
    gateway: ModelGateway | None = None,
    engine=None,
) -> RunManifest:
    """Execute exactly one stage of an existing run (CLI stage verbs)."""
    if stage not in STAGES:
        raise InvalidRequest(f"unknown stage {stage!r}")
    run_dir = Path(run_root) / run_id
    manifest = RunManifest.load(run_dir)
    ctx = _make_context(run_dir, manifest.config, manifest, gateway, engine)
    _run_stage(ctx, stage)
    return manifest


def start_run(
    paper_path: str | Path,
    config: PipelineConfig,
    *,
    run_id: str | None = None,
    gateway: ModelGateway | None = None,
    engine=None,
) -> RunManifest:
    """Ingest and plan only; stage verbs or resume take it from there."""
    return run_pipeline(
        paper_path, config, run_id=run_id, gateway=gateway, engine=engine, stop_after="plan"
    )


# --- benchmark runner ------------------------------------------------------

def run_benchmark(
    manifest: BenchmarkManifest,
    config: PipelineConfig,
    *,
    base_dir: str | Path,
    bench_id: str | None = None,
    gateway: ModelGateway | None = None,
    engine=None,
    parallelism: int = 1,
) -> BenchmarkReport:
    """One pipeline run per topic; topic failures never sink the batch."""
    if not manifest.entries:
        raise EmptyManifest("benchmark manifest has no topics")
    config.validate()
    base_dir = Path(base_dir)
    bench_id = bench_id or f"bench-{datetime.now(timezone.utc).strftime('%Y%m%d-%H%M%S')}"

    def run_topic(entry) -> TopicResult:
        topic_run_id = f"{bench_id}/{entry.abbrev}"
        topic_config = replace(
            config,
            checklist_path=str(base_dir / entry.checklist_ref) if entry.checklist_ref else "",
        )
        try:
            run_manifest = run_pipeline(
                base_dir / entry.paper_ref,
                topic_config,
                run_id=topic_run_id,
                gateway=gateway,
                engine=engine,
            )
            report = EvaluationReport.load(
                Path(config.run_root) / topic_run_id / run_manifest.eval_refs["report"]
            )
            return TopicResult(
                abbrev=entry.abbrev,
                status="ok",
                completion_rate=report.checklist.completion_rate if report.checklist else None,
                failure_ratio=report.probe.failure_ratio,
                category=report.category,
                run_id=topic_run_id,
            )
        except Exception as exc:
            return TopicResult(abbrev=entry.abbrev, status="failed", error=str(exc), run_id=topic_run_id)

    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(run_topic, manifest.entries))
    else:
        results = [run_topic(entry) for entry in manifest.entries]
    report = BenchmarkReport(bench_id=bench_id, attempts=config.attempts, results=results)
    bench_dir = Path(config.run_root) / bench_id
    bench_dir.mkdir(parents=True, exist_ok=True)
    report.save(bench_dir / "benchmark.json")
    return report
