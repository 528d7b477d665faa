"""Pipeline configuration, run persistence, and offline end-to-end runs.

The replay tests drive the whole pipeline against the committed fixture
bundle (tests/fixtures/e2e). Every pinned number below came out of the
scripted backend when the bundle was recorded, so a change in any stage
shows up as a changed value instead of a silent pass.
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

import pytest

from conftest import BUNDLE_DIR, replay_config
from paperweb.benchmark import BenchmarkManifest, BenchmarkReport, TopicEntry, load_manifest
from paperweb.errors import (
    CorruptManifest,
    EmptyManifest,
    InvalidRequest,
    StorageFailure,
    UnknownRun,
    UnreadableDocument,
)
from paperweb.evaluation import EvaluationReport
from paperweb.harness import load_trajectory
from paperweb.merging import site_digest
from paperweb.orchestrator import (
    STAGES,
    PipelineConfig,
    RunManifest,
    build_gateway,
    load_config,
    resume,
    run_benchmark,
    run_pipeline,
    run_single_stage,
    start_run,
)
from paperweb.scoring import SelectionRecord

K3_SITE_DIGEST = "131fda805853111894d98a537a00840300fd0d27ff14756e78e2adfd1b2f5661"
K1_SITE_DIGEST = "47a1f0d89e474a99c580a42e4a9a7a49fc1c8d374702e769a2e4d58f8bd817f1"


class TestConfig:
    def test_json_round_trip_is_byte_identical(self):
        config = PipelineConfig(
            attempts=5,
            screenshot_budget=7,
            viewport=(640, 480),
            score_key="ratio",
            models={"default": "m-base", "scorer": "m-eyes"},
            probe_seed=11,
            probe_budget=9,
            epsilon=0.01,
            settle_delay=0.25,
            scaffold="node",
            frontend_dir="frontend",
            checklist_path="c.txt",
            gateway_mode="record",
            fixtures_dir="fx",
            run_root="elsewhere",
        )
        text = config.to_json()
        assert PipelineConfig.from_json(text).to_json() == text

    def test_viewport_restores_as_a_tuple(self):
        config = PipelineConfig.from_dict({"viewport": [800, 600]})
        assert config.viewport == (800, 600)

    def test_unknown_field_is_named_in_the_error(self):
        with pytest.raises(InvalidRequest, match="unknown config fields.*speed"):
            PipelineConfig.from_dict({"speed": "ludicrous"})

    @pytest.mark.parametrize(
        "field_name, value",
        [
            ("attempts", 0),
            ("attempts", 7),
            ("screenshot_budget", -1),
            ("probe_budget", 0),
            ("viewport", (0, 768)),
            ("viewport", (1024,)),
            ("epsilon", 0.0),
            ("score_key", "vibes"),
            ("scaffold", "docker"),
            ("gateway_mode", "cached"),
            ("extraction_mode", "guess"),
            ("judge_mode", "always"),
            ("max_concurrency", 0),
        ],
    )
    def test_validation_rejects_bad_values(self, field_name, value):
        config = replace(PipelineConfig(), **{field_name: value})
        with pytest.raises(InvalidRequest):
            config.validate()

    def test_every_attempt_count_in_range_is_accepted(self):
        for attempts in range(1, 7):
            replace(PipelineConfig(), attempts=attempts).validate()

    def test_model_for_prefers_the_role_then_falls_back(self):
        config = PipelineConfig(models={"default": "m-base", "scorer": "m-eyes", "merger": ""})
        assert config.model_for("scorer") == "m-eyes"
        assert config.model_for("planner") == "m-base"
        assert config.model_for("merger") == "m-base"
        with pytest.raises(InvalidRequest, match="unknown model role"):
            config.model_for("poet")

    def test_resolved_stack(self):
        assert "self-contained HTML" in PipelineConfig().resolved_stack()
        assert "React" in PipelineConfig(scaffold="node").resolved_stack()
        assert PipelineConfig(target_stack="Vue 3").resolved_stack() == "Vue 3"

    def test_load_config_reads_a_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(PipelineConfig(attempts=2).to_json(), encoding="utf-8")
        assert load_config(path).attempts == 2

    def test_replay_mode_requires_fixtures(self):
        with pytest.raises(InvalidRequest, match="fixtures_dir"):
            build_gateway(PipelineConfig(gateway_mode="replay", fixtures_dir=""))


class TestRunManifest:
    def test_save_load_round_trip(self, tmp_path):
        manifest = RunManifest(run_id="r1", config=PipelineConfig(attempts=2))
        manifest.topic = "Waves"
        manifest.stages["ingest"] = "done"
        manifest.save(tmp_path)
        restored = RunManifest.load(tmp_path)
        assert restored.stable_payload() == manifest.stable_payload()

    def test_save_is_atomic_and_leaves_no_temp_files(self, tmp_path):
        RunManifest(run_id="r1", config=PipelineConfig()).save(tmp_path)
        names = [p.name for p in tmp_path.iterdir()]
        assert names == ["manifest.json"]

    def test_save_refuses_dangling_artifact_references(self, tmp_path):
        manifest = RunManifest(run_id="r1", config=PipelineConfig())
        manifest.document_ref = "spec/document.json"
        with pytest.raises(StorageFailure, match="missing artifact"):
            manifest.save(tmp_path)

    def test_load_without_a_manifest_is_unknown_run(self, tmp_path):
        with pytest.raises(UnknownRun):
            RunManifest.load(tmp_path / "nope")

    def test_unparseable_manifest_is_corrupt(self, tmp_path):
        (tmp_path / "manifest.json").write_text("{broken", encoding="utf-8")
        with pytest.raises(CorruptManifest, match="unparseable"):
            RunManifest.load(tmp_path)

    def test_missing_fields_are_corrupt(self):
        with pytest.raises(CorruptManifest):
            RunManifest.from_dict({"run_id": "r1"})

    def test_unknown_config_field_inside_manifest_is_corrupt(self, tmp_path):
        manifest = RunManifest(run_id="r1", config=PipelineConfig())
        manifest.save(tmp_path)
        data = json.loads((tmp_path / "manifest.json").read_text(encoding="utf-8"))
        data["config"]["speed"] = 9
        with pytest.raises(CorruptManifest):
            RunManifest.from_dict(data)

    def test_stable_payload_excludes_wall_clock_noise(self, tmp_path):
        manifest = RunManifest(run_id="r1", config=PipelineConfig())
        manifest.timings["ingest"] = 1.23
        payload = manifest.stable_payload()
        for volatile in ("created_at", "updated_at", "timings"):
            assert volatile not in payload
        assert payload["run_id"] == "r1"


class TestReplayedRun:
    """Pinned observations from the shared k=3 replay."""

    def test_every_stage_completed(self, replay_run):
        _, manifest = replay_run
        assert manifest.stages == {stage: "done" for stage in STAGES}

    def test_run_layout_on_disk(self, replay_run):
        run_dir, manifest = replay_run
        for ref in manifest.referenced_paths():
            assert (run_dir / ref).exists(), ref
        for expected in (
            "spec/document.json",
            "spec/plan.txt",
            "blocks/module-1/candidate-1/source.html",
            "blocks/module-1/candidate-1/screenshot.png",
            "blocks/module-1/candidate-1/score.json",
            "blocks/module-1/selection.json",
            "merged/app-source.html",
            "merged/site/index.html",
            "eval/checklist.json",
            "eval/probe.json",
            "eval/report.json",
            "eval/trajectory/steps.jsonl",
            "manifest.json",
            "log.jsonl",
        ):
            assert (run_dir / expected).exists(), expected

    def test_manifest_on_disk_matches_the_returned_one(self, replay_run):
        run_dir, manifest = replay_run
        assert RunManifest.load(run_dir).stable_payload() == manifest.stable_payload()

    def test_three_modules_all_select_the_richest_variant(self, replay_run):
        _, manifest = replay_run
        assert sorted(manifest.modules) == ["1", "2", "3"]
        for state in manifest.modules.values():
            assert state["status"] == "selected"
            assert state["winner"] == 3

    def test_module_two_variant_two_failed_to_build(self, replay_run):
        run_dir, manifest = replay_run
        entry = manifest.modules["2"]["candidates"][1]
        assert entry["variant"] == 2
        assert entry["status"] == "build-failed"
        assert entry["note"] == "build failed"
        assert entry["screenshot_ref"] is None
        assert entry["score_ref"] is None
        assert (run_dir / entry["build_log_ref"]).read_text(encoding="utf-8")

    def test_module_one_score_ladder(self, replay_run):
        run_dir, _ = replay_run
        record = SelectionRecord.load(run_dir / "blocks" / "module-1" / "selection.json")
        assert record.winner_index == 3
        yes = [entry.score.yes_logit for entry in record.candidates]
        assert yes == pytest.approx([0.04509, 0.302289, 1.647339], abs=1e-4)
        assert [entry.score.no_logit for entry in record.candidates] == pytest.approx(
            [1.0, 1.0, 1.0]
        )

    def test_checklist_fully_satisfied(self, replay_run):
        run_dir, _ = replay_run
        report = EvaluationReport.load(run_dir / "eval" / "report.json")
        assert report.checklist.completion_rate == 1.0
        assert report.checklist.verdicts == [("m1", 1), ("m2", 2), ("m3", 3)]

    def test_probe_findings_pinned(self, replay_run):
        run_dir, _ = replay_run
        report = EvaluationReport.load(run_dir / "eval" / "report.json")
        probe = report.probe
        assert probe.seed == 0
        assert probe.budget == 24
        assert len(probe.elements) == 12
        assert probe.probed_count == 10
        assert len(probe.inert_locators) == 4
        assert probe.failure_ratio == 0.4
        assert probe.per_module() == {
            "module-1": (0, 2),
            "module-2": (3, 3),
            "module-3": (1, 2),
            "": (0, 3),
        }

    def test_category_complexity_and_screenshot_accounting(self, replay_run):
        run_dir, _ = replay_run
        report = EvaluationReport.load(run_dir / "eval" / "report.json")
        assert report.category == "none"
        assert report.complexity.element_count == 12
        assert report.complexity.code_tokens == 1284
        assert report.screenshots_used == 24

    def test_site_digest_matches_a_recomputation(self, replay_run):
        run_dir, manifest = replay_run
        assert manifest.merged["digest"] == K3_SITE_DIGEST
        assert site_digest(run_dir / "merged" / "site") == K3_SITE_DIGEST

    def test_probe_trajectory_reloads(self, replay_run):
        run_dir, _ = replay_run
        trajectory = load_trajectory(run_dir / "eval" / "trajectory")
        assert len(trajectory) == 24
        assert all(
            (step.pre.width, step.pre.height) == (1024, 768) for step in trajectory.steps
        )

    def test_log_stream_is_json_lines_covering_every_stage(self, replay_run):
        # Stage events and gateway call records share the stream; only the
        # stage events carry a run id.
        run_dir, _ = replay_run
        events = []
        model_calls = 0
        for line in (run_dir / "log.jsonl").read_text(encoding="utf-8").splitlines():
            record = json.loads(line)
            if record["event"] == "model_call":
                model_calls += 1
                assert record["mode"] == "replay"
                assert record["key"]
            else:
                assert record["run"] == "shared-k3"
                events.append(record["event"])
        for stage in STAGES:
            assert stage in events
        assert model_calls >= 10


class TestReplayedRunK1:
    def test_single_attempt_keeps_variant_one_everywhere(self, replay_run_k1):
        _, manifest = replay_run_k1
        assert {key: state["winner"] for key, state in manifest.modules.items()} == {
            "1": 1,
            "2": 1,
            "3": 1,
        }

    def test_pinned_outcome(self, replay_run_k1):
        run_dir, manifest = replay_run_k1
        report = EvaluationReport.load(run_dir / "eval" / "report.json")
        assert report.checklist.completion_rate == 1.0
        assert report.category == "none"
        assert report.probe.probed_count == 5
        assert len(report.probe.inert_locators) == 3
        assert report.probe.failure_ratio == 0.6
        assert report.complexity.element_count == 6
        assert report.complexity.code_tokens == 573
        assert manifest.merged["digest"] == K1_SITE_DIGEST

    def test_more_attempts_never_pick_a_weaker_block(self, replay_run, replay_run_k1):
        k3_dir, _ = replay_run
        k1_dir, _ = replay_run_k1

        def winner_margin(run_dir, module_id):
            record = SelectionRecord.load(
                run_dir / "blocks" / f"module-{module_id}" / "selection.json"
            )
            for entry in record.candidates:
                if entry.variant_index == record.winner_index:
                    return entry.score.ranking_key
            raise AssertionError("winner missing from its own record")

        margins = [(winner_margin(k3_dir, m), winner_margin(k1_dir, m)) for m in (1, 2, 3)]
        assert all(k3 >= k1 for k3, k1 in margins)
        assert any(k3 > k1 for k3, k1 in margins)


class TestInterruptResume:
    def test_resume_reaches_the_same_end_state(self, tmp_path, bundle_paper):
        run_root = tmp_path / "runs"
        straight = run_pipeline(bundle_paper, replay_config(run_root), run_id="straight")
        staged = run_pipeline(
            bundle_paper, replay_config(run_root), run_id="staged", stop_after="score"
        )
        assert staged.stages["score"] == "done"
        assert staged.stages["merge"] == "pending"
        resumed = resume("staged", run_root=run_root)
        left = straight.stable_payload()
        right = resumed.stable_payload()
        left.pop("run_id")
        right.pop("run_id")
        assert left == right

    def test_resuming_a_finished_run_changes_nothing(self, tmp_path, bundle_paper):
        run_root = tmp_path / "runs"
        first = run_pipeline(bundle_paper, replay_config(run_root), run_id="done-run")
        again = resume("done-run", run_root=run_root)
        assert again.stable_payload() == first.stable_payload()

    def test_unknown_stop_stage_is_rejected_before_any_writes(self, tmp_path, bundle_paper):
        run_root = tmp_path / "runs"
        with pytest.raises(InvalidRequest, match="unknown stage"):
            run_pipeline(bundle_paper, replay_config(run_root), stop_after="polish")
        assert not run_root.exists()


class TestPipelineGuards:
    def test_unreadable_paper_leaves_no_residue(self, tmp_path):
        run_root = tmp_path / "runs"
        with pytest.raises(UnreadableDocument):
            run_pipeline(tmp_path / "missing.pdf", replay_config(run_root))
        assert not run_root.exists()

    def test_existing_run_id_is_refused(self, tmp_path, bundle_paper):
        run_root = tmp_path / "runs"
        (run_root / "dup").mkdir(parents=True)
        (run_root / "dup" / "manifest.json").write_text("{}", encoding="utf-8")
        with pytest.raises(InvalidRequest, match="already exists"):
            run_pipeline(bundle_paper, replay_config(run_root), run_id="dup")

    def test_resume_unknown_run(self, tmp_path):
        with pytest.raises(UnknownRun):
            resume("ghost", run_root=tmp_path)

    def test_resume_corrupt_manifest(self, tmp_path):
        (tmp_path / "bad").mkdir()
        (tmp_path / "bad" / "manifest.json").write_text("{broken", encoding="utf-8")
        with pytest.raises(CorruptManifest):
            resume("bad", run_root=tmp_path)

    def test_single_stage_rejects_unknown_stages(self, tmp_path):
        with pytest.raises(InvalidRequest, match="unknown stage"):
            run_single_stage("whatever", "polish", run_root=tmp_path)

    def test_start_run_then_one_stage_at_a_time(self, tmp_path, bundle_paper):
        run_root = tmp_path / "runs"
        manifest = start_run(bundle_paper, replay_config(run_root), run_id="steps")
        assert manifest.stages["plan"] == "done"
        assert manifest.stages["generate"] == "pending"
        assert all(state["status"] == "planned" for state in manifest.modules.values())

        after = run_single_stage("steps", "generate", run_root=run_root)
        assert after.stages["generate"] == "done"
        assert after.stages["build"] == "pending"
        source_ref = after.modules["1"]["candidates"][0]["source_ref"]
        assert (run_root / "steps" / source_ref).exists()


class TestBudgetAndRatioVariant:
    def test_screenshot_budget_and_ratio_key_flow_through(self, tmp_path, bundle_paper):
        run_root = tmp_path / "runs"
        config = replay_config(run_root, screenshot_budget=5, score_key="ratio")
        manifest = run_pipeline(bundle_paper, config, run_id="trimmed")
        report = EvaluationReport.load(run_root / "trimmed" / "eval" / "report.json")
        assert report.screenshots_used == 5
        assert len(load_trajectory(run_root / "trimmed" / "eval" / "trajectory")) == 24
        # The ladder has no > yes on every variant, so ratio ordering
        # agrees with margin ordering here.
        assert all(state["winner"] == 3 for state in manifest.modules.values())


class TestBenchmarkRun:
    def test_two_topic_replay_bench(self, tmp_path):
        manifest = load_manifest(BUNDLE_DIR / "bench.tsv")
        run_root = tmp_path / "runs"
        config = replay_config(run_root)
        report = run_benchmark(manifest, config, base_dir=BUNDLE_DIR, bench_id="bench-t")

        rates = {row.abbrev: row.completion_rate for row in report.results}
        assert rates == {"Phys-SIR": 1.0, "DS-SWN": 0.75}
        assert all(row.status == "ok" for row in report.results)
        assert all(row.category == "none" for row in report.results)
        assert all(row.failure_ratio == 0.4 for row in report.results)
        assert report.overall() == {
            "topics": 2,
            "completed": 2,
            "completion_rate": 0.875,
            "failure_ratio": 0.4,
        }
        assert list(report.group_rollups()) == ["DS", "Phys"]

        assert (run_root / "bench-t" / "Phys-SIR" / "manifest.json").exists()
        assert report.results[0].run_id == "bench-t/Phys-SIR"
        saved = BenchmarkReport.load(run_root / "bench-t" / "benchmark.json")
        assert saved.to_dict() == report.to_dict()

    def test_failed_topic_scores_nothing_but_keeps_its_row(self, tmp_path):
        real = load_manifest(BUNDLE_DIR / "bench.tsv").entry("Phys-SIR")
        broken = TopicEntry(
            abbrev="Sys-Broken",
            topic="Missing input",
            domain="Systems",
            originating_work="",
            checklist_ref="checklists/Phys-SIR.txt",
            paper_ref="papers/does-not-exist.pdf",
        )
        manifest = BenchmarkManifest(entries=[real, broken])
        config = replay_config(tmp_path / "runs")
        report = run_benchmark(manifest, config, base_dir=BUNDLE_DIR, bench_id="bench-f")
        by_abbrev = {row.abbrev: row for row in report.results}
        assert by_abbrev["Sys-Broken"].status == "failed"
        assert by_abbrev["Sys-Broken"].error
        assert by_abbrev["Sys-Broken"].completion_rate is None
        assert report.overall() == {
            "topics": 2,
            "completed": 1,
            "completion_rate": 1.0,
            "failure_ratio": 0.4,
        }

    def test_empty_manifest_is_rejected(self, tmp_path):
        with pytest.raises(EmptyManifest):
            run_benchmark(
                BenchmarkManifest(entries=[]),
                replay_config(tmp_path / "runs"),
                base_dir=BUNDLE_DIR,
            )
