"""Release gate: one test per shipping criterion, tolerances pinned.

Each test carries an ``acceptance`` marker; the terminal summary plugin
in conftest prints a PASS/FAIL line per criterion. Oracles here are
computed independently in-test (pure-python pixel loop, brute-force
argmax) rather than through the code under test.
"""

from __future__ import annotations

import math
import random
import time

import numpy as np
import pytest
from PIL import Image

from conftest import replay_config
from paperweb.actions import ProbeAction
from paperweb.evaluation import (
    Checklist,
    ChecklistItem,
    ChecklistResult,
    FAILURE_CATEGORIES,
    ModuleDescription,
    ProbeReport,
    classify_failure,
    match_checklist,
    probe,
)
from paperweb.harness import InteractionTrajectory, TrajectoryStep, sample_screenshots
from paperweb.orchestrator import RunManifest, resume, run_pipeline
from paperweb.pixels import image_diff, screenshot_from_array
from paperweb.scoring import QualityScore, ScoredCandidate, SelectionRecord, select_best


@pytest.mark.acceptance("score arithmetic (margin, ratio, undefined ratio), 1e-9")
def test_score_arithmetic_matches_the_definitions():
    started = time.perf_counter()

    score = QualityScore(yes_logit=2.0, no_logit=1.0)
    assert abs(score.ranking_key - 1.0) < 1e-9
    assert abs(score.ratio - 2.0) < 1e-9

    asymmetric = QualityScore(yes_logit=0.5, no_logit=-0.2)
    assert abs(asymmetric.ranking_key - 0.7) < 1e-9
    assert asymmetric.ratio is None

    rng = random.Random(20240815)
    for _ in range(1000):
        x = rng.uniform(-50.0, 50.0)
        equal = QualityScore(yes_logit=x, no_logit=x)
        assert abs(equal.ranking_key) < 1e-9
        if x > 0:
            assert abs(equal.ratio - 1.0) < 1e-9
        else:
            assert equal.ratio is None

    for _ in range(1000):
        yes = rng.uniform(-10.0, 10.0)
        no = rng.uniform(-10.0, 10.0)
        undefined = QualityScore(yes_logit=yes, no_logit=no).ratio is None
        assert undefined == (no <= 0)

    assert time.perf_counter() - started < 1.0


def _scored(variant, yes, no=0.0):
    return ScoredCandidate(variant, "scored", QualityScore(yes_logit=yes, no_logit=no))


@pytest.mark.acceptance("selection: monotone invariance, superset dominance, ties (1000+)")
def test_selection_properties_over_random_cases():
    started = time.perf_counter()
    rng = random.Random(97)
    transforms = [
        lambda z: z,
        lambda z: 3.0 * z + 7.0,
        lambda z: z**3,
        lambda z: math.atan(z),
    ]
    for _ in range(1000):
        keys = [round(rng.uniform(-5, 5), 2) for _ in range(rng.randint(1, 8))]
        candidates = [_scored(i + 1, key) for i, key in enumerate(keys)]

        record = select_best(1, candidates)
        best = max(keys)
        oracle_winner = keys.index(best) + 1  # ties go to the lowest variant
        assert record.winner_index == oracle_winner

        transform = rng.choice(transforms)
        warped = [_scored(i + 1, transform(key)) for i, key in enumerate(keys)]
        assert select_best(1, warped).winner_index == record.winner_index

        extras = [
            _scored(len(keys) + 1 + j, rng.uniform(-5, 5))
            for j in range(rng.randint(0, 4))
        ]
        superset_record = select_best(1, candidates + extras)
        winner_key = lambda rec, pool: next(
            c.score.ranking_key for c in pool if c.variant_index == rec.winner_index
        )
        assert winner_key(superset_record, candidates + extras) >= winner_key(
            record, candidates
        )

        assert select_best(1, candidates).winner_index == record.winner_index
    assert time.perf_counter() - started < 10.0


@pytest.mark.acceptance("screenshot diff oracle: identity 0, inversion 1, 5% flip = 0.05")
def test_diff_against_an_independent_pixel_loop():
    started = time.perf_counter()
    white = np.full((100, 100, 3), 255, dtype=np.uint8)
    black = np.zeros((100, 100, 3), dtype=np.uint8)
    assert image_diff(screenshot_from_array(white), screenshot_from_array(white)) == 0.0
    assert image_diff(screenshot_from_array(white), screenshot_from_array(black)) == 1.0

    flipped = white.copy()
    rng = random.Random(5)
    for position in rng.sample(range(100 * 100), 500):  # exactly 5% of pixels
        flipped[divmod(position, 100)] = 0

    measured = image_diff(screenshot_from_array(white), screenshot_from_array(flipped))
    assert abs(measured - 0.05) < 1e-6

    total = 0
    for row in range(100):
        for col in range(100):
            for channel in range(3):
                total += abs(int(white[row, col, channel]) - int(flipped[row, col, channel]))
    loop_mean = total / (100 * 100 * 3 * 255)
    assert abs(measured - loop_mean) < 1e-12
    assert time.perf_counter() - started < 5.0


@pytest.mark.acceptance("evaluator arithmetic exact; failure cascade total and ordered")
def test_evaluator_arithmetic_and_cascade_grid():
    checklist = Checklist(
        topic_id="T",
        items=[ChecklistItem(f"i{n}", f"module number {n}") for n in range(4)],
    )
    found = [ModuleDescription(n + 1, f"module number {n}") for n in range(3)]
    assert match_checklist(found, checklist).completion_rate == 0.75

    report = ProbeReport(site_digest="0" * 64, seed=0, budget=10, epsilon=0.002)
    report.verdicts = {f"#e{i}": i >= 2 for i in range(10)}
    assert report.failure_ratio == 0.2

    blank = screenshot_from_array(np.full((4, 4, 3), 255, dtype=np.uint8))

    def build_probe(all_inert, small_diffs):
        state = ProbeReport(site_digest="0" * 64, seed=0, budget=3, epsilon=0.002)
        state.verdicts = {"#a": not all_inert, "#b": False}
        trajectory = InteractionTrajectory()
        for diff in (0.001, 0.0005, 0.3) if not small_diffs else (0.001, 0.0005):
            trajectory.steps.append(
                TrajectoryStep(
                    action=ProbeAction(kind="click", locator="#a"),
                    pre=blank,
                    post=blank,
                    diff=diff,
                )
            )
        state.trajectory = trajectory
        return state

    def passing_checklist(low_rate):
        matched = 1 if low_rate else 4
        verdicts = [(f"i{n}", n + 1 if n < matched else None) for n in range(4)]
        return ChecklistResult(topic_id="T", verdicts=verdicts)

    grid_cases = 0
    for all_inert in (False, True):
        for small_diffs in (False, True):
            for visual in (None, False, True):
                for rate in ("absent", "ok", "low"):
                    for content in ("absent", False, True):
                        probe_state = build_probe(all_inert, small_diffs)
                        checklist_state = (
                            None if rate == "absent" else passing_checklist(rate == "low")
                        )
                        extras = [] if content == "absent" else [ModuleDescription(9, "x")]
                        category = classify_failure(
                            checklist_state,
                            probe_state,
                            extras=extras,
                            visual_judge=None if visual is None else (lambda v: lambda s: v)(visual),
                            content_judge=None
                            if content == "absent"
                            else (lambda v: lambda e: v)(bool(content)),
                        )
                        if all_inert or small_diffs:
                            expected = "navigation-stuck"
                        elif visual is True:
                            expected = "visual-grounding"
                        elif rate == "low":
                            expected = "prompt-misalignment"
                        elif content is True:
                            expected = "hallucination"
                        else:
                            expected = "none"
                        assert category == expected, (
                            all_inert, small_diffs, visual, rate, content
                        )
                        assert category in FAILURE_CATEGORIES
                        grid_cases += 1
    assert grid_cases == 108


@pytest.mark.acceptance("every end-to-end screenshot is exactly 1024x768")
def test_viewport_contract_over_the_replay_run(replay_run):
    run_dir, _ = replay_run
    pngs = sorted(run_dir.rglob("*.png"))
    assert len(pngs) >= 30
    for path in pngs:
        with Image.open(path) as image:
            assert image.size == (1024, 768), path.name


@pytest.mark.acceptance("screenshot budgets 0..6 consume exactly min(budget, steps)")
def test_budget_table_on_an_eight_step_trajectory():
    blank = screenshot_from_array(np.full((4, 4, 3), 255, dtype=np.uint8))
    trajectory = InteractionTrajectory()
    for index in range(8):
        trajectory.steps.append(
            TrajectoryStep(
                action=ProbeAction(kind="click", locator=f"#e{index}"),
                pre=blank,
                post=blank,
                diff=0.1,
            )
        )
    for budget in range(0, 7):
        sampled = sample_screenshots(trajectory, budget)
        assert len(sampled) == min(budget, len(trajectory)) == budget


@pytest.mark.acceptance("offline replay: full pipeline, selections, reports, resume-equal")
def test_end_to_end_replay_with_interrupt_and_resume(tmp_path, bundle_paper):
    started = time.perf_counter()
    run_root = tmp_path / "runs"

    straight = run_pipeline(bundle_paper, replay_config(run_root), run_id="gate-straight")
    run_dir = run_root / "gate-straight"

    assert (run_dir / "merged" / "site" / "index.html").is_file()
    assert straight.merged["digest"]
    assert straight.merged["file_count"] >= 1
    for module_id in (1, 2, 3):
        record = SelectionRecord.load(
            run_dir / "blocks" / f"module-{module_id}" / "selection.json"
        )
        assert record.module_id == module_id
    assert (run_dir / "eval" / "checklist.json").is_file()
    assert (run_dir / "eval" / "probe.json").is_file()
    assert (run_dir / "eval" / "report.json").is_file()
    assert RunManifest.load(run_dir).stages == straight.stages

    interrupted = run_pipeline(
        bundle_paper, replay_config(run_root), run_id="gate-resumed", stop_after="build"
    )
    assert interrupted.stages["score"] == "pending"
    resumed = resume("gate-resumed", run_root=run_root)

    left = straight.stable_payload()
    right = resumed.stable_payload()
    left.pop("run_id")
    right.pop("run_id")
    assert left == right
    assert time.perf_counter() - started < 300.0


@pytest.mark.acceptance("probe determinism: same site+seed+budget, same actions and ratio")
def test_probe_reproducibility_on_the_merged_site(replay_run):
    run_dir, _ = replay_run
    site = run_dir / "merged" / "site"
    first = probe(site, seed=7, budget=16)
    second = probe(site, seed=7, budget=16)
    assert [s.action for s in first.trajectory.steps] == [
        s.action for s in second.trajectory.steps
    ]
    assert first.failure_ratio == second.failure_ratio
    assert first.site_digest == second.site_digest
    assert first.to_dict() == second.to_dict()
