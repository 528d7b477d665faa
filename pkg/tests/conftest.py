"""Shared fixtures plus the acceptance summary plugin.

Tests marked ``acceptance("...")`` each cover one release criterion; the
terminal summary prints one PASS/FAIL line per criterion so the gate is
readable without digging through pytest output.

The replay bundle under fixtures/e2e is recorded once by its regenerate
script and committed; the session-scoped fixtures here replay it into a
shared scratch directory so every test sees the same two runs.
"""

from __future__ import annotations

from pathlib import Path

import pytest

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []

BUNDLE_DIR = Path(__file__).resolve().parent / "fixtures" / "e2e"


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(name): marks a test as covering one release criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        verdict = "PASS" if report.outcome == "passed" else report.outcome.upper()
        _ACCEPTANCE_RESULTS.append((marker.args[0], verdict))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, verdict in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{verdict:6s} {name}")


@pytest.fixture
def static_site(tmp_path):
    """Write a dialect page into a fresh site directory and return it."""

    def build(html: str, name: str = "site"):
        site_dir = tmp_path / name
        site_dir.mkdir(parents=True, exist_ok=True)
        (site_dir / "index.html").write_text(html, encoding="utf-8")
        return site_dir

    return build


def replay_config(run_root: Path, **overrides):
    """A pipeline config wired to the committed replay bundle."""
    from paperweb.orchestrator import PipelineConfig

    settings = {
        "gateway_mode": "replay",
        "fixtures_dir": str(BUNDLE_DIR / "fixtures"),
        "run_root": str(run_root),
    }
    settings.update(overrides)
    return PipelineConfig(**settings)


@pytest.fixture(scope="session")
def bundle_paper() -> Path:
    return BUNDLE_DIR / "paper.md"


@pytest.fixture(scope="session")
def replay_run(tmp_path_factory, bundle_paper):
    """One shared k=3 replay of the bundle: (run_dir, manifest)."""
    from paperweb.orchestrator import run_pipeline

    run_root = tmp_path_factory.mktemp("replay-k3")
    manifest = run_pipeline(bundle_paper, replay_config(run_root), run_id="shared-k3")
    return run_root / "shared-k3", manifest


@pytest.fixture(scope="session")
def replay_run_k1(tmp_path_factory, bundle_paper):
    """One shared k=1 replay of the bundle: (run_dir, manifest)."""
    from paperweb.orchestrator import run_pipeline

    run_root = tmp_path_factory.mktemp("replay-k1")
    manifest = run_pipeline(
        bundle_paper, replay_config(run_root, attempts=1), run_id="shared-k1"
    )
    return run_root / "shared-k1", manifest
