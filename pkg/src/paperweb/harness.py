"""Build, render, and interaction execution against generated sites.

Every compile runs in a fresh temporary workspace so concurrent builds
never share files. Rendering goes through a pluggable engine (the offline
DOM engine by default, a real browser when one is attached); all capture
paths produce screenshots at the engine's fixed viewport.
"""

from __future__ import annotations

import json
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol, Sequence

from .actions import ProbeAction
from .errors import BuildFailure, BuildTimeout, InvalidRequest
from .minibrowser import DomEngine
from .pixels import Screenshot, image_diff, load_screenshot
from .scaffold import Scaffold

BUILD_TIMEOUT = 180.0
SETTLE_DELAY = 1.5


class PageSession(Protocol):
    console_errors: list[str]

    def screenshot(self, label: str = "") -> Screenshot: ...

    def perform(self, action: ProbeAction) -> bool: ...


class RenderEngine(Protocol):
    viewport: tuple[int, int]

    def open(self, site_dir: str | Path) -> PageSession: ...


@dataclass
class BuildResult:
    """Outcome of one compile. A success always points at a servable site."""

    status: str  # "success" or "failure"
    log: str
    site_dir: Path | None = None
    duration: float = 0.0
    timed_out: bool = False

    @property
    def ok(self) -> bool:
        return self.status == "success"

    def raise_on_failure(self) -> None:
        if self.ok:
            return
        if self.timed_out:
            raise BuildTimeout("build timed out", log=self.log)
        raise BuildFailure("build failed", log=self.log)


@dataclass
class TrajectoryStep:
    action: ProbeAction
    pre: Screenshot
    post: Screenshot
    diff: float
    resolved: bool = True


@dataclass
class InteractionTrajectory:
    steps: list[TrajectoryStep] = field(default_factory=list)
    console_errors: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def post_screenshots(self) -> list[Screenshot]:
        return [step.post for step in self.steps]


def compile(
    source: str,
    scaffold: Scaffold,
    *,
    timeout: float = BUILD_TIMEOUT,
    workspace_root: Path | None = None,
) -> BuildResult:
    """Instantiate the scaffold around ``source`` and build it in isolation.

    Compile errors and timeouts come back as failure results with the build
    log attached; only environmental problems (missing toolchain, unusable
    template) raise.
    """
    workspace = Path(tempfile.mkdtemp(prefix="paperweb-build-", dir=workspace_root))
    started = time.monotonic()
    try:
        project = scaffold.instantiate(source, workspace / "project")
        site, log = scaffold.build(project, workspace / "site", timeout=timeout)
    except BuildTimeout as exc:
        return BuildResult(
            status="failure",
            log=exc.log or str(exc),
            duration=time.monotonic() - started,
            timed_out=True,
        )
    except BuildFailure as exc:
        return BuildResult(
            status="failure",
            log=exc.log or str(exc),
            duration=time.monotonic() - started,
        )
    return BuildResult(
        status="success",
        log=log,
        site_dir=site,
        duration=time.monotonic() - started,
    )


def open_page(
    site_dir: Path,
    engine: RenderEngine | None = None,
    *,
    settle_delay: float = 0.0,
) -> PageSession:
    """Load the site's entry page. Console errors never abort the capture."""
    engine = engine or DomEngine()
    session = engine.open(site_dir)
    if settle_delay > 0:
        time.sleep(settle_delay)
    return session

def render_screenshot(
    site_dir: Path,
    engine: RenderEngine | None = None,
    *,
    label: str = "",
    settle_delay: float = 0.0,
) -> Screenshot:
    return open_page(site_dir, engine, settle_delay=settle_delay).screenshot(label)


def execute_actions(
    site_dir: Path,
    actions: Sequence[ProbeAction],
    engine: RenderEngine | None = None,
    *,
    settle_delay: float = 0.0,
) -> InteractionTrajectory:
    """Run actions in order against one live session, capturing around each.

    An action whose locator resolves to nothing is flagged unresolved and
    contributes a zero diff; execution continues.
    """
    session = open_page(site_dir, engine, settle_delay=settle_delay)
    trajectory = InteractionTrajectory()
    for index, action in enumerate(actions):
        pre = session.screenshot(label=f"step-{index:03d}-pre")
        resolved = session.perform(action)
        post = session.screenshot(label=f"step-{index:03d}-post")
        diff = image_diff(pre, post) if resolved else 0.0
        trajectory.steps.append(
            TrajectoryStep(action=action, pre=pre, post=post, diff=diff, resolved=resolved)
        )
    trajectory.console_errors = list(session.console_errors)
    return trajectory


def sample_screenshots(trajectory: InteractionTrajectory, budget: int) -> list[Screenshot]:
    """Pick up to ``budget`` post-interaction screenshots, evenly spread.

    Two or more always include the first and last step; exactly one means
    the final state; zero means none.
    """
    if budget < 0:
        raise InvalidRequest(f"screenshot budget must be non-negative, got {budget}")
    pool = trajectory.post_screenshots()
    n = len(pool)
    if budget == 0 or n == 0:
        return []
    if budget >= n:
        return list(pool)
    if budget == 1:
        return [pool[-1]]
    indices = [i * (n - 1) // (budget - 1) for i in range(budget)]
    return [pool[i] for i in indices]


# --- persistence -----------------------------------------------------------

def save_trajectory(trajectory: InteractionTrajectory, directory: Path) -> Path:
    """Write step screenshots as PNGs plus one JSON record per step."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    records = []
    for index, step in enumerate(trajectory.steps):
        pre_name = f"step-{index:03d}-pre.png"
        post_name = f"step-{index:03d}-post.png"
        step.pre.save(directory / pre_name)
        step.post.save(directory / post_name)
        records.append(
            {
                "index": index,
                "action": {
                    "kind": step.action.kind,
                    "locator": step.action.locator,
                    "value": step.action.value,
                    "delta": step.action.delta,
                },
                "pre": pre_name,
                "post": post_name,
                "diff": step.diff,
                "resolved": step.resolved,
            }
        )
    path = directory / "steps.jsonl"
    with path.open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record) + "\n")
        if trajectory.console_errors:
            handle.write(json.dumps({"console_errors": trajectory.console_errors}) + "\n")
    return path


def load_trajectory(directory: Path) -> InteractionTrajectory:
    directory = Path(directory)
    trajectory = InteractionTrajectory()
    path = directory / "steps.jsonl"
    for line in path.read_text(encoding="utf-8").splitlines():
        record = json.loads(line)
        if "console_errors" in record:
            trajectory.console_errors = list(record["console_errors"])
            continue
        raw = record["action"]
        delta = raw.get("delta")
        action = ProbeAction(
            kind=raw["kind"],
            locator=raw["locator"],
            value=raw.get("value"),
            delta=tuple(delta) if delta else None,
        )
        trajectory.steps.append(
            TrajectoryStep(
                action=action,
                pre=load_screenshot(directory / record["pre"], label=record["pre"]),
                post=load_screenshot(directory / record["post"], label=record["post"]),
                diff=record["diff"],
                resolved=record["resolved"],
            )
        )
    return trajectory
