"""Project scaffolds that turn generated source into a buildable site.

A scaffold owns a template directory with exactly one injection sentinel.
Instantiation copies the template into a fresh workspace and splices the
generated source at the sentinel; building turns the instantiated project
into a static site directory. Two adapters cover the two toolchains we
target: StaticScaffold for the self-contained declarative dialect the
offline engine renders, and NodeScaffold for an npm-built frontend.
"""

from __future__ import annotations

import json
import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    BuildFailure,
    BuildTimeout,
    InjectionMarkerMissing,
    ToolchainMissing,
    WorkspaceNotEmpty,
)
from .minibrowser import lint_fragment

INJECTION_MARKER = "<!-- INJECT:SOURCE -->"

_DATA = Path(__file__).resolve().parent / "data" / "scaffold"
_COPY_IGNORE = shutil.ignore_patterns("node_modules", "dist", ".git", "*.log")


@dataclass(frozen=True)
class ScaffoldTemplate:
    """Where a scaffold's assets live and how to build them.

    build_command None means the project is already a servable site and
    building reduces to a copy.
    """

    kind: str  # "block-host" or "full-app"
    root: Path
    injection_file: str
    marker: str = INJECTION_MARKER
    allowed_dependencies: tuple[str, ...] = ()
    build_command: tuple[str, ...] | None = None
    output_dir: str | None = None


class Scaffold:
    def __init__(self, template: ScaffoldTemplate):
        self.template = template

    @property
    def kind(self) -> str:
        return self.template.kind

    def instantiate(self, source: str, project_dir: Path) -> Path:
        """Copy the template and splice ``source`` at the sentinel.

        The workspace must be empty and the sentinel must appear exactly
        once in the template's injection file.
        """
        project_dir = Path(project_dir)
        if project_dir.exists() and any(project_dir.iterdir()):
            raise WorkspaceNotEmpty(f"refusing to instantiate into non-empty {project_dir}")
        if not self.template.root.is_dir():
            raise ToolchainMissing(f"scaffold template missing: {self.template.root}")
        shutil.copytree(self.template.root, project_dir, ignore=_COPY_IGNORE, dirs_exist_ok=True)
        target = project_dir / self.template.injection_file
        if not target.is_file():
            raise InjectionMarkerMissing(f"injection file missing: {self.template.injection_file}")
        text = target.read_text(encoding="utf-8")
        hits = text.count(self.template.marker)
        if hits != 1:
            raise InjectionMarkerMissing(
                f"sentinel {self.template.marker!r} appears {hits} times in "
                f"{self.template.injection_file}, need exactly 1"
            )
        target.write_text(text.replace(self.template.marker, source), encoding="utf-8")
        return project_dir

    def build(self, project_dir: Path, site_dir: Path, timeout: float = 180.0) -> tuple[Path, str]:
        raise NotImplementedError


class StaticScaffold(Scaffold):
    """No toolchain: the instantiated project is the site.

    Building still performs the static checks a real compiler would, so
    malformed generated source fails here instead of rendering garbage.
    """

    def build(self, project_dir: Path, site_dir: Path, timeout: float = 180.0) -> tuple[Path, str]:
        project_dir = Path(project_dir)
        entry = project_dir / "index.html"
        if not entry.is_file():
            raise BuildFailure("project has no index.html", log="missing entry page index.html")
        problems = lint_fragment(entry.read_text(encoding="utf-8"))
        if problems:
            raise BuildFailure("generated source failed static checks", log="\n".join(problems))
        shutil.copytree(project_dir, site_dir, dirs_exist_ok=True)
        count = sum(1 for p in Path(site_dir).rglob("*") if p.is_file())
        return Path(site_dir), f"static build ok ({count} files)"


class NodeScaffold(Scaffold):
    """Runs the template's npm build and collects its output directory."""

    def build(self, project_dir: Path, site_dir: Path, timeout: float = 180.0) -> tuple[Path, str]:
        project_dir = Path(project_dir)
        command = list(self.template.build_command or ())
        if not command:
            raise ToolchainMissing("node scaffold has no build command")
        if shutil.which(command[0]) is None:
            raise ToolchainMissing(f"build tool not on PATH: {command[0]}")
        try:
            proc = subprocess.run(
                command,
                cwd=project_dir,
                capture_output=True,
                text=True,
                timeout=timeout,
            )
        except subprocess.TimeoutExpired as exc:
            log = f"{_decode(exc.stdout)}{_decode(exc.stderr)}" or "no output before timeout"
            raise BuildTimeout(f"build exceeded {timeout:.0f}s", log=log) from exc
        log = proc.stdout + proc.stderr
        if proc.returncode != 0:
            raise BuildFailure(f"build exited with status {proc.returncode}", log=log or "no build output")
        output = project_dir / (self.template.output_dir or ".")
        if not (output / "index.html").is_file():
            raise BuildFailure("build produced no index.html", log=log or "empty build output")
        shutil.copytree(output, site_dir, dirs_exist_ok=True)
        return Path(site_dir), log or "build ok"


def static_template(kind: str) -> ScaffoldTemplate:
    return ScaffoldTemplate(kind=kind, root=_DATA / kind, injection_file="index.html")


def static_scaffold(kind: str = "block-host") -> StaticScaffold:
    return StaticScaffold(static_template(kind))


def node_template(root: Path, kind: str) -> ScaffoldTemplate:
    """Read a frontend package's scaffold descriptor (scaffold.json).

    The descriptor maps each template kind to its injection file, sentinel,
    build command, and output directory, plus a shared allowed-dependency
    list, so the Python side carries no frontend-specific constants.
    """
    root = Path(root)
    descriptor_path = root / "scaffold.json"
    if not descriptor_path.is_file():
        raise ToolchainMissing(f"no scaffold.json under {root}")
    descriptor = json.loads(descriptor_path.read_text(encoding="utf-8"))
    if kind not in descriptor:
        raise ToolchainMissing(f"scaffold.json declares no {kind!r} template")
    entry = descriptor[kind]
    return ScaffoldTemplate(
        kind=kind,
        root=root,
        injection_file=entry["injection_file"],
        marker=entry.get("marker", INJECTION_MARKER),
        allowed_dependencies=tuple(descriptor.get("allowed_dependencies", ())),
        build_command=tuple(entry.get("build", ("npm", "run", "build"))),
        output_dir=entry.get("output", "dist"),
    )


def node_scaffold(root: Path, kind: str = "block-host") -> NodeScaffold:
    return NodeScaffold(node_template(root, kind))


def audit_dependencies(project_dir: Path, allowed: tuple[str, ...]) -> list[str]:
    """Names declared in package.json that are not on the allowed list.

    Projects without a package.json declare nothing and trivially pass.
    """
    manifest = Path(project_dir) / "package.json"
    if not manifest.is_file():
        return []
    data = json.loads(manifest.read_text(encoding="utf-8"))
    declared: set[str] = set()
    for section in ("dependencies", "devDependencies"):
        declared.update(data.get(section, {}))
    return sorted(declared - set(allowed))


def _decode(raw: object) -> str:
    if raw is None:
        return ""
    if isinstance(raw, bytes):
        return raw.decode("utf-8", "replace")
    return str(raw)
