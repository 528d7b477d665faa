"""Combining winning module blocks into one navigable app.

The merger model receives every winning block plus layout instructions and
returns a single source file: a sidebar listing the modules, one module
visible at a time, no page reloads. Parsing validates that each module's
attribution marker survived the merge, since downstream evaluation
attributes failures per module through those markers.
"""

from __future__ import annotations

import hashlib
import shutil
from dataclasses import dataclass
from pathlib import Path

from . import harness
from .blocks import MODULE_MARKER_RE, extract_candidate_source
from .errors import FixtureMiss, MergeParseError, MissingModuleEntry, NothingToMerge
from .gateway import ModelGateway, ModelRequest
from .planning import GenerationSpec
from .scaffold import Scaffold

_MERGE_PROMPT = """\
You are an expert frontend developer. Below are {count} self-contained
interactive modules, each implementing one idea from the same topic:
{topic}. Integrate them into ONE single-page application.

Requirements:
- A left sidebar lists every module as "N. Title", in module order.
- Selecting a sidebar entry shows that module's block and hides the
  others, with no page reload or navigation.
- Module 1 is visible initially.
- Preserve each block's internal markup, styling, and behavior; do not
  rewrite module internals beyond what integration requires.
- Keep each block's "@module N: Title" marker comment exactly once,
  attached to that module's section.
- The result must be completely self-contained in a single {stack} file.

{blocks}

Respond with the complete merged source in a single fenced code block and
nothing else.
"""

_REFORMAT_SUFFIX = (
    "\n\nYour previous answer could not be used: {problem}. Respond again "
    "with the complete merged source in one fenced code block, keeping "
    "every @module marker."
)


@dataclass(frozen=True)
class MergedApp:
    """One self-contained source file covering every surviving module."""

    source: str
    module_ids: tuple[int, ...]
    model: str = ""


@dataclass(frozen=True)
class SiteArtifact:
    """A packaged static site ready to serve from its directory."""

    site_dir: Path
    entry: str
    digest: str
    file_count: int


def build_merge_prompt(spec: GenerationSpec, winners: dict[int, str], *, target_stack: str) -> str:
    if not winners:
        raise NothingToMerge("no winning blocks to merge")
    sections = []
    for module_id in sorted(winners):
        module = spec.module(module_id)
        sections.append(
            f"--- module {module_id}: {module.title} ---\n"
            f"```\n{winners[module_id].strip()}\n```"
        )
    return _MERGE_PROMPT.format(
        count=len(winners),
        topic=spec.topic,
        stack=target_stack,
        blocks="\n\n".join(sections),
    )


def parse_merged_output(text: str, expected_ids: tuple[int, ...]) -> MergedApp:
    """Pull the merged source out of the reply and check marker coverage."""
    source = extract_candidate_source(text)
    if source is None:
        raise MergeParseError("merger reply contains no fenced code block")
    present = {int(match.group(1)) for match in MODULE_MARKER_RE.finditer(source)}
    missing = [module_id for module_id in expected_ids if module_id not in present]
    if missing:
        raise MissingModuleEntry(
            "merged source lost module markers: " + ", ".join(str(m) for m in missing)
        )
    return MergedApp(source=source, module_ids=tuple(expected_ids))


def merge(
    spec: GenerationSpec,
    winners: dict[int, str],
    gateway: ModelGateway,
    *,
    model: str,
    target_stack: str,
) -> MergedApp:
    """One merge call with a single reformat retry on an unusable reply."""
    if not winners:
        raise NothingToMerge("no winning blocks to merge")
    expected = tuple(sorted(winners))
    prompt = build_merge_prompt(spec, winners, target_stack=target_stack)
    request = ModelRequest(role="merger", prompt=prompt, model=model, temperature=0.0)
    text = gateway.complete(request)
    try:
        app = parse_merged_output(text, expected)
    except MergeParseError as first:
        retry = ModelRequest(
            role="merger",
            prompt=prompt + _REFORMAT_SUFFIX.format(problem=first),
            model=model,
            temperature=0.0,
        )
        try:
            text = gateway.complete(retry)
        except FixtureMiss:
            raise first from None
        app = parse_merged_output(text, expected)
    return MergedApp(source=app.source, module_ids=app.module_ids, model=model)


def package(
    app: MergedApp,
    scaffold: Scaffold,
    out_dir: Path,
    *,
    timeout: float = harness.BUILD_TIMEOUT,
) -> SiteArtifact:
    """Build the merged app and land the servable site at ``out_dir``."""
    result = harness.compile(app.source, scaffold, timeout=timeout)
    result.raise_on_failure()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    shutil.copytree(result.site_dir, out_dir, dirs_exist_ok=True)
    return SiteArtifact(
        site_dir=out_dir,
        entry="index.html",
        digest=site_digest(out_dir),
        file_count=sum(1 for p in out_dir.rglob("*") if p.is_file()),
    )


def site_digest(site_dir: Path) -> str:
    """Content hash over the whole file tree, stable across copies."""
    site_dir = Path(site_dir)
    digest = hashlib.sha256()
    for path in sorted(site_dir.rglob("*")):
        if not path.is_file():
            continue
        digest.update(path.relative_to(site_dir).as_posix().encode("utf-8"))
        digest.update(b"\0")
        digest.update(path.read_bytes())
        digest.update(b"\0")
    return digest.hexdigest()
