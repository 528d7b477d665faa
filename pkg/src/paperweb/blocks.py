"""Block-level generation: k standalone candidates per planned module."""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BackendUnavailable, InvalidRequest, UnknownModule
from .gateway import ModelGateway, ModelRequest
from .planning import GenerationSpec, ModulePlanEntry, largest_fenced_block

# Every generated component must open with a module-level comment in this
# shape; the deterministic evaluator extracts descriptions from it.
MODULE_MARKER_PREFIX = "@module"
# Title capture stops before a comment terminator so HTML/JSX comment
# markers parse cleanly.
MODULE_MARKER_RE = re.compile(r"@module\s+(\d+)\s*:\s*(.+?)(?:\s*(?:-->|\*/))?\s*$", re.MULTILINE)

STATUS_GENERATED = "generated"
STATUS_GENERATED_FAILED = "generated-failed"
STATUS_BUILT = "built"
STATUS_BUILD_FAILED = "build-failed"
STATUS_SCORED = "scored"


@dataclass
class BlockCandidate:
    """One generated variant of one module."""

    module_id: int
    variant_index: int
    source: str
    status: str = STATUS_GENERATED
    model: str = ""
    seed: int | None = None
    note: str = ""


@dataclass
class BlockPrompt:
    module_id: int
    text: str


_BLOCK_PROMPT = """\
You are implementing one interactive module of a web application that \
teaches the mechanisms of a research paper. Write a standalone component \
using {stack} that implements only the functionality of this module. Do \
not reference, import, or render any other module of the application.

Module {module_id}: {title}
Mechanism: {mechanism}
User controls:
{controls}
Visual outputs:
{outputs}
Expected interaction: {interaction}

Requirements:
- The component is fully self-contained: all state, logic, and styling \
live in this one unit.
- Start the component with a comment line of the form \
`{marker} {module_id}: <one-line description of what this module does>`.
- Every listed control must exist and visibly affect the listed outputs.
- Respond with the complete source in a single fenced code block.
"""


def build_block_prompt(
    spec: GenerationSpec,
    module_id: int,
    target_stack: str = "React and TypeScript",
) -> BlockPrompt:
    """Render the generation prompt for one module of the plan."""
    entry = spec.module(module_id)
    if entry is None:
        raise UnknownModule(f"module {module_id} is not in the plan")
    text = _BLOCK_PROMPT.format(
        stack=target_stack,
        module_id=entry.module_id,
        title=entry.title,
        mechanism=entry.mechanism,
        controls="\n".join(f"- {c.as_line()}" for c in entry.controls),
        outputs="\n".join(f"- {o}" for o in entry.outputs),
        interaction=entry.interaction or "each control changes the visible output",
        marker=MODULE_MARKER_PREFIX,
    )
    return BlockPrompt(module_id=module_id, text=text)


def extract_candidate_source(response: str) -> str | None:
    """The code region of a generation response: the largest fenced block."""
    return largest_fenced_block(response)


def generate_candidates(
    spec: GenerationSpec,
    module_id: int,
    k: int,
    gateway: ModelGateway,
    *,
    model: str,
    target_stack: str = "React and TypeScript",
    temperature: float = 0.8,
    max_tokens: int = 8192,
    base_seed: int = 0,
    parallelism: int = 4,
) -> list[BlockCandidate]:
    """Generate exactly k candidates for one module.

    Variant indices 1..k are pre-assigned, so results are deterministic
    under replay regardless of completion order. Per-variant failures
    (no code region, backend refusal) are recorded as generated-failed
    candidates, never raised.
    """
    if k < 1:
        raise InvalidRequest("k must be >= 1")
    prompt = build_block_prompt(spec, module_id, target_stack)

    def one(variant_index: int) -> BlockCandidate:
        seed = base_seed + variant_index
        request = ModelRequest(
            role="block-generator",
            prompt=prompt.text,
            model=model,
            temperature=temperature,
            max_tokens=max_tokens,
            seed=seed,
        )
        try:
            response = gateway.complete(request)
        except BackendUnavailable as exc:
            return BlockCandidate(
                module_id=module_id,
                variant_index=variant_index,
                source="",
                status=STATUS_GENERATED_FAILED,
                model=model,
                seed=seed,
                note=f"backend failure: {exc}",
            )
        source = extract_candidate_source(response)
        if source is None or not source.strip():
            return BlockCandidate(
                module_id=module_id,
                variant_index=variant_index,
                source="",
                status=STATUS_GENERATED_FAILED,
                model=model,
                seed=seed,
                note="response contains no code region",
            )
        return BlockCandidate(
            module_id=module_id,
            variant_index=variant_index,
            source=source,
            status=STATUS_GENERATED,
            model=model,
            seed=seed,
        )

    if k == 1:
        return [one(1)]
    with ThreadPoolExecutor(max_workers=min(k, parallelism)) as pool:
        return list(pool.map(one, range(1, k + 1)))


def sibling_references(source: str, spec: GenerationSpec, own_module_id: int) -> list[str]:
    """Lint a candidate for references to other modules of the plan.

    Flags module markers carrying a different id and imports that name a
    sibling module component.
    """
    findings: list[str] = []
    other_ids = {mid for mid in spec.module_ids() if mid != own_module_id}
    for match in MODULE_MARKER_RE.finditer(source):
        marked = int(match.group(1))
        if marked in other_ids:
            findings.append(f"marker for foreign module {marked}")
    for mid in other_ids:
        if re.search(rf"\bimport\b[^\n]*\bModule{mid}\b", source):
            findings.append(f"import of sibling module {mid}")
    return findings
