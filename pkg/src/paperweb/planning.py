"""Module planning: prompt the planner model and parse its module plan.

The plan travels as a fenced block tagged ``plan`` holding line-oriented
``key: value`` fields, one module stanza per ``module:`` line. The same
layout (minus the fences) is what gets persisted as the ``spec`` file in
a run directory, and parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .document import PaperDocument
from .errors import EmptyPlan, FixtureMiss, SpecParseError
from .gateway import ModelGateway, ModelRequest
from .textutil import truncate_to_tokens, whitespace_tokens

CONTROL_KINDS = ("slider", "button", "dropdown", "drag-surface", "toggle", "text-input")

TRUNCATION_MARKER = "[truncated]"

_PLANNER_INSTRUCTIONS = """\
You are an expert developer that converts research papers into interactive \
web demos. Your task is to generate an interactive educational web \
application that helps users understand the core mechanisms of a research \
paper. Before generating code, you must:

(1). Identify the key mechanisms in the paper that should be visualized.

(2). Design interactive modules that allow users to explore these mechanisms.

(3). Specify the user controls and visual outputs.

Then generate a complete single-page web application implemented using \
{stack}.

For now, produce only the module plan. Respond with exactly one fenced code \
block tagged `plan`. Inside it, write:

topic: <one-line summary of the paper>
navigation: sidebar
shell: <short description of the page shell>

then one stanza per interactive module, numbered from 1:

module: <number>
title: <short module name>
mechanism: <the mechanism this module exposes>
control: <kind> | <parameter> | <range or choices>
output: <what the user observes>
interaction: <expected visible state change per control>

Repeat `control:` and `output:` lines as needed; every module needs at \
least one of each. Allowed control kinds: slider, button, dropdown, \
drag-surface, toggle, text-input.

The paper follows.\
"""


def planner_template(target_stack: str = "React and TypeScript") -> str:
    """The fixed planner instruction text for a target output stack."""
    return _PLANNER_INSTRUCTIONS.format(stack=target_stack)


@dataclass
class Control:
    kind: str
    parameter: str
    value_range: str = ""

    def as_line(self) -> str:
        parts = [self.kind, self.parameter]
        if self.value_range:
            parts.append(self.value_range)
        return " | ".join(parts)


@dataclass
class ModulePlanEntry:
    """One numbered interactive module of the plan."""

    module_id: int
    title: str
    mechanism: str
    controls: list[Control] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)
    interaction: str = ""


@dataclass
class GenerationSpec:
    """The structured generation specification: plan plus layout."""

    topic: str
    modules: list[ModulePlanEntry]
    navigation: str = "sidebar"
    shell: str = "single-page application"

    def module(self, module_id: int) -> ModulePlanEntry | None:
        for entry in self.modules:
            if entry.module_id == module_id:
                return entry
        return None

    def module_ids(self) -> list[int]:
        return [entry.module_id for entry in self.modules]


# --- document rendering for the prompt ------------------------------------

_ABSTRACT_WORDS = ("abstract",)
_METHOD_WORDS = ("method", "approach", "algorithm", "mechanism", "model", "system")


def _section_priority(heading: str) -> int:
    lowered = heading.lower()
    if any(word in lowered for word in _ABSTRACT_WORDS):
        return 0
    if any(word in lowered for word in _METHOD_WORDS):
        return 1
    return 2


def render_document_for_prompt(doc: PaperDocument, token_budget: int) -> str:
    """Flatten the document to prompt text within a whitespace-token budget.

    The title always survives; remaining budget goes to abstract sections,
    then method-like sections, then everything else. Surviving sections
    are emitted in document order; anything cut leaves a truncation marker.
    """
    title_line = doc.title.strip()
    budget = max(0, token_budget - len(whitespace_tokens(title_line)))

    ranked = sorted(
        range(len(doc.sections)),
        key=lambda i: (_section_priority(doc.sections[i].heading), i),
    )
    kept: dict[int, str] = {}
    truncated = False
    for index in ranked:
        section = doc.sections[index]
        text = (section.heading + "\n" + section.body).strip()
        cost = len(whitespace_tokens(text))
        if cost <= budget:
            kept[index] = text
            budget -= cost
        elif budget > 0:
            kept[index] = truncate_to_tokens(text, budget, TRUNCATION_MARKER)
            budget = 0
            truncated = True
        else:
            truncated = True

    parts = [title_line] if title_line else []
    parts.extend(kept[i] for i in sorted(kept))
    if truncated and (not parts or TRUNCATION_MARKER not in parts[-1]):
        parts.append(TRUNCATION_MARKER)
    return "\n\n".join(parts)


def build_planning_prompt(
    doc: PaperDocument,
    *,
    model: str,
    target_stack: str = "React and TypeScript",
    token_budget: int = 6000,
    temperature: float = 0.0,
    max_tokens: int = 4096,
) -> ModelRequest:
    """Compose the planner request: instruction template plus paper text."""
    template = planner_template(target_stack)
    body = render_document_for_prompt(doc, token_budget)
    return ModelRequest(
        role="planner",
        prompt=template + "\n\n" + body,
        model=model,
        temperature=temperature,
        max_tokens=max_tokens,
    )


# --- wire format ----------------------------------------------------------

_FENCE = re.compile(r"```(\w*)[ \t]*\n(.*?)```", re.DOTALL)
_KEY_LINE = re.compile(r"^([a-z-]+):\s*(.*)$")


def extract_fenced_block(text: str, tag: str) -> str | None:
    """Return the body of the first fenced block with the given tag."""
    for match in _FENCE.finditer(text):
        if match.group(1) == tag:
            return match.group(2)
    return None


def largest_fenced_block(text: str) -> str | None:
    """Return the body of the largest fenced block, any tag."""
    bodies = [m.group(2) for m in _FENCE.finditer(text)]
    if not bodies:
        return None
    return max(bodies, key=len)


def serialize_spec(spec: GenerationSpec) -> str:
    lines = [
        f"topic: {spec.topic}",
        f"navigation: {spec.navigation}",
        f"shell: {spec.shell}",
    ]
    for entry in spec.modules:
        lines.append("")
        lines.append(f"module: {entry.module_id}")
        lines.append(f"title: {entry.title}")
        lines.append(f"mechanism: {entry.mechanism}")
        for control in entry.controls:
            lines.append(f"control: {control.as_line()}")
        for output in entry.outputs:
            lines.append(f"output: {output}")
        if entry.interaction:
            lines.append(f"interaction: {entry.interaction}")
    return "\n".join(lines) + "\n"


def parse_spec_text(text: str) -> GenerationSpec:
    """Parse the bare (unfenced) plan layout into a GenerationSpec.

    Raises:
        SpecParseError: malformed lines, bad module numbers, or invariant
            violations (duplicate ids, missing controls/outputs).
        EmptyPlan: no module stanzas at all.
    """
    topic = ""
    navigation = "sidebar"
    shell = "single-page application"
    modules: list[ModulePlanEntry] = []
    current: ModulePlanEntry | None = None

    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        match = _KEY_LINE.match(line)
        if not match:
            continue  # tolerate stray prose lines
        key, value = match.group(1), match.group(2).strip()
        if key == "module":
            try:
                module_id = int(value)
            except ValueError as exc:
                raise SpecParseError(f"bad module number {value!r}") from exc
            current = ModulePlanEntry(module_id=module_id, title="", mechanism="")
            modules.append(current)
        elif current is None:
            if key == "topic":
                topic = value
            elif key == "navigation":
                navigation = value
            elif key == "shell":
                shell = value
        else:
            if key == "title":
                current.title = value
            elif key == "mechanism":
                current.mechanism = value
            elif key == "control":
                parts = [p.strip() for p in value.split("|")]
                if len(parts) < 2:
                    raise SpecParseError(f"control line needs kind | parameter: {value!r}")
                current.controls.append(
                    Control(
                        kind=parts[0],
                        parameter=parts[1],
                        value_range=parts[2] if len(parts) > 2 else "",
                    )
                )
            elif key == "output":
                current.outputs.append(value)
            elif key == "interaction":
                current.interaction = (
                    current.interaction + " " + value if current.interaction else value
                )

    if not modules:
        raise EmptyPlan("plan contains no modules")
    spec = GenerationSpec(topic=topic, modules=modules, navigation=navigation, shell=shell)
    violations = validate_spec(spec)
    if violations:
        raise SpecParseError("invalid plan: " + "; ".join(violations))
    return spec


def validate_spec(spec: GenerationSpec) -> list[str]:
    """All GenerationSpec invariants; empty list means valid."""
    violations: list[str] = []
    if not spec.modules:
        violations.append("plan has no modules")
    seen: set[int] = set()
    for position, entry in enumerate(spec.modules, start=1):
        name = f"module {entry.module_id}"
        if entry.module_id in seen:
            violations.append(f"duplicate module id {entry.module_id}")
        seen.add(entry.module_id)
        if entry.module_id != position:
            violations.append(
                f"{name} out of order: ordinal {entry.module_id} at position {position}"
            )
        if not entry.controls:
            violations.append(f"{name} has no user controls")
        if not entry.outputs:
            violations.append(f"{name} has no visual outputs")
        for control in entry.controls:
            if control.kind not in CONTROL_KINDS:
                violations.append(f"{name} uses unknown control kind {control.kind!r}")
    return violations


# --- planner call ---------------------------------------------------------

_REFORMAT_SUFFIX = (
    "\n\nYour previous response could not be parsed. Respond again with "
    "exactly one fenced code block tagged `plan` in the layout described "
    "above, and nothing else."
)


def parse_plan_output(text: str) -> GenerationSpec:
    body = extract_fenced_block(text, "plan")
    if body is None:
        body = largest_fenced_block(text)
    if body is None:
        raise SpecParseError("response contains no fenced plan block")
    return parse_spec_text(body)


def plan_modules(
    doc: PaperDocument,
    gateway: ModelGateway,
    *,
    model: str,
    target_stack: str = "React and TypeScript",
    token_budget: int = 6000,
    temperature: float = 0.0,
    max_tokens: int = 4096,
) -> GenerationSpec:
    """Ask the planner model for a module plan; one reformat retry."""
    request = build_planning_prompt(
        doc,
        model=model,
        target_stack=target_stack,
        token_budget=token_budget,
        temperature=temperature,
        max_tokens=max_tokens,
    )
    response = gateway.complete(request)
    try:
        return parse_plan_output(response)
    except EmptyPlan:
        raise
    except SpecParseError as first_error:
        retry = ModelRequest(
            role="planner",
            prompt=request.prompt + _REFORMAT_SUFFIX,
            model=model,
            temperature=temperature,
            max_tokens=max_tokens,
        )
        try:
            retry_response = gateway.complete(retry)
        except FixtureMiss:
            raise first_error
        return parse_plan_output(retry_response)
