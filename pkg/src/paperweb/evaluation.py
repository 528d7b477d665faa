"""Automatic quality evaluation of a packaged site.

Two complementary measurements: checklist matching (does the app contain
the required modules?) and interaction probing (do its controls visibly
do anything?). On top of both sits a rule-first failure classification
and a pair of complexity metrics. Matching and judging backends are
pluggable so the whole path runs deterministically offline; model-backed
variants exist for fidelity when a gateway is attached.
"""

from __future__ import annotations

import hashlib
import json
import random
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .actions import InteractiveElement, ProbeAction
from .blocks import MODULE_MARKER_RE
from .errors import EmptyChecklist, InvalidRequest
from .gateway import ModelGateway, ModelRequest
from .harness import InteractionTrajectory, RenderEngine, execute_actions, open_page
from .merging import site_digest
from .minibrowser import DomEngine
from .pixels import Screenshot, image_diff
from .textutil import count_code_tokens

DEFAULT_EPSILON = 0.002
DEFAULT_MATCH_THRESHOLD = 0.5
DEFAULT_MISALIGNMENT_FLOOR = 0.5

FAILURE_CATEGORIES = (
    "prompt-misalignment",
    "visual-grounding",
    "hallucination",
    "navigation-stuck",
    "none",
)

# item -> description confidence in [0,1]; higher is a better match
Matcher = Callable[[str, str], float]


# --- checklists ------------------------------------------------------------

@dataclass(frozen=True)
class ChecklistItem:
    item_id: str
    description: str


@dataclass
class Checklist:
    topic_id: str
    items: list[ChecklistItem] = field(default_factory=list)

    def __post_init__(self):
        ids = [item.item_id for item in self.items]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate checklist item ids in {self.topic_id}")


@dataclass(frozen=True)
class ModuleDescription:
    """What one module of the built app claims to do, keyed by its marker id."""

    description_id: int
    text: str


@dataclass
class ChecklistResult:
    """Per-item verdicts; rate is the exact matched fraction."""

    topic_id: str
    verdicts: list[tuple[str, int | None]] = field(default_factory=list)

    @property
    def matched_count(self) -> int:
        return sum(1 for _, matched in self.verdicts if matched is not None)

    @property
    def completion_rate(self) -> float:
        if not self.verdicts:
            return 0.0
        return self.matched_count / len(self.verdicts)

    def to_dict(self) -> dict:
        return {
            "topic_id": self.topic_id,
            "verdicts": [[item_id, matched] for item_id, matched in self.verdicts],
            "matched": self.matched_count,
            "total": len(self.verdicts),
            "completion_rate": self.completion_rate,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChecklistResult":
        return cls(
            topic_id=data["topic_id"],
            verdicts=[(item_id, matched) for item_id, matched in data["verdicts"]],
        )


def load_checklist(path: Path) -> Checklist:
    """Line format: ``topic: <id>`` then one ``item: <id> | <description>`` per item."""
    topic_id = ""
    items: list[ChecklistItem] = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("topic:"):
            topic_id = line.split(":", 1)[1].strip()
        elif line.startswith("item:"):
            body = line.split(":", 1)[1]
            item_id, _, description = body.partition("|")
            items.append(ChecklistItem(item_id.strip(), description.strip()))
    return Checklist(topic_id=topic_id, items=items)


def save_checklist(checklist: Checklist, path: Path) -> None:
    lines = [f"topic: {checklist.topic_id}"]
    lines += [f"item: {item.item_id} | {item.description}" for item in checklist.items]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def checklist_from_plan(spec) -> Checklist:
    """Self-checklist from a generation plan: one item per planned module.

    Used when no expert checklist exists; completion then measures how many
    planned modules survived into the final app.
    """
    items = [
        ChecklistItem(f"m{entry.module_id}", f"{entry.title}: {entry.mechanism}".strip(": "))
        for entry in spec.modules
    ]
    return Checklist(topic_id=spec.topic, items=items)


# --- module description extraction ----------------------------------------

_EXTRACTOR_PROMPT = """\
Below is the source of a single-page interactive app assembled from
numbered modules. List every module you find, one line per module, in the
form "N: what that module shows and how the user interacts with it".
Output only those lines.

```
{source}
```
"""

_DESCRIPTION_LINE = re.compile(r"^\s*(\d+)\s*[:.\-]\s*(.+?)\s*$")


def extract_module_descriptions(
    source: str,
    gateway: ModelGateway | None = None,
    *,
    model: str = "",
    mode: str = "markers",
) -> list[ModuleDescription]:
    """One description per module found in ``source``.

    "markers" reads the @module attribution comments directly; "model"
    asks the extractor backend and parses its numbered lines. Both return
    [] on sources without recognizable modules.
    """
    if not source.strip():
        raise InvalidRequest("cannot extract module descriptions from empty source")
    if mode == "markers":
        found: dict[int, str] = {}
        for match in MODULE_MARKER_RE.finditer(source):
            module_id = int(match.group(1))
            found.setdefault(module_id, match.group(2).strip())
        return [ModuleDescription(module_id, text) for module_id, text in sorted(found.items())]
    if mode != "model":
        raise InvalidRequest(f"unknown extraction mode {mode!r}")
    if gateway is None:
        raise InvalidRequest("model extraction mode needs a gateway")
    request = ModelRequest(
        role="extractor",
        prompt=_EXTRACTOR_PROMPT.format(source=source),
        model=model,
        temperature=0.0,
    )
    reply = gateway.complete(request)
    found = {}
    for line in reply.splitlines():
        match = _DESCRIPTION_LINE.match(line)
        if match:
            found.setdefault(int(match.group(1)), match.group(2))
    return [ModuleDescription(module_id, text) for module_id, text in sorted(found.items())]


# --- matching --------------------------------------------------------------

_WORD = re.compile(r"[a-z0-9]+")


def _words(text: str) -> set[str]:
    return set(_WORD.findall(text.lower()))


def exact_matcher(item: str, description: str) -> float:
    """1.0 on case/whitespace-insensitive equality, else 0.0."""
    return 1.0 if " ".join(item.lower().split()) == " ".join(description.lower().split()) else 0.0


def overlap_matcher(item: str, description: str) -> float:
    """Word-set containment: how much of the shorter side the other covers."""
    a, b = _words(item), _words(description)
    if not a or not b:
        return 0.0
    return len(a & b) / min(len(a), len(b))


def model_matcher(gateway: ModelGateway, model: str) -> Matcher:
    """Pairwise yes/no judgment; confidence 1 or 0 from the answer margin."""

    def confidence(item: str, description: str) -> float:
        request = ModelRequest(
            role="extractor",
            prompt=(
                "Does this implemented module satisfy this required checklist "
                f"item?\n\nRequired: {item}\nImplemented: {description}\n\n"
                "Answer with exactly one word, Yes or No.\nAnswer:"
            ),
            model=model,
            temperature=0.0,
            max_tokens=1,
        )
        logits = gateway.logits_for_tokens(request, ["Yes", "No"])
        return 1.0 if logits["Yes"] > logits["No"] else 0.0

    return confidence


def match_checklist(
    descriptions: Sequence[ModuleDescription],
    checklist: Checklist,
    matcher: Matcher = overlap_matcher,
    *,
    threshold: float = DEFAULT_MATCH_THRESHOLD,
) -> ChecklistResult:
    """Greedy one-to-one assignment by descending confidence.

    Ties resolve toward earlier checklist items, then earlier descriptions,
    so results never depend on dict ordering. Pairs below the threshold
    never match.
    """
    if not checklist.items:
        raise EmptyChecklist(f"checklist {checklist.topic_id!r} has no items")
    pairs = []
    for item_pos, item in enumerate(checklist.items):
        for desc_pos, description in enumerate(descriptions):
            confidence = matcher(item.description, description.text)
            if confidence >= threshold:
                pairs.append((-confidence, item_pos, desc_pos))
    pairs.sort()
    assigned: dict[int, int] = {}
    used_descriptions: set[int] = set()
    for _, item_pos, desc_pos in pairs:
        if item_pos in assigned or desc_pos in used_descriptions:
            continue
        assigned[item_pos] = desc_pos
        used_descriptions.add(desc_pos)
    verdicts: list[tuple[str, int | None]] = []
    for item_pos, item in enumerate(checklist.items):
        if item_pos in assigned:
            verdicts.append((item.item_id, descriptions[assigned[item_pos]].description_id))
        else:
            verdicts.append((item.item_id, None))
    return ChecklistResult(topic_id=checklist.topic_id, verdicts=verdicts)


def unmatched_descriptions(
    descriptions: Sequence[ModuleDescription], result: ChecklistResult
) -> list[ModuleDescription]:
    """Descriptions no checklist item claimed; raw material for rule 4."""
    claimed = {matched for _, matched in result.verdicts if matched is not None}
    return [d for d in descriptions if d.description_id not in claimed]


# --- interaction probing ---------------------------------------------------

@dataclass
class ProbeReport:
    """Outcome of random interaction probing over one site."""

    site_digest: str
    seed: int
    budget: int
    epsilon: float
    elements: list[InteractiveElement] = field(default_factory=list)
    verdicts: dict[str, bool] = field(default_factory=dict)  # locator -> changed
    trajectory: InteractionTrajectory | None = None
    trajectory_ref: str = ""
    console_errors: list[str] = field(default_factory=list)

    @property
    def probed_count(self) -> int:
        return len(self.verdicts)

    @property
    def inert_locators(self) -> list[str]:
        return [locator for locator, changed in self.verdicts.items() if not changed]

    @property
    def failure_ratio(self) -> float:
        if not self.verdicts:
            return 0.0
        return len(self.inert_locators) / len(self.verdicts)

    def per_module(self) -> dict[str, tuple[int, int]]:
        """module label -> (inert, probed), for section-level rollups."""
        by_label: dict[str, tuple[int, int]] = {}
        labels = {e.locator: e.module_label for e in self.elements}
        for locator, changed in self.verdicts.items():
            label = labels.get(locator, "")
            inert, probed = by_label.get(label, (0, 0))
            by_label[label] = (inert + (0 if changed else 1), probed + 1)
        return by_label

    def to_dict(self) -> dict:
        return {
            "site_digest": self.site_digest,
            "seed": self.seed,
            "budget": self.budget,
            "epsilon": self.epsilon,
            "elements": [
                {
                    "kind": e.kind,
                    "locator": e.locator,
                    "label": e.label,
                    "module_label": e.module_label,
                }
                for e in self.elements
            ],
            "verdicts": self.verdicts,
            "failure_ratio": self.failure_ratio,
            "trajectory_ref": self.trajectory_ref,
            "console_errors": self.console_errors,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProbeReport":
        return cls(
            site_digest=data["site_digest"],
            seed=int(data["seed"]),
            budget=int(data["budget"]),
            epsilon=float(data["epsilon"]),
            elements=[
                InteractiveElement(
                    kind=e["kind"],
                    locator=e["locator"],
                    label=e.get("label", ""),
                    module_label=e.get("module_label", ""),
                )
                for e in data.get("elements", [])
            ],
            verdicts=dict(data.get("verdicts", {})),
            trajectory_ref=data.get("trajectory_ref", ""),
            console_errors=list(data.get("console_errors", [])),
        )

    def save(self, path: Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "ProbeReport":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def detect_state_change(
    pre: Screenshot, post: Screenshot, epsilon: float = DEFAULT_EPSILON
) -> tuple[bool, float]:
    """(changed, diff): changed iff the mean pixel diff strictly exceeds epsilon."""
    diff = image_diff(pre, post)
    return diff > epsilon, diff


def extract_interactive_elements(
    site_dir: Path, engine: RenderEngine | None = None
) -> list[InteractiveElement]:
    return open_page(site_dir, engine or DomEngine()).interactive_elements()


def _mix_seed(seed: int, digest: str) -> int:
    raw = hashlib.sha256(f"{seed}:{digest}".encode("utf-8")).digest()
    return int.from_bytes(raw[:8], "big")


_TYPE_SAMPLES = ("42", "7", "probe text", "3.14")
_DRAG_X = (-60, -40, 40, 60)
_DRAG_Y = (-40, -20, 20, 40)
_SLIDER_FRACTIONS = (1.0, 0.0, 0.5, 0.75, 0.25)


def _synthesize_action(element: InteractiveElement, details: dict, rng: random.Random) -> ProbeAction:
    if element.kind == "slider":
        low = float(details.get("min", 0.0))
        high = float(details.get("max", 100.0))
        fraction = rng.choice(_SLIDER_FRACTIONS)
        return ProbeAction(kind="set-value", locator=element.locator, value=low + fraction * (high - low))
    if element.kind == "dropdown":
        options = list(details.get("options") or ())
        current = details.get("current")
        fresh = [o for o in options if o != current] or options
        value = rng.choice(fresh) if fresh else ""
        return ProbeAction(kind="select", locator=element.locator, value=value)
    if element.kind == "text-input":
        return ProbeAction(kind="type", locator=element.locator, value=rng.choice(_TYPE_SAMPLES))
    if element.kind == "drag-surface":
        return ProbeAction(
            kind="drag",
            locator=element.locator,
            delta=(rng.choice(_DRAG_X), rng.choice(_DRAG_Y)),
        )
    return ProbeAction(kind="click", locator=element.locator)


def plan_probe_actions(
    session, elements: Sequence[InteractiveElement], budget: int, rng: random.Random
) -> list[ProbeAction]:
    """Uniform random element choice per step; actions fit the element kind."""
    actions = []
    for _ in range(budget):
        element = elements[rng.randrange(len(elements))]
        details = session.element_details(element.locator) if hasattr(session, "element_details") else {}
        actions.append(_synthesize_action(element, details, rng))
    return actions


def probe(
    site_dir: Path,
    engine: RenderEngine | None = None,
    *,
    seed: int = 0,
    budget: int | None = None,
    epsilon: float = DEFAULT_EPSILON,
    elements: Sequence[InteractiveElement] | None = None,
) -> ProbeReport:
    """Randomly exercise the page and record which elements visibly react.

    The action sequence is a pure function of (site digest, seed, budget).
    Default budget is twice the element count so every element expects at
    least one probe. An element counts as changed when any of its probes
    moved the screenshot by more than epsilon; the failure ratio is the
    inert fraction of probed elements.
    """
    engine = engine or DomEngine()
    digest = site_digest(site_dir)
    session = open_page(site_dir, engine)
    found = list(elements) if elements is not None else session.interactive_elements()
    if budget is None:
        budget = 2 * len(found)
    if found and budget < 1:
        raise InvalidRequest(f"probe budget must be >= 1, got {budget}")
    report = ProbeReport(site_digest=digest, seed=seed, budget=budget, epsilon=epsilon, elements=found)
    if not found:
        report.trajectory = InteractionTrajectory()
        return report
    rng = random.Random(_mix_seed(seed, digest))
    actions = plan_probe_actions(session, found, budget, rng)
    trajectory = execute_actions(site_dir, actions, engine)
    verdicts: dict[str, bool] = {}
    for step in trajectory.steps:
        changed = step.resolved and step.diff > epsilon
        verdicts[step.action.locator] = verdicts.get(step.action.locator, False) or changed
    report.verdicts = verdicts
    report.trajectory = trajectory
    report.console_errors = list(trajectory.console_errors)
    return report


# --- failure classification ------------------------------------------------

_VISUAL_JUDGE_PROMPT = (
    "Look at this screenshot of a generated interactive page. Does it show "
    "blank regions, placeholder boxes, overlapping or clipped layout, or "
    "other signs of a broken render?\n\n"
    "Answer with exactly one word, Yes or No.\nAnswer:"
)

_CONTENT_JUDGE_PROMPT = """\
A generated app was supposed to cover only these required modules:
{items}

It additionally contains modules described as:
{extras}

Are the additional modules off-topic inventions rather than reasonable
parts of the requested scope? Answer with exactly one word, Yes or No.
Answer:"""


def gateway_visual_judge(gateway: ModelGateway, model: str) -> Callable[[Sequence[Screenshot]], bool]:
    def judge(screenshots: Sequence[Screenshot]) -> bool:
        for shot in screenshots:
            request = ModelRequest(
                role="scorer",
                prompt=_VISUAL_JUDGE_PROMPT,
                model=model,
                images=(shot.png_bytes,),
                temperature=0.0,
                max_tokens=1,
            )
            logits = gateway.logits_for_tokens(request, ["Yes", "No"])
            if logits["Yes"] > logits["No"]:
                return True
        return False

    return judge


def gateway_content_judge(
    gateway: ModelGateway, model: str, checklist: Checklist
) -> Callable[[Sequence[ModuleDescription]], bool]:
    def judge(extras: Sequence[ModuleDescription]) -> bool:
        if not extras:
            return False
        request = ModelRequest(
            role="extractor",
            prompt=_CONTENT_JUDGE_PROMPT.format(
                items="\n".join(f"- {item.description}" for item in checklist.items),
                extras="\n".join(f"- {extra.text}" for extra in extras),
            ),
            model=model,
            temperature=0.0,
            max_tokens=1,
        )
        logits = gateway.logits_for_tokens(request, ["Yes", "No"])
        return logits["Yes"] > logits["No"]

    return judge


def classify_failure(
    checklist_result: ChecklistResult | None,
    probe_report: ProbeReport,
    *,
    extras: Sequence[ModuleDescription] = (),
    visual_judge: Callable[[Sequence[Screenshot]], bool] | None = None,
    content_judge: Callable[[Sequence[ModuleDescription]], bool] | None = None,
    misalignment_floor: float = DEFAULT_MISALIGNMENT_FLOOR,
    screenshots: Sequence[Screenshot] | None = None,
) -> str:
    """Rule-first cascade; always returns exactly one category.

    Order: navigation-stuck (nothing the probes touched ever changed),
    then visual-grounding (judge flags broken renders), then
    prompt-misalignment (checklist rate below the floor), then
    hallucination (off-list modules the judge calls off-spec), else none.
    Judges that are not supplied simply cannot fire their rule. The visual
    judge sees ``screenshots`` when given (the budget-sampled set),
    otherwise every post-step capture.
    """
    trajectory = probe_report.trajectory
    diffs = [step.diff for step in trajectory.steps] if trajectory else []
    if probe_report.probed_count and probe_report.failure_ratio == 1.0:
        return "navigation-stuck"
    if diffs and all(diff <= probe_report.epsilon for diff in diffs):
        return "navigation-stuck"
    if visual_judge is not None:
        pool = list(screenshots) if screenshots is not None else (
            trajectory.post_screenshots() if trajectory else []
        )
        if pool and visual_judge(pool):
            return "visual-grounding"
    if checklist_result is not None and checklist_result.completion_rate < misalignment_floor:
        return "prompt-misalignment"
    if extras and content_judge is not None and content_judge(list(extras)):
        return "hallucination"
    return "none"


# --- complexity ------------------------------------------------------------

@dataclass(frozen=True)
class ComplexityMetrics:
    element_count: int
    code_tokens: int

    def __post_init__(self):
        if self.element_count < 0 or self.code_tokens < 0:
            raise ValueError("complexity metrics cannot be negative")


def measure_complexity(
    source: str, site_dir: Path | None, engine: RenderEngine | None = None
) -> ComplexityMetrics:
    """Interactive element count plus token length of the generated source."""
    elements = extract_interactive_elements(site_dir, engine) if site_dir else []
    return ComplexityMetrics(element_count=len(elements), code_tokens=count_code_tokens(source))


# --- combined report -------------------------------------------------------

@dataclass
class EvaluationReport:
    """Everything the evaluator says about one packaged site."""

    topic_id: str
    checklist: ChecklistResult | None
    probe: ProbeReport
    category: str
    complexity: ComplexityMetrics
    screenshots_used: int = 0

    def to_dict(self) -> dict:
        return {
            "topic_id": self.topic_id,
            "checklist": self.checklist.to_dict() if self.checklist else None,
            "probe": self.probe.to_dict(),
            "category": self.category,
            "complexity": {
                "element_count": self.complexity.element_count,
                "code_tokens": self.complexity.code_tokens,
            },
            "screenshots_used": self.screenshots_used,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvaluationReport":
        return cls(
            topic_id=data["topic_id"],
            checklist=ChecklistResult.from_dict(data["checklist"]) if data.get("checklist") else None,
            probe=ProbeReport.from_dict(data["probe"]),
            category=data["category"],
            complexity=ComplexityMetrics(
                element_count=int(data["complexity"]["element_count"]),
                code_tokens=int(data["complexity"]["code_tokens"]),
            ),
            screenshots_used=int(data.get("screenshots_used", 0)),
        )

    def save(self, path: Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "EvaluationReport":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
