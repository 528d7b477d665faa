"""Screenshot judging and best-of-k candidate selection.

Each rendered candidate is judged by a vision model answering a single
Yes/No question; the first-position logits of the two answer tokens become
the candidate's score. Selection takes the highest yes-minus-no margin,
treating unbuildable candidates as unbeatable losers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import NoCandidates
from .gateway import ModelGateway, ModelRequest
from .pixels import Screenshot
from .planning import GenerationSpec, ModulePlanEntry

ANSWER_TOKENS = ("Yes", "No")

_SCORING_PROMPT = """\
You are judging a screenshot of one interactive web module.

Topic: {topic}
Module {module_id}: {title}
Mechanism: {mechanism}
Expected controls:
{controls}
Expected outputs:
{outputs}
Intended interaction: {interaction}

Decide whether the screenshot shows a working, visually complete
implementation of this module: the mechanism is recognizable, the listed
controls and outputs are present, the layout is not broken, and the page
is not blank or an error screen.

Answer with exactly one word, Yes or No.
Answer:"""


@dataclass(frozen=True)
class QualityScore:
    """Answer-token logits for one judged screenshot.

    ranking_key is the margin used for ordering. ratio reproduces the
    historical yes/no quotient and is undefined (None) unless the No logit
    is strictly positive, since the quotient flips sign there.
    """

    yes_logit: float
    no_logit: float
    mode: str = "logits"
    floored: tuple[str, ...] = ()

    @property
    def ranking_key(self) -> float:
        return self.yes_logit - self.no_logit

    @property
    def ratio(self) -> float | None:
        if self.no_logit > 0:
            return self.yes_logit / self.no_logit
        return None

    def to_dict(self) -> dict:
        return {
            "yes_logit": self.yes_logit,
            "no_logit": self.no_logit,
            "mode": self.mode,
            "floored": list(self.floored),
            "ranking_key": self.ranking_key,
            "ratio": self.ratio,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "QualityScore":
        return cls(
            yes_logit=float(data["yes_logit"]),
            no_logit=float(data["no_logit"]),
            mode=data.get("mode", "logits"),
            floored=tuple(data.get("floored", ())),
        )


@dataclass
class ScoredCandidate:
    """One candidate's selection inputs; score is None when it never rendered."""

    variant_index: int
    status: str
    score: QualityScore | None = None

    def key(self, mode: str = "margin") -> float:
        if self.score is None:
            return float("-inf")
        if mode == "ratio":
            ratio = self.score.ratio
            return ratio if ratio is not None else float("-inf")
        return self.score.ranking_key


@dataclass
class SelectionRecord:
    """Why one variant won a module: every candidate's score plus the pick."""

    module_id: int
    winner_index: int
    candidates: list[ScoredCandidate] = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "module_id": self.module_id,
            "winner_index": self.winner_index,
            "note": self.note,
            "candidates": [
                {
                    "variant_index": entry.variant_index,
                    "status": entry.status,
                    "score": entry.score.to_dict() if entry.score else None,
                }
                for entry in self.candidates
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SelectionRecord":
        return cls(
            module_id=int(data["module_id"]),
            winner_index=int(data["winner_index"]),
            note=data.get("note", ""),
            candidates=[
                ScoredCandidate(
                    variant_index=int(entry["variant_index"]),
                    status=entry["status"],
                    score=QualityScore.from_dict(entry["score"]) if entry["score"] else None,
                )
                for entry in data.get("candidates", [])
            ],
        )

    def save(self, path: Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "SelectionRecord":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def build_scoring_prompt(spec: GenerationSpec, module: ModulePlanEntry) -> str:
    controls = "\n".join(f"- {control.as_line()}" for control in module.controls) or "- (none listed)"
    outputs = "\n".join(f"- {output}" for output in module.outputs) or "- (none listed)"
    return _SCORING_PROMPT.format(
        topic=spec.topic,
        module_id=module.module_id,
        title=module.title,
        mechanism=module.mechanism,
        controls=controls,
        outputs=outputs,
        interaction=module.interaction,
    )


def score_screenshot(
    screenshot: Screenshot,
    spec: GenerationSpec,
    module_id: int,
    gateway: ModelGateway,
    *,
    model: str,
) -> QualityScore:
    """Judge one rendered candidate; deterministic given identical inputs."""
    module = spec.module(module_id)
    request = ModelRequest(
        role="scorer",
        prompt=build_scoring_prompt(spec, module),
        model=model,
        images=(screenshot.png_bytes,),
        temperature=0.0,
        max_tokens=1,
    )
    logits = gateway.logits_for_tokens(request, list(ANSWER_TOKENS))
    return QualityScore(
        yes_logit=logits["Yes"],
        no_logit=logits["No"],
        mode=logits.mode,
        floored=logits.floored,
    )


def select_best(
    module_id: int, candidates: Sequence[ScoredCandidate], *, key: str = "margin"
) -> SelectionRecord:
    """Argmax of the selection key; ties go to the lowest variant index.

    ``key`` "margin" orders by yes-minus-no; "ratio" orders by the quotient
    and treats undefined ratios as unbeatable losers. Candidates without a
    score never win. Raises NoCandidates when nothing scored, since there
    is no renderable variant to merge.
    """
    entries = sorted(candidates, key=lambda entry: entry.variant_index)
    if not entries:
        raise NoCandidates(f"module {module_id} has no candidates")
    best: ScoredCandidate | None = None
    tied = False
    for entry in entries:
        if entry.score is None:
            continue
        if best is None or entry.key(key) > best.key(key):
            best = entry
            tied = False
        elif entry.key(key) == best.key(key):
            tied = True
    if best is None:
        raise NoCandidates(f"module {module_id}: every candidate failed before scoring")
    note = "tie broken toward lowest variant index" if tied else ""
    return SelectionRecord(
        module_id=module_id,
        winner_index=best.variant_index,
        candidates=list(entries),
        note=note,
    )
