"""Benchmark manifest handling and aggregate reporting.

The shipped manifest lists 19 topics across seven domain groups; each row
points at an input paper and a checklist file. Reports carry one row per
topic plus per-group arithmetic means, and always record which k produced
the scores since results are not comparable across attempt counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyManifest

GROUP_ORDER = ("Alg", "DS", "Dist", "Math", "ML", "Phys", "Sys")

_BUNDLED = Path(__file__).resolve().parent / "data" / "benchmark"


@dataclass(frozen=True)
class TopicEntry:
    abbrev: str
    topic: str
    domain: str
    originating_work: str
    checklist_ref: str
    paper_ref: str

    @property
    def group(self) -> str:
        return self.abbrev.split("-", 1)[0]


@dataclass
class BenchmarkManifest:
    entries: list[TopicEntry] = field(default_factory=list)
    source: str = ""

    def __post_init__(self):
        seen: set[str] = set()
        for entry in self.entries:
            if entry.abbrev in seen:
                raise ValueError(f"duplicate benchmark abbreviation {entry.abbrev!r}")
            seen.add(entry.abbrev)

    def entry(self, abbrev: str) -> TopicEntry:
        for candidate in self.entries:
            if candidate.abbrev == abbrev:
                return candidate
        raise KeyError(abbrev)


def load_manifest(path: Path) -> BenchmarkManifest:
    """Tab-separated rows; first line is the header, ``#`` lines are comments."""
    path = Path(path)
    lines = [
        line
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        return BenchmarkManifest(entries=[], source=str(path))
    header = [column.strip() for column in lines[0].split("\t")]
    entries = []
    for line in lines[1:]:
        cells = dict(zip(header, (cell.strip() for cell in line.split("\t"))))
        entries.append(
            TopicEntry(
                abbrev=cells["abbrev"],
                topic=cells["topic"],
                domain=cells["domain"],
                originating_work=cells.get("originating_work", ""),
                checklist_ref=cells.get("checklist", ""),
                paper_ref=cells.get("paper", ""),
            )
        )
    return BenchmarkManifest(entries=entries, source=str(path))


def bundled_manifest() -> BenchmarkManifest:
    return load_manifest(_BUNDLED / "topics.tsv")


def bundled_data_dir() -> Path:
    return _BUNDLED


@dataclass
class TopicResult:
    """One benchmark row; failed topics keep their error and score nothing."""

    abbrev: str
    status: str  # "ok" or "failed"
    completion_rate: float | None = None
    failure_ratio: float | None = None
    category: str = ""
    run_id: str = ""
    error: str = ""
    scores: dict = field(default_factory=dict)  # labeled extra scores

    def to_dict(self) -> dict:
        return {
            "abbrev": self.abbrev,
            "status": self.status,
            "completion_rate": self.completion_rate,
            "failure_ratio": self.failure_ratio,
            "category": self.category,
            "run_id": self.run_id,
            "error": self.error,
            "scores": self.scores,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TopicResult":
        return cls(
            abbrev=data["abbrev"],
            status=data["status"],
            completion_rate=data.get("completion_rate"),
            failure_ratio=data.get("failure_ratio"),
            category=data.get("category", ""),
            run_id=data.get("run_id", ""),
            error=data.get("error", ""),
            scores=dict(data.get("scores", {})),
        )


def _mean(values: list[float]) -> float | None:
    if not values:
        return None
    return sum(values) / len(values)


@dataclass
class BenchmarkReport:
    bench_id: str
    attempts: int
    results: list[TopicResult] = field(default_factory=list)

    def __post_init__(self):
        if not self.results:
            raise EmptyManifest("benchmark report needs at least one topic result")

    def group_rollups(self) -> dict:
        """Per-group arithmetic means over topics that completed."""
        grouped: dict[str, list[TopicResult]] = {}
        for result in self.results:
            group = result.abbrev.split("-", 1)[0]
            grouped.setdefault(group, []).append(result)
        rollups = {}
        for group in sorted(grouped, key=lambda g: (GROUP_ORDER.index(g) if g in GROUP_ORDER else 99, g)):
            members = grouped[group]
            done = [r for r in members if r.status == "ok"]
            rollups[group] = {
                "topics": len(members),
                "completed": len(done),
                "completion_rate": _mean([r.completion_rate for r in done if r.completion_rate is not None]),
                "failure_ratio": _mean([r.failure_ratio for r in done if r.failure_ratio is not None]),
            }
        return rollups

    def overall(self) -> dict:
        done = [r for r in self.results if r.status == "ok"]
        return {
            "topics": len(self.results),
            "completed": len(done),
            "completion_rate": _mean([r.completion_rate for r in done if r.completion_rate is not None]),
            "failure_ratio": _mean([r.failure_ratio for r in done if r.failure_ratio is not None]),
        }

    def to_dict(self) -> dict:
        return {
            "bench_id": self.bench_id,
            "attempts": self.attempts,
            "results": [result.to_dict() for result in self.results],
            "groups": self.group_rollups(),
            "overall": self.overall(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BenchmarkReport":
        return cls(
            bench_id=data["bench_id"],
            attempts=int(data["attempts"]),
            results=[TopicResult.from_dict(row) for row in data["results"]],
        )

    def save(self, path: Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "BenchmarkReport":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
