"""Research papers in, interactive web systems out.

The pipeline plans a set of interactive modules from a parsed paper,
generates k candidate implementations per module, picks winners by
scoring rendered screenshots, merges the winners into a single navigable
app, and evaluates the result by checklist matching and random
interaction probing.
"""

from .errors import PaperwebError
from .orchestrator import PipelineConfig, RunManifest, resume, run_benchmark, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "PaperwebError",
    "PipelineConfig",
    "RunManifest",
    "resume",
    "run_benchmark",
    "run_pipeline",
    "__version__",
]
