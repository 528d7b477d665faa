"""Exception hierarchy shared across the pipeline."""


class PaperwebError(Exception):
    """Base class for all pipeline errors."""


class InvalidRequest(PaperwebError):
    """A precondition on an operation's inputs was violated."""


# --- model gateway ---

class BackendUnavailable(PaperwebError):
    """The model backend could not be reached or refused the request."""


class FixtureMiss(PaperwebError):
    """Replay mode found no recorded fixture for the request key."""


class LogitsUnsupported(PaperwebError):
    """The backend cannot expose per-token logits."""


class StorageFailure(PaperwebError):
    """The fixture store could not persist or read a record."""


# --- document ingest ---

class UnreadableDocument(PaperwebError):
    """The input document could not be parsed."""


class EncryptedDocument(UnreadableDocument):
    """The input document is encrypted."""


# --- planning ---

class SpecParseError(PaperwebError):
    """Model output could not be parsed into a generation spec."""


class EmptyPlan(SpecParseError):
    """The parsed plan contains zero modules."""


class UnknownModule(PaperwebError):
    """A module id does not exist in the generation spec."""


# --- build/render harness ---

class BuildFailure(PaperwebError):
    """The web toolchain failed to compile the source; log attached."""

    def __init__(self, message: str, log: str = ""):
        super().__init__(message)
        self.log = log


class BuildTimeout(BuildFailure):
    """The build exceeded its wall-clock limit."""


class ToolchainMissing(PaperwebError):
    """The configured build toolchain executable is not installed."""


class PageLoadTimeout(PaperwebError):
    """The page did not reach the load-settle condition in time."""


class RendererCrash(PaperwebError):
    """The headless render engine died mid-session."""


class DimensionMismatch(PaperwebError):
    """Two screenshots being compared have different dimensions."""


# --- scoring / selection ---

class NoCandidates(PaperwebError):
    """Selection was asked to pick from an empty candidate list."""


# --- merging ---

class NothingToMerge(PaperwebError):
    """No selected blocks were supplied to the merger."""


class MergeParseError(PaperwebError):
    """Merger output could not be parsed into a merged application."""


class MissingModuleEntry(MergeParseError):
    """The merged app's navigation registry lacks a selected module."""


# --- evaluation ---

class EmptyChecklist(PaperwebError):
    """A checklist with zero items cannot be matched."""


# --- scaffold ---

class WorkspaceNotEmpty(PaperwebError):
    """Scaffold instantiation requires an empty workspace directory."""


class InjectionMarkerMissing(PaperwebError):
    """The scaffold template has no injection point for generated source."""


# --- orchestrator ---

class UnknownRun(PaperwebError):
    """No run directory exists for the given run id."""


class CorruptManifest(PaperwebError):
    """The run manifest on disk is unreadable or inconsistent."""


class EmptyManifest(PaperwebError):
    """The benchmark manifest contains no topics."""
