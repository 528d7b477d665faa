"""Uniform access to text/vision model backends.

One gateway serves every model role in the pipeline (planner, block
generator, merger, scorer, extractor, prober). It offers plain text
completion plus first-position token logits, and a deterministic
record/replay fixture mode so the whole pipeline can run byte-identically
with no network.

Fixtures are content-addressed JSON files keyed by a stable hash of the
request, so they are diff-able and committable test assets.
"""

from __future__ import annotations

import base64
import json
import math
import os
import threading
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Protocol

import httpx

from .errors import (
    BackendUnavailable,
    FixtureMiss,
    InvalidRequest,
    LogitsUnsupported,
    StorageFailure,
)
from .textutil import sha256_hex

ROLES = ("planner", "block-generator", "merger", "scorer", "extractor", "prober")

# Surface forms tried, in order, when resolving a canonical answer token
# against a backend's token->logit map. Chat tokenizers commonly emit the
# answer with a leading space.
DEFAULT_TOKEN_ALIASES: dict[str, tuple[str, ...]] = {
    "Yes": ("Yes", " Yes", "yes", " yes"),
    "No": ("No", " No", "no", " no"),
}


@dataclass(frozen=True)
class ModelRequest:
    """One model call: prompt, optional images, and sampling parameters."""

    role: str
    prompt: str
    model: str
    images: tuple[bytes, ...] = ()
    temperature: float = 0.0
    max_tokens: int = 4096
    seed: int | None = None
    targets: tuple[str, ...] = ()

    def validate(self) -> None:
        if self.role not in ROLES:
            raise InvalidRequest(f"unknown role {self.role!r}")
        if not self.prompt:
            raise InvalidRequest("request has an empty prompt")
        if self.temperature < 0:
            raise InvalidRequest("temperature must be >= 0")
        if self.max_tokens <= 0:
            raise InvalidRequest("max_tokens must be > 0")
        if self.role == "scorer" and self.targets and len(self.targets) != 2:
            raise InvalidRequest("scorer requests name exactly two answer tokens")


@dataclass
class TokenLogits:
    """First-position logits for the requested answer tokens.

    ``mode`` records how the values were produced ("logits" for direct
    logit access, "logprobs-topk" when top-k log-probabilities stand in
    for logits); ``floored`` lists targets that were absent from a top-k
    response and assigned the floor value.
    """

    values: dict[str, float]
    mode: str = "logits"
    floored: tuple[str, ...] = ()

    def __post_init__(self):
        for token, value in self.values.items():
            if not math.isfinite(value):
                raise ValueError(f"non-finite logit for {token!r}")

    def __getitem__(self, token: str) -> float:
        return self.values[token]


def replay_key(request: ModelRequest) -> str:
    """Stable content hash of a request.

    Identical requests produce identical keys; any byte change to the
    prompt, an image, a sampling parameter, or the model id changes it.
    """
    payload = {
        "role": request.role,
        "prompt": request.prompt,
        "images": [sha256_hex(img) for img in request.images],
        "temperature": request.temperature,
        "max_tokens": request.max_tokens,
        "seed": request.seed,
        "model": request.model,
        "targets": list(request.targets),
    }
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return sha256_hex(canonical.encode("utf-8"))


class ModelBackend(Protocol):
    """Minimal surface a live backend must provide."""

    supports_logits: bool

    def complete(self, request: ModelRequest) -> str: ...

    def token_logits(self, request: ModelRequest) -> dict[str, float]:
        """Raw token->logit map at the first generated position."""
        ...


class HttpBackend:
    """OpenAI-compatible chat-completions backend over HTTP.

    Endpoint and key come from PAPERWEB_BACKEND_URL / PAPERWEB_API_KEY
    unless passed explicitly. Logits are served from the endpoint's
    top-k logprobs when available.
    """

    def __init__(
        self,
        url: str | None = None,
        api_key: str | None = None,
        timeout: float = 120.0,
        top_logprobs: int = 20,
    ):
        self.url = url or os.environ.get("PAPERWEB_BACKEND_URL", "")
        self.api_key = api_key or os.environ.get("PAPERWEB_API_KEY", "")
        self.timeout = timeout
        self.top_logprobs = top_logprobs
        self.supports_logits = True  # via logprobs; flips off on first refusal

    def _post(self, payload: dict) -> dict:
        if not self.url:
            raise BackendUnavailable("no backend URL configured")
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        try:
            resp = httpx.post(self.url, json=payload, headers=headers, timeout=self.timeout)
        except httpx.TransportError as exc:
            err = BackendUnavailable(f"transport error: {exc}")
            err.retryable = True
            raise err from exc
        if resp.status_code != 200:
            raise BackendUnavailable(f"backend returned HTTP {resp.status_code}: {resp.text[:500]}")
        return resp.json()

    def _messages(self, request: ModelRequest) -> list[dict]:
        if request.images:
            content: list[dict] = [{"type": "text", "text": request.prompt}]
            for img in request.images:
                data = base64.b64encode(img).decode("ascii")
                content.append(
                    {"type": "image_url", "image_url": {"url": f"data:image/png;base64,{data}"}}
                )
            return [{"role": "user", "content": content}]
        return [{"role": "user", "content": request.prompt}]

    def complete(self, request: ModelRequest) -> str:
        payload = {
            "model": request.model,
            "messages": self._messages(request),
            "temperature": request.temperature,
            "max_tokens": request.max_tokens,
        }
        if request.seed is not None:
            payload["seed"] = request.seed
        data = self._post(payload)
        try:
            return data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise BackendUnavailable(f"malformed completion response: {exc}") from exc

    def token_logits(self, request: ModelRequest) -> dict[str, float]:
        payload = {
            "model": request.model,
            "messages": self._messages(request),
            "temperature": request.temperature,
            "max_tokens": 1,
            "logprobs": True,
            "top_logprobs": self.top_logprobs,
        }
        data = self._post(payload)
        try:
            top = data["choices"][0]["logprobs"]["content"][0]["top_logprobs"]
            return {entry["token"]: float(entry["logprob"]) for entry in top}
        except (KeyError, IndexError, TypeError) as exc:
            self.supports_logits = False
            raise LogitsUnsupported(f"endpoint exposes no logprobs: {exc}") from exc


class StaticBackend:
    """Deterministic in-process backend driven by caller-supplied handlers.

    Used for offline development and for scripting the fixture bundles
    that record/replay tests run against.
    """

    def __init__(
        self,
        completer: Callable[[ModelRequest], str],
        logit_fn: Callable[[ModelRequest], dict[str, float]] | None = None,
    ):
        self._completer = completer
        self._logit_fn = logit_fn
        self.supports_logits = logit_fn is not None

    def complete(self, request: ModelRequest) -> str:
        return self._completer(request)

    def token_logits(self, request: ModelRequest) -> dict[str, float]:
        if self._logit_fn is None:
            raise LogitsUnsupported("static backend has no logit handler")
        return self._logit_fn(request)


class FixtureStore:
    """Content-addressed fixture files under one directory.

    Concurrent reads are lock-free; writes take an exclusive lock and go
    through a temp-file rename so readers never see partial records.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._write_lock = threading.Lock()

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise StorageFailure(f"unreadable fixture {path}: {exc}") from exc

    def put(self, key: str, record: dict) -> Path:
        path = self._path(key)
        try:
            with self._write_lock:
                self.root.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(".tmp")
                tmp.write_text(
                    json.dumps(record, sort_keys=True, indent=2) + "\n", encoding="utf-8"
                )
                tmp.replace(path)
        except OSError as exc:
            raise StorageFailure(f"cannot write fixture {path}: {exc}") from exc
        return path


class ModelGateway:
    """Thread-safe facade over a backend with record/replay fixtures.

    Modes:
      live    - call the backend directly.
      record  - call the backend and persist each response as a fixture.
      replay  - serve fixtures only; never touches the network.
    """

    TOPK_FLOOR_GAP = 2.0  # logit assigned below the worst returned entry

    def __init__(
        self,
        backend: ModelBackend | None = None,
        fixtures: FixtureStore | str | Path | None = None,
        mode: str = "live",
        max_images: int = 8,
        max_concurrency: int = 4,
        max_retries: int = 3,
        retry_base_delay: float = 0.25,
        token_aliases: dict[str, tuple[str, ...]] | None = None,
        log_path: str | Path | None = None,
    ):
        if mode not in ("live", "record", "replay"):
            raise ValueError(f"unknown gateway mode {mode!r}")
        if mode != "replay" and backend is None:
            raise ValueError("live/record mode needs a backend")
        if mode in ("record", "replay") and fixtures is None:
            raise ValueError("record/replay mode needs a fixture store")
        self.backend = backend
        self.fixtures = (
            fixtures if isinstance(fixtures, FixtureStore) or fixtures is None
            else FixtureStore(fixtures)
        )
        self.mode = mode
        self.max_images = max_images
        self.max_retries = max_retries
        self.retry_base_delay = retry_base_delay
        self.token_aliases = dict(token_aliases or DEFAULT_TOKEN_ALIASES)
        self.log_path = Path(log_path) if log_path else None
        self._limiter = threading.Semaphore(max_concurrency)
        self._log_lock = threading.Lock()

    # -- mode control -------------------------------------------------

    def set_replay(self, on: bool) -> str:
        """Toggle replay mode; returns the resulting mode."""
        if on:
            if self.fixtures is None:
                raise ValueError("cannot enter replay mode without a fixture store")
            self.mode = "replay"
        else:
            if self.backend is None:
                raise ValueError("cannot leave replay mode without a backend")
            self.mode = "record" if self.fixtures is not None else "live"
        return self.mode

    # -- public operations --------------------------------------------

    def complete(self, request: ModelRequest) -> str:
        request.validate()
        self._check_images(request)
        key = replay_key(request)
        started = time.monotonic()
        if self.mode == "replay":
            record = self._lookup(key, kind="completion")
            self._log(request, key, "replay", started)
            return record["response"]["text"]
        text = self._call_backend(lambda: self.backend.complete(request))
        if self.mode == "record":
            self.record(request, {"text": text}, kind="completion")
        self._log(request, key, self.mode, started)
        return text

    def logits_for_tokens(self, request: ModelRequest, targets: list[str]) -> TokenLogits:
        if not targets:
            raise InvalidRequest("no target tokens requested")
        request = replace(request, targets=tuple(targets))
        request.validate()
        self._check_images(request)
        key = replay_key(request)
        started = time.monotonic()
        if self.mode == "replay":
            record = self._lookup(key, kind="logits")
            raw = {k: float(v) for k, v in record["response"]["logits"].items()}
            mode = record["response"].get("mode", "logits")
        else:
            raw = self._call_backend(lambda: self.backend.token_logits(request))
            mode = "logits" if getattr(self.backend, "supports_logits", False) else "logprobs-topk"
            if isinstance(self.backend, HttpBackend):
                mode = "logprobs-topk"
            if self.mode == "record":
                self.record(request, {"logits": raw, "mode": mode}, kind="logits")
        self._log(request, key, self.mode, started)
        return self._resolve_targets(raw, list(targets), mode)

    def record(self, request: ModelRequest, response: dict, kind: str = "completion") -> Path:
        """Persist a request/response pair as a content-addressed fixture."""
        if self.fixtures is None:
            raise StorageFailure("no fixture store configured")
        key = replay_key(request)
        return self.fixtures.put(
            key,
            {
                "key": key,
                "kind": kind,
                "role": request.role,
                "model": request.model,
                "prompt": request.prompt,
                "images": [sha256_hex(img) for img in request.images],
                "temperature": request.temperature,
                "max_tokens": request.max_tokens,
                "seed": request.seed,
                "targets": list(request.targets),
                "response": response,
            },
        )

    # -- internals ----------------------------------------------------

    def _check_images(self, request: ModelRequest) -> None:
        if len(request.images) > self.max_images:
            raise InvalidRequest(
                f"{len(request.images)} images exceed the budget of {self.max_images}"
            )

    def _lookup(self, key: str, kind: str) -> dict:
        record = self.fixtures.get(key)
        if record is None or record.get("kind") != kind:
            raise FixtureMiss(f"no recorded {kind} fixture for key {key}")
        return record

    def _call_backend(self, call):
        last_exc: Exception | None = None
        with self._limiter:
            for attempt in range(self.max_retries + 1):
                try:
                    return call()
                except BackendUnavailable as exc:
                    last_exc = exc
                    if not getattr(exc, "retryable", False) or attempt == self.max_retries:
                        raise
                    time.sleep(self.retry_base_delay * (2 ** attempt))
        raise last_exc  # pragma: no cover - loop always returns or raises

    def _resolve_targets(
        self, raw: dict[str, float], targets: list[str], mode: str
    ) -> TokenLogits:
        values: dict[str, float] = {}
        floored: list[str] = []
        floor = (min(raw.values()) - self.TOPK_FLOOR_GAP) if raw else -100.0
        for target in targets:
            surfaces = self.token_aliases.get(target, (target,))
            for surface in surfaces:
                if surface in raw:
                    values[target] = float(raw[surface])
                    break
            else:
                values[target] = floor
                floored.append(target)
        tag = mode if not floored else f"{mode}+floor"
        return TokenLogits(values=values, mode=tag, floored=tuple(floored))

    def _log(self, request: ModelRequest, key: str, mode: str, started: float) -> None:
        if self.log_path is None:
            return
        line = json.dumps(
            {
                "event": "model_call",
                "role": request.role,
                "model": request.model,
                "key": key,
                "mode": mode,
                "elapsed_ms": int((time.monotonic() - started) * 1000),
            },
            sort_keys=True,
        )
        with self._log_lock:
            self.log_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.log_path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
