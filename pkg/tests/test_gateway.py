"""Gateway behavior: request keys, logit resolution, record/replay, retries."""

import dataclasses

import pytest

from paperweb.errors import (
    BackendUnavailable,
    FixtureMiss,
    InvalidRequest,
    LogitsUnsupported,
)
from paperweb.gateway import (
    DEFAULT_TOKEN_ALIASES,
    FixtureStore,
    ModelGateway,
    ModelRequest,
    StaticBackend,
    TokenLogits,
    replay_key,
)


def request(**overrides) -> ModelRequest:
    base = dict(role="planner", prompt="describe the system", model="m")
    base.update(overrides)
    return ModelRequest(**base)


class TestRequestValidation:
    def test_valid_request_accepted(self):
        request().validate()

    @pytest.mark.parametrize(
        "overrides",
        [
            {"role": "unknown-role"},
            {"prompt": ""},
            {"temperature": -0.1},
            {"max_tokens": 0},
            {"role": "scorer", "targets": ("Yes",)},
        ],
    )
    def test_bad_request_rejected(self, overrides):
        with pytest.raises(InvalidRequest):
            request(**overrides).validate()

    def test_scorer_with_two_targets_accepted(self):
        request(role="scorer", targets=("Yes", "No")).validate()


class TestReplayKey:
    def test_identical_requests_share_a_key(self):
        assert replay_key(request()) == replay_key(request())

    @pytest.mark.parametrize(
        "overrides",
        [
            {"prompt": "describe the system!"},
            {"role": "merger"},
            {"model": "m2"},
            {"temperature": 0.5},
            {"max_tokens": 7},
            {"seed": 3},
            {"targets": ("Yes", "No")},
            {"images": (b"\x89PNGdata",)},
        ],
    )
    def test_any_field_change_changes_the_key(self, overrides):
        assert replay_key(request(**overrides)) != replay_key(request())

    def test_image_bytes_are_content_hashed(self):
        one = replay_key(request(images=(b"img-a",)))
        two = replay_key(request(images=(b"img-b",)))
        assert one != two


class TestTokenLogits:
    def test_lookup_by_token(self):
        logits = TokenLogits(values={"Yes": 1.5, "No": -0.5})
        assert logits["Yes"] == 1.5

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            TokenLogits(values={"Yes": float("nan")})


class TestTargetResolution:
    def gateway(self):
        backend = StaticBackend(lambda r: "ok", lambda r: {" Yes": 2.0, "no": -1.0, "the": 0.5})
        return ModelGateway(backend=backend)

    def test_aliases_cover_leading_space_and_case(self):
        logits = self.gateway().logits_for_tokens(request(), ["Yes", "No"])
        assert logits["Yes"] == 2.0
        assert logits["No"] == -1.0
        assert logits.floored == ()
        assert logits.mode == "logits"

    def test_absent_target_floored_below_worst_entry(self):
        backend = StaticBackend(lambda r: "ok", lambda r: {"Yes": 2.0, "other": -3.0})
        gateway = ModelGateway(backend=backend)
        logits = gateway.logits_for_tokens(request(), ["Yes", "No"])
        assert logits["No"] == -3.0 - ModelGateway.TOPK_FLOOR_GAP
        assert logits.floored == ("No",)
        assert logits.mode.endswith("+floor")

    def test_no_targets_rejected(self):
        with pytest.raises(InvalidRequest):
            self.gateway().logits_for_tokens(request(), [])

    def test_backend_without_logits_raises(self):
        gateway = ModelGateway(backend=StaticBackend(lambda r: "ok"))
        with pytest.raises(LogitsUnsupported):
            gateway.logits_for_tokens(request(), ["Yes", "No"])

    def test_default_aliases_list_surface_forms(self):
        assert " Yes" in DEFAULT_TOKEN_ALIASES["Yes"]
        assert " No" in DEFAULT_TOKEN_ALIASES["No"]


class TestRecordReplay:
    def test_completion_round_trip(self, tmp_path):
        backend = StaticBackend(lambda r: f"echo: {r.prompt}")
        recorder = ModelGateway(backend=backend, fixtures=tmp_path, mode="record")
        assert recorder.complete(request()) == "echo: describe the system"

        replayer = ModelGateway(fixtures=tmp_path, mode="replay")
        assert replayer.complete(request()) == "echo: describe the system"

    def test_logits_round_trip(self, tmp_path):
        backend = StaticBackend(lambda r: "ok", lambda r: {"Yes": 1.25, "No": 0.75})
        recorder = ModelGateway(backend=backend, fixtures=tmp_path, mode="record")
        recorder.logits_for_tokens(request(), ["Yes", "No"])

        replayer = ModelGateway(fixtures=tmp_path, mode="replay")
        logits = replayer.logits_for_tokens(request(), ["Yes", "No"])
        assert logits["Yes"] == 1.25
        assert logits["No"] == 0.75

    def test_replay_without_fixture_misses(self, tmp_path):
        replayer = ModelGateway(fixtures=tmp_path, mode="replay")
        with pytest.raises(FixtureMiss):
            replayer.complete(request())

    def test_completion_fixture_does_not_serve_logits(self, tmp_path):
        backend = StaticBackend(lambda r: "ok", lambda r: {"Yes": 1.0})
        recorder = ModelGateway(backend=backend, fixtures=tmp_path, mode="record")
        recorder.complete(request())
        replayer = ModelGateway(fixtures=tmp_path, mode="replay")
        with pytest.raises(FixtureMiss):
            # Same key, wrong kind: logits were never recorded.
            replayer.logits_for_tokens(
                dataclasses.replace(request(), targets=()), ["Yes", "No"]
            )

    def test_prompt_change_misses_the_fixture(self, tmp_path):
        backend = StaticBackend(lambda r: "reply")
        ModelGateway(backend=backend, fixtures=tmp_path, mode="record").complete(request())
        replayer = ModelGateway(fixtures=tmp_path, mode="replay")
        with pytest.raises(FixtureMiss):
            replayer.complete(request(prompt="describe the system twice"))

    def test_fixture_files_are_content_addressed_json(self, tmp_path):
        backend = StaticBackend(lambda r: "reply")
        ModelGateway(backend=backend, fixtures=tmp_path, mode="record").complete(request())
        files = list(tmp_path.glob("*.json"))
        assert len(files) == 1
        assert files[0].stem == replay_key(request())

    def test_set_replay_toggles_modes(self, tmp_path):
        backend = StaticBackend(lambda r: "reply")
        gateway = ModelGateway(backend=backend, fixtures=tmp_path, mode="record")
        assert gateway.set_replay(True) == "replay"
        assert gateway.set_replay(False) == "record"

    def test_replay_mode_needs_fixtures(self):
        with pytest.raises(ValueError):
            ModelGateway(backend=StaticBackend(lambda r: "x"), mode="replay")

    def test_live_mode_needs_backend(self):
        with pytest.raises(ValueError):
            ModelGateway(mode="live")

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            ModelGateway(backend=StaticBackend(lambda r: "x"), mode="cached")


class TestRetries:
    def failing_backend(self, failures: int, retryable: bool):
        calls = {"n": 0}

        def completer(r):
            calls["n"] += 1
            if calls["n"] <= failures:
                exc = BackendUnavailable("transient")
                exc.retryable = retryable
                raise exc
            return "recovered"

        return StaticBackend(completer), calls

    def test_retryable_failures_retried(self):
        backend, calls = self.failing_backend(failures=2, retryable=True)
        gateway = ModelGateway(backend=backend, retry_base_delay=0.0)
        assert gateway.complete(request()) == "recovered"
        assert calls["n"] == 3

    def test_non_retryable_failure_raises_at_once(self):
        backend, calls = self.failing_backend(failures=1, retryable=False)
        gateway = ModelGateway(backend=backend, retry_base_delay=0.0)
        with pytest.raises(BackendUnavailable):
            gateway.complete(request())
        assert calls["n"] == 1

    def test_retry_budget_exhausts(self):
        backend, calls = self.failing_backend(failures=99, retryable=True)
        gateway = ModelGateway(backend=backend, max_retries=2, retry_base_delay=0.0)
        with pytest.raises(BackendUnavailable):
            gateway.complete(request())
        assert calls["n"] == 3  # initial call plus two retries


class TestLimits:
    def test_image_budget_enforced(self):
        gateway = ModelGateway(backend=StaticBackend(lambda r: "x"), max_images=2)
        with pytest.raises(InvalidRequest):
            gateway.complete(request(images=(b"1", b"2", b"3")))

    def test_call_log_written(self, tmp_path):
        log = tmp_path / "calls.jsonl"
        gateway = ModelGateway(backend=StaticBackend(lambda r: "x"), log_path=log)
        gateway.complete(request())
        assert "model_call" in log.read_text()


class TestFixtureStore:
    def test_get_missing_returns_none(self, tmp_path):
        assert FixtureStore(tmp_path).get("nope") is None

    def test_put_then_get(self, tmp_path):
        store = FixtureStore(tmp_path)
        store.put("k", {"kind": "completion", "response": {"text": "hi"}})
        assert store.get("k")["response"]["text"] == "hi"
