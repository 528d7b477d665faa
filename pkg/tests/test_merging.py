"""Merging winning blocks into one app and packaging it as a site."""

from __future__ import annotations

import pytest

from paperweb.errors import (
    BuildFailure,
    FixtureMiss,
    MergeParseError,
    MissingModuleEntry,
    NothingToMerge,
)
from paperweb.gateway import ModelGateway, StaticBackend
from paperweb.merging import (
    MergedApp,
    build_merge_prompt,
    merge,
    package,
    parse_merged_output,
    site_digest,
)
from paperweb.planning import parse_spec_text
from paperweb.scaffold import static_scaffold

SPEC = parse_spec_text(
    "topic: Sorting networks\n"
    "module: 1\n"
    "title: Comparator Grid\n"
    "mechanism: wire swaps in a fixed network\n"
    "control: button | run one comparator\n"
    "output: wire diagram\n"
    "\n"
    "module: 2\n"
    "title: Depth Counter\n"
    "mechanism: parallel stages of the network\n"
    "control: slider | input size | 2..16\n"
    "output: stage histogram\n"
)

BLOCK_1 = '<!-- @module 1: Comparator Grid -->\n<div data-state=\'{"a": 1}\'>one</div>'
BLOCK_2 = "<!-- @module 2: Depth Counter -->\n<div>two</div>"

MERGED = (
    "<body>\n"
    "<!-- @module 1: Comparator Grid -->\n<section>one</section>\n"
    "<!-- @module 2: Depth Counter -->\n<section>two</section>\n"
    "</body>"
)
GOOD_REPLY = f"Here you go.\n\n```html\n{MERGED}\n```\n"


class ScriptedMerger:
    def __init__(self, *steps):
        self.steps = list(steps)
        self.prompts: list[str] = []

    def __call__(self, request):
        self.prompts.append(request.prompt)
        step = self.steps.pop(0)
        if isinstance(step, Exception):
            raise step
        return step


def live_gateway(merger) -> ModelGateway:
    return ModelGateway(backend=StaticBackend(merger), mode="live")


class TestMergePrompt:
    def test_sections_are_sorted_and_fenced(self):
        prompt = build_merge_prompt(
            SPEC, {2: BLOCK_2, 1: BLOCK_1}, target_stack="HTML"
        )
        first = prompt.index("--- module 1: Comparator Grid ---")
        second = prompt.index("--- module 2: Depth Counter ---")
        assert first < second
        assert f"--- module 1: Comparator Grid ---\n```\n{BLOCK_1}\n```" in prompt
        assert f"--- module 2: Depth Counter ---\n```\n{BLOCK_2}\n```" in prompt

    def test_prompt_states_the_layout_contract(self):
        prompt = build_merge_prompt(SPEC, {1: BLOCK_1, 2: BLOCK_2}, target_stack="HTML")
        assert '"N. Title"' in prompt
        assert "Module 1 is visible initially" in prompt
        assert "2 self-contained" in prompt
        assert "Sorting networks" in prompt
        assert "single HTML file" in prompt

    def test_block_sources_are_stripped(self):
        prompt = build_merge_prompt(SPEC, {1: "\n\n" + BLOCK_1 + "\n\n"}, target_stack="HTML")
        assert f"```\n{BLOCK_1}\n```" in prompt

    def test_empty_winner_set_is_rejected(self):
        with pytest.raises(NothingToMerge):
            build_merge_prompt(SPEC, {}, target_stack="HTML")


class TestParseMergedOutput:
    def test_happy_path_keeps_expected_ids(self):
        app = parse_merged_output(GOOD_REPLY, (1, 2))
        assert app.source == MERGED + "\n"
        assert app.module_ids == (1, 2)

    def test_reply_without_code_block(self):
        with pytest.raises(MergeParseError, match="no fenced code block"):
            parse_merged_output("I merged them, trust me.", (1, 2))

    def test_lost_marker_is_reported_with_ids(self):
        reply = "```html\n<!-- @module 1: Comparator Grid -->\n<div>only one</div>\n```"
        with pytest.raises(MissingModuleEntry, match="lost module markers: 2"):
            parse_merged_output(reply, (1, 2))

    def test_every_missing_id_is_listed(self):
        reply = "```html\n<div>none at all</div>\n```"
        with pytest.raises(MissingModuleEntry, match="lost module markers: 1, 2"):
            parse_merged_output(reply, (1, 2))

    def test_missing_module_entry_is_a_merge_parse_error(self):
        assert issubclass(MissingModuleEntry, MergeParseError)


class TestMergeCall:
    WINNERS = {1: BLOCK_1, 2: BLOCK_2}

    def test_happy_path(self):
        merger = ScriptedMerger(GOOD_REPLY)
        app = merge(SPEC, self.WINNERS, live_gateway(merger), model="m-1", target_stack="HTML")
        assert app == MergedApp(source=MERGED + "\n", module_ids=(1, 2), model="m-1")
        assert len(merger.prompts) == 1

    def test_empty_winners_never_call_the_model(self):
        merger = ScriptedMerger()
        with pytest.raises(NothingToMerge):
            merge(SPEC, {}, live_gateway(merger), model="m", target_stack="HTML")
        assert merger.prompts == []

    def test_unusable_reply_gets_one_retry_with_problem_text(self):
        merger = ScriptedMerger("no code here", GOOD_REPLY)
        app = merge(SPEC, self.WINNERS, live_gateway(merger), model="m", target_stack="HTML")
        assert app.module_ids == (1, 2)
        assert len(merger.prompts) == 2
        assert "could not be used" in merger.prompts[1]
        assert "no fenced code block" in merger.prompts[1]
        assert merger.prompts[1].startswith(merger.prompts[0])

    def test_lost_marker_also_triggers_the_retry(self):
        partial = "```html\n<!-- @module 1: Comparator Grid -->\n<div>one</div>\n```"
        merger = ScriptedMerger(partial, GOOD_REPLY)
        app = merge(SPEC, self.WINNERS, live_gateway(merger), model="m", target_stack="HTML")
        assert app.module_ids == (1, 2)
        assert "lost module markers: 2" in merger.prompts[1]

    def test_second_bad_reply_propagates(self):
        merger = ScriptedMerger("prose", "more prose")
        with pytest.raises(MergeParseError):
            merge(SPEC, self.WINNERS, live_gateway(merger), model="m", target_stack="HTML")
        assert len(merger.prompts) == 2

    def test_fixture_miss_on_retry_reports_first_error(self):
        merger = ScriptedMerger("prose", FixtureMiss("nothing recorded"))
        with pytest.raises(MergeParseError, match="no fenced code block"):
            merge(SPEC, self.WINNERS, live_gateway(merger), model="m", target_stack="HTML")


class TestPackage:
    def test_package_lands_a_digested_site(self, tmp_path):
        app = MergedApp(source=MERGED, module_ids=(1, 2))
        artifact = package(app, static_scaffold("full-app"), tmp_path / "site")
        assert artifact.site_dir == tmp_path / "site"
        assert artifact.entry == "index.html"
        assert artifact.file_count == 1
        assert artifact.digest == site_digest(tmp_path / "site")
        assert MERGED in (tmp_path / "site" / "index.html").read_text(encoding="utf-8")

    def test_broken_merge_fails_the_package_step(self, tmp_path):
        app = MergedApp(source="<div><span>bad</div>", module_ids=(1,))
        with pytest.raises(BuildFailure):
            package(app, static_scaffold("full-app"), tmp_path / "site")


class TestSiteDigest:
    def fill(self, root, content_a="alpha", content_b="beta"):
        root.mkdir(parents=True, exist_ok=True)
        (root / "index.html").write_text(content_a, encoding="utf-8")
        (root / "assets").mkdir(exist_ok=True)
        (root / "assets" / "app.js").write_text(content_b, encoding="utf-8")
        return root

    def test_stable_across_copies(self, tmp_path):
        a = self.fill(tmp_path / "a")
        b = self.fill(tmp_path / "b")
        assert site_digest(a) == site_digest(b)

    def test_sensitive_to_content(self, tmp_path):
        a = self.fill(tmp_path / "a")
        b = self.fill(tmp_path / "b", content_b="gamma")
        assert site_digest(a) != site_digest(b)

    def test_sensitive_to_file_names(self, tmp_path):
        a = self.fill(tmp_path / "a")
        b = self.fill(tmp_path / "b")
        (b / "assets" / "app.js").rename(b / "assets" / "main.js")
        assert site_digest(a) != site_digest(b)

    def test_empty_directory_digest_is_defined(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert len(site_digest(empty)) == 64
