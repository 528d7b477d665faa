"""Scaffold instantiation and builds, kept hermetic.

Node builds are exercised through a descriptor whose build command is a
python script, so the command, timeout, exit-status, and output-layout
handling all run without npm on the machine.
"""

from __future__ import annotations

import json
import textwrap

import pytest

from paperweb.errors import (
    BuildFailure,
    BuildTimeout,
    InjectionMarkerMissing,
    ToolchainMissing,
    WorkspaceNotEmpty,
)
from paperweb.scaffold import (
    INJECTION_MARKER,
    NodeScaffold,
    ScaffoldTemplate,
    StaticScaffold,
    audit_dependencies,
    node_scaffold,
    node_template,
    static_scaffold,
    static_template,
)

FRAGMENT = '<div data-state=\'{"n": 1}\'><p data-template="n={n}"></p></div>'


class TestStaticInstantiate:
    @pytest.mark.parametrize("kind", ["block-host", "full-app"])
    def test_bundled_templates_instantiate(self, kind, tmp_path):
        project = static_scaffold(kind).instantiate(FRAGMENT, tmp_path / "proj")
        text = (project / "index.html").read_text(encoding="utf-8")
        assert FRAGMENT in text
        assert INJECTION_MARKER not in text

    def test_existing_empty_directory_is_fine(self, tmp_path):
        target = tmp_path / "proj"
        target.mkdir()
        static_scaffold().instantiate(FRAGMENT, target)
        assert (target / "index.html").is_file()

    def test_non_empty_workspace_is_refused(self, tmp_path):
        target = tmp_path / "proj"
        target.mkdir()
        (target / "leftover.txt").write_text("x")
        with pytest.raises(WorkspaceNotEmpty):
            static_scaffold().instantiate(FRAGMENT, target)

    def test_missing_template_root(self, tmp_path):
        template = ScaffoldTemplate(
            kind="block-host", root=tmp_path / "nowhere", injection_file="index.html"
        )
        with pytest.raises(ToolchainMissing, match="template missing"):
            StaticScaffold(template).instantiate(FRAGMENT, tmp_path / "proj")

    def test_missing_injection_file(self, tmp_path):
        root = tmp_path / "tpl"
        root.mkdir()
        (root / "other.html").write_text("<body></body>")
        template = ScaffoldTemplate(kind="block-host", root=root, injection_file="index.html")
        with pytest.raises(InjectionMarkerMissing, match="injection file missing"):
            StaticScaffold(template).instantiate(FRAGMENT, tmp_path / "proj")

    @pytest.mark.parametrize("count", [0, 2])
    def test_sentinel_must_appear_exactly_once(self, count, tmp_path):
        root = tmp_path / "tpl"
        root.mkdir()
        (root / "index.html").write_text("<body>" + INJECTION_MARKER * count + "</body>")
        template = ScaffoldTemplate(kind="block-host", root=root, injection_file="index.html")
        with pytest.raises(InjectionMarkerMissing, match=f"{count} times"):
            StaticScaffold(template).instantiate(FRAGMENT, tmp_path / "proj")


class TestStaticBuild:
    def test_build_copies_project_to_site(self, tmp_path):
        scaffold = static_scaffold()
        project = scaffold.instantiate(FRAGMENT, tmp_path / "proj")
        site, log = scaffold.build(project, tmp_path / "site")
        assert (site / "index.html").is_file()
        assert log == "static build ok (1 files)"

    def test_malformed_source_fails_with_lint_log(self, tmp_path):
        scaffold = static_scaffold()
        project = scaffold.instantiate("<div><span>broken</div>", tmp_path / "proj")
        with pytest.raises(BuildFailure, match="static checks") as excinfo:
            scaffold.build(project, tmp_path / "site")
        assert "mismatched closing tag" in excinfo.value.log

    def test_invalid_state_json_fails_the_build(self, tmp_path):
        scaffold = static_scaffold()
        project = scaffold.instantiate("<div data-state='{oops'></div>", tmp_path / "proj")
        with pytest.raises(BuildFailure) as excinfo:
            scaffold.build(project, tmp_path / "site")
        assert "invalid data-state JSON" in excinfo.value.log

    def test_missing_entry_page(self, tmp_path):
        project = tmp_path / "proj"
        project.mkdir()
        with pytest.raises(BuildFailure, match="no index.html") as excinfo:
            static_scaffold().build(project, tmp_path / "site")
        assert excinfo.value.log == "missing entry page index.html"

    def test_template_accessors(self):
        template = static_template("block-host")
        assert template.kind == "block-host"
        assert template.marker == INJECTION_MARKER
        assert static_scaffold().kind == "block-host"


def write_node_package(root, *, build_script, descriptor=None):
    root.mkdir(parents=True, exist_ok=True)
    (root / "index.html").write_text(f"<body>\n{INJECTION_MARKER}\n</body>\n")
    (root / "build.py").write_text(textwrap.dedent(build_script))
    payload = descriptor or {
        "block-host": {
            "injection_file": "index.html",
            "build": ["python3", "build.py"],
            "output": "dist",
        },
        "allowed_dependencies": ["react", "react-dom"],
    }
    (root / "scaffold.json").write_text(json.dumps(payload))
    return root


GOOD_BUILD = """\
    import pathlib, shutil
    out = pathlib.Path("dist")
    out.mkdir(exist_ok=True)
    shutil.copy("index.html", out / "index.html")
    print("compiled one page")
    """


class TestNodeTemplate:
    def test_descriptor_is_read(self, tmp_path):
        root = write_node_package(tmp_path / "fe", build_script=GOOD_BUILD)
        template = node_template(root, "block-host")
        assert template.kind == "block-host"
        assert template.root == root
        assert template.injection_file == "index.html"
        assert template.marker == INJECTION_MARKER
        assert template.build_command == ("python3", "build.py")
        assert template.output_dir == "dist"
        assert template.allowed_dependencies == ("react", "react-dom")

    def test_build_and_output_defaults(self, tmp_path):
        root = write_node_package(
            tmp_path / "fe",
            build_script=GOOD_BUILD,
            descriptor={"full-app": {"injection_file": "index.html"}},
        )
        template = node_template(root, "full-app")
        assert template.build_command == ("npm", "run", "build")
        assert template.output_dir == "dist"
        assert template.allowed_dependencies == ()

    def test_missing_descriptor(self, tmp_path):
        with pytest.raises(ToolchainMissing, match="no scaffold.json"):
            node_template(tmp_path, "block-host")

    def test_missing_kind(self, tmp_path):
        root = write_node_package(tmp_path / "fe", build_script=GOOD_BUILD)
        with pytest.raises(ToolchainMissing, match="'full-app'"):
            node_template(root, "full-app")


class TestNodeBuild:
    def build_site(self, tmp_path, build_script, **descriptor_kwargs):
        root = write_node_package(tmp_path / "fe", build_script=build_script, **descriptor_kwargs)
        scaffold = node_scaffold(root, "block-host")
        project = scaffold.instantiate(FRAGMENT, tmp_path / "proj")
        return scaffold, project

    def test_successful_build_collects_output(self, tmp_path):
        scaffold, project = self.build_site(tmp_path, GOOD_BUILD)
        site, log = scaffold.build(project, tmp_path / "site", timeout=60)
        assert (site / "index.html").is_file()
        assert "compiled one page" in log
        assert FRAGMENT in (site / "index.html").read_text(encoding="utf-8")

    def test_failing_build_attaches_log(self, tmp_path):
        script = """\
            import sys
            print("stage one ok")
            sys.stderr.write("missing module: widget\\n")
            sys.exit(3)
            """
        scaffold, project = self.build_site(tmp_path, script)
        with pytest.raises(BuildFailure, match="status 3") as excinfo:
            scaffold.build(project, tmp_path / "site", timeout=60)
        assert "stage one ok" in excinfo.value.log
        assert "missing module: widget" in excinfo.value.log

    def test_build_without_index_output(self, tmp_path):
        script = """\
            import pathlib
            pathlib.Path("dist").mkdir(exist_ok=True)
            print("built nothing useful")
            """
        scaffold, project = self.build_site(tmp_path, script)
        with pytest.raises(BuildFailure, match="no index.html"):
            scaffold.build(project, tmp_path / "site", timeout=60)

    def test_timeout_raises_build_timeout(self, tmp_path):
        script = """\
            import time
            print("starting", flush=True)
            time.sleep(30)
            """
        scaffold, project = self.build_site(tmp_path, script)
        with pytest.raises(BuildTimeout, match="exceeded"):
            scaffold.build(project, tmp_path / "site", timeout=1.0)

    def test_missing_build_tool(self, tmp_path):
        descriptor = {
            "block-host": {
                "injection_file": "index.html",
                "build": ["definitely-not-a-real-tool"],
            }
        }
        scaffold, project = self.build_site(tmp_path, GOOD_BUILD, descriptor=descriptor)
        with pytest.raises(ToolchainMissing, match="not on PATH"):
            scaffold.build(project, tmp_path / "site")

    def test_empty_build_command(self, tmp_path):
        descriptor = {"block-host": {"injection_file": "index.html", "build": []}}
        scaffold, project = self.build_site(tmp_path, GOOD_BUILD, descriptor=descriptor)
        with pytest.raises(ToolchainMissing, match="no build command"):
            scaffold.build(project, tmp_path / "site")

    def test_node_modules_not_copied_into_project(self, tmp_path):
        root = write_node_package(tmp_path / "fe", build_script=GOOD_BUILD)
        (root / "node_modules" / "react").mkdir(parents=True)
        (root / "node_modules" / "react" / "index.js").write_text("module.exports = {}")
        scaffold = node_scaffold(root, "block-host")
        project = scaffold.instantiate(FRAGMENT, tmp_path / "proj")
        assert not (project / "node_modules").exists()


class TestAuditDependencies:
    def test_no_manifest_passes(self, tmp_path):
        assert audit_dependencies(tmp_path, ("react",)) == []

    def test_allowed_dependencies_pass(self, tmp_path):
        (tmp_path / "package.json").write_text(
            json.dumps({"dependencies": {"react": "^19.0.0"}})
        )
        assert audit_dependencies(tmp_path, ("react", "react-dom")) == []

    def test_extras_are_reported_sorted(self, tmp_path):
        (tmp_path / "package.json").write_text(
            json.dumps(
                {
                    "dependencies": {"zz-extra": "1.0.0", "react": "^19.0.0"},
                    "devDependencies": {"left-pad": "1.3.0"},
                }
            )
        )
        assert audit_dependencies(tmp_path, ("react",)) == ["left-pad", "zz-extra"]
