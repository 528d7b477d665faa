"""The offline render engine: parsing, state, actions, painting, linting.

Pixel assertions compare whole screenshots through image_diff rather than
poking at coordinates, so they stay valid if widget chrome shifts. What
must hold: state changes move pixels, hidden content paints nothing, and
rendering is deterministic byte for byte.
"""

from __future__ import annotations

import json

import pytest

from paperweb.actions import ProbeAction
from paperweb.errors import PageLoadTimeout
from paperweb.minibrowser import (
    DomEngine,
    DomSession,
    lint_fragment,
    node_locator,
    parse_color,
    parse_html,
    select_options,
)
from paperweb.pixels import image_diff


def session(html: str, viewport=(320, 240)) -> DomSession:
    return DomSession(parse_html(html), viewport=viewport)


def click(s: DomSession, locator: str) -> bool:
    return s.perform(ProbeAction(kind="click", locator=locator))


class TestParseColor:
    @pytest.mark.parametrize(
        ("raw", "rgb"),
        [
            ("white", (255, 255, 255)),
            ("  Navy ", (30, 40, 100)),
            ("#ff0000", (255, 0, 0)),
            ("#FFAA00", (255, 170, 0)),
            ("#abc", (170, 187, 204)),
        ],
    )
    def test_accepted_forms(self, raw, rgb):
        assert parse_color(raw) == rgb

    @pytest.mark.parametrize("raw", ["", "nonsense", "#12", "#12345", "#gggggg", "rgb(1,2,3)"])
    def test_rejected_forms(self, raw):
        assert parse_color(raw) is None


class TestParseHtml:
    def test_tree_shape_and_attrs(self):
        root = parse_html('<div id="a" class="x"><p>hi</p></div>')
        div = root.children[0]
        assert div.tag == "div"
        assert div.attrs == {"id": "a", "class": "x"}
        p = div.children[0]
        assert p.tag == "p"
        assert p.children[0].tag == "#text"
        assert p.children[0].text == "hi"

    def test_void_tags_do_not_nest(self):
        root = parse_html("<div><input type='text'><span>after</span></div>")
        div = root.children[0]
        assert [c.tag for c in div.children] == ["input", "span"]

    def test_self_closing_tag(self):
        root = parse_html("<div><section/><p>x</p></div>")
        assert [c.tag for c in root.children[0].children] == ["section", "p"]

    def test_mismatched_end_tag_recovery(self):
        root = parse_html("<div><span>inner</div><p>next</p>")
        assert [c.tag for c in root.children] == ["div", "p"]

    def test_whitespace_only_text_dropped(self):
        root = parse_html("<div>\n   \n<p>kept</p></div>")
        assert [c.tag for c in root.children[0].children] == ["p"]

    def test_comment_nodes(self):
        root = parse_html("<div><!-- @module 1: note --></div>")
        comment = root.children[0].children[0]
        assert comment.tag == "#comment"
        assert comment.comment is True
        assert comment.text == "@module 1: note"

    def test_style_attribute_parsing(self):
        node = parse_html('<div style="Color: red; height:20px ; bad"></div>').children[0]
        assert node.style() == {"color": "red", "height": "20px"}

    def test_walk_is_document_order(self):
        root = parse_html("<a><b></b><c><d></d></c></a>")
        assert [n.tag for n in root.walk()] == ["#root", "a", "b", "c", "d"]


class TestNodeLocator:
    def test_id_wins(self):
        node = parse_html('<div><p id="target">x</p></div>')
        p = node.children[0].children[0]
        assert node_locator(p) == "#target"

    def test_nth_of_type_path(self):
        root = parse_html("<div><p>a</p><span>s</span><p>b</p></div>")
        second_p = root.children[0].children[2]
        assert node_locator(second_p) == "div:nth-of-type(1)>p:nth-of-type(2)"

    def test_path_stops_at_ancestor_id(self):
        root = parse_html('<div id="panel"><span>x</span></div>')
        span = root.children[0].children[0]
        assert node_locator(span) == "#panel>span:nth-of-type(1)"


STATE_PAGE = """
<body data-state='{"count": 3, "mode": "a"}'>
  <div data-state='{"mode": "b", "extra": 1}'></div>
  <button id="plus" data-on-click="inc:count">+</button>
</body>
"""


class TestSessionLoad:
    def test_state_merges_from_any_element_in_document_order(self):
        s = session(STATE_PAGE)
        assert s.state == {"count": 3, "mode": "b", "extra": 1}

    def test_invalid_state_json_is_a_console_error(self):
        s = session("<body data-state='{broken'></body>")
        assert s.console_errors == ["invalid data-state JSON"]

    def test_error_on_load_attribute(self):
        s = session('<body data-error-on-load="boom at startup"></body>')
        assert s.console_errors == ["boom at startup"]

    def test_script_with_throw_records_error(self):
        s = session("<body><script>throw new Error('x');</script></body>")
        assert s.console_errors == ["uncaught exception in page script"]

    def test_plain_script_is_inert(self):
        s = session("<body><script>const x = 1;</script></body>")
        assert s.console_errors == []

    def test_bound_input_seeds_state_from_value(self):
        s = session('<body><input type="range" data-bind="rate" value="42"></body>')
        assert s.state["rate"] == 42

    def test_declared_state_beats_input_default(self):
        s = session(
            '<body data-state=\'{"rate": 7}\'>'
            '<input type="range" data-bind="rate" value="42"></body>'
        )
        assert s.state["rate"] == 7

    def test_valueless_range_seeds_midpoint(self):
        s = session('<body><input type="range" data-bind="rate" min="2" max="8"></body>')
        assert s.state["rate"] == 5
        s2 = session('<body><input type="range" data-bind="r" min="0" max="5"></body>')
        assert s2.state["r"] == 2.5

    def test_valueless_text_input_seeds_empty(self):
        s = session('<body><input type="text" data-bind="name"></body>')
        assert s.state["name"] == ""

    def test_bound_select_seeds_first_option(self):
        s = session(
            '<body><select data-bind="pick">'
            '<option value="low">Low</option><option value="high">High</option>'
            "</select></body>"
        )
        assert s.state["pick"] == "low"

    def test_drag_surface_seeds_offsets(self):
        s = session('<body><div data-drag="knob"></div></body>')
        assert s.state["knob_x"] == 0
        assert s.state["knob_y"] == 0


class TestFindAndElements:
    def test_find_by_id_and_path(self):
        s = session(STATE_PAGE)
        assert s.find("#plus") is not None
        assert s.find("body:nth-of-type(1)>div:nth-of-type(1)") is not None
        assert s.find("#missing") is None

    ZOO = """
    <body>
      <button data-on-click="inc:n">More</button>
      <button data-on-click="toggle:flag">Flag</button>
      <input type="range" data-bind="rate" min="0" max="10">
      <input type="text" data-bind="name">
      <input type="checkbox">
      <textarea data-bind="notes"></textarea>
      <select data-bind="pick"><option value="a">A</option><option value="b">B</option></select>
      <div data-drag="knob" id="pad"></div>
    </body>
    """

    def test_kind_classification_in_document_order(self):
        kinds = [e.kind for e in session(self.ZOO).interactive_elements()]
        assert kinds == [
            "button",
            "toggle",
            "slider",
            "text-input",
            "text-input",
            "dropdown",
            "drag-surface",
        ]

    def test_checkbox_is_not_interactive(self):
        locators = [e.locator for e in session(self.ZOO).interactive_elements()]
        assert not any("checkbox" in loc for loc in locators)

    def test_labels_fall_back_to_binding_then_id(self):
        elements = {e.kind: e for e in session(self.ZOO).interactive_elements()}
        assert elements["button"].label == "More"
        assert elements["slider"].label == "rate"
        assert elements["drag-surface"].label == "pad"

    def test_duplicate_locators_are_deduplicated(self):
        s = session(
            '<body><button id="x">A</button><button id="x">B</button></body>'
        )
        assert [e.locator for e in s.interactive_elements()] == ["#x"]

    def test_hidden_elements_are_still_listed(self):
        s = session(
            '<body data-state=\'{"view": 1}\'>'
            '<section data-show-if="view=2"><button data-on-click="inc:n">Hidden</button></section>'
            "</body>"
        )
        assert [e.label for e in s.interactive_elements()] == ["Hidden"]

    def test_module_label_from_ancestor(self):
        s = session(
            '<body><section data-module="module-2">'
            '<button data-on-click="inc:n">In</button></section>'
            '<button data-on-click="dec:n">Out</button></body>'
        )
        by_label = {e.label: e.module_label for e in s.interactive_elements()}
        assert by_label == {"In": "module-2", "Out": ""}

    def test_element_details_for_slider_and_select(self):
        s = session(self.ZOO)
        slider = next(e for e in s.interactive_elements() if e.kind == "slider")
        details = s.element_details(slider.locator)
        assert details == {"current": 5, "min": 0.0, "max": 10.0}
        dropdown = next(e for e in s.interactive_elements() if e.kind == "dropdown")
        assert s.element_details(dropdown.locator)["options"] == ["a", "b"]
        assert s.element_details("#nowhere") == {}


class TestActions:
    def test_unresolved_locator_returns_false(self):
        assert click(session("<body></body>"), "#ghost") is False

    def test_inc_dec_toggle(self):
        s = session(
            '<body data-state=\'{"n": 5, "on": false}\'>'
            '<button id="up" data-on-click="inc:n">+</button>'
            '<button id="down" data-on-click="dec:n">-</button>'
            '<button id="flip" data-on-click="toggle:on">~</button></body>'
        )
        assert click(s, "#up") is True
        assert s.state["n"] == 6
        click(s, "#down")
        click(s, "#down")
        assert s.state["n"] == 4
        click(s, "#flip")
        assert s.state["on"] is True
        click(s, "#flip")
        assert s.state["on"] is False

    def test_add_set_and_multi_op_scripts(self):
        s = session(
            '<body data-state=\'{"n": 1}\'>'
            '<button id="b" data-on-click="add:n=2.5;set:label=ready">go</button></body>'
        )
        click(s, "#b")
        assert s.state["n"] == 3.5
        assert s.state["label"] == "ready"

    def test_set_coerces_numbers(self):
        s = session('<body><button id="b" data-on-click="set:x=7">go</button></body>')
        click(s, "#b")
        assert s.state["x"] == 7

    def test_cycle_rotates_and_wraps(self):
        s = session(
            '<body data-state=\'{"c": "b"}\'>'
            '<button id="b" data-on-click="cycle:c=a,b,c">go</button></body>'
        )
        click(s, "#b")
        assert s.state["c"] == "c"
        click(s, "#b")
        assert s.state["c"] == "a"

    def test_cycle_accepts_hex_colors(self):
        s = session(
            '<body><button id="b" data-on-click="cycle:tone=#aa0000,#00aa00">go</button></body>'
        )
        click(s, "#b")
        first = s.state["tone"]
        click(s, "#b")
        assert {first, s.state["tone"]} <= {"#aa0000", "#00aa00"}
        assert first != s.state["tone"]

    def test_cycle_from_unknown_value_restarts(self):
        s = session(
            '<body data-state=\'{"c": "zzz"}\'>'
            '<button id="b" data-on-click="cycle:c=a,b">go</button></body>'
        )
        click(s, "#b")
        assert s.state["c"] == "a"

    def test_set_value_clamps_to_range(self):
        s = session('<body><input id="r" type="range" data-bind="rate" min="2" max="8"></body>')
        s.perform(ProbeAction(kind="set-value", locator="#r", value=99))
        assert s.state["rate"] == 8
        s.perform(ProbeAction(kind="set-value", locator="#r", value=-5))
        assert s.state["rate"] == 2
        s.perform(ProbeAction(kind="set-value", locator="#r", value=5.5))
        assert s.state["rate"] == 5.5

    def test_select_and_type_store_strings(self):
        s = session(
            '<body><select id="s" data-bind="pick"><option value="a">A</option></select>'
            '<input id="t" type="text" data-bind="name"></body>'
        )
        s.perform(ProbeAction(kind="select", locator="#s", value="b"))
        assert s.state["pick"] == "b"
        s.perform(ProbeAction(kind="type", locator="#t", value=123))
        assert s.state["name"] == "123"

    def test_drag_accumulates_deltas(self):
        s = session('<body><div id="pad" data-drag="knob"></div></body>')
        s.perform(ProbeAction(kind="drag", locator="#pad", delta=(15, -4)))
        s.perform(ProbeAction(kind="drag", locator="#pad", delta=(5, 10)))
        assert s.state["knob_x"] == 20
        assert s.state["knob_y"] == 6


class TestBindings:
    def test_show_if_equality_and_truthiness(self):
        s = session(
            '<body data-state=\'{"view": 2, "flag": 0}\'>'
            '<div id="a" data-show-if="view=2"></div>'
            '<div id="b" data-show-if="view=3"></div>'
            '<div id="c" data-show-if="flag"></div></body>'
        )
        assert s.visible(s.find("#a")) is True
        assert s.visible(s.find("#b")) is False
        assert s.visible(s.find("#c")) is False

    def test_display_none_hides(self):
        s = session('<body><div id="a" style="display:none"></div></body>')
        assert s.visible(s.find("#a")) is False

    def test_data_text_binding(self):
        s = session('<body data-state=\'{"n": 4}\'><span id="a" data-text="n"></span></body>')
        assert s.bound_text(s.find("#a")) == "4"
        s2 = session('<body><span id="a" data-text="missing"></span></body>')
        assert s2.bound_text(s2.find("#a")) == ""

    def test_template_binding_formats_whole_floats_as_ints(self):
        s = session(
            '<body data-state=\'{"n": 3.0, "r": 2.5}\'>'
            '<span id="a" data-template="n={n} r={r}"></span></body>'
        )
        assert s.bound_text(s.find("#a")) == "n=3 r=2.5"

    def test_template_with_missing_key_stays_literal(self):
        s = session('<body><span id="a" data-template="value: {ghost}"></span></body>')
        assert s.bound_text(s.find("#a")) == "value: {ghost}"

    def test_unbound_node_has_no_text_override(self):
        s = session("<body><span id='a'>plain</span></body>")
        assert s.bound_text(s.find("#a")) is None


COUNTER_PAGE = """
<body data-state='{"count": 0}'>
  <h2>Counter</h2>
  <p data-template="Count is {count}"></p>
  <button id="plus" data-on-click="inc:count">Increment</button>
</body>
"""


class TestRendering:
    def test_screenshot_matches_viewport(self):
        shot = session(COUNTER_PAGE, viewport=(500, 300)).screenshot()
        assert (shot.width, shot.height) == (500, 300)

    def test_rendering_is_deterministic(self):
        a = session(COUNTER_PAGE).screenshot()
        b = session(COUNTER_PAGE).screenshot()
        assert a.png_bytes == b.png_bytes

    def test_state_change_moves_pixels(self):
        s = session(COUNTER_PAGE)
        before = s.screenshot()
        click(s, "#plus")
        after = s.screenshot()
        assert image_diff(before, after) > 0.0

    def test_slider_position_moves_pixels(self):
        page = '<body><input id="r" type="range" data-bind="rate" min="0" max="100" value="0"></body>'
        s = session(page)
        before = s.screenshot()
        s.perform(ProbeAction(kind="set-value", locator="#r", value=100))
        assert image_diff(before, s.screenshot()) > 0.0

    def test_bar_tracks_bound_value(self):
        page = (
            '<body data-state=\'{"load": 0}\'>'
            '<div data-bar="load" data-bar-max="10" style="height:40px"></div>'
            '<button id="b" data-on-click="add:load=10">fill</button></body>'
        )
        s = session(page)
        empty = s.screenshot()
        click(s, "#b")
        assert image_diff(empty, s.screenshot()) > 0.0

    def test_hidden_section_paints_nothing(self):
        shown = session(
            '<body data-state=\'{"v": 1}\'><div data-show-if="v=1">'
            "<h3>Panel</h3><p>content</p></div></body>"
        ).screenshot()
        hidden = session(
            '<body data-state=\'{"v": 2}\'><div data-show-if="v=1">'
            "<h3>Panel</h3><p>content</p></div></body>"
        ).screenshot()
        blank = session("<body></body>").screenshot()
        assert image_diff(hidden, blank) == 0.0
        assert image_diff(shown, blank) > 0.0

    def test_bg_bind_recolors_panel(self):
        page = (
            '<body data-state=\'{"tone": "#aa0000"}\'>'
            '<div data-bg-bind="tone" style="padding:20px"><p>x</p></div>'
            '<button id="b" data-on-click="set:tone=#00aa00">go</button></body>'
        )
        s = session(page)
        red = s.screenshot()
        click(s, "#b")
        assert image_diff(red, s.screenshot()) > 0.0

    def test_pressed_state_recolors_button(self):
        page = (
            '<body data-state=\'{"on": false}\'>'
            '<button id="b" data-on-click="toggle:on" data-pressed-if="on">Hold</button></body>'
        )
        s = session(page)
        released = s.screenshot()
        click(s, "#b")
        assert image_diff(released, s.screenshot()) > 0.0

    def test_drag_moves_the_handle(self):
        page = '<body><div id="pad" data-drag="knob" style="height:100px"></div></body>'
        s = session(page)
        centered = s.screenshot()
        s.perform(ProbeAction(kind="drag", locator="#pad", delta=(30, 10)))
        assert image_diff(centered, s.screenshot()) > 0.0

    def test_row_layout_differs_from_stacked(self):
        row = session(
            '<body><div data-layout="row"><p>left text</p><p>right text</p></div></body>'
        ).screenshot()
        stacked = session(
            "<body><div><p>left text</p><p>right text</p></div></body>"
        ).screenshot()
        assert image_diff(row, stacked) > 0.0


class TestLintFragment:
    def test_balanced_fragment_is_clean(self):
        source = '<div><p>ok</p><input type="text"><br></div>'
        assert lint_fragment(source) == []

    def test_self_closing_is_clean(self):
        assert lint_fragment("<div><section/></div>") == []

    def test_unclosed_tag_reported(self):
        problems = lint_fragment("<div><span>oops</span>")
        assert problems == ["unclosed tag <div>"]

    def test_stray_closing_tag(self):
        assert lint_fragment("</div>") == ["stray closing tag </div>"]

    def test_mismatch_recovers_and_reports_once(self):
        problems = lint_fragment("<div><span>text</div>")
        assert problems == ["mismatched closing tag </div>, expected </span>"]

    def test_quoted_angle_bracket_does_not_confuse(self):
        assert lint_fragment('<div title="a > b"><p>x</p></div>') == []

    @pytest.mark.parametrize(
        "source",
        [
            "<div data-state='{broken'></div>",
            '<div data-state="{broken}"></div>',
        ],
    )
    def test_invalid_state_json(self, source):
        problems = lint_fragment(source)
        assert len(problems) == 1
        assert problems[0].startswith("invalid data-state JSON")

    def test_valid_state_json_is_clean(self):
        assert lint_fragment("<div data-state='{\"a\": 1}'></div>") == []


class TestDomEngine:
    def test_open_missing_entry(self, tmp_path):
        with pytest.raises(PageLoadTimeout, match="no entry page"):
            DomEngine().open(tmp_path)

    def test_open_renders_site(self, tmp_path):
        (tmp_path / "index.html").write_text(COUNTER_PAGE, encoding="utf-8")
        engine = DomEngine(viewport=(640, 480))
        page = engine.open(tmp_path)
        shot = page.screenshot()
        assert (shot.width, shot.height) == (640, 480)
        assert page.state == {"count": 0}

    def test_engine_name(self):
        assert DomEngine().name == "dom"
