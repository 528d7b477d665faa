"""Deterministic offline render engine for a documented HTML dialect.

This engine exists so the whole pipeline, including screenshots, element
extraction, and interaction probing, runs hermetically with no browser
installed. It renders a constrained HTML subset to raster images with a
fixed bitmap font, and interprets a small declarative behavior layer in
place of JavaScript:

state        data-state='{"count": 0}' declares page variables; usually on
             body, but any element may contribute (merged in document order).
bindings     data-text="var", data-template="Count: {count}",
             data-bar="var" (+ data-bar-max), data-bg-bind="var",
             data-show-if="var" or "var=value", data-pressed-if="var".
actions      data-on-click="inc:var | dec:var | add:var=n | set:var=v
             | toggle:var | cycle:var=a,b,c", semicolon-separated.
inputs       <input type="range"|"text"> and <select> with data-bind="var".
drag         data-drag="name" tracks name_x / name_y offsets.
errors       data-error-on-load="msg" on <body> records a console error
             at load time; <script> bodies are never executed and any
             script containing `throw` also records one.

Pages written in this dialect behave the same way here and in a real
browser runtime shipped separately; production renders go through the
Chromium engine instead.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from html.parser import HTMLParser
from pathlib import Path

from PIL import Image, ImageDraw, ImageFont

from .actions import InteractiveElement, ProbeAction
from .errors import PageLoadTimeout
from .pixels import Screenshot, screenshot_from_image

_VOID_TAGS = {"br", "hr", "img", "input", "meta", "link"}

_NAMED_COLORS = {
    "white": (255, 255, 255), "black": (0, 0, 0), "red": (220, 60, 50),
    "green": (60, 160, 80), "blue": (60, 100, 200), "gray": (128, 128, 128),
    "grey": (128, 128, 128), "lightgray": (211, 211, 211), "silver": (192, 192, 192),
    "yellow": (240, 200, 60), "orange": (235, 140, 50), "purple": (130, 80, 180),
    "teal": (40, 150, 150), "navy": (30, 40, 100), "darkgray": (90, 90, 90),
}


def parse_color(value: str) -> tuple[int, int, int] | None:
    value = value.strip().lower()
    if value in _NAMED_COLORS:
        return _NAMED_COLORS[value]
    if value.startswith("#"):
        hexpart = value[1:]
        if len(hexpart) == 3:
            hexpart = "".join(ch * 2 for ch in hexpart)
        if len(hexpart) == 6 and all(c in "0123456789abcdef" for c in hexpart):
            return tuple(int(hexpart[i : i + 2], 16) for i in (0, 2, 4))
    return None


@dataclass
class Node:
    tag: str
    attrs: dict[str, str] = field(default_factory=dict)
    children: list["Node"] = field(default_factory=list)
    text: str = ""
    parent: "Node | None" = None
    comment: bool = False

    def style(self) -> dict[str, str]:
        out: dict[str, str] = {}
        for part in self.attrs.get("style", "").split(";"):
            if ":" in part:
                key, value = part.split(":", 1)
                out[key.strip().lower()] = value.strip()
        return out

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


class _TreeBuilder(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.root = Node(tag="#root")
        self._stack = [self.root]

    def handle_starttag(self, tag, attrs):
        node = Node(tag=tag, attrs={k: (v or "") for k, v in attrs}, parent=self._stack[-1])
        self._stack[-1].children.append(node)
        if tag not in _VOID_TAGS:
            self._stack.append(node)

    def handle_startendtag(self, tag, attrs):
        node = Node(tag=tag, attrs={k: (v or "") for k, v in attrs}, parent=self._stack[-1])
        self._stack[-1].children.append(node)

    def handle_endtag(self, tag):
        for depth in range(len(self._stack) - 1, 0, -1):
            if self._stack[depth].tag == tag:
                del self._stack[depth:]
                break

    def handle_data(self, data):
        if data.strip():
            node = Node(tag="#text", text=data.strip(), parent=self._stack[-1])
            self._stack[-1].children.append(node)

    def handle_comment(self, data):
        node = Node(tag="#comment", text=data.strip(), parent=self._stack[-1], comment=True)
        self._stack[-1].children.append(node)


def parse_html(text: str) -> Node:
    builder = _TreeBuilder()
    builder.feed(text)
    builder.close()
    return builder.root


# --- locators -------------------------------------------------------------

def node_locator(node: Node) -> str:
    """CSS-ish locator: #id when present, else a tag:nth-of-type path."""
    if node.attrs.get("id"):
        return f"#{node.attrs['id']}"
    parts: list[str] = []
    current = node
    while current is not None and current.tag != "#root":
        parent = current.parent
        if current.attrs.get("id"):
            parts.append(f"#{current.attrs['id']}")
            break
        if parent is not None:
            siblings = [c for c in parent.children if c.tag == current.tag]
            index = siblings.index(current) + 1
            parts.append(f"{current.tag}:nth-of-type({index})")
        else:
            parts.append(current.tag)
        current = parent
    return ">".join(reversed(parts))


# --- page session ---------------------------------------------------------

_ACTION_RE = re.compile(r"(inc|dec|toggle):(\w+)|(add|set|cycle):(\w+)=([^;]*)")


class DomSession:
    """One loaded page: state, rendering, elements, and actions."""

    def __init__(self, dom: Node, viewport: tuple[int, int] = (1024, 768)):
        self.dom = dom
        self.viewport = viewport
        self.state: dict[str, object] = {}
        self.console_errors: list[str] = []
        self._font = ImageFont.load_default()
        self._load()

    def _load(self):
        for node in self.dom.walk():
            # Any element may declare variables; injected fragments rely on
            # this since they never own the body tag.
            raw = node.attrs.get("data-state", "")
            if raw:
                try:
                    self.state.update(json.loads(raw))
                except json.JSONDecodeError:
                    self.console_errors.append("invalid data-state JSON")
            message = node.attrs.get("data-error-on-load")
            if message:
                self.console_errors.append(message)
            if node.tag == "script" and "throw" in _node_text(node):
                self.console_errors.append("uncaught exception in page script")
            if node.tag == "input" and node.attrs.get("data-bind"):
                name = node.attrs["data-bind"]
                if name not in self.state:
                    if "value" in node.attrs:
                        self.state[name] = _coerce(node.attrs["value"])
                    elif node.attrs.get("type") == "range":
                        # Browsers default a valueless range to its midpoint.
                        low = _as_number(node.attrs.get("min", "0"))
                        high = _as_number(node.attrs.get("max", "100"))
                        mid = low + (high - low) / 2
                        self.state[name] = int(mid) if mid == int(mid) else mid
                    else:
                        self.state[name] = ""
            if node.tag == "select" and node.attrs.get("data-bind"):
                name = node.attrs["data-bind"]
                if name not in self.state:
                    options = [c for c in node.children if c.tag == "option"]
                    if options:
                        self.state[name] = _option_value(options[0])
            if node.attrs.get("data-drag"):
                prefix = node.attrs["data-drag"]
                self.state.setdefault(f"{prefix}_x", 0)
                self.state.setdefault(f"{prefix}_y", 0)

    # -- queries ---------------------------------------------------------

    def find(self, locator: str) -> Node | None:
        for node in self.dom.walk():
            if node.tag.startswith("#"):
                continue
            if node_locator(node) == locator:
                return node
        if locator.startswith("#"):
            wanted = locator[1:]
            for node in self.dom.walk():
                if node.attrs.get("id") == wanted:
                    return node
        return None

    def interactive_elements(self) -> list[InteractiveElement]:
        """Enumerate interactable elements in document order, deduplicated."""
        found: list[InteractiveElement] = []
        seen: set[str] = set()
        for node in self.dom.walk():
            kind = _element_kind(node)
            if kind is None:
                continue
            locator = node_locator(node)
            if locator in seen:
                continue
            seen.add(locator)
            found.append(
                InteractiveElement(
                    kind=kind,
                    locator=locator,
                    label=_element_label(node),
                    module_label=_owning_module(node),
                )
            )
        return found

    # -- actions ---------------------------------------------------------

    def element_details(self, locator: str) -> dict:
        """Value ranges and options needed to synthesize sensible actions."""
        node = self.find(locator)
        if node is None:
            return {}
        details: dict = {}
        name = node.attrs.get("data-bind", "")
        if name:
            details["current"] = self.state.get(name)
        if node.tag == "input" and node.attrs.get("type") == "range":
            details["min"] = _as_number(node.attrs.get("min", "0"))
            details["max"] = _as_number(node.attrs.get("max", "100"))
        if node.tag == "select":
            details["options"] = select_options(node)
        return details

    def perform(self, action: ProbeAction) -> bool:
        """Apply one action; returns False when the locator resolves to nothing."""
        node = self.find(action.locator)
        if node is None:
            return False
        if action.kind == "click":
            return self._click(node)
        if action.kind == "set-value":
            return self._set_value(node, action.value)
        if action.kind == "select":
            return self._select(node, action.value)
        if action.kind == "type":
            return self._type(node, action.value)
        if action.kind == "drag":
            return self._drag(node, action.delta or (0, 0))
        return False

    def _click(self, node: Node) -> bool:
        script = node.attrs.get("data-on-click", "")
        for match in _ACTION_RE.finditer(script):
            if match.group(1):
                op, var = match.group(1), match.group(2)
                if op == "inc":
                    self.state[var] = _as_number(self.state.get(var, 0)) + 1
                elif op == "dec":
                    self.state[var] = _as_number(self.state.get(var, 0)) - 1
                elif op == "toggle":
                    self.state[var] = not _truthy(self.state.get(var))
            else:
                op, var, arg = match.group(3), match.group(4), match.group(5)
                if op == "add":
                    self.state[var] = _as_number(self.state.get(var, 0)) + _as_number(arg)
                elif op == "set":
                    self.state[var] = _coerce(arg)
                elif op == "cycle":
                    options = [o.strip() for o in arg.split(",") if o.strip()]
                    if options:
                        current = str(self.state.get(var, options[0]))
                        try:
                            index = (options.index(current) + 1) % len(options)
                        except ValueError:
                            index = 0
                        self.state[var] = options[index]
        return True

    def _set_value(self, node: Node, value) -> bool:
        name = node.attrs.get("data-bind")
        if not name:
            return True
        low = _as_number(node.attrs.get("min", "0"))
        high = _as_number(node.attrs.get("max", "100"))
        val = _as_number(value)
        self.state[name] = min(max(val, low), high)
        return True

    def _select(self, node: Node, value) -> bool:
        name = node.attrs.get("data-bind")
        if name:
            self.state[name] = str(value)
        return True

    def _type(self, node: Node, value) -> bool:
        name = node.attrs.get("data-bind")
        if name:
            self.state[name] = str(value)
        return True

    def _drag(self, node: Node, delta: tuple[int, int]) -> bool:
        prefix = node.attrs.get("data-drag")
        if prefix:
            self.state[f"{prefix}_x"] = _as_number(self.state.get(f"{prefix}_x", 0)) + delta[0]
            self.state[f"{prefix}_y"] = _as_number(self.state.get(f"{prefix}_y", 0)) + delta[1]
        return True

    # -- rendering -------------------------------------------------------

    def screenshot(self, label: str = "") -> Screenshot:
        image = Image.new("RGB", self.viewport, (255, 255, 255))
        draw = ImageDraw.Draw(image)
        body = next((n for n in self.dom.walk() if n.tag == "body"), self.dom)
        _Painter(self, draw).paint_children(body, 8, 8, self.viewport[0] - 16)
        return screenshot_from_image(image, label=label)

    # -- binding evaluation ---------------------------------------------

    def visible(self, node: Node) -> bool:
        if node.style().get("display") == "none":
            return False
        condition = node.attrs.get("data-show-if")
        if condition is None:
            return True
        if "=" in condition:
            var, expected = condition.split("=", 1)
            return str(self.state.get(var.strip(), "")) == expected.strip()
        return _truthy(self.state.get(condition.strip()))

    def bound_text(self, node: Node) -> str | None:
        if "data-text" in node.attrs:
            return str(self.state.get(node.attrs["data-text"], ""))
        if "data-template" in node.attrs:
            try:
                return node.attrs["data-template"].format_map(
                    {k: _fmt(v) for k, v in self.state.items()}
                )
            except (KeyError, ValueError):
                return node.attrs["data-template"]
        return None


class _Painter:
    """Single-pass top-down block layout and painting."""

    PAD = 4

    def __init__(self, session: DomSession, draw: ImageDraw.ImageDraw):
        self.session = session
        self.draw = draw
        self.font = session._font

    def paint_children(self, node: Node, x: int, y: int, width: int) -> int:
        """Paint child boxes; returns the new y cursor."""
        children = [c for c in node.children if not c.tag.startswith("#") or c.tag == "#text"]
        if not children:
            return y
        if node.style().get("display") == "flex" or node.attrs.get("data-layout") == "row":
            return self._paint_row(children, x, y, width)
        for child in children:
            y = self.paint_box(child, x, y, width) + self.PAD
        return y - self.PAD

    def _paint_row(self, children: list[Node], x: int, y: int, width: int) -> int:
        visible = [c for c in children if c.tag == "#text" or self.session.visible(c)]
        if not visible:
            return y
        fixed: dict[int, int] = {}
        remaining = width - self.PAD * (len(visible) - 1)
        for index, child in enumerate(visible):
            explicit = _explicit_width(child, width)
            if explicit is not None:
                fixed[index] = explicit
                remaining -= explicit
        flexible = len(visible) - len(fixed)
        share = max(remaining // flexible, 40) if flexible else 0
        cursor = x
        bottom = y
        for index, child in enumerate(visible):
            child_width = fixed.get(index, share)
            end = self.paint_box(child, cursor, y, child_width)
            bottom = max(bottom, end)
            cursor += child_width + self.PAD
        return bottom

    def paint_box(self, node: Node, x: int, y: int, width: int) -> int:
        """Paint one node box at (x, y); returns its bottom edge."""
        if node.tag == "#text":
            return self._text_lines(node.text, x, y, width, (20, 20, 20))
        if node.tag == "#comment" or node.tag in ("script", "style", "head", "title"):
            return y
        if not self.session.visible(node):
            return y
        style = node.style()
        explicit = _explicit_width(node, width)
        if explicit is not None:
            width = explicit

        if node.tag == "hr":
            self.draw.line([(x, y + 2), (x + width, y + 2)], fill=(180, 180, 180))
            return y + 5
        if node.tag == "button":
            return self._button(node, x, y)
        if node.tag == "input":
            if node.attrs.get("type") == "range":
                return self._slider(node, x, y, width)
            return self._text_input(node, x, y, width)
        if node.tag == "select":
            return self._dropdown(node, x, y)
        if node.attrs.get("data-drag"):
            return self._drag_surface(node, x, y, width, style)
        if node.attrs.get("data-bar"):
            return self._bar(node, x, y, width, style)

        background = self._background(node, style)
        border = parse_color(style.get("border", "").split(" ")[-1] or "") if style.get("border") else None
        height_style = _px(style.get("height"))

        if background is not None or border is not None:
            # Backgrounds must land under the content, so measure first.
            bottom = self._measure(node, x, y, width)
            if background is not None:
                self.draw.rectangle([x, y, x + width, bottom], fill=background)
            painted = self._paint_content(node, x, y, width, style)
            bottom = max(bottom, painted)
            if border is not None:
                self.draw.rectangle([x, y, x + width, bottom], outline=border)
            if height_style is not None:
                bottom = max(bottom, y + height_style)
            return bottom

        bottom = self._paint_content(node, x, y, width, style)
        if height_style is not None:
            bottom = max(bottom, y + height_style)
        return bottom

    def _paint_content(self, node: Node, x: int, y: int, width: int, style) -> int:
        pad = _px(style.get("padding")) or 0
        inner_x = x + pad
        inner_width = max(width - 2 * pad, 10)
        content_top = y + pad

        text = self.session.bound_text(node)
        if node.tag in ("h1", "h2", "h3", "h4", "h5", "h6"):
            label = text if text is not None else _node_text(node)
            bottom = self._heading(label, inner_x, content_top, inner_width, node.tag)
        elif text is not None and not node.children:
            bottom = self._text_lines(text, inner_x, content_top, inner_width, self._color(style))
        elif node.children:
            if text is not None:
                content_top = self._text_lines(text, inner_x, content_top, inner_width, self._color(style)) + 2
            bottom = self.paint_children(node, inner_x, content_top, inner_width)
        else:
            bottom = content_top
        return bottom + pad

    def _measure(self, node: Node, x: int, y: int, width: int) -> int:
        scratch = Image.new("RGB", self.session.viewport, (255, 255, 255))
        painter = _Painter(self.session, ImageDraw.Draw(scratch))
        return painter._paint_content(node, x, y, width, node.style())

    # -- widget painters -------------------------------------------------

    def _background(self, node: Node, style: dict[str, str]):
        raw = style.get("background-color") or style.get("background")
        if node.attrs.get("data-bg-bind"):
            raw = str(self.session.state.get(node.attrs["data-bg-bind"], raw or ""))
        return parse_color(raw) if raw else None

    def _color(self, style: dict[str, str]) -> tuple[int, int, int]:
        return parse_color(style.get("color", "")) or (20, 20, 20)

    def _text_lines(self, text: str, x: int, y: int, width: int, fill) -> int:
        line = ""
        for word in text.split():
            probe = (line + " " + word).strip()
            if self._text_width(probe) > width and line:
                self.draw.text((x, y), line, font=self.font, fill=fill)
                y += 14
                line = word
            else:
                line = probe
        if line:
            self.draw.text((x, y), line, font=self.font, fill=fill)
            y += 14
        return y

    def _text_width(self, text: str) -> int:
        left, _, right, _ = self.font.getbbox(text)
        return right - left

    def _heading(self, text: str, x: int, y: int, width: int, tag: str) -> int:
        fill = (10, 10, 10)
        self.draw.text((x, y), text, font=self.font, fill=fill)
        self.draw.text((x + 1, y), text, font=self.font, fill=fill)  # faux bold
        bottom = y + 16
        if tag in ("h1", "h2"):
            self.draw.line([(x, bottom), (x + min(width, 320), bottom)], fill=(60, 60, 60))
            bottom += 4
        return bottom

    def _button(self, node: Node, x: int, y: int) -> int:
        label = self.session.bound_text(node)
        if label is None:
            label = _node_text(node) or "button"
        width = max(70, self._text_width(label) + 18)
        height = 24
        pressed = node.attrs.get("data-pressed-if")
        is_pressed = pressed is not None and _truthy(self.session.state.get(pressed))
        style = node.style()
        fill = self._background(node, style) or ((70, 110, 190) if not is_pressed else (30, 50, 90))
        if is_pressed and "background" not in style and "background-color" not in style:
            fill = (30, 50, 90)
        self.draw.rectangle([x, y, x + width, y + height], fill=fill, outline=(40, 40, 40))
        self.draw.text((x + 9, y + 6), label, font=self.font, fill=(255, 255, 255))
        return y + height

    def _slider(self, node: Node, x: int, y: int, width: int) -> int:
        width = min(max(width, 80), 240)
        low = _as_number(node.attrs.get("min", "0"))
        high = _as_number(node.attrs.get("max", "100"))
        name = node.attrs.get("data-bind", "")
        value = _as_number(self.session.state.get(name, node.attrs.get("value", low)))
        span = (high - low) or 1.0
        fraction = min(max((value - low) / span, 0.0), 1.0)
        mid = y + 10
        self.draw.line([(x, mid), (x + width, mid)], fill=(150, 150, 150), width=2)
        thumb = x + int(fraction * width)
        self.draw.rectangle([thumb - 4, mid - 6, thumb + 4, mid + 6], fill=(70, 110, 190))
        return y + 20

    def _dropdown(self, node: Node, x: int, y: int) -> int:
        name = node.attrs.get("data-bind", "")
        current = str(self.session.state.get(name, ""))
        if not current:
            options = [c for c in node.children if c.tag == "option"]
            current = _option_value(options[0]) if options else ""
        width = max(100, self._text_width(current) + 30)
        self.draw.rectangle([x, y, x + width, y + 22], outline=(40, 40, 40), fill=(245, 245, 245))
        self.draw.text((x + 6, y + 5), current, font=self.font, fill=(20, 20, 20))
        self.draw.text((x + width - 14, y + 5), "v", font=self.font, fill=(90, 90, 90))
        return y + 22

    def _text_input(self, node: Node, x: int, y: int, width: int) -> int:
        width = min(max(width, 80), 220)
        name = node.attrs.get("data-bind", "")
        text = str(self.session.state.get(name, node.attrs.get("value", "")))
        self.draw.rectangle([x, y, x + width, y + 22], outline=(90, 90, 90), fill=(252, 252, 252))
        self.draw.text((x + 5, y + 5), text[:40], font=self.font, fill=(20, 20, 20))
        return y + 22

    def _drag_surface(self, node: Node, x: int, y: int, width: int, style) -> int:
        height = _px(style.get("height")) or 120
        prefix = node.attrs["data-drag"]
        self.draw.rectangle(
            [x, y, x + width, y + height],
            outline=(60, 60, 60),
            fill=self._background(node, style) or (240, 244, 250),
        )
        cx = x + width // 2 + int(_as_number(self.session.state.get(f"{prefix}_x", 0)))
        cy = y + height // 2 + int(_as_number(self.session.state.get(f"{prefix}_y", 0)))
        cx = min(max(cx, x + 5), x + width - 5)
        cy = min(max(cy, y + 5), y + height - 5)
        self.draw.ellipse([cx - 5, cy - 5, cx + 5, cy + 5], fill=(200, 70, 60))
        self.draw.line([(cx - 9, cy), (cx + 9, cy)], fill=(120, 40, 30))
        self.draw.line([(cx, cy - 9), (cx, cy + 9)], fill=(120, 40, 30))
        return y + height

    def _bar(self, node: Node, x: int, y: int, width: int, style) -> int:
        height = _px(style.get("height")) or 18
        name = node.attrs["data-bar"]
        maximum = _as_number(node.attrs.get("data-bar-max", "1"))
        value = _as_number(self.session.state.get(name, 0))
        fraction = min(max(value / (maximum or 1.0), 0.0), 1.0)
        fill = self._background(node, style) or (70, 110, 190)
        self.draw.rectangle([x, y, x + width, y + height], outline=(60, 60, 60))
        if fraction > 0:
            self.draw.rectangle([x + 1, y + 1, x + 1 + int(fraction * (width - 2)), y + height - 1], fill=fill)
        return y + height


# --- element classification ----------------------------------------------

def _element_kind(node: Node) -> str | None:
    if node.tag == "button":
        script = node.attrs.get("data-on-click", "")
        return "toggle" if script.startswith("toggle:") else "button"
    if node.tag == "input":
        input_type = node.attrs.get("type", "text")
        if input_type == "range":
            return "slider"
        if input_type in ("text", "number", "search"):
            return "text-input"
        return None
    if node.tag == "textarea":
        return "text-input"
    if node.tag == "select":
        return "dropdown"
    if node.attrs.get("data-drag"):
        return "drag-surface"
    return None


def _element_label(node: Node) -> str:
    text = _node_text(node)
    return text or node.attrs.get("data-bind", "") or node.attrs.get("id", "")


def _owning_module(node: Node) -> str:
    current = node
    while current is not None:
        if current.attrs.get("data-module"):
            return current.attrs["data-module"]
        current = current.parent
    return ""


def _node_text(node: Node) -> str:
    parts = []
    for child in node.walk():
        if child.tag == "#text":
            parts.append(child.text)
    return " ".join(parts).strip()


def select_options(node: Node) -> list[str]:
    return [_option_value(c) for c in node.children if c.tag == "option"]


def _option_value(option: Node) -> str:
    return option.attrs.get("value") or _node_text(option)


# --- scalar helpers -------------------------------------------------------

def _coerce(raw: str):
    try:
        return int(raw)
    except (TypeError, ValueError):
        pass
    try:
        return float(raw)
    except (TypeError, ValueError):
        pass
    return raw


def _as_number(value) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        return 0.0


def _truthy(value) -> bool:
    if isinstance(value, str):
        return value.lower() not in ("", "0", "false", "no", "off")
    return bool(value)


def _fmt(value):
    if isinstance(value, float) and value == int(value):
        return int(value)
    return value


def _px(value: str | None) -> int | None:
    if not value:
        return None
    match = re.match(r"(\d+)px", value.strip())
    return int(match.group(1)) if match else None


def _explicit_width(node: Node, parent_width: int) -> int | None:
    raw = node.style().get("width")
    if not raw:
        return None
    raw = raw.strip()
    if raw.endswith("%"):
        try:
            return int(parent_width * float(raw[:-1]) / 100.0)
        except ValueError:
            return None
    return _px(raw)


# --- fragment linting -----------------------------------------------------

# Attrs group is lazy so a trailing / lands in the self-closing group.
_TAG_TOKEN = re.compile(r"<(/?)([a-zA-Z][\w-]*)((?:\"[^\"]*\"|'[^']*'|[^>\"'])*?)(/?)>")
_DATA_STATE = re.compile(r"data-state='([^']*)'|data-state=\"([^\"]*)\"")


def lint_fragment(source: str) -> list[str]:
    """Static well-formedness checks the offline toolchain compiles against.

    Reports unbalanced or stray tags and invalid data-state JSON; an empty
    list means the fragment builds.
    """
    problems: list[str] = []
    stack: list[str] = []
    for match in _TAG_TOKEN.finditer(source):
        closing, tag, _, self_closing = match.groups()
        tag = tag.lower()
        if tag in _VOID_TAGS or self_closing:
            continue
        if closing:
            if not stack:
                problems.append(f"stray closing tag </{tag}>")
            elif stack[-1] != tag:
                problems.append(f"mismatched closing tag </{tag}>, expected </{stack[-1]}>")
                if tag in stack:
                    while stack and stack[-1] != tag:
                        stack.pop()
                    if stack:
                        stack.pop()
            else:
                stack.pop()
        else:
            stack.append(tag)
    for tag in stack:
        problems.append(f"unclosed tag <{tag}>")
    for match in _DATA_STATE.finditer(source):
        raw = match.group(1) or match.group(2) or ""
        try:
            json.loads(raw)
        except json.JSONDecodeError as exc:
            problems.append(f"invalid data-state JSON: {exc}")
    return problems


# --- engine ---------------------------------------------------------------

class DomEngine:
    """Offline engine: loads index.html from a site directory."""

    name = "dom"

    def __init__(self, viewport: tuple[int, int] = (1024, 768)):
        self.viewport = viewport

    def open(self, site_dir: str | Path) -> DomSession:
        entry = Path(site_dir) / "index.html"
        if not entry.exists():
            raise PageLoadTimeout(f"no entry page at {entry}")
        dom = parse_html(entry.read_text(encoding="utf-8"))
        return DomSession(dom, viewport=self.viewport)
