"""Shared descriptors for page elements and probe actions."""

from __future__ import annotations

from dataclasses import dataclass

# Element kinds double as the plan's control vocabulary.
ELEMENT_KINDS = ("button", "slider", "dropdown", "drag-surface", "toggle", "text-input")


@dataclass(frozen=True)
class InteractiveElement:
    """One element that supports user interaction on a rendered page."""

    kind: str
    locator: str
    label: str = ""
    module_label: str = ""


@dataclass(frozen=True)
class ProbeAction:
    """One synthesized interaction against a locatable element.

    kind: click | set-value | select | drag | type
    value: slider value, option value, or typed text, by action kind
    delta: (dx, dy) pixel offset for drag actions
    """

    kind: str
    locator: str
    value: str | float | None = None
    delta: tuple[int, int] | None = None

    def describe(self) -> str:
        if self.kind == "drag" and self.delta:
            return f"drag {self.locator} by {self.delta[0]},{self.delta[1]}"
        if self.value is not None:
            return f"{self.kind} {self.locator} -> {self.value}"
        return f"{self.kind} {self.locator}"
