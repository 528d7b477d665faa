"""Deterministic scripted model backend behind the committed replay bundle.

Every handler is a pure function of the request, so recording the same
runs twice yields byte-identical fixtures:

* planner: one fixed three-module plan for a synthetic epidemiology topic.
* block generator: candidate variants keyed by the request seed. Seed 1 is
  a bare-bones block, seed 2 is mid-weight but deliberately broken for
  module 2 (unbalanced tags, so the build stage fails it), seed 3 is a
  visually rich block. Richer blocks paint more pixels on purpose.
* merger: mechanically assembles the winning blocks from the prompt into
  a sidebar application, preserving every module marker.
* scorer: reads the candidate screenshot and returns logits proportional
  to its ink coverage, so richer variants win selection.

Interactive elements in the rich blocks are tuned so that the first probe
of any visible element moves well more than the 0.002 screenshot-diff
threshold: slider rest values sit at least 12 points from every probe
fraction of the 0..100 range, drags shift wide bars by 40+ points, and
buttons recolor large panels on every click.
"""

from __future__ import annotations

import io
import re

import numpy as np
from PIL import Image

from paperweb.gateway import ModelRequest, StaticBackend

TOPIC = "Epidemic Spread on Small-World Networks"

PAPER_TEXT = """\
# Epidemic Spread on Small-World Networks

## Abstract

We study how infectious diseases move through populations whose contact
structure is a ring lattice with a small fraction of rewired shortcut
edges. Shortcuts collapse average path lengths, so outbreaks that would
creep around a ring instead jump across the population. We couple an SIR
compartment model to the rewiring probability and compare lockdown and
vaccination policies on the resulting networks.

## Model

Each node is susceptible, infected, or recovered. At every step an
infected node transmits along each edge with probability beta and
recovers with probability gamma. The contact graph starts as a ring
lattice where every node links to its four nearest neighbors; with
probability p each edge is rewired to a uniformly random endpoint,
producing the small-world regime between order and randomness.
\f
## Interventions

Lockdown removes a fixed share of contacts for every node, scaling the
effective transmission rate down. Vaccination immunizes nodes before the
outbreak: the random strategy picks nodes uniformly, while the targeted
strategy immunizes the highest-degree nodes first. Targeted vaccination
dominates random vaccination on small-world graphs because shortcuts
concentrate on few hubs.

## Results

Raising the rewiring probability sharply lowers the epidemic threshold:
even p = 0.05 makes the infection curve peak several times earlier than
on the pure ring. Lockdown delays and flattens the peak but does not
change the final size much; targeted vaccination both delays the peak
and shrinks the final size. Figure 1 summarizes peak infection against
rewiring probability for each policy.
\f
## Discussion

The three mechanisms worth manipulating directly are the infection
dynamics (beta and gamma), the topology (rewiring probability), and the
policy mix (lockdown and vaccination strategy). Each mechanism has a
one-screen visualization: compartment bars over time, a lattice view
with shortcut edges, and per-policy peak comparisons.
"""

# Mechanism phrases appear verbatim in the plan, the module markers, and
# the per-module headings, so marker extraction matches the plan-derived
# checklist exactly.
MODULES = {
    1: (
        "Outbreak Curve Simulator",
        "transmission and recovery rates reshape the infection curve",
    ),
    2: (
        "Network Rewiring Explorer",
        "shortcut edges shrink path lengths across the ring lattice",
    ),
    3: (
        "Intervention Comparison",
        "lockdown and vaccination policies cut the effective contact rate",
    ),
}

PLAN_TEXT = f"""\
topic: {TOPIC}
navigation: sidebar
shell: single-page application

module: 1
title: {MODULES[1][0]}
mechanism: {MODULES[1][1]}
control: slider | transmission rate | 0 to 100
control: slider | recovery rate | 0 to 100
control: button | advance one step |
output: transmission and recovery bars
output: epidemic phase panel
interaction: moving a rate slider resizes its bar at once

module: 2
title: {MODULES[2][0]}
mechanism: {MODULES[2][1]}
control: slider | rewiring probability | 0 to 100
control: drag-surface | lattice viewport | pan
control: button | rewire now |
output: rewiring share bar
output: pan position bar and edge palette panel
interaction: dragging the lattice moves the pan bar

module: 3
title: {MODULES[3][0]}
mechanism: {MODULES[3][1]}
control: toggle | lockdown | on or off
control: dropdown | vaccination strategy | none, random, targeted
control: button | compare scenarios |
output: one policy panel per strategy
output: scenario tone panel
interaction: switching policy swaps which panels are visible
"""


def marker(module_id: int) -> str:
    title, mechanism = MODULES[module_id]
    return f"<!-- @module {module_id}: {title}: {mechanism} -->"


_PLAIN = {
    1: """\
{marker}
<div data-module="module-1" data-state='{{"m1_step": 0}}'>
  <h3>Outbreak Curve Simulator</h3>
  <button data-on-click="inc:m1_step">Advance one step</button>
  <p data-template="Day {{m1_step}} of the outbreak"></p>
</div>
""",
    2: """\
{marker}
<div data-module="module-2" data-state='{{"m2_steps": 0}}'>
  <h3>Network Rewiring Explorer</h3>
  <button data-on-click="inc:m2_steps">Rewire now</button>
  <p data-template="Rewired {{m2_steps}} times"></p>
</div>
""",
    3: """\
{marker}
<div data-module="module-3" data-state='{{"m3_runs": 0}}'>
  <h3>Intervention Comparison</h3>
  <button data-on-click="inc:m3_runs">Compare scenarios</button>
  <p data-template="Compared {{m3_runs}} scenario sets"></p>
</div>
""",
}

_COMPACT = {
    1: """\
{marker}
<div data-module="module-1" data-state='{{"m1_beta": 37, "m1_step": 0}}'>
  <h3>Outbreak Curve Simulator</h3>
  <input type="range" min="0" max="100" value="37" data-bind="m1_beta">
  <button data-on-click="inc:m1_step">Advance one step</button>
  <div data-bar="m1_beta" data-bar-max="100" style="height:48px;background:#dc2626"></div>
  <p data-template="Day {{m1_step}}: transmission {{m1_beta}}"></p>
</div>
""",
    3: """\
{marker}
<div data-module="module-3" data-state='{{"m3_lockdown": false, "m3_runs": 0}}'>
  <h3>Intervention Comparison</h3>
  <button data-on-click="toggle:m3_lockdown" data-pressed-if="m3_lockdown">Lockdown</button>
  <button data-on-click="inc:m3_runs">Compare scenarios</button>
  <div data-show-if="m3_lockdown" style="background:#1d4ed8;padding:24px">
    <p>Lockdown halves contact rates</p>
  </div>
</div>
""",
}

# Balanced nowhere: one div too many, so the static toolchain rejects it.
_BROKEN_2 = """\
{marker}
<div data-module="module-2" data-state='{{"m2_rewire": 62}}'>
  <h3>Network Rewiring Explorer</h3>
  <div>
    <p>Unfinished lattice panel</p>
</div>
"""

_RICH = {
    1: """\
{marker}
<div data-module="module-1" data-state='{{"m1_beta": 37, "m1_gamma": 12, "m1_step": 0, "m1_phase": "#2563eb"}}'>
  <h2>Outbreak Curve Simulator</h2>
  <p>Raise transmission or slow recovery and watch the curve respond.</p>
  <input type="range" min="0" max="100" value="37" data-bind="m1_beta">
  <input type="range" min="0" max="100" value="12" data-bind="m1_gamma">
  <button data-on-click="inc:m1_step;cycle:m1_phase=#2563eb,#dc2626,#16a34a">Advance one step</button>
  <p data-template="Day {{m1_step}}: transmission {{m1_beta}}, recovery {{m1_gamma}}"></p>
  <div data-bar="m1_beta" data-bar-max="100" style="height:72px;background:#dc2626"></div>
  <div data-bar="m1_gamma" data-bar-max="100" style="height:72px;background:#16a34a"></div>
  <div data-bg-bind="m1_phase" style="padding:34px"><p>Epidemic phase</p></div>
</div>
""",
    2: """\
{marker}
<div data-module="module-2" data-state='{{"m2_rewire": 62, "m2_pan_x": 50, "m2_pan_y": 40, "m2_palette": "#0ea5e9"}}'>
  <h2>Network Rewiring Explorer</h2>
  <p>Rewire lattice edges into shortcuts and pan across the layout.</p>
  <input type="range" min="0" max="100" value="62" data-bind="m2_rewire">
  <div data-drag="m2_pan" style="height:56px;border:1px solid #475569">
    <p>Drag to pan the lattice</p>
  </div>
  <button data-on-click="cycle:m2_palette=#0ea5e9,#f59e0b,#8b5cf6">Rewire now</button>
  <div data-bar="m2_rewire" data-bar-max="100" style="height:72px;background:#7c3aed"></div>
  <div data-bar="m2_pan_x" data-bar-max="100" style="height:72px;background:#0ea5e9"></div>
  <div data-bg-bind="m2_palette" style="padding:34px"><p>Edge palette</p></div>
</div>
""",
    3: """\
{marker}
<div data-module="module-3" data-state='{{"m3_lockdown": false, "m3_strategy": "none", "m3_tone": "#64748b"}}'>
  <h2>Intervention Comparison</h2>
  <p>Toggle policies and compare how each strategy caps the peak.</p>
  <button data-on-click="toggle:m3_lockdown" data-pressed-if="m3_lockdown">Lockdown</button>
  <select data-bind="m3_strategy">
    <option>none</option>
    <option>random</option>
    <option>targeted</option>
  </select>
  <button data-on-click="cycle:m3_tone=#64748b,#b91c1c,#047857">Compare scenarios</button>
  <div data-show-if="m3_lockdown" style="background:#1d4ed8;padding:24px">
    <p>Lockdown halves contact rates</p>
  </div>
  <div data-show-if="m3_strategy=none" style="background:#e2e8f0;padding:24px">
    <p>No vaccination: tallest peak</p>
  </div>
  <div data-show-if="m3_strategy=random" style="background:#f59e0b;padding:24px">
    <p>Random vaccination trims the peak</p>
  </div>
  <div data-show-if="m3_strategy=targeted" style="background:#10b981;padding:24px">
    <p>Targeted vaccination flattens the curve</p>
  </div>
  <div data-bg-bind="m3_tone" style="padding:34px"><p>Scenario tone</p></div>
</div>
""",
}


def candidate_source(module_id: int, seed: int) -> str:
    """The block the scripted generator emits for (module, seed)."""
    if seed == 1:
        template = _PLAIN[module_id]
    elif seed == 2:
        template = _BROKEN_2 if module_id == 2 else _COMPACT.get(module_id, _PLAIN[module_id])
    else:
        template = _RICH[module_id]
    return template.format(marker=marker(module_id))


_MODULE_LINE = re.compile(r"^Module (\d+): ", re.MULTILINE)
_MERGE_SECTION = re.compile(r"^--- module (\d+): (.+?) ---\n```\n(.*?)\n```", re.MULTILINE | re.DOTALL)

_NAV_COLORS = "#1e3a8a,#fde047,#fb7185"


def merged_app_source(prompt: str) -> str:
    """Assemble the winning blocks from a merge prompt into a sidebar app."""
    sections = _MERGE_SECTION.findall(prompt)
    if not sections:
        raise AssertionError("merge prompt carries no module sections")
    nav = []
    panes = []
    for number, title, body in sections:
        nav.append(
            f'    <button data-on-click="set:view={number};cycle:nav_pulse={_NAV_COLORS}">'
            f"{number}. {title}</button>"
        )
        indented = "\n".join("      " + line if line else "" for line in body.splitlines())
        panes.append(f'    <section data-show-if="view={number}">\n{indented}\n    </section>')
    first = sections[0][0]
    return (
        f'<div data-state=\'{{"view": {first}, "nav_pulse": "#1e3a8a"}}\' data-layout="row">\n'
        '  <div style="width:220px;background:#f1f5f9">\n'
        "    <h3>Modules</h3>\n"
        + "\n".join(nav)
        + "\n"
        '    <div data-bg-bind="nav_pulse" style="padding:40px"><p>Navigation pulse</p></div>\n'
        "  </div>\n"
        "  <div>\n"
        + "\n".join(panes)
        + "\n"
        "  </div>\n"
        "</div>\n"
    )


def scripted_complete(request: ModelRequest) -> str:
    if request.role == "planner":
        return f"Here is the module plan.\n\n```plan\n{PLAN_TEXT}```\n"
    if request.role == "block-generator":
        match = _MODULE_LINE.search(request.prompt)
        if match is None:
            raise AssertionError("block prompt names no module")
        source = candidate_source(int(match.group(1)), int(request.seed or 0))
        return f"```html\n{source}```\n"
    if request.role == "merger":
        return f"```html\n{merged_app_source(request.prompt)}```\n"
    raise AssertionError(f"scripted backend has no completion for role {request.role!r}")


def ink_fraction(png: bytes) -> float:
    """Share of pixels that are not pure white."""
    image = Image.open(io.BytesIO(png)).convert("RGB")
    pixels = np.asarray(image)
    return float((pixels != 255).any(axis=2).mean())


def scripted_logits(request: ModelRequest) -> dict[str, float]:
    if not request.images:
        raise AssertionError("scorer request carries no screenshot")
    yes = round(10.0 * ink_fraction(request.images[0]), 6)
    return {"Yes": yes, "No": 1.0}


def scripted_backend() -> StaticBackend:
    return StaticBackend(scripted_complete, scripted_logits)
