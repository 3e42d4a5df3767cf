import type { Point } from "./layout.js";
import type { SessionState } from "./model.js";
import { signOf, weightText } from "./model.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface ViewState {
  state: SessionState;
  positions: Point[];
  /** Vertex of the most recent mutation, highlighted in the drawing. */
  lastMutated: number | null;
  /** Step count when the walk has returned to the start, else null. */
  period: number | null;
  /** Banner text when the service is unreachable or answered an error. */
  error: string | null;
}

export interface ViewHandlers {
  onVertexClick(vertex: number): void;
  onUndo(): void;
  onJump(step: number): void;
  onDragStart?(vertex: number, event: Event): void;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, v);
  }
  return el;
}

function drawArrows(svg: SVGElement, view: ViewState): void {
  const { b } = view.state.quiver;
  const pos = view.positions;
  for (let i = 0; i < b.length; i++) {
    for (let j = 0; j < b.length; j++) {
      const entry = b[i]![j]!;
      if (entry <= 0) {
        continue;
      }
      const from = pos[i]!;
      const to = pos[j]!;
      const line = svgEl("line", {
        x1: String(from.x),
        y1: String(from.y),
        x2: String(to.x),
        y2: String(to.y),
        class: "arrow",
        "data-from": String(i),
        "data-to": String(j),
        "marker-end": "url(#head)",
      });
      svg.appendChild(line);
      if (entry > 1) {
        const label = svgEl("text", {
          x: String((from.x + to.x) / 2),
          y: String((from.y + to.y) / 2 - 6),
          class: "multiplicity",
        });
        label.textContent = String(entry);
        svg.appendChild(label);
      }
    }
  }
}

function drawVertices(
  svg: SVGElement,
  view: ViewState,
  handlers: ViewHandlers,
): void {
  const { w, frozen } = view.state.quiver;
  const frozenSet = new Set(frozen);
  for (let i = 0; i < view.positions.length; i++) {
    const p = view.positions[i]!;
    const isFrozen = frozenSet.has(i);
    const classes = ["vertex"];
    if (isFrozen) {
      classes.push("frozen");
    }
    if (view.lastMutated === i) {
      classes.push("highlight");
    }
    const g = svgEl("g", {
      class: classes.join(" "),
      "data-vertex": String(i),
    });
    if (isFrozen) {
      g.setAttribute("aria-disabled", "true");
    } else {
      // only mutable vertices get a click handler at all, so a click on a
      // frozen vertex cannot reach the network layer
      g.addEventListener("click", () => handlers.onVertexClick(i));
      if (handlers.onDragStart) {
        g.addEventListener("pointerdown", (ev) =>
          handlers.onDragStart!(i, ev),
        );
      }
    }
    const shape = isFrozen
      ? svgEl("rect", {
          x: String(p.x - 16),
          y: String(p.y - 16),
          width: "32",
          height: "32",
          class: "shape",
        })
      : svgEl("circle", {
          cx: String(p.x),
          cy: String(p.y),
          r: "18",
          class: "shape",
        });
    g.appendChild(shape);
    const name = svgEl("text", {
      x: String(p.x),
      y: String(p.y + 4),
      class: "name",
      "text-anchor": "middle",
    });
    name.textContent = String(i);
    g.appendChild(name);
    const text = weightText(w[i]!);
    const badge = svgEl("text", {
      x: String(p.x),
      y: String(p.y - 24),
      class: `weight ${signOf(text)}`,
      "text-anchor": "middle",
      "data-vertex": String(i),
    });
    badge.textContent = text;
    g.appendChild(badge);
    svg.appendChild(g);
  }
}

function renderVariables(container: HTMLElement, state: SessionState): void {
  if (state.vars === null) {
    return;
  }
  const list = document.createElement("ul");
  list.className = "variables";
  for (const pair of state.vars) {
    const item = document.createElement("li");
    const even = document.createElement("span");
    even.className = "even";
    even.textContent = pair.even;
    const odd = document.createElement("span");
    odd.className = "odd";
    odd.textContent = pair.odd;
    item.append(even, odd);
    list.appendChild(item);
  }
  container.appendChild(list);
}

function renderBreadcrumb(
  container: HTMLElement,
  state: SessionState,
  handlers: ViewHandlers,
): void {
  const nav = document.createElement("nav");
  nav.className = "breadcrumb";
  const home = document.createElement("button");
  home.className = "home";
  home.textContent = "start";
  home.addEventListener("click", () => handlers.onJump(0));
  nav.appendChild(home);
  state.history.forEach((vertex, k) => {
    const crumb = document.createElement("button");
    crumb.className = "crumb";
    crumb.dataset.step = String(k + 1);
    crumb.textContent = `v${vertex}`;
    crumb.addEventListener("click", () => handlers.onJump(k + 1));
    nav.appendChild(crumb);
  });
  const undo = document.createElement("button");
  undo.className = "undo";
  undo.textContent = "undo";
  undo.disabled = state.step === 0;
  undo.addEventListener("click", () => handlers.onUndo());
  nav.appendChild(undo);
  container.appendChild(nav);
}

const CANVAS = 480;

/** Rebuild the whole view from scratch; the state is small enough that a
 * diffing layer would just be another thing to test. */
export function renderExplorer(
  container: HTMLElement,
  view: ViewState,
  handlers: ViewHandlers,
): void {
  container.textContent = "";
  if (view.error !== null) {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = view.error;
    container.appendChild(banner);
  }
  const status = document.createElement("div");
  status.className = "status";
  const step = document.createElement("span");
  step.className = "step";
  step.textContent = `step ${view.state.step}`;
  status.appendChild(step);
  if (view.period !== null) {
    const badge = document.createElement("span");
    badge.className = "period-badge";
    badge.textContent = `period ${view.period}`;
    status.appendChild(badge);
  }
  container.appendChild(status);

  const svg = svgEl("svg", {
    class: "quiver",
    viewBox: `0 0 ${CANVAS} ${CANVAS}`,
    width: String(CANVAS),
    height: String(CANVAS),
  });
  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "head",
    orient: "auto",
    markerWidth: "8",
    markerHeight: "8",
    refX: "26",
    refY: "4",
  });
  marker.appendChild(svgEl("path", { d: "M0,0 L8,4 L0,8 z" }));
  defs.appendChild(marker);
  svg.appendChild(defs);
  drawArrows(svg, view);
  drawVertices(svg, view, handlers);
  container.appendChild(svg);

  renderVariables(container, view.state);
  renderBreadcrumb(container, view.state, handlers);
}
