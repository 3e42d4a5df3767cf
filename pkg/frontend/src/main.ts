import type { ApiClient } from "./api.js";
import { HttpApi, ServiceError } from "./api.js";
import type { Point } from "./layout.js";
import { circularLayout, withOverride } from "./layout.js";
import type { SessionState } from "./model.js";
import { detectReturnPeriod } from "./model.js";
import { renderExplorer } from "./render.js";

const CANVAS = 480;

/**
 * One explorer drives one service session.  Every mutation waits for the
 * service reply and the view is rebuilt from that reply; nothing is
 * extrapolated client-side, so the rendered strings are exactly what the
 * service sent.
 */
export class Explorer {
  private current: SessionState;
  private readonly initial: SessionState;
  private overrides: ReadonlyMap<number, Point> = new Map();
  private lastMutated: number | null = null;
  private error: string | null = null;
  private busy = false;

  private constructor(
    private readonly container: HTMLElement,
    private readonly api: ApiClient,
    private readonly sessionId: string,
    state: SessionState,
  ) {
    this.initial = state;
    this.current = state;
  }

  static async create(
    container: HTMLElement,
    api: ApiClient,
    body: unknown,
  ): Promise<Explorer> {
    const doc = await api.createSession(body);
    const explorer = new Explorer(container, api, doc.id, doc.state);
    explorer.render();
    return explorer;
  }

  get state(): SessionState {
    return this.current;
  }

  /** Mutate at a vertex.  Frozen vertices and stacked clicks are ignored
   * before any request is made. */
  async clickVertex(vertex: number): Promise<void> {
    if (this.busy || this.current.quiver.frozen.includes(vertex)) {
      return;
    }
    if (vertex < 0 || vertex >= this.current.quiver.b.length) {
      return;
    }
    await this.apply(() => this.api.mutate(this.sessionId, vertex), vertex);
  }

  async undo(): Promise<void> {
    if (this.busy || this.current.step === 0) {
      return;
    }
    await this.apply(() => this.api.undo(this.sessionId), null);
  }

  /** Jump back to an earlier step by undoing server-side, one step at a
   * time; the view always shows a state the service produced. */
  async jumpTo(step: number): Promise<void> {
    while (this.current.step > Math.max(step, 0)) {
      const before = this.current.step;
      await this.undo();
      if (this.current.step === before) {
        return; // an error stopped the walk; the banner is already up
      }
    }
  }

  /** Pin one vertex to a dragged position. */
  setOverride(vertex: number, p: Point): void {
    this.overrides = withOverride(this.overrides, vertex, p);
    this.render();
  }

  private async apply(
    call: () => Promise<SessionState>,
    mutated: number | null,
  ): Promise<void> {
    this.busy = true;
    try {
      this.current = await call();
      this.lastMutated = mutated;
      this.error = null;
    } catch (err) {
      this.error =
        err instanceof ServiceError
          ? `service error ${err.status}: ${err.message}`
          : "service unreachable";
    } finally {
      this.busy = false;
    }
    this.render();
  }

  private render(): void {
    renderExplorer(
      this.container,
      {
        state: this.current,
        positions: circularLayout(
          this.current.quiver.b.length,
          CANVAS,
          CANVAS,
          this.overrides,
        ),
        lastMutated: this.lastMutated,
        period: detectReturnPeriod(this.initial, this.current),
        error: this.error,
      },
      {
        onVertexClick: (v) => void this.clickVertex(v),
        onUndo: () => void this.undo(),
        onJump: (step) => void this.jumpTo(step),
        onDragStart: (v, ev) => this.beginDrag(v, ev),
      },
    );
  }

  private beginDrag(vertex: number, start: Event): void {
    const svg = this.container.querySelector("svg.quiver");
    if (!svg || !(start instanceof MouseEvent)) {
      return;
    }
    const box = (svg as SVGSVGElement).getBoundingClientRect();
    const move = (ev: Event): void => {
      const m = ev as MouseEvent;
      this.setOverride(vertex, {
        x: ((m.clientX - box.left) / Math.max(box.width, 1)) * CANVAS,
        y: ((m.clientY - box.top) / Math.max(box.height, 1)) * CANVAS,
      });
    };
    const stop = (): void => {
      window.removeEventListener("pointermove", move);
      window.removeEventListener("pointerup", stop);
    };
    window.addEventListener("pointermove", move);
    window.addEventListener("pointerup", stop);
  }
}

/** Wire an explorer to a running service over HTTP. */
export function connectExplorer(
  container: HTMLElement,
  baseUrl: string,
  body: unknown,
): Promise<Explorer> {
  return Explorer.create(container, new HttpApi(baseUrl), body);
}
