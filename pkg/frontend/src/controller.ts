/** Session state machine for the UI: serializes requests, discards stale
 * responses by sequence number, and tracks which items moved between
 * consecutive estimates. Never reorders anything client-side. */

import { ApiClient, ApiError, SessionView } from "./api.js";

/** Item indices whose position differs between two estimates. */
export function movedItems(
  previous: readonly number[],
  next: readonly number[],
): number[] {
  const positions = new Map<number, number>();
  previous.forEach((item, pos) => positions.set(item, pos));
  return next.filter((item, pos) => positions.get(item) !== pos);
}

export interface ProgressView {
  comparisonsDone: number;
  itemCount: number;
  estimate: string[];
  /** item indices highlighted because they moved since the last answer */
  highlights: number[];
  sortedBadge: boolean;
}

export function progressView(
  view: SessionView,
  highlights: readonly number[],
): ProgressView {
  return {
    comparisonsDone: view.comparisons_done,
    itemCount: view.labels.length,
    estimate: view.estimate,
    highlights: [...highlights],
    sortedBadge: view.status === "completed",
  };
}

export class SessionController {
  private view_: SessionView | null = null;
  private highlights_: number[] = [];
  /** sequence number of the newest request; older responses are dropped */
  private seq = 0;
  private inFlight = false;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (controller: SessionController) => void = () => {},
  ) {}

  get view(): SessionView | null {
    return this.view_;
  }

  get highlights(): readonly number[] {
    return this.highlights_;
  }

  get busy(): boolean {
    return this.inFlight;
  }

  get progress(): ProgressView | null {
    return this.view_ ? progressView(this.view_, this.highlights_) : null;
  }

  exportUrl(): string | null {
    return this.view_ ? this.api.exportUrl(this.view_.id) : null;
  }

  async start(labels: string[], algorithm = "corsort"): Promise<void> {
    await this.run(() => this.api.createSession(labels, algorithm));
  }

  /** Answer the pending pair with the chosen lesser item. Ignored while
   * another request is in flight; a stale-pair conflict refetches state. */
  async answer(lesser: number): Promise<void> {
    const pending = this.view_?.pending;
    if (!pending || this.inFlight || this.view_ === null) return;
    const id = this.view_.id;
    await this.run(async () => {
      try {
        return await this.api.answer(id, pending.pair, lesser);
      } catch (err) {
        if (err instanceof ApiError && err.status === 409) {
          return await this.api.getSession(id);
        }
        throw err;
      }
    });
  }

  async interrupt(): Promise<void> {
    if (this.view_ === null || this.view_.status !== "active") return;
    const id = this.view_.id;
    await this.run(() => this.api.interrupt(id));
  }

  async refresh(): Promise<void> {
    if (this.view_ === null) return;
    const id = this.view_.id;
    await this.run(() => this.api.getSession(id));
  }

  private async run(call: () => Promise<SessionView>): Promise<void> {
    const ticket = ++this.seq;
    this.inFlight = true;
    try {
      const next = await call();
      if (ticket !== this.seq) return; // a newer request superseded this one
      this.apply(next);
    } finally {
      if (ticket === this.seq) {
        this.inFlight = false;
        this.onChange(this);
      }
    }
  }

  private apply(next: SessionView): void {
    const previous = this.view_;
    this.highlights_ =
      previous === null || previous.id !== next.id
        ? []
        : movedItems(previous.estimate_indices, next.estimate_indices);
    this.view_ = next;
  }
}
