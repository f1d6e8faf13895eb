/** DOM rendering. Pure presentation: every list shown here is the server's
 * latest estimate verbatim. */

import { SessionController } from "./controller.js";

export interface Elements {
  compare: HTMLElement;
  progress: HTMLElement;
  controls: HTMLElement;
}

function el(
  tag: string,
  className: string,
  text?: string,
): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function render(
  controller: SessionController,
  elements: Elements,
): void {
  const view = controller.view;
  elements.compare.replaceChildren();
  elements.progress.replaceChildren();
  elements.controls.replaceChildren();
  if (view === null) return;

  // comparison panel
  if (view.pending !== null) {
    const prompt = el("p", "prompt", "Which is smaller?");
    elements.compare.append(prompt);
    view.pending.labels.forEach((label, which) => {
      const button = el("button", "choice", label) as HTMLButtonElement;
      button.disabled = controller.busy;
      button.addEventListener("click", () => {
        void controller.answer(view.pending!.pair[which]);
      });
      elements.compare.append(button);
    });
  } else {
    const headline =
      view.status === "completed" ? "Sorted!" : "Interrupted — best estimate:";
    elements.compare.append(el("p", "prompt", headline));
  }

  // progress panel
  const progress = controller.progress!;
  elements.progress.append(
    el(
      "p",
      "counts",
      `${progress.comparisonsDone} comparisons · ${progress.itemCount} items`,
    ),
  );
  if (progress.sortedBadge) {
    elements.progress.append(el("span", "badge sorted", "sorted"));
  }
  const list = el("ol", "estimate");
  const highlighted = new Set(progress.highlights);
  view.estimate_indices.forEach((item, pos) => {
    const entry = el(
      "li",
      highlighted.has(item) ? "item moved" : "item",
      progress.estimate[pos],
    );
    list.append(entry);
  });
  elements.progress.append(list);

  // controls
  if (view.status === "active") {
    const stop = el("button", "stop", "Stop") as HTMLButtonElement;
    stop.disabled = controller.busy;
    stop.addEventListener("click", () => void controller.interrupt());
    elements.controls.append(stop);
  } else {
    const link = el("a", "export", "Export session JSON") as HTMLAnchorElement;
    link.href = controller.exportUrl()!;
    link.target = "_blank";
    elements.controls.append(link);
  }
}
