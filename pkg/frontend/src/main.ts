import { ApiClient } from "./api.js";
import { SessionController } from "./controller.js";
import { Elements, render } from "./render.js";

declare global {
  interface Window {
    ANYSORT_API_BASE?: string;
  }
}

function requireElement(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node;
}

function main(): void {
  const base = window.ANYSORT_API_BASE ?? "http://localhost:8000";
  const elements: Elements = {
    compare: requireElement("compare"),
    progress: requireElement("progress"),
    controls: requireElement("controls"),
  };
  const controller = new SessionController(new ApiClient(base), (c) =>
    render(c, elements),
  );

  const form = requireElement("setup") as HTMLFormElement;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const items = (requireElement("items") as HTMLInputElement).value
      .split(",")
      .map((label) => label.trim())
      .filter((label) => label.length > 0);
    const algorithm = (requireElement("algorithm") as HTMLSelectElement).value;
    if (items.length === 0) return;
    void controller.start(items, algorithm);
  });
}

main();
