/** End-to-end test against the real session service: replays the published
 * five-element execution through the controller, interrupts mid-run, and
 * checks the surfaced estimate and export. Requires the Python package to
 * be installed (`anysort` on PATH). */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { SessionController } from "../src/controller.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/sessions/probe`);
      if (response.status === 404) return; // service is answering
    } catch {
      // not listening yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn("anysort", ["serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForServer(30_000);
}, 40_000);

afterAll(() => {
  server.kill();
});

describe("live session", () => {
  it("replays the reference run, interrupts after 3 answers, exports", async () => {
    const labels = ["d", "b", "c", "a", "e"];
    const values = [4, 2, 3, 1, 5]; // hidden ground truth per label
    const controller = new SessionController(new ApiClient(BASE));

    await controller.start(labels, "corsort");
    expect(controller.view?.status).toBe("active");
    expect(controller.view?.estimate).toEqual(labels); // k=0: input order
    expect(controller.highlights).toEqual([]);

    for (let step = 0; step < 3; step++) {
      const pending = controller.view?.pending;
      expect(pending).not.toBeNull();
      const [i, j] = pending!.pair;
      expect(pending!.labels).toEqual([labels[i], labels[j]]);
      await controller.answer(values[i] < values[j] ? i : j);
    }
    const asString = (indices: number[]) =>
      indices.map((k) => String(values[k])).join("");
    expect(controller.view?.comparisons_done).toBe(3);
    expect(asString(controller.view!.estimate_indices)).toBe("12354");

    await controller.interrupt();
    expect(controller.view?.status).toBe("interrupted");
    expect(controller.view?.comparisons_done).toBe(3);
    expect(asString(controller.view!.estimate_indices)).toBe("12354");
    expect(controller.progress?.sortedBadge).toBe(false);

    const exported = await new ApiClient(BASE).exportSession(
      controller.view!.id,
    );
    expect(exported.status).toBe("interrupted");
    expect(exported.history).toHaveLength(3);
    expect(exported.estimate.join("")).toBe("abced"); // labels for values 1,2,3,5,4
  }, 30_000);
});
