import { describe, expect, it } from "vitest";

import { LatestRequestScheduler } from "../src/scheduler.js";

interface Pending<T> {
  request: T;
  resolve: (value: string) => void;
  reject: (error: unknown) => void;
}

function manualScheduler<T>() {
  const sent: Pending<T>[] = [];
  const delivered: string[] = [];
  const errors: unknown[] = [];
  const scheduler = new LatestRequestScheduler<T, string>(
    (request) =>
      new Promise<string>((resolve, reject) => {
        sent.push({ request, resolve, reject });
      }),
    (result) => delivered.push(result),
    (error) => errors.push(error),
  );
  return { scheduler, sent, delivered, errors };
}

const tick = () => new Promise<void>((resolve) => setTimeout(resolve, 0));

describe("LatestRequestScheduler", () => {
  it("sends immediately when idle", () => {
    const { scheduler, sent } = manualScheduler<number>();
    scheduler.submit(1);
    expect(sent.map((s) => s.request)).toEqual([1]);
  });

  it("keeps at most one request in flight and never drops the final state", async () => {
    const { scheduler, sent, delivered } = manualScheduler<number>();
    scheduler.submit(1);
    scheduler.submit(2);
    scheduler.submit(3);
    scheduler.submit(4);
    expect(sent).toHaveLength(1); // 2 and 3 were overwritten by 4
    sent[0]!.resolve("r1");
    await tick();
    expect(sent.map((s) => s.request)).toEqual([1, 4]);
    sent[1]!.resolve("r4");
    await tick();
    expect(delivered).toEqual(["r1", "r4"]);
    expect(scheduler.busy).toBe(false);
  });

  it("reports errors without losing the pending state", async () => {
    const { scheduler, sent, delivered, errors } = manualScheduler<number>();
    scheduler.submit(1);
    scheduler.submit(2);
    sent[0]!.reject(new Error("down"));
    await tick();
    expect(errors).toHaveLength(1);
    expect(sent.map((s) => s.request)).toEqual([1, 2]);
    sent[1]!.resolve("r2");
    await tick();
    expect(delivered).toEqual(["r2"]);
  });

  it("quiesces after the last submission", async () => {
    const { scheduler, sent, delivered } = manualScheduler<number>();
    scheduler.submit(1);
    sent[0]!.resolve("r1");
    await tick();
    expect(delivered).toEqual(["r1"]);
    expect(sent).toHaveLength(1);
    scheduler.submit(9);
    expect(sent.map((s) => s.request)).toEqual([1, 9]);
  });
});
