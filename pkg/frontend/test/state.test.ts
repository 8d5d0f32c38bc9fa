// Controller flows against a scripted mock of the session service.

import { describe, expect, it } from "vitest";
import { Api, Http } from "../src/api.js";
import { BoardController, isWon } from "../src/state.js";
import { renderLampStrip, renderSolverPanel, renderStatus } from "../src/render.js";

// the seven-lamp system: rows of region indices toggling each lamp
const ROWS: number[][] = [
  [0, 4, 6, 7],
  [3, 4, 5, 8, 9],
  [2, 5, 9, 10],
  [0, 1, 3, 4],
  [1, 2, 3, 5],
  [6, 7, 8, 11],
  [8, 9, 10, 11],
];

interface MockOptions {
  lamps: number[];
  solvable: boolean;
  delayMoves?: boolean;
}

function mockServer(opts: MockOptions) {
  const state = {
    lamps: [...opts.lamps],
    history: [] as number[],
    pendingResolvers: [] as (() => void)[],
  };
  const board = {
    sites: ["v1", "v2", "v3", "v4", "v5", "v6", "v7"],
    regions: Array.from({ length: 12 }, (_, i) => `R${i + 1}`),
    matrix: [],
    layout: null,
  };
  const applyMove = (region: number) => {
    state.history.push(region);
    ROWS.forEach((row, lamp) => {
      if (row.includes(region)) state.lamps[lamp] ^= 1;
    });
  };
  const sessionPayload = () => ({
    id: "s1",
    lamps: [...state.lamps],
    history: [...state.history],
    won: state.lamps.every((b) => b === 1),
  });
  const http: Http = async (method, path, body) => {
    if (method === "POST" && path === "/api/v1/session") {
      return { ...sessionPayload(), board };
    }
    if (method === "POST" && path.endsWith("/move")) {
      if (opts.delayMoves) {
        await new Promise<void>((resolve) => state.pendingResolvers.push(resolve));
      }
      applyMove((body as { region: number }).region);
      return sessionPayload();
    }
    if (method === "GET" && path.endsWith("/hint")) {
      if (!opts.solvable) return { hint: null, certificate: [0, 2, 3, 4, 5, 6] };
      return { hint: 8, solution: [8, 11] };
    }
    throw new Error(`unexpected ${method} ${path}`);
  };
  return { http, state };
}

function tick(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("playing the seven-lamp board", () => {
  it("clicking R9 then R12 from all-on-but-v2 wins", async () => {
    const { http } = mockServer({ lamps: [1, 0, 1, 1, 1, 1, 1], solvable: true });
    const ctl = new BoardController(new Api(http));
    await ctl.loadBoard({ catalog: "seven-lamps" });
    ctl.clickRegion(8); // R9
    await tick();
    expect(isWon(ctl.state)).toBe(false);
    ctl.clickRegion(11); // R12
    await tick();
    await tick();
    expect(ctl.state.session?.lamps).toEqual([1, 1, 1, 1, 1, 1, 1]);
    expect(isWon(ctl.state)).toBe(true);
    expect(renderStatus(ctl.state)).toContain("solved");
  });

  it("clicking the same region twice restores the board", async () => {
    const { http } = mockServer({ lamps: [1, 0, 1, 1, 1, 1, 1], solvable: true });
    const ctl = new BoardController(new Api(http));
    await ctl.loadBoard({ catalog: "seven-lamps" });
    const before = [...ctl.state.session!.lamps];
    ctl.clickRegion(4);
    await tick();
    await tick();
    expect(ctl.state.session!.lamps).not.toEqual(before);
    ctl.clickRegion(4);
    await tick();
    await tick();
    expect(ctl.state.session!.lamps).toEqual(before);
    expect(ctl.state.session!.history).toEqual([4, 4]);
  });

  it("clicks during a pending request queue and apply in order", async () => {
    const mock = mockServer({
      lamps: [1, 0, 1, 1, 1, 1, 1],
      solvable: true,
      delayMoves: true,
    });
    const ctl = new BoardController(new Api(mock.http));
    await ctl.loadBoard({ catalog: "seven-lamps" });
    ctl.clickRegion(8);
    await tick();
    ctl.clickRegion(11); // queued while the first move is held
    ctl.clickRegion(3);  // also queued
    expect(ctl.state.queue).toEqual([11, 3]);
    mock.state.pendingResolvers.shift()!();
    await tick();
    await tick();
    mock.state.pendingResolvers.shift()!();
    await tick();
    await tick();
    mock.state.pendingResolvers.shift()!();
    await tick();
    await tick();
    expect(mock.state.history).toEqual([8, 11, 3]);
    expect(ctl.state.queue).toEqual([]);
    expect(ctl.state.session!.history).toEqual([8, 11, 3]);
  });
});

describe("unsolvable boards", () => {
  it("shows the certificate rows", async () => {
    const { http } = mockServer({ lamps: [0, 1, 1, 1, 1, 1, 1], solvable: false });
    const ctl = new BoardController(new Api(http));
    await ctl.loadBoard({ catalog: "seven-lamps-unsolvable" });
    await ctl.showCertificate();
    expect(ctl.state.solver).toEqual({
      kind: "certificate",
      rows: [0, 2, 3, 4, 5, 6],
    });
    const panel = renderSolverPanel(ctl.state.solver, ctl.state);
    expect(panel).toContain("unsolvable");
    expect(panel).toContain("v1");
    expect(panel).toContain("v7");
    expect(renderStatus(ctl.state)).toContain("unsolvable");
    const strip = renderLampStrip(ctl.state);
    expect(strip).toContain("certified");
  });

  it("win banner never shows while a lamp is off", async () => {
    const { http } = mockServer({ lamps: [0, 1, 1, 1, 1, 1, 1], solvable: false });
    const ctl = new BoardController(new Api(http));
    await ctl.loadBoard({ catalog: "seven-lamps-unsolvable" });
    expect(isWon(ctl.state)).toBe(false);
    expect(renderStatus(ctl.state)).not.toContain("solved");
  });
});

describe("error handling", () => {
  it("failed moves keep the last confirmed state", async () => {
    let fail = false;
    const base = mockServer({ lamps: [1, 0, 1, 1, 1, 1, 1], solvable: true });
    const flaky: Http = async (method, path, body) => {
      if (method === "POST" && path.endsWith("/move") && fail) {
        throw new Error("boom");
      }
      return base.http(method, path, body);
    };
    const ctl = new BoardController(new Api(flaky));
    await ctl.loadBoard({ catalog: "seven-lamps" });
    ctl.clickRegion(8);
    await tick();
    await tick();
    const confirmed = [...ctl.state.session!.lamps];
    fail = true;
    ctl.clickRegion(11);
    await tick();
    await tick();
    expect(ctl.state.error).toContain("boom");
    expect(ctl.state.session!.lamps).toEqual(confirmed);
    expect(ctl.state.queue).toEqual([]);
  });
});
