// Pure view functions: state in, SVG/HTML strings out.  The main module
// wires them to the DOM; tests assert on the strings directly.

import { AppState, SolverPanel, isWon } from "./state.js";

function viewBoxOf(points: number[][][]): string {
  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const poly of points) {
    for (const [x, y] of poly) {
      minX = Math.min(minX, x);
      minY = Math.min(minY, y);
      maxX = Math.max(maxX, x);
      maxY = Math.max(maxY, y);
    }
  }
  if (!isFinite(minX)) return "0 0 1 1";
  const pad = 0.06 * Math.max(maxX - minX, maxY - minY, 1e-6);
  return `${minX - pad} ${minY - pad} ${maxX - minX + 2 * pad} ${maxY - minY + 2 * pad}`;
}

function polygonPath(points: number[][]): string {
  return points.map(([x, y], i) => `${i ? "L" : "M"}${x},${y}`).join(" ") + " Z";
}

export function renderBoardSvg(state: AppState): string {
  const layout = state.board?.layout;
  if (!layout || !state.session) return "<svg></svg>";
  const highlight = new Set<number>();
  if (state.solver.kind === "hint") highlight.add(state.solver.region);
  if (state.solver.kind === "solution")
    for (const r of state.solver.regions) highlight.add(r);
  const polys = layout.regions
    .filter((r) => !r.outer)
    .map((r) => {
      const cls = highlight.has(r.region) ? "region hinted" : "region";
      return `<path class="${cls}" data-region="${r.region}" d="${polygonPath(r.points)}"/>`;
    })
    .join("");
  const certRows = new Set(
    state.solver.kind === "certificate" ? state.solver.rows : []
  );
  const lamps = layout.lamps
    .map((l) => {
      const on = state.session!.lamps[l.site] === 1;
      const cls = [
        "lamp",
        on ? "on" : "off",
        certRows.has(l.site) ? "certified" : "",
      ].join(" ").trim();
      return `<circle class="${cls}" data-site="${l.site}" cx="${l.at[0]}" cy="${l.at[1]}" r="0.04"/>`;
    })
    .join("");
  const vb = viewBoxOf(layout.regions.map((r) => r.points));
  return `<svg viewBox="${vb}" preserveAspectRatio="xMidYMid meet">${polys}${lamps}</svg>`;
}

export function renderLampStrip(state: AppState): string {
  if (!state.board || !state.session) return "";
  return state.board.sites
    .map((label, i) => {
      const on = state.session!.lamps[i] === 1;
      const cert =
        state.solver.kind === "certificate" && state.solver.rows.includes(i);
      return `<span class="strip ${on ? "on" : "off"}${cert ? " certified" : ""}">${label}</span>`;
    })
    .join("");
}

export function renderHistory(state: AppState): string {
  if (!state.board || !state.session) return "(no session)";
  const names = state.session.history.map(
    (r) => state.board!.regions[r] ?? `#${r}`
  );
  return names.length ? names.join(" → ") : "(no moves yet)";
}

export function renderSolverPanel(panel: SolverPanel, state: AppState): string {
  switch (panel.kind) {
    case "idle":
      return "";
    case "hint":
      return `hint: select ${state.board?.regions[panel.region] ?? panel.region}`;
    case "solution":
      return (
        "solution: " +
        panel.regions.map((r) => state.board?.regions[r] ?? r).join(", ")
      );
    case "certificate":
      return (
        "unsolvable — these lamp rows sum to zero against the target: " +
        panel.rows.map((i) => state.board?.sites[i] ?? i).join(" + ")
      );
  }
}

export function renderStatus(state: AppState): string {
  if (state.error) return `<span class="error">${state.error}</span>`;
  if (isWon(state)) return `<span class="win">all lamps on — solved!</span>`;
  if (state.solver.kind === "certificate")
    return `<span class="unsolvable">unsolvable</span>`;
  return "";
}
