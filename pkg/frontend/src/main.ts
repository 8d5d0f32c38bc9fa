// DOM wiring: one logical event queue through the controller.

import { Api } from "./api.js";
import { BoardController } from "./state.js";
import {
  renderBoardSvg,
  renderHistory,
  renderLampStrip,
  renderSolverPanel,
  renderStatus,
} from "./render.js";

const api = new Api();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const controller = new BoardController(api, (state) => {
  el("board").innerHTML = renderBoardSvg(state);
  el("lamps").innerHTML = renderLampStrip(state);
  el("history").textContent = renderHistory(state);
  el("solver").textContent = renderSolverPanel(state.solver, state);
  el("status").innerHTML = renderStatus(state);
});

async function populateCatalog(): Promise<void> {
  const names = await api.catalog();
  const select = el<HTMLSelectElement>("catalog");
  select.innerHTML = names
    .map((n) => `<option value="${n}">${n}</option>`)
    .join("");
}

function bind(): void {
  el("load").addEventListener("click", () => {
    const name = el<HTMLSelectElement>("catalog").value;
    void controller.loadBoard({ catalog: name });
  });
  el("load-file").addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    try {
      const payload = JSON.parse(await file.text());
      void controller.loadBoard(payload);
    } catch (err) {
      el("status").textContent = `could not parse board file: ${err}`;
    }
  });
  el("hint").addEventListener("click", () => void controller.requestHint());
  el("solve").addEventListener("click", () => void controller.requestSolution());
  el("board").addEventListener("click", (ev) => {
    const target = ev.target as Element;
    const region = target.getAttribute("data-region");
    if (region !== null) controller.clickRegion(Number(region));
  });
}

void populateCatalog().then(bind);
