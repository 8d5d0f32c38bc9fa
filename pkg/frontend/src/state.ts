// Board-view state machine.  Clicks enqueue; at most one mutating request
// is in flight per session, and lamp state is always whatever the last
// API response said — the UI never toggles lamps locally.

import { Api, BoardInfo, SessionState } from "./api.js";

export type SolverPanel =
  | { kind: "idle" }
  | { kind: "hint"; region: number }
  | { kind: "solution"; regions: number[] }
  | { kind: "certificate"; rows: number[] };

export interface AppState {
  board: BoardInfo | null;
  session: SessionState | null;
  queue: number[];
  inFlight: boolean;
  solver: SolverPanel;
  error: string | null;
}

export function initialState(): AppState {
  return {
    board: null,
    session: null,
    queue: [],
    inFlight: false,
    solver: { kind: "idle" },
    error: null,
  };
}

export type Listener = (state: AppState) => void;

export class BoardController {
  state: AppState = initialState();

  constructor(private api: Api, private listener: Listener = () => {}) {}

  private emit(): void {
    this.listener(this.state);
  }

  async loadBoard(payload: Record<string, unknown>): Promise<void> {
    this.state = initialState();
    this.emit();
    try {
      const created = await this.api.createSession(payload);
      const { board, ...session } = created;
      this.state = { ...this.state, board, session, error: null };
    } catch (err) {
      this.state = { ...this.state, error: String(err) };
    }
    this.emit();
  }

  // Clicks during a pending request queue up and apply in order.
  clickRegion(region: number): void {
    if (!this.state.session) return;
    this.state = { ...this.state, queue: [...this.state.queue, region] };
    this.emit();
    void this.pump();
  }

  private async pump(): Promise<void> {
    const session = this.state.session;
    if (this.state.inFlight || !session) return;
    const [next, ...rest] = this.state.queue;
    if (next === undefined) return;
    this.state = { ...this.state, queue: rest, inFlight: true };
    this.emit();
    try {
      const updated = await this.api.move(session.id, next);
      this.state = {
        ...this.state,
        session: updated,
        inFlight: false,
        solver: { kind: "idle" },
        error: null,
      };
    } catch (err) {
      // non-destructive: keep the last confirmed state, drop the queue
      this.state = {
        ...this.state,
        inFlight: false,
        queue: [],
        error: String(err),
      };
    }
    this.emit();
    void this.pump();
  }

  async requestHint(): Promise<void> {
    if (!this.state.session) return;
    try {
      const res = await this.api.hint(this.state.session.id);
      if (res.hint === null && res.certificate) {
        this.state = {
          ...this.state,
          solver: { kind: "certificate", rows: res.certificate },
        };
      } else if (res.hint !== null) {
        this.state = { ...this.state, solver: { kind: "hint", region: res.hint } };
      }
    } catch (err) {
      this.state = { ...this.state, error: String(err) };
    }
    this.emit();
  }

  async requestSolution(): Promise<void> {
    if (!this.state.session) return;
    try {
      const res = await this.api.hint(this.state.session.id);
      if (res.hint === null && res.certificate) {
        this.state = {
          ...this.state,
          solver: { kind: "certificate", rows: res.certificate },
        };
      } else if (res.solution) {
        this.state = {
          ...this.state,
          solver: { kind: "solution", regions: res.solution },
        };
      }
    } catch (err) {
      this.state = { ...this.state, error: String(err) };
    }
    this.emit();
  }

  showCertificate(): Promise<void> {
    return this.requestHint();
  }
}

export function isWon(state: AppState): boolean {
  // win detection keys off the API lamp vector alone
  return !!state.session && state.session.lamps.every((bit) => bit === 1);
}
