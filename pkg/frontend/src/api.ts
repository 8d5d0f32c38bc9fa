// Typed client for the /api/v1 session service.  All game logic lives
// server-side; the UI only ever displays what the API returned last.

export interface Layout {
  kind: "link" | "pattern";
  regions: { region: number; points: number[][]; outer: boolean; holes?: number[][][] }[];
  lamps: { site: number; at: number[] }[];
}

export interface BoardInfo {
  sites: string[];
  regions: string[];
  matrix: string[];
  layout: Layout | null;
}

export interface SessionState {
  id: string;
  lamps: number[];
  history: number[];
  won: boolean;
}

export interface HintResponse {
  hint: number | null;
  solution?: number[];
  certificate?: number[];
}

export type Http = (
  method: string,
  path: string,
  body?: unknown
) => Promise<unknown>;

export const fetchHttp: Http = async (method, path, body) => {
  const res = await fetch(path, {
    method,
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  if (!res.ok) {
    let detail = `${res.status}`;
    try {
      const data = (await res.json()) as { detail?: unknown };
      detail = JSON.stringify(data.detail ?? data);
    } catch {
      /* keep the status text */
    }
    throw new Error(`API error: ${detail}`);
  }
  return res.json();
};

export class Api {
  constructor(private http: Http = fetchHttp) {}

  async catalog(): Promise<string[]> {
    const data = (await this.http("GET", "/api/v1/catalog")) as { boards: string[] };
    return data.boards;
  }

  async createSession(
    payload: Record<string, unknown>
  ): Promise<SessionState & { board: BoardInfo }> {
    return (await this.http("POST", "/api/v1/session", payload)) as SessionState & {
      board: BoardInfo;
    };
  }

  async move(sessionId: string, region: number): Promise<SessionState> {
    return (await this.http("POST", `/api/v1/session/${sessionId}/move`, {
      region,
    })) as SessionState;
  }

  async hint(sessionId: string): Promise<HintResponse> {
    return (await this.http("GET", `/api/v1/session/${sessionId}/hint`)) as HintResponse;
  }
}
