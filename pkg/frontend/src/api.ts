/** Typed client for the concord session service (indices are 1-based). */

export interface Judgment {
  i: number;
  j: number;
  value: number;
}

export interface SessionInfo {
  id: string;
  labels: string[];
  judgments: Judgment[];
  created: string;
  updated: string;
  version: number;
}

export interface TriadInfo {
  i: number;
  j: number;
  k: number;
  inconsistency: number;
}

export interface Analysis {
  version: number;
  labels: string[];
  matrix: number[][];
  consistent: number[][];
  weights: number[];
  residual_norm: number;
  global_inconsistency: number;
  triads: TriadInfo[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (!response.ok) {
    let code = "error";
    let message = `${response.status} ${response.statusText}`;
    try {
      const body = await response.json();
      if (body && typeof body === "object") {
        code = body.code ?? code;
        message = body.message ?? message;
      }
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, code, message);
  }
  if (response.status === 204) return undefined as T;
  return (await response.json()) as T;
}

export class ServiceClient {
  constructor(private readonly baseUrl: string = "") {}

  createSession(labels: string[]): Promise<SessionInfo> {
    return request(`${this.baseUrl}/sessions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ labels }),
    });
  }

  getSession(id: string): Promise<SessionInfo> {
    return request(`${this.baseUrl}/sessions/${encodeURIComponent(id)}`);
  }

  putJudgment(id: string, i: number, j: number, value: number): Promise<SessionInfo> {
    return request(`${this.baseUrl}/sessions/${encodeURIComponent(id)}/judgments`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ i, j, value }),
    });
  }

  getAnalysis(id: string): Promise<Analysis> {
    return request(`${this.baseUrl}/sessions/${encodeURIComponent(id)}/analysis`);
  }

  deleteSession(id: string): Promise<void> {
    return request(`${this.baseUrl}/sessions/${encodeURIComponent(id)}`, {
      method: "DELETE",
    });
  }
}
