import type { DiagramJson, SessionState } from "./types.js";

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
    }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
    const response = await fetch(url, init);
    const body = await response.json();
    if (!response.ok) {
        throw new ApiError(response.status, body.error ?? response.statusText);
    }
    return body as T;
}

function post<T>(url: string, payload?: unknown): Promise<T> {
    return request<T>(url, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload ?? {}),
    });
}

/** Thin client over the session service; every value shown in the UI
 *  originates from these calls. */
export class SessionClient {
    sessionId: string | null = null;

    constructor(readonly baseUrl: string) {}

    async create(diagram: DiagramJson, ruleset = "finite-affine"): Promise<SessionState> {
        const body = await post<{ id: string; state: SessionState }>(
            `${this.baseUrl}/session`,
            { diagram, ruleset },
        );
        this.sessionId = body.id;
        return body.state;
    }

    private requireSession(): string {
        if (this.sessionId === null) {
            throw new Error("no live session");
        }
        return this.sessionId;
    }

    mutate(vertex: number): Promise<SessionState> {
        return post(`${this.baseUrl}/session/${this.requireSession()}/mutate`, { vertex });
    }

    undo(): Promise<SessionState> {
        return post(`${this.baseUrl}/session/${this.requireSession()}/undo`);
    }

    state(): Promise<SessionState> {
        return request(`${this.baseUrl}/session/${this.requireSession()}/state`);
    }

    mutationClass(cap?: number): Promise<{ status: string; size: number }> {
        const suffix = cap === undefined ? "" : `?cap=${cap}`;
        return request(`${this.baseUrl}/session/${this.requireSession()}/class${suffix}`);
    }
}

/** Stable key ordering, so states compare byte-for-byte. */
export function canonicalJson(value: unknown): string {
    if (Array.isArray(value)) {
        return `[${value.map(canonicalJson).join(",")}]`;
    }
    if (value !== null && typeof value === "object") {
        const entries = Object.entries(value as Record<string, unknown>)
            .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
            .map(([k, v]) => `${JSON.stringify(k)}:${canonicalJson(v)}`);
        return `{${entries.join(",")}}`;
    }
    return JSON.stringify(value);
}
