import { SessionClient, canonicalJson } from "./api.js";
import { initialLayout } from "./layout.js";
import type { DiagramJson, Point, SessionState } from "./types.js";

export type Listener = (store: ExplorerStore) => void;

/** Client-side mirror of the server session.
 *
 *  The store never computes mutations or presentations locally; its state is
 *  replaced wholesale by each confirmed server response (optimistic updates
 *  are deliberately absent).  Vertex positions are laid out once per session
 *  and frozen afterwards so mutations read as arrow flips, not re-layouts. */
export class ExplorerStore {
    state: SessionState | null = null;
    positions: Map<number, Point> = new Map();
    selection: number | null = null;
    hovered: number[] = [];
    lastError: string | null = null;
    private listeners: Listener[] = [];

    constructor(readonly client: SessionClient) {}

    subscribe(listener: Listener): void {
        this.listeners.push(listener);
    }

    private commit(state: SessionState): void {
        this.state = state;
        this.lastError = null;
        for (const listener of this.listeners) listener(this);
    }

    private fail(err: unknown): never {
        this.lastError = err instanceof Error ? err.message : String(err);
        for (const listener of this.listeners) listener(this);
        throw err;
    }

    async createSession(diagram: DiagramJson, ruleset = "finite-affine"): Promise<void> {
        try {
            const state = await this.client.create(diagram, ruleset);
            this.positions = initialLayout(diagram.n, state.diagram.arrows);
            this.commit(state);
        } catch (err) {
            this.fail(err);
        }
    }

    /** The click handler: POST /mutate, render only on confirmation. */
    async clickVertex(vertex: number): Promise<void> {
        try {
            this.commit(await this.client.mutate(vertex));
        } catch (err) {
            this.fail(err);
        }
    }

    async undo(): Promise<void> {
        try {
            this.commit(await this.client.undo());
        } catch (err) {
            this.fail(err);
        }
    }

    async replay(sequence: number[]): Promise<void> {
        for (const vertex of sequence) {
            await this.clickVertex(vertex);
        }
    }

    setHoveredSource(vertices: number[]): void {
        this.hovered = vertices;
        for (const listener of this.listeners) listener(this);
    }

    /** Current diagram in the CLI-compatible JSON format. */
    exportDiagram(): string {
        if (this.state === null) throw new Error("no state");
        return canonicalJson(this.state.diagram);
    }

    canonicalState(): string {
        if (this.state === null) throw new Error("no state");
        return canonicalJson(this.state);
    }

    presentationLines(): { kind: string; text: string }[] {
        return this.state?.presentation_text ?? [];
    }
}
