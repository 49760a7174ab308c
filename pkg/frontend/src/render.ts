import type { ArrowJson, Point, PresentationLine, SessionState } from "./types.js";

export interface ArrowView {
    x1: number;
    y1: number;
    x2: number;
    y2: number;
    labelX: number;
    labelY: number;
    label: string;
    labelVisible: boolean;
    key: string;
}

export interface VertexView {
    id: number;
    x: number;
    y: number;
    highlighted: boolean;
}

const VERTEX_RADIUS = 16;

/** Geometry for one arrow, trimmed to the vertex circles.  Weight-1 labels
 *  are omitted (simple arrows carry no label). */
export function arrowView(arrow: ArrowJson, positions: Map<number, Point>): ArrowView {
    const a = positions.get(arrow.from)!;
    const b = positions.get(arrow.to)!;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dist = Math.max(Math.hypot(dx, dy), 1);
    const ux = dx / dist;
    const uy = dy / dist;
    const x1 = a.x + ux * VERTEX_RADIUS;
    const y1 = a.y + uy * VERTEX_RADIUS;
    const x2 = b.x - ux * (VERTEX_RADIUS + 4);
    const y2 = b.y - uy * (VERTEX_RADIUS + 4);
    return {
        x1, y1, x2, y2,
        labelX: (x1 + x2) / 2 - uy * 10,
        labelY: (y1 + y2) / 2 + ux * 10,
        label: String(arrow.weight),
        labelVisible: arrow.weight !== 1,
        key: `${arrow.from}-${arrow.to}`,
    };
}

export function vertexViews(state: SessionState, positions: Map<number, Point>, hovered: number[]): VertexView[] {
    const hover = new Set(hovered);
    const views: VertexView[] = [];
    for (let v = 1; v <= state.diagram.n; v += 1) {
        const p = positions.get(v)!;
        views.push({ id: v, x: p.x, y: p.y, highlighted: hover.has(v) });
    }
    return views;
}

export interface RelationGroup {
    kind: string;
    collapsed: boolean;
    rows: { text: string; source: number[] }[];
}

const KIND_ORDER = ["R1", "R2", "R3", "R4", "R5", "R5*", "quotient"];

/** Relations grouped by kind; R1 starts collapsed (the interesting rows are
 *  the cycle and pattern relations). */
export function relationGroups(state: SessionState): RelationGroup[] {
    const byKind = new Map<string, { text: string; source: number[] }[]>();
    state.presentation_text.forEach((line: PresentationLine, idx: number) => {
        const relation = state.presentation.relations[idx];
        const rows = byKind.get(line.kind) ?? [];
        rows.push({ text: line.text, source: relation?.source ?? [] });
        byKind.set(line.kind, rows);
    });
    const groups: RelationGroup[] = [];
    for (const kind of KIND_ORDER) {
        const rows = byKind.get(kind);
        if (rows) {
            groups.push({ kind, collapsed: kind === "R1", rows });
        }
    }
    return groups;
}

export function historyLabel(history: number[]): string {
    return history.length === 0 ? "(seed)" : history.map((v) => `μ${v}`).join(" · ");
}

// ---------------------------------------------------------------------------
// DOM wiring (no framework; the functions above stay testable without a DOM)

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderCallbacks {
    onVertexClick: (vertex: number) => void;
    onRelationHover: (source: number[]) => void;
}

export function renderDiagram(
    svg: SVGSVGElement,
    state: SessionState,
    positions: Map<number, Point>,
    hovered: number[],
    callbacks: RenderCallbacks,
): void {
    svg.innerHTML =
        '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">' +
        '<path d="M0,0 L8,4 L0,8 z" fill="#445"/></marker></defs>';
    for (const arrow of state.diagram.arrows) {
        const view = arrowView(arrow, positions);
        const line = document.createElementNS(SVG_NS, "line");
        line.setAttribute("x1", String(view.x1));
        line.setAttribute("y1", String(view.y1));
        line.setAttribute("x2", String(view.x2));
        line.setAttribute("y2", String(view.y2));
        line.setAttribute("stroke", "#445");
        line.setAttribute("stroke-width", arrow.weight === 4 ? "3.5" : "2");
        line.setAttribute("marker-end", "url(#arrowhead)");
        svg.appendChild(line);
        if (view.labelVisible) {
            const text = document.createElementNS(SVG_NS, "text");
            text.setAttribute("x", String(view.labelX));
            text.setAttribute("y", String(view.labelY));
            text.setAttribute("class", "weight-label");
            text.textContent = view.label;
            svg.appendChild(text);
        }
    }
    for (const vertex of vertexViews(state, positions, hovered)) {
        const group = document.createElementNS(SVG_NS, "g");
        group.setAttribute("class", "vertex" + (vertex.highlighted ? " highlighted" : ""));
        group.addEventListener("click", () => callbacks.onVertexClick(vertex.id));
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", String(vertex.x));
        circle.setAttribute("cy", String(vertex.y));
        circle.setAttribute("r", String(VERTEX_RADIUS));
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String(vertex.x));
        label.setAttribute("y", String(vertex.y + 5));
        label.setAttribute("text-anchor", "middle");
        label.textContent = String(vertex.id);
        group.appendChild(circle);
        group.appendChild(label);
        svg.appendChild(group);
    }
}

export function renderPresentation(
    container: HTMLElement,
    state: SessionState,
    callbacks: RenderCallbacks,
): void {
    container.innerHTML = "";
    for (const group of relationGroups(state)) {
        const details = document.createElement("details");
        if (!group.collapsed) details.setAttribute("open", "");
        const summary = document.createElement("summary");
        summary.textContent = `${group.kind} (${group.rows.length})`;
        details.appendChild(summary);
        for (const row of group.rows) {
            const div = document.createElement("div");
            div.className = "relation-row";
            div.textContent = row.text;
            div.addEventListener("mouseenter", () => callbacks.onRelationHover(row.source));
            div.addEventListener("mouseleave", () => callbacks.onRelationHover([]));
            details.appendChild(div);
        }
        container.appendChild(details);
    }
}

export function renderBanner(el: HTMLElement, message: string | null): void {
    el.textContent = message ?? "";
    el.style.display = message ? "block" : "none";
}
