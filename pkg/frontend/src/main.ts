import { SessionClient } from "./api.js";
import { ExplorerStore } from "./state.js";
import { historyLabel, renderBanner, renderDiagram, renderPresentation } from "./render.js";
import type { DiagramJson } from "./types.js";

const EXAMPLES: Record<string, DiagramJson> = {
    "A3 path": { n: 3, arrows: [{ from: 1, to: 2, weight: 1 }, { from: 2, to: 3, weight: 1 }] },
    "G~2 triangle (3,3,4)": {
        n: 3,
        arrows: [
            { from: 2, to: 1, weight: 3 },
            { from: 3, to: 2, weight: 3 },
            { from: 1, to: 3, weight: 4 },
        ],
    },
    "A~(2,2) cycle": {
        n: 4,
        arrows: [
            { from: 1, to: 2, weight: 1 },
            { from: 3, to: 2, weight: 1 },
            { from: 3, to: 4, weight: 1 },
            { from: 1, to: 4, weight: 1 },
        ],
    },
};

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node as T;
}

function download(name: string, payload: string): void {
    const blob = new Blob([payload], { type: "application/json" });
    const url = URL.createObjectURL(blob);
    const a = document.createElement("a");
    a.href = url;
    a.download = name;
    a.click();
    URL.revokeObjectURL(url);
}

export function boot(): void {
    const base = (document.querySelector("meta[name=coxmut-service]") as HTMLMetaElement)
        ?.content ?? "http://127.0.0.1:8757";
    const store = new ExplorerStore(new SessionClient(base));
    const svg = el<HTMLElement>("diagram") as unknown as SVGSVGElement;
    const presentationPanel = el<HTMLDivElement>("presentation");
    const historyPanel = el<HTMLDivElement>("history");
    const banner = el<HTMLDivElement>("banner");
    const recorded: number[] = [];

    const callbacks = {
        onVertexClick: (vertex: number) => {
            recorded.push(vertex);
            store.clickVertex(vertex).catch(() => undefined);
        },
        onRelationHover: (source: number[]) => store.setHoveredSource(source),
    };

    store.subscribe(() => {
        renderBanner(banner, store.lastError);
        if (!store.state) return;
        try {
            renderDiagram(svg, store.state, store.positions, store.hovered, callbacks);
            renderPresentation(presentationPanel, store.state, callbacks);
            historyPanel.textContent = historyLabel(store.state.history);
        } catch (err) {
            renderBanner(banner, `render error: ${err}`);
        }
    });

    const select = el<HTMLSelectElement>("example");
    for (const name of Object.keys(EXAMPLES)) {
        const option = document.createElement("option");
        option.value = name;
        option.textContent = name;
        select.appendChild(option);
    }

    el<HTMLButtonElement>("create").addEventListener("click", () => {
        const text = el<HTMLTextAreaElement>("diagram-json").value.trim();
        const diagram = text ? (JSON.parse(text) as DiagramJson) : EXAMPLES[select.value];
        const ruleset = el<HTMLSelectElement>("ruleset").value;
        recorded.length = 0;
        store.createSession(diagram, ruleset).catch(() => undefined);
    });
    el<HTMLButtonElement>("undo").addEventListener("click", () => {
        store.undo().catch(() => undefined);
    });
    el<HTMLButtonElement>("replay").addEventListener("click", () => {
        const sequence = [...recorded];
        const text = el<HTMLTextAreaElement>("diagram-json").value.trim();
        const diagram = text ? (JSON.parse(text) as DiagramJson) : EXAMPLES[select.value];
        recorded.length = 0;
        store
            .createSession(diagram, el<HTMLSelectElement>("ruleset").value)
            .then(() => store.replay(sequence))
            .then(() => recorded.push(...sequence))
            .catch(() => undefined);
    });
    el<HTMLButtonElement>("export").addEventListener("click", () => {
        download("diagram.json", store.exportDiagram());
    });
}

if (typeof document !== "undefined" && document.getElementById("diagram")) {
    boot();
}
