import type { ArrowJson, Point } from "./types.js";

/** Deterministic force-directed layout: circle seed, spring relaxation.
 *  Run once per session; mutation only reverses arrows, so positions are
 *  frozen afterwards for visual continuity. */
export function initialLayout(
    n: number,
    arrows: ArrowJson[],
    width = 640,
    height = 420,
    iterations = 200,
): Map<number, Point> {
    const cx = width / 2;
    const cy = height / 2;
    const radius = Math.min(width, height) / 2 - 60;
    const pos = new Map<number, Point>();
    for (let v = 1; v <= n; v += 1) {
        const angle = (2 * Math.PI * (v - 1)) / n - Math.PI / 2;
        pos.set(v, { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
    }
    if (n <= 2) {
        return pos;
    }
    const ideal = (2 * radius * Math.sin(Math.PI / n)) * 1.15;
    for (let step = 0; step < iterations; step += 1) {
        const force = new Map<number, Point>();
        for (let v = 1; v <= n; v += 1) force.set(v, { x: 0, y: 0 });
        // pairwise repulsion
        for (let a = 1; a <= n; a += 1) {
            for (let b = a + 1; b <= n; b += 1) {
                const pa = pos.get(a)!;
                const pb = pos.get(b)!;
                const dx = pa.x - pb.x;
                const dy = pa.y - pb.y;
                const dist = Math.max(Math.hypot(dx, dy), 1);
                const push = (ideal * ideal) / (dist * dist * dist) * 40;
                force.get(a)!.x += dx * push;
                force.get(a)!.y += dy * push;
                force.get(b)!.x -= dx * push;
                force.get(b)!.y -= dy * push;
            }
        }
        // spring attraction along arrows
        for (const arrow of arrows) {
            const pa = pos.get(arrow.from)!;
            const pb = pos.get(arrow.to)!;
            const dx = pb.x - pa.x;
            const dy = pb.y - pa.y;
            const dist = Math.max(Math.hypot(dx, dy), 1);
            const pull = (dist - ideal) / dist * 0.08;
            force.get(arrow.from)!.x += dx * pull;
            force.get(arrow.from)!.y += dy * pull;
            force.get(arrow.to)!.x -= dx * pull;
            force.get(arrow.to)!.y -= dy * pull;
        }
        const damping = 1 - step / iterations;
        for (let v = 1; v <= n; v += 1) {
            const p = pos.get(v)!;
            const f = force.get(v)!;
            p.x = Math.min(width - 30, Math.max(30, p.x + f.x * damping));
            p.y = Math.min(height - 30, Math.max(30, p.y + f.y * damping));
        }
    }
    return pos;
}
