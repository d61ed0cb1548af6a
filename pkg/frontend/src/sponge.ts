// 3D point-cloud screen: fetches a level, projects it onto a canvas, and
// lets the user orbit/zoom. Levels are cached per m; the slider is capped at
// m = 6 (4096 points) to keep frames cheap without level-of-detail tricks.

import { ApiClient, SpongeJson } from "./api.js";
import { Camera, normalizePoints, project, sortFarToNear, Vec3 } from "./projection.js";

export const MAX_LEVEL = 6;

export interface SpongeStats {
  m: number;
  count: number;
  slope: number; // exact box-counting slope, n - 1
  error: string | null;
}

export class SpongeViewer {
  private cache = new Map<number, SpongeJson>();
  private points: Vec3[] = [];
  private level = -1;
  private camera: Camera = { yaw: 0.7, pitch: 0.5, distance: 3.2 };
  private dragging = false;
  private lastX = 0;
  private lastY = 0;

  constructor(
    private canvas: HTMLCanvasElement,
    private api: ApiClient,
    private onStats: (stats: SpongeStats) => void,
  ) {
    canvas.addEventListener("pointerdown", (e) => {
      this.dragging = true;
      this.lastX = e.clientX;
      this.lastY = e.clientY;
      canvas.setPointerCapture(e.pointerId);
    });
    canvas.addEventListener("pointermove", (e) => {
      if (!this.dragging) return;
      this.camera.yaw += (e.clientX - this.lastX) * 0.01;
      this.camera.pitch += (e.clientY - this.lastY) * 0.01;
      this.camera.pitch = Math.max(-1.5, Math.min(1.5, this.camera.pitch));
      this.lastX = e.clientX;
      this.lastY = e.clientY;
      this.draw();
    });
    canvas.addEventListener("pointerup", () => (this.dragging = false));
    canvas.addEventListener("wheel", (e) => {
      e.preventDefault();
      this.camera.distance *= e.deltaY > 0 ? 1.1 : 0.9;
      this.camera.distance = Math.max(1.5, Math.min(12, this.camera.distance));
      this.draw();
    });
  }

  async setLevel(m: number): Promise<void> {
    this.level = m;
    let payload = this.cache.get(m);
    if (!payload) {
      try {
        payload = await this.api.sponge(3, m);
      } catch (err) {
        this.onStats({ m, count: 0, slope: 2, error: `${err}` });
        return;
      }
      this.cache.set(m, payload);
    }
    if (m !== this.level) return; // a newer request superseded this one
    this.points = normalizePoints(payload.points, 2 ** m);
    this.onStats({ m, count: payload.points.length, slope: payload.n - 1, error: null });
    this.draw();
  }

  retry(): Promise<void> {
    return this.setLevel(this.level);
  }

  draw(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = this.canvas;
    ctx.fillStyle = "#10141c";
    ctx.fillRect(0, 0, width, height);
    const projected = this.points.map((p) => {
      const pr = project(p, this.camera, width, height);
      return { ...pr, shade: (p.x + p.y + p.z + 3) / 6 };
    });
    const side = Math.max(2, 26 / Math.cbrt(Math.max(this.points.length, 1)));
    for (const pt of sortFarToNear(projected)) {
      const size = side * pt.scale;
      const tone = Math.round(120 + 120 * pt.shade);
      ctx.fillStyle = `rgb(${tone - 60}, ${tone - 20}, ${tone})`;
      ctx.fillRect(pt.x - size / 2, pt.y - size / 2, size, size);
    }
  }
}
