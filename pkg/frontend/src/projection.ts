// Pure 3D math for the point-cloud view: orbit camera, perspective
// projection, painter's-order depth sort. No DOM here so it unit-tests
// without a canvas.

export interface Vec3 {
  x: number;
  y: number;
  z: number;
}

export interface Camera {
  yaw: number; // radians around the vertical axis
  pitch: number; // radians up/down, clamped by the caller
  distance: number; // eye distance from the origin in cube units
}

export interface Projected {
  x: number; // viewport pixels
  y: number;
  depth: number; // distance from the eye; larger = farther
  scale: number; // perspective size factor, 1 at the view plane
}

// Center a cube of integer points with coords in [0, side) on the origin,
// normalized so the cube spans [-1, 1] on each axis.
export function normalizePoints(points: number[][], side: number): Vec3[] {
  const half = (side - 1) / 2;
  const radius = Math.max(half, 0.5);
  return points.map((p) => ({
    x: (p[0] - half) / radius,
    y: (p[1] - half) / radius,
    z: (p[2] - half) / radius,
  }));
}

export function rotate(p: Vec3, yaw: number, pitch: number): Vec3 {
  const cy = Math.cos(yaw);
  const sy = Math.sin(yaw);
  const cp = Math.cos(pitch);
  const sp = Math.sin(pitch);
  // yaw about y, then pitch about x
  const x1 = cy * p.x + sy * p.z;
  const z1 = -sy * p.x + cy * p.z;
  const y2 = cp * p.y - sp * z1;
  const z2 = sp * p.y + cp * z1;
  return { x: x1, y: y2, z: z2 };
}

export function project(
  p: Vec3,
  camera: Camera,
  width: number,
  height: number,
): Projected {
  const r = rotate(p, camera.yaw, camera.pitch);
  const depth = camera.distance + r.z;
  const fov = 0.8 * Math.min(width, height);
  const scale = camera.distance / Math.max(depth, 0.1);
  return {
    x: width / 2 + (r.x * fov * scale) / 2,
    y: height / 2 - (r.y * fov * scale) / 2,
    depth,
    scale,
  };
}

// Painter's order: draw far points first so near ones overlap them.
export function sortFarToNear<T extends { depth: number }>(items: T[]): T[] {
  return [...items].sort((a, b) => b.depth - a.depth);
}

export function vecLength(p: Vec3): number {
  return Math.hypot(p.x, p.y, p.z);
}
