// Pure 3D math for the point-cloud view: orbit camera, perspective
// projection, painter's-order depth sort. No DOM here so it unit-tests
// without a canvas.
// Center a cube of integer points with coords in [0, side) on the origin,
// normalized so the cube spans [-1, 1] on each axis.
export function normalizePoints(points, side) {
    const half = (side - 1) / 2;
    const radius = Math.max(half, 0.5);
    return points.map((p) => ({
        x: (p[0] - half) / radius,
        y: (p[1] - half) / radius,
        z: (p[2] - half) / radius,
    }));
}
export function rotate(p, yaw, pitch) {
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
export function project(p, camera, width, height) {
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
export function sortFarToNear(items) {
    return [...items].sort((a, b) => b.depth - a.depth);
}
export function vecLength(p) {
    return Math.hypot(p.x, p.y, p.z);
}
