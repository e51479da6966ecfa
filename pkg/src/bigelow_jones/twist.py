"""Piecewise-linear half twist exchanging two adjacent punctures.

The twist is supported in a square of half-width 5/4 around the midpoint
of the punctures (spacing 1).  The inner square of half-width 3/4 turns
rigidly by 180 degrees, the outer boundary is fixed, and the annulus in
between is cut into four square rings.  Ring k turns by (4 - k)/8 of a
full turn, realized as a simplicial map on 16 triangles per ring, so every
image is an exact rational polyline.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Point = tuple[Fraction, Fraction]

RINGS = tuple(Fraction(3, 4) + Fraction(k, 8) for k in range(5))
INNER, OUTER = RINGS[0], RINGS[-1]
_DIRS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))


def _ring_vertex(r: Fraction, p: int) -> Point:
    dx, dy = _DIRS[p % 8]
    return (r * dx, r * dy)


@lru_cache(maxsize=None)
def _triangle_pairs(direction: int) -> tuple[tuple[tuple[Point, ...], tuple[Point, ...]], ...]:
    """(source, image) triangles of the annulus for a unit twist centred at 0."""
    pairs = []
    for k in range(4):
        r_in, r_out = RINGS[k], RINGS[k + 1]
        s_in, s_out = 4 - k, 3 - k
        for p in range(8):
            i = lambda q: _ring_vertex(r_in, q)  # noqa: E731
            o = lambda q: _ring_vertex(r_out, q)  # noqa: E731
            src1 = (i(p), i(p + 1), o(p + 1))
            img1 = (i(p + s_in), i(p + 1 + s_in), o(p + 1 + s_out))
            src2 = (i(p), o(p + 1), o(p))
            img2 = (i(p + s_in), o(p + 1 + s_out), o(p + s_out))
            pairs.append((src1, img1))
            pairs.append((src2, img2))
    if direction < 0:
        pairs = [(img, src) for src, img in pairs]
    return tuple(pairs)


@lru_cache(maxsize=None)
def _edges(direction: int) -> tuple[tuple[Point, Point, tuple[float, ...]], ...]:
    """Cell edges with float bounding boxes (x0, y0, x1, y1) for cheap rejection."""
    seen = set()
    for src, _ in _triangle_pairs(direction):
        for a, b in ((src[0], src[1]), (src[1], src[2]), (src[2], src[0])):
            seen.add((a, b) if a <= b else (b, a))
    return tuple(
        (a, b, (float(min(a[0], b[0])), float(min(a[1], b[1])), float(max(a[0], b[0])), float(max(a[1], b[1]))))
        for a, b in sorted(seen)
    )


_SLACK = 1e-9


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _in_triangle(p: Point, tri: tuple[Point, ...]) -> bool:
    c1, c2, c3 = _cross(tri[0], tri[1], p), _cross(tri[1], tri[2], p), _cross(tri[2], tri[0], p)
    return (c1 >= 0 and c2 >= 0 and c3 >= 0) or (c1 <= 0 and c2 <= 0 and c3 <= 0)


def _affine(p: Point, src: tuple[Point, ...], img: tuple[Point, ...]) -> Point:
    a, b, c = src
    den = _cross(a, b, c)
    l1 = _cross(p, b, c) / den
    l2 = _cross(a, p, c) / den
    l3 = 1 - l1 - l2
    return (
        l1 * img[0][0] + l2 * img[1][0] + l3 * img[2][0],
        l1 * img[0][1] + l2 * img[1][1] + l3 * img[2][1],
    )


def _linf(p: Point) -> Fraction:
    return max(abs(p[0]), abs(p[1]))


@lru_cache(maxsize=None)
def _affine_maps(direction: int):
    """Per ring: (source triangle, coefficients of q -> M q + v) for each cell."""
    rings = []
    pairs = _triangle_pairs(direction)
    for k in range(4):
        cells = []
        for src, img in pairs[16 * k : 16 * k + 16]:
            o = _affine((Fraction(0), Fraction(0)), src, img)
            ex = _affine((Fraction(1), Fraction(0)), src, img)
            ey = _affine((Fraction(0), Fraction(1)), src, img)
            coeffs = (ex[0] - o[0], ey[0] - o[0], ex[1] - o[1], ey[1] - o[1], o[0], o[1])
            cells.append((src, coeffs))
        rings.append(tuple(cells))
    return tuple(rings)


def _apply(c, q: Point) -> Point:
    return (c[0] * q[0] + c[1] * q[1] + c[4], c[2] * q[0] + c[3] * q[1] + c[5])


def _octant(p: Point) -> int:
    """Sector between _DIRS[k] and _DIRS[k + 1] containing p (closed, ties broken arbitrarily)."""
    x, y = p
    if y >= 0:
        if x > 0:
            return 0 if y <= x else 1
        return 2 if y >= -x else 3
    if x < 0:
        return 4 if -y <= -x else 5
    return 6 if x <= -y else 7


@lru_cache(maxsize=None)
def _candidates(direction: int) -> dict:
    """Cells worth trying first, keyed by (ring, octant).

    Found by sampling each sector in floating point; this only orders the
    search, the exact test in _local_piece decides.
    """
    out = {}
    steps = [(2 * i + 1) / 16 for i in range(8)]
    for k in range(4):
        cells = _affine_maps(direction)[k]
        tris = [tuple((float(x), float(y)) for x, y in src) for src, _ in cells]
        for o in range(8):
            a, b = _DIRS[o], _DIRS[(o + 1) % 8]
            hits = []
            for rs in steps:
                r = float(RINGS[k]) + rs / 8
                for ts in steps:
                    p = (r * (a[0] + ts * (b[0] - a[0])), r * (a[1] + ts * (b[1] - a[1])))
                    for n, tri in enumerate(tris):
                        if n not in hits and _in_triangle(p, tri):
                            hits.append(n)
            out[k, o] = tuple((cells[n][0], tris[n], cells[n][1]) for n in hits)
    return out


def _side(p: tuple[float, float], tri: tuple[tuple[float, float], ...], eps: float = 1e-9) -> bool | None:
    """Float point-in-triangle test: True inside, False outside, None when too close to an edge."""
    cs = [
        (tri[j][0] - p[0]) * (tri[(j + 1) % 3][1] - p[1]) - (tri[j][1] - p[1]) * (tri[(j + 1) % 3][0] - p[0])
        for j in range(3)
    ]
    if all(c > eps for c in cs) or all(c < -eps for c in cs):
        return True
    if any(c > eps for c in cs) and any(c < -eps for c in cs):
        return False
    return None


def _local_piece(mid: Point, direction: int):
    """Affine map (as a callable) valid on the closed cell containing mid."""
    r = _linf(mid)
    if r <= INNER:
        return lambda q: (-q[0], -q[1])
    if r >= OUTER:
        return lambda q: q
    k = min(int((r - INNER) * 8), 3)
    fmid = (float(mid[0]), float(mid[1]))
    for src, ftri, coeffs in _candidates(direction)[k, _octant(mid)]:
        inside = _side(fmid, ftri)
        if inside or (inside is None and _in_triangle(mid, src)):
            return lambda q, c=coeffs: _apply(c, q)
    for ring in (k, k - 1, k + 1):
        if not 0 <= ring < 4:
            continue
        for src, coeffs in _affine_maps(direction)[ring]:
            if _in_triangle(mid, src):
                return lambda q, c=coeffs: _apply(c, q)
    raise AssertionError(f"point {mid} not covered by the twist triangulation")


def _split_params(p: Point, q: Point, direction: int) -> list[Fraction]:
    ts = {Fraction(0), Fraction(1)}
    d = (q[0] - p[0], q[1] - p[1])
    px, py, qx, qy = float(p[0]), float(p[1]), float(q[0]), float(q[1])
    lx, ly = min(px, qx) - _SLACK, min(py, qy) - _SLACK
    hx, hy = max(px, qx) + _SLACK, max(py, qy) + _SLACK
    for a, b, box in _edges(direction):
        if box[0] > hx or box[1] > hy or box[2] < lx or box[3] < ly:
            continue
        e = (b[0] - a[0], b[1] - a[1])
        den = d[0] * e[1] - d[1] * e[0]
        w = (a[0] - p[0], a[1] - p[1])
        if den == 0:
            if w[0] * d[1] - w[1] * d[0] != 0:
                continue
            dd = d[0] * d[0] + d[1] * d[1]
            for v in (a, b):
                t = ((v[0] - p[0]) * d[0] + (v[1] - p[1]) * d[1]) / dd
                if 0 < t < 1:
                    ts.add(t)
            continue
        t = (w[0] * e[1] - w[1] * e[0]) / den
        u = (w[0] * d[1] - w[1] * d[0]) / den
        if 0 < t < 1 and 0 <= u <= 1:
            ts.add(t)
    return sorted(ts)


def half_twist_polyline(points: list[Point], center: Point, direction: int) -> list[Point]:
    """Image of a polyline under the twist about center (direction +1 turns counterclockwise)."""
    cx, cy = center
    local = [(x - cx, y - cy) for x, y in points]
    out: list[Point] = []
    for p, q in zip(local, local[1:]):
        lo = (min(p[0], q[0]), min(p[1], q[1]))
        hi = (max(p[0], q[0]), max(p[1], q[1]))
        if lo[0] >= OUTER or lo[1] >= OUTER or hi[0] <= -OUTER or hi[1] <= -OUTER:
            pieces = [(p, q, lambda z: z)]
        else:
            ts = _split_params(p, q, direction)
            pieces = []
            for t0, t1 in zip(ts, ts[1:]):
                a = (p[0] + t0 * (q[0] - p[0]), p[1] + t0 * (q[1] - p[1]))
                b = (p[0] + t1 * (q[0] - p[0]), p[1] + t1 * (q[1] - p[1]))
                mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
                pieces.append((a, b, _local_piece(mid, direction)))
        for a, b, f in pieces:
            fa, fb = f(a), f(b)
            if not out or out[-1] != fa:
                out.append(fa)
            if out[-1] != fb:
                out.append(fb)
    if not local:
        return []
    if not out:
        out = [_local_piece(local[0], direction)(local[0])]
    return [(x + cx, y + cy) for x, y in out]


def half_twist_point(p: Point, center: Point, direction: int) -> Point:
    local = (p[0] - center[0], p[1] - center[1])
    img = _local_piece(local, direction)(local)
    return (img[0] + center[0], img[1] + center[1])
