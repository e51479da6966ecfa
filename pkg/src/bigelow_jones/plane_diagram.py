"""Exact planar model of the punctured disk with alpha and beta arcs.

Punctures sit at x = 1, ..., 2m on the real axis and alpha_k is the
segment [2k-1, 2k].  A beta arc is stored by its crossings with the real
axis ("stations") together with the half plane of its first piece; since
the pieces of all betas in one half plane are disjoint arcs with ends on
the axis, this data fixes the arcs up to isotopy rel punctures.  The
braid action is computed by pushing realized polylines through the exact
piecewise-linear twist of :mod:`twist` and reading the stations back.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .braid import BraidWord
from .errors import GeometryFault, InputError
from .twist import half_twist_polyline

Point = tuple[Fraction, Fraction]

# letter i of b moves the strand at mu_{2i-1} to mu_{2i+1}; realized as
# tau_{2i}^OVER * tau_{2i-1}^(HAND*s) * tau_{2i}^-OVER with adjacent twists tau
OVER = 1
HAND = -1


@dataclass(frozen=True)
class PLCurve:
    vertices: tuple[Point, ...]
    closed: bool = False

    def segments(self) -> Iterable[tuple[Point, Point]]:
        vs = self.vertices
        for a, b in zip(vs, vs[1:]):
            yield a, b
        if self.closed and len(vs) > 1:
            yield vs[-1], vs[0]


def _ring(points: Sequence[Point]) -> Iterable[tuple[Point, Point]]:
    n = len(points)
    for k in range(n):
        yield points[k], points[(k + 1) % n]


def winding_number(loop: PLCurve | Sequence[Point], p: Point) -> int:
    """Signed crossings of the downward vertical ray from p; counterclockwise is positive."""
    pts = loop.vertices if isinstance(loop, PLCurve) else tuple(loop)
    px, py = p
    total = 0
    for a, b in _ring(pts):
        if a[0] == b[0]:
            if a[0] == px and min(a[1], b[1]) <= py <= max(a[1], b[1]):
                raise GeometryFault(f"point {_fmt_pt(p)} lies on the loop")
            continue
        if (a[0] <= px < b[0]) or (b[0] <= px < a[0]):
            y = a[1] + (px - a[0]) * (b[1] - a[1]) / (b[0] - a[0])
            if y == py:
                raise GeometryFault(f"point {_fmt_pt(p)} lies on the loop")
            if y < py:
                total += 1 if b[0] > a[0] else -1
        elif px == b[0] and b[1] == py or px == a[0] and a[1] == py:
            raise GeometryFault(f"point {_fmt_pt(p)} lies on the loop")
    return total


@dataclass(frozen=True)
class BetaPath:
    """Axis crossings of one beta arc, from one puncture to the other."""

    stations: tuple[Fraction, ...]
    first_side: int

    def pieces(self) -> list[tuple[Fraction, Fraction, int]]:
        s = self.first_side
        out = []
        for a, b in zip(self.stations, self.stations[1:]):
            out.append((a, b, s))
            s = -s
        return out

    def reversed(self) -> BetaPath:
        n = len(self.stations) - 1
        last = self.first_side * (-1) ** (n - 1)
        return BetaPath(self.stations[::-1], last)


@dataclass(frozen=True)
class IntersectionPoint:
    id: int
    position: Point
    alpha_index: int
    beta_index: int
    is_puncture: bool
    alpha_order: int
    beta_order: int
    label: str = ""


@dataclass(frozen=True)
class DoubledPoint:
    base: IntersectionPoint
    branch: int  # 0 for e, 1 for e'
    position: Point
    vertex: int  # index into the figure-eight polygon

    @property
    def label(self) -> str:
        return self.base.label + ("'" if self.branch else "")

    @property
    def alpha_index(self) -> int:
        return self.base.alpha_index

    @property
    def beta_index(self) -> int:
        return self.base.beta_index


@dataclass(frozen=True)
class FlattenedDiagram:
    m: int
    betas: tuple[BetaPath, ...]
    figure_eights: tuple[PLCurve, ...] | None = field(default=None, compare=False)

    @property
    def punctures(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(k) for k in range(1, 2 * self.m + 1))

    def puncture_points(self) -> tuple[Point, ...]:
        return tuple((x, Fraction(0)) for x in self.punctures)

    @property
    def alphas(self) -> tuple[PLCurve, ...]:
        return tuple(
            PLCurve(((Fraction(2 * k - 1), Fraction(0)), (Fraction(2 * k), Fraction(0))))
            for k in range(1, self.m + 1)
        )

    def alpha_midpoint(self, i: int) -> Point:
        return (Fraction(4 * i - 1, 2), Fraction(0))

    @cached_property
    def boundary_radius(self) -> Fraction:
        return Fraction(2 * self.m + 2)

    @property
    def boundary_center(self) -> Point:
        return (Fraction(2 * self.m + 1, 2), Fraction(0))

    def eta(self, i: int) -> Point:
        return (self.alpha_midpoint(i)[0], -self.boundary_radius)

    @property
    def handles(self) -> tuple[PLCurve, ...]:
        return tuple(PLCurve((self.eta(i), self.alpha_midpoint(i))) for i in range(1, self.m + 1))

    @cached_property
    def _heights(self) -> dict[tuple[Fraction, Fraction, int], Fraction]:
        heights = {}
        for side in (1, -1):
            pieces = [
                (min(a, b), max(a, b))
                for beta in self.betas
                for a, b, s in beta.pieces()
                if s == side
            ]
            pieces.sort(key=lambda iv: iv[1] - iv[0])
            level: dict[tuple[Fraction, Fraction], int] = {}
            for lo, hi in pieces:
                inner = [lv for (l2, h2), lv in level.items() if lo < l2 and h2 < hi]
                level[(lo, hi)] = 1 + max(inner, default=0)
            top = max(level.values(), default=0)
            for (lo, hi), lv in level.items():
                heights[(lo, hi, side)] = Fraction(lv, top + 1)
        return heights

    def piece_height(self, a: Fraction, b: Fraction, side: int) -> Fraction:
        return self._heights[(min(a, b), max(a, b), side)]

    def beta_vertices(self, j: int) -> tuple[Point, ...]:
        """Rectilinear realization of beta_j; every axis crossing is a vertex."""
        beta = self.betas[j - 1]
        zero = Fraction(0)
        pts: list[Point] = [(beta.stations[0], zero)]
        for a, b, s in beta.pieces():
            h = s * self.piece_height(a, b, s)
            pts.extend([(a, h), (b, h), (b, zero)])
        return tuple(pts)

    @property
    def betas_pl(self) -> tuple[PLCurve, ...]:
        return tuple(PLCurve(self.beta_vertices(j)) for j in range(1, self.m + 1))

    def min_feature(self) -> Fraction:
        xs = sorted(set(self.punctures) | {x for b in self.betas for x in b.stations})
        gaps = [b - a for a, b in zip(xs, xs[1:])]
        hs = sorted({Fraction(0)} | {abs(h) for h in self._heights.values()})
        gaps += [b - a for a, b in zip(hs, hs[1:])]
        return min(gaps)

    def epsilon(self) -> Fraction:
        return self.min_feature() / 4


def standard_matching(m: int) -> FlattenedDiagram:
    if m < 1:
        raise InputError("need at least one alpha arc")
    betas = tuple(BetaPath((Fraction(2 * k - 1), Fraction(2 * k)), 1) for k in range(1, m + 1))
    return FlattenedDiagram(m, betas)


def adjacent_twists(plat: BraidWord) -> list[tuple[int, int]]:
    """Adjacent puncture twists (k, direction) realizing the letters of b x 1^m."""
    out = []
    for i, s in plat.letters:
        out.append((2 * i, OVER))
        out.append((2 * i - 1, HAND * s))
        out.append((2 * i, -OVER))
    return out


def apply_braid(d: FlattenedDiagram, plat: BraidWord, reduce: bool = True) -> FlattenedDiagram:
    """Images of the betas of d under b x 1^m, normalized to stations.

    plat must be the 2m-strand word produced by to_plat.  Letters act in
    reading order.  With reduce=True inessential bigons with the real axis
    are removed after every twist, which puts the arcs in minimal position.
    """
    if plat.strands != 2 * d.m:
        raise InputError(f"plat word has {plat.strands} strands, diagram needs {2 * d.m}")
    for i, s in plat.letters:
        for k, direction in ((2 * i, OVER), (2 * i - 1, HAND * s), (2 * i, -OVER)):
            d = apply_adjacent_twist(d, k, direction, reduce=False)
        if reduce:
            d = reduce_bigons(d)
    return d


def apply_adjacent_twist(d: FlattenedDiagram, k: int, direction: int, reduce: bool = True) -> FlattenedDiagram:
    """Half twist exchanging mu_k and mu_{k+1} (direction +1 is counterclockwise)."""
    center = (Fraction(2 * k + 1, 2), Fraction(0))
    punct = set(d.punctures)
    new = []
    for j in range(1, d.m + 1):
        image = half_twist_polyline(list(d.beta_vertices(j)), center, direction)
        new.append(stations_from_polyline(image, punct))
    out = respace(FlattenedDiagram(d.m, tuple(new)))
    if reduce:
        out = reduce_bigons(out)
    return out


def stations_from_polyline(pts: Sequence[Point], punctures: set[Fraction]) -> BetaPath:
    """Read axis crossings of a simple arc whose ends are punctures."""
    if pts[0][1] != 0 or pts[-1][1] != 0 or pts[0][0] not in punctures or pts[-1][0] not in punctures:
        raise GeometryFault("beta arc does not end at punctures")
    stations = [pts[0][0]]
    side = 0
    first_side = 0
    run_start = None  # x where the current on-axis run began
    prev = pts[0]
    for p in pts[1:]:
        sy = (p[1] > 0) - (p[1] < 0)
        py = (prev[1] > 0) - (prev[1] < 0)
        if sy == 0:
            if py != 0:
                run_start = p[0]
        elif side == 0:
            side = first_side = sy
        elif sy != side:
            if py == 0:
                x = (run_start + prev[0]) / 2
            else:
                x = prev[0] + (0 - prev[1]) * (p[0] - prev[0]) / (p[1] - prev[1])
            if x in punctures:
                raise GeometryFault("beta arc passes through a puncture")
            stations.append(x)
            side = sy
        prev = p
    stations.append(pts[-1][0])
    if first_side == 0:
        first_side = 1
    if stations[0] == stations[-1]:
        raise GeometryFault("beta arc is closed")
    return BetaPath(tuple(stations), first_side)


def respace(d: FlattenedDiagram) -> FlattenedDiagram:
    """Move crossings to evenly spaced positions inside each puncture gap (an isotopy)."""
    punct = d.punctures
    buckets: dict[int, list[Fraction]] = {}
    for beta in d.betas:
        for x in beta.stations[1:-1]:
            buckets.setdefault(bisect_left(punct, x), []).append(x)
    newpos: dict[Fraction, Fraction] = {}
    top = len(punct)
    for slot, xs in buckets.items():
        xs = sorted(set(xs))
        n = len(xs)
        for r, x in enumerate(xs, start=1):
            if slot == 0:
                newpos[x] = punct[0] - Fraction(n + 1 - r, n + 1)
            elif slot == top:
                newpos[x] = punct[-1] + Fraction(r, n + 1)
            else:
                newpos[x] = punct[slot - 1] + Fraction(r, n + 1)
    betas = tuple(
        BetaPath(tuple(newpos.get(x, x) for x in b.stations), b.first_side) for b in d.betas
    )
    return FlattenedDiagram(d.m, betas)


def _occupied(d: FlattenedDiagram) -> list[Fraction]:
    return sorted(set(d.punctures) | {x for b in d.betas for x in b.stations})


def find_bigon(d: FlattenedDiagram) -> tuple[int, int] | None:
    """First (beta index, piece index) bounding an empty bigon or half-bigon.

    The last station of every beta is its even puncture mu_{2j}.  A
    half-bigon there is only taken when it lies outside alpha_j: turning
    the end of beta_j across alpha_j changes the framing at mu_{2j} that
    the gradings are normalized against.  Odd ends carry no such data.
    """
    occ = _occupied(d)
    for j, beta in enumerate(d.betas, start=1):
        st = beta.stations
        npieces = len(st) - 1
        if npieces < 2:
            continue
        for k in range(npieces):
            a, b = st[k], st[k + 1]
            lo, hi = min(a, b), max(a, b)
            if bisect_left(occ, hi) - bisect_left(occ, lo) != 1:
                continue
            if k == npieces - 1 and _alpha_containing((lo + hi) / 2, d.m) == j:
                continue
            return j, k
    return None


def reduce_bigons(d: FlattenedDiagram) -> FlattenedDiagram:
    while True:
        hit = find_bigon(d)
        if hit is None:
            return d
        j, k = hit
        beta = d.betas[j - 1]
        st = list(beta.stations)
        first = beta.first_side
        last = len(st) - 2
        if k == 0:
            del st[1]
            first = -first
        elif k == last:
            del st[k]
        else:
            del st[k : k + 2]
        betas = list(d.betas)
        betas[j - 1] = BetaPath(tuple(st), first)
        d = FlattenedDiagram(d.m, tuple(betas))


def insert_bigon(d: FlattenedDiagram, j: int, k: int) -> FlattenedDiagram:
    """Finger move: push piece k of beta_j across the axis right next to its start station."""
    beta = d.betas[j - 1]
    st = list(beta.stations)
    a, b = st[k], st[k + 1]
    occ = _occupied(d)
    pos = bisect_left(occ, a)
    if b > a:
        gap = occ[pos + 1] - a
        c1, c2 = a + gap / 3, a + 2 * gap / 3
    else:
        gap = a - occ[pos - 1]
        c1, c2 = a - gap / 3, a - 2 * gap / 3
    st[k + 1 : k + 1] = [c1, c2]
    betas = list(d.betas)
    betas[j - 1] = BetaPath(tuple(st), beta.first_side)
    return respace(FlattenedDiagram(d.m, tuple(betas)))


def enumerate_intersections(d: FlattenedDiagram) -> list[IntersectionPoint]:
    """All alpha/beta intersections, punctures included, in (alpha, position) order."""
    raw = []
    punct = set(d.punctures)
    for j, beta in enumerate(d.betas, start=1):
        if len(set(beta.stations)) != len(beta.stations):
            raise GeometryFault(f"beta_{j} meets the axis twice at one point")
        for order, x in enumerate(beta.stations):
            i = _alpha_containing(x, d.m)
            if i is None:
                continue
            raw.append((i, x, j, x in punct, order))
    raw.sort()
    pts = []
    counters: dict[tuple[int, int], int] = {}
    last_alpha, rank = None, 0
    for n, (i, x, j, is_p, order) in enumerate(raw):
        rank = rank + 1 if i == last_alpha else 1
        last_alpha = i
        counters[(i, j)] = counters.get((i, j), 0) + 1
        label = f"{class_letter(i, j, d.m)}{counters[(i, j)]}"
        pts.append(IntersectionPoint(n, (x, Fraction(0)), i, j, is_p, rank, order, label))
    return pts


LETTERS = "xyuvabcdfghkmnpqrstwz"


def class_letter(i: int, j: int, m: int) -> str:
    """Letter naming the points of alpha_i and beta_j.

    Off-diagonal classes come first in lexicographic order, then the
    diagonal ones, so for two arcs the classes read x, y, u, v.
    """
    order = [(a, b) for a in range(1, m + 1) for b in range(1, m + 1) if a != b]
    order += [(a, a) for a in range(1, m + 1)]
    n = order.index((i, j))
    if n < len(LETTERS):
        return LETTERS[n]
    return f"z{i}_{j}_"


def _alpha_containing(x: Fraction, m: int) -> int | None:
    for i in range(1, m + 1):
        if 2 * i - 1 <= x <= 2 * i:
            return i
    return None


@dataclass(frozen=True)
class FigureEightSystem:
    """Figure eights E_1..E_m with their alpha intersections."""

    diagram: FlattenedDiagram
    epsilon: Fraction
    loops: tuple[PLCurve, ...]
    crossover: tuple[tuple[int, int], ...]  # start vertices of the two crossover segments
    points: tuple[DoubledPoint, ...]
    nu: tuple[DoubledPoint, ...]

    def points_on(self, j: int) -> list[DoubledPoint]:
        return [p for p in self.points if p.beta_index == j]

    def path(self, j: int, start: int, end: int) -> list[Point]:
        """Vertices of E_j from vertex start forward to vertex end."""
        vs = self.loops[j - 1].vertices
        n = len(vs)
        out = [vs[start]]
        k = start
        while k != end:
            k = (k + 1) % n
            out.append(vs[k])
        return out

    def path_crosses_over(self, j: int, start: int, end: int) -> bool:
        n = len(self.loops[j - 1].vertices)
        k = start
        while k != end:
            if k in self.crossover[j - 1]:
                return True
            k = (k + 1) % n
        return False


def _unit(a: Point, b: Point) -> tuple[int, int]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx and dy:
        raise GeometryFault("beta realization is not rectilinear")
    return ((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))


def _left(u: tuple[int, int]) -> tuple[int, int]:
    return (-u[1], u[0])


def _shift(p: Point, v: tuple[int, int], eps: Fraction) -> Point:
    return (p[0] + v[0] * eps, p[1] + v[1] * eps)


def _figure_eight(vs: Sequence[Point], eps: Fraction) -> tuple[list[Point], tuple[int, int]]:
    n = len(vs) - 1
    dirs = [_unit(vs[i], vs[i + 1]) for i in range(n)]

    def offset(i: int, sign: int) -> Point:
        normals = []
        if i > 0:
            normals.append(_left(dirs[i - 1]))
        if i < n:
            normals.append(_left(dirs[i]))
        if len(normals) == 2 and normals[0] != normals[1]:
            v = (normals[0][0] + normals[1][0], normals[0][1] + normals[1][1])
        else:
            v = normals[0]
        return _shift(vs[i], (sign * v[0], sign * v[1]), eps)

    # crossover on the horizontal segment nearest the middle of the arc
    horizontals = [i for i in range(n) if dirs[i][1] == 0]
    if not horizontals:
        raise GeometryFault("beta arc has no horizontal segment")
    a = min(horizontals, key=lambda i: (abs(2 * i + 1 - n), i))
    p, q = vs[a], vs[a + 1]
    x1 = (p[0] + (q[0] - p[0]) / 3, p[1])
    x2 = (p[0] + 2 * (q[0] - p[0]) / 3, p[1])
    nl = _left(dirs[a])
    d0, dn = dirs[0], dirs[-1]

    loop: list[Point] = []
    loop += [offset(0, -1), _shift(offset(0, -1), (-d0[0], -d0[1]), eps)]
    loop += [_shift(offset(0, 1), (-d0[0], -d0[1]), eps)]
    loop += [offset(i, 1) for i in range(0, a + 1)]
    loop.append(_shift(x1, nl, eps))
    cross1 = len(loop) - 1
    loop.append(_shift(x2, (-nl[0], -nl[1]), eps))
    loop += [offset(i, -1) for i in range(a + 1, n + 1)]
    loop += [_shift(offset(n, -1), dn, eps), _shift(offset(n, 1), dn, eps)]
    loop += [offset(i, 1) for i in range(n, a, -1)]
    loop.append(_shift(x2, nl, eps))
    cross2 = len(loop) - 1
    loop.append(_shift(x1, (-nl[0], -nl[1]), eps))
    loop += [offset(i, -1) for i in range(a, 0, -1)]
    return loop, (cross1, cross2)


def build_figure_eights(d: FlattenedDiagram, epsilon: Fraction | None = None) -> FigureEightSystem:
    eps = d.epsilon() if epsilon is None else epsilon
    if eps <= 0 or eps * 4 > d.min_feature():
        raise GeometryFault(f"push-off width {eps} cannot separate the diagram features")
    bases = enumerate_intersections(d)
    by_pos = {(p.beta_index, p.position[0]): p for p in bases}
    loops, crossovers, doubled, nus = [], [], [], []
    for j in range(1, d.m + 1):
        vs = d.beta_vertices(j)
        loop, cross = _figure_eight(vs, eps)
        loops.append(PLCurve(tuple(loop), closed=True))
        crossovers.append(cross)
        where = {}
        for idx, v in enumerate(loop):
            if v[1] == 0:
                if v in where:
                    raise GeometryFault(f"figure eight E_{j} meets the axis twice at {_fmt_pt(v)}")
                where[v] = idx
        for x in d.betas[j - 1].stations:
            base = by_pos.get((j, x))
            if base is None:
                continue
            near = [
                (pt, idx) for pt, idx in where.items()
                if abs(pt[0] - x) == eps and _alpha_containing(pt[0], d.m) == base.alpha_index
            ]
            if base.is_puncture:
                if len(near) != 1:
                    raise GeometryFault(f"expected one push-off point near puncture {x}")
                doubled.append(DoubledPoint(base, 0, near[0][0], near[0][1]))
            else:
                if len(near) != 2:
                    raise GeometryFault(f"expected two push-off points near {_fmt_pt(base.position)}")
                doubled.extend(
                    DoubledPoint(base, -1, pt, idx) for pt, idx in sorted(near)
                )
    system = FigureEightSystem(d, eps, tuple(loops), tuple(crossovers), tuple(doubled), ())
    labelled = _label_branches(system)
    nu = []
    for j in range(1, d.m + 1):
        target = Fraction(2 * j)
        cands = [p for p in labelled if p.beta_index == j and p.base.is_puncture and p.base.position[0] == target]
        if len(cands) != 1:
            raise GeometryFault(f"even puncture {target} is not an endpoint of beta_{j}")
        nu.append(cands[0])
    labelled.sort(key=lambda p: (p.alpha_index, p.beta_index, p.base.alpha_order, p.branch))
    return FigureEightSystem(d, eps, tuple(loops), tuple(crossovers), tuple(labelled), tuple(nu))


def _label_branches(system: FigureEightSystem) -> list[DoubledPoint]:
    """Assign e / e' to each pair by the +1 winding rule around the enclosed puncture."""
    out = []
    pending: dict[int, list[DoubledPoint]] = {}
    for p in system.points:
        if p.branch == 0:
            out.append(p)
        else:
            pending.setdefault(p.base.id, []).append(p)
    punct = system.diagram.puncture_points()
    for pair in pending.values():
        a, b = pair
        j = a.beta_index
        if system.path_crosses_over(j, a.vertex, b.vertex):
            a, b = b, a
        if system.path_crosses_over(j, a.vertex, b.vertex):
            raise GeometryFault("both arcs between a doubled pair cross over")
        loop = system.path(j, a.vertex, b.vertex)
        w = sum(winding_number(loop, p) for p in punct)
        if w == -1:
            a, b = b, a
        elif w != 1:
            raise GeometryFault(f"doubled pair at {_fmt_pt(a.base.position)} has winding {w}")
        out.append(DoubledPoint(a.base, 0, a.position, a.vertex))
        out.append(DoubledPoint(b.base, 1, b.position, b.vertex))
    return out


def _fmt_pt(p: Point) -> str:
    return f"({p[0]}, {p[1]})"


def serialize_diagram(d: FlattenedDiagram) -> str:
    """Structured text: punctures and every curve as lists of exact rationals p/q."""
    def pt(p: Point) -> str:
        return f"{_q(p[0])} {_q(p[1])}"

    lines = [f"m {d.m}", "punctures " + " ".join(_q(x) for x in d.punctures)]
    for k, a in enumerate(d.alphas, start=1):
        lines.append(f"alpha {k} " + " ; ".join(pt(p) for p in a.vertices))
    for k in range(1, d.m + 1):
        beta = d.betas[k - 1]
        lines.append(f"beta {k} side {beta.first_side} stations " + " ".join(_q(x) for x in beta.stations))
        lines.append(f"beta_curve {k} " + " ; ".join(pt(p) for p in d.beta_vertices(k)))
    for k, h in enumerate(d.handles, start=1):
        lines.append(f"handle {k} " + " ; ".join(pt(p) for p in h.vertices))
    lines.append(f"boundary_radius {_q(d.boundary_radius)}")
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> FlattenedDiagram:
    m = None
    betas: dict[int, BetaPath] = {}
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "m":
            m = int(parts[1])
        elif parts[0] == "beta":
            k, side = int(parts[1]), int(parts[3])
            stations = tuple(Fraction(s) for s in parts[5:])
            betas[k] = BetaPath(stations, side)
    if m is None or sorted(betas) != list(range(1, m + 1)):
        raise InputError("diagram text is missing its arc count or beta stations")
    return FlattenedDiagram(m, tuple(betas[k] for k in range(1, m + 1)))


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_svg(d: FlattenedDiagram, figure_eights: bool = False, labels: bool = True,
               scale: int = 60) -> str:
    """A static SVG picture of the diagram; the same input always gives the same bytes.

    Heights of beta pieces are stretched so nested pieces stay readable.
    """
    system = build_figure_eights(d) if figure_eights or labels else None
    stretch = Fraction(3, 2)

    def xy(p: Point) -> str:
        x = float((p[0] + 1) * scale)
        y = float((stretch - p[1] * stretch + 1) * scale)
        return f"{x:.2f},{y:.2f}"

    width = float((2 * d.m + 2) * scale)
    height = float((2 * stretch + 2) * scale)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for h in d.handles:
        a, b = h.vertices
        clipped = (b[0], -Fraction(6, 5))
        out.append(f'<polyline points="{xy(clipped)} {xy(b)}" fill="none" stroke="#999" '
                   f'stroke-dasharray="4 3" stroke-width="1"/>')
    for a in d.alphas:
        out.append(f'<polyline points="{" ".join(xy(p) for p in a.vertices)}" fill="none" '
                   f'stroke="#1f5fbf" stroke-width="3"/>')
    if figure_eights and system is not None:
        for loop in system.loops:
            pts = " ".join(xy(p) for p in loop.vertices)
            out.append(f'<polygon points="{pts}" fill="none" stroke="#c03030" stroke-width="1.2"/>')
    else:
        for b in d.betas_pl:
            out.append(f'<polyline points="{" ".join(xy(p) for p in b.vertices)}" fill="none" '
                       f'stroke="#c03030" stroke-width="1.5"/>')
    for p in d.puncture_points():
        x, y = xy(p).split(",")
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
    if labels and system is not None:
        seen = set()
        for p in enumerate_intersections(d):
            if p.is_puncture or p.id in seen:
                continue
            seen.add(p.id)
            x, y = xy(p.position).split(",")
            out.append(f'<circle cx="{x}" cy="{y}" r="2.5" fill="#1f5fbf"/>')
            out.append(f'<text x="{x}" y="{float(y) + 16:.2f}" font-size="11" '
                       f'text-anchor="middle" font-family="serif">{p.label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
