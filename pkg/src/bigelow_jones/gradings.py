"""Gradings on figure-eight points and on generators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GeometryFault, IdentityViolation
from .generators import Generator, project_to_base
from .plane_diagram import DoubledPoint, FigureEightSystem, IntersectionPoint, Point, winding_number

# orientation conventions, fixed against the trefoil tables
P_SIGN = 1
T_SIGN = 1


def q_loop(system: FigureEightSystem, e: DoubledPoint, route: int = 1) -> list[Point]:
    """Closed loop nu_j -> e along E_j, then through the handles and the lower boundary back."""
    d = system.diagram
    j, i = e.beta_index, e.alpha_index
    nu = system.nu[j - 1]
    if route > 0:
        path = system.path(j, nu.vertex, e.vertex)
    else:
        path = system.path(j, e.vertex, nu.vertex)[::-1]
    mi, mj = d.alpha_midpoint(i), d.alpha_midpoint(j)
    low = -d.boundary_radius
    tail = [mi, (mi[0], low), (mj[0], low), mj]
    return _dedupe(path + tail)


def _dedupe(pts: list[Point]) -> list[Point]:
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    while len(out) > 1 and out[-1] == out[0]:
        out.pop()
    return out


def q_star(system: FigureEightSystem, e: DoubledPoint, route: int = 1) -> int:
    loop = q_loop(system, e, route)
    return sum(winding_number(loop, p) for p in system.diagram.puncture_points())


def p_star(system: FigureEightSystem, e: DoubledPoint, route: int = 1) -> int:
    """Turning of the squared tangent phase along E_j from nu_j to e, in full turns."""
    j = e.beta_index
    nu = system.nu[j - 1]
    if route > 0:
        path = system.path(j, nu.vertex, e.vertex)
    else:
        path = system.path(j, e.vertex, nu.vertex)[::-1]
    total = 0.0
    for a, b, c in zip(path, path[1:], path[2:]):
        ux, uy = float(b[0] - a[0]), float(b[1] - a[1])
        vx, vy = float(c[0] - b[0]), float(c[1] - b[1])
        total += math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
    turns = total / math.pi
    n = round(turns)
    if abs(turns - n) >= 0.25:
        raise GeometryFault(f"phase lift at {e.label} is {turns:.3f}, not near an integer")
    return P_SIGN * n


def q_grading(qs: dict[DoubledPoint, int], g: Generator) -> int:
    return sum(qs[p] for p in g.points)


def p_tilde_grading(ps: dict[DoubledPoint, int], g: Generator) -> int:
    return sum(ps[p] for p in g.points)


def _strand_path(system: FigureEightSystem, i: int, x: IntersectionPoint, y: IntersectionPoint):
    """Strand i: along alpha_i from x to mu_{2i}, then back along beta_i to y."""
    alpha_leg = [x.position, (Fraction(2 * i), Fraction(0))]
    vs = list(system.diagram.beta_vertices(i))
    if vs[-1][0] != 2 * i:
        raise GeometryFault(f"beta_{i} does not end at mu_{2 * i}")
    beta_leg = vs[vs.index(y.position):][::-1]
    return alpha_leg, beta_leg


def _arclength(pts: Sequence[Point]) -> list[Fraction]:
    acc = [Fraction(0)]
    for a, b in zip(pts, pts[1:]):
        acc.append(acc[-1] + abs(b[0] - a[0]) + abs(b[1] - a[1]))
    return acc


def _timed(pts: Sequence[Point], start: Fraction, end: Fraction) -> list[tuple[Fraction, Point]]:
    """Vertices of a path traversed at constant L1 speed between times start and end."""
    acc = _arclength(pts)
    total = acc[-1]
    if total == 0:
        return [(start, pts[0]), (end, pts[-1])]
    return [(start + (end - start) * s / total, p) for s, p in zip(acc, pts)]


def _sample(timed: list[tuple[Fraction, Point]], times: Sequence[Fraction]) -> list[Point]:
    """Positions at the given increasing times, in one pass along the path."""
    out = []
    k, last = 0, len(timed) - 1
    for t in times:
        if t <= timed[0][0]:
            out.append(timed[0][1])
            continue
        while k < last and timed[k + 1][0] < t:
            k += 1
        if k == last:
            out.append(timed[-1][1])
            continue
        (t0, p0), (t1, p1) = timed[k], timed[k + 1]
        if t1 == t0 or t == t1:
            out.append(p1)
            continue
        s = (t - t0) / (t1 - t0)
        out.append((p0[0] + s * (p1[0] - p0[0]), p0[1] + s * (p1[1] - p0[1])))
    return out


def _half_turns(w: list[Point]) -> int:
    """Signed crossings of the imaginary axis by a polyline avoiding 0 (counterclockwise positive)."""
    total = 0
    for (r0, i0), (r1, i1) in zip(w, w[1:]):
        if (r0 >= 0) == (r1 >= 0):
            continue
        s = r0 / (r0 - r1)
        im = i0 + s * (i1 - i0)
        if im == 0:
            raise GeometryFault("two points collide")
        into_left = r1 < 0
        total += (1 if im > 0 else -1) * (1 if into_left else -1)
    return total


def _half_turns_float(w: list[tuple[float, float]], eps: float = 1e-9) -> int | None:
    """Float version of _half_turns; None when some sign is too close to call."""
    total = 0
    for (r0, i0), (r1, i1) in zip(w, w[1:]):
        if abs(r0) < eps or abs(r1) < eps:
            return None
        if (r0 > 0) == (r1 > 0):
            continue
        im = i0 + r0 / (r0 - r1) * (i1 - i0)
        if abs(im) < eps:
            return None
        total += (1 if im > 0 else -1) * (1 if r1 < 0 else -1)
    return total


def t_bar(system: FigureEightSystem, base: Sequence[IntersectionPoint], stagger: Fraction = Fraction(0),
          cache: dict | None = None) -> int:
    """Linking with the diagonal of the loop out along the alphas and back along the betas.

    stagger delays the lower-indexed strand of each pair; it only changes
    the representative of the loop and is used if two points would collide.
    Strand i depends only on its start on alpha_i and its stop on beta_i, so
    pair contributions can be shared between tuples through cache.
    """
    m = len(base)
    stop = {p.beta_index: p for p in base}
    keys = [(x.id, stop[i].id) for i, x in enumerate(base, start=1)]
    one, two = Fraction(1), Fraction(2)
    cache = {} if cache is None else cache

    def path(i):
        """Exact and float timings of strand i (0-based), shared through cache."""
        key = ("strand", stagger, m, i, keys[i])
        if key not in cache:
            a_leg, b_leg = _strand_path(system, i + 1, base[i], stop[i + 1])
            delay = stagger * (m - i) / (m + 1)
            p = _timed(a_leg, Fraction(0), one) + _timed(b_leg, one, two)
            if delay:
                p = [(Fraction(0), a_leg[0])] + [(min(t + delay, two + delay), q) for t, q in p]
                p.append((two + stagger, b_leg[-1]))
            cache[key] = (p, [(float(t), (float(x), float(y))) for t, (x, y) in p])
        return cache[key]

    total = 0
    for i in range(m):
        for k in range(i + 1, m):
            key = (stagger, m, i, k, keys[i], keys[k])
            if key in cache:
                total += cache[key]
                continue
            (ti, fi), (tk, fk) = path(i), path(k)
            # floats first; distinct exact times stay distinct at this size
            times = sorted({t for t, _ in fi} | {t for t, _ in fk})
            pa, pb = _sample(fi, times), _sample(fk, times)
            value = _half_turns_float([(a[0] - b[0], a[1] - b[1]) for a, b in zip(pa, pb)])
            if value is None:
                times = sorted({t for t, _ in ti} | {t for t, _ in tk})
                pa, pb = _sample(ti, times), _sample(tk, times)
                value = _half_turns([(a[0] - b[0], a[1] - b[1]) for a, b in zip(pa, pb)])
            cache[key] = value
            total += value
    return T_SIGN * total


def t_grading(system: FigureEightSystem, g: Generator, reference: Generator | None = None) -> int:
    """T with T(reference) = 0 (reference defaults to the distinguished generator)."""
    value = _t_bar_guarded(system, project_to_base(g))
    if reference is not None:
        value -= _t_bar_guarded(system, project_to_base(reference))
    return value


def _t_bar_guarded(system: FigureEightSystem, base, cache: dict | None = None) -> int:
    for stagger in (Fraction(0), Fraction(1, 7), Fraction(1, 13), Fraction(1, 29)):
        try:
            return t_bar(system, base, stagger, cache)
        except GeometryFault:
            continue
    raise GeometryFault("staggering did not separate the moving points")


def j_grading(t: int, q: int, m: int, w: int) -> int:
    return 2 * (t - q) + m + w


@dataclass(frozen=True)
class GradingRecord:
    label: str
    Q: int
    T: int
    J: int
    P_tilde: int
    P: int
    two_R: int
    sign: int

    @property
    def R(self) -> Fraction:
        return Fraction(self.two_R, 2)

    @property
    def R_tilde(self) -> int:
        return self.P_tilde + self.T - self.Q

    def check(self, m: int, w: int) -> None:
        problems = []
        if self.J != 2 * (self.T - self.Q) + m + w:
            problems.append("J = 2(T-Q)+m+w")
        if self.P != self.P_tilde - (m + w):
            problems.append("P = Ptilde-(m+w)")
        if self.two_R != 2 * self.P + self.J:
            problems.append("2R = 2P+J")
        if self.two_R != 2 * self.R_tilde - (m + w):
            problems.append("2R = 2(Ptilde+T-Q)-(m+w)")
        if self.sign != (-1) ** (self.P_tilde % 2):
            problems.append("sign = (-1)^Ptilde")
        if problems:
            raise IdentityViolation(f"{self.label}: " + ", ".join(problems))

    def as_dict(self) -> dict:
        return {
            "label": self.label, "Q": self.Q, "T": self.T, "J": self.J,
            "Ptilde": self.P_tilde, "P": self.P, "twoR": self.two_R, "sign": self.sign,
        }


def sign(p_tilde: int) -> int:
    return -1 if p_tilde % 2 else 1


def r_grading(p: int, j: int) -> Fraction:
    return p + Fraction(j, 2)


def grade(system: FigureEightSystem, gens: Iterable[Generator], m: int, w: int,
          reference: Generator | None = None) -> list[GradingRecord]:
    """Full records for each generator; identities are checked on the way out."""
    points = {p for g in gens for p in g.points}
    gens = list(gens)
    qs = {p: q_star(system, p) for p in points}
    ps = {p: p_star(system, p) for p in points}
    tcache: dict[tuple, int] = {}
    pairs: dict = {}
    records = []
    for g in gens:
        base = project_to_base(g)
        key = tuple(b.id for b in base)
        if key not in tcache:
            tcache[key] = _t_bar_guarded(system, base, pairs)
        t = tcache[key]
        if reference is not None:
            t -= _t_bar_guarded(system, project_to_base(reference))
        q = q_grading(qs, g)
        pt = p_tilde_grading(ps, g)
        j = j_grading(t, q, m, w)
        p = pt - (m + w)
        rec = GradingRecord(g.compact_label, q, t, j, pt, p, 2 * p + j, sign(pt))
        rec.check(m, w)
        records.append(rec)
    return records


def grading_table(records: Sequence[GradingRecord], field: str) -> list[tuple[int, list[str]]]:
    """Rows (value, labels) in descending value order, labels in generator order."""
    rows: dict[int, list[str]] = {}
    for r in records:
        rows.setdefault(getattr(r, field), []).append(r.label)
    return sorted(rows.items(), key=lambda kv: -kv[0])


def format_table(records: Sequence[GradingRecord], field: str) -> str:
    name = {"P_tilde": "Ptilde", "two_R": "2R"}.get(field, field)
    return "\n".join(f"{name}={v}: " + ", ".join(labels) for v, labels in grading_table(records, field))
