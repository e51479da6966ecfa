"""Lifts of the intersection points to the double cover branched at the punctures.

Over a non-puncture x the cover u^2 = -P(z) has two points u = +-sqrt(-P(x)).
The sheet called "+" is the one reached by continuing u along beta_j from
the branch point over mu_{2j}, starting with arg(z - mu_{2j}) equal to the
departure direction of beta_j.  Only the combinatorics of puncture passages
enter: arg(z - mu_k) moves by a half turn exactly when a piece of beta passes
over or under mu_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .generators import Generator, enumerate_generators
from .gradings import GradingRecord
from .plane_diagram import FlattenedDiagram, IntersectionPoint


@dataclass(frozen=True)
class HatPoint:
    base: IntersectionPoint
    sheet: int  # +1 or -1; punctures carry +1 only
    quarter_turns: int  # arg(u) in units of pi/2, mod 4; -1 on punctures where u = 0

    @property
    def alpha_index(self) -> int:
        return self.base.alpha_index

    @property
    def beta_index(self) -> int:
        return self.base.beta_index

    @property
    def branch(self) -> int:
        return 0 if self.sheet > 0 else 1

    @property
    def label(self) -> str:
        if self.base.is_puncture:
            return self.base.label
        return self.base.label + ("+" if self.sheet > 0 else "-")


def _station_phases(d: FlattenedDiagram, j: int) -> dict:
    """arg(u) of the tracked lift, in quarter turns, at each interior station of beta_j."""
    beta = d.betas[j - 1]
    pieces = [(b, a, s) for a, b, s in reversed(beta.pieces())]  # walk from mu_{2j}
    punct = d.punctures
    start = pieces[0][0]
    # arg(z - mu_k) in half turns; the start puncture begins a quarter turn off the axis
    args: dict = {}
    for k, mu in enumerate(punct):
        args[k] = 0 if start > mu else 1
    ks = punct.index(start)
    out = {}
    for n, (a, b, s) in enumerate(pieces):
        for k, mu in enumerate(punct):
            if mu == b:
                continue
            if k == ks and n == 0:
                args[k] = 0 if b > mu else (1 if s > 0 else -1)
                continue
            c = args[k]
            if s > 0:
                low = c if c % 2 == 0 else c - 1
            else:
                low = c - 1 if c % 2 == 0 else c
            # window [low, low + 1] in half turns, with the even end on the right of mu
            target_even = b > mu
            if s > 0:
                args[k] = low if target_even else low + 1
            else:
                args[k] = low + 1 if target_even else low
        if n < len(pieces) - 1:
            total = sum(v for k, v in args.items() if punct[k] != b)
            out[b] = (1 + total) % 4
    return out


def lift_points(d: FlattenedDiagram, zbar: Sequence[IntersectionPoint]) -> list[HatPoint]:
    phases = {j: _station_phases(d, j) for j in range(1, d.m + 1)}
    out = []
    for x in zbar:
        if x.is_puncture:
            out.append(HatPoint(x, 1, -1))
            continue
        q = phases[x.beta_index][x.position[0]]
        out.append(HatPoint(x, 1, q))
        out.append(HatPoint(x, -1, (q + 2) % 4))
    return out


def hat_generators(points: Sequence[HatPoint], m: int) -> list[tuple[HatPoint, ...]]:
    return [g.points for g in enumerate_generators(points, m)]


def identify(gens: Sequence[Generator], hat: Sequence[HatPoint]) -> dict[Generator, tuple[HatPoint, ...]]:
    """The chosen bijection: e goes to the + sheet and e' to the - sheet."""
    by_key = {(h.base.id, h.branch): h for h in hat}
    return {g: tuple(by_key[(p.base.id, p.branch)] for p in g.points) for g in gens}


def r_tilde(record: GradingRecord) -> int:
    return record.P_tilde + record.T - record.Q
