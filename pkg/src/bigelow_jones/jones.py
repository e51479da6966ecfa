"""Jones polynomial from graded Bigelow generators."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ReducedConditionError
from .generators import enumerate_generators
from .gradings import GradingRecord, grade
from .laurent import Q_PLUS_QINV, LaurentPolynomial
from .plane_diagram import FigureEightSystem, FlattenedDiagram, build_figure_eights


def bigelow_polynomial(records: Sequence[GradingRecord]) -> LaurentPolynomial:
    """J_L(q): signed sum of q^J over generators."""
    return LaurentPolynomial((r.J, r.sign) for r in records)


def normalize(jl: LaurentPolynomial) -> LaurentPolynomial:
    """Divide by q + q^-1; the quotient is then read in t through q = -t^(1/2)."""
    return jl.exact_div(Q_PLUS_QINV)


def corollary_polynomial(records: Sequence[GradingRecord]) -> LaurentPolynomial:
    """V_L from the P and R gradings alone: sum (-1)^P t^(R-P) over -(t^(1/2) + t^(-1/2))."""
    terms: dict[int, int] = {}
    for r in records:
        k = r.two_R - 2 * r.P  # exponent of t^(1/2)
        terms[k] = terms.get(k, 0) + (-1) ** (r.P % 2)
    total = LaurentPolynomial.from_t_half(terms)
    # -(t^(1/2) + t^(-1/2)) is q + q^-1 under q = -t^(1/2)
    divisor = LaurentPolynomial.from_t_half({1: -1, -1: -1})
    return total.exact_div(divisor)


def reduced_condition_ray(d: FlattenedDiagram) -> str:
    """Name of a straight ray from just right of mu_{2m} to infinity that misses every arc.

    Tries up, then down, then right along the axis; raises if none is clear.
    """
    top = Fraction(2 * d.m)
    xs = sorted({x for b in d.betas for x in b.stations if x > top})
    start = top + ((xs[0] - top) / 2 if xs else Fraction(1, 2))
    spans = {1: False, -1: False}
    for beta in d.betas:
        for a, b, s in beta.pieces():
            if min(a, b) < start < max(a, b):
                spans[s] = True
    if not spans[1]:
        return "up"
    if not spans[-1]:
        return "down"
    if not xs:
        return "right"
    raise ReducedConditionError("no straight ray joins mu_2m to infinity avoiding the arcs")


def reduced_records(d: FlattenedDiagram, w: int, system: FigureEightSystem | None = None) -> list[GradingRecord]:
    """Graded generators on alpha_1..alpha_{m-1} and beta_1..beta_{m-1}.

    Q still counts winding around all 2m punctures; J uses m-1 arcs.
    """
    reduced_condition_ray(d)
    if system is None:
        system = build_figure_eights(d)
    m = d.m
    pts = [p for p in system.points if p.alpha_index < m and p.beta_index < m]
    gens = enumerate_generators(pts, m - 1)
    return grade(system, gens, m - 1, w)


def reduced_polynomial(d: FlattenedDiagram, m: int, w: int, system: FigureEightSystem | None = None) -> LaurentPolynomial:
    """V_L directly from the reduced generators, read in t through q = -t^(1/2)."""
    if m != d.m:
        raise ValueError("m does not match the diagram")
    return bigelow_polynomial(reduced_records(d, w, system))
