"""End-to-end computation for one braid word."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .braid import BraidWord, to_plat, writhe
from .generators import Generator, distinguished_generator, enumerate_generators
from .gradings import GradingRecord, grade
from .jones import bigelow_polynomial, corollary_polynomial, normalize, reduced_polynomial
from .laurent import LaurentPolynomial
from .plane_diagram import FigureEightSystem, FlattenedDiagram, apply_braid, build_figure_eights, standard_matching


@dataclass
class Analysis:
    braid: BraidWord
    diagram: FlattenedDiagram

    @property
    def m(self) -> int:
        return self.diagram.m

    @property
    def w(self) -> int:
        return writhe(self.braid)

    @cached_property
    def system(self) -> FigureEightSystem:
        return build_figure_eights(self.diagram)

    @cached_property
    def generators(self) -> list[Generator]:
        return enumerate_generators(self.system.points, self.m)

    @cached_property
    def nu(self) -> Generator:
        return distinguished_generator(self.system)

    @cached_property
    def records(self) -> list[GradingRecord]:
        return grade(self.system, self.generators, self.m, self.w)

    @cached_property
    def jones_q(self) -> LaurentPolynomial:
        return bigelow_polynomial(self.records)

    @cached_property
    def jones_t(self) -> LaurentPolynomial:
        return normalize(self.jones_q)

    @cached_property
    def corollary_t(self) -> LaurentPolynomial:
        return corollary_polynomial(self.records)

    def reduced_t(self) -> LaurentPolynomial:
        return reduced_polynomial(self.diagram, self.m, self.w, self.system)


def diagram_for(b: BraidWord, reduce: bool = True) -> FlattenedDiagram:
    return apply_braid(standard_matching(b.strands), to_plat(b), reduce=reduce)


def analyze(b: BraidWord, reduce: bool = True) -> Analysis:
    return Analysis(b, diagram_for(b, reduce))
