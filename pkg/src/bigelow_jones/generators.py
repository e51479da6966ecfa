"""Bigelow generators: m-tuples of figure-eight points with distinct alpha and beta indices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GeometryFault
from .plane_diagram import DoubledPoint, FigureEightSystem, IntersectionPoint


@dataclass(frozen=True)
class Generator:
    points: tuple[DoubledPoint, ...]  # points[i] lies on alpha_{i+1}

    @property
    def permutation(self) -> tuple[int, ...]:
        return tuple(p.beta_index for p in self.points)

    @property
    def label(self) -> str:
        return " ".join(p.label for p in self.points)

    @property
    def compact_label(self) -> str:
        return "".join(p.label for p in self.points)

    def __str__(self) -> str:
        return self.label


def _sort_key(p: DoubledPoint):
    return (p.alpha_index, p.beta_index, p.base.alpha_order, p.branch)


def enumerate_generators(points, m: int) -> list[Generator]:
    """Every choice of one point per alpha arc using each beta index once, in canonical order."""
    by_alpha: dict[int, list[DoubledPoint]] = {i: [] for i in range(1, m + 1)}
    for p in sorted(points, key=_sort_key):
        by_alpha[p.alpha_index].append(p)
    out: list[Generator] = []
    chosen: list[DoubledPoint] = []
    used: set[int] = set()

    def extend(i: int) -> None:
        if i > m:
            out.append(Generator(tuple(chosen)))
            return
        for p in by_alpha[i]:
            if p.beta_index in used:
                continue
            used.add(p.beta_index)
            chosen.append(p)
            extend(i + 1)
            chosen.pop()
            used.discard(p.beta_index)

    extend(1)
    return out


def distinguished_generator(system: FigureEightSystem) -> Generator:
    nu = sorted(system.nu, key=lambda p: p.alpha_index)
    if [p.alpha_index for p in nu] != list(range(1, system.diagram.m + 1)):
        raise GeometryFault("even punctures do not sit on distinct alpha arcs")
    return Generator(tuple(nu))


def project_to_base(g: Generator) -> tuple[IntersectionPoint, ...]:
    return tuple(p.base for p in g.points)


def permutation_parity(g: Generator) -> int:
    """+1 for an even alpha-to-beta bijection, -1 for an odd one."""
    perm = list(g.permutation)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i + 1:
            k = perm[i] - 1
            perm[i], perm[k] = perm[k], perm[i]
            sign = -sign
    return sign
