"""Jones polynomial of a braid closure by the Kauffman bracket state sum.

Shares nothing with the intersection pipeline except the braid word, so it
serves as the independent reference for every computed polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, writhe
from .errors import InputError
from .laurent import LaurentPolynomial

MAX_LETTERS = 24


@dataclass(frozen=True)
class ClosureDiagram:
    """Crossings of the closed braid, one per letter, top to bottom."""

    strands: int
    crossings: tuple[tuple[int, int], ...]

    @classmethod
    def from_braid(cls, b: BraidWord) -> ClosureDiagram:
        return cls(b.strands, b.letters)

    def loop_count(self, state: int) -> int:
        """Loops after smoothing; bit k of state set means crossing k takes its B-smoothing."""
        m, n = self.strands, len(self.crossings)
        parent = list(range(m * (n + 1)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        def node(level, pos):
            return (level % n if n else 0) * m + pos

        if n == 0:
            return m
        for k, (i, sign) in enumerate(self.crossings):
            left, right = i - 1, i
            for p in range(m):
                if p not in (left, right):
                    union(node(k, p), node(k + 1, p))
            b_smoothing = (state >> k) & 1
            # for a positive letter the A-smoothing keeps the strands vertical
            vertical = (b_smoothing == 0) == (sign > 0)
            if vertical:
                union(node(k, left), node(k + 1, left))
                union(node(k, right), node(k + 1, right))
            else:
                union(node(k, left), node(k, right))
                union(node(k + 1, left), node(k + 1, right))
        return len({find(node(k, p)) for k in range(n) for p in range(m)})


def bracket(diagram: ClosureDiagram) -> dict[int, int]:
    """Kauffman bracket as {exponent of A: coefficient}."""
    n = len(diagram.crossings)
    d = {2: -1, -2: -1}
    result: dict[int, int] = {}
    for state in range(1 << n):
        b_count = bin(state).count("1")
        term = {n - 2 * b_count: 1}
        for _ in range(diagram.loop_count(state) - 1):
            term = _mul(term, d)
        for e, v in term.items():
            result[e] = result.get(e, 0) + v
    return {e: v for e, v in result.items() if v}


def kauffman_jones(b: BraidWord) -> LaurentPolynomial:
    if len(b) > MAX_LETTERS:
        raise InputError(f"state sum limited to {MAX_LETTERS} letters, got {len(b)}")
    br = bracket(ClosureDiagram.from_braid(b))
    w = writhe(b)
    # f = (-A^3)^(-w) <D>, then A = t^(-1/4)
    f = {e - 3 * w: v * (-1) ** (w % 2) for e, v in br.items()}
    t_half: dict[int, int] = {}
    for e, v in f.items():
        if e % 2:
            raise AssertionError("odd power of A survived normalization")
        t_half[-e // 2] = t_half.get(-e // 2, 0) + v
    return LaurentPolynomial.from_t_half(t_half)


def _mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return out
