"""Sparse Laurent polynomials with integer coefficients.

Exponents are integers in units of q.  The same object is read in the
variable t through q = -t^(1/2), so q^k corresponds to (-1)^k t^(k/2).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import IdentityViolation, InputError


class LaurentPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            e = int(e)
            c[e] = c.get(e, 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolynomial:
        return cls({exponent: coeff})

    @classmethod
    def from_t_half(cls, coeffs: Mapping[int, int]) -> LaurentPolynomial:
        """Build from {k: c} meaning sum of c * t^(k/2)."""
        return cls({k: v * (-1) ** (k % 2) for k, v in coeffs.items()})

    def t_half_coeffs(self) -> dict[int, int]:
        """Coefficients {k: c} of the t-form sum c * t^(k/2)."""
        return {k: v * (-1) ** (k % 2) for k, v in self._c.items()}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("coefficient is not a unit")
            return LaurentPolynomial({e * n: v ** (-n)})
        result = LaurentPolynomial({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def divmod(self, divisor: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Long division from the top exponent; remainder has span below the divisor's."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        quo: dict[int, int] = {}
        dtop = divisor.max_exp()
        dlead = divisor._c[dtop]
        span = dtop - divisor.min_exp()
        while rem and max(rem) - min(rem) >= span:
            top = max(rem)
            q, r = divmod(rem[top], dlead)
            if r:
                break
            shift = top - dtop
            quo[shift] = quo.get(shift, 0) + q
            for e, v in divisor._c.items():
                rem[e + shift] = rem.get(e + shift, 0) - q * v
                if rem[e + shift] == 0:
                    del rem[e + shift]
        return LaurentPolynomial(quo), LaurentPolynomial(rem)

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        quo, rem = self.divmod(divisor)
        if rem:
            raise IdentityViolation(f"{self.q_text()} is not divisible by {divisor.q_text()}")
        return quo

    def substitute_inverse(self) -> LaurentPolynomial:
        """q -> q^-1, which is t -> t^-1 on the t-form."""
        return LaurentPolynomial({-e: v for e, v in self._c.items()})

    def evaluate_t(self, t: complex) -> complex:
        root = complex(t) ** 0.5
        return sum(v * root ** k for k, v in self.t_half_coeffs().items())

    def q_text(self) -> str:
        return _render(self._c, "q", half=False)

    def t_text(self) -> str:
        return _render(self.t_half_coeffs(), "t", half=True)

    def __repr__(self):
        return f"LaurentPolynomial({self.q_text()})"


Q_PLUS_QINV = LaurentPolynomial({1: 1, -1: 1})


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")


def _exponent_text(k: int, half: bool) -> str:
    if not half:
        return str(k)
    if k % 2 == 0:
        return str(k // 2)
    return f"({Fraction(k, 2)})"


def _render(c: Mapping[int, int], var: str, half: bool) -> str:
    if not c:
        return "0"
    parts = []
    for k in sorted(c, reverse=True):
        v = c[k]
        mag = abs(v)
        if k == 0:
            body = str(mag)
        else:
            exp = _exponent_text(k, half)
            power = var if exp == "1" else f"{var}^{exp}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if v > 0 else f"-{body}")
        else:
            parts.append(("+ " if v > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(?:([qt])(?:\^\(?\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\)?)?)?\s*"
)


def parse_polynomial(text: str, var: str) -> LaurentPolynomial:
    """Inverse of q_text (var='q') and t_text (var='t')."""
    text = text.strip()
    if text == "0":
        return LaurentPolynomial()
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise InputError(f"cannot parse polynomial term at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3) is None:
            num, den = 0, 1
        else:
            if m.group(3) != var:
                raise InputError(f"unexpected variable {m.group(3)!r}")
            num = int(m.group(4)) if m.group(4) else 1
            den = int(m.group(5)) if m.group(5) else 1
        k = Fraction(num, den) * (2 if var == "t" else 1)
        if k.denominator != 1:
            raise InputError(f"exponent {Fraction(num, den)} not allowed")
        coeffs[int(k)] = coeffs.get(int(k), 0) + sign * coeff
        pos = m.end()
    if var == "t":
        return LaurentPolynomial.from_t_half(coeffs)
    return LaurentPolynomial(coeffs)
