"""Laurent polynomials in one distinguished parameter.

These carry the one-parameter families used by the limit machinery: the
parameter (default ``a``) may appear with negative exponents, and the
valuation (minimal exponent) of a nonzero value is what drives the
flat-limit row reduction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import DimensionMismatchError, ZeroScaleError

ZERO = Fraction(0)


class LaurentPoly:
    __slots__ = ("param", "coeffs")

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None, param: str = "a"):
        self.param = param
        clean: dict[int, Fraction] = {}
        for exp, c in (coeffs or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[int(exp)] = clean.get(int(exp), ZERO) + c
        self.coeffs = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def const(cls, value, param: str = "a") -> "LaurentPoly":
        return cls({0: Fraction(value)}, param)

    @classmethod
    def term(cls, exp: int, value=1, param: str = "a") -> "LaurentPoly":
        return cls({exp: Fraction(value)}, param)

    def _check(self, other: "LaurentPoly"):
        if self.param != other.param:
            raise DimensionMismatchError("Laurent polynomials in different parameters")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, ZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(out, self.param)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, self.param)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, ZERO) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out, self.param)

    def scale(self, factor) -> "LaurentPoly":
        factor = Fraction(factor)
        return LaurentPoly({e: c * factor for e, c in self.coeffs.items()}, self.param)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``param**k``."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()}, self.param)

    def valuation(self) -> int:
        """Minimal exponent; raises on zero."""
        if not self.coeffs:
            raise ValueError("valuation of the zero Laurent polynomial")
        return min(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero Laurent polynomial")
        return max(self.coeffs)

    def coefficient(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, ZERO)

    def at_zero(self) -> Fraction:
        """Value at ``param = 0``; requires valuation >= 0."""
        if self.coeffs and min(self.coeffs) < 0:
            raise ValueError("pole at 0")
        return self.coeffs.get(0, ZERO)

    def evaluate(self, value) -> Fraction:
        value = Fraction(value)
        if value == 0:
            raise ZeroScaleError("Laurent polynomials are evaluated away from 0")
        return sum((c * value**e for e, c in self.coeffs.items()), ZERO)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises if ``other`` does not divide exactly."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return self
        # shift both to ordinary polynomials and long-divide
        sv, ov = self.valuation(), other.valuation()
        num = {e - sv: c for e, c in self.coeffs.items()}
        den = {e - ov: c for e, c in other.coeffs.items()}
        dd = max(den)
        dc = den[dd]
        quot: dict[int, Fraction] = {}
        while num:
            nd = max(num)
            if nd < dd:
                raise ValueError("inexact Laurent division")
            q = num[nd] / dc
            quot[nd - dd] = q
            for e, c in den.items():
                k = e + nd - dd
                s = num.get(k, ZERO) - q * c
                if s == 0:
                    num.pop(k, None)
                else:
                    num[k] = s
        return LaurentPoly(quot, self.param).shift(sv - ov)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.param == other.param and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.param, frozenset(self.coeffs.items())))

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for i, e in enumerate(sorted(self.coeffs)):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                var = self.param if e == 1 else f"{self.param}^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()!r})"
