"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is stored as ``{exponent tuple: Fraction}`` over a fixed,
ordered tuple of variable names (the *context*).  No zero coefficient is
ever stored, so structural equality is mathematical equality.  The term
order used everywhere is graded reverse lexicographic.

The canonical text form writes terms in descending grevlex order, e.g.
``a1^2*a3 - 2*a1*a2^2``, with rational coefficients as ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError

Exponents = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def grevlex_key(exps: Exponents):
    """Sort key: ``key(a) > key(b)`` iff ``a`` is grevlex-larger than ``b``."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, varnames: Sequence[str], terms: Mapping[Exponents, Fraction] | None = None, _trusted: bool = False):
        self.vars = tuple(varnames)
        if _trusted:
            self.terms = dict(terms or {})
            return
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.vars):
                raise DimensionMismatchError("exponent tuple does not match variable context")
            clean[exps] = clean.get(exps, ZERO) + coeff
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, varnames: Sequence[str]) -> "MultiPoly":
        return cls(varnames, {}, _trusted=True)

    @classmethod
    def const(cls, varnames: Sequence[str], value) -> "MultiPoly":
        value = Fraction(value)
        if value == 0:
            return cls.zero(varnames)
        return cls(varnames, {tuple([0] * len(varnames)): value}, _trusted=True)

    @classmethod
    def variable(cls, varnames: Sequence[str], name: str) -> "MultiPoly":
        idx = list(varnames).index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(varnames)))
        return cls(varnames, {exps: ONE}, _trusted=True)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise DimensionMismatchError("polynomials live in different variable contexts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, ZERO) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(self.vars, terms, _trusted=True)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, ZERO) - c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(self.vars, terms, _trusted=True)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def scale(self, factor) -> "MultiPoly":
        factor = Fraction(factor)
        if factor == 0:
            return MultiPoly.zero(self.vars)
        return MultiPoly(self.vars, {e: c * factor for e, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.vars, out, _trusted=True)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_mul(self, exps: Exponents, coeff: Fraction) -> "MultiPoly":
        """Multiply by the single term ``coeff * x^exps``."""
        if coeff == 0:
            return MultiPoly.zero(self.vars)
        return MultiPoly(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()},
            _trusted=True,
        )

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> tuple[Exponents, Fraction]:
        """Leading (exponents, coefficient) in grevlex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        _, lc = self.leading()
        return self.scale(ONE / lc)

    def sign_normalized(self) -> "MultiPoly":
        """Scaled by -1 if the leading coefficient is negative."""
        if not self.terms:
            return self
        _, lc = self.leading()
        return self if lc > 0 else -self

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        values = [Fraction(assignment[v]) for v in self.vars]
        total = ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for val, e in zip(values, exps):
                if e:
                    term *= val**e
            total += term
        return total

    def substitute(self, images: Mapping[str, "MultiPoly"], target_vars: Sequence[str]) -> "MultiPoly":
        """Map each variable to a polynomial in a new context."""
        polys = [images.get(v, None) for v in self.vars]
        for v, p in zip(self.vars, polys):
            if p is None:
                raise KeyError(f"no image given for variable {v!r}")
            if tuple(p.vars) != tuple(target_vars):
                raise DimensionMismatchError("substitution image in wrong context")
        out = MultiPoly.zero(target_vars)
        for exps, coeff in self.terms.items():
            term = MultiPoly.const(target_vars, coeff)
            for p, e in zip(polys, exps):
                if e:
                    term = term * p**e
            out = out + term
        return out

    def extended(self, varnames: Sequence[str]) -> "MultiPoly":
        """The same polynomial in a context with extra trailing variables."""
        varnames = tuple(varnames)
        if varnames[: len(self.vars)] != self.vars:
            raise DimensionMismatchError("extended context must start with the current one")
        pad = (0,) * (len(varnames) - len(self.vars))
        return MultiPoly(varnames, {e + pad: c for e, c in self.terms.items()}, _trusted=True)

    # -- equality / text ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def text(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for i, (exps, coeff) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"MultiPoly({self.text()!r})"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^*+/-]))")


def parse_poly(text: str, varnames: Sequence[str]) -> MultiPoly:
    """Parse the canonical text form (sums of ``coef*var^e*...`` terms)."""
    varnames = tuple(varnames)
    index = {v: i for i, v in enumerate(varnames)}
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize polynomial text at {text[pos:]!r}")
            break
        pos = m.end()
        for kind in ("num", "name", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind)))
                break

    n = len(tokens)

    def parse_factor(i: int, coeff: Fraction, exps: list[int]) -> tuple[Fraction, int]:
        kind, val = tokens[i]
        if kind == "num":
            num = int(val)
            i += 1
            if i < n and tokens[i] == ("op", "/"):
                if i + 1 >= n or tokens[i + 1][0] != "num":
                    raise ValueError("expected denominator after '/'")
                coeff *= Fraction(num, int(tokens[i + 1][1]))
                i += 2
            else:
                coeff *= num
            return coeff, i
        if kind == "name":
            if val not in index:
                raise ValueError(f"unknown variable {val!r}")
            e = 1
            i += 1
            if i < n and tokens[i] == ("op", "^"):
                if i + 1 >= n or tokens[i + 1][0] != "num":
                    raise ValueError("expected exponent after '^'")
                e = int(tokens[i + 1][1])
                i += 2
            exps[index[val]] += e
            return coeff, i
        raise ValueError(f"unexpected token {val!r}")

    result = MultiPoly.zero(varnames)
    i = 0
    while i < n:
        sign = 1
        saw_sign = False
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
            saw_sign = True
        if i >= n:
            if saw_sign:
                raise ValueError("dangling sign in polynomial text")
            break
        coeff = Fraction(sign)
        exps = [0] * len(varnames)
        coeff, i = parse_factor(i, coeff, exps)
        while i < n and tokens[i] == ("op", "*"):
            if i + 1 >= n:
                raise ValueError("dangling '*' in polynomial text")
            coeff, i = parse_factor(i + 1, coeff, exps)
        if i < n and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise ValueError(f"unexpected token {tokens[i][1]!r} after term")
        result = result + MultiPoly(varnames, {tuple(exps): coeff})
    return result


def det_poly(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact symbolic determinant by cofactor expansion (desk scale)."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise DimensionMismatchError("determinant of a non-square matrix")
    if n == 0:
        raise DimensionMismatchError("determinant of an empty matrix")
    ctx = matrix[0][0].vars
    for row in matrix:
        for entry in row:
            if entry.vars != ctx:
                raise DimensionMismatchError("matrix entries in different variable contexts")

    def expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> MultiPoly:
        if len(rows) == 1:
            return matrix[rows[0]][cols[0]]
        total = MultiPoly.zero(ctx)
        r = rows[0]
        rest = rows[1:]
        for k, c in enumerate(cols):
            entry = matrix[r][c]
            if entry.is_zero():
                continue
            minor = expand(rest, cols[:k] + cols[k + 1 :])
            piece = entry * minor
            total = total + piece if k % 2 == 0 else total - piece
        return total

    return expand(tuple(range(n)), tuple(range(n)))
