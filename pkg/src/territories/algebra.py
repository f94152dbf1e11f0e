"""The ambient truncated algebras and their gradings.

The ambient algebra attached to a vector of branch conductances
``c = (c_1, ..., c_m)`` is spanned by a constant ``1`` together with the
branch monomials ``t_i^j`` for ``1 <= j <= c_i - 1``; products truncate
(``t_i^{c_i} = 0``) and distinct branches annihilate each other
(``t_i t_j = 0``).  Elements carry exact rational coefficients; a Laurent
variant with one-parameter coefficients supports the symbolic families
consumed by the limit machinery.

Canonical monomial order: constant first, then branches ascending and
exponents ascending.  All values are immutable; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .errors import AmbientMismatchError, DimensionMismatchError, ZeroScaleError
from .laurent import LaurentPoly

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Monomial:
    """A branch monomial ``t_branch^exponent`` (1-based branch index)."""

    branch: int
    exponent: int

    def name(self) -> str:
        return f"t{self.branch}" if self.exponent == 1 else f"t{self.branch}^{self.exponent}"

    def slug(self) -> str:
        """Name safe for use inside composite variable names (no '^')."""
        return f"t{self.branch}" if self.exponent == 1 else f"t{self.branch}_{self.exponent}"

    def __repr__(self) -> str:
        return self.name()


class _Const:
    """The distinguished constant basis token."""

    __slots__ = ()

    def name(self) -> str:
        return "1"

    def __repr__(self) -> str:
        return "1"


CONST = _Const()

Key = Union[Monomial, _Const]


def parse_key(name: str) -> Key:
    if name == "1":
        return CONST
    if not name.startswith("t"):
        raise ValueError(f"bad monomial name {name!r}")
    body = name[1:]
    if "^" in body:
        b, e = body.split("^", 1)
    else:
        b, e = body, "1"
    return Monomial(int(b), int(e))


def frac_str(x: Fraction) -> str:
    return str(x)


def parse_frac(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class ConductanceVector:
    """The tuple of branch conductances fixing the ambient algebra."""

    c: tuple[int, ...]

    def __init__(self, c: Iterable[int]):
        object.__setattr__(self, "c", tuple(int(x) for x in c))
        if not self.c:
            raise ValueError("at least one branch is required")
        if any(x < 1 for x in self.c):
            raise ValueError("conductances must be >= 1")

    @property
    def m(self) -> int:
        return len(self.c)

    @property
    def total(self) -> int:
        return sum(self.c)

    @property
    def ambient_rank(self) -> int:
        return self.total - self.m + 1

    @property
    def maximal_rank(self) -> int:
        return self.total - self.m

    def monomials(self) -> tuple[Monomial, ...]:
        return _maximal_monomials(self.c)

    def column(self, mono: Monomial) -> int:
        return _column_index(self.c)[mono]

    def restrict(self, branches: Sequence[int]) -> "ConductanceVector":
        """Sub-vector on a sorted subset of 1-based branch indices."""
        branches = sorted(set(branches))
        if not branches or branches[0] < 1 or branches[-1] > self.m:
            raise ValueError(f"branch subset {branches} out of range")
        return ConductanceVector(self.c[i - 1] for i in branches)

    def dominates(self, other: "ConductanceVector") -> bool:
        return self.m == other.m and all(a >= b for a, b in zip(self.c, other.c))

    def __repr__(self) -> str:
        return f"ConductanceVector({list(self.c)})"


@lru_cache(maxsize=None)
def _maximal_monomials(c: tuple[int, ...]) -> tuple[Monomial, ...]:
    return tuple(Monomial(i + 1, j) for i, ci in enumerate(c) for j in range(1, ci))


@lru_cache(maxsize=None)
def _column_index(c: tuple[int, ...]) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(_maximal_monomials(c))}


def mono_product(x: Key, y: Key, ambient: ConductanceVector) -> Key | None:
    """Product of two basis tokens; None encodes zero."""
    if x is CONST:
        return y
    if y is CONST:
        return x
    if x.branch != y.branch:
        return None
    e = x.exponent + y.exponent
    if e >= ambient.c[x.branch - 1]:
        return None
    return Monomial(x.branch, e)


class AlgebraElement:
    """Exact-coefficient element of the ambient algebra."""

    __slots__ = ("ambient", "coeffs")

    def __init__(self, ambient: ConductanceVector, coeffs: Mapping[Key, Fraction] | None = None):
        self.ambient = ambient
        clean: dict[Key, Fraction] = {}
        for key, val in (coeffs or {}).items():
            val = Fraction(val)
            if val == 0:
                continue
            if key is not CONST:
                if not isinstance(key, Monomial):
                    raise TypeError(f"bad basis key {key!r}")
                if not (1 <= key.branch <= ambient.m) or not (1 <= key.exponent < ambient.c[key.branch - 1]):
                    raise ValueError(f"monomial {key} out of bounds for {ambient}")
            clean[key] = clean.get(key, ZERO) + val
        self.coeffs = {k: v for k, v in clean.items() if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def one(cls, ambient: ConductanceVector) -> "AlgebraElement":
        return cls(ambient, {CONST: ONE})

    @classmethod
    def monomial(cls, ambient: ConductanceVector, branch: int, exponent: int, coeff=1) -> "AlgebraElement":
        return cls(ambient, {Monomial(branch, exponent): Fraction(coeff)})

    @classmethod
    def from_vector(cls, ambient: ConductanceVector, vector: Sequence[Fraction], const=0) -> "AlgebraElement":
        monos = ambient.monomials()
        if len(vector) != len(monos):
            raise DimensionMismatchError("vector length does not match the maximal-ideal rank")
        coeffs: dict[Key, Fraction] = {m: Fraction(v) for m, v in zip(monos, vector)}
        coeffs[CONST] = Fraction(const)
        return cls(ambient, coeffs)

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"elements of {self.ambient} and {other.ambient} cannot be combined"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, ZERO) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return AlgebraElement(self.ambient, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "AlgebraElement":
        factor = Fraction(factor)
        return AlgebraElement(self.ambient, {k: v * factor for k, v in self.coeffs.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out: dict[Key, Fraction] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = mono_product(k1, k2, self.ambient)
                if k is None:
                    continue
                s = out.get(k, ZERO) + v1 * v2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return AlgebraElement(self.ambient, out)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative power")
        result = AlgebraElement.one(self.ambient)
        for _ in range(n):
            result = result * self
        return result

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_coefficient(self) -> Fraction:
        return self.coeffs.get(CONST, ZERO)

    def maximal_vector(self) -> tuple[Fraction, ...]:
        """Coordinates over the maximal-ideal monomial basis (constant ignored)."""
        return tuple(self.coeffs.get(m, ZERO) for m in self.ambient.monomials())

    def support(self) -> tuple[Key, ...]:
        order = {m: i for i, m in enumerate(self.ambient.monomials())}
        keys = sorted((k for k in self.coeffs if k is not CONST), key=lambda k: order[k])
        return ((CONST,) if CONST in self.coeffs else ()) + tuple(keys)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.ambient == other.ambient
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.coeffs.items())))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "c": list(self.ambient.c),
            "coeffs": {k.name(): frac_str(v) for k, v in sorted(self.coeffs.items(), key=lambda kv: kv[0].name())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "AlgebraElement":
        ambient = ConductanceVector(data["c"])
        coeffs = {parse_key(name): parse_frac(val) for name, val in data.get("coeffs", {}).items()}
        return cls(ambient, coeffs)

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for i, key in enumerate(self.support()):
            v = self.coeffs[key]
            body = key.name() if key is not CONST else "1"
            if body != "1" and abs(v) == 1:
                piece = body
            elif body != "1":
                piece = f"{abs(v)}*{body}"
            else:
                piece = str(abs(v))
            if i == 0:
                chunks.append(piece if v > 0 else f"-{piece}")
            else:
                chunks.append(f"+ {piece}" if v > 0 else f"- {piece}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.text()!r} in {list(self.ambient.c)})"


@dataclass(frozen=True)
class Grading:
    """Integer weights per branch; ``deg t_i^j = j * w_i`` and ``deg 1 = 0``."""

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        object.__setattr__(self, "weights", tuple(int(w) for w in weights))

    @classmethod
    def standard(cls, m: int) -> "Grading":
        return cls((1,) * m)

    @classmethod
    def projection(cls, m: int, branches: Sequence[int]) -> "Grading":
        """Sum of coordinate projections over a set of 1-based branches."""
        chosen = set(branches)
        return cls(tuple(1 if i + 1 in chosen else 0 for i in range(m)))

    def degree(self, key: Key) -> int:
        if key is CONST:
            return 0
        return key.exponent * self.weights[key.branch - 1]

    def valuation(self, element: AlgebraElement) -> int | None:
        """Minimal degree over the support; None for the zero element."""
        if element.is_zero():
            return None
        return min(self.degree(k) for k in element.coeffs)

    def homogeneous_part(self, element: AlgebraElement, d: int) -> AlgebraElement:
        return AlgebraElement(
            element.ambient, {k: v for k, v in element.coeffs.items() if self.degree(k) == d}
        )


def filtration_basis(ambient: ConductanceVector, grading: Grading, d: int) -> list[Key]:
    """Basis tokens of total degree >= d, canonical order (constant first)."""
    if len(grading.weights) != ambient.m:
        raise DimensionMismatchError("grading weight count does not match branch count")
    out: list[Key] = [CONST] if 0 >= d else []
    out.extend(m for m in ambient.monomials() if grading.degree(m) >= d)
    return out


def apply_torus(scales: Sequence[Fraction], element: AlgebraElement) -> AlgebraElement:
    """Scale branch coordinates: the coefficient of ``t_i^j`` gains ``scales[i]^j``."""
    ambient = element.ambient
    scales = [Fraction(s) for s in scales]
    if len(scales) != ambient.m:
        raise DimensionMismatchError("one scale per branch is required")
    if any(s == 0 for s in scales):
        raise ZeroScaleError("torus scales must be nonzero")
    out: dict[Key, Fraction] = {}
    for k, v in element.coeffs.items():
        if k is CONST:
            out[k] = v
        else:
            out[k] = v * scales[k.branch - 1] ** k.exponent
    return AlgebraElement(ambient, out)


def substitute_branches(element: AlgebraElement, images: Mapping[int, AlgebraElement]) -> AlgebraElement:
    """Apply the algebra endomorphism ``t_i -> images[i]``.

    Each image must live in the same ambient and be supported purely on its
    own branch (no constant part), so relations are preserved automatically.
    """
    ambient = element.ambient
    for i, img in images.items():
        if img.ambient != ambient:
            raise AmbientMismatchError("substitution image in a different ambient")
        if img.constant_coefficient() != 0:
            raise ValueError("substitution image may not have a constant part")
        if any(k.branch != i for k in img.coeffs):
            raise ValueError(f"image of t{i} must be supported on branch {i}")
    out = AlgebraElement(ambient, {})
    powers: dict[tuple[int, int], AlgebraElement] = {}

    def power(i: int, j: int) -> AlgebraElement:
        if (i, j) not in powers:
            powers[(i, j)] = images[i] ** j if j > 1 else images[i]
        return powers[(i, j)]

    for k, v in element.coeffs.items():
        if k is CONST:
            out = out + AlgebraElement(ambient, {CONST: v})
        else:
            if k.branch not in images:
                raise ValueError(f"no image given for branch {k.branch}")
            out = out + power(k.branch, k.exponent).scale(v)
    return out


class LaurentElement:
    """Element of the ambient algebra with Laurent-polynomial coefficients."""

    __slots__ = ("ambient", "coeffs", "param")

    def __init__(self, ambient: ConductanceVector, coeffs: Mapping[Key, LaurentPoly] | None = None, param: str = "a"):
        self.ambient = ambient
        self.param = param
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if not v.is_zero()}

    @classmethod
    def from_element(cls, element: AlgebraElement, param: str = "a") -> "LaurentElement":
        return cls(
            element.ambient,
            {k: LaurentPoly.const(v, param) for k, v in element.coeffs.items()},
            param,
        )

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, LaurentPoly({}, self.param)) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentElement(self.ambient, out, self.param)

    def __mul__(self, other: "LaurentElement") -> "LaurentElement":
        if self.ambient != other.ambient:
            raise AmbientMismatchError("Laurent elements in different ambients")
        out: dict[Key, LaurentPoly] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = mono_product(k1, k2, self.ambient)
                if k is None:
                    continue
                s = out.get(k, LaurentPoly({}, self.param)) + v1 * v2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return LaurentElement(self.ambient, out, self.param)

    def scale(self, factor: LaurentPoly) -> "LaurentElement":
        return LaurentElement(self.ambient, {k: v * factor for k, v in self.coeffs.items()}, self.param)

    def maximal_row(self) -> tuple[LaurentPoly, ...]:
        zero = LaurentPoly({}, self.param)
        return tuple(self.coeffs.get(m, zero) for m in self.ambient.monomials())

    def specialize(self, value) -> AlgebraElement:
        return AlgebraElement(self.ambient, {k: v.evaluate(value) for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentElement)
            and self.ambient == other.ambient
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{k.name()}: {v.text()}" for k, v in self.coeffs.items())
        return f"LaurentElement({{{inner}}} in {list(self.ambient.c)})"


def apply_phi_a_symbolic(element: AlgebraElement, param: str = "a") -> LaurentElement:
    """Substitute ``t_i -> t_i + a^{-1} t_i^2`` with truncation.

    The image of ``t_i^j`` is the binomial expansion
    ``sum_l C(j, l) a^{-l} t_i^{j+l}`` truncated at ``t_i^{c_i}``.
    """
    ambient = element.ambient
    out: dict[Key, LaurentPoly] = {}

    def add(key: Key, lp: LaurentPoly):
        s = out.get(key, LaurentPoly({}, param)) + lp
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    for k, v in element.coeffs.items():
        if k is CONST:
            add(CONST, LaurentPoly.const(v, param))
            continue
        ci = ambient.c[k.branch - 1]
        for l in range(0, min(k.exponent, ci - 1 - k.exponent) + 1):
            add(
                Monomial(k.branch, k.exponent + l),
                LaurentPoly.term(-l, v * comb(k.exponent, l), param),
            )
    return LaurentElement(ambient, out, param)
