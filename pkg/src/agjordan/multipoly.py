"""Multivariate polynomials over the rationals and the differentiation action.

Polynomials live in K[X_1,...,X_n] with K the rationals.  A second copy of
the same ring acts on it by constant-coefficient differential operators:
the operator monomial x^a sends X^b to (prod_i b_i!/(b_i-a_i)!) X^(b-a),
and to zero unless b >= a componentwise.  True differentiation (with the
factorial factors) is used everywhere, not contraction.

Monomials are exponent tuples.  The monomial order is descending
lexicographic with the first variable largest, fixed once here and shared
by every module that enumerates bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DomainError

Exponents = tuple[int, ...]


def monomial_degree(exps: Exponents) -> int:
    return sum(exps)


def monomials_of_degree(nvars: int, degree: int) -> list[Exponents]:
    """All exponent tuples of the given total degree, descending lex.

    Descending lex with the first variable largest; e.g. for 3 variables and
    degree 2: (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2).
    """
    if nvars <= 0:
        raise DomainError("need at least one variable")
    if degree < 0:
        raise DomainError("degree must be non-negative")
    if nvars == 1:
        return [(degree,)]
    out: list[Exponents] = []
    for e in range(degree, -1, -1):
        out.extend((e, *rest) for rest in monomials_of_degree(nvars - 1, degree - e))
    return out


def _diff_factor(operator: Exponents, target: Exponents) -> int:
    """prod_i t_i!/(t_i-o_i)!, or 0 when some o_i exceeds t_i."""
    factor = 1
    for o, t in zip(operator, target):
        if o > t:
            return 0
        factor *= math.perm(t, o)
    return factor


class Polynomial:
    """Immutable multivariate polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  The zero
    polynomial has an empty term map and no degree.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Fraction | int] | None = None):
        if nvars <= 0:
            raise DomainError("need at least one variable")
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DomainError(f"monomial {exps} has {len(exps)} exponents, expected {nvars}")
            if any(e < 0 for e in exps):
                raise DomainError(f"negative exponent in monomial {exps}")
            c = Fraction(coeff)
            if c != 0:
                clean[exps] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise DomainError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Fraction | int = 1) -> "Polynomial":
        exps = tuple(exps)
        return cls(len(exps), {exps: Fraction(coeff)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(monomial_degree(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {monomial_degree(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_value(self) -> Fraction:
        """The value of a degree-<=0 polynomial."""
        if self.is_zero():
            return Fraction(0)
        if self.degree() != 0:
            raise DomainError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def iter_terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Terms in descending lex order of the monomial."""
        for exps in sorted(self.terms, reverse=True):
            yield exps, self.terms[exps]

    # -- arithmetic --------------------------------------------------------

    def _require_same_ring(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DomainError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    def __rmul__(self, other: "Fraction | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r})"


def diff_apply(operator: Polynomial, target: Polynomial) -> Polynomial:
    """Apply ``operator`` to ``target`` as a differential operator.

    Each operator monomial x^a acts as the partial derivative
    d^|a| / dX_1^{a_1} ... dX_n^{a_n}; the result carries the factorial
    factors of true differentiation.  For homogeneous inputs of degrees k
    and d the result is homogeneous of degree d-k (or zero).
    """
    if operator.nvars != target.nvars:
        raise DomainError(f"variable count mismatch: {operator.nvars} vs {target.nvars}")
    terms: dict[Exponents, Fraction] = {}
    for op_exps, op_coeff in operator.terms.items():
        for tg_exps, tg_coeff in target.terms.items():
            factor = _diff_factor(op_exps, tg_exps)
            if factor == 0:
                continue
            key = tuple(t - o for o, t in zip(op_exps, tg_exps))
            terms[key] = terms.get(key, Fraction(0)) + op_coeff * tg_coeff * factor
    return Polynomial(target.nvars, terms)


@dataclass(frozen=True)
class LinearForm:
    """A degree-one form, stored as one coefficient per variable."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Fraction | int]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise DomainError("need at least one variable")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def unit(cls, nvars: int, index: int) -> "LinearForm":
        coeffs = [0] * nvars
        coeffs[index] = 1
        return cls(coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def to_polynomial(self) -> Polynomial:
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c != 0:
                exps = [0] * self.nvars
                exps[i] = 1
                terms[tuple(exps)] = c
        return Polynomial(self.nvars, terms)


def render_monomial(exps: Exponents, names: tuple[str, ...]) -> str:
    pieces = []
    for name, e in zip(names, exps):
        if e == 1:
            pieces.append(name)
        elif e > 1:
            pieces.append(f"{name}^{e}")
    return "*".join(pieces)


def render_polynomial(p: Polynomial, names: tuple[str, ...] | None = None) -> str:
    """Canonical text form: descending lex terms, explicit ``^`` and ``*``.

    ``parse_poly(render_polynomial(p), vars) == p`` for every polynomial.
    """
    if names is None:
        names = tuple(f"x{i+1}" for i in range(p.nvars))
    if len(names) != p.nvars:
        raise DomainError("variable name count does not match the polynomial")
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for exps, coeff in p.iter_terms():
        mono = render_monomial(exps, names)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
