"""Laurent polynomials in formal unimodular phase variables.

Each variable x_v stands for exp(i*angle_v), so conjugation sends x_v to
x_v^-1. With this model an identity "for all phases" is a check that the
canonical term map is empty.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .cyclo import CyclotomicNumber, RootOfUnity, to_complex_float

__all__ = [
    "PhaseVariable",
    "PhasePolynomial",
    "MissingAssignmentError",
    "variable",
    "constant",
]


class MissingAssignmentError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"no value assigned to phase variable {self.name!r}"


@dataclass(frozen=True, order=True)
class PhaseVariable:
    name: str

    def __str__(self):
        return self.name


Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction, CyclotomicNumber]


def _name(v) -> str:
    return v.name if isinstance(v, PhaseVariable) else str(v)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in exps.items() if e))


class PhasePolynomial:
    """Sparse map from monomials to nonzero cyclotomic coefficients.

    Monomials are tuples of ``(variable name, exponent)`` sorted by name
    with zero exponents dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, CyclotomicNumber] = {}
        for mono, c in (terms or {}).items():
            key = tuple(sorted((_name(n), int(e)) for n, e in mono if e))
            acc = clean.get(key)
            c = CyclotomicNumber.coerce(c)
            clean[key] = c if acc is None else acc + c
        self._terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def _from_clean(cls, terms: dict) -> "PhasePolynomial":
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if not v.is_zero()}
        return obj

    @classmethod
    def coerce(cls, value) -> "PhasePolynomial":
        if isinstance(value, PhasePolynomial):
            return value
        return constant(value)

    @property
    def terms(self) -> dict[Monomial, CyclotomicNumber]:
        return dict(self._terms)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(n for mono in self._terms for n, _ in mono)

    def sorted_terms(self) -> list[tuple[Monomial, CyclotomicNumber]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> CyclotomicNumber:
        if not self.is_constant():
            raise ValueError("polynomial has phase variables")
        return self._terms.get((), CyclotomicNumber.rational(0))

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        try:
            other = PhasePolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            acc = out.get(mono)
            out[mono] = c if acc is None else acc + c
        return PhasePolynomial._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return PhasePolynomial._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = PhasePolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = CyclotomicNumber.coerce(other)
            return PhasePolynomial._from_clean({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, PhasePolynomial):
            return NotImplemented
        out: dict[Monomial, CyclotomicNumber] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                prod = ca * cb
                acc = out.get(mono)
                out[mono] = prod if acc is None else acc + prod
        return PhasePolynomial._from_clean(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, CyclotomicNumber)):
            return NotImplemented
        return PhasePolynomial._from_clean({m: c / other for m, c in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "PhasePolynomial":
        return PhasePolynomial._from_clean(
            {tuple((n, -e) for n, e in mono): c.conjugate() for mono, c in self._terms.items()}
        )

    def __eq__(self, other):
        try:
            other = PhasePolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # -- evaluation -----------------------------------------------------

    def evaluate(self, assignment: Mapping) -> complex:
        """Float value with x_v = exp(i * assignment[v])."""
        angles = {_name(k): float(v) for k, v in assignment.items()}
        total = 0j
        for mono, c in self._terms.items():
            term = to_complex_float(c)
            for name, e in mono:
                if name not in angles:
                    raise MissingAssignmentError(name)
                term *= cmath.exp(1j * e * angles[name])
            total += term
        return total

    def evaluate_exact(self, assignment: Mapping) -> CyclotomicNumber:
        """Exact value with each x_v replaced by a root of unity."""
        roots = {}
        for k, v in assignment.items():
            if isinstance(v, tuple):
                v = RootOfUnity(*v)
            roots[_name(k)] = v
        total = CyclotomicNumber.rational(0)
        for mono, c in self._terms.items():
            term = c
            for name, e in mono:
                if name not in roots:
                    raise MissingAssignmentError(name)
                r = roots[name]
                term = term * RootOfUnity(r.order, r.exponent * e).value()
            total = total + term
        return total

    # -- output ---------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"exponents": {n: e for n, e in mono}, "coeff": c.to_json()}
            for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "PhasePolynomial":
        return cls(
            {
                tuple(sorted(t["exponents"].items())): CyclotomicNumber.from_json(t["coeff"])
                for t in data
            }
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            mono_s = "*".join(f"x_{n}" + (f"^{e}" if e != 1 else "") for n, e in mono)
            coeff_s = str(c)
            if not mono_s:
                parts.append(coeff_s)
            elif coeff_s == "1":
                parts.append(mono_s)
            else:
                parts.append(f"({coeff_s})*{mono_s}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PhasePolynomial({self})"


def variable(v) -> PhasePolynomial:
    """The monomial x_v with coefficient 1."""
    return PhasePolynomial._from_clean({((_name(v), 1),): CyclotomicNumber.rational(1)})


def constant(c) -> PhasePolynomial:
    return PhasePolynomial._from_clean({(): CyclotomicNumber.coerce(c)})
