"""Qudit states, gate matrices and the concrete families used by the checks.

Exact objects hold :class:`PhasePolynomial` amplitudes plus an integer ``d``
standing for an overall factor 1/sqrt(d). The square root is only built
(via :func:`sqrt_positive_integer`) when two objects with different ``d``
are combined, which keeps conductors small for most computations.

The general trigonometric qutrit has no exact representation and lives in
the float backend only (numpy arrays).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .cyclo import CyclotomicNumber, inv_sqrt_positive_integer, root_of_unity
from .phasepoly import PhasePolynomial, constant, variable

__all__ = [
    "DimensionError",
    "ArityError",
    "StateVector",
    "GateMatrix",
    "EnsembleFamily",
    "GeneralQutritParams",
    "basis_state",
    "superpose",
    "inner_product",
    "norm_squared",
    "state_residual",
    "apply",
    "is_unitary",
    "gram",
    "identity_matrix",
    "diagonal_matrix",
    "dft_matrix",
    "equatorial_family",
    "computational_basis",
    "counterexample_families",
    "general_qutrit",
    "state_to_numpy",
    "matrix_to_numpy",
]


class DimensionError(ValueError):
    pass


class ArityError(ValueError):
    pass


def _split_square(d: int) -> tuple[int, int]:
    """d = outside**2 * inside with inside squarefree."""
    outside, inside = 1, d
    p = 2
    while p * p <= inside:
        while inside % (p * p) == 0:
            inside //= p * p
            outside *= p
        p += 1
    return outside, inside


def _normalizer(d: int) -> CyclotomicNumber:
    outside, inside = _split_square(d)
    return inv_sqrt_positive_integer(inside) / outside


def _poly(x) -> PhasePolynomial:
    return PhasePolynomial.coerce(x)


@dataclass(frozen=True)
class StateVector:
    """(1/sqrt(norm_d)) * sum_k amplitudes[k] |k>."""

    amplitudes: tuple[PhasePolynomial, ...]
    norm_d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", tuple(_poly(a) for a in self.amplitudes))
        if self.norm_d < 1:
            raise ValueError(f"normalization d must be positive, got {self.norm_d}")
        if not self.amplitudes:
            raise DimensionError("a state needs at least one amplitude")

    @property
    def dimension(self) -> int:
        return len(self.amplitudes)

    def materialized(self) -> tuple[PhasePolynomial, ...]:
        """Amplitudes with the 1/sqrt(d) factor multiplied in exactly."""
        if self.norm_d == 1:
            return self.amplitudes
        s = _normalizer(self.norm_d)
        return tuple(a * s for a in self.amplitudes)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset().union(*(a.variables for a in self.amplitudes))

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "normalization_d": self.norm_d,
            "amplitudes": [a.to_json() for a in self.amplitudes],
        }


@dataclass(frozen=True)
class GateMatrix:
    """(1/sqrt(norm_d)) * entries, entries[row][col]."""

    entries: tuple[tuple[PhasePolynomial, ...], ...]
    norm_d: int = 1

    def __post_init__(self):
        rows = tuple(tuple(_poly(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("gate matrix must be square and non-empty")
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def adjoint(self) -> "GateMatrix":
        n = self.dimension
        return GateMatrix(
            tuple(tuple(self.entries[c][r].conjugate() for c in range(n)) for r in range(n)),
            self.norm_d,
        )

    def replace_entry(self, row: int, col: int, value) -> "GateMatrix":
        rows = [list(r) for r in self.entries]
        rows[row][col] = _poly(value)
        return GateMatrix(tuple(map(tuple, rows)), self.norm_d)

    def materialized(self) -> tuple[tuple[PhasePolynomial, ...], ...]:
        if self.norm_d == 1:
            return self.entries
        s = _normalizer(self.norm_d)
        return tuple(tuple(x * s for x in row) for row in self.entries)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "normalization_d": self.norm_d,
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }


@dataclass(frozen=True)
class EnsembleFamily:
    states: tuple[StateVector, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        dims = {s.dimension for s in self.states}
        if len(dims) > 1:
            raise DimensionError(f"family {self.label!r} mixes dimensions {sorted(dims)}")

    def __len__(self):
        return len(self.states)

    def __getitem__(self, i) -> StateVector:
        return self.states[i]

    def __iter__(self):
        return iter(self.states)

    @property
    def dimension(self) -> int:
        return self.states[0].dimension

    def replace(self, index: int, state: StateVector) -> "EnsembleFamily":
        states = list(self.states)
        states[index] = state
        return EnsembleFamily(tuple(states), self.label)


@dataclass(frozen=True)
class GeneralQutritParams:
    gamma1: float
    gamma2: float
    delta: float
    phi: float

    def __post_init__(self):
        for name in ("gamma1", "gamma2"):
            v = getattr(self, name)
            if not 0 <= v <= math.pi / 2:
                raise ValueError(f"{name} must lie in [0, pi/2], got {v}")
        for name in ("delta", "phi"):
            v = getattr(self, name)
            if not 0 <= v <= 2 * math.pi:
                raise ValueError(f"{name} must lie in [0, 2pi], got {v}")


# -- basic constructors ---------------------------------------------------


def basis_state(n: int, k: int) -> StateVector:
    if not 0 <= k < n:
        raise DimensionError(f"basis index {k} out of range for dimension {n}")
    return StateVector(tuple(constant(int(j == k)) for j in range(n)))


def computational_basis(n: int, label: str = "basis") -> EnsembleFamily:
    return EnsembleFamily(tuple(basis_state(n, k) for k in range(n)), label)


def superpose(coefficients: Sequence, states: Sequence[StateVector], norm_d: int = 1) -> StateVector:
    """(1/sqrt(norm_d)) * sum_i coefficients[i] * states[i].

    States sharing one normalization stay symbolic; mixed normalizations
    are materialized.
    """
    if len(coefficients) != len(states):
        raise ArityError("need one coefficient per state")
    n = states[0].dimension
    if any(s.dimension != n for s in states):
        raise DimensionError("superposed states must share a dimension")
    ds = {s.norm_d for s in states}
    if len(ds) == 1:
        inner_d = ds.pop()
        amps = [s.amplitudes for s in states]
    else:
        inner_d = 1
        amps = [s.materialized() for s in states]
    out = []
    for k in range(n):
        acc = constant(0)
        for c, a in zip(coefficients, amps):
            acc = acc + _poly(c) * a[k]
        out.append(acc)
    return StateVector(tuple(out), inner_d * norm_d)


def identity_matrix(n: int) -> GateMatrix:
    return GateMatrix(tuple(tuple(constant(int(r == c)) for c in range(n)) for r in range(n)))


def diagonal_matrix(diagonal: Sequence, norm_d: int = 1) -> GateMatrix:
    n = len(diagonal)
    return GateMatrix(
        tuple(tuple(_poly(diagonal[r]) if r == c else constant(0) for c in range(n)) for r in range(n)),
        norm_d,
    )


# -- linear algebra -------------------------------------------------------


def _scale(d_a: int, d_b: int) -> CyclotomicNumber | Fraction:
    d = d_a * d_b
    outside, inside = _split_square(d)
    if inside == 1:
        return Fraction(1, outside)
    return _normalizer(d)


def inner_product(a: StateVector, b: StateVector) -> PhasePolynomial:
    """<a|b>, conjugate-linear in ``a``, normalizations folded in exactly."""
    if a.dimension != b.dimension:
        raise DimensionError(f"inner product of dimensions {a.dimension} and {b.dimension}")
    acc = constant(0)
    for x, y in zip(a.amplitudes, b.amplitudes):
        acc = acc + x.conjugate() * y
    return acc * _scale(a.norm_d, b.norm_d)


def norm_squared(v: StateVector) -> PhasePolynomial:
    return inner_product(v, v)


def state_residual(a: StateVector, b: StateVector) -> tuple[PhasePolynomial, ...]:
    """Componentwise exact difference a - b."""
    if a.dimension != b.dimension:
        raise DimensionError(f"cannot compare dimensions {a.dimension} and {b.dimension}")
    if a.norm_d == b.norm_d:
        s = _normalizer(a.norm_d) if a.norm_d != 1 else 1
        return tuple((x - y) * s for x, y in zip(a.amplitudes, b.amplitudes))
    return tuple(x - y for x, y in zip(a.materialized(), b.materialized()))


def apply(U: GateMatrix, v: StateVector) -> StateVector:
    if U.dimension != v.dimension:
        raise DimensionError(f"{U.dimension}x{U.dimension} gate applied to dimension {v.dimension}")
    out = []
    for row in U.entries:
        acc = constant(0)
        for u, a in zip(row, v.amplitudes):
            if not u.is_zero():
                acc = acc + u * a
        out.append(acc)
    return StateVector(tuple(out), U.norm_d * v.norm_d)


def is_unitary(U: GateMatrix) -> tuple[bool, tuple[tuple[PhasePolynomial, ...], ...]]:
    """Exact U^dagger U - I; unitary iff every residual entry is zero."""
    n = U.dimension
    E = U.entries
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = constant(0)
            for k in range(n):
                acc = acc + E[k][i].conjugate() * E[k][j]
            row.append(acc / U.norm_d - int(i == j))
        rows.append(tuple(row))
    return all(x.is_zero() for row in rows for x in row), tuple(rows)


def gram(e: EnsembleFamily) -> tuple[tuple[PhasePolynomial, ...], ...]:
    return tuple(tuple(inner_product(a, b) for b in e.states) for a in e.states)


# -- paper families and matrices -----------------------------------------


def dft_matrix(n: int) -> GateMatrix:
    """Entry (k, j) = Gamma^(jk) with Gamma = exp(2 pi i / n), scaled by 1/sqrt(n)."""
    if n < 1:
        raise DimensionError(f"DFT dimension must be >= 1, got {n}")
    return GateMatrix(
        tuple(tuple(constant(root_of_unity(n, j * k)) for j in range(n)) for k in range(n)),
        n,
    )


def equatorial_family(n: int, phase_vars: Sequence = (), label: str = "psi") -> EnsembleFamily:
    """Members psi_r = (1/sqrt(n)) sum_k Gamma^(rk) x_k |k>, x_0 = 1.

    An empty ``phase_vars`` sets every x_k = 1.
    """
    if n < 2:
        raise DimensionError(f"equatorial family needs n >= 2, got {n}")
    phase_vars = list(phase_vars)
    if phase_vars and len(phase_vars) != n - 1:
        raise ArityError(f"dimension {n} needs {n - 1} phase variables, got {len(phase_vars)}")
    phases = [constant(1)] + [variable(v) for v in phase_vars] if phase_vars else [constant(1)] * n
    members = tuple(
        StateVector(tuple(phases[k] * root_of_unity(n, r * k) for k in range(n)), n) for r in range(n)
    )
    return EnsembleFamily(members, label)


def counterexample_families() -> tuple[EnsembleFamily, EnsembleFamily]:
    """The two orthonormal qutrit triples used for the impossibility argument."""
    dk, pk = variable("delta_k"), variable("phi_k")
    v = EnsembleFamily(
        (
            StateVector((constant(1), 2 * dk, pk), 6),
            StateVector((constant(1), dk, -3 * pk), 11),
            StateVector((constant(7), -4 * dk, pk), 66),
        ),
        "v",
    )
    w = equatorial_family(3, ("delta_j", "phi_j"), label="w")
    return v, w


def general_qutrit(p: GeneralQutritParams) -> np.ndarray:
    s1 = math.sin(p.gamma1)
    return np.array(
        [
            math.cos(p.gamma1),
            s1 * math.cos(p.gamma2) * np.exp(1j * p.delta),
            s1 * math.sin(p.gamma2) * np.exp(1j * p.phi),
        ],
        dtype=complex,
    )


# -- float backend --------------------------------------------------------


def state_to_numpy(v: StateVector, assignment: Mapping) -> np.ndarray:
    return np.array([a.evaluate(assignment) for a in v.amplitudes], dtype=complex) / math.sqrt(v.norm_d)


def matrix_to_numpy(U: GateMatrix, assignment: Mapping | None = None) -> np.ndarray:
    assignment = assignment or {}
    return np.array(
        [[x.evaluate(assignment) for x in row] for row in U.entries], dtype=complex
    ) / math.sqrt(U.norm_d)

