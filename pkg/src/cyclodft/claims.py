"""One exact check per claim about DFT-type qudit transforms.

Every check builds its states and gates symbolically, computes residuals
(left side minus right side) as :class:`PhasePolynomial` values, and turns
them into a :class:`ClaimResult`. Residual kinds:

``identity``  must be exactly zero
``witness``   must be exactly nonzero (impossibility / non-orthogonality)
``audit``     reported; a nonzero value downgrades the claim to ``caveat``
``info``      reported only

Each residual also carries a float function that recomputes the same
quantity with numpy from the float-evaluated inputs, used by
:func:`cross_validate`.
"""

from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .cyclo import (
    DEFAULT_FLOAT_TOLERANCE,
    CyclotomicNumber,
    RootOfUnity,
    inv_sqrt_positive_integer,
    root_of_unity,
)
from .phasepoly import PhasePolynomial, constant
from .qstates import (
    DimensionError,
    EnsembleFamily,
    GateMatrix,
    StateVector,
    apply,
    basis_state,
    computational_basis,
    counterexample_families,
    diagonal_matrix,
    dft_matrix,
    equatorial_family,
    gram,
    inner_product,
    is_unitary,
    matrix_to_numpy,
    norm_squared,
    state_residual,
    state_to_numpy,
    superpose,
)

VERIFIED = "verified"
REFUTED = "refuted"
CAVEAT = "caveat"
CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"

IDENTITY = "identity"
WITNESS = "witness"
AUDIT = "audit"
INFO = "info"

WITNESS_FLOAT_THRESHOLD = 1e-6

FloatFn = Callable[[Mapping[str, float]], complex]


@dataclass(frozen=True)
class Residual:
    name: str
    value: PhasePolynomial
    kind: str = IDENTITY
    float_fn: FloatFn | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "value", PhasePolynomial.coerce(self.value))

    @property
    def exact_zero(self) -> bool:
        return self.value.is_zero()

    def to_json(self) -> dict:
        return {"name": self.name, "kind": self.kind, "exact_zero": self.exact_zero, "value": self.value.to_json()}


@dataclass(frozen=True)
class FloatCheck:
    name: str
    mode: str  # "max_abs_over_samples" or "abs_at_zero_phase"
    value: float
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "mode": self.mode, "value": float(f"{self.value:.3e}"), "passed": self.passed}


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    status: str
    residuals: tuple[Residual, ...]
    detail: str
    paper_location: str
    conditions: tuple[tuple[str, bool], ...] = ()
    variables: tuple[str, ...] = ()
    float_checks: tuple[FloatCheck, ...] = ()
    float_seed: str | None = None
    timing_ms: float | None = None

    def residual(self, name: str) -> Residual:
        for r in self.residuals:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "status": self.status,
            "paper_location": self.paper_location,
            "residuals": [r.to_json() for r in self.residuals],
            "conditions": [{"name": n, "passed": ok} for n, ok in self.conditions],
            "detail": self.detail,
            "timing_ms": round(self.timing_ms, 3) if include_timing and self.timing_ms is not None else None,
        }
        if self.float_checks:
            out["float_cross_check"] = {
                "seed": self.float_seed,
                "checks": [c.to_json() for c in self.float_checks],
            }
        return out


@dataclass(frozen=True)
class CoefficientPair:
    alpha: CyclotomicNumber
    beta: CyclotomicNumber
    alpha_root: RootOfUnity | None = None
    beta_root: RootOfUnity | None = None

    def label(self) -> str:
        if self.alpha_root is None or self.beta_root is None:
            return f"({self.alpha}, {self.beta})"
        a, b = self.alpha_root, self.beta_root
        return f"(z{a.order}^{a.exponent}, z{b.order}^{b.exponent})"

    def to_json(self) -> dict:
        out = {"alpha": self.alpha.to_json(), "beta": self.beta.to_json()}
        if self.alpha_root is not None and self.beta_root is not None:
            out["alpha_root"] = [self.alpha_root.exponent, self.alpha_root.order]
            out["beta_root"] = [self.beta_root.exponent, self.beta_root.order]
        return out


def exact_status(residuals: Sequence[Residual], conditions: Sequence[tuple[str, bool]] = ()) -> str:
    mandatory = all(ok for _, ok in conditions)
    for r in residuals:
        if r.kind == IDENTITY and not r.exact_zero:
            mandatory = False
        elif r.kind == WITNESS and r.exact_zero:
            mandatory = False
    if not mandatory:
        return REFUTED
    if any(r.kind == AUDIT and not r.exact_zero for r in residuals):
        return CAVEAT
    return VERIFIED


def _result(claim_id, residuals, detail, location, conditions=(), variables=()) -> ClaimResult:
    residuals = tuple(residuals)
    conditions = tuple(conditions)
    return ClaimResult(
        claim_id=claim_id,
        status=exact_status(residuals, conditions),
        residuals=residuals,
        detail=detail,
        paper_location=location,
        conditions=conditions,
        variables=tuple(sorted(variables)),
    )


# -- float helpers ----------------------------------------------------------


def _memo(fn: Callable, variables: Iterable[str]) -> Callable:
    """Cache ``fn(assignment)`` on the values of ``variables`` only."""
    names = tuple(sorted(variables))
    cache: dict = {}

    def wrapped(a):
        key = tuple(a[v] for v in names)
        if key not in cache:
            cache[key] = fn(a)
        return cache[key]

    return wrapped


def _matrix_variables(U: GateMatrix) -> frozenset[str]:
    return frozenset().union(*(x.variables for row in U.entries for x in row))


def _fvec(v: StateVector) -> Callable[[Mapping], np.ndarray]:
    return _memo(lambda a: state_to_numpy(v, a), v.variables)


def _fmat(U: GateMatrix) -> Callable[[Mapping], np.ndarray]:
    return lambda a: matrix_to_numpy(U, a)


def _fapply(U: GateMatrix, v: StateVector) -> Callable[[Mapping], np.ndarray]:
    return _memo(lambda a: matrix_to_numpy(U, a) @ state_to_numpy(v, a), _matrix_variables(U) | v.variables)


def _fcombo(coeffs: Sequence, vecs: Sequence[Callable], scale: float) -> Callable[[Mapping], np.ndarray]:
    cs = [complex(c) for c in coeffs]
    return lambda a: scale * sum(c * f(a) for c, f in zip(cs, vecs))


def _fdot(f: Callable, g: Callable) -> FloatFn:
    return lambda a: complex(np.vdot(f(a), g(a)))


def _vector_residuals(prefix: str, exact: Sequence[PhasePolynomial], lhs: Callable, rhs: Callable) -> list[Residual]:
    return [
        Residual(f"{prefix}[{k}]", r, IDENTITY, lambda a, k=k: complex(lhs(a)[k] - rhs(a)[k]))
        for k, r in enumerate(exact)
    ]


def _unitarity_residuals(prefix: str, U: GateMatrix, kind: str = IDENTITY) -> tuple[bool, list[Residual]]:
    ok, res = is_unitary(U)
    fU = _fmat(U)

    def gram_of(a):
        M = fU(a)
        return M.conj().T @ M

    product = _memo(gram_of, _matrix_variables(U))
    n = U.dimension
    out = []
    for i in range(n):
        for j in range(n):
            def fn(a, i=i, j=j):
                return complex(product(a)[i, j] - (1.0 if i == j else 0.0))

            out.append(Residual(f"{prefix}[{i}][{j}]", res[i][j], kind, fn))
    return ok, out


def _gram_residuals(prefix: str, states: Sequence[StateVector], fvecs: Sequence[Callable], expected=None) -> list[Residual]:
    """gram[r][s] - expected[r][s] (identity matrix by default)."""
    out = []
    for r, a in enumerate(states):
        for s, b in enumerate(states):
            target = expected[r][s] if expected is not None else int(r == s)
            tf = complex(target)
            out.append(
                Residual(
                    f"{prefix}[{r}][{s}]",
                    inner_product(a, b) - target,
                    IDENTITY,
                    lambda x, r=r, s=s, tf=tf: complex(np.vdot(fvecs[r](x), fvecs[s](x))) - tf,
                )
            )
    return out


def _family_gram(prefix: str, fam: EnsembleFamily) -> list[Residual]:
    return _gram_residuals(prefix, fam.states, [_fvec(s) for s in fam.states])


# -- preservation condition ----------------------------------------------


def preservation_sides(
    coeffs: Sequence[Sequence],
    v: EnsembleFamily,
    w: EnsembleFamily,
    i: int = 0,
    j: int = 0,
    normalization: str = "squared",
) -> tuple[PhasePolynomial, PhasePolynomial]:
    """Both sides of <v_i|w_j> = <U v_i | U w_j>, U v_a = (1/sqrt n) sum_b c[a][b] v_b.

    ``normalization="squared"`` uses the factor 1/n produced by the two
    1/sqrt(n) factors; ``"single"`` uses 1/sqrt(n) instead.
    """
    if v.dimension != w.dimension:
        raise DimensionError(f"families of dimension {v.dimension} and {w.dimension}")
    n = len(coeffs[i])
    if len(v) != n or len(w) != n:
        raise DimensionError("coefficient rows must match the family sizes")
    acc = constant(0)
    for a in range(n):
        ca = CyclotomicNumber.coerce(coeffs[i][a]).conjugate()
        for b in range(n):
            cb = CyclotomicNumber.coerce(coeffs[j][b])
            prod = ca * cb
            if not prod.is_zero():
                acc = acc + inner_product(v[a], w[b]) * prod
    if normalization == "squared":
        factor = Fraction(1, n)
    elif normalization == "single":
        factor = inv_sqrt_positive_integer(n)
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    return inner_product(v[i], w[j]), acc * factor


def preservation_residual(coeffs, v: EnsembleFamily, w: EnsembleFamily, i: int = 0, j: int = 0, normalization: str = "squared") -> PhasePolynomial:
    lhs, rhs = preservation_sides(coeffs, v, w, i, j, normalization)
    return lhs - rhs


def _preservation_float(coeffs, v: EnsembleFamily, w: EnsembleFamily, i=0, j=0, factor=None) -> FloatFn:
    n = len(coeffs[i])
    factor = 1.0 / n if factor is None else factor
    ci = [complex(CyclotomicNumber.coerce(c)) for c in coeffs[i]]
    cj = [complex(CyclotomicNumber.coerce(c)) for c in coeffs[j]]

    def fn(a):
        vs = [state_to_numpy(s, a) for s in v]
        ws = [state_to_numpy(s, a) for s in w]
        rhs = sum(np.conj(ci[p]) * cj[q] * np.vdot(vs[p], ws[q]) for p in range(n) for q in range(n))
        return complex(np.vdot(vs[i], ws[j]) - factor * rhs)

    return fn


def dft_coefficient_rows(n: int) -> list[list[CyclotomicNumber]]:
    return [[root_of_unity(n, a * b) for b in range(n)] for a in range(n)]


ZERO_PHASE = {name: 0.0 for name in ("delta_k", "phi_k", "delta_j", "phi_j")}
ZERO_PHASE_EXACT = {name: RootOfUnity(1, 0) for name in ZERO_PHASE}


def check_T1_impossibility(inject_fault: bool = False, v: EnsembleFamily | None = None, w: EnsembleFamily | None = None) -> ClaimResult:
    """Generalized qutrit DFT is impossible: two orthonormal triples break it."""
    cv, cw = counterexample_families()
    v = v if v is not None else cv
    w = w if w is not None else cw
    if inject_fault:
        v = w
    coeffs = dft_coefficient_rows(3)
    residuals = _family_gram("gram_v", v) + _family_gram("gram_w", w)
    witness = preservation_residual(coeffs, v, w)
    single = preservation_residual(coeffs, v, w, normalization="single")
    residuals.append(Residual("preservation_witness", witness, WITNESS, _preservation_float(coeffs, v, w)))
    residuals.append(
        Residual(
            "preservation_witness_single_factor",
            single,
            WITNESS,
            _preservation_float(coeffs, v, w, factor=1 / math.sqrt(3)),
        )
    )
    zero_exact = witness.evaluate_exact({k: ZERO_PHASE_EXACT.get(k, RootOfUnity(1, 0)) for k in witness.variables})
    residuals.append(Residual("witness_at_zero_phase", constant(zero_exact), WITNESS, _preservation_float(coeffs, v, w)))
    variables = set().union(*(s.variables for s in v), *(s.variables for s in w))
    fails = not witness.is_zero()
    detail = (
        f"inner product preservation {'fails' if fails else 'holds'} for the counterexample triples; "
        f"zero-phase witness = {to_float_str(zero_exact)}; "
        f"verdict checked with factor 1/3 and with factor 1/sqrt(3): "
        f"{'both nonzero' if not witness.is_zero() and not single.is_zero() else 'not both nonzero'}"
    )
    return _result("T1", residuals, detail, "qutrit section: impossibility theorem for a generalized DFT", variables=variables)


def to_float_str(z) -> str:
    c = complex(z)
    re, im = round(c.real, 10) + 0.0, round(c.imag, 10) + 0.0
    return f"{re:.10g}{im:+.10g}i"


# -- equatorial laws ------------------------------------------------------

LAW_GROUPS = (
    ((0, 0), (1, 1), (2, 2)),
    ((0, 1), (2, 0), (1, 2)),
    ((0, 2), (1, 0), (2, 1)),
)


def equatorial_law_residuals(v: EnsembleFamily, w: EnsembleFamily) -> list[Residual]:
    out = []
    for g, group in enumerate(LAW_GROUPS):
        (a0, b0) = group[0]
        base = inner_product(v[a0], w[b0])
        fbase = _fdot(_fvec(v[a0]), _fvec(w[b0]))
        for a, b in group[1:]:
            other = inner_product(v[a], w[b])
            fo = _fdot(_fvec(v[a]), _fvec(w[b]))
            out.append(
                Residual(
                    f"law{g + 1}: <v{a0}|w{b0}> - <v{a}|w{b}>",
                    base - other,
                    IDENTITY,
                    lambda x, fb=fbase, fo=fo: fb(x) - fo(x),
                )
            )
    return out


def check_E1_equatorial_laws(inject_fault: bool = False) -> ClaimResult:
    v = equatorial_family(3, ("delta_k", "phi_k"), label="v")
    w = equatorial_family(3, ("delta_j", "phi_j"), label="w")
    if inject_fault:
        w = w.replace(1, basis_state(3, 0))
    residuals = equatorial_law_residuals(v, w)
    common = inner_product(v[0], w[0])
    residuals.append(Residual("law1 common value", common, INFO, _fdot(_fvec(v[0]), _fvec(w[0]))))
    variables = set().union(*(s.variables for s in v), *(s.variables for s in w))
    nz = sum(1 for r in residuals if r.kind == IDENTITY and not r.exact_zero)
    detail = f"six law differences for symbolic phases; {6 - nz} of 6 vanish identically"
    return _result("E1", residuals, detail, "qutrit section: inner product laws for equatorial qutrits", variables=variables)


# -- coefficient constraint system ------------------------------------------


def constraint_values(alpha: CyclotomicNumber, beta: CyclotomicNumber, mutated: bool = False) -> tuple[CyclotomicNumber, ...]:
    """(aa* + bb* - 2, a + b* + b a*, b + a* + a b*), all zero for a solution."""
    ac, bc = alpha.conjugate(), beta.conjugate()
    norm = alpha * ac + beta * bc - 2
    second = (alpha + (beta if mutated else bc) + beta * ac)
    third = beta + ac + alpha * bc
    return norm, second, third


def _constraint_floats(a: complex, b: complex, mutated: bool = False) -> tuple[complex, complex, complex]:
    ac, bc = a.conjugate(), b.conjugate()
    return (a * ac + b * bc - 2, a + (b if mutated else bc) + b * ac, b + ac + a * bc)


CONSTRAINT_NAMES = ("norm", "second", "third")


def solve_E2_coefficients(root_order: int = 12, inject_fault: bool = False) -> tuple[list[CoefficientPair], ClaimResult]:
    """Exhaustive search for (alpha, beta) among root_order-th roots of unity."""
    if root_order < 1:
        raise ValueError(f"root_order must be >= 1, got {root_order}")
    roots = [(RootOfUnity(root_order, k), root_of_unity(root_order, k)) for k in range(root_order)]
    solutions: list[CoefficientPair] = []
    for ra, a in roots:
        for rb, b in roots:
            vals = constraint_values(a, b, mutated=inject_fault)
            if all(x.is_zero() for x in vals):
                solutions.append(CoefficientPair(a, b, ra, rb))

    gamma, gamma2 = root_of_unity(3, 1), root_of_unity(3, 2)
    one = CyclotomicNumber.rational(1)

    def contains(x, y):
        return any(s.alpha == x and s.beta == y for s in solutions)

    closed = all(contains(s.alpha.conjugate(), s.beta.conjugate()) for s in solutions)
    conditions = [
        ("(Gamma, Gamma) is a solution", contains(gamma, gamma)),
        ("(Gamma^2, Gamma^2) is a solution", contains(gamma2, gamma2)),
        ("(1, 1) is rejected", not contains(one, one)),
        ("solution set closed under conjugation", closed),
    ]
    residuals = []
    for s in solutions:
        fa = cmath.exp(1j * s.alpha_root.angle)
        fb = cmath.exp(1j * s.beta_root.angle)
        for idx, (name, val) in enumerate(zip(CONSTRAINT_NAMES, constraint_values(s.alpha, s.beta, inject_fault))):
            residuals.append(
                Residual(
                    f"{s.label()}: {name}",
                    constant(val),
                    IDENTITY,
                    lambda _a, fa=fa, fb=fb, idx=idx: _constraint_floats(fa, fb, inject_fault)[idx],
                )
            )
    residuals.append(
        Residual(
            "(1, 1): second constraint",
            constant(constraint_values(one, one, inject_fault)[1]),
            WITNESS,
            lambda _a: _constraint_floats(1, 1, inject_fault)[1],
        )
    )
    labels = ", ".join(s.label() for s in solutions) or "none"
    detail = f"{len(solutions)} solutions among {root_order}-th roots of unity: {labels}"
    result = _result("E2", residuals, detail, "qutrit section: coefficient constraints for the equatorial DFT-like map", conditions)
    return solutions, result


def grid_probe_coefficients(steps: int = 360, threshold: float = 1e-6) -> list[tuple[float, float]]:
    """Heuristic float sweep over alpha = e^{ia}, beta = e^{ib} on a grid.

    Returns (a, b) in degrees where all three constraint moduli fall below
    ``threshold``. Not a completeness proof.
    """
    angles = np.arange(steps) * (2 * np.pi / steps)
    A, B = np.meshgrid(angles, angles, indexing="ij")
    a, b = np.exp(1j * A), np.exp(1j * B)
    r1 = np.abs(a * a.conj() + b * b.conj() - 2)
    r2 = np.abs(a + b.conj() + b * a.conj())
    r3 = np.abs(b + a.conj() + a * b.conj())
    hits = np.argwhere((r1 < threshold) & (r2 < threshold) & (r3 < threshold))
    scale = 360.0 / steps
    return [(float(i * scale), float(j * scale)) for i, j in hits]


# -- equatorial DFT-like diagonal gates -------------------------------------


def equatorial_dft_matrix(variant: str, mutated: bool = False) -> GateMatrix:
    g, g2 = root_of_unity(3, 1), root_of_unity(3, 2)
    if variant == "g1":
        diag = [2 * g + 1, 2 + g2, 2 + g2]
        if mutated:
            diag[1] = 2 + g
    elif variant == "g2":
        diag = [1 + 2 * g2, 2 + g, 2 + g]
        if mutated:
            diag[1] = 2 + g2
    else:
        raise ValueError(f"variant must be 'g1' or 'g2', got {variant!r}")
    return diagonal_matrix(diag, 3)


def check_E3_equatorial_dft(variant: str = "g1", inject_fault: bool = False, U: GateMatrix | None = None) -> ClaimResult:
    """U psi_r = (psi_r + c psi_s + c psi_t)/sqrt(3) with c = Gamma or Gamma^2."""
    if U is None:
        U = equatorial_dft_matrix(variant, mutated=inject_fault)
    c = root_of_unity(3, 1 if variant == "g1" else 2)
    fam = equatorial_family(3, ("delta", "phi"))
    psi = fam.states
    ok, residuals = _unitarity_residuals("unitarity", U)
    outputs = []
    for r in range(3):
        others = [s for s in range(3) if s != r]
        lhs = apply(U, psi[r])
        rhs = superpose([1, c, c], [psi[r], psi[others[0]], psi[others[1]]], 3)
        outputs.append(lhs)
        residuals += _vector_residuals(
            f"action psi{r}",
            state_residual(lhs, rhs),
            _fapply(U, psi[r]),
            _fcombo([1, c, c], [_fvec(psi[r]), _fvec(psi[others[0]]), _fvec(psi[others[1]])], 1 / math.sqrt(3)),
        )
    residuals += _gram_residuals("output gram", outputs, [_fapply(U, p) for p in psi])
    detail = f"diagonal gate with coefficient {'Gamma' if variant == 'g1' else 'Gamma^2'}: unitary={ok}"
    location = (
        "qutrit section: DFT-like diagonal unitary for equatorial qutrits"
        if variant == "g1"
        else "qutrit section: the other solution and its diagonal unitary"
    )
    return _result(f"E3-{variant}", residuals, detail, location, variables=fam[0].variables)


# -- qubit case -------------------------------------------------------------


def qubit_equatorial_matrix(mutated: bool = False) -> GateMatrix:
    i = root_of_unity(4, 1)
    diag = [1 + i, 1 - i]
    if mutated:
        diag.reverse()
    return diagonal_matrix(diag, 2)


def check_Q1_qubit_equatorial(inject_fault: bool = False) -> ClaimResult:
    U = qubit_equatorial_matrix(mutated=inject_fault)
    i = root_of_unity(4, 1)
    fam = equatorial_family(2, ("phi",))
    psi, psibar = fam.states
    ok, residuals = _unitarity_residuals("unitarity", U)
    lhs = apply(U, psi)
    rhs = superpose([1, i], [psi, psibar], 2)
    residuals += _vector_residuals(
        "action psi", state_residual(lhs, rhs), _fapply(U, psi), _fcombo([1, i], [_fvec(psi), _fvec(psibar)], 1 / math.sqrt(2))
    )
    return _result(
        "Q1", residuals, f"2x2 diagonal gate, Gamma^(1/2) = i: unitary={ok}", "qutrit section: equatorial qubit reference case", variables=psi.variables
    )


# -- pairwise Hadamard-type operator ----------------------------------------


def pairwise_phase_names(n: int) -> tuple[str, ...]:
    if n == 2:
        return ("phi",)
    if n == 3:
        return ("delta", "phi")
    return tuple(f"theta_{k}" for k in range(1, n))


def pairwise_matrix(n: int, mutated: bool = False) -> GateMatrix:
    """(1/sqrt 2) diag(1 + i Gamma^k), Gamma = exp(2 pi i / n)."""
    if n < 2:
        raise DimensionError(f"pairwise operator needs n >= 2, got {n}")
    i = root_of_unity(4, 1)
    diag = [1 + i * root_of_unity(n, k) for k in range(n)]
    if mutated:
        diag[0] = 1 - i
    return diagonal_matrix(diag, 2)


def pairwise_gram_oracle(n: int) -> list[list[CyclotomicNumber]]:
    """<U psi_r | U psi_s> from the action and input orthonormality alone."""
    i = root_of_unity(4, 1)

    def delta(a, b):
        return int(a % n == b % n)

    return [
        [(delta(r, s) + i * delta(r, s + 1) - i * delta(r + 1, s) + delta(r + 1, s + 1)) / 2 for s in range(n)]
        for r in range(n)
    ]


def check_P1_pairwise(n: int, inject_fault: bool = False, phases: Sequence[str] | None = None) -> ClaimResult:
    if n < 2:
        raise DimensionError(f"pairwise operator needs n >= 2, got {n}")
    U = pairwise_matrix(n, mutated=inject_fault)
    i = root_of_unity(4, 1)
    fam = equatorial_family(n, pairwise_phase_names(n) if phases is None else phases)
    psi = fam.states
    residuals: list[Residual] = []
    outputs = []
    for r in range(n):
        nxt = psi[(r + 1) % n]
        lhs = apply(U, psi[r])
        rhs = superpose([1, i], [psi[r], nxt], 2)
        outputs.append(lhs)
        residuals += _vector_residuals(
            f"action psi{r}", state_residual(lhs, rhs), _fapply(U, psi[r]), _fcombo([1, i], [_fvec(psi[r]), _fvec(nxt)], 1 / math.sqrt(2))
        )
    fouts = [_fapply(U, p) for p in psi]
    for r, out in enumerate(outputs):
        residuals.append(
            Residual(f"norm^2 U psi{r} - 1", norm_squared(out) - 1, IDENTITY, lambda a, f=fouts[r]: complex(np.vdot(f(a), f(a))) - 1)
        )
    oracle = pairwise_gram_oracle(n)
    residuals += _gram_residuals("output gram vs oracle", outputs, fouts, oracle)

    conditions = []
    witness_at = None
    if n >= 3:
        for r in range(n):
            for s in range(n):
                if r != s and witness_at is None and not inner_product(outputs[r], outputs[s]).is_zero():
                    witness_at = (r, s)
        r, s = witness_at if witness_at is not None else (0, 1)
        residuals.append(
            Residual(f"output overlap <U psi{r}|U psi{s}>", inner_product(outputs[r], outputs[s]), WITNESS, _fdot(fouts[r], fouts[s]))
        )
        if n == 3:
            overlap = inner_product(outputs[0], outputs[1])
            expected = -i / 2
            conditions.append(("n=3 overlap <U psi0|U psi1> equals -i/2", overlap == constant(expected)))

    unitary, ures = _unitarity_residuals("U^dagger U - I", U, AUDIT)
    residuals += ures
    detail = f"cyclic action on {n} equatorial states; U^dagger U = I exactly: {unitary}"
    if not unitary:
        diag = [f"{to_float_str(ures[k * n + k].value.constant_value())}" for k in range(n)]
        detail += f"; diagonal of U^dagger U - I = [{', '.join(diag)}]; the operator is labelled unitary but is not"
    if witness_at is not None:
        detail += f"; first nonzero output overlap at {witness_at}"
    return _result(
        f"P1-{n}",
        residuals,
        detail,
        "pairwise Hadamard type operation: cyclic qudit transformations",
        conditions,
        variables=fam[0].variables,
    )


def check_Q2_embedding(inject_fault: bool = False) -> ClaimResult:
    P = pairwise_matrix(2)
    Q = qubit_equatorial_matrix(mutated=inject_fault)
    residuals = []
    for r in range(2):
        for c in range(2):
            residuals.append(
                Residual(
                    f"entry[{r}][{c}]",
                    P.materialized()[r][c] - Q.materialized()[r][c],
                    IDENTITY,
                    lambda a, r=r, c=c: complex(matrix_to_numpy(P, a)[r, c] - matrix_to_numpy(Q, a)[r, c]),
                )
            )
    return _result("Q2", residuals, "pairwise operator at n=2 against the equatorial qubit gate", "pairwise Hadamard type operation: qubit gate embedded in the qutrit one")


def dft3_display() -> GateMatrix:
    g, g2 = root_of_unity(3, 1), root_of_unity(3, 2)
    return GateMatrix(((1, 1, 1), (1, g, g2), (1, g2, g)), 3)


def check_D1_dft_suite(max_n: int = 12, inject_fault: bool = False) -> ClaimResult:
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    residuals = []
    all_unitary = True
    for n in range(1, max_n + 1):
        U = dft_matrix(n)
        if inject_fault and n == 3:
            U = U.replace_entry(1, 2, root_of_unity(3, 1))
        ok, res = _unitarity_residuals(f"dft{n} unitarity", U)
        all_unitary &= ok
        residuals += res
        if n == 3:
            D = dft3_display()
            M, Dm = U.materialized(), D.materialized()
            for r in range(3):
                for c in range(3):
                    residuals.append(
                        Residual(
                            f"dft3 vs display[{r}][{c}]",
                            M[r][c] - Dm[r][c],
                            IDENTITY,
                            lambda a, r=r, c=c, U=U, D=D: complex(matrix_to_numpy(U, a)[r, c] - matrix_to_numpy(D, a)[r, c]),
                        )
                    )
    detail = f"DFT matrices for n = 1..{max_n}: all exactly unitary: {all_unitary}"
    return _result("D1", residuals, detail, "qutrit section: DFT definition and the qutrit DFT matrix")


# -- catalog ----------------------------------------------------------------

STATIC_IDS = ("T1", "E1", "E2", "E3-g1", "E3-g2", "Q1", "Q2", "D1")
DEFAULT_PAIRWISE_DIMS = (2, 3, 4, 5)


def claim_ids(pairwise_dims: Iterable[int] = DEFAULT_PAIRWISE_DIMS) -> list[str]:
    return ["T1", "E1", "E2", "E3-g1", "E3-g2", "Q1"] + [f"P1-{n}" for n in pairwise_dims] + ["Q2", "D1"]


def is_valid_claim_id(claim_id: str) -> bool:
    if claim_id in STATIC_IDS:
        return True
    if claim_id.startswith("P1-"):
        tail = claim_id[3:]
        return tail.isdigit() and int(tail) >= 2
    return False


def run_claim(claim_id: str, root_order: int = 12, max_n: int = 12, inject_fault: bool = False) -> ClaimResult:
    start = time.perf_counter()
    if claim_id == "T1":
        res = check_T1_impossibility(inject_fault)
    elif claim_id == "E1":
        res = check_E1_equatorial_laws(inject_fault)
    elif claim_id == "E2":
        res = solve_E2_coefficients(root_order, inject_fault)[1]
    elif claim_id in ("E3-g1", "E3-g2"):
        res = check_E3_equatorial_dft(claim_id[3:], inject_fault)
    elif claim_id == "Q1":
        res = check_Q1_qubit_equatorial(inject_fault)
    elif claim_id == "Q2":
        res = check_Q2_embedding(inject_fault)
    elif claim_id == "D1":
        res = check_D1_dft_suite(max_n, inject_fault)
    elif is_valid_claim_id(claim_id):
        res = check_P1_pairwise(int(claim_id[3:]), inject_fault)
    else:
        raise KeyError(f"unknown claim id {claim_id!r}")
    return replace(res, timing_ms=(time.perf_counter() - start) * 1000)


# -- float cross-validation ---------------------------------------------------


def cross_validate(
    result: ClaimResult,
    samples: int = 100,
    seed: int = 0,
    tolerance: float = DEFAULT_FLOAT_TOLERANCE,
) -> ClaimResult:
    """Recompute residuals in floats and attach the checks to ``result``.

    Zero residuals are sampled at ``samples`` random phase assignments from
    a generator seeded with ``"<seed>:<claim_id>"``; nonzero ones (and
    witnesses) are evaluated at the zero-phase point.
    """
    seed_str = f"{seed}:{result.claim_id}"
    rng = random.Random(seed_str)
    names = result.variables
    assignments = [{v: rng.uniform(0, 2 * math.pi) for v in names} for _ in range(samples)]
    zero = {v: 0.0 for v in names}
    checks = []
    for r in result.residuals:
        fn = r.float_fn if r.float_fn is not None else r.value.evaluate
        if r.kind == IDENTITY:
            val = max((abs(fn(a)) for a in assignments), default=abs(fn(zero)))
            checks.append(FloatCheck(r.name, "max_abs_over_samples", val, val < tolerance))
        elif r.kind == WITNESS:
            val = abs(fn(zero))
            checks.append(FloatCheck(r.name, "abs_at_zero_phase", val, val > WITNESS_FLOAT_THRESHOLD))
        else:
            val = abs(fn(zero))
            exact_val = abs(r.value.evaluate(zero))
            checks.append(FloatCheck(r.name, "abs_at_zero_phase", val, abs(val - exact_val) < tolerance))
    return replace(result, float_checks=tuple(checks), float_seed=seed_str)


def float_status(result: ClaimResult) -> str:
    """Verdict of the float backend alone: it can only report consistency."""
    ok = all(c.passed for c in result.float_checks) and all(p for _, p in result.conditions)
    return CONSISTENT if ok else INCONSISTENT


def backend_disagreements(result: ClaimResult) -> list[str]:
    """Residuals whose float check contradicts the exact zero test."""
    out = []
    for r, c in zip(result.residuals, result.float_checks):
        if r.kind == IDENTITY:
            agree = c.passed == r.exact_zero
        elif r.kind == WITNESS:
            agree = c.passed != r.exact_zero
        else:
            agree = c.passed
        if not agree:
            out.append(r.name)
    return out


def run_all(
    root_order: int = 12,
    max_n: int = 12,
    pairwise_dims: Iterable[int] = DEFAULT_PAIRWISE_DIMS,
    backend: str = "both",
    samples: int = 100,
    seed: int = 0,
    tolerance: float = DEFAULT_FLOAT_TOLERANCE,
    faults: Iterable[str] = (),
    claims: Sequence[str] | None = None,
) -> list[ClaimResult]:
    """Run the catalog (or ``claims``) in catalog order.

    ``backend``: ``exact`` skips float checks; ``float`` replaces each
    status by consistent/inconsistent; ``both`` keeps the exact status and
    refutes a claim whose float checks disagree with it.
    """
    if backend not in ("exact", "float", "both"):
        raise ValueError(f"unknown backend {backend!r}")
    faults = set(faults)
    ids = list(claims) if claims is not None else claim_ids(pairwise_dims)
    results = []
    for cid in ids:
        res = run_claim(cid, root_order, max_n, inject_fault=cid in faults)
        if backend != "exact":
            res = cross_validate(res, samples, seed, tolerance)
            if backend == "float":
                res = replace(res, status=float_status(res))
            else:
                bad = backend_disagreements(res)
                if bad:
                    res = replace(res, status=REFUTED, detail=res.detail + f"; float backend disagrees on {', '.join(bad)}")
        results.append(res)
    return results
