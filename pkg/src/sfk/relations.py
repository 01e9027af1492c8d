"""Exact relation sweeps for the oscillator and basis invariants.

Each suite applies both sides of a defining relation to every monomial of
every weight space in range and compares exactly.  Applying an operator to
each basis vector is the same computation as forming its matrix column, so
a passing sweep is the matrix identity at every pair of matching weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .oscillator import (
    EVEN_VIRASORO,
    NS,
    apply_a,
    apply_b,
    apply_G,
    apply_L,
)
from .singular import basis_matrix, exact_determinant_nonzero
from .superalgebra import (
    COORD_F,
    HalfInt,
    SuperPolynomial,
    apply_derivation,
    lowering_derivation,
    weight_basis,
)


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, description: str):
        self.checked += 1
        if not ok:
            self.failures.append(description)

    def summary(self) -> str:
        if self.ok:
            if self.checked == 0:
                return f"{self.suite}: PASS (vacuous)"
            return f"{self.suite}: PASS (all relations exact, {self.checked} checks)"
        lines = [f"{self.suite}: FAIL ({len(self.failures)} of {self.checked} checks)"]
        lines.extend(f"  counterexample: {failure}" for failure in self.failures[:5])
        return "\n".join(lines)


def _half_weights(max_weight, step: int = 1):
    max_weight = HalfInt.coerce(max_weight)
    return [HalfInt(t) for t in range(0, max_weight.twice + 1, step)]


def _basis_vectors(w: HalfInt, even_only: bool = False):
    return [
        SuperPolynomial.monomial(mono)
        for mono in weight_basis(COORD_F, w, even_only=even_only)
    ]


def check_heisenberg(max_mode: int, max_weight) -> SuiteReport:
    """[a_m, a_n] = m delta_{m+n,0} Id on all weights <= max_weight."""
    report = SuiteReport("heisenberg")
    modes = [m for m in range(-max_mode, max_mode + 1) if m != 0]
    for w in _half_weights(max_weight):
        vectors = _basis_vectors(w)
        for m in modes:
            for n in modes:
                for v in vectors:
                    lhs = apply_a(m, apply_a(n, v)) - apply_a(n, apply_a(m, v))
                    rhs = v.scale(m) if m + n == 0 else SuperPolynomial.zero(COORD_F)
                    report.record(
                        lhs == rhs,
                        f"[a_{m}, a_{n}] on {v} at weight {w}",
                    )
    return report


def check_clifford(max_mode, max_weight) -> SuiteReport:
    """{b_r, b_s} = delta_{r+s,0} Id on all weights <= max_weight."""
    report = SuiteReport("clifford")
    bound = HalfInt.coerce(max_mode).twice
    modes = [HalfInt(t) for t in range(-bound, bound + 1) if t % 2]
    for w in _half_weights(max_weight):
        vectors = _basis_vectors(w)
        for r in modes:
            for s in modes:
                for v in vectors:
                    lhs = apply_b(r, apply_b(s, v)) + apply_b(s, apply_b(r, v))
                    rhs = v if (r + s).twice == 0 else SuperPolynomial.zero(COORD_F)
                    report.record(
                        lhs == rhs,
                        f"{{b_{r}, b_{s}}} on {v} at weight {w}",
                    )
    return report


def _virasoro_commutator(m: int, n: int, v: SuperPolynomial, context: str,
                         central: Fraction) -> bool:
    lhs = apply_L(m, apply_L(n, v, context), context) - apply_L(
        n, apply_L(m, v, context), context
    )
    rhs = apply_L(m + n, v, context).scale(m - n)
    if m + n == 0:
        rhs = rhs + v.scale(Fraction(m**3 - m, 12) * central)
    return lhs == rhs


def check_virasoro(max_mode: int, max_weight) -> SuiteReport:
    """Central charge 1 commutators on the bosonic sector."""
    report = SuiteReport("virasoro")
    modes = range(-max_mode, max_mode + 1)
    for w in _half_weights(max_weight, step=2):
        vectors = _basis_vectors(w, even_only=True)
        for m in modes:
            for n in modes:
                for v in vectors:
                    ok = _virasoro_commutator(m, n, v, EVEN_VIRASORO, Fraction(1))
                    report.record(ok, f"[L_{m}, L_{n}] on {v} at weight {w}")
    return report


def check_ns(max_mode, max_weight) -> SuiteReport:
    """Neveu-Schwarz relations at central charge 3/2 on the full space.

    Odd modes are bounded by max_mode, even modes by its floor.
    """
    report = SuiteReport("ns")
    bound = HalfInt.coerce(max_mode)
    odd_modes = [HalfInt(t) for t in range(-bound.twice, bound.twice + 1) if t % 2]
    even_bound = bound.floor()
    even_modes = range(-even_bound, even_bound + 1)
    central = Fraction(3, 2)
    for w in _half_weights(max_weight):
        vectors = _basis_vectors(w)
        for m in even_modes:
            for n in even_modes:
                for v in vectors:
                    ok = _virasoro_commutator(m, n, v, NS, central)
                    report.record(ok, f"[L_{m}, L_{n}] on {v} at weight {w}")
        for m in even_modes:
            for r in odd_modes:
                for v in vectors:
                    lhs = apply_L(m, apply_G(r, v), NS) - apply_G(r, apply_L(m, v, NS))
                    rhs = apply_G(m + r, v).scale(Fraction(m, 2) - r.as_fraction())
                    report.record(
                        lhs == rhs, f"[L_{m}, G_{r}] on {v} at weight {w}"
                    )
        for r in odd_modes:
            for s in odd_modes:
                for v in vectors:
                    lhs = apply_G(r, apply_G(s, v)) + apply_G(s, apply_G(r, v))
                    rhs = apply_L(r + s, v, NS).scale(2)
                    if (r + s).twice == 0:
                        cocycle = (central / 3) * (
                            r.as_fraction() ** 2 - Fraction(1, 4)
                        )
                        rhs = rhs + v.scale(cocycle)
                    report.record(
                        lhs == rhs, f"{{G_{r}, G_{s}}} on {v} at weight {w}"
                    )
    return report


def check_l1_derivation(max_weight) -> SuiteReport:
    """L_1 = -(lowering derivation) and L_0 = wt Id, weight by weight."""
    report = SuiteReport("l1-derivation")
    max_weight = HalfInt.coerce(max_weight)
    rule = lowering_derivation(COORD_F, max_weight)
    for w in _half_weights(max_weight):
        for v in _basis_vectors(w):
            lowered = apply_derivation(rule, v)
            report.record(
                apply_L(1, v, NS) == -lowered,
                f"L_1 vs lowering derivation on {v} at weight {w}",
            )
            report.record(
                apply_L(0, v, NS) == v.scale(w.as_fraction()),
                f"L_0 grading on {v} at weight {w}",
            )
    return report


def check_koschorke_basis(max_weight) -> SuiteReport:
    """Exact invertibility of the tensor-basis matrix at each weight."""
    report = SuiteReport("koschorke-basis")
    for w in _half_weights(max_weight):
        _, _, matrix = basis_matrix(w)
        report.record(
            exact_determinant_nonzero(matrix),
            f"tensor basis matrix at weight {w}",
        )
    return report


SUITES = {
    "heisenberg": lambda max_mode, max_weight: check_heisenberg(
        HalfInt.coerce(max_mode).floor(), max_weight
    ),
    "clifford": check_clifford,
    "virasoro": lambda max_mode, max_weight: check_virasoro(
        HalfInt.coerce(max_mode).floor(), max_weight
    ),
    "ns": check_ns,
    "l1-derivation": lambda max_mode, max_weight: check_l1_derivation(max_weight),
    "koschorke-basis": lambda max_mode, max_weight: check_koschorke_basis(max_weight),
}
