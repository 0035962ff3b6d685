"""The exact dimension-4 SIC fiducial projector and its audits.

The 15 phases attached to the nontrivial displacement operators all lie
in the inner field Q(u) and are powers-of-u up to sign. Reconstruction
sums the displaced phases into a rank-one projector

    Pi = (1/4) [ I + (1/sqrt5) sum phases(i, j) D(i, j)^dagger ],

and every property that makes it a SIC fiducial (hermitian, idempotent,
trace one, equal overlaps 1/5) is checkable with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import matrices
from .matrices import Matrix
from .minpoly import is_unit, minimal_polynomial
from .tower import FieldElement, constant, embed
from .weyl import displacement_dagger_sign, displacement_exact

__all__ = [
    "CheckResult",
    "Discriminant",
    "canonical_phase_matrix",
    "reconstruct_projector",
    "fiducial_projector",
    "overlap",
    "verify_sic_projector",
    "hermiticity_symmetry_holds",
    "phases_in_inner_field",
    "phase_unit_audit",
    "embedded_projector",
    "discriminant",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def canonical_phase_matrix(negate_entry: tuple[int, int] | None = None) -> Matrix:
    """The 4x4 table of reconstruction phases, indexed [shift][clock].

    The (0, 0) slot belongs to the identity operator, carries no phase,
    and is filled with 1 as a sentinel. Pass negate_entry to flip the
    sign of one phase, which breaks the SIC property and is useful as a
    negative control.
    """
    u = constant("u")
    v = u.inverse()
    one = FieldElement.one()
    rows = (
        (one, u, -one, v),
        (u, v, -v, v),
        (-one, -u, -one, v),
        (v, u, u, u),
    )
    if negate_entry is None:
        return rows
    i, j = negate_entry
    if not (0 <= i < 4 and 0 <= j < 4) or (i, j) == (0, 0):
        raise ValueError("negate_entry must be a nontrivial index pair")
    return tuple(
        tuple(-rows[a][b] if (a, b) == (i, j) else rows[a][b] for b in range(4))
        for a in range(4)
    )


def reconstruct_projector(phases: Matrix | None = None) -> Matrix:
    """Assemble the projector from a phase table, exactly."""
    if phases is None:
        phases = canonical_phase_matrix()
    inv_sqrt5 = constant("sqrt5") / 5
    acc = matrices.identity(4)
    for i in range(4):
        for j in range(4):
            if (i, j) == (0, 0):
                continue
            term = matrices.mat_scale(
                phases[i][j] * inv_sqrt5,
                matrices.dagger(displacement_exact(i, j)),
            )
            acc = matrices.mat_add(acc, term)
    quarter = FieldElement.from_rational(Fraction(1, 4))
    return matrices.mat_scale(quarter, acc)


@lru_cache(maxsize=1)
def fiducial_projector() -> Matrix:
    return reconstruct_projector()


def overlap(proj: Matrix, i: int, j: int) -> FieldElement:
    """Tr(Pi D Pi D^dagger) for the displacement at (i, j)."""
    d = displacement_exact(i, j)
    a = matrices.mat_mul(proj, d)
    b = matrices.mat_mul(proj, matrices.dagger(d))
    return sum(
        (a[x][y] * b[y][x] for x in range(4) for y in range(4)),
        FieldElement.zero(),
    )


def verify_sic_projector(proj: Matrix | None = None) -> list[CheckResult]:
    """Run every exact SIC property check and report each one."""
    if proj is None:
        proj = fiducial_projector()
    results = [
        CheckResult("hermitian", proj == matrices.dagger(proj)),
        CheckResult("trace_one", matrices.trace(proj) == 1),
        CheckResult("idempotent", matrices.mat_mul(proj, proj) == proj),
    ]
    target = FieldElement.from_rational(Fraction(1, 5))
    for i in range(4):
        for j in range(4):
            if (i, j) == (0, 0):
                continue
            value = overlap(proj, i, j)
            ok = value == target
            detail = "" if ok else f"value approx {embed(value):.6g}"
            results.append(CheckResult(f"overlap_{i}{j}", ok, detail))
    return results


def hermiticity_symmetry_holds(phases: Matrix | None = None) -> bool:
    """Conjugating a phase must land on the phase at the negated index,
    up to the parity sign the displacement adjoint picks up."""
    if phases is None:
        phases = canonical_phase_matrix()
    for i in range(4):
        for j in range(4):
            if (i, j) == (0, 0):
                continue
            sign = displacement_dagger_sign(4, i, j)
            mirrored = phases[(-i) % 4][(-j) % 4]
            if phases[i][j].conjugate() != sign * mirrored:
                return False
    return True


def phases_in_inner_field(phases: Matrix | None = None) -> bool:
    """All 15 phases lie in Q(u): their r parts vanish."""
    if phases is None:
        phases = canonical_phase_matrix()
    return all(
        phases[i][j].r_part.is_zero()
        for i in range(4) for j in range(4) if (i, j) != (0, 0)
    )


@dataclass(frozen=True)
class PhaseAudit:
    index: tuple[int, int]
    unit_modulus: bool
    algebraic_unit: bool
    minpoly_degree: int


def phase_unit_audit(phases: Matrix | None = None) -> list[PhaseAudit]:
    """Certify each phase is a unit-modulus algebraic unit."""
    if phases is None:
        phases = canonical_phase_matrix()
    audits = []
    for i in range(4):
        for j in range(4):
            if (i, j) == (0, 0):
                continue
            z = phases[i][j]
            audits.append(PhaseAudit(
                index=(i, j),
                unit_modulus=z * z.conjugate() == 1,
                algebraic_unit=is_unit(z),
                minpoly_degree=minimal_polynomial(z).degree,
            ))
    return audits


def embedded_projector(proj: Matrix | None = None) -> np.ndarray:
    """Double-precision image of an exact projector."""
    if proj is None:
        proj = fiducial_projector()
    return np.array([[embed(entry) for entry in row] for row in proj])


@dataclass(frozen=True)
class Discriminant:
    dimension: int
    value: int
    squarefree_part: int


def discriminant(d: int) -> Discriminant:
    """(d - 3)(d + 1) and its squarefree kernel, for d >= 4.

    The squarefree part names the real quadratic field attached to the
    dimension; dimensions below 4 have no such field and are rejected.
    """
    if d < 4:
        raise ValueError("the discriminant is defined for dimensions 4 and up")
    value = (d - 3) * (d + 1)
    rest = value
    p = 2
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
        p += 1
    return Discriminant(d, value, rest)
