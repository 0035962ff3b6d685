"""Numerical search for SIC fiducials in small dimensions.

The residual of a unit vector psi is

    R(psi) = sum over (i, j) != (0, 0) of (|<psi|D(i,j)|psi>|^2 - 1/(d+1))^2,

which vanishes exactly on fiducials. The optimizer is projected
gradient descent on the unit sphere with backtracking line search and
seeded restarts; every restart draws its own independent random stream,
so any single restart can be reproduced in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .sic4 import embedded_projector
from .weyl import displacement

__all__ = [
    "SearchConfig",
    "RestartResult",
    "SearchResult",
    "sic_residual",
    "residual_gradient",
    "fourth_moment",
    "known_fiducial",
    "search",
    "extract_phases",
]


@dataclass(frozen=True)
class SearchConfig:
    dimension: int
    restarts: int = 8
    max_iterations: int = 20_000
    tolerance: float = 1e-10
    rng_seed: int = 0
    initial_step: float = 1.0
    shrink_factor: float = 0.5
    stop_on_converged: bool = True

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise ValueError("dimension must be at least 2")
        if not 0 < self.shrink_factor < 1:
            raise ValueError("shrink factor must lie in (0, 1)")
        if self.restarts < 1:
            raise ValueError("at least one restart is required")


@dataclass(frozen=True)
class RestartResult:
    restart_index: int
    residual: float
    iterations: int
    converged: bool
    fiducial: np.ndarray


@dataclass(frozen=True)
class SearchResult:
    dimension: int
    converged: bool
    residual: float
    fiducial: np.ndarray
    restart_index: int
    iterations: int
    fourth_moment: float
    restarts: tuple[RestartResult, ...]


@lru_cache(maxsize=None)
def _displacement_stack(d: int) -> np.ndarray:
    stack = np.empty((d * d, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            stack[i * d + j] = displacement(d, i, j)
    stack.setflags(write=False)
    return stack


def _moments(d: int, psi: np.ndarray) -> np.ndarray:
    """All d^2 first moments <psi|D(i,j)|psi>, row-major."""
    stack = _displacement_stack(d)
    return np.einsum("a,kab,b->k", psi.conj(), stack, psi)


def sic_residual(d: int, psi: np.ndarray) -> float:
    """Sum of squared deviations of the overlaps from 1/(d+1)."""
    psi = np.asarray(psi, dtype=complex).reshape(d)
    m = _moments(d, psi)
    devs = np.abs(m) ** 2 - 1.0 / (d + 1)
    return float(np.sum(devs[1:] ** 2))


def residual_gradient(d: int, psi: np.ndarray) -> np.ndarray:
    """Euclidean gradient of the raw residual, realified.

    The first d entries are derivatives with respect to the real parts
    of psi, the last d with respect to the imaginary parts. No sphere
    projection is applied, so central finite differences of
    sic_residual reproduce this vector directly.
    """
    psi = np.asarray(psi, dtype=complex).reshape(d)
    stack = _displacement_stack(d)
    m = _moments(d, psi)
    devs = np.abs(m) ** 2 - 1.0 / (d + 1)
    devs[0] = 0.0
    d_psi = np.einsum("kab,b->ka", stack, psi)
    ddag_psi = np.einsum("kba,b->ka", stack.conj(), psi)
    wirtinger = (
        np.einsum("k,ka->a", 2 * devs * m.conj(), d_psi)
        + np.einsum("k,ka->a", 2 * devs * m, ddag_psi)
    )
    return np.concatenate([2 * wirtinger.real, 2 * wirtinger.imag])


def fourth_moment(d: int, psi: np.ndarray) -> float:
    """Sum of |<psi|D|psi>|^4 over the whole group, identity included.

    Equals 2d/(d+1) exactly when psi is a fiducial.
    """
    psi = np.asarray(psi, dtype=complex).reshape(d)
    return float(np.sum(np.abs(_moments(d, psi)) ** 4))


def known_fiducial(d: int) -> np.ndarray:
    """A reference fiducial for the dimensions with a closed form here."""
    if d == 2:
        theta = np.arccos(1 / np.sqrt(3))
        return np.array([
            np.cos(theta / 2),
            np.exp(1j * np.pi / 4) * np.sin(theta / 2),
        ])
    if d == 3:
        return np.array([0, 1, -1]) / np.sqrt(2)
    if d == 4:
        evals, evecs = np.linalg.eigh(embedded_projector())
        return evecs[:, int(np.argmax(evals))]
    raise ValueError(f"no reference fiducial stored for dimension {d}")


def _normalize(psi: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise ValueError("cannot normalize the zero vector")
    return psi / norm


def _random_state(d: int, rng: np.random.Generator) -> np.ndarray:
    return _normalize(rng.normal(size=d) + 1j * rng.normal(size=d))


def _single_run(config: SearchConfig, psi0: np.ndarray,
                restart_index: int) -> RestartResult:
    d = config.dimension
    psi = _normalize(np.asarray(psi0, dtype=complex).reshape(d))
    residual = sic_residual(d, psi)
    step = config.initial_step
    iterations = 0
    converged = residual < config.tolerance
    while not converged and iterations < config.max_iterations:
        grad = residual_gradient(d, psi)
        direction = grad[:d] + 1j * grad[d:]
        if np.linalg.norm(direction) < 1e-18:
            break
        alpha = step
        improved = False
        while alpha > 1e-18:
            candidate = _normalize(psi - alpha * direction)
            value = sic_residual(d, candidate)
            if value < residual:
                psi, residual = candidate, value
                # let the accepted step grow again so long plateaus
                # do not pin the line search at a tiny scale
                step = alpha * 2
                improved = True
                break
            alpha *= config.shrink_factor
        iterations += 1
        if not improved:
            break
        converged = residual < config.tolerance
    return RestartResult(restart_index, residual, iterations, converged, psi)


def search(config: SearchConfig,
           initial: np.ndarray | None = None) -> SearchResult:
    """Run the restarted search; the best restart wins.

    A warm start vector, when given, is used by restart 0; the
    remaining restarts draw their starting states from per-restart
    seeded streams default_rng([rng_seed, restart_index]).
    """
    d = config.dimension
    results: list[RestartResult] = []
    best: RestartResult | None = None
    for k in range(config.restarts):
        if k == 0 and initial is not None:
            psi0 = np.asarray(initial, dtype=complex).reshape(d)
        else:
            rng = np.random.default_rng([config.rng_seed, k])
            psi0 = _random_state(d, rng)
        result = _single_run(config, psi0, k)
        results.append(result)
        if best is None or result.residual < best.residual:
            best = result
        if best.converged and config.stop_on_converged:
            break
    assert best is not None
    return SearchResult(
        dimension=d,
        converged=best.converged,
        residual=best.residual,
        fiducial=best.fiducial,
        restart_index=best.restart_index,
        iterations=best.iterations,
        fourth_moment=fourth_moment(d, best.fiducial),
        restarts=tuple(results),
    )


def extract_phases(psi: np.ndarray, tolerance: float = 1e-6) -> np.ndarray:
    """Read the reconstruction phases off a numerical fiducial.

    phases(i, j) = sqrt(d + 1) * <psi|D(i,j)|psi> must be unit modulus;
    anything farther than the tolerance from the unit circle means the
    state is not a fiducial, and that is an error. The (0, 0) slot is
    set to 1.
    """
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    psi = _normalize(psi.reshape(d))
    phases = np.sqrt(d + 1.0) * _moments(d, psi)
    moduli = np.abs(phases[1:])
    worst = float(np.max(np.abs(moduli - 1.0)))
    if worst > tolerance:
        raise ValueError(
            f"state is not a fiducial: a phase modulus misses 1 by {worst:.3g}"
        )
    phases[0] = 1.0
    return phases.reshape(d, d)
