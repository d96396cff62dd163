"""Direct minimization of the discrete action over paths from ``E3`` to ``M1``.

The unknowns are charts of the path space in which both boundary manifolds
are built in:

- node 0 is ``(z, -z, 0)`` and is stored as the planar vector ``z``;
- interior nodes are stored by their Jacobi coordinates ``(z1, z2)``;
- node n satisfies ``Re(z̄2 z1) = 0`` (i.e. ``r12 = r13``) and is stored as
  ``(ψ, p, q)`` with ``z1 = i q e^{iψ}`` and ``z2 = p e^{iψ}``.

No rotation gauge is fixed, so a converged path having zero angular momentum
is an outcome and not a constraint.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize as scipy_minimize
from scipy.sparse.linalg import LinearOperator, cg

from ..shapes import (
    as_complex,
    from_complex,
    jacobi_array,
    jacobi_inverse_array,
    min_separation,
    potential_array,
    wedge,
)
from ..util.errors import CollisionError, ConvergenceError
from .action import discrete_action, gradient_array, relative_action
from .path import DiscretePath

logger = logging.getLogger(__name__)

SEPARATION_FLOOR = 1e-6
MAX_RESTARTS = 10
# objective value returned at exact collisions
COLLISION_VALUE = 1e100
POLISH_STEPS = 20
POLISH_HALVINGS = 10
# chart displacement of the finite-difference Hessian products
HESSIAN_STEP = 1e-6

SQRT2 = np.sqrt(2)
SQRT_2_3 = np.sqrt(2 / 3)


@dataclass(frozen=True, eq=False)
class MinimizeReport:
    """Outcome of ``minimize``.

    ``decrements`` holds the decrease of the action at every accepted step.
    """

    path: DiscretePath
    action: float
    gradient_norm: float
    min_separation: float
    max_angular_momentum: float
    iterations: int
    converged: bool
    decrements: tuple[float, ...] = field(default=(), repr=False)


def num_params(n: int) -> int:
    return 2 + 4 * (n - 1) + 3


def path_to_params(path: DiscretePath) -> np.ndarray:
    """Returns the chart coordinates of ``path``.

    The endpoints are projected onto their manifolds: node 0 to
    ``(z, -z, 0)`` with ``z = (x1 - x2)/2`` and node n by dropping the
    component of ``z1`` along ``z2``.
    """
    x = path.positions
    start = (x[0, 0] - x[0, 1]) / 2

    z1, z2 = jacobi_array(x[1:-1])
    interior = np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1)

    z1, z2 = jacobi_array(x[-1])
    z1, z2 = complex(z1), complex(z2)
    if z2 != 0:
        psi = np.angle(z2)
    else:
        psi = np.angle(z1) - np.pi / 2
    rotation = np.exp(-1j * psi)
    end = np.array([psi, (z2 * rotation).real, (z1 * rotation).imag])

    return np.concatenate([start, interior.ravel(), end])


def params_to_positions(params: np.ndarray, n: int) -> np.ndarray:
    """Returns the positions ``(n + 1, 3, 2)`` of the chart coordinates."""
    params = np.asarray(params, dtype=float)
    if params.shape != (num_params(n),):
        raise ValueError(
            f"Expected {num_params(n)} parameters for n = {n}, "
            f"but {params.shape} was given."
        )
    positions = np.empty((n + 1, 3, 2))

    z = complex(params[0], params[1])
    positions[0] = from_complex(np.array([z, -z, 0]))

    interior = params[2:-3].reshape(n - 1, 4)
    z1 = interior[:, 0] + 1j * interior[:, 1]
    z2 = interior[:, 2] + 1j * interior[:, 3]
    positions[1:-1] = jacobi_inverse_array(z1, z2)

    psi, p, q = params[-3:]
    phase = np.exp(1j * psi)
    positions[-1] = jacobi_inverse_array(1j * q * phase, p * phase)
    return positions


def params_displacement(
    params: np.ndarray, reference: np.ndarray, n: int
) -> np.ndarray:
    """Returns the node displacements between two points of the chart.

    The result equals ``params_to_positions(params) -
    params_to_positions(reference)`` but it is computed from the chart
    difference, so its rounding error scales with the displacement and not
    with the positions.
    """
    params = np.asarray(params, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if params.shape != (num_params(n),) or reference.shape != params.shape:
        raise ValueError(
            f"Expected two arrays of {num_params(n)} parameters for n = {n}, "
            f"but {params.shape} and {reference.shape} were given."
        )
    diff = params - reference
    delta = np.empty((n + 1, 3, 2))

    dz = complex(diff[0], diff[1])
    delta[0] = from_complex(np.array([dz, -dz, 0]))

    interior = diff[2:-3].reshape(n - 1, 4)
    dz1 = interior[:, 0] + 1j * interior[:, 1]
    dz2 = interior[:, 2] + 1j * interior[:, 3]
    delta[1:-1] = jacobi_inverse_array(dz1, dz2)

    psi, p, q = reference[-3:]
    d_psi, d_p, d_q = diff[-3:]
    phase = np.exp(1j * params[-3])
    # e^{iψ'} - e^{iψ} without cancellation
    d_phase = 2j * np.sin(d_psi / 2) * np.exp(1j * (psi + d_psi / 2))
    dz1 = 1j * (d_q * phase + q * d_phase)
    dz2 = d_p * phase + p * d_phase
    delta[-1] = jacobi_inverse_array(dz1, dz2)
    return delta


def _jacobi_covector(gradient: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    G = as_complex(gradient)
    G1, G2, G3 = G[..., 0], G[..., 1], G[..., 2]
    return (G3 - G2) / SQRT2, SQRT_2_3 * (G1 - (G2 + G3) / 2)


def params_gradient(params: np.ndarray, gradient: np.ndarray) -> np.ndarray:
    """Pulls the node-wise ``gradient (n + 1, 3, 2)`` back to the chart."""
    n = len(gradient) - 1
    start = gradient[0, 0] - gradient[0, 1]

    G1, G2 = _jacobi_covector(gradient[1:-1])
    interior = np.stack([G1.real, G1.imag, G2.real, G2.imag], axis=-1)

    psi, p, q = params[-3:]
    phase = np.exp(1j * psi)
    z1, z2 = 1j * q * phase, p * phase
    G1, G2 = _jacobi_covector(gradient[-1])
    # dA/dθ = Re(conj(G)·∂z/∂θ) for each real chart coordinate θ
    d_psi = (np.conj(G1) * 1j * z1 + np.conj(G2) * 1j * z2).real
    d_p = (np.conj(G2) * phase).real
    d_q = (np.conj(G1) * 1j * phase).real
    end = np.array([d_psi, d_p, d_q])

    result = np.concatenate([start, interior.ravel(), end])
    assert len(result) == num_params(n)
    return result


def parameter_gradient_norm(path: DiscretePath) -> float:
    """Returns the norm of the action gradient in the chart coordinates.

    It vanishes at a discrete stationary point with free endpoints on the two
    boundary manifolds.
    """
    params = path_to_params(path)
    positions = params_to_positions(params, path.n)
    gradient = gradient_array(positions, path.h)
    return float(np.linalg.norm(params_gradient(params, gradient)))


def angular_momenta(positions: np.ndarray, h: float) -> np.ndarray:
    """Returns the per-step angular momentum ``ω(x_k, (x_{k+1} - x_k)/h)``."""
    steps = np.diff(positions, axis=0) / h
    return np.sum(wedge(positions[:-1], steps), axis=-1)


class _RelativeAction:
    """Action relative to a reference point of the chart, with its gradient."""

    def __init__(self, T: float, n: int, reference: np.ndarray) -> None:
        self.n = n
        self.h = T / n
        self.reference_params = np.array(reference, dtype=float)
        self.reference = params_to_positions(reference, n)
        self.last_value = 0.0
        self.decrements = []
        return

    def __call__(self, params: np.ndarray) -> tuple[float, np.ndarray]:
        delta = params_displacement(params, self.reference_params, self.n)
        value = relative_action(self.reference, delta, self.h)
        gradient = gradient_array(params_to_positions(params, self.n), self.h)
        if not np.isfinite(value):
            return COLLISION_VALUE, np.zeros_like(params)
        return value, params_gradient(params, gradient)

    def callback(self, intermediate_result) -> None:
        positions = params_to_positions(intermediate_result.x, self.n)
        separation = min_separation(positions)
        if separation < SEPARATION_FLOOR:
            raise CollisionError(
                f"The path approached a collision (separation {separation:.3e}).",
                separation=separation,
            )
        self.decrements.append(self.last_value - intermediate_result.fun)
        self.last_value = intermediate_result.fun
        return


def _run(
    method: str, T: float, n: int, params: np.ndarray, tol: float, max_iter: int
) -> tuple[np.ndarray, int, list[float]]:
    objective = _RelativeAction(T, n, params)
    if method == "L-BFGS-B":
        options = dict(
            maxcor=20,
            ftol=0.0,
            gtol=tol / np.sqrt(len(params)),
            maxiter=max_iter,
            maxfun=4 * max_iter,
            maxls=50,
        )
    else:
        options = dict(gtol=tol, norm=2, maxiter=max_iter)

    result = scipy_minimize(
        objective,
        params,
        jac=True,
        method=method,
        callback=objective.callback,
        options=options,
    )
    logger.debug(
        "%s stopped after %d iterations: %s", method, result.nit, result.message
    )
    return result.x, int(result.nit), objective.decrements


def _chart_gradient(params: np.ndarray, n: int, h: float) -> np.ndarray:
    positions = params_to_positions(params, n)
    return params_gradient(params, gradient_array(positions, h))


def newton_polish(
    T: float, n: int, params: np.ndarray, tol: float, max_steps: int = POLISH_STEPS
) -> tuple[np.ndarray, float]:
    """Drives the chart gradient to zero with Newton steps.

    Only gradients are evaluated: Hessian-vector products are central
    differences of the gradient, each Newton system is solved with
    ``scipy.sparse.linalg.cg`` and a step is accepted when it lowers the
    gradient norm, halving it up to ``POLISH_HALVINGS`` times otherwise.
    No action values are compared, so it keeps going after a line search
    stalls on rounding.

    Returns
    -------
    params
        Last accepted chart coordinates.
    gradient_norm
        Euclidean norm of the chart gradient at ``params``.
    """
    h = T / n
    params = np.array(params, dtype=float)
    size = len(params)
    gradient = _chart_gradient(params, n, h)
    gradient_norm = float(np.linalg.norm(gradient))

    for step_count in range(max_steps):
        if gradient_norm < tol:
            break
        center = params

        def hessian_product(vector, center=center):
            length = np.linalg.norm(vector)
            if length == 0:
                return np.zeros(size)
            eps = HESSIAN_STEP / length
            forward = _chart_gradient(center + eps * vector, n, h)
            backward = _chart_gradient(center - eps * vector, n, h)
            return (forward - backward) / (2 * eps)

        hessian = LinearOperator((size, size), matvec=hessian_product, dtype=float)
        step, _ = cg(hessian, -gradient, rtol=1e-4, maxiter=min(10 * size, 5000))

        for _ in range(POLISH_HALVINGS):
            candidate = params + step
            candidate_gradient = _chart_gradient(candidate, n, h)
            candidate_norm = float(np.linalg.norm(candidate_gradient))
            if np.isfinite(candidate_norm) and candidate_norm < gradient_norm:
                break
            step = step / 2
        else:
            logger.debug("Newton step %d was rejected", step_count)
            break

        separation = min_separation(params_to_positions(candidate, n))
        if separation < SEPARATION_FLOOR:
            raise CollisionError(
                f"The path approached a collision (separation {separation:.3e}).",
                separation=separation,
            )
        params, gradient, gradient_norm = candidate, candidate_gradient, candidate_norm
        logger.debug("Newton step %d: gradient norm %.3e", step_count, gradient_norm)

    return params, gradient_norm


def minimize(
    initial: DiscretePath, tol: float = 1e-9, max_iter: int = 20000
) -> MinimizeReport:
    """Minimizes the discrete action with free endpoints on ``E3`` and ``M1``.

    The descent uses ``scipy.optimize.minimize`` with L-BFGS-B on the action
    measured relative to the start of each run, which keeps the line search
    accurate down to tiny gradients. Runs are restarted from their last
    iterate until the gradient norm is below ``tol``; when L-BFGS-B makes no
    progress a nonlinear conjugate gradient run is tried instead. If the
    gradient is still above ``tol`` after the runs, ``newton_polish`` finishes
    the descent on gradients alone.

    Parameters
    ----------
    initial
        Collision-free starting path. Its endpoints are projected onto the
        boundary manifolds.
    tol
        Tolerance on the Euclidean norm of the gradient in the chart
        coordinates.
    max_iter
        Maximum total number of descent iterations.

    Returns
    -------
    MinimizeReport
        ``converged`` is ``False`` if ``max_iter`` was reached first.

    Raises
    ------
    CollisionError
        If the initial path has a collision or an accepted iterate gets closer
        than ``SEPARATION_FLOOR`` to one.
    ConvergenceError
        If neither line search method can decrease the action any further
        and the Newton steps do not bring the gradient below ``tol``.
    """
    if tol <= 0:
        raise ValueError(f"'tol' must be positive, but {tol} was given.")
    if not isinstance(max_iter, int) or max_iter < 1:
        raise ValueError(
            f"'max_iter' must be a positive int, but {max_iter} was given."
        )
    separation = min_separation(initial.positions)
    if separation < SEPARATION_FLOOR:
        raise CollisionError(
            f"The initial path has a collision (separation {separation:.3e}).",
            separation=separation,
        )

    T, n = initial.T, initial.n
    params = path_to_params(initial)
    iterations, decrements = 0, []
    gradient_norm = np.inf
    method = "L-BFGS-B"
    stalled = False

    for _ in range(MAX_RESTARTS):
        params, nit, run_decrements = _run(
            method, T, n, params, tol, max_iter - iterations
        )
        iterations += nit
        decrements += run_decrements

        gradient_norm = float(np.linalg.norm(_chart_gradient(params, n, T / n)))
        logger.info(
            "n = %d: %d iterations, gradient norm %.3e", n, iterations, gradient_norm
        )

        if gradient_norm < tol or iterations >= max_iter:
            break
        if nit == 0 or sum(run_decrements) <= 0:
            if method == "CG":
                stalled = True
                break
            logger.info("L-BFGS-B made no progress, switching to CG")
            method = "CG"
    else:
        logger.warning(
            "n = %d: no convergence after %d restarts (gradient norm %.3e)",
            n,
            MAX_RESTARTS,
            gradient_norm,
        )

    if gradient_norm >= tol and iterations < max_iter:
        logger.info(
            "n = %d: polishing with Newton steps from gradient norm %.3e",
            n,
            gradient_norm,
        )
        params, gradient_norm = newton_polish(T, n, params, tol)
        if stalled and gradient_norm >= tol:
            raise ConvergenceError(
                "Neither the line searches nor the Newton steps can reduce the "
                f"gradient any further (gradient norm {gradient_norm:.3e}).",
                best=DiscretePath(T, params_to_positions(params, n)),
                gap=gradient_norm,
            )

    path = DiscretePath(T, params_to_positions(params, n))
    momenta = angular_momenta(path.positions, path.h)
    return MinimizeReport(
        path=path,
        action=discrete_action(path),
        gradient_norm=gradient_norm,
        min_separation=min_separation(path.positions),
        max_angular_momentum=float(np.max(np.abs(momenta))),
        iterations=iterations,
        converged=gradient_norm < tol,
        decrements=tuple(decrements),
    )


def minimize_multilevel(
    initial: DiscretePath, levels: int = 4, tol: float = 1e-9, max_iter: int = 20000
) -> list[MinimizeReport]:
    """Minimizes on ``levels`` grids, each twice as fine as the previous one.

    Every level starts from the refined minimizer of the previous level.

    Returns
    -------
    reports
        One report per level, the last one on the finest grid.
    """
    if not isinstance(levels, int) or levels < 1:
        raise ValueError(f"'levels' must be a positive int, but {levels} was given.")
    reports = [minimize(initial, tol=tol, max_iter=max_iter)]
    for _ in range(levels - 1):
        path = reports[-1].path.refine(2)
        reports.append(minimize(path, tol=tol, max_iter=max_iter))
    return reports


def observed_order(values: Sequence[float]) -> float:
    """Returns the convergence order fitted to the last three values of a
    sequence computed on grids refined by a factor 2.
    """
    if len(values) < 3:
        raise ValueError(f"At least three values are needed, {len(values)} given.")
    v0, v1, v2 = values[-3:]
    return float(np.log2(abs(v0 - v1) / abs(v1 - v2)))


def path_energy(path: DiscretePath) -> np.ndarray:
    """Returns ``H = ½|v|² - U`` at every node, with Verlet-consistent velocities."""
    velocities = path.velocities()
    kinetic = np.sum(velocities**2, axis=(-2, -1))
    return 0.5 * kinetic - potential_array(path.positions)
