"""Linear stability of periodic orbits through the variational equations."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import minimize_scalar

from ..shapes import State
from ..util.errors import ConvergenceError, IntegrationError
from .integrator import DEFAULT_METHOD, check_initial_state, equations_of_motion

logger = logging.getLogger(__name__)

DIM = 12
PERIOD_BRACKET = 1e-3


def acceleration_jacobian(positions: np.ndarray) -> np.ndarray:
    """Returns the ``(6, 6)`` derivative of the accelerations with respect to
    the flattened positions ``[x1re, ..., x3im]``.
    """
    positions = np.asarray(positions, dtype=float)
    jac = np.zeros((3, 2, 3, 2))
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            diff = positions[j] - positions[i]
            dist = np.linalg.norm(diff)
            block = np.eye(2) / dist**3 - 3 * np.outer(diff, diff) / dist**5
            jac[i, :, j, :] = block
            jac[i, :, i, :] -= block
    return jac.reshape(6, 6)


def variational_equations(t: float, y: np.ndarray) -> np.ndarray:
    """Flow and tangent map ``dΦ/dt = [[0, 1], [∂a/∂x, 0]] Φ`` together.

    ``y`` holds the 12 phase coordinates followed by ``Φ`` flattened row-wise.
    """
    state = y[:DIM]
    phi = y[DIM:].reshape(DIM, DIM)
    dphi = np.concatenate(
        [phi[6:], acceleration_jacobian(state[:6].reshape(3, 2)) @ phi[:6]]
    )
    return np.concatenate([equations_of_motion(t, state), dphi.ravel()])


@dataclass(frozen=True)
class MonodromyResult:
    """Linearization of the time-``period`` flow map.

    Parameters
    ----------
    matrix
        Array of shape ``(12, 12)`` acting on ``[x1re, ..., x3im, v1re, ..., v3im]``.
    eigenvalues
        The 12 eigenvalues of ``matrix``, sorted by their distance to 1.
    period
        Integration time.
    final_state
        The 12 phase coordinates at ``period``.
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    period: float
    final_state: np.ndarray

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.eigenvalues)

    def num_unit_eigenvalues(self, tol: float = 1e-4) -> int:
        return int(np.sum(np.abs(self.eigenvalues - 1) < tol))

    def modulus_deviation(self) -> float:
        """Returns ``max |(|λ| - 1)|``, zero for a completely elliptic orbit."""
        return float(np.max(np.abs(self.moduli - 1)))

    def reciprocal_defect(self) -> float:
        """Returns ``max_λ min_μ |λμ - 1|``, zero when every eigenvalue has
        its reciprocal in the spectrum.
        """
        products = self.eigenvalues[:, None] * self.eigenvalues[None, :]
        return float(np.max(np.min(np.abs(products - 1), axis=1)))

    def to_dict(self) -> dict[str, object]:
        return {
            "period": self.period,
            "determinant": self.determinant,
            "eigenvalues_re": self.eigenvalues.real.tolist(),
            "eigenvalues_im": self.eigenvalues.imag.tolist(),
            "moduli": self.moduli.tolist(),
        }


def monodromy(s0: State, period: float, tol: float = 1e-12) -> MonodromyResult:
    """Integrates the variational equations from the identity over one period.

    Raises
    ------
    CollisionError
        If ``s0`` has a collision.
    IntegrationError
        If the integrator fails before ``period``.
    """
    check_initial_state(s0)
    if not period > 0:
        raise ValueError(f"'period' must be positive, but {period} was given.")

    y0 = np.concatenate([s0.flatten(), np.eye(DIM).ravel()])
    solution = solve_ivp(
        variational_equations,
        (0.0, float(period)),
        y0,
        method=DEFAULT_METHOD,
        rtol=tol,
        atol=tol,
    )
    if solution.status != 0:
        time = float(solution.t[-1])
        raise IntegrationError(
            f"The variational integration stopped at t = {time}: {solution.message}",
            time=time,
        )

    final = solution.y[:, -1]
    matrix = final[DIM:].reshape(DIM, DIM)
    eigenvalues = np.linalg.eigvals(matrix)
    eigenvalues = eigenvalues[np.argsort(np.abs(eigenvalues - 1))]
    result = MonodromyResult(
        matrix=matrix,
        eigenvalues=eigenvalues,
        period=float(period),
        final_state=final[:DIM],
    )
    logger.info(
        "Monodromy over %g: det = %.12f, max ||λ| - 1| = %.3e (%d evaluations)",
        period,
        result.determinant,
        result.modulus_deviation(),
        solution.nfev,
    )
    return result


def refine_period(
    s0: State,
    Tguess: float,
    tol: float = 1e-12,
    bracket: float = PERIOD_BRACKET,
) -> tuple[float, float]:
    """Minimizes the periodicity defect ``|y(T) - y(0)|`` over
    ``T ∈ [Tguess - bracket, Tguess + bracket]``.

    Returns
    -------
    period
        The argmin ``T``.
    defect
        Max-norm defect of the 12 phase coordinates at ``period``.

    Raises
    ------
    ConvergenceError
        If the minimum lies on the edge of the bracket.
    """
    check_initial_state(s0)
    if not Tguess > bracket > 0:
        raise ValueError(
            f"'Tguess' must be larger than 'bracket' > 0, but {Tguess} "
            f"and {bracket} were given."
        )

    y0 = s0.flatten()
    solution = solve_ivp(
        equations_of_motion,
        (0.0, Tguess + bracket),
        y0,
        method=DEFAULT_METHOD,
        rtol=tol,
        atol=tol,
        dense_output=True,
    )
    if solution.status != 0:
        time = float(solution.t[-1])
        raise IntegrationError(
            f"The integration stopped at t = {time}: {solution.message}", time=time
        )

    def defect2(T: float) -> float:
        return float(np.sum((solution.sol(T) - y0) ** 2))

    low, high = Tguess - bracket, Tguess + bracket
    result = minimize_scalar(
        defect2, bounds=(low, high), method="bounded", options=dict(xatol=1e-13)
    )
    period = float(result.x)
    defect = float(np.max(np.abs(solution.sol(period) - y0)))
    if min(period - low, high - period) < 1e-3 * bracket:
        raise ConvergenceError(
            f"The periodicity defect has no minimum in [{low}, {high}].",
            best=period,
            gap=defect,
        )

    logger.info(
        "Refined period %.12f (guess %.8f), defect %.3e", period, Tguess, defect
    )
    return period, defect
