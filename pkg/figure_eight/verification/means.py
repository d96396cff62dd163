"""Mean-value estimates along a twelfth of the orbit.

For a path of duration ``T`` the time averages ``⟨f⟩ = (1/T)∫₀ᵀ f dt`` of
``U``, ``K``, ``I`` and ``|J|`` are compared with the values of the
equipotential test path of optimal size ``I₀``:

    ⟨U⟩ = ⟨K⟩ < U₀ = K₀,    H > H₀ = -U₀/2,
    ⟨I⟩ < (36ℓ₀²/π²) I₀,    ⟨|J|⟩ < (6ℓ₀/π) J₀,

with ``U₀ = K₀ = ℓ₀² I₀/T²`` and ``J₀ = √(I₀K₀)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np
from scipy.integrate import trapezoid

from ..bounds import optimal_test_action
from ..integrator import Trajectory
from ..minimizer import DiscretePath, discrete_action, path_energy, trapezoid_weights
from .report import CheckResult, lower_check, upper_check

DEFAULT_SAMPLES = 4096
SUNDMAN_FLOOR = -1e-9


@dataclass(frozen=True)
class MeanValues:
    """Time averages over a window of length ``T``.

    ``J_start`` and ``J_end`` are the values of ``J = x·v`` at the ends of the
    window and ``action`` is ``∫(½K + U) dt`` over it.
    """

    T: float
    mean_U: float
    mean_K: float
    mean_I: float
    mean_abs_J: float
    H: float
    J_start: float
    J_end: float
    action: float

    def to_dict(self) -> dict[str, float]:
        return asdict(self)


def mean_values(
    trajectory: Trajectory,
    window: tuple[float, float] | None = None,
    samples: int = DEFAULT_SAMPLES,
) -> MeanValues:
    """Trapezoid means over ``samples`` uniform steps of ``window``.

    ``H`` is the energy of the first sample of the trajectory.
    """
    if window is None:
        window = (float(trajectory.times[0]), trajectory.t_end)
    t0, t1 = window
    if not t1 > t0:
        raise ValueError(f"'window' must be increasing, but {window} was given.")
    grid = np.linspace(t0, t1, samples + 1)
    invariants = trajectory.resample(grid).invariants()
    T = t1 - t0

    def mean(values: np.ndarray) -> float:
        return float(trapezoid(values, grid) / T)

    U, K = mean(invariants["U"]), mean(invariants["K"])
    return MeanValues(
        T=T,
        mean_U=U,
        mean_K=K,
        mean_I=mean(invariants["I"]),
        mean_abs_J=mean(np.abs(invariants["J"])),
        H=float(trajectory.invariants()["H"][0]),
        J_start=float(invariants["J"][0]),
        J_end=float(invariants["J"][-1]),
        action=T * (0.5 * K + U),
    )


def path_means(path: DiscretePath) -> MeanValues:
    """Means with the quadrature of the discrete action.

    The kinetic mean uses forward differences and the other means the
    trapezoid rule, so that ``⟨K⟩ = ⟨U⟩`` holds at a discrete stationary point.
    ``H`` is the mean of the node energies.
    """
    x, h, T = path.positions, path.h, path.T
    weights = trapezoid_weights(path.n) * h / T
    steps = np.diff(x, axis=0)
    invariants = Trajectory.from_path(path).invariants()
    return MeanValues(
        T=T,
        mean_U=float(np.sum(weights * invariants["U"])),
        mean_K=float(np.sum(steps**2) / (h * T)),
        mean_I=float(np.sum(weights * invariants["I"])),
        mean_abs_J=float(np.sum(weights * np.abs(invariants["J"]))),
        H=float(np.sum(weights * path_energy(path))),
        J_start=float(invariants["J"][0]),
        J_end=float(invariants["J"][-1]),
        action=discrete_action(path),
    )


def reference_constants(ell0: float, T: float) -> dict[str, float]:
    """Returns ``I0, U0, K0, H0, J0`` and the test action ``a = -3H0 T``."""
    I0, a = optimal_test_action(ell0, T)
    U0 = ell0**2 * I0 / T**2
    return dict(I0=I0, U0=U0, K0=U0, H0=-U0 / 2, J0=float(np.sqrt(I0 * U0)), a=a)


def _as_means(source: MeanValues | Trajectory | DiscretePath, T: float | None):
    if isinstance(source, MeanValues):
        return source
    if isinstance(source, DiscretePath):
        return path_means(source)
    if isinstance(source, Trajectory):
        t0 = float(source.times[0])
        window = None if T is None else (t0, t0 + T)
        return mean_values(source, window)
    raise TypeError(
        "'source' must be MeanValues, a Trajectory or a DiscretePath, "
        f"but {type(source)} was given."
    )


def lemma8_check(
    source: MeanValues | Trajectory | DiscretePath,
    ell0: float,
    T: float | None = None,
) -> list[CheckResult]:
    """Checks the four mean-value inequalities against the test path.

    Parameters
    ----------
    source
        Means, or the trajectory (window ``[t0, t0 + T]``) or path to take
        them from.
    ell0
        Length of the Euler arc of the equipotential.
    T
        Duration of the window, by default the whole trajectory.
    """
    means = _as_means(source, T)
    ref = reference_constants(ell0, means.T)
    I_bound = 36 * ell0**2 / np.pi**2 * ref["I0"]
    J_bound = 6 * ell0 / np.pi * ref["J0"]
    return [
        upper_check("lemma8.mean_U", means.mean_U, ref["U0"], "<U> < U0"),
        upper_check("lemma8.mean_K", means.mean_K, ref["K0"], "<K> < K0"),
        lower_check("lemma8.H", means.H, ref["H0"], "H > H0"),
        upper_check("lemma8.mean_I", means.mean_I, I_bound, "<I> < 36 l0^2 I0/pi^2"),
        upper_check(
            "lemma8.mean_abs_J", means.mean_abs_J, J_bound, "<|J|> < 6 l0 J0/pi"
        ),
    ]


def lagrange_jacobi_check(
    means: MeanValues, rtol: float = 1e-6, energy_rtol: float | None = None
) -> list[CheckResult]:
    """Checks ``⟨K⟩ = ⟨U⟩ = -2H`` with relative tolerances."""
    energy_rtol = rtol if energy_rtol is None else energy_rtol
    return [
        upper_check(
            "lagrange_jacobi.K_equals_U",
            abs(means.mean_K - means.mean_U) / means.mean_U,
            rtol,
        ),
        upper_check(
            "lagrange_jacobi.U_equals_minus_2H",
            abs(means.mean_U + 2 * means.H) / means.mean_U,
            energy_rtol,
        ),
    ]


def poincare_check(means: MeanValues, period: float | None = None) -> CheckResult:
    """Checks ``⟨K⟩ > (2π/period)² ⟨I⟩`` for the zero-mean periodic orbit.

    The means over a twelfth equal those over the full period ``12T``.
    """
    period = 12 * means.T if period is None else period
    bound = (2 * np.pi / period) ** 2 * means.mean_I
    return lower_check("poincare", means.mean_K, bound, "<K> > (2 pi / period)^2 <I>")


def action_identity_check(
    means: MeanValues, ell0: float, rtol: float = 1e-6
) -> list[CheckResult]:
    """Checks ``A = -3HT`` and ``A < a = -3H0 T``."""
    ref = reference_constants(ell0, means.T)
    identity = abs(means.action + 3 * means.H * means.T) / means.action
    return [
        upper_check("action.identity", identity, rtol, "A = -3HT"),
        upper_check("action.below_test_path", means.action, ref["a"], "A < a"),
    ]


def boundary_dilation_check(means: MeanValues, tol: float = 1e-6) -> CheckResult:
    """Checks ``J(0) = J(T) = 0`` at the symmetric ends of the window."""
    value = max(abs(means.J_start), abs(means.J_end))
    return upper_check("boundary_J", value, tol, "max(|J(0)|, |J(T)|)")


def sundman_margins(positions: np.ndarray, velocities: np.ndarray) -> np.ndarray:
    """Returns ``I·K - J²`` per sample, non-negative by Cauchy-Schwarz."""
    inertia = np.sum(positions**2, axis=(-2, -1))
    kinetic = np.sum(velocities**2, axis=(-2, -1))
    dilation = np.sum(positions * velocities, axis=(-2, -1))
    return inertia * kinetic - dilation**2


def sundman_check(trajectory: Trajectory) -> CheckResult:
    """Checks ``min_t (I K - J²) ≥ 0`` up to round-off."""
    margins = sundman_margins(trajectory.positions, trajectory.velocities)
    worst = int(np.argmin(margins))
    detail = f"worst at t = {trajectory.times[worst]:.6g}"
    return lower_check("sundman", margins[worst], SUNDMAN_FLOOR, detail)
