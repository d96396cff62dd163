"""Closed-form action values that exclude collisions from the minimizer.

Any path from ``E3`` to ``M1`` through a binary collision has action at least
``A2(T)``, and through a triple collision at least ``A3(T)``. The
equipotential test path has action ``a(T)``; ``a < A2`` rules binary
collisions out of the minimizer, which holds iff ``ℓ₀ < π/5``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..shapes import SCALED_U_BINARY, SCALED_U_EULER, SCALED_U_LAGRANGE

DEFAULT_PERIOD = 2 * np.pi / 12

# published values for T = 2π/12, with "a" taken from its closed form
# (225πℓ₀²/32)^(1/3); the printed digits 2.0359863 are 1e-5 above it
SIMO_ACTION_VALUES = {
    "A2": 2.0583255,
    "a": 2.0359763,
    "A_min": 2.0309938,
    "A3": 5.39433,
}


def _check_period(T: float) -> None:
    if not T > 0:
        raise ValueError(f"'T' must be positive, but {T} was given.")
    return


def scaled_potential_constants() -> dict[str, float]:
    """Returns the scaled potential constants ``Ũ_E`` (Euler points), ``Ũ₂``
    (binary collision bound) and ``Ũ₃`` (Lagrange points).
    """
    return {"U_E": SCALED_U_EULER, "U_2": SCALED_U_BINARY, "U_3": SCALED_U_LAGRANGE}


def _kepler_bound(scaled_u: float, T: float) -> float:
    # Gordon's bound for a Kepler problem of strength ½Ũ over half a period
    factor = (2 * np.pi**2 * 2 * T) ** (1 / 3)
    return 1.5 * factor * (0.5 * scaled_u) ** (2 / 3)


def collision_bound_A2(T: float) -> float:
    """Returns the lower bound ``A2(T)`` on the action of collision paths.

    For ``T = 2π/12`` it is ``(3/2)^(2/3)·π/2 ≈ 2.0583255``.
    """
    _check_period(T)
    return float(_kepler_bound(SCALED_U_BINARY, T))


def triple_collision_bound_A3(T: float) -> float:
    """Returns ``A3(T) = (3√2)^(2/3)·A2(T)``, the bound for triple collisions."""
    _check_period(T)
    return float(_kepler_bound(SCALED_U_LAGRANGE, T))


def test_action(I0: float, ell0: float, T: float) -> float:
    """Returns the action of the equipotential test path at size ``I0``.

    The shape moves at the constant speed ``ℓ₀√I0/T`` and the potential stays
    at ``Ũ_E/√I0``, so ``A(I0) = ℓ₀² I0/(2T) + Ũ_E T/√I0``.
    """
    if not I0 > 0:
        raise ValueError(f"'I0' must be positive, but {I0} was given.")
    _check_period(T)
    kinetic = 0.5 * (ell0 * np.sqrt(I0) / T) ** 2 * T
    return float(kinetic + SCALED_U_EULER * T / np.sqrt(I0))


# not a pytest test
test_action.__test__ = False


def optimal_test_action(ell0: float, T: float) -> tuple[float, float]:
    """Minimizes ``test_action`` over the size ``I0``.

    Returns
    -------
    I0_star
        ``(Ũ_E/ℓ₀²)^(2/3) T^(4/3)``.
    a
        ``(3/2) Ũ_E^(2/3) ℓ₀^(2/3) T^(1/3)``.
    """
    if not ell0 > 0:
        raise ValueError(f"'ell0' must be positive, but {ell0} was given.")
    _check_period(T)
    I0_star = (SCALED_U_EULER / ell0**2) ** (2 / 3) * T ** (4 / 3)
    a = 1.5 * SCALED_U_EULER ** (2 / 3) * ell0 ** (2 / 3) * T ** (1 / 3)
    return float(I0_star), float(a)


@dataclass(frozen=True)
class BoundsReport:
    T: float
    A2: float
    A3: float
    I0_star: float
    a: float
    ell0: float
    gate_passed: bool

    def to_dict(self) -> dict[str, float | bool]:
        return asdict(self)


def bounds_report(ell0: float, T: float = DEFAULT_PERIOD) -> BoundsReport:
    """Collects the bounds for period ``T`` and the test action for ``ell0``.

    ``gate_passed`` is ``a < A2``, i.e. whether the minimizer is guaranteed to
    be collision free.
    """
    I0_star, a = optimal_test_action(ell0, T)
    A2 = collision_bound_A2(T)
    return BoundsReport(
        T=float(T),
        A2=A2,
        A3=triple_collision_bound_A3(T),
        I0_star=I0_star,
        a=a,
        ell0=float(ell0),
        gate_passed=bool(a < A2),
    )


def simo_action_values() -> dict[str, float]:
    """Returns the published ``A2``, ``a``, ``A_min`` and ``A3`` for ``T = 2π/12``."""
    return dict(SIMO_ACTION_VALUES)
