"""Isometries, relabelings and time reversal acting on three-body configurations.

Every operation is stored as a permutation of the bodies, an orthogonal map
of the plane and a time-reversal flag. Applying ``op`` to positions ``x``
gives ``x'_k = M x_{perm[k]}``; time reversal additionally flips the
velocities of a state.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..shapes import Configuration, State

BODIES = (1, 2, 3)


def _check_body(body: int) -> int:
    if body not in BODIES:
        raise ValueError(f"'body' must be 1, 2 or 3, but {body} was given.")
    return body - 1


def _others(body: int) -> tuple[int, int]:
    index = _check_body(body)
    return tuple(k for k in range(3) if k != index)


@dataclass(frozen=True)
class SymmetryOp:
    """Symmetry of the three-body equations with equal masses.

    Parameters
    ----------
    name
        Label used in logs and ``repr``.
    perm
        0-based body indices, body ``k`` of the image is body ``perm[k]`` of
        the source.
    matrix
        Orthogonal ``2x2`` matrix acting on every position, as nested tuples.
    time_reversal
        Whether the operation reverses time.
    """

    name: str
    perm: tuple[int, int, int] = (0, 1, 2)
    matrix: tuple[tuple[float, float], tuple[float, float]] = ((1.0, 0.0), (0.0, 1.0))
    time_reversal: bool = False

    def __post_init__(self) -> None:
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(
                f"'perm' must be a permutation of (0, 1, 2), but {self.perm} was given."
            )
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (2, 2):
            raise ValueError(f"'matrix' must be 2x2, but {matrix.shape} was given.")
        if not np.allclose(matrix @ matrix.T, np.eye(2), atol=1e-12):
            raise ValueError("'matrix' must be orthogonal.")
        object.__setattr__(self, "perm", tuple(int(k) for k in self.perm))
        object.__setattr__(self, "matrix", tuple(map(tuple, matrix.tolist())))
        return

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix)

    @property
    def reverses_orientation(self) -> bool:
        """Whether the orientation of the triangle, the sign of ``u3``, flips."""
        perm_sign = np.linalg.det(np.eye(3)[list(self.perm)])
        return bool(np.linalg.det(self.array) * perm_sign < 0)

    def apply(self, positions: np.ndarray) -> np.ndarray:
        """Acts on an array of positions of shape ``(..., 3, 2)``."""
        positions = np.asarray(positions, dtype=float)
        return positions[..., list(self.perm), :] @ self.array.T

    def compose(self, other: SymmetryOp) -> SymmetryOp:
        """Returns ``self ∘ other``, i.e. ``other`` is applied first."""
        perm = tuple(other.perm[k] for k in self.perm)
        return SymmetryOp(
            name=f"{self.name}∘{other.name}",
            perm=perm,
            matrix=self.array @ other.array,
            time_reversal=self.time_reversal != other.time_reversal,
        )

    def __matmul__(self, other: SymmetryOp) -> SymmetryOp:
        return self.compose(other)

    def __repr__(self) -> str:
        return f"SymmetryOp({self.name})"


def identity() -> SymmetryOp:
    return SymmetryOp("id")


def permute(order: Sequence[int]) -> SymmetryOp:
    """Relabels the bodies, body ``k`` of the image is body ``order[k - 1]``.

    Parameters
    ----------
    order
        Permutation of ``(1, 2, 3)``.
    """
    order = tuple(order)
    if sorted(order) != list(BODIES):
        raise ValueError(
            f"'order' must be a permutation of (1, 2, 3), but {order} was given."
        )
    return SymmetryOp(f"P{''.join(map(str, order))}", perm=tuple(k - 1 for k in order))


def swap(body_a: int, body_b: int) -> SymmetryOp:
    """Interchanges two bodies."""
    i, j = _check_body(body_a), _check_body(body_b)
    order = [1, 2, 3]
    order[i], order[j] = order[j], order[i]
    return permute(order)


def plane_rotation(angle: float) -> SymmetryOp:
    c, s = np.cos(angle), np.sin(angle)
    return SymmetryOp(f"R({angle:.6g})", matrix=((c, -s), (s, c)))


def plane_reflect(axis: float = 0.0) -> SymmetryOp:
    """Reflection across the line through the origin at angle ``axis``.

    With ``axis = 0`` it is complex conjugation ``(x, y) ↦ (x, -y)``.
    """
    c, s = np.cos(2 * axis), np.sin(2 * axis)
    name = "S" if axis == 0 else f"S({axis:.6g})"
    return SymmetryOp(name, matrix=((c, s), (s, -c)))


def plane_half_turn() -> SymmetryOp:
    """The rotation by π, ``(x, y) ↦ (-x, -y)``."""
    return SymmetryOp("-1", matrix=((-1.0, 0.0), (0.0, -1.0)))


def reflect_meridian(body: int, axis: float = 0.0) -> SymmetryOp:
    """Reflection of the shape sphere across the meridian of ``body``.

    In the plane it interchanges the two other bodies and reflects across
    the line at angle ``axis``. An isosceles configuration with apex ``body``
    on that line is a fixed point.
    """
    j, k = _others(body)
    op = swap(j + 1, k + 1) @ plane_reflect(axis)
    return SymmetryOp(f"s{body}", op.perm, op.matrix)


def half_twist(body: int) -> SymmetryOp:
    """Half twist about the Euler point of ``body``.

    Interchanges the two other bodies and rotates the plane by π. The Euler
    configurations ``x_body = 0`` are its fixed points.
    """
    j, k = _others(body)
    op = swap(j + 1, k + 1) @ plane_half_turn()
    return SymmetryOp(f"H{body}", op.perm, op.matrix)


def time_reverse() -> SymmetryOp:
    return SymmetryOp("T", time_reversal=True)


def apply_symmetry(op: SymmetryOp, c: Configuration) -> Configuration:
    return Configuration(op.apply(c.positions))


def apply_symmetry_state(op: SymmetryOp, s: State) -> State:
    """Acts on a state. Velocities change sign when ``op`` reverses time."""
    velocity = op.apply(s.v.positions)
    if op.time_reversal:
        velocity = -velocity
    return State(apply_symmetry(op, s.q), Configuration(velocity))


def euler_junction(positions: np.ndarray) -> SymmetryOp:
    """Returns the half twist fixing a collinear configuration.

    The middle body is the one closest to the center of mass.
    """
    positions = np.asarray(positions, dtype=float)
    middle = int(np.argmin(np.linalg.norm(positions, axis=-1)))
    return half_twist(middle + 1)


def isosceles_junction(positions: np.ndarray) -> SymmetryOp:
    """Returns the meridian reflection fixing an isosceles configuration.

    The apex is the body whose two adjacent sides are closest in length, the
    reflection axis is the line through the origin and the apex.
    """
    positions = np.asarray(positions, dtype=float)
    mismatch = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        r_ij = np.linalg.norm(positions[i] - positions[j])
        r_ik = np.linalg.norm(positions[i] - positions[k])
        mismatch.append(abs(r_ij - r_ik))
    apex = int(np.argmin(mismatch))
    axis = float(np.arctan2(positions[apex, 1], positions[apex, 0]))
    return reflect_meridian(apex + 1, axis=axis)
