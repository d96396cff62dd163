from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import numpy as np

from ..shapes import Configuration, pairwise_distances, potential_gradient
from ..util.io import read_json, write_json

# zero-sum tolerance of the nodes, relative to their size
ZERO_SUM_TOL = 1e-12


class DiscretePath:
    """Path in the configuration space sampled at ``t_k = k T/n``, ``k = 0, ..., n``.

    The unknown of the action minimization. Node ``0`` is meant to lie on the
    Euler manifold ``{(z, -z, 0)}`` and node ``n`` on the isosceles manifold
    ``r12 = r13``; use ``boundary_residuals`` to check it.

    Parameters
    ----------
    T
        Duration of the path.
    positions
        Array of shape ``(n + 1, 3, 2)`` with ``n >= 1``.
    """

    def __init__(self, T: float, positions: np.ndarray) -> None:
        if not isinstance(T, (float, int)) or isinstance(T, bool):
            raise TypeError(f"'T' must be a float, but {type(T)} was given.")
        if not T > 0:
            raise ValueError(f"'T' must be positive, but {T} was given.")

        positions = np.array(positions, dtype=float)
        if positions.ndim != 3 or positions.shape[1:] != (3, 2):
            raise ValueError(
                "'positions' must have shape (n + 1, 3, 2), "
                f"but {positions.shape} was given."
            )
        if len(positions) < 2:
            raise ValueError("A path needs at least two nodes.")
        if not np.all(np.isfinite(positions)):
            raise ValueError("'positions' must contain finite values.")

        scale = max(1.0, float(np.max(np.abs(positions))))
        residual = float(np.max(np.abs(positions.sum(axis=1))))
        if residual > ZERO_SUM_TOL * scale:
            raise ValueError(
                f"Every node must add up to zero, but a residual {residual:.3e} "
                "was found."
            )

        positions.setflags(write=False)
        self._T = float(T)
        self._positions = positions
        return

    @classmethod
    def from_nodes(cls, T: float, nodes: Sequence[Configuration]) -> DiscretePath:
        return cls(T, np.array([node.positions for node in nodes]))

    @classmethod
    def from_dict(cls, data: dict[str, object]) -> DiscretePath:
        """Loads ``{"T": T, "nodes": [[x1re, x1im, ..., x3im], ...]}``."""
        if "T" not in data or "nodes" not in data:
            raise ValueError("A path needs the keys 'T' and 'nodes'.")
        nodes = np.array(data["nodes"], dtype=float)
        if nodes.ndim != 2 or nodes.shape[1] != 6:
            raise ValueError(
                f"'nodes' must be a list of 6 numbers per node, but {nodes.shape} "
                "was given."
            )
        return cls(float(data["T"]), nodes.reshape(-1, 3, 2))

    @classmethod
    def from_json(cls, filename: str | Path) -> DiscretePath:
        return cls.from_dict(read_json(filename))

    def to_dict(self) -> dict[str, object]:
        return {"T": self.T, "nodes": self._positions.reshape(-1, 6)}

    def to_json(self, filename: str | Path) -> None:
        write_json(self.to_dict(), filename)
        return

    @property
    def T(self) -> float:
        return self._T

    @property
    def n(self) -> int:
        """Number of time steps."""
        return len(self._positions) - 1

    @property
    def h(self) -> float:
        return self._T / self.n

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0, self._T, self.n + 1)

    @property
    def nodes(self) -> list[Configuration]:
        return [Configuration(p) for p in self._positions]

    def node(self, k: int) -> Configuration:
        return Configuration(self._positions[k])

    def with_positions(self, positions: np.ndarray) -> DiscretePath:
        return DiscretePath(self._T, positions)

    def refine(self, factor: int = 2) -> DiscretePath:
        """Returns the path on a grid ``factor`` times finer.

        The new nodes are linear interpolations in time, so the endpoints and
        the zero-sum constraint are preserved.
        """
        if not isinstance(factor, int) or factor < 1:
            raise ValueError(
                f"'factor' must be a positive int, but {factor} was given."
            )
        index = np.arange(self.n * factor + 1) / factor
        lower = np.minimum(np.floor(index).astype(int), self.n - 1)
        frac = (index - lower)[:, None, None]
        positions = (1 - frac) * self._positions[lower]
        positions += frac * self._positions[lower + 1]
        return DiscretePath(self._T, positions)

    def velocities(self) -> np.ndarray:
        """Returns node velocities consistent with the Störmer-Verlet scheme.

        Interior nodes use central differences. The endpoints use
        ``v_0 = (x_1 - x_0)/h - (h/2)∇U(x_0)`` and
        ``v_n = (x_n - x_{n-1})/h + (h/2)∇U(x_n)``.
        """
        x, h = self._positions, self.h
        velocities = np.empty_like(x)
        velocities[1:-1] = (x[2:] - x[:-2]) / (2 * h)
        velocities[0] = (x[1] - x[0]) / h - 0.5 * h * potential_gradient(x[0])
        velocities[-1] = (x[-1] - x[-2]) / h + 0.5 * h * potential_gradient(x[-1])
        return velocities

    def __repr__(self) -> str:
        return f"DiscretePath(T={self._T!r}, n={self.n})"


def boundary_residuals(path: DiscretePath) -> dict[str, float]:
    """Returns how far the endpoints are from their boundary manifolds.

    Returns
    -------
    residuals
        ``"euler"`` is ``|x3|`` at node 0, which vanishes exactly on the
        manifold ``{(z, -z, 0)}``. ``"isosceles"`` is ``|r12 - r13|`` at node n.
    """
    start, end = path.positions[0], path.positions[-1]
    _, r31, r12 = pairwise_distances(end)
    return {
        "euler": float(np.linalg.norm(start[2])),
        "isosceles": float(abs(r12 - r31)),
    }
