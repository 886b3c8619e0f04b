"""
Point configurations on the real projective line and dihedral coordinates.

A projective point is a float; ``math.inf`` (either sign) is the point at
infinity. Dihedral coordinates are u_{i,j} = [i, i+1 | j+1, j] with

    [a b | c d] = (z_a - z_c)(z_b - z_d) / ((z_a - z_d)(z_b - z_c)).
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chords import Chord, _wrap, enumerate_chords
from .errors import DegenerateConfigurationError, InvalidArgumentError, InvalidSizeError

INF = math.inf


def is_infinite(z: float) -> bool:
    return math.isinf(z)


def cross_ratio(a: float, b: float, c: float, d: float) -> float:
    """[a b | c d]; a point at infinity is cancelled before any division."""
    pts = (a, b, c, d)
    if any(math.isnan(p) for p in pts):
        raise DegenerateConfigurationError("NaN is not a point of the projective line")
    infinite = [k for k, p in enumerate(pts) if is_infinite(p)]
    if len(infinite) > 1:
        raise DegenerateConfigurationError("at most one point may be at infinity")
    finite = [p for p in pts if not is_infinite(p)]
    if len(set(finite)) != len(finite):
        raise DegenerateConfigurationError(f"repeated points in {pts}")
    if not infinite:
        return (a - c) * (b - d) / ((a - d) * (b - c))
    # drop the two factors containing the infinite point; their ratio tends to 1
    k = infinite[0]
    if k == 0:
        return (b - d) / (b - c)
    if k == 1:
        return (a - c) / (a - d)
    if k == 2:
        return (b - d) / (a - d)
    return (a - c) / (b - c)


@dataclass(frozen=True)
class PointConfig:
    """n distinct points with z_1 < z_2 < ... < z_n < z_1 on the real circle."""

    z: tuple[float, ...]

    def __post_init__(self):
        z = tuple(float(p) for p in self.z)
        object.__setattr__(self, "z", z)
        n = len(z)
        if n < 4:
            raise InvalidSizeError(f"need at least 4 points, got {n}")
        if any(math.isnan(p) for p in z):
            raise DegenerateConfigurationError("NaN in configuration")
        if sum(is_infinite(p) for p in z) > 1:
            raise DegenerateConfigurationError("more than one point at infinity")
        finite = [p for p in z if not is_infinite(p)]
        if len(set(finite)) != len(finite):
            raise DegenerateConfigurationError("points are not pairwise distinct")
        # infinity counts as +inf: a cyclically increasing sequence has exactly one descent
        key = [INF if is_infinite(p) else p for p in z]
        descents = sum(key[(t + 1) % n] < key[t] for t in range(n))
        if descents != 1:
            raise DegenerateConfigurationError("points are not in the standard cyclic order")

    @property
    def n(self) -> int:
        return len(self.z)

    def point(self, i: int) -> float:
        """z_i with the index taken mod n in 1..n."""
        return self.z[_wrap(i, self.n) - 1]

    def relabel(self, shift: int) -> "PointConfig":
        """Configuration z'_i = z_{i+shift}; u'_{i,j} = u_{i+shift, j+shift}."""
        return PointConfig(tuple(self.point(i + shift) for i in range(1, self.n + 1)))


def dihedral_coordinate(cfg: PointConfig, i: int, j: int) -> float:
    c = Chord(i, j, cfg.n)
    a, b = c.i, c.j
    return cross_ratio(cfg.point(a), cfg.point(a + 1), cfg.point(b + 1), cfg.point(b))


class CoordMap(Mapping):
    """Chord -> value of u at a configuration. Keys may be Chords or (i, j) pairs."""

    def __init__(self, n: int, values: dict[Chord, float]):
        self.n = n
        self._values = dict(values)

    def _key(self, key) -> Chord:
        if isinstance(key, Chord):
            if key.n != self.n:
                raise InvalidArgumentError(f"chord of the {key.n}-gon used on an {self.n}-gon map")
            return key
        i, j = key
        return Chord(i, j, self.n)

    def __getitem__(self, key) -> float:
        return self._values[self._key(key)]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def product(self, chords) -> float:
        return math.prod(self[c] for c in chords)

    def to_json(self) -> dict[str, float]:
        return {f"{c.i},{c.j}": v for c, v in sorted(self._values.items())}


def dihedral_coords(cfg: PointConfig) -> CoordMap:
    return CoordMap(cfg.n, {c: dihedral_coordinate(cfg, c.i, c.j) for c in enumerate_chords(cfg.n)})


@dataclass(frozen=True)
class StarCoords:
    """x_j = u_{1,j} for j = 3..n-1, each strictly inside (0, 1)."""

    n: int
    x: tuple[float, ...]

    def __post_init__(self):
        x = tuple(float(v) for v in self.x)
        object.__setattr__(self, "x", x)
        if self.n < 4:
            raise InvalidSizeError(f"need n >= 4, got {self.n}")
        if len(x) != self.n - 3:
            raise InvalidArgumentError(f"expected {self.n - 3} star coordinates, got {len(x)}")
        if not all(0.0 < v < 1.0 for v in x):
            raise InvalidArgumentError(f"star coordinates must lie in (0, 1): {x}")

    @classmethod
    def of(cls, values: Sequence[float]) -> "StarCoords":
        return cls(len(values) + 3, tuple(values))

    def __getitem__(self, j: int) -> float:
        """u_{1,j}."""
        if not 3 <= j <= self.n - 1:
            raise IndexError(j)
        return self.x[j - 3]


def config_from_star(s: StarCoords) -> PointConfig:
    """Gauge z_1 = inf, z_2 = 0, z_n = 1 and z_j = x_j x_{j+1} ... x_{n-1}."""
    n = s.n
    z = [0.0] * (n + 1)
    z[n] = 1.0
    for j in range(n - 1, 2, -1):
        z[j] = s[j] * z[j + 1]
    z[1], z[2] = INF, 0.0
    return PointConfig(tuple(z[1:]))


def sample_star(n: int, seed: int, margin: float = 1e-3) -> StarCoords:
    if n < 4:
        raise InvalidSizeError(f"need n >= 4, got {n}")
    if not 0.0 < margin < 0.5:
        raise InvalidArgumentError(f"margin must be in (0, 1/2), got {margin}")
    rng = np.random.default_rng(seed)
    return StarCoords(n, tuple(rng.uniform(margin, 1.0 - margin, n - 3).tolist()))


def sample_cell(n: int, seed: int, margin: float = 1e-3) -> PointConfig:
    """Deterministic point of the open standard cell drawn through star coordinates."""
    return config_from_star(sample_star(n, seed, margin))
