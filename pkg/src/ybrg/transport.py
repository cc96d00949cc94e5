"""Transport operators Z_j and the commutation test that defines integrability.

``Z_j`` carries particle ``j`` once around the periodic system::

    Z_j = S^{j,j+1}(z_j, z_{j+1}+L) ... S^{jN}(z_j, z_N+L)
          S^{j0}(z_j)
          S^{j1}(z_j, z_1) ... S^{j,j-1}(z_j, z_{j-1})

written as an operator product (rightmost factor acts first). Particle ``k``
lives on chain slot ``k``; the impurity on slot 0.
"""
from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .couplings import SpectralProfile, check_shift_property
from .smatrix import difference, impurity_smatrix, particle_smatrix
from .tensor_core import ChainSpec, compose, embed_two_site, residual

__all__ = [
    "TOL_PASS",
    "TransportConfig",
    "WitnessReport",
    "transport_operator",
    "commutation_residual",
    "integrability_witness",
]

TOL_PASS = 1e-9
MAX_TRANSPORT_PARTICLES = 5


@dataclass(frozen=True)
class TransportConfig:
    zs: tuple[float, ...]
    spectral: Callable[[float], float]
    u: float
    L: float = 1.0
    kappa: float | None = None
    pair_argument: Callable[[float, float], float] = difference

    def __post_init__(self):
        object.__setattr__(self, "zs", tuple(float(z) for z in self.zs))
        if not 1 <= len(self.zs) <= MAX_TRANSPORT_PARTICLES:
            raise ValueError(
                f"need 1..{MAX_TRANSPORT_PARTICLES} particles, got {len(self.zs)}")
        if not self.L > 0:
            raise ValueError(f"L must be positive, got {self.L}")
        if self.kappa is None:
            a = getattr(self.spectral, "a", None)
            if a is not None:
                object.__setattr__(self, "kappa", a * self.L)

    @property
    def n_particles(self) -> int:
        return len(self.zs)

    @property
    def chain(self) -> ChainSpec:
        return ChainSpec(self.n_particles)

    def shifted(self, k: int, delta: float) -> "TransportConfig":
        """Copy with ``z_k -> z_k + delta`` (1-based ``k``)."""
        zs = list(self.zs)
        zs[k - 1] += delta
        return dataclasses.replace(self, zs=tuple(zs))

    @classmethod
    def linear(cls, zs: Sequence[float], a: float, c: float, u: float, L: float = 1.0):
        return cls(tuple(zs), SpectralProfile.linear(a, c), u, L, a * L)


def transport_operator(j: int, cfg: TransportConfig) -> np.ndarray:
    n = cfg.n_particles
    if not 1 <= j <= n:
        raise IndexError(f"particle index {j} outside 1..{n}")
    chain = cfg.chain
    f = cfg.spectral
    zs = cfg.zs
    f_j = f(zs[j - 1])

    factors = []
    for k in range(j + 1, n + 1):
        s = particle_smatrix(f_j, f(zs[k - 1] + cfg.L), cfg.u, cfg.pair_argument)
        factors.append(embed_two_site(s, j, k, chain))
    factors.append(embed_two_site(impurity_smatrix(f_j, cfg.u), j, 0, chain))
    for k in range(1, j):
        s = particle_smatrix(f_j, f(zs[k - 1]), cfg.u, cfg.pair_argument)
        factors.append(embed_two_site(s, j, k, chain))
    return compose(factors)


def commutation_residual(i: int, j: int, cfg: TransportConfig) -> float:
    """``|| Z_i(z_j - L) Z_j(z) - Z_j(z_i - L) Z_i(z) ||_F``."""
    if i == j:
        raise ValueError("commutation needs two different particles")
    lhs = transport_operator(i, cfg.shifted(j, -cfg.L)) @ transport_operator(j, cfg)
    rhs = transport_operator(j, cfg.shifted(i, -cfg.L)) @ transport_operator(i, cfg)
    return residual(lhs, rhs)


@dataclass(frozen=True)
class WitnessReport:
    max_residual: float
    shift_residual: float
    tol: float
    residuals: dict

    @property
    def integrable(self) -> bool:
        return self.max_residual < self.tol and self.shift_residual < self.tol

    @property
    def verdict(self) -> str:
        return "integrable" if self.integrable else "non-integrable"


def integrability_witness(cfg: TransportConfig, tol: float = TOL_PASS,
                          sample_points: Sequence[float] | None = None) -> WitnessReport:
    """Check every ordered pair of transport operators and the shift property.

    For ``N = 1`` the commutation condition is vacuous and only the shift
    property is checked. The shift property is sampled at the particle
    positions unless ``sample_points`` is given; a profile without a known
    ``kappa`` fails it.
    """
    residuals = {}
    for i, j in itertools.permutations(range(1, cfg.n_particles + 1), 2):
        residuals[(i, j)] = commutation_residual(i, j, cfg)
    max_res = max(residuals.values(), default=0.0)
    if cfg.kappa is None:
        shift = float("inf")
    else:
        points = cfg.zs if sample_points is None else sample_points
        shift = check_shift_property(cfg.spectral, cfg.L, cfg.kappa, points)
    return WitnessReport(max_res, shift, tol, residuals)
