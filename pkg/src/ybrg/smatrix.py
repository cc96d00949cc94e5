"""Particle-impurity and particle-particle S-matrices (trigonometric XXZ R-matrix).

Both S-matrices share one 4x4 form::

    [[1, 0, 0, 0],
     [0, b, c, 0],
     [0, c, b, 0],
     [0, 0, 0, 1]]

    b = sinh(x) / sinh(x + iu),   c = i sin(u) / sinh(x + iu)

with ``x = f(z_j)`` for the impurity matrix and ``x = f(z_i) - f(z_j)`` for the
particle-particle matrix. The block is symmetric under exchange of the two
tensor factors, so ``S^{ij}`` and ``S^{ji}`` at the same argument embed to the
same chain operator.
"""
from __future__ import annotations

import operator
from typing import Callable

import numpy as np

from .errors import SingularSMatrix
from .tensor_core import ChainSpec, compose, embed_two_site, identity, residual

__all__ = [
    "SING_EPS",
    "mixing_block",
    "impurity_smatrix",
    "particle_smatrix",
    "inverse_property_residual",
    "ybe_impurity_residual",
    "ybe_particle_residual",
]

SING_EPS = 1e-12

# (f_i, f_j) -> argument of S^{ij}; overridable only for negative controls
PairArgument = Callable[[float, float], float]
difference = operator.sub


def mixing_block(x: float, u: float, eps: float = SING_EPS) -> tuple[complex, complex]:
    """Return ``(b, c)``, the entries of the 2x2 spin-exchange block."""
    denom = np.sinh(complex(x, u))
    if not abs(denom) > eps:
        raise SingularSMatrix(
            f"|sinh(x + iu)| = {abs(denom):.3e} <= {eps:.0e} at x={x!r}, u={u!r}")
    b = np.sinh(x) / denom
    c = 1j * np.sin(u) / denom
    return complex(b), complex(c)


def _from_block(b: complex, c: complex) -> np.ndarray:
    m = np.eye(4, dtype=complex)
    m[1, 1] = m[2, 2] = b
    m[1, 2] = m[2, 1] = c
    return m


def impurity_smatrix(f_val: float, u: float, eps: float = SING_EPS) -> np.ndarray:
    """Particle-impurity S-matrix ``S^{j0}`` at spectral value ``f_val``.

    First tensor factor is the particle, second the impurity.
    """
    return _from_block(*mixing_block(f_val, u, eps))


def particle_smatrix(f_i: float, f_j: float, u: float,
                     pair_argument: PairArgument = difference,
                     eps: float = SING_EPS) -> np.ndarray:
    """Particle-particle S-matrix ``S^{ij}``; depends only on ``f_i - f_j``."""
    return _from_block(*mixing_block(pair_argument(f_i, f_j), u, eps))


def inverse_property_residual(x: float, u: float, chain: ChainSpec | None = None,
                              slots: tuple[int, int] = (1, 0)) -> float:
    """Frobenius distance of ``S(-x) S(x)`` from the identity on the chain."""
    chain = chain or ChainSpec(1)
    a, b = slots
    fwd = embed_two_site(impurity_smatrix(x, u), a, b, chain)
    back = embed_two_site(impurity_smatrix(-x, u), a, b, chain)
    return residual(compose([back, fwd]), identity(chain))


def ybe_impurity_residual(z_i: float, z_j: float, spectral: Callable[[float], float],
                          u: float, pair_argument: PairArgument = difference) -> float:
    """Residual of ``S^{j0} S^{i0} S^{ij} = S^{ij} S^{i0} S^{j0}`` on an N=2 chain.

    Particle i sits on slot 1, particle j on slot 2, impurity on slot 0.
    """
    chain = ChainSpec(2)
    f_i, f_j = spectral(z_i), spectral(z_j)
    s_i0 = embed_two_site(impurity_smatrix(f_i, u), 1, 0, chain)
    s_j0 = embed_two_site(impurity_smatrix(f_j, u), 2, 0, chain)
    s_ij = embed_two_site(particle_smatrix(f_i, f_j, u, pair_argument), 1, 2, chain)
    lhs = compose([s_j0, s_i0, s_ij])
    rhs = compose([s_ij, s_i0, s_j0])
    return residual(lhs, rhs)


def ybe_particle_residual(z_i: float, z_j: float, z_k: float,
                          spectral: Callable[[float], float], u: float,
                          pair_argument: PairArgument = difference) -> float:
    """Residual of ``S^{ij} S^{ik} S^{jk} = S^{jk} S^{ik} S^{ij}`` on an N=3 chain."""
    chain = ChainSpec(3)
    f_i, f_j, f_k = spectral(z_i), spectral(z_j), spectral(z_k)
    s_ij = embed_two_site(particle_smatrix(f_i, f_j, u, pair_argument), 1, 2, chain)
    s_ik = embed_two_site(particle_smatrix(f_i, f_k, u, pair_argument), 1, 3, chain)
    s_jk = embed_two_site(particle_smatrix(f_j, f_k, u, pair_argument), 2, 3, chain)
    lhs = compose([s_ij, s_ik, s_jk])
    rhs = compose([s_jk, s_ik, s_ij])
    return residual(lhs, rhs)
