"""Ordered-sector amplitudes of the N-particle wavefunction.

An ordering is a tuple holding every label 0..N exactly once (0 is the
impurity), read left to right as spatial order. Swapping two neighbours is an
edge of the ordering graph; the edge carries the S-matrix mapping the amplitude
before the swap to the amplitude after it:

* particle ``j`` passes the impurity from the left, ``(.., j, 0, ..) -> (.., 0, j, ..)``:
  ``S^{j0}(f(z_j))``; the reverse move uses its inverse ``S^{j0}(-f(z_j))``.
* particles exchange, ``(.., i, j, ..) -> (.., j, i, ..)``: ``S^{ij}(z_i, z_j)``.

Amplitude vectors use the chain basis of :mod:`ybrg.tensor_core`: spin labels
belong to particles, so particle ``j`` is always slot ``j`` whatever the
ordering.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import PathMismatch, PropagationDefect
from .smatrix import difference, impurity_smatrix, particle_smatrix
from .tensor_core import ChainSpec, embed_two_site, identity, residual

__all__ = [
    "Ordering",
    "AmplitudeField",
    "validate_ordering",
    "adjacent_relation",
    "path_operator",
    "shortest_path",
    "propagate_amplitude",
    "consistency_residual",
    "uniform_grid",
    "extend_one_particle",
    "round_trip_residual",
    "pbc_residual",
]

Ordering = tuple
MAX_CONSISTENCY_PARTICLES = 4


def validate_ordering(ordering: Sequence[int]) -> Ordering:
    ordering = tuple(int(x) for x in ordering)
    if sorted(ordering) != list(range(len(ordering))) or len(ordering) < 2:
        raise ValueError(f"not an ordering of 0..N: {ordering}")
    return ordering


def adjacent_relation(ordering: Sequence[int], p: int, zs: Sequence[float],
                      spectral: Callable[[float], float], u: float,
                      pair_argument=difference) -> tuple[Ordering, np.ndarray]:
    """Swap positions ``p`` and ``p + 1``; return the new ordering and edge operator."""
    ordering = validate_ordering(ordering)
    n = len(ordering) - 1
    if len(zs) != n:
        raise ValueError(f"ordering has {n} particles but {len(zs)} positions given")
    if not 0 <= p < n:
        raise IndexError(f"swap position {p} outside 0..{n - 1}")
    chain = ChainSpec(n)
    left, right = ordering[p], ordering[p + 1]
    new = ordering[:p] + (right, left) + ordering[p + 2:]

    if right == 0:
        s = impurity_smatrix(spectral(zs[left - 1]), u)
        op = embed_two_site(s, left, 0, chain)
    elif left == 0:
        s = impurity_smatrix(-spectral(zs[right - 1]), u)
        op = embed_two_site(s, right, 0, chain)
    else:
        s = particle_smatrix(spectral(zs[left - 1]), spectral(zs[right - 1]), u,
                             pair_argument)
        op = embed_two_site(s, left, right, chain)
    return new, op


def path_operator(start: Sequence[int], path: Sequence[int], zs, spectral, u,
                  pair_argument=difference) -> tuple[Ordering, np.ndarray]:
    """Follow adjacent swaps at positions ``path``; return end ordering and product."""
    ordering = validate_ordering(start)
    op = identity(ChainSpec(len(ordering) - 1))
    for p in path:
        ordering, edge = adjacent_relation(ordering, p, zs, spectral, u, pair_argument)
        op = edge @ op
    return ordering, op


def shortest_path(start: Sequence[int], target: Sequence[int]) -> list[int]:
    """Bubble-sort swap positions taking ``start`` to ``target`` (minimal length)."""
    start, target = validate_ordering(start), validate_ordering(target)
    if len(start) != len(target):
        raise PathMismatch("orderings of different length")
    rank = {label: i for i, label in enumerate(target)}
    seq = [rank[x] for x in start]
    path = []
    changed = True
    while changed:
        changed = False
        for p in range(len(seq) - 1):
            if seq[p] > seq[p + 1]:
                seq[p], seq[p + 1] = seq[p + 1], seq[p]
                path.append(p)
                changed = True
    return path


def propagate_amplitude(reference: np.ndarray, reference_ordering: Sequence[int],
                        target: Sequence[int], path: Sequence[int] | None,
                        zs, spectral, u, pair_argument=difference) -> np.ndarray:
    """Amplitude at ``target`` obtained from the reference amplitude along ``path``.

    ``path=None`` uses :func:`shortest_path`.
    """
    target = validate_ordering(target)
    if path is None:
        path = shortest_path(reference_ordering, target)
    end, op = path_operator(reference_ordering, path, zs, spectral, u, pair_argument)
    if end != target:
        raise PathMismatch(f"path ends at {end}, expected {target}")
    return op @ np.asarray(reference, dtype=complex)


def _elementary_loops(n_positions: int):
    """Pairs of swap words with equal endpoints: involution, far commutation, braid."""
    for p in range(n_positions):
        yield (p, p), ()
    for p, q in itertools.combinations(range(n_positions), 2):
        if q - p >= 2:
            yield (p, q), (q, p)
    for p in range(n_positions - 1):
        yield (p, p + 1, p), (p + 1, p, p + 1)


def consistency_residual(n_particles: int, zs, spectral, u,
                         pair_argument=difference) -> float:
    """Largest loop defect over the whole ordering graph.

    Every ordering is used as a base point for every elementary loop (the
    involution, far-commutation and braid relations of adjacent swaps, which
    generate all loops); the defect is the Frobenius distance between the two
    path products. Zero means amplitudes are path independent.
    """
    if not 1 <= n_particles <= MAX_CONSISTENCY_PARTICLES:
        raise ValueError(f"n_particles must be in 1..{MAX_CONSISTENCY_PARTICLES}")
    if len(zs) != n_particles:
        raise ValueError("need one position per particle")
    edges = {}

    def edge(ordering, p):
        key = (ordering, p)
        if key not in edges:
            edges[key] = adjacent_relation(ordering, p, zs, spectral, u, pair_argument)
        return edges[key]

    def word(ordering, swaps):
        op = identity(ChainSpec(n_particles))
        for p in swaps:
            ordering, e = edge(ordering, p)
            op = e @ op
        return op

    worst = 0.0
    for ordering in itertools.permutations(range(n_particles + 1)):
        for w1, w2 in _elementary_loops(n_particles):
            worst = max(worst, residual(word(ordering, w1), word(ordering, w2)))
    return worst


# -- one-particle sector: f^{10}(z - L) = S^{10}(z) f^{10}(z) -------------------

def uniform_grid(z0: float, L: float, points: int = 64) -> np.ndarray:
    """``points`` equally spaced samples of the half-open window ``[z0, z0 + L)``."""
    return z0 + L * np.arange(points) / points


@dataclass(frozen=True)
class AmplitudeField:
    """Samples of ``f^{10}`` at ``grid + k L`` for every ``k`` in ``periods``.

    ``values[m, g]`` is the 4-vector (particle slot first, impurity second) at
    ``grid[g] + periods[m] * L``.
    """

    grid: np.ndarray
    L: float
    periods: np.ndarray
    values: np.ndarray

    def at(self, k: int) -> np.ndarray:
        idx = int(np.searchsorted(self.periods, k))
        if idx >= len(self.periods) or self.periods[idx] != k:
            raise KeyError(f"period {k} not present")
        return self.values[idx]

    def points(self, k: int) -> np.ndarray:
        return self.grid + k * self.L


def _smatrices(zpts, spectral, u, sign=1.0):
    return np.stack([impurity_smatrix(sign * spectral(z), u) for z in zpts])


def _step_down(vals, zpts, spectral, u):
    # f(z - L) = S(phi(z)) f(z)
    return np.einsum("gab,gb->ga", _smatrices(zpts, spectral, u), vals)


def _step_up(vals, zpts_up, spectral, u):
    # f(z + L) = S(phi(z + L))^{-1} f(z) = S(-phi(z + L)) f(z)
    return np.einsum("gab,gb->ga", _smatrices(zpts_up, spectral, u, -1.0), vals)


def extend_one_particle(initial, grid, n_periods: int, spectral, u: float,
                        L: float, recheck_tol: float = 1e-10) -> AmplitudeField:
    """Extend window data ``n_periods`` periods down (``z - kL``) and up (``z + kL``).

    ``initial`` has shape ``(len(grid), 4)``. The result is re-checked against
    the difference equation at every grid point; a defect above
    ``recheck_tol`` raises :class:`PropagationDefect`.
    """
    grid = np.asarray(grid, dtype=float)
    vals0 = np.asarray(initial, dtype=complex)
    if vals0.shape != (len(grid), 4):
        raise ValueError(f"initial data must have shape ({len(grid)}, 4)")
    if not np.all(np.isfinite(vals0)):
        raise ValueError("initial data must be finite")
    if np.any(np.diff(grid) <= 0) or grid[-1] - grid[0] >= L:
        raise ValueError("grid must be strictly increasing inside one window")

    down = [vals0]
    for k in range(0, -n_periods, -1):
        down.append(_step_down(down[-1], grid + k * L, spectral, u))
    up = [vals0]
    for k in range(0, n_periods):
        up.append(_step_up(up[-1], grid + (k + 1) * L, spectral, u))
    values = np.stack(down[::-1] + up[1:])
    periods = np.arange(-n_periods, n_periods + 1)
    field = AmplitudeField(grid, float(L), periods, values)

    defect = pbc_residual(field, spectral, u)
    if not defect <= recheck_tol:
        raise PropagationDefect(f"extended field violates the difference equation by {defect:.3e}")
    return field


def round_trip_residual(initial, grid, n_periods: int, spectral, u, L) -> float:
    """Step ``n_periods`` down then back up; max 2-norm distance from the start."""
    grid = np.asarray(grid, dtype=float)
    vals = np.asarray(initial, dtype=complex)
    for k in range(0, -n_periods, -1):
        vals = _step_down(vals, grid + k * L, spectral, u)
    for k in range(-n_periods, 0):
        vals = _step_up(vals, grid + (k + 1) * L, spectral, u)
    return float(np.max(np.linalg.norm(vals - np.asarray(initial), axis=1)))


def pbc_residual(field: AmplitudeField, spectral, u) -> float:
    """Max over samples of ``|f^{01}(z) - f^{10}(z - L)|`` with ``f^{01} = S f^{10}``.

    Only pairs of consecutive stored periods are compared; a single-period
    field has nothing to compare and gives 0.
    """
    worst = 0.0
    for m in range(1, len(field.periods)):
        if field.periods[m] != field.periods[m - 1] + 1:
            continue
        k = int(field.periods[m])
        f01 = _step_down(field.values[m], field.points(k), spectral, u)
        gap = np.linalg.norm(f01 - field.values[m - 1], axis=1)
        worst = max(worst, float(np.max(gap)))
    return worst
