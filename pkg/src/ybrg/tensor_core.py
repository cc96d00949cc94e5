"""Dense operators on a chain of spin-1/2 slots.

Conventions used by the whole package:

* ``|up> = (1, 0)`` and ``|down> = (0, 1)``.
* Slot 0 is the impurity, slots 1..N are the particles.
* Slot 0 is the slowest-varying bit of a basis index, i.e. the chain basis is
  ``kron(slot0, slot1, ..., slotN)``.
* A two-site operator is a 4x4 matrix in the basis (uu, ud, du, dd) whose first
  tensor factor sits on ``slot_a`` and second on ``slot_b`` when embedded.

Operators are plain complex ``numpy`` arrays and are never mutated in place.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimMismatch, EmptyComposition, InvalidSlots

__all__ = [
    "MAX_PARTICLES",
    "ChainSpec",
    "SWAP",
    "identity",
    "embed_two_site",
    "residual",
    "compose",
    "basis_state",
    "down_count",
]

MAX_PARTICLES = 6

SWAP = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]], dtype=complex)


@dataclass(frozen=True)
class ChainSpec:
    """Impurity plus ``n_particles`` spin-1/2 particles."""

    n_particles: int

    def __post_init__(self):
        if not 1 <= self.n_particles <= MAX_PARTICLES:
            raise ValueError(
                f"n_particles must be in [1, {MAX_PARTICLES}], got {self.n_particles}")

    @property
    def n_slots(self) -> int:
        return self.n_particles + 1

    @property
    def dim(self) -> int:
        return 2 ** self.n_slots


def identity(chain: ChainSpec) -> np.ndarray:
    return np.eye(chain.dim, dtype=complex)


def _check_square(m: np.ndarray, name: str = "operator") -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimMismatch(f"{name} must be square, got shape {m.shape}")


def embed_two_site(op, slot_a: int, slot_b: int, chain: ChainSpec) -> np.ndarray:
    """Lift a 4x4 operator to the full chain.

    The first tensor factor of ``op`` acts on ``slot_a``, the second on
    ``slot_b``; every other slot gets the identity.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (4, 4):
        raise DimMismatch(f"two-site operator must be 4x4, got {op.shape}")
    n = chain.n_slots
    for s in (slot_a, slot_b):
        if not 0 <= s < n:
            raise InvalidSlots(f"slot {s} out of range for a chain of {n} slots")
    if slot_a == slot_b:
        raise InvalidSlots(f"slots must differ, got {slot_a} twice")

    # sublist einsum: output indices 0..n-1, input indices n..2n-1
    out_idx = list(range(n))
    in_idx = list(range(n, 2 * n))
    operands = [op.reshape(2, 2, 2, 2),
                [out_idx[slot_a], out_idx[slot_b], in_idx[slot_a], in_idx[slot_b]]]
    eye2 = np.eye(2, dtype=complex)
    for k in range(n):
        if k not in (slot_a, slot_b):
            operands += [eye2, [out_idx[k], in_idx[k]]]
    full = np.einsum(*operands, out_idx + in_idx)
    return full.reshape(chain.dim, chain.dim)


def residual(a, b) -> float:
    """Frobenius norm of ``a - b``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def compose(ops: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix product ``ops[0] @ ops[1] @ ... @ ops[-1]``.

    Operator order follows the written product, so the LAST element acts first
    on a state vector.
    """
    if len(ops) == 0:
        raise EmptyComposition("cannot compose an empty list of operators")
    result = np.asarray(ops[0], dtype=complex)
    _check_square(result)
    for op in ops[1:]:
        op = np.asarray(op, dtype=complex)
        if op.shape != result.shape:
            raise DimMismatch(f"shape mismatch: {result.shape} vs {op.shape}")
        result = result @ op
    return result


def basis_state(spins: Sequence[int]) -> np.ndarray:
    """Product state from per-slot spins (0 = up, 1 = down), slot 0 first."""
    vec = np.ones(1, dtype=complex)
    for s in spins:
        e = np.zeros(2, dtype=complex)
        e[s] = 1.0
        vec = np.kron(vec, e)
    return vec


def down_count(index: int) -> int:
    """Number of down spins in basis state ``index`` (total S^z sector label)."""
    return bin(index).count("1")
