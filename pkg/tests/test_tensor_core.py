import itertools

import numpy as np
import pytest

from ybrg.errors import DimMismatch, EmptyComposition, InvalidSlots
from ybrg.smatrix import impurity_smatrix
from ybrg.tensor_core import (
    SWAP, ChainSpec, basis_state, compose, down_count, embed_two_site, identity, residual,
)

import oracles


def random_op(rng, dim=4):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def random_unitary(rng, dim):
    q, r = np.linalg.qr(random_op(rng, dim))
    return q * (np.diag(r) / abs(np.diag(r)))


def test_identity_embeds_to_identity():
    assert residual(embed_two_site(np.eye(4), 1, 0, ChainSpec(1)), np.eye(4)) == 0.0


def test_swap_acts_as_permutation():
    op = embed_two_site(SWAP, 1, 0, ChainSpec(1))
    # particle (slot 1) up, impurity (slot 0) down
    state = basis_state([1, 0])
    np.testing.assert_array_equal(op @ state, basis_state([0, 1]))


def test_identity_on_spectator_slot():
    chain = ChainSpec(2)
    s = impurity_smatrix(1.0, 0.5)
    full = embed_two_site(s, 1, 0, chain)
    np.testing.assert_allclose(full, oracles.embed(s, 1, 0, 3), atol=1e-15)
    # contract slot 2: blocks with different slot-2 spins vanish, equal ones reproduce S
    t = full.reshape(2, 2, 2, 2, 2, 2)
    for s2_out, s2_in in itertools.product(range(2), repeat=2):
        block = t[:, :, s2_out, :, :, s2_in].reshape(4, 4)
        expected = (s.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
                    if s2_out == s2_in else np.zeros((4, 4)))
        np.testing.assert_allclose(block, expected, atol=1e-15)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_bruteforce(n, rng):
    op = random_op(rng)
    for a, b in itertools.permutations(range(n + 1), 2):
        np.testing.assert_allclose(embed_two_site(op, a, b, ChainSpec(n)),
                                   oracles.embed(op, a, b, n + 1), atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_embedding_is_homomorphism(n, rng):
    chain = ChainSpec(n)
    A, B = random_op(rng), random_op(rng)
    for a, b in itertools.permutations(range(n + 1), 2):
        lhs = embed_two_site(A @ B, a, b, chain)
        rhs = embed_two_site(A, a, b, chain) @ embed_two_site(B, a, b, chain)
        assert residual(lhs, rhs) < 1e-13 * max(1.0, np.linalg.norm(lhs))


def test_disjoint_slots_commute(rng):
    chain = ChainSpec(3)
    A, B = random_op(rng), random_op(rng)
    for (i, j), (k, l) in itertools.product(itertools.permutations(range(4), 2), repeat=2):
        if {i, j} & {k, l}:
            continue
        ea, eb = embed_two_site(A, i, j, chain), embed_two_site(B, k, l, chain)
        assert residual(ea @ eb, eb @ ea) < 1e-13 * np.linalg.norm(ea @ eb)


def test_slot_order_covariance(rng):
    chain = ChainSpec(3)
    A = random_op(rng)
    for i, j in itertools.permutations(range(4), 2):
        assert residual(embed_two_site(A, i, j, chain),
                        embed_two_site(SWAP @ A @ SWAP, j, i, chain)) < 1e-13


def test_residual_values():
    A = np.arange(4.0).reshape(2, 2)
    assert residual(A, A) == 0.0
    assert residual(np.eye(2), 2 * np.eye(2)) == pytest.approx(np.sqrt(2), abs=1e-15)


def test_inverse_pair_residual():
    chain = ChainSpec(1)
    prod = compose([embed_two_site(impurity_smatrix(0.7, 0.4), 1, 0, chain),
                    embed_two_site(impurity_smatrix(-0.7, 0.4), 1, 0, chain)])
    assert residual(prod, identity(chain)) < 1e-12


def test_compose_order_and_identities(rng):
    chain = ChainSpec(1)
    eye = identity(chain)
    assert residual(compose([eye, eye, eye]), eye) == 0.0
    p = embed_two_site(SWAP, 1, 0, chain)
    assert residual(compose([p, p]), eye) == 0.0
    A, B = random_unitary(rng, 4), random_unitary(rng, 4)
    np.testing.assert_allclose(compose([A, B]), A @ B)
    assert residual(compose([A, B]), compose([B, A])) > 1e-3


def test_errors():
    chain = ChainSpec(2)
    with pytest.raises(InvalidSlots):
        embed_two_site(np.eye(4), 1, 1, chain)
    with pytest.raises(InvalidSlots):
        embed_two_site(np.eye(4), 0, 3, chain)
    with pytest.raises(DimMismatch):
        embed_two_site(np.eye(2), 0, 1, chain)
    with pytest.raises(DimMismatch):
        residual(np.eye(2), np.eye(4))
    with pytest.raises(DimMismatch):
        compose([np.eye(2), np.eye(4)])
    with pytest.raises(EmptyComposition):
        compose([])
    with pytest.raises(ValueError):
        ChainSpec(7)


def test_down_count():
    assert down_count(0) == 0
    assert down_count(0b101) == 2
