import pytest

from spincas import oracles
from spincas.clifford import (
    antisym_gamma,
    build_gamma,
    canonical_index,
    gamma_duality_check,
    generator_pairs,
    half_spinor_blocks,
    integrity_report,
    permutation_sign,
    rotation_generators,
)
from spincas.linalg import ExactMatrix
from spincas.scalar import ExactScalar, Rat


@pytest.mark.parametrize("r", [2, 3, 4])
def test_integrity(r):
    record = integrity_report(build_gamma(r))
    assert record.ok, [c.check_id for c in record.failures]


def test_dimensions():
    rep = build_gamma(3)
    assert rep.dim == 8
    assert len(rep.gammas) == 6


def test_canonical_index():
    assert canonical_index((2, 1)) == (-1, (1, 2))
    assert canonical_index((1, 2, 3)) == (1, (1, 2, 3))
    assert canonical_index((3, 1, 2)) == (1, (1, 2, 3))
    assert canonical_index((1, 1)) == (0, (1, 1))


def test_permutation_sign():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((3, 1, 2)) == 1


@pytest.mark.parametrize("r", [2, 3])
def test_antisym_gamma_alternating(r):
    rep = build_gamma(r)
    # repeated index kills the antisymmetrized product
    assert antisym_gamma(rep, (1, 1)).is_zero()
    # odd permutation flips the sign
    assert antisym_gamma(rep, (2, 1)) == -antisym_gamma(rep, (1, 2))


def test_antisym_gamma_equals_plain_product_when_ordered():
    rep = build_gamma(3)
    direct = rep.gammas[0] @ rep.gammas[2] @ rep.gammas[4]
    assert antisym_gamma(rep, (1, 3, 5)) == direct


def test_antisym_gamma_range_check():
    rep = build_gamma(2)
    with pytest.raises(IndexError):
        antisym_gamma(rep, (1, 5))


@pytest.mark.parametrize("r", [2, 3])
def test_duality_sweep(r):
    rep = build_gamma(r)
    for k in range(2 * r + 1):
        indices = tuple(range(1, k + 1))
        record = gamma_duality_check(rep, indices)
        assert record.ok, (k, [c.check_id for c in record.failures])


@pytest.mark.parametrize("r", [2, 3])
def test_rotation_generators_realize_commutators(r):
    """The generators (1/2) antisymmetrized gamma pairs satisfy the canonical
    commutator table computed independently from the delta formula.
    """
    n = 2 * r
    gens = dict(zip(generator_pairs(r), rotation_generators(r)))
    table = oracles.commutator_table(n)
    for a in oracles.basis_pairs(n):
        for b in oracles.basis_pairs(n):
            lhs = gens[a] @ gens[b] - gens[b] @ gens[a]
            rhs = ExactMatrix.zero(2**r)
            for c, coeff in table[(a, b)].items():
                rhs = rhs + gens[c] * coeff
            assert lhs == rhs, (a, b)


def test_rotation_generators_antihermitian():
    for g in rotation_generators(3):
        assert g.conj_transpose() == -g


@pytest.mark.parametrize("r", [2, 3])
def test_half_spinor_blocks_realize_commutators(r):
    n = 2 * r
    table = oracles.commutator_table(n)
    for blocks in half_spinor_blocks(r):
        gens = dict(zip(generator_pairs(r), blocks))
        for a in oracles.basis_pairs(n):
            for b in oracles.basis_pairs(n):
                lhs = gens[a] @ gens[b] - gens[b] @ gens[a]
                rhs = ExactMatrix.zero(2 ** (r - 1))
                for c, coeff in table[(a, b)].items():
                    rhs = rhs + gens[c] * coeff
                assert lhs == rhs


@pytest.mark.parametrize("r", [2, 3, 4])
def test_spinor_casimir_value(r):
    """Quadratic Casimir of the half-spinor blocks equals the closed form."""
    for blocks in half_spinor_blocks(r):
        value = oracles.c2_from_matrices(blocks, 2 * r)
        assert value == Rat(r * (2 * r - 1), 16 * (r - 1))


def test_entry_alphabet():
    rep = build_gamma(4)
    allowed = {
        ExactScalar(1),
        ExactScalar(-1),
        ExactScalar(0, 1),
        ExactScalar(0, -1),
    }
    for g in rep.gammas:
        for _, _, value in g.items():
            assert value in allowed
