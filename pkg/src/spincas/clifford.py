"""Gamma matrices: the irreducible representation of the even Clifford algebra.

For rank r the 2r generators act on a 2^r-dimensional space and satisfy
G_i G_j + G_j G_i = 2 delta_ij.  The construction is the iterated
two-dimensional tensor build, ordered so that the top grading element
(product of all generators, normalized by (-i)^r) comes out diagonal with
+1 on the first half of the basis and -1 on the second half.  All entries
are in {0, +-1, +-i}, asserted at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import ExactMatrix, kron
from .records import VerificationRecord, diff_witness
from .scalar import ExactScalar, Rat, rat
from .linalg import first_difference

_I = ExactScalar(0, 1)

PAULI_X = ExactMatrix(2, {(0, 1): 1, (1, 0): 1})
PAULI_Y = ExactMatrix(2, {(0, 1): -_I, (1, 0): _I})
PAULI_Z = ExactMatrix(2, {(0, 0): 1, (1, 1): -1})

_ALLOWED_ENTRIES = {
    ExactScalar(1),
    ExactScalar(-1),
    ExactScalar(0, 1),
    ExactScalar(0, -1),
}


@dataclass(frozen=True)
class GammaRep:
    """The 2r generators on dimension 2^r plus the diagonal grading element."""

    r: int
    gammas: tuple[ExactMatrix, ...]
    chirality: ExactMatrix

    @property
    def dim(self) -> int:
        return 2**self.r


@lru_cache(maxsize=None)
def build_gamma(r: int) -> GammaRep:
    """Deterministic construction of the rank-r generators."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    gammas = [PAULI_X, PAULI_Y]
    chirality = PAULI_Z
    for _ in range(r - 1):
        dim = gammas[0].dim
        ident = ExactMatrix.identity(dim)
        gammas = [kron(PAULI_X, g) for g in gammas]
        gammas.append(kron(PAULI_X, chirality))
        gammas.append(kron(PAULI_Y, ident))
        chirality = kron(PAULI_Z, ident)
    for g in gammas:
        for _, _, value in g.items():
            assert value in _ALLOWED_ENTRIES, f"unexpected generator entry {value}"
    return GammaRep(r=r, gammas=tuple(gammas), chirality=chirality)


def canonical_index(indices) -> tuple[int, tuple[int, ...]]:
    """Sort a multi-index, tracking the permutation sign.

    Returns (sign, sorted indices); sign 0 when an index repeats.
    """
    items = list(indices)
    sign = 1
    # insertion sort; index lists are short (k <= 2r <= 12)
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            items[b - 1], items[b] = items[b], items[b - 1]
            sign = -sign
            b -= 1
    for a in range(1, len(items)):
        if items[a - 1] == items[a]:
            return 0, tuple(items)
    return sign, tuple(items)


def antisym_gamma(rep: GammaRep, indices) -> ExactMatrix:
    """Antisymmetrized product of generators for the given multi-index.

    For strictly increasing indices this equals the plain product; repeated
    indices give zero; the empty index gives the identity.
    """
    for i in indices:
        if not 1 <= i <= 2 * rep.r:
            raise IndexError(f"generator index {i} outside [1, {2 * rep.r}]")
    sign, ordered = canonical_index(indices)
    if sign == 0:
        return ExactMatrix.zero(rep.dim)
    out = ExactMatrix.identity(rep.dim)
    for i in ordered:
        out = out @ rep.gammas[i - 1]
    return out if sign == 1 else -out


def permutation_sign(sequence) -> int:
    sign, _ = canonical_index(sequence)
    return sign


def gamma_duality_check(rep: GammaRep, indices) -> VerificationRecord:
    """Check the grading-element product rule for one increasing multi-index.

    The product of a basis element with the grading element is proportional
    to the basis element on the complementary index set, with coefficient
    (-i)^r (-1)^[k/2] times the sign of the full-index permutation.
    """
    record = VerificationRecord(name=f"gamma-duality r={rep.r} idx={tuple(indices)}")
    indices = tuple(indices)
    k = len(indices)
    if list(indices) != sorted(set(indices)) or k > 2 * rep.r:
        raise ValueError("multi-index must be strictly increasing with length <= 2r")
    left = antisym_gamma(rep, indices) @ rep.chirality
    complement = tuple(i for i in range(1, 2 * rep.r + 1) if i not in indices)
    eps = permutation_sign(indices + complement)
    coeff = (ExactScalar(0, -1) ** rep.r) * ((-1) ** (k // 2)) * eps
    right = antisym_gamma(rep, complement) * coeff
    record.add(
        f"duality-k{k}",
        left == right,
        diff_witness(first_difference(left, right)),
    )
    return record


def integrity_report(rep: GammaRep) -> VerificationRecord:
    """Full sweep of the defining properties of a generator set."""
    record = VerificationRecord(name=f"gamma-integrity r={rep.r}")
    n = 2 * rep.r
    ident = ExactMatrix.identity(rep.dim)
    for i in range(n):
        for j in range(i, n):
            anti = rep.gammas[i] @ rep.gammas[j] + rep.gammas[j] @ rep.gammas[i]
            expected = ident * 2 if i == j else ExactMatrix.zero(rep.dim)
            record.add(
                f"anticommutator-{i + 1}-{j + 1}",
                anti == expected,
                diff_witness(first_difference(anti, expected)),
            )
    for i in range(n):
        record.add(
            f"hermitian-{i + 1}",
            rep.gammas[i] == rep.gammas[i].conj_transpose(),
        )
    chir = rep.chirality
    diag_pm_one = all(
        i == j and value in (ExactScalar(1), ExactScalar(-1)) for i, j, value in chir.items()
    ) and chir.nnz == rep.dim
    record.add("grading-diagonal-pm1", diag_pm_one)
    record.add("grading-squares-to-identity", chir @ chir == ident)
    record.add("grading-traceless", chir.trace() == ExactScalar(0))
    product = ExactMatrix.identity(rep.dim)
    for g in rep.gammas:
        product = product @ g
    rebuilt = product * (ExactScalar(0, -1) ** rep.r)
    record.add(
        "grading-equals-normalized-product",
        rebuilt == chir,
        diff_witness(first_difference(rebuilt, chir)),
    )
    for i in range(n):
        anti = chir @ rep.gammas[i] + rep.gammas[i] @ chir
        record.add(f"grading-anticommutes-{i + 1}", anti.is_zero())
    return record


@lru_cache(maxsize=None)
def rotation_generators(r: int) -> tuple[ExactMatrix, ...]:
    """Spinor-representation images of the rotation generators, one per i<j pair.

    Pairs are ordered lexicographically; the generator for (i, j) is half the
    antisymmetrized product of generators i and j.
    """
    rep = build_gamma(r)
    half = Rat(1, 2)
    out = []
    for i in range(1, 2 * r + 1):
        for j in range(i + 1, 2 * r + 1):
            out.append(antisym_gamma(rep, (i, j)) * half)
    return tuple(out)


def generator_pairs(r: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, 2 * r + 1) for j in range(i + 1, 2 * r + 1)]


@lru_cache(maxsize=None)
def half_spinor_blocks(r: int) -> tuple[tuple[ExactMatrix, ...], tuple[ExactMatrix, ...]]:
    """Rotation generators compressed to the two chirality eigenspaces.

    With the grading element diagonal (+1 first, -1 second), the positive-
    chirality block is the first 2^(r-1) coordinates.
    """
    half_dim = 2 ** (r - 1)
    plus = list(range(half_dim))
    minus = list(range(half_dim, 2 * half_dim))
    gens = rotation_generators(r)
    return (
        tuple(g.restrict(plus) for g in gens),
        tuple(g.restrict(minus) for g in gens),
    )
