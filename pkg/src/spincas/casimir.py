"""Split Casimir operator on the spinor tensor square and the invariants I_k.

The operator lives on the 4^r-dimensional space of the tensor square of the
full 2^r-dimensional spinor space.  With the grading element diagonal, it is
block diagonal over the four chirality sectors; each sector block is kept as
a compressed matrix on its own coordinate set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial

from .clifford import antisym_gamma, build_gamma, rotation_generators
from .linalg import ExactMatrix, TensorShape, first_difference, kron, poly_eval
from .records import VerificationRecord, diff_witness
from .scalar import Rat

SECTORS = ("++", "+-", "-+", "--")


@dataclass(frozen=True)
class SplitCasimir:
    r: int
    matrix: ExactMatrix

    @property
    def shape(self) -> TensorShape:
        return TensorShape([2**self.r, 2**self.r])


@dataclass(frozen=True)
class SectorOperator:
    """A sector block of an operator, compressed to its coordinate support."""

    r: int
    sector: str
    indices: tuple[int, ...]
    matrix: ExactMatrix


@lru_cache(maxsize=None)
def split_casimir_rho(r: int) -> SplitCasimir:
    """-1/(2(N-2)) sum_{i<j} rho(M_ij) (x) rho(M_ij) with N = 2r."""
    if r < 2:
        raise ValueError("rank must be at least 2")
    gens = rotation_generators(r)
    acc = ExactMatrix.zero(4**r)
    for g in gens:
        acc = acc + kron(g, g)
    return SplitCasimir(r=r, matrix=acc * Rat(-1, 2 * (2 * r - 2)))


@lru_cache(maxsize=None)
def invariant_I(r: int, k: int) -> ExactMatrix:
    """I_k = k! sum over increasing multi-indices of G_[idx] (x) G_[idx]."""
    if k < 0:
        raise ValueError("negative invariant index")
    dim = 4**r
    if k == 0:
        return ExactMatrix.identity(dim)
    if k > 2 * r:
        return ExactMatrix.zero(dim)
    rep = build_gamma(r)
    acc = ExactMatrix.zero(dim)
    for idx in combinations(range(1, 2 * r + 1), k):
        g = antisym_gamma(rep, idx)
        acc = acc + kron(g, g)
    return acc * factorial(k)


def verify_recurrences(r: int) -> VerificationRecord:
    """Both product recurrences of the invariants, entrywise."""
    record = VerificationRecord(name=f"invariant-recurrences r={r}")
    i1 = invariant_I(r, 1)
    for k in range(1, 2 * r + 1):
        lhs = invariant_I(r, k) @ i1
        rhs = invariant_I(r, k + 1) - invariant_I(r, k - 1) * (k * (k - 1 - 2 * r))
        record.add(
            f"product-with-I1-k{k}",
            lhs == rhs,
            diff_witness(first_difference(lhs, rhs)),
        )
    i2 = invariant_I(r, 2)
    for k in range(1, r + 1):
        lhs = invariant_I(r, 2 * k) @ i2
        rhs = (
            invariant_I(r, 2 * k + 2)
            + invariant_I(r, 2 * k) * (8 * k * (r - k))
            + invariant_I(r, 2 * k - 2)
            * (4 * k * (2 * k - 1) * (r + 1 - k) * (2 * r + 1 - 2 * k))
        )
        record.add(
            f"product-with-I2-k{k}",
            lhs == rhs,
            diff_witness(first_difference(lhs, rhs)),
        )
    return record


def i2k_polynomial(r: int, k: int) -> list[Rat]:
    """Coefficients (constant first) of I_{2k} as a degree-k polynomial in the
    split Casimir operator, generated by iterating the even recurrence.

    Seeds: I_0 = 1 and I_2 = -32(r-1) C.
    """
    if k < 0:
        raise ValueError("negative invariant index")
    polys = [[Rat(1)], [Rat(0), Rat(-32 * (r - 1))]]
    while len(polys) <= k:
        m = len(polys) - 1
        prev, cur = polys[-2], polys[-1]
        # multiply by I_2, i.e. by the polynomial -32(r-1) x
        shifted = [Rat(0)] + [c * (-32 * (r - 1)) for c in cur]
        a = -8 * m * (r - m)
        b = -4 * m * (2 * m - 1) * (r + 1 - m) * (2 * r + 1 - 2 * m)
        nxt = list(shifted)
        for i, c in enumerate(cur):
            nxt[i] += a * c
        for i, c in enumerate(prev):
            nxt[i] += b * c
        polys.append(nxt)
    return polys[k]


def reference_even_polynomial(r: int, k: int) -> list[Rat]:
    """Closed-form coefficient tables for I_4 .. I_12, independent of the
    recurrence generator; used to cross-check i2k_polynomial.
    """
    R = Rat(r)
    if k == 2:
        return [
            -4 * R * (2 * R - 1),
            Rat(256) * (R - 1) ** 2,
            Rat(1024) * (R - 1) ** 2,
        ]
    if k == 3:
        return [
            64 * R * (R - 2) * (2 * R - 1),
            -128 * (R - 1) * (18 * R**2 - 65 * R + 46),
            -8192 * (R - 1) ** 2 * (3 * R - 5),
            Rat(-32768) * (R - 1) ** 3,
        ]
    if k == 4:
        return [
            -48 * R * (R - 2) * (2 * R - 1) * (22 * R - 71),
            2**11 * (R - 1) * (10 * R**3 - 91 * R**2 + 217 * R - 132),
            2**13 * (R - 1) ** 2 * (66 * R**2 - 301 * R + 308),
            2**19 * (R - 1) ** 3 * (3 * R - 7),
            2**20 * (R - 1) ** 4,
        ]
    if k == 5:
        return [
            2**9 * (R - 2) * R * (2 * R - 9) * (2 * R - 1) * (19 * R - 62),
            -(2**9) * (R - 1)
            * (140 * R**4 - 5820 * R**3 + 36351 * R**2 - 72610 * R + 40536),
            -(2**16) * (R - 1) ** 2 * (190 * R**3 - 1665 * R**2 + 4473 * R - 3590),
            -(2**18) * (R - 1) ** 3 * (230 * R**2 - 1335 * R + 1806),
            -(2**24) * 5 * (R - 1) ** 4 * (R - 3),
            -(2**25) * (R - 1) ** 5,
        ]
    if k == 6:
        return [
            -320 * R * (R - 2) * (2 * R - 9) * (2 * R - 1)
            * (622 * R**2 - 5755 * R + 12172),
            -(2**12) * (R - 1)
            * (
                1404 * R**5
                - 2200 * R**4
                - 105897 * R**3
                + 607695 * R**2
                - 1108426 * R
                + 585720
            ),
            2**14 * (R - 1) ** 2
            * (
                18660 * R**4
                - 269060 * R**3
                + 1354221 * R**2
                - 2778930 * R
                + 1914616
            ),
            2**21 * (R - 1) ** 3 * (1070 * R**3 - 11165 * R**2 + 36663 * R - 37400),
            2**22 * (R - 1) ** 4 * (1170 * R**2 - 8305 * R + 13992),
            2**28 * 5 * (R - 1) ** 5 * (3 * R - 11),
            2**30 * (R - 1) ** 6,
        ]
    raise ValueError("reference table covers k = 2..6 only")


def casimir_power_trace_closed_form(r: int, m: int) -> Rat:
    """Closed forms for the trace of the m-th power, m = 2..5, times 4^r."""
    tr_i0 = Rat(4**r)
    if m == 2:
        return Rat(r * (2 * r - 1), 256 * (r - 1) ** 2) * tr_i0
    if m == 3:
        return -Rat(r * (2 * r - 1), 1024 * (r - 1) ** 2) * tr_i0
    if m == 4:
        return Rat(r * (2 * r - 1) * (30 * r**2 - 63 * r + 34), 2**16 * (r - 1) ** 4) * tr_i0
    if m == 5:
        return -Rat(r * (2 * r - 1) * (34 * r**2 - 89 * r + 62), 2**17 * (r - 1) ** 4) * tr_i0
    raise ValueError("closed forms cover m = 2..5 only")


# -- chirality sectors ------------------------------------------------------


def chirality_projectors(r: int) -> tuple[ExactMatrix, ExactMatrix]:
    """(I +- grading)/2 on the 2^r spinor space; diagonal 0/1 by construction."""
    rep = build_gamma(r)
    ident = ExactMatrix.identity(rep.dim)
    half = Rat(1, 2)
    return ((ident + rep.chirality) * half, (ident - rep.chirality) * half)


def sector_indices(r: int, sector: str) -> tuple[int, ...]:
    """Flat coordinates of the sector block; leg 1 is the slow index."""
    if sector not in SECTORS:
        raise ValueError(f"sector must be one of {SECTORS}")
    half = 2 ** (r - 1)
    full = 2 * half
    first = range(half) if sector[0] == "+" else range(half, full)
    second = range(half) if sector[1] == "+" else range(half, full)
    return tuple(i1 * full + i2 for i1 in first for i2 in second)


def restrict_to_sector(r: int, m: ExactMatrix, sector: str) -> ExactMatrix:
    return m.restrict(sector_indices(r, sector))


def embed_from_sector(r: int, m: ExactMatrix, sector: str) -> ExactMatrix:
    return m.embed(sector_indices(r, sector), 4**r)


@lru_cache(maxsize=None)
def sector_casimir(r: int, sector: str) -> SectorOperator:
    indices = sector_indices(r, sector)
    block = split_casimir_rho(r).matrix.restrict(indices)
    return SectorOperator(r=r, sector=sector, indices=indices, matrix=block)


def block_structure_check(r: int) -> VerificationRecord:
    """Every nonzero entry of the split Casimir operator stays inside one
    chirality sector, and the four embedded blocks reassemble it exactly.
    """
    record = VerificationRecord(name=f"casimir-block-structure r={r}")
    c = split_casimir_rho(r).matrix
    half = 2 ** (r - 1)
    full = 2 * half

    def label(flat: int) -> tuple[bool, bool]:
        i1, i2 = divmod(flat, full)
        return (i1 < half, i2 < half)

    record.add(
        "no-cross-sector-entries",
        all(label(i) == label(j) for i, j, _ in c.items()),
    )
    total = ExactMatrix.zero(4**r)
    for sector in SECTORS:
        op = sector_casimir(r, sector)
        total = total + op.matrix.embed(op.indices, 4**r)
    record.add(
        "sector-blocks-sum-to-operator",
        total == c,
        diff_witness(first_difference(total, c)),
    )
    return record


def ad_invariance_check(r: int) -> VerificationRecord:
    """The split Casimir operator commutes with the diagonal algebra action."""
    record = VerificationRecord(name=f"casimir-ad-invariance r={r}")
    c = split_casimir_rho(r).matrix
    ident = ExactMatrix.identity(2**r)
    ok = True
    for g in rotation_generators(r):
        diag = kron(g, ident) + kron(ident, g)
        if diag @ c != c @ diag:
            ok = False
            break
    record.add("commutes-with-diagonal-action", ok)
    return record


def coproduct_consistency(r: int) -> VerificationRecord:
    """The quadratic Casimir of the diagonal action splits as
    C2 (x) I + I (x) C2 + 2 C-hat, both sides built independently.
    """
    record = VerificationRecord(name=f"casimir-coproduct r={r}")
    n = 2 * r
    gens = rotation_generators(r)
    dim = 2**r
    ident = ExactMatrix.identity(dim)
    coeff = Rat(-1, 2 * (n - 2))
    c2_single = ExactMatrix.zero(dim)
    for g in gens:
        c2_single = c2_single + g @ g
    c2_single = c2_single * coeff
    c2_diag = ExactMatrix.zero(dim * dim)
    for g in gens:
        d = kron(g, ident) + kron(ident, g)
        c2_diag = c2_diag + d @ d
    c2_diag = c2_diag * coeff
    rhs = kron(c2_single, ident) + kron(ident, c2_single) + split_casimir_rho(r).matrix * 2
    record.add(
        "coproduct-split",
        c2_diag == rhs,
        diff_witness(first_difference(c2_diag, rhs)),
    )
    spinor_c2 = Rat(r * (2 * r - 1), 16 * (r - 1))
    record.add("single-space-casimir-scalar", c2_single == ident * spinor_c2)
    return record


def lemma_duality_sweep(r: int) -> VerificationRecord:
    """(I (x) grading) I_k / k! = (-1)^r (grading (x) I) I_{2r-k} / (2r-k)!."""
    record = VerificationRecord(name=f"invariant-grading-duality r={r}")
    rep = build_gamma(r)
    dim = 2**r
    ident = ExactMatrix.identity(dim)
    left_op = kron(ident, rep.chirality)
    right_op = kron(rep.chirality, ident) * ((-1) ** r)
    for k in range(2 * r + 1):
        lhs = (left_op @ invariant_I(r, k)) * Rat(1, factorial(k))
        rhs = (right_op @ invariant_I(r, 2 * r - k)) * Rat(1, factorial(2 * r - k))
        record.add(
            f"duality-k{k}",
            lhs == rhs,
            diff_witness(first_difference(lhs, rhs)),
        )
    return record


def polynomial_consistency(r: int, max_k: int | None = None) -> VerificationRecord:
    """poly_eval of the generated coefficients reproduces each even invariant.

    Includes the first vanishing case 2k = 2r + 2, i.e. the characteristic
    identity of the operator in polynomial form.
    """
    record = VerificationRecord(name=f"even-invariant-polynomials r={r}")
    c = split_casimir_rho(r).matrix
    top = r + 1 if max_k is None else max_k
    for k in range(top + 1):
        expected = invariant_I(r, 2 * k)
        got = poly_eval(i2k_polynomial(r, k), c)
        record.add(
            f"polynomial-matches-invariant-k{k}",
            got == expected,
            diff_witness(first_difference(got, expected)),
        )
    return record
