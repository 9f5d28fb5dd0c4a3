"""Independent ground truth for so(N) with N = 2r.

Everything here is computed without gamma matrices: structure constants from
their closed formula, the Cartan-Killing metric two ways, quadratic-Casimir
eigenvalues from highest weights, and closed-form dimensions.  The rest of
the engine is cross-checked against these oracles.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .linalg import ExactMatrix
from .records import VerificationRecord
from .scalar import Rat, binomial, rat

Pair = tuple[int, int]


def basis_pairs(n: int) -> list[Pair]:
    """Canonical basis labels (i, j) with 1 <= i < j <= N for so(N)."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _canon(i: int, j: int) -> tuple[int, Pair]:
    """Reduce M_ij to the canonical basis: returns (sign, (min, max)) or sign 0."""
    if i == j:
        return 0, (i, j)
    return (1, (i, j)) if i < j else (-1, (j, i))


def commutator_table(n: int) -> dict[tuple[Pair, Pair], dict[Pair, int]]:
    """[M_A, M_B] expanded in the canonical basis, from the four-delta formula.

    [M_{i1i2}, M_{j1j2}] = d_{i2j1}M_{i1j2} - d_{i2j2}M_{i1j1}
                         - d_{i1j1}M_{i2j2} + d_{i1j2}M_{i2j1}.
    """
    pairs = basis_pairs(n)
    table: dict[tuple[Pair, Pair], dict[Pair, int]] = {}
    for a in pairs:
        i1, i2 = a
        for b in pairs:
            j1, j2 = b
            acc: dict[Pair, int] = {}
            for coeff, p, q in (
                (1 if i2 == j1 else 0, i1, j2),
                (-1 if i2 == j2 else 0, i1, j1),
                (-1 if i1 == j1 else 0, i2, j2),
                (1 if i1 == j2 else 0, i2, j1),
            ):
                if not coeff:
                    continue
                sign, c = _canon(p, q)
                if sign:
                    acc[c] = acc.get(c, 0) + coeff * sign
            table[(a, b)] = {c: v for c, v in acc.items() if v}
    return table


def structure_constant(n: int, k_pair: Pair, a: Pair, b: Pair) -> Rat:
    """X^{k1k2}_{i1i2,j1j2} from the antisymmetrized-delta closed form."""
    i1, i2 = a
    j1, j2 = b
    k1, k2 = k_pair

    def d(p, q):
        return 1 if p == q else 0

    def asym(p, q):
        # d^{[k1}_p d^{k2]}_q with [..] the normalized antisymmetrizer
        return Rat(d(k1, p) * d(k2, q) - d(k2, p) * d(k1, q), 2)

    return (
        d(i2, j1) * asym(i1, j2)
        - d(i2, j2) * asym(i1, j1)
        - d(i1, j1) * asym(i2, j2)
        + d(i1, j2) * asym(i2, j1)
    )


def structure_table_from_formula(n: int) -> dict[tuple[Pair, Pair], dict[Pair, int]]:
    """Same data as commutator_table but built from structure_constant.

    The coefficient of the canonical element M_{k1k2} (k1 < k2) collects the
    ordered contributions X^{k1k2} and X^{k2k1} = -X^{k1k2}, hence the factor 2.
    """
    pairs = basis_pairs(n)
    table: dict[tuple[Pair, Pair], dict[Pair, int]] = {}
    for a in pairs:
        for b in pairs:
            acc: dict[Pair, int] = {}
            for c in pairs:
                x = 2 * structure_constant(n, c, a, b)
                if x:
                    assert x.denominator == 1
                    acc[c] = int(x)
            table[(a, b)] = acc
    return table


def killing_metric_closed_form(n: int, a: Pair, b: Pair) -> int:
    i1, i2 = a
    j1, j2 = b
    d = lambda p, q: 1 if p == q else 0
    return 2 * (n - 2) * (d(i1, j2) * d(i2, j1) - d(i1, j1) * d(i2, j2))


def inverse_metric_diagonal(n: int) -> Rat:
    """On canonical pairs the metric is -2(N-2) times the identity; invert it."""
    return Rat(-1, 2 * (n - 2))


def killing_metric_from_contraction(n: int, a: Pair, b: Pair) -> int:
    """g_AB = X^C_{AD} X^D_{BC} over the canonical basis."""
    table = commutator_table(n)
    total = 0
    for d_pair in basis_pairs(n):
        row_ad = table[(a, d_pair)]
        for c_pair, f_cad in row_ad.items():
            f_dbc = table[(b, c_pair)].get(d_pair, 0)
            total += f_cad * f_dbc
    return total


def algebra_integrity(n: int) -> VerificationRecord:
    """Structure constants vs commutators, Killing metric, Jacobi identity."""
    record = VerificationRecord(name=f"so-algebra-integrity N={n}")
    pairs = basis_pairs(n)
    by_comm = commutator_table(n)
    by_formula = structure_table_from_formula(n)
    record.add("structure-constants-match-commutators", by_comm == by_formula)
    metric_ok = all(
        killing_metric_from_contraction(n, a, b) == killing_metric_closed_form(n, a, b)
        for a in pairs
        for b in pairs
    )
    record.add("killing-metric-contraction-equals-closed-form", metric_ok)
    diag = inverse_metric_diagonal(n)
    record.add(
        "inverse-metric-times-metric-is-identity",
        all(
            diag * killing_metric_closed_form(n, a, b) == (1 if a == b else 0)
            for a in pairs
            for b in pairs
        ),
    )
    jacobi_ok = True
    for a in pairs:
        for b in pairs:
            for c in pairs:
                acc: dict[Pair, int] = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for mid, f1 in by_comm[(y, z)].items():
                        for out, f2 in by_comm[(x, mid)].items():
                            acc[out] = acc.get(out, 0) + f1 * f2
                if any(acc.values()):
                    jacobi_ok = False
    record.add("jacobi-identity", jacobi_ok)
    return record


# -- defining representation ------------------------------------------------


@lru_cache(maxsize=None)
def defining_generators(n: int) -> tuple[ExactMatrix, ...]:
    """T(M_ij) = e_ij - e_ji on the N-dimensional defining space, canonical order."""
    out = []
    for i, j in basis_pairs(n):
        out.append(ExactMatrix(n, {(i - 1, j - 1): 1, (j - 1, i - 1): -1}))
    return tuple(out)


def defining_rep_check(n: int) -> VerificationRecord:
    """The matrices e_ij - e_ji realize the canonical commutator table."""
    record = VerificationRecord(name=f"defining-representation N={n}")
    pairs = basis_pairs(n)
    gens = dict(zip(pairs, defining_generators(n)))
    table = commutator_table(n)
    ok = True
    for a in pairs:
        for b in pairs:
            lhs = gens[a] @ gens[b] - gens[b] @ gens[a]
            rhs = ExactMatrix.zero(n)
            for c, coeff in table[(a, b)].items():
                rhs = rhs + gens[c] * coeff
            if lhs != rhs:
                ok = False
    record.add("matrix-commutators-match-table", ok)
    return record


def casimir_contraction(generators: Sequence[ExactMatrix], n: int) -> ExactMatrix:
    """g-bar^{AB} T(M_A) T(M_B) = -1/(2(N-2)) sum_A T(M_A)^2 (diagonal metric)."""
    dim = generators[0].dim
    acc = ExactMatrix.zero(dim)
    for g in generators:
        acc = acc + g @ g
    return acc * inverse_metric_diagonal(n)


def c2_from_matrices(generators: Sequence[ExactMatrix], n: int) -> Rat:
    """Scalar of the Casimir contraction; fails loudly if it is not scalar."""
    c2 = casimir_contraction(generators, n)
    dim = generators[0].dim
    value = c2[0, 0]
    if not value.is_real() or c2 != ExactMatrix.identity(dim) * value.re:
        raise ArithmeticError("Casimir contraction is not a multiple of the identity")
    return value.re


# -- weights and closed forms ----------------------------------------------

WEYL_VECTOR = lambda r: tuple(Rat(r - 1 - i) for i in range(r))


def c2_from_weight(weight: Sequence, n: int) -> Rat:
    """(lambda, lambda + 2 delta) with (e_i, e_j) = delta_ij / (2(N-2))."""
    r = n // 2
    if n != 2 * r or len(weight) != r:
        raise ValueError("weight length must equal N/2")
    delta = WEYL_VECTOR(r)
    total = Rat(0)
    for lam, dl in zip((rat(w) for w in weight), delta):
        total += lam * (lam + 2 * dl)
    return total / (2 * (n - 2))


def highest_weight(rep: str, r: int, k: int | None = None) -> tuple[Rat, ...]:
    if rep == "T_k":
        if k is None or not 0 <= k <= r:
            raise ValueError("T_k needs 0 <= k <= r")
        return tuple(Rat(1) if i < k else Rat(0) for i in range(r))
    if rep == "T_r_plus":
        return tuple(Rat(1) for _ in range(r))
    if rep == "T_r_minus":
        return tuple(Rat(1) for _ in range(r - 1)) + (Rat(-1),)
    if rep == "Delta_plus":
        return tuple(Rat(1, 2) for _ in range(r))
    if rep == "Delta_minus":
        return tuple(Rat(1, 2) for _ in range(r - 1)) + (Rat(-1, 2),)
    raise ValueError(f"unknown representation selector {rep!r}")


def c2_closed_form(rep: str, r: int, k: int | None = None) -> Rat:
    n = 2 * r
    if rep == "T_f":
        return Rat(n - 1, 2 * (n - 2))
    if rep == "T_k":
        if k is None or not 0 <= k <= r:
            raise ValueError("T_k needs 0 <= k <= r")
        return Rat(k * (n - k), 2 * (n - 2))
    if rep in ("T_r_plus", "T_r_minus"):
        return Rat(r * r, 4 * (r - 1))
    if rep in ("Delta_plus", "Delta_minus"):
        return Rat(r * (2 * r - 1), 16 * (r - 1))
    raise ValueError(f"unknown representation selector {rep!r}")


def rep_dimension(rep: str, r: int, k: int | None = None) -> int:
    if rep in ("T_f",):
        return 2 * r
    if rep == "T_k":
        if k is None or not 0 <= k <= r:
            raise ValueError("T_k needs 0 <= k <= r")
        return binomial(2 * r, k)
    if rep in ("T_r_plus", "T_r_minus"):
        return binomial(2 * r, r) // 2
    if rep in ("Delta_plus", "Delta_minus"):
        return 2 ** (r - 1)
    raise ValueError(f"unknown representation selector {rep!r}")


def weight_consistency(r: int) -> VerificationRecord:
    """c2 closed forms equal the weight formula on the standard highest weights."""
    record = VerificationRecord(name=f"c2-closed-form-vs-weights r={r}")
    n = 2 * r
    for k in range(r + 1):
        record.add(
            f"T_k-k{k}",
            c2_closed_form("T_k", r, k) == c2_from_weight(highest_weight("T_k", r, k), n),
        )
    for rep in ("T_r_plus", "T_r_minus", "Delta_plus", "Delta_minus"):
        record.add(
            rep,
            c2_closed_form(rep, r) == c2_from_weight(highest_weight(rep, r), n),
        )
    record.add(
        "adjoint-weight-gives-1",
        c2_from_weight(highest_weight("T_k", r, 2), n) == 1,
    )
    record.add("T_f-equals-T_1", c2_closed_form("T_f", r) == c2_closed_form("T_k", r, 1))
    return record
