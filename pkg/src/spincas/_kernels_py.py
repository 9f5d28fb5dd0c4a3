"""Pure-Python hot kernels for sparse exact matrices.

Matrices are dicts mapping row index -> {col index -> (re, im)} where re/im
are exact rationals.  Stored values are never zero and row dicts are never
empty, so plain dict equality is semantic equality.  The compiled extension
``_kernels_cy`` implements the same functions with identical results; the
active backend is chosen in ``_backend``.
"""

from __future__ import annotations

from .scalar import RAT_ZERO


def mat_mul(a_rows, b_rows):
    """Sparse matrix product, exact."""
    out = {}
    for i, arow in a_rows.items():
        acc = {}
        for k, aval in arow.items():
            brow = b_rows.get(k)
            if brow is None:
                continue
            a0, a1 = aval
            if not a1:
                for j, bval in brow.items():
                    b0, b1 = bval
                    prod = (a0 * b0, a0 * b1) if b1 else (a0 * b0, RAT_ZERO)
                    cur = acc.get(j)
                    if cur is None:
                        acc[j] = prod
                    else:
                        acc[j] = (cur[0] + prod[0], cur[1] + prod[1])
            else:
                for j, bval in brow.items():
                    b0, b1 = bval
                    prod = (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0)
                    cur = acc.get(j)
                    if cur is None:
                        acc[j] = prod
                    else:
                        acc[j] = (cur[0] + prod[0], cur[1] + prod[1])
        row = {j: v for j, v in acc.items() if v[0] or v[1]}
        if row:
            out[i] = row
    return out


def mat_kron(a_rows, b_rows, b_dim):
    """Kronecker product; left factor indexes the slow (leading) legs."""
    out = {}
    for i1, arow in a_rows.items():
        for i2, brow in b_rows.items():
            row = {}
            for j1, (a0, a1) in arow.items():
                for j2, (b0, b1) in brow.items():
                    if a1 or b1:
                        row[j1 * b_dim + j2] = (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0)
                    else:
                        row[j1 * b_dim + j2] = (a0 * b0, RAT_ZERO)
            out[i1 * b_dim + i2] = row
    return out


def mat_lincomb(terms):
    """Sum of coeff * matrix over (coeff, rows) pairs; coeff = (re, im)."""
    acc = {}
    for (c0, c1), rows in terms:
        if not c0 and not c1:
            continue
        for i, row in rows.items():
            arow = acc.setdefault(i, {})
            for j, (v0, v1) in row.items():
                if c1 or v1:
                    prod = (c0 * v0 - c1 * v1, c0 * v1 + c1 * v0)
                else:
                    prod = (c0 * v0, RAT_ZERO)
                cur = arow.get(j)
                if cur is None:
                    arow[j] = prod
                else:
                    arow[j] = (cur[0] + prod[0], cur[1] + prod[1])
    out = {}
    for i, row in acc.items():
        row = {j: v for j, v in row.items() if v[0] or v[1]}
        if row:
            out[i] = row
    return out


def mat_rank(rows, dim):
    """Exact rank via fraction Gaussian elimination over Q(i)."""
    work = [dict(row) for row in rows.values()]
    rank = 0
    pivot_rows = []  # list of (pivot col, normalized row)
    for row in work:
        for pcol, prow in pivot_rows:
            val = row.get(pcol)
            if val is None:
                continue
            v0, v1 = val
            # row -= val * prow
            for j, (p0, p1) in prow.items():
                if v1 or p1:
                    prod = (v0 * p0 - v1 * p1, v0 * p1 + v1 * p0)
                else:
                    prod = (v0 * p0, RAT_ZERO)
                cur = row.get(j)
                if cur is None:
                    row[j] = (-prod[0], -prod[1])
                else:
                    s = (cur[0] - prod[0], cur[1] - prod[1])
                    if s[0] or s[1]:
                        row[j] = s
                    else:
                        del row[j]
        if not row:
            continue
        pcol = min(row)
        p0, p1 = row[pcol]
        norm = p0 * p0 + p1 * p1
        inv = (p0 / norm, -p1 / norm)
        i0, i1 = inv
        if i1:
            nrow = {j: (v0 * i0 - v1 * i1, v0 * i1 + v1 * i0) for j, (v0, v1) in row.items()}
        else:
            nrow = {j: (v0 * i0, v1 * i0) for j, (v0, v1) in row.items()}
        pivot_rows.append((pcol, nrow))
        pivot_rows.sort(key=lambda item: item[0])
        rank += 1
    return rank
