# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels for sparse exact matrices.

Bit-identical semantics to ``_kernels_py``: dict-of-dicts rows with
(re, im) rational tuples, canonical (no stored zeros, no empty rows).
The rational arithmetic itself stays in gmpy2/fractions objects; the win
here is C-level dict iteration and loop overhead in the O(n^3) paths.
"""

from .scalar import RAT_ZERO


def mat_mul(dict a_rows, dict b_rows):
    cdef dict out = {}
    cdef dict acc, arow, brow, row
    cdef object i, k, j, aval, bval, cur, a0, a1, b0, b1, prod
    for i, arow in a_rows.items():
        acc = {}
        for k, aval in arow.items():
            brow = b_rows.get(k)
            if brow is None:
                continue
            a0 = (<tuple>aval)[0]
            a1 = (<tuple>aval)[1]
            if not a1:
                for j, bval in brow.items():
                    b0 = (<tuple>bval)[0]
                    b1 = (<tuple>bval)[1]
                    if b1:
                        prod = (a0 * b0, a0 * b1)
                    else:
                        prod = (a0 * b0, RAT_ZERO)
                    cur = acc.get(j)
                    if cur is None:
                        acc[j] = prod
                    else:
                        acc[j] = ((<tuple>cur)[0] + (<tuple>prod)[0],
                                  (<tuple>cur)[1] + (<tuple>prod)[1])
            else:
                for j, bval in brow.items():
                    b0 = (<tuple>bval)[0]
                    b1 = (<tuple>bval)[1]
                    prod = (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0)
                    cur = acc.get(j)
                    if cur is None:
                        acc[j] = prod
                    else:
                        acc[j] = ((<tuple>cur)[0] + (<tuple>prod)[0],
                                  (<tuple>cur)[1] + (<tuple>prod)[1])
        row = {}
        for j, cur in acc.items():
            if (<tuple>cur)[0] or (<tuple>cur)[1]:
                row[j] = cur
        if row:
            out[i] = row
    return out


def mat_kron(dict a_rows, dict b_rows, long b_dim):
    cdef dict out = {}
    cdef dict arow, brow, row
    cdef long i1, i2, j1, j2
    cdef object aval, bval, a0, a1, b0, b1
    for i1, arow in a_rows.items():
        for i2, brow in b_rows.items():
            row = {}
            for j1, aval in arow.items():
                a0 = (<tuple>aval)[0]
                a1 = (<tuple>aval)[1]
                for j2, bval in brow.items():
                    b0 = (<tuple>bval)[0]
                    b1 = (<tuple>bval)[1]
                    if a1 or b1:
                        row[j1 * b_dim + j2] = (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0)
                    else:
                        row[j1 * b_dim + j2] = (a0 * b0, RAT_ZERO)
            out[i1 * b_dim + i2] = row
    return out


def mat_lincomb(terms):
    cdef dict acc = {}
    cdef dict rows, row, arow, outrow, out
    cdef object coeff, c0, c1, i, j, val, v0, v1, prod, cur
    for coeff, rows in terms:
        c0 = (<tuple>coeff)[0]
        c1 = (<tuple>coeff)[1]
        if not c0 and not c1:
            continue
        for i, row in rows.items():
            arow = acc.get(i)
            if arow is None:
                arow = {}
                acc[i] = arow
            for j, val in row.items():
                v0 = (<tuple>val)[0]
                v1 = (<tuple>val)[1]
                if c1 or v1:
                    prod = (c0 * v0 - c1 * v1, c0 * v1 + c1 * v0)
                else:
                    prod = (c0 * v0, RAT_ZERO)
                cur = arow.get(j)
                if cur is None:
                    arow[j] = prod
                else:
                    arow[j] = ((<tuple>cur)[0] + (<tuple>prod)[0],
                               (<tuple>cur)[1] + (<tuple>prod)[1])
    out = {}
    for i, row in acc.items():
        outrow = {}
        for j, val in row.items():
            if (<tuple>val)[0] or (<tuple>val)[1]:
                outrow[j] = val
        if outrow:
            out[i] = outrow
    return out


def mat_rank(dict rows, long dim):
    cdef list work = [dict(row) for row in rows.values()]
    cdef list pivot_rows = []
    cdef long rank = 0
    cdef dict row, prow, nrow
    cdef object pcol, val, v0, v1, p0, p1, prod, cur, s0, s1, norm, i0, i1, j, item
    for row in work:
        for item in pivot_rows:
            pcol = (<tuple>item)[0]
            prow = <dict>((<tuple>item)[1])
            val = row.get(pcol)
            if val is None:
                continue
            v0 = (<tuple>val)[0]
            v1 = (<tuple>val)[1]
            for j, cur in prow.items():
                p0 = (<tuple>cur)[0]
                p1 = (<tuple>cur)[1]
                if v1 or p1:
                    prod = (v0 * p0 - v1 * p1, v0 * p1 + v1 * p0)
                else:
                    prod = (v0 * p0, RAT_ZERO)
                cur = row.get(j)
                if cur is None:
                    row[j] = (-(<tuple>prod)[0], -(<tuple>prod)[1])
                else:
                    s0 = (<tuple>cur)[0] - (<tuple>prod)[0]
                    s1 = (<tuple>cur)[1] - (<tuple>prod)[1]
                    if s0 or s1:
                        row[j] = (s0, s1)
                    else:
                        del row[j]
        if not row:
            continue
        pcol = min(row)
        val = row[pcol]
        p0 = (<tuple>val)[0]
        p1 = (<tuple>val)[1]
        norm = p0 * p0 + p1 * p1
        i0 = p0 / norm
        i1 = -p1 / norm
        nrow = {}
        if i1:
            for j, cur in row.items():
                v0 = (<tuple>cur)[0]
                v1 = (<tuple>cur)[1]
                nrow[j] = (v0 * i0 - v1 * i1, v0 * i1 + v1 * i0)
        else:
            for j, cur in row.items():
                nrow[j] = ((<tuple>cur)[0] * i0, (<tuple>cur)[1] * i0)
        pivot_rows.append((pcol, nrow))
        pivot_rows.sort(key=_pivot_col)
        rank += 1
    return rank


def _pivot_col(item):
    return item[0]
