"""Sparse exact matrices and the tensor-product toolkit.

Index convention (fixed project-wide): the leftmost tensor factor is the
slowest index.  For a matrix on V1 (x) V2 with dims (d1, d2), the flat row
index is i1 * d2 + i2.  Legs are numbered from 1, left to right.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

from . import _backend
from .scalar import RAT_ZERO, ExactScalar, Rat, format_rat, parse_rat

_VAL_ZERO = (RAT_ZERO, RAT_ZERO)


def _val(value):
    """Coerce a scalar-like to the internal (re, im) rational pair."""
    if isinstance(value, tuple):
        return value
    if isinstance(value, ExactScalar):
        return (value.re, value.im)
    return (Rat(value), RAT_ZERO)


class TensorShape:
    """Interpretation of a square matrix as an operator on V1 (x) V2 (x) ..."""

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[int]):
        factors = tuple(int(f) for f in factors)
        if any(f < 1 for f in factors):
            raise ValueError("tensor factors must be positive")
        self.factors = factors

    @property
    def dim(self) -> int:
        out = 1
        for f in self.factors:
            out *= f
        return out

    def strides(self) -> tuple[int, ...]:
        out, acc = [], 1
        for f in reversed(self.factors):
            out.append(acc)
            acc *= f
        return tuple(reversed(out))

    def split(self, flat: int) -> tuple[int, ...]:
        parts = []
        for stride in self.strides():
            parts.append(flat // stride)
            flat %= stride
        return tuple(parts)

    def __repr__(self):
        return f"TensorShape{self.factors}"


class ExactMatrix:
    """Immutable sparse square matrix over Q(i)."""

    __slots__ = ("dim", "_rows")

    def __init__(self, dim: int, entries=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "dim", dim)
        rows: dict = {}
        if entries:
            for (i, j), value in entries.items():
                if not (0 <= i < dim and 0 <= j < dim):
                    raise IndexError(f"entry ({i}, {j}) outside [0, {dim})")
                v = _val(value)
                if v[0] or v[1]:
                    rows.setdefault(i, {})[j] = v
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _wrap(cls, dim: int, rows: dict) -> "ExactMatrix":
        m = cls.__new__(cls)
        object.__setattr__(m, "dim", dim)
        object.__setattr__(m, "_rows", rows)
        return m

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "ExactMatrix":
        return cls._wrap(dim, {})

    @classmethod
    def identity(cls, dim: int) -> "ExactMatrix":
        one = _val(1)
        return cls._wrap(dim, {i: {i: one} for i in range(dim)})

    @classmethod
    def diagonal(cls, values) -> "ExactMatrix":
        rows = {}
        for i, value in enumerate(values):
            v = _val(value)
            if v[0] or v[1]:
                rows[i] = {i: v}
        return cls._wrap(len(values), rows)

    # -- queries ----------------------------------------------------------

    def __getitem__(self, key) -> ExactScalar:
        i, j = key
        v = self._rows.get(i, {}).get(j)
        return ExactScalar(*v) if v is not None else ExactScalar(0)

    def items(self) -> Iterator[tuple[int, int, ExactScalar]]:
        """Nonzero entries in (row, col) order."""
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, ExactScalar(*row[j])

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __bool__(self):
        return bool(self._rows)

    def trace(self) -> ExactScalar:
        re = im = RAT_ZERO
        for i, row in self._rows.items():
            v = row.get(i)
            if v is not None:
                re += v[0]
                im += v[1]
        return ExactScalar(re, im)

    def rank(self) -> int:
        """Exact rank (Gaussian elimination over Q(i))."""
        return _backend.mat_rank(self._rows, self.dim)

    # -- arithmetic -------------------------------------------------------

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in matrix product")
        return ExactMatrix._wrap(self.dim, _backend.mat_mul(self._rows, other._rows))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in matrix sum")
        rows = _backend.mat_lincomb([(_val(1), self._rows), (_val(1), other._rows)])
        return ExactMatrix._wrap(self.dim, rows)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in matrix difference")
        rows = _backend.mat_lincomb([(_val(1), self._rows), (_val(-1), other._rows)])
        return ExactMatrix._wrap(self.dim, rows)

    def __mul__(self, scalar) -> "ExactMatrix":
        rows = _backend.mat_lincomb([(_val(scalar), self._rows)])
        return ExactMatrix._wrap(self.dim, rows)

    __rmul__ = __mul__

    def __neg__(self) -> "ExactMatrix":
        return self * -1

    def pow(self, exponent: int) -> "ExactMatrix":
        """Binary exponentiation; exponent >= 0."""
        if exponent < 0:
            raise ValueError("negative matrix power")
        result = ExactMatrix.identity(self.dim)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def conj_transpose(self) -> "ExactMatrix":
        rows: dict = {}
        for i, row in self._rows.items():
            for j, (re, im) in row.items():
                rows.setdefault(j, {})[i] = (re, -im)
        return ExactMatrix._wrap(self.dim, rows)

    def transpose(self) -> "ExactMatrix":
        rows: dict = {}
        for i, row in self._rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return ExactMatrix._wrap(self.dim, rows)

    # -- subspace embedding ------------------------------------------------

    def restrict(self, indices: Sequence[int]) -> "ExactMatrix":
        """Compress to the subspace spanned by the given coordinate indices."""
        pos = {g: k for k, g in enumerate(indices)}
        rows: dict = {}
        for i, row in self._rows.items():
            pi = pos.get(i)
            if pi is None:
                continue
            new_row = {pos[j]: v for j, v in row.items() if j in pos}
            if new_row:
                rows[pi] = new_row
        return ExactMatrix._wrap(len(indices), rows)

    def embed(self, indices: Sequence[int], dim: int) -> "ExactMatrix":
        """Inverse of ``restrict``: place this block at the given coordinates."""
        rows: dict = {}
        for i, row in self._rows.items():
            rows[indices[i]] = {indices[j]: v for j, v in row.items()}
        return ExactMatrix._wrap(dim, rows)

    # -- serialization -----------------------------------------------------

    def to_dump(self) -> str:
        """JSON dump: {dim, entries: [[i, j, "re", "im"], ...]} sorted by (i, j)."""
        entries = [
            [i, j, format_rat(s.re), format_rat(s.im)] for i, j, s in self.items()
        ]
        return json.dumps({"dim": self.dim, "entries": entries})

    @classmethod
    def from_dump(cls, text: str) -> "ExactMatrix":
        data = json.loads(text)
        rows: dict = {}
        for i, j, re, im in data["entries"]:
            rows.setdefault(i, {})[j] = (parse_rat(re), parse_rat(im))
        return cls._wrap(data["dim"], rows)

    def __repr__(self):
        return f"ExactMatrix(dim={self.dim}, nnz={self.nnz})"


# -- tensor toolkit --------------------------------------------------------


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; a acts on the leading (slow) leg."""
    rows = _backend.mat_kron(a._rows, b._rows, b.dim)
    return ExactMatrix._wrap(a.dim * b.dim, rows)


def kron_all(factors: Iterable[ExactMatrix]) -> ExactMatrix:
    out = None
    for f in factors:
        out = f if out is None else kron(out, f)
    if out is None:
        raise ValueError("empty Kronecker product")
    return out


def partial_trace(m: ExactMatrix, shape: TensorShape, leg: int) -> ExactMatrix:
    """Trace out one leg (1-based, leftmost = 1) of a tensor-product operator."""
    if shape.dim != m.dim:
        raise ValueError(f"shape {shape.factors} does not match dim {m.dim}")
    if not 1 <= leg <= len(shape.factors):
        raise ValueError(f"leg {leg} out of range for {shape}")
    t = leg - 1
    strides = shape.strides()
    kept = [k for k in range(len(shape.factors)) if k != t]
    out_dim = 1
    for k in kept:
        out_dim *= shape.factors[k]
    out_strides = []
    acc = 1
    for k in reversed(kept):
        out_strides.append(acc)
        acc *= shape.factors[k]
    out_strides = list(reversed(out_strides))

    rows: dict = {}
    for i, row in m._rows.items():
        iparts = shape.split(i)
        i_out = sum(iparts[k] * s for k, s in zip(kept, out_strides))
        for j, v in row.items():
            jparts = shape.split(j)
            if jparts[t] != iparts[t]:
                continue
            j_out = sum(jparts[k] * s for k, s in zip(kept, out_strides))
            out_row = rows.setdefault(i_out, {})
            cur = out_row.get(j_out)
            out_row[j_out] = v if cur is None else (cur[0] + v[0], cur[1] + v[1])
    clean = {}
    for i, row in rows.items():
        row = {j: v for j, v in row.items() if v[0] or v[1]}
        if row:
            clean[i] = row
    return ExactMatrix._wrap(out_dim, clean)


def permutation_operator(d: int) -> ExactMatrix:
    """P(v (x) w) = w (x) v on dimension d^2."""
    one = _val(1)
    rows = {}
    for a in range(d):
        for b in range(d):
            rows[a * d + b] = {b * d + a: one}
    return ExactMatrix._wrap(d * d, rows)


def poly_eval(coeffs: Sequence, m: ExactMatrix) -> ExactMatrix:
    """Horner evaluation of sum coeffs[j] * m^j (coeffs[0] is the constant)."""
    if not coeffs:
        return ExactMatrix.zero(m.dim)
    ident = ExactMatrix.identity(m.dim)
    result = ident * coeffs[-1]
    for c in reversed(coeffs[:-1]):
        result = result @ m + ident * c
    return result


def mat_vec(m: ExactMatrix, vec: dict) -> dict:
    """Apply to a sparse column vector {index: (re, im)}; canonical result."""
    out: dict = {}
    for i, row in m._rows.items():
        re = im = RAT_ZERO
        hit = False
        for j, (a0, a1) in row.items():
            v = vec.get(j)
            if v is None:
                continue
            hit = True
            re += a0 * v[0] - a1 * v[1]
            im += a0 * v[1] + a1 * v[0]
        if hit and (re or im):
            out[i] = (re, im)
    return out


def first_difference(a: ExactMatrix, b: ExactMatrix):
    """First (row, col) where two matrices differ, or None if equal."""
    if a.dim != b.dim:
        return (-1, -1, None, None)
    keys = set()
    for i, row in a._rows.items():
        keys.update((i, j) for j in row)
    for i, row in b._rows.items():
        keys.update((i, j) for j in row)
    for i, j in sorted(keys):
        va, vb = a[i, j], b[i, j]
        if va != vb:
            return (i, j, va, vb)
    return None
