"""Brute-force code dimension: rank of the matrix of all monomial shifts of the generators."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CodeSpec
from .errors import MatrixTooLarge
from .field import PrimeField
from .transform import as_generators

MAX_LENGTH = 4096


@dataclass
class DenseMatrix:
    """Rows of length-``ncols`` vectors over a prime field.

    Column k is the k-th index of the context's enumeration (row-major, last
    coordinate fastest).
    """

    field: PrimeField
    ncols: int
    rows: list[list[int]]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def dump(self) -> str:
        """One line per row; digits separated by spaces when p > 10."""
        sep = "" if self.field.p <= 10 else " "
        return "\n".join(sep.join(str(c) for c in row) for row in self.rows)


def spanning_matrix(spec: CodeSpec) -> DenseMatrix:
    ctx = spec.ctx
    if ctx.n > MAX_LENGTH:
        raise MatrixTooLarge(f"n = {ctx.n} exceeds the oracle limit of {MAX_LENGTH}")
    spec = as_generators(spec)
    if spec.zero:
        return DenseMatrix(ctx.field, ctx.n, [])
    rows = []
    for g in spec.generators:
        for m in ctx.indices():
            rows.append(ctx.to_vector(g.shift(m)))
    return DenseMatrix(ctx.field, ctx.n, rows)


def rank(M: DenseMatrix) -> int:
    """Row rank by Gaussian elimination; the pivot is the first nonzero entry in the column."""
    p = M.field.p
    rows = [r[:] for r in M.rows]
    rk = 0
    for col in range(M.ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = pow(rows[rk][col], -1, p)
        prow = [x * inv % p for x in rows[rk]]
        rows[rk] = prow
        for i in range(rk + 1, len(rows)):
            c = rows[i][col]
            if c:
                row = rows[i]
                rows[i] = [(a - c * b) % p for a, b in zip(row, prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def dimension_via_rank(spec: CodeSpec) -> int:
    return rank(spanning_matrix(spec))
