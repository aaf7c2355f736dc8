"""Exact linear algebra over Q(i)(b).

Row reduction, kernel bases, and span comparison, all by structural equality
of canonical scalars.  Pivoting takes the first nonzero entry scanning
top-to-bottom: over a symbolic field there are no magnitudes to compare, and
exactness makes stability a non-issue.  A symbolic entry such as b - 1 counts
as nonzero (it is a nonzero rational function even though it vanishes at
b = 1); kernels are therefore generic in b.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .scalar import ONE, ZERO, Scalar


class Matrix:
    """Dense matrix of scalars, entries stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(e if isinstance(e, Scalar) else Scalar(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, row_seqs) -> "Matrix":
        row_seqs = [list(r) for r in row_seqs]
        rows = len(row_seqs)
        cols = len(row_seqs[0]) if row_seqs else 0
        if any(len(r) != cols for r in row_seqs):
            raise DimensionMismatch("ragged rows")
        return cls(rows, cols, [e for r in row_seqs for e in r])

    def at(self, r: int, c: int) -> Scalar:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(e) for e in self.row(r)) + "]" for r in range(self.rows)
        )


def _rref_data(m: Matrix):
    """Row-reduce a copy; returns (rows as lists, pivot column per pivot row)."""
    work = [list(m.row(r)) for r in range(m.rows)]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        hit = next((r for r in range(pr, m.rows) if work[r][pc]), None)
        if hit is None:
            continue
        work[pr], work[hit] = work[hit], work[pr]
        inv = work[pr][pc].inv()
        work[pr] = [e * inv for e in work[pr]]
        for r in range(m.rows):
            if r == pr or not work[r][pc]:
                continue
            f = work[r][pc]
            work[r] = [e - f * p for e, p in zip(work[r], work[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return work, pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form: unit pivots, pivot columns otherwise zero."""
    work, _ = _rref_data(m)
    return Matrix(m.rows, m.cols, [e for row in work for e in row])


def rank(m: Matrix) -> int:
    return len(_rref_data(m)[1])


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of the right null space, free-variable convention.

    Each free column in turn is set to 1 and the pivot variables are read off
    the reduced rows, so the basis is deterministic.
    """
    work, pivots = _rref_data(m)
    basis = []
    for free in range(m.cols):
        if free in pivots:
            continue
        vec = [ZERO] * m.cols
        vec[free] = ONE
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -work[prow][free]
        basis.append(tuple(vec))
    return basis


def matvec(m: Matrix, vec) -> tuple:
    if len(vec) != m.cols:
        raise DimensionMismatch(f"vector length {len(vec)} != cols {m.cols}")
    out = []
    for r in range(m.rows):
        acc = ZERO
        for c, v in enumerate(vec):
            if v:
                acc = acc + m.at(r, c) * v
        out.append(acc)
    return tuple(out)


def _stack(vectors, length: int) -> Matrix:
    if not vectors:
        return Matrix(0, length, ())
    return Matrix.from_rows(vectors)


def span_equal(a, b) -> bool:
    """True iff the two vector families span the same subspace."""
    a = [tuple(v) for v in a]
    b = [tuple(v) for v in b]
    lengths = {len(v) for v in a} | {len(v) for v in b}
    if len(lengths) > 1:
        raise DimensionMismatch(f"mixed vector lengths: {sorted(lengths)}")
    if not lengths:
        return True
    n = lengths.pop()
    ra = rank(_stack(a, n))
    rb = rank(_stack(b, n))
    if ra != rb:
        return False
    return rank(_stack(a + b, n)) == ra


def in_row_space(m: Matrix, vec) -> bool:
    """True iff vec lies in the span of m's rows."""
    if len(vec) != m.cols:
        raise DimensionMismatch(f"vector length {len(vec)} != cols {m.cols}")
    rows = [m.row(r) for r in range(m.rows)]
    return rank(_stack(rows + [tuple(vec)], m.cols)) == rank(m)
