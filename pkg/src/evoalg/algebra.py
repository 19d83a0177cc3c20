"""Evolution algebras defined by structure matrices.

Column convention: column j of the structure matrix holds the coordinates of
the square of the j-th natural basis vector, so e_j^2 = sum_i A[i][j] e_i.
The transpose convention also appears in the wild; everything here sticks to
the column one.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .digraph import Digraph
from .errors import FieldMismatchError, ParseError, SingularMatrixError
from .fields import Field, Scalar, parse_field
from .groups import MonomialMap

Matrix = tuple[tuple[Scalar, ...], ...]


def determinant(rows: Matrix) -> Scalar:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(rows)
    field = rows[0][0].field
    if any(len(row) != n for row in rows):
        raise ParseError("determinant needs a square matrix")
    work = [list(row) for row in rows]
    sign = 1
    prev = field.one
    for c in range(n - 1):
        pivot_row = next((r for r in range(c, n) if not work[r][c].is_zero), None)
        if pivot_row is None:
            return field.zero
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            sign = -sign
        for r in range(c + 1, n):
            for k in range(c + 1, n):
                work[r][k] = (work[c][c] * work[r][k] - work[r][c] * work[c][k]) / prev
            work[r][c] = field.zero
        prev = work[c][c]
    det = work[n - 1][n - 1]
    return -det if sign < 0 else det


def rank(rows: Matrix) -> int:
    """Rank over the field by plain elimination."""
    if not rows:
        return 0
    work = [list(row) for row in rows]
    n_rows, n_cols = len(work), len(work[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if not work[i][c].is_zero), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, n_rows):
            if not work[i][c].is_zero:
                f = work[i][c] / work[r][c]
                for k in range(c, n_cols):
                    work[i][k] = work[i][k] - f * work[r][k]
        r += 1
        if r == n_rows:
            break
    return r


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(1, inner)), a[i][0] * b[0][j])
            for j in range(len(b[0]))
        )
        for i in range(len(a))
    )


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def entrywise_square(a: Matrix) -> Matrix:
    return tuple(tuple(x * x for x in row) for row in a)


def star_product(p: Matrix) -> Matrix:
    """The n x n(n-1)/2 matrix with column (i, j), i < j, holding the
    products p[k][i] * p[k][j]."""
    n = len(p)
    cols = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return tuple(tuple(p[k][i] * p[k][j] for i, j in cols) for k in range(n))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero for row in a for x in row)


class EvolutionAlgebra:
    """An evolution algebra with its structure matrix, cached determinant,
    and cached zero-pattern digraph. Immutable."""

    def __init__(self, field: Field, entries: Sequence[Sequence]):
        rows = []
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ParseError("structure matrix must be square")
            rows.append(tuple(field.scalar(x) for x in row))
        if n == 0:
            raise ParseError("structure matrix must have dimension >= 1")
        self.field = field
        self.n = n
        self.rows: Matrix = tuple(rows)
        self.det = determinant(self.rows)
        self.digraph = Digraph.from_scalar_rows(self.rows)
        self._t_a: Optional[int] = None

    @property
    def is_idempotent(self) -> bool:
        return not self.det.is_zero

    def require_idempotent(self) -> "EvolutionAlgebra":
        if not self.is_idempotent:
            raise SingularMatrixError(
                "structure matrix is singular; the algebra is not idempotent"
            )
        return self

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.rows[i][j] for i in range(self.n))

    @property
    def min_transversal_order(self) -> int:
        from .digraph import min_transversal_order

        if self._t_a is None:
            self._t_a = min_transversal_order(self.digraph)
        return self._t_a

    # elements are plain tuples of scalars in the natural basis -------------

    def basis_element(self, i: int) -> tuple[Scalar, ...]:
        return tuple(
            self.field.one if k == i else self.field.zero for k in range(self.n)
        )

    def element(self, coords: Sequence) -> tuple[Scalar, ...]:
        coords = tuple(self.field.scalar(x) for x in coords)
        if len(coords) != self.n:
            raise ParseError("element coordinate length mismatch")
        return coords

    def multiply(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Bilinear product: distinct basis vectors annihilate, squares come
        from the matrix columns, so the result is A * (x .* y)."""
        if len(x) != self.n or len(y) != self.n:
            raise ParseError("element coordinate length mismatch")
        had = [xi * yi for xi, yi in zip(x, y)]
        return tuple(
            sum((self.rows[i][j] * had[j] for j in range(1, self.n)), self.rows[i][0] * had[0])
            for i in range(self.n)
        )

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "n": self.n,
            "entries": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict, field: Optional[Field] = None) -> "EvolutionAlgebra":
        if not isinstance(data, dict):
            raise ParseError("matrix JSON must be an object")
        for key in ("field", "n", "entries"):
            if key not in data:
                raise ParseError(f"matrix JSON is missing {key!r}")
        fld = field if field is not None else parse_field(data["field"])
        entries = data["entries"]
        if not isinstance(entries, list) or len(entries) != data["n"]:
            raise ParseError("matrix JSON entries do not match n")
        return cls(fld, [[fld.parse(x) for x in row] for row in entries])

    @classmethod
    def load(cls, path: str, field: Optional[Field] = None) -> "EvolutionAlgebra":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read matrix file {path}: {exc}") from exc
        return cls.from_json(data, field)

    def dump(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def __eq__(self, other):
        return (
            isinstance(other, EvolutionAlgebra)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"EvolutionAlgebra({self.field.descriptor()}, n={self.n})"


def make_algebra(field: Field, entries: Sequence[Sequence]) -> EvolutionAlgebra:
    return EvolutionAlgebra(field, entries)


def transport_structure(algebra: EvolutionAlgebra, p: MonomialMap) -> EvolutionAlgebra:
    """Structure matrix of the same algebra after the natural-basis change by
    the monomial matrix P: returns B = P * A * (P entrywise-squared)^{-1}.

    The inverse of the entrywise square is taken in monomial form
    (inverse permutation, reciprocal squared scalings), never by elimination.
    """
    algebra.require_idempotent()
    if p.n != algebra.n or p.field != algebra.field:
        raise FieldMismatchError("monomial map does not match the algebra")
    p_sq = MonomialMap(p.sigma, tuple(x * x for x in p.d))
    b = mat_mul(mat_mul(p.matrix(), algebra.rows), p_sq.inverse().matrix())
    out = EvolutionAlgebra(algebra.field, b)
    if not out.is_idempotent:
        raise SingularMatrixError("transport produced a singular matrix")
    return out
