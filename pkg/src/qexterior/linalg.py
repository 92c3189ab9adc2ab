"""Exact sparse matrices over a :class:`~qexterior.fields.Field`.

Two independent rank routes are provided: plain sparse Gaussian elimination
with field division, and fraction-free (Bareiss) elimination over the
polynomial ring after clearing row denominators.  Both split the matrix into
connected blocks first, since rank is additive over a block diagonal.
"""

from __future__ import annotations

from collections import defaultdict

from .fields import Field, Scalar

__all__ = ["ExactMatrix", "DimensionMismatch", "rank", "kernel_dim", "multiply_matrices"]


class DimensionMismatch(ValueError):
    pass


class ExactMatrix:
    """A ``rows x cols`` matrix stored as ``{row: {col: nonzero Scalar}}``."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: int, cols: int, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data: dict[int, dict[int, Scalar]] = {}
        if data:
            for (r, c), v in data.items():
                self.add(r, c, v)

    @classmethod
    def from_rows(cls, field: Field, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        m = cls(field, len(rows), ncols)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            for j, v in enumerate(row):
                m.add(i, j, v)
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        m = cls(field, n, n)
        for i in range(n):
            m.add(i, i, field.one)
        return m

    def add(self, r: int, c: int, value) -> None:
        """Accumulate ``value`` into entry ``(r, c)``."""
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
        value = self.field(value)
        if not value:
            return
        row = self._data.setdefault(r, {})
        new = row[c] + value if c in row else value
        if new:
            row[c] = new
        else:
            del row[c]
            if not row:
                del self._data[r]

    def __getitem__(self, rc) -> Scalar:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(rc)
        return self._data.get(r, {}).get(c, self.field.zero)

    def items(self):
        for r in sorted(self._data):
            row = self._data[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def column(self, c: int) -> list[Scalar]:
        return [self[r, c] for r in range(self.rows)]

    def to_rows(self) -> list[list[Scalar]]:
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.items():
            out[r][c] = v
        return out

    def transpose(self) -> "ExactMatrix":
        t = ExactMatrix(self.field, self.cols, self.rows)
        for (r, c), v in self.items():
            t.add(c, r, v)
        return t

    def is_zero(self) -> bool:
        return not self._data

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and dict(self.items()) == dict(other.items())

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return multiply_matrices(self, other)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz()}, over {self.field})"

    def blocks(self) -> list[tuple[list[int], list[int]]]:
        """Connected components of the row/column incidence graph (nonempty ones)."""
        parent: dict = {}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for r, row in self._data.items():
            parent.setdefault(("r", r), ("r", r))
            for c in row:
                parent.setdefault(("c", c), ("c", c))
                ra, rb = find(("r", r)), find(("c", c))
                if ra != rb:
                    parent[ra] = rb
        groups: dict = defaultdict(lambda: ([], []))
        for node in parent:
            kind, idx = node
            groups[find(node)][0 if kind == "r" else 1].append(idx)
        out = [(sorted(rs), sorted(cs)) for rs, cs in groups.values()]
        out.sort(key=lambda b: (b[1][0], b[0][0]))
        return out

    def submatrix(self, rows: list[int], cols: list[int]) -> "ExactMatrix":
        rmap = {r: i for i, r in enumerate(rows)}
        cmap = {c: j for j, c in enumerate(cols)}
        sub = ExactMatrix(self.field, len(rows), len(cols))
        for r in rows:
            for c, v in self._data.get(r, {}).items():
                if c in cmap:
                    sub._data.setdefault(rmap[r], {})[cmap[c]] = v
        return sub

    def rank(self, method: str = "plain", split: bool = True, small_pivots: bool = False) -> int:
        return rank(self, method=method, split=split, small_pivots=small_pivots)

    def kernel_dim(self, **kwargs) -> int:
        return kernel_dim(self, **kwargs)


def multiply_matrices(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.field is not b.field:
        raise TypeError("matrices over different fields")
    out = ExactMatrix(a.field, a.rows, b.cols)
    zero = a.field.zero
    for r, arow in a._data.items():
        acc: dict[int, Scalar] = {}
        for k, av in arow.items():
            brow = b._data.get(k)
            if not brow:
                continue
            for c, bv in brow.items():
                acc[c] = acc.get(c, zero) + av * bv
        nz = {c: v for c, v in acc.items() if v}
        if nz:
            out._data[r] = nz
    return out


def _rank_plain(data: dict[int, dict[int, Scalar]], small_pivots: bool) -> int:
    rows = {r: dict(row) for r, row in data.items() if row}
    col_rows: dict[int, set[int]] = defaultdict(set)
    for r, row in rows.items():
        for c in row:
            col_rows[c].add(r)
    rank = 0
    for c in sorted(col_rows):
        cand = col_rows.get(c)
        if not cand:
            continue
        if small_pivots:
            piv = min(cand, key=lambda r: (rows[r][c].size(), len(rows[r]), r))
        else:
            piv = min(cand)
        prow = rows.pop(piv)
        for cc in prow:
            col_rows[cc].discard(piv)
        inv = prow[c].inverse()
        for r in sorted(col_rows[c]):
            row = rows[r]
            factor = row[c] * inv
            for cc, v in prow.items():
                if cc in row:
                    new = row[cc] - factor * v
                    if new:
                        row[cc] = new
                    else:
                        del row[cc]
                        col_rows[cc].discard(r)
                else:
                    row[cc] = -(factor * v)
                    col_rows[cc].add(r)
        rank += 1
    return rank


def _rank_fraction_free(field: Field, data: dict[int, dict[int, Scalar]], ncols: int) -> int:
    if field.numeric:
        dense = []
        for row in data.values():
            line = [field._zero_raw] * ncols
            for c, v in row.items():
                line[c] = v.num
            dense.append(line)
    else:
        dense = []
        for row in data.values():
            denom = field._one_raw
            for v in row.values():
                g = denom.gcd(v.den)
                denom = denom * field.ring_exquo(v.den, g)
            line = [field._zero_raw] * ncols
            for c, v in row.items():
                line[c] = v.num * field.ring_exquo(denom, v.den)
            dense.append(line)
    m = len(dense)
    prev = field._one_raw
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if dense[i][c]), None)
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        p = dense[r][c]
        prow = dense[r]
        for i in range(r + 1, m):
            row = dense[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = field.ring_exquo(p * row[j] - a * prow[j], prev)
            row[c] = field._zero_raw
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(m: ExactMatrix, method: str = "plain", split: bool = True, small_pivots: bool = False) -> int:
    """Exact rank.

    ``method`` is ``"plain"`` (field elimination, first nonzero pivot in
    column order; ``small_pivots`` prefers the shortest entry instead) or
    ``"fraction_free"`` (Bareiss over the polynomial ring).
    """
    if method not in ("plain", "fraction_free"):
        raise ValueError(f"unknown rank method {method!r}")
    if m.is_zero():
        return 0
    parts = m.blocks() if split else [(sorted(m._data), list(range(m.cols)))]
    total = 0
    for rs, cs in parts:
        sub = m.submatrix(rs, cs) if split else m
        if method == "plain":
            total += _rank_plain(sub._data, small_pivots)
        else:
            total += _rank_fraction_free(m.field, sub._data, sub.cols)
    return total


def kernel_dim(m: ExactMatrix, **kwargs) -> int:
    return m.cols - rank(m, **kwargs)
