"""Square matrices over the algebra: exact arithmetic, involution, matrix
units and the partial-sum idempotents E_i = e_1 + ... + e_i.

Matrices are stored sparsely (only nonzero entries), since every matrix in
the generator constructions is concentrated in one or two columns.  Indexing
is 1-based to match the usual matrix-unit notation e_{i,j}.
"""

from __future__ import annotations

from .algebra import ArityMismatch, Element
from .fields import QQ


class DimensionMismatch(ValueError):
    pass


class LMatrix:
    __slots__ = ("dim", "arity", "field", "entries")

    def __init__(self, dim, arity, entries=None, field=QQ):
        if dim < 1:
            raise DimensionMismatch("dim must be >= 1")
        self.dim = dim
        self.arity = arity
        self.field = field
        self.entries = {}
        for (i, j), e in (entries or {}).items():
            if not 1 <= i <= dim or not 1 <= j <= dim:
                raise DimensionMismatch("entry (%d,%d) outside %dx%d" % (i, j, dim, dim))
            if e.arity != arity:
                raise ArityMismatch("entry arity %d vs matrix arity %d" % (e.arity, arity))
            if not e.is_zero():
                self.entries[(i, j)] = e

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim, arity, field=QQ):
        return cls(dim, arity, {}, field)

    @classmethod
    def identity(cls, dim, arity, field=QQ):
        one = Element.one(arity, field)
        return cls(dim, arity, {(i, i): one for i in range(1, dim + 1)}, field)

    @classmethod
    def from_dense(cls, rows, arity, field=QQ):
        dim = len(rows)
        entries = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != dim:
                raise DimensionMismatch("matrix is not square")
            for j, e in enumerate(row, start=1):
                entries[(i, j)] = e
        return cls(dim, arity, entries, field)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LMatrix):
            raise TypeError("expected LMatrix, got %r" % type(other))
        if other.dim != self.dim:
            raise DimensionMismatch("dim %d vs %d" % (self.dim, other.dim))
        if other.arity != self.arity:
            raise ArityMismatch("arity %d vs %d" % (self.arity, other.arity))

    def __add__(self, other):
        self._check(other)
        acc = dict(self.entries)
        for pos, e in other.entries.items():
            cur = acc.get(pos)
            acc[pos] = e if cur is None else cur + e
        return LMatrix(self.dim, self.arity, acc, self.field)

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.entries)
        for pos, e in other.entries.items():
            cur = acc.get(pos)
            acc[pos] = -e if cur is None else cur - e
        return LMatrix(self.dim, self.arity, acc, self.field)

    def __neg__(self):
        return LMatrix(
            self.dim, self.arity, {p: -e for p, e in self.entries.items()}, self.field
        )

    def scale(self, coeff):
        return LMatrix(
            self.dim,
            self.arity,
            {p: e.scale(coeff) for p, e in self.entries.items()},
            self.field,
        )

    def __mul__(self, other):
        self._check(other)
        rows_b = {}
        for (k, j), e in other.entries.items():
            rows_b.setdefault(k, []).append((j, e))
        acc = {}
        for (i, k), e1 in self.entries.items():
            for j, e2 in rows_b.get(k, ()):
                p = e1 * e2
                if p.is_zero():
                    continue
                cur = acc.get((i, j))
                acc[(i, j)] = p if cur is None else cur + p
        return LMatrix(self.dim, self.arity, acc, self.field)

    def involute(self) -> "LMatrix":
        """Conjugate transpose: entrywise * composed with transposition."""
        return LMatrix(
            self.dim,
            self.arity,
            {(j, i): e.involute() for (i, j), e in self.entries.items()},
            self.field,
        )

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, LMatrix):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.arity == other.arity
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dim, self.arity, frozenset(self.entries.items())))

    def entry(self, i, j) -> Element:
        return self.entries.get((i, j), Element.zero(self.arity, self.field))

    def max_word_length(self) -> int:
        return max((e.max_word_length() for e in self.entries.values()), default=0)

    def max_term_count(self) -> int:
        return max((len(e.terms) for e in self.entries.values()), default=0)

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        cells = [
            [self.entry(i, j).render() for j in range(1, self.dim + 1)]
            for i in range(1, self.dim + 1)
        ]
        widths = [max(len(cells[i][j]) for i in range(self.dim)) for j in range(self.dim)]
        lines = []
        for row in cells:
            lines.append(
                "[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]"
            )
        return "\n".join(lines)

    def __repr__(self):
        return "<LMatrix %dx%d over L_%d>" % (self.dim, self.dim, self.arity)

    def to_json(self):
        return {
            "dim": self.dim,
            "arity": self.arity,
            "entries": [
                self.entry(i, j).to_json()
                for i in range(1, self.dim + 1)
                for j in range(1, self.dim + 1)
            ],
        }

    @classmethod
    def from_json(cls, data, field=QQ):
        dim = data["dim"]
        arity = data["arity"]
        flat = data["entries"]
        if len(flat) != dim * dim:
            raise DimensionMismatch("entry list has wrong length")
        entries = {}
        for idx, ej in enumerate(flat):
            i, j = divmod(idx, dim)
            entries[(i + 1, j + 1)] = Element.from_json(ej, arity, field)
        return cls(dim, arity, entries, field)


# -- named constant matrices ----------------------------------------------


def matrix_unit(d, n, i, j, field=QQ) -> LMatrix:
    """e_{i,j}: 1 in position (i,j), zero elsewhere."""
    _check_index(d, i)
    _check_index(d, j)
    return LMatrix(d, n, {(i, j): Element.one(n, field)}, field)


def idem(d, n, i, field=QQ) -> LMatrix:
    """The diagonal idempotent e_i = e_{i,i}."""
    return matrix_unit(d, n, i, i, field)


def E(d, n, i, field=QQ) -> LMatrix:
    """E_i = e_1 + ... + e_i; E_d is the identity."""
    _check_index(d, i)
    one = Element.one(n, field)
    return LMatrix(d, n, {(j, j): one for j in range(1, i + 1)}, field)


def scaled_unit(d, n, elem: Element, i, j, field=QQ) -> LMatrix:
    """elem * e_{i,j} for an algebra element elem."""
    _check_index(d, i)
    _check_index(d, j)
    return LMatrix(d, n, {(i, j): elem}, field)


def _check_index(d, i):
    if not 1 <= i <= d:
        raise DimensionMismatch("index %d out of range 1..%d" % (i, d))
