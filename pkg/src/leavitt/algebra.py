"""Exact arithmetic in the free-generator algebra on x_1..x_n, y_1..y_n
subject to the relations

    x_i y_j = delta_ij * 1        (R1)
    y_1 x_1 + ... + y_n x_n = 1   (R2, oriented to eliminate y_n x_n)

Elements are kept in normal form at all times: finite linear combinations of
monomials y_a1..y_as x_b1..x_bt in which the junction y_n x_n never occurs
(R2 rewrites it away).  Coefficients live in an exact field, rationals by
default.  All values are immutable and all operations are pure, so elements
are safe to share between threads.
"""

from __future__ import annotations

from itertools import product as _iterproduct
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

from .fields import QQ

#: degree of the zero element — homogeneous of every degree
ANY_DEGREE = "any"


class ArityMismatch(ValueError):
    pass


class Monomial(NamedTuple):
    """A reduced word y_alpha x_beta; the empty word encodes 1."""

    yword: Tuple[int, ...]
    xword: Tuple[int, ...]

    def degree(self) -> int:
        return len(self.xword) - len(self.yword)

    def involute(self) -> "Monomial":
        # (y_a x_b)* = y_{rev b} x_{rev a}; reducedness is preserved since the
        # junction condition is symmetric under this swap.
        return Monomial(tuple(reversed(self.xword)), tuple(reversed(self.yword)))

    def is_reduced(self, n: int) -> bool:
        return not (
            self.yword and self.xword and self.yword[-1] == n and self.xword[0] == n
        )

    def render(self) -> str:
        parts = ["y%d" % i for i in self.yword] + ["x%d" % i for i in self.xword]
        return ".".join(parts) if parts else "1"


ONE = Monomial((), ())


def _term_key(m: Monomial):
    # canonical term order: by word lengths, then lexicographically
    return (len(m.yword), len(m.xword), m.yword, m.xword)


def _expand_junction(yw, xw, n):
    """Rewrite the single possible junction y_n x_n at the y/x seam.

    Returns a list of (Monomial, sign) with sign in {+1, -1}.
    """
    if not (yw and xw and yw[-1] == n and xw[0] == n):
        return [(Monomial(yw, xw), 1)]
    out = list(_expand_junction(yw[:-1], xw[1:], n))
    for j in range(1, n):
        # these are already reduced: the new junction letter is j != n
        out.append((Monomial(yw[:-1] + (j,), (j,) + xw[1:]), -1))
    return out


def mono_mul_terms(a: Monomial, b: Monomial, n: int):
    """Product of two reduced monomials as a list of (Monomial, sign)."""
    B = a.xword
    C = b.yword
    i = len(B)
    j = 0
    while i > 0 and j < len(C):
        if B[i - 1] != C[j]:
            return []
        i -= 1
        j += 1
    if j < len(C):
        yw = a.yword + C[j:]
        xw = b.xword
    else:
        yw = a.yword
        xw = B[:i] + b.xword
    return _expand_junction(yw, xw, n)


class Element:
    """A member of the algebra: finite map reduced Monomial -> nonzero coeff."""

    __slots__ = ("arity", "terms", "field")

    def __init__(self, arity, terms=None, field=QQ):
        self.arity = arity
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n, field=QQ):
        return cls(n, {}, field)

    @classmethod
    def one(cls, n, field=QQ):
        return cls(n, {ONE: field.one}, field)

    @classmethod
    def x(cls, i, n, field=QQ):
        _check_gen(i, n)
        return cls(n, {Monomial((), (i,)): field.one}, field)

    @classmethod
    def y(cls, i, n, field=QQ):
        _check_gen(i, n)
        return cls(n, {Monomial((i,), ()): field.one}, field)

    @classmethod
    def monomial(cls, mono: Monomial, n, field=QQ, coeff=None):
        if coeff is None:
            coeff = field.one
        acc = {}
        for m, s in _expand_junction(mono.yword, mono.xword, n):
            _accumulate(acc, m, coeff if s > 0 else -coeff)
        return cls(n, acc, field)

    @classmethod
    def from_word(cls, n, letters, field=QQ, coeff=None):
        """Reduce an arbitrary word of ('x'|'y', index) letters."""
        terms = [(coeff if coeff is not None else field.one, tuple(letters))]
        return reduce_terms(terms, n, field=field)

    # -- ring structure ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected Element, got %r" % type(other))
        if other.arity != self.arity:
            raise ArityMismatch("arity %d vs %d" % (self.arity, other.arity))

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(acc, m, c)
        return Element(self.arity, acc, self.field)

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(acc, m, -c)
        return Element(self.arity, acc, self.field)

    def __neg__(self):
        return Element(self.arity, {m: -c for m, c in self.terms.items()}, self.field)

    def scale(self, coeff):
        if not coeff:
            return Element.zero(self.arity, self.field)
        return Element(
            self.arity, {m: coeff * c for m, c in self.terms.items()}, self.field
        )

    def __mul__(self, other):
        self._check(other)
        n = self.arity
        acc = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                c = ca * cb
                for m, s in mono_mul_terms(ma, mb, n):
                    _accumulate(acc, m, c if s > 0 else -c)
        return Element(n, acc, self.field)

    def involute(self) -> "Element":
        return Element(
            self.arity, {m.involute(): c for m, c in self.terms.items()}, self.field
        )

    # -- predicates and degree --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and ONE in self.terms and self.terms[ONE] == self.field.one

    def degree(self):
        """Common degree of all monomials, None if not homogeneous.

        The zero element reports ANY_DEGREE so homogeneity checks never fail
        spuriously after cancellation.
        """
        if not self.terms:
            return ANY_DEGREE
        degs = {m.degree() for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def max_word_length(self) -> int:
        if not self.terms:
            return 0
        return max(len(m.yword) + len(m.xword) for m in self.terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            cs = self.field.render(c)
            mono = m.render()
            if mono == "1":
                text = cs
            elif cs == "1":
                text = mono
            elif cs == "-1":
                text = "-" + mono
            else:
                text = "%s*%s" % (cs, mono)
            if parts and not text.startswith("-"):
                parts.append("+" + text)
            else:
                parts.append(text)
        return " ".join(parts)

    def __repr__(self):
        return "<Element n=%d %s>" % (self.arity, self.render())

    def to_json(self):
        return [
            {"coeff": self.field.render(c), "y": list(m.yword), "x": list(m.xword)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data, n, field=QQ):
        acc = Element.zero(n, field)
        for term in data:
            mono = Monomial(tuple(term.get("y", ())), tuple(term.get("x", ())))
            acc = acc + cls.monomial(mono, n, field, coeff=field.parse(str(term["coeff"])))
        return acc


def _check_gen(i, n):
    if not 1 <= i <= n:
        raise ValueError("generator index %d out of range 1..%d" % (i, n))


def _accumulate(acc, m, c):
    v = acc.get(m)
    if v is None:
        if c:
            acc[m] = c
    else:
        v = v + c
        if v:
            acc[m] = v
        else:
            del acc[m]


# -- general word reduction ------------------------------------------------

Letter = Tuple[str, int]


def _redexes(word, n):
    out = []
    for p in range(len(word) - 1):
        (k1, i1), (k2, i2) = word[p], word[p + 1]
        if k1 == "x" and k2 == "y":
            out.append(p)
        elif k1 == "y" and i1 == n and k2 == "x" and i2 == n:
            out.append(p)
    return out


def reduce_terms(terms, n, field=QQ, rng=None):
    """Rewrite a formal combination of words to its normal form.

    ``terms`` is an iterable of (coeff, word) with word a sequence of letters
    ('x', i) or ('y', i).  ``rng`` (a random.Random) selects which redex to
    contract at each step; any choice yields the same result, which is what
    the confluence tests exercise.  The default is leftmost reduction.
    """
    acc = {}
    stack = [(c, tuple(w)) for c, w in terms]
    while stack:
        c, word = stack.pop()
        if not c:
            continue
        positions = _redexes(word, n)
        if not positions:
            yw = tuple(i for k, i in word if k == "y")
            xw = tuple(i for k, i in word if k == "x")
            _accumulate(acc, Monomial(yw, xw), c)
            continue
        p = rng.choice(positions) if rng is not None else positions[0]
        (k1, i1), (k2, i2) = word[p], word[p + 1]
        rest = word[:p] + word[p + 2:]
        if k1 == "x":
            if i1 == i2:
                stack.append((c, rest))
            # i1 != i2: the term vanishes
        else:
            # y_n x_n -> 1 - sum_{j<n} y_j x_j
            stack.append((c, rest))
            for j in range(1, n):
                stack.append((-c, word[:p] + (("y", j), ("x", j)) + word[p + 2:]))
    return Element(n, acc, field)


def reduce_word(word, n, field=QQ, rng=None):
    return reduce_terms([(field.one, tuple(word))], n, field=field, rng=rng)


# -- degree-zero matrix embedding -----------------------------------------


def degree_zero_image(elem: Element, level: int):
    """Image of a degree-0 element in the matrix algebra of size n**level.

    A monomial y_a x_b with |a| = |b| = t maps to the sum over all words w of
    length level - t of the matrix unit indexed by (a+w, reversed(b)+w),
    rows and columns indexed by length-``level`` words over {1..n} in
    lexicographic order.  The element must be homogeneous of degree 0 with all its y-words
    of length at most ``level``.
    """
    n = elem.arity
    deg = elem.degree()
    if deg not in (0, ANY_DEGREE):
        raise ValueError("element is not homogeneous of degree 0")
    if elem.terms and max(len(m.yword) for m in elem.terms) > level:
        raise ValueError("level %d too small for this element" % level)
    size = n**level
    zero = elem.field.zero
    mat = [[zero] * size for _ in range(size)]

    def index(word):
        idx = 0
        for letter in word:
            idx = idx * n + (letter - 1)
        return idx

    for m, c in elem.terms.items():
        t = len(m.yword)
        # x_b y_c contracts to delta exactly when c is reversed(b), so the
        # column word must be read in reverse for the map to respect products
        col_word = tuple(reversed(m.xword))
        for w in _iterproduct(range(1, n + 1), repeat=level - t):
            row = index(m.yword + w)
            col = index(col_word + w)
            mat[row][col] = mat[row][col] + c
    return mat
