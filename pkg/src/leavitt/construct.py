"""Construction of the 2n generator matrices of the d x d matrix ring.

The first q matrices carry x_1..x_{qd} down column 1; X_{q+1} and X_{q+2}
mix column entries with shift blocks of 1s; the remaining matrices are
filled, in column d, with the (d-1)(n-1)+1 monomials of "The List"

    x_1^{d-1},  x_u x_1^t  for 2 <= u <= n, 0 <= t <= d-2,

subject to the class constraint: an entry with head index u may only sit in
a row whose index lies in the same class (S1hat/S2hat) as u mod d.  Any
class-compatible bijection of List entries onto the open boxes works; the
canonical placement is a deterministic first-fit, and a seeded strategy
draws a uniformly random compatible bijection.

Also provided: the lexicographic generator family (which is generally not
generating), the degree-one family for d | n, and the count of generator
permutations respecting the class constraint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import factorial, gcd
from typing import Dict, List, Optional, Tuple

from .algebra import Element, Monomial
from .fields import QQ
from .matrices import LMatrix
from .profiles import NotCoprime, Profile, make_profile


class NotDivisible(ValueError):
    pass


@dataclass(frozen=True)
class ListEntry:
    """x_u x_1^t; the head entry is encoded as (u=1, t=d-1) for x_1^{d-1}."""

    u: int
    t: int

    def monomial(self) -> Monomial:
        if self.u == 1:
            return Monomial((), (1,) * self.t)
        return Monomial((), (self.u,) + (1,) * self.t)

    def render(self) -> str:
        return self.monomial().render()


#: a box is a (matrix index, row) pair; the column is d for every box
Box = Tuple[int, int]


def the_list(profile: Profile) -> List[ListEntry]:
    """All placement entries in row-major order, head entry first."""
    n, d = profile.n, profile.d
    if d < 2:
        return []
    entries = [ListEntry(1, d - 1)]
    for t in range(d - 2, -1, -1):
        for u in range(2, n + 1):
            entries.append(ListEntry(u, t))
    return entries


def boxes(profile: Profile) -> List[Box]:
    """Open boxes in canonical order: matrix index ascending, rows in the
    order the h-sequence visits them; matrix q+2 only has rows r-1..d."""
    out = []
    for m in range(profile.q + 2, profile.n + 1):
        for row in profile.hseq:
            if m == profile.q + 2 and row < profile.r - 1:
                continue
            out.append((m, row))
    return out


@dataclass
class Placement:
    assignment: Dict[Box, ListEntry]
    strategy: str
    seed: Optional[int] = None

    def box_of(self, entry: ListEntry) -> Box:
        for box, e in self.assignment.items():
            if e == entry:
                return box
        raise KeyError("entry %s not placed" % entry.render())

    def to_json(self):
        return [
            {"entry": e.render(), "u": e.u, "t": e.t, "matrix": m, "row": i}
            for (m, i), e in sorted(self.assignment.items())
        ]


def validate_placement(profile: Profile, placement: Placement) -> None:
    entries = the_list(profile)
    all_boxes = boxes(profile)
    assigned = placement.assignment
    if sorted(assigned.keys()) != sorted(all_boxes):
        raise ValueError("placement does not cover the boxes exactly once")
    used = list(assigned.values())
    if sorted((e.u, e.t) for e in used) != sorted((e.u, e.t) for e in entries):
        raise ValueError("placement does not use each List entry exactly once")
    for (m, row), e in assigned.items():
        if profile.class_of(row) != profile.class_of(e.u):
            raise ValueError(
                "entry %s (class %d) placed in row %d (class %d)"
                % (e.render(), profile.class_of(e.u), row, profile.class_of(row))
            )


def make_placement(
    profile: Profile, strategy: str = "canonical", seed: Optional[int] = None
) -> Placement:
    entries = the_list(profile)
    all_boxes = boxes(profile)
    if strategy == "canonical":
        assignment = {}
        remaining = list(entries)
        for box in all_boxes:
            row_class = profile.class_of(box[1])
            for idx, e in enumerate(remaining):
                if profile.class_of(e.u) == row_class:
                    assignment[box] = remaining.pop(idx)
                    break
            else:
                raise AssertionError("counting identity violated: no entry fits")
    elif strategy == "random":
        rng = random.Random(seed)
        assignment = {}
        for cls in (1, 2):
            cls_entries = [e for e in entries if profile.class_of(e.u) == cls]
            cls_boxes = [b for b in all_boxes if profile.class_of(b[1]) == cls]
            assert len(cls_entries) == len(cls_boxes)
            rng.shuffle(cls_entries)
            assignment.update(zip(cls_boxes, cls_entries))
    else:
        raise ValueError("unknown placement strategy %r" % strategy)
    placement = Placement(assignment, strategy, seed)
    validate_placement(profile, placement)
    return placement


@dataclass
class GeneratorSet:
    n: int
    d: int
    X: List[LMatrix]
    Y: List[LMatrix]
    provenance: str
    placement: Optional[Placement] = None
    name: Optional[str] = None

    @property
    def field(self):
        return self.X[0].field

    def to_json(self):
        doc = {
            "n": self.n,
            "d": self.d,
            "provenance": self.provenance,
            "X": [x.to_json() for x in self.X],
        }
        if self.name:
            doc["name"] = self.name
        if self.placement is not None:
            doc["placement"] = self.placement.to_json()
            doc["strategy"] = self.placement.strategy
            if self.placement.seed is not None:
                doc["seed"] = self.placement.seed
        return doc


def from_x_matrices(n, d, xs, provenance, placement=None, name=None) -> GeneratorSet:
    ys = [x.involute() for x in xs]
    return GeneratorSet(n, d, xs, ys, provenance, placement, name)


def build_generators(
    profile: Profile, placement: Optional[Placement] = None, field=QQ
) -> GeneratorSet:
    """The 2n matrices of the construction for a given placement."""
    n, d, q, r, s = profile.n, profile.d, profile.q, profile.r, profile.s
    if d >= 2:
        if placement is None:
            placement = make_placement(profile)
        validate_placement(profile, placement)
    else:
        placement = Placement({}, "canonical")
    one = Element.one(n, field)

    def xe(w):
        return Element.x(w, n, field)

    xs = []
    for i in range(1, q + 1):
        xs.append(LMatrix(d, n, {(j, 1): xe((i - 1) * d + j) for j in range(1, d + 1)}, field))

    ent = {}
    for i in range(1, d - r + 1):
        ent[(i + r, i + 1)] = one
    for t in range(1, r + 1):
        ent[(t, 1)] = xe(q * d + t)
    xs.append(LMatrix(d, n, ent, field))  # X_{q+1}

    for m in range(q + 2, n + 1):
        ent = {}
        if m == q + 2:
            for j in range(1, r - 1):
                ent[(j, j + s)] = one
        for (mm, row), entry in placement.assignment.items():
            if mm == m:
                ent[(row, d)] = Element.monomial(entry.monomial(), n, field)
        xs.append(LMatrix(d, n, ent, field))

    return from_x_matrices(n, d, xs, "main-construction", placement)


def build_graded_generators(n: int, d: int, field=QQ) -> GeneratorSet:
    """Degree-one generator family, defined when d divides n: matrix number
    (c-1)*(n/d)+k has column c equal to x_{(k-1)d+1}, ..., x_{kd}."""
    if n % d != 0:
        raise NotDivisible("%d does not divide %d" % (d, n))
    per_col = n // d
    xs = []
    for c in range(1, d + 1):
        for k in range(1, per_col + 1):
            ent = {
                (j, c): Element.x((k - 1) * d + j, n, field) for j in range(1, d + 1)
            }
            xs.append(LMatrix(d, n, ent, field))
    return from_x_matrices(n, d, xs, "graded")


def leavitt_lexicographic_generators(n: int, d: int, field=QQ) -> GeneratorSet:
    """Lexicographic fill: cells are visited column-major across all matrices
    in blocks of d, with x_1..x_n written cyclically; the column advances
    each time the variable index wraps."""
    if gcd(d, n - 1) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (d, n - 1))
    if d >= n:
        raise ValueError("requires d < n")
    cells = [{} for _ in range(n)]
    for g in range(n * d):
        mat = g // d
        row = (g % d) + 1
        col = (g // n) + 1
        var = (g % n) + 1
        cells[mat][(row, col)] = Element.x(var, n, field)
    xs = [LMatrix(d, n, ent, field) for ent in cells]
    return from_x_matrices(n, d, xs, "leavitt-lex")


def automorphism_count(profile: Profile) -> int:
    """Number of class-respecting entry permutations of the placed matrices,
    each of which induces a distinct automorphism:
    d * (n-(q+2))! * e1! * e2! * (d1! * d2!)^(n-(q+2))."""
    if profile.d == 1:
        return 1
    n, d, q = profile.n, profile.d, profile.q
    m = n - (q + 2)
    return (
        d
        * factorial(m)
        * factorial(profile.e1)
        * factorial(profile.e2)
        * (factorial(profile.d1) * factorial(profile.d2)) ** m
    )
