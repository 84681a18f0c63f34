"""Exact coefficient fields.

Two modes are supported: rational numbers (the default, via
:class:`fractions.Fraction`) and prime fields GF(p).  Every constant that
arises in the generator constructions is 0 or +-1, so nothing is lost by
working over the rationals; the prime-field mode exists purely for speed on
large sweeps.
"""

from __future__ import annotations

import re
from fractions import Fraction


class FpElement:
    """A residue mod p with arithmetic that coerces plain ints."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields: %d vs %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * pow(o.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (FpElement, int)) else None
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "FpElement(%d, p=%d)" % (self.value, self.p)


class RationalField:
    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def parse(self, text: str) -> Fraction:
        return Fraction(text)

    def render(self, c) -> str:
        return str(Fraction(c))

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError("not a prime: %d" % p)
        self.p = p
        self.name = "fp%d" % p

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def from_int(self, k: int) -> FpElement:
        return FpElement(k, self.p)

    def parse(self, text: str) -> FpElement:
        if "/" in text:
            num, den = text.split("/")
            return self.from_int(int(num)) / self.from_int(int(den))
        return self.from_int(int(text))

    def render(self, c) -> str:
        return str(c.value if isinstance(c, FpElement) else c % self.p)

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = RationalField()


def field_from_name(name: str):
    """Resolve a field spec: "rational" or "fp<p>" (e.g. "fp101")."""
    if name == "rational":
        return QQ
    m = re.fullmatch(r"fp(\d+)", name)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError("unknown coefficient field %r" % name)
