"""Integer combinatorics attached to a pair (n, d) with gcd(d, n-1) = 1.

Write n = q*d + r with 1 <= r <= d and s = d - (r-1).  The step sequences

    h_1 = 1,  h_{i+1} = h_i + s if h_i <= r-1 else h_i - (r-1)
    u_1 = s,  same step rule

are permutations of {1..d} (closed forms 1 + (i-1)s mod d and i*s mod d,
representatives taken in {1..d}).  The h-sequence splits {1..d} into the two
classes S1hat (entries up to the one equal to r-1) and S2hat (the rest);
the eight statistics d1, d2, e1, e2, f1, f2, b, t describe that split and
drive the generator construction and its counting identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple


class NotCoprime(ValueError):
    pass


class RequiresReduction(ValueError):
    pass


@dataclass(frozen=True)
class Profile:
    n: int
    d: int
    q: int
    r: int
    s: int
    hseq: Tuple[int, ...]
    useq: Tuple[int, ...]
    S1hat: frozenset
    S2hat: frozenset
    d1: int
    d2: int
    e1: int
    e2: int
    f1: int
    f2: int
    b: int
    t: int

    @property
    def trivial(self) -> bool:
        """d = 1, the degenerate r = 1 case."""
        return self.d == 1

    def class_of(self, w: int) -> int:
        """Class (1 or 2) of w in {1..n}, extending the row classes mod d."""
        _, what = self.split_index(w)
        return 1 if what in self.S1hat else 2

    def split_index(self, w: int) -> Tuple[int, int]:
        """w = q_w*d + w^ with 1 <= w^ <= d; returns (q_w, w^)."""
        if not 1 <= w <= self.n:
            raise ValueError("index %d out of range 1..%d" % (w, self.n))
        q_w, rem = divmod(w - 1, self.d)
        return q_w, rem + 1

    def counts(self) -> Tuple[int, int, int, int]:
        """(list_size, box_count, s1_box_count, s1_list_count)."""
        n, d, q, s = self.n, self.d, self.q, self.s
        list_size = (d - 1) * (n - 1) + 1
        box_count = (s + 1) + d * (n - (q + 2))
        s1_box = self.d1 * (n - (q + 2)) + self.e1
        s1_list = (d - 1) * ((q * self.d1 - 1) + self.f1) + 1
        return list_size, box_count, s1_box, s1_list

    def stats(self) -> Tuple[int, int, int, int, int, int, int, int]:
        return (self.d1, self.d2, self.e1, self.e2, self.f1, self.f2, self.b, self.t)

    def to_json(self):
        return {
            "n": self.n,
            "d": self.d,
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "hseq": list(self.hseq),
            "useq": list(self.useq),
            "s1hat": sorted(self.S1hat),
            "s2hat": sorted(self.S2hat),
            "d1": self.d1,
            "d2": self.d2,
            "e1": self.e1,
            "e2": self.e2,
            "f1": self.f1,
            "f2": self.f2,
            "b": self.b,
            "t": self.t,
        }


def _step_sequence(start: int, d: int, r: int, s: int) -> Tuple[int, ...]:
    seq = [start]
    for _ in range(d - 1):
        h = seq[-1]
        seq.append(h + s if h <= r - 1 else h - (r - 1))
    return tuple(seq)


def make_profile(n: int, d: int) -> Profile:
    """Derive the full combinatorial profile of (n, d); requires d < n."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    if gcd(d, n - 1) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (d, n - 1))
    if d >= n:
        raise RequiresReduction(
            "d=%d >= n=%d: reduce mod n-1 first (reduce_large_d)" % (d, n)
        )
    q, rem = divmod(n, d)
    if rem == 0:
        q, r = q - 1, d
    else:
        r = rem
    if r == 1:
        # coprimality forces d = 1 here; the degenerate identity case
        assert d == 1
        return Profile(
            n=n, d=1, q=n - 1, r=1, s=1,
            hseq=(1,), useq=(1,),
            S1hat=frozenset({1}), S2hat=frozenset(),
            d1=1, d2=0, e1=1, e2=0, f1=1, f2=0, b=0, t=0,
        )
    s = d - (r - 1)
    hseq = _step_sequence(1, d, r, s)
    useq = _step_sequence(s, d, r, s)
    d1 = hseq.index(r - 1) + 1
    S1hat = frozenset(hseq[:d1])
    S2hat = frozenset(hseq[d1:])
    d2 = d - d1
    e1 = sum(1 for v in S1hat if v >= r - 1)
    e2 = sum(1 for v in S2hat if v >= r - 1)
    f1 = sum(1 for v in S1hat if v <= r)
    f2 = sum(1 for v in S2hat if v <= r)
    # r-1 = 1 + (d1-1)s - t*d defines t; b = d1 - 1 - t
    t, check = divmod(1 + (d1 - 1) * s - (r - 1), d)
    assert check == 0
    b = d1 - 1 - t
    return Profile(
        n=n, d=d, q=q, r=r, s=s, hseq=hseq, useq=useq,
        S1hat=S1hat, S2hat=S2hat,
        d1=d1, d2=d2, e1=e1, e2=e2, f1=f1, f2=f2, b=b, t=t,
    )


def h_sequence_closed_form(n: int, d: int) -> Tuple[int, ...]:
    """1 + (i-1)s mod d with representatives in {1..d}; cross-check oracle."""
    p = make_profile(n, d)
    return tuple(((1 + (i - 1) * p.s - 1) % d) + 1 for i in range(1, d + 1))


def reduce_large_d(n: int, d: int) -> int:
    """The representative d' of d mod n-1 with 1 <= d' <= n-1."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    if gcd(d, n - 1) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (d, n - 1))
    return ((d - 1) % (n - 1)) + 1
