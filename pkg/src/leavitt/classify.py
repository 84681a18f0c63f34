"""Classification of the matrix rings M_d(L_n) up to isomorphism.

The invariant is the pair (Z/(n-1)Z, class of d): the Grothendieck group of
the ring together with the image of the identity.  Two matrix sizes over the
same L_n give isomorphic rings exactly when their classes lie in the same
orbit under the units of Z/(n-1)Z, which for these cyclic groups reduces to
equality of gcd(d, n-1) and gcd(k, n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class K0Class:
    """K_0 invariant of M_d(L_n): the modulus n-1 and the unit class [d]."""

    n: int
    d: int
    modulus: int
    unit: int

    def to_json(self):
        return {
            "n": self.n,
            "d": self.d,
            "modulus": self.modulus,
            "unit_class": self.unit,
            "orbit_invariant": gcd(self.d, self.modulus) if self.modulus else 0,
        }


def k0_data(n: int, d: int) -> K0Class:
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    m = n - 1
    return K0Class(n, d, m, d % m if m else 0)


def module_type(n: int, d: int) -> Tuple[int, int]:
    """Module type (1, (n-1)/g) of M_d(L_n), with g = gcd(d, n-1): the
    rank-a and rank-b free modules are isomorphic iff a = b mod (n-1)/g."""
    g = gcd(d, n - 1)
    return (1, (n - 1) // g)


def unit_orbit(n: int, d: int) -> frozenset:
    """Direct orbit of [d] in Z/(n-1)Z under multiplication by units."""
    m = n - 1
    if m == 1:
        return frozenset({0})
    return frozenset((d * u) % m for u in range(1, m + 1) if gcd(u, m) == 1)


def is_isomorphic(n: int, d: int, m: int, k: int) -> Tuple[bool, str]:
    """Decide M_d(L_n) ~ M_k(L_m); returns (answer, reason).

    Reasons: "k0-unit-orbit" when the invariants match over the same L_n,
    "modulus-mismatch" when n != m, "prime-divisibility" when the gcd
    invariants differ.
    """
    if n != m:
        return False, "modulus-mismatch"
    if gcd(d, n - 1) == gcd(k, n - 1):
        return True, "k0-unit-orbit"
    return False, "prime-divisibility"


def graded_iso_exists(n: int, d: int) -> bool:
    """Whether M_d(L_n) ~ L_n as graded rings: d must divide a power of n."""
    rest = d
    while True:
        g = gcd(rest, n)
        if g == 1:
            break
        while rest % g == 0:
            rest //= g
    return rest == 1


def degree_one_generating_set_possible(n: int, d: int) -> bool:
    """A generating family of 2n matrices with degree +1/-1 entries exists
    precisely when d divides a power of n, i.e. iff a graded isomorphism
    exists."""
    from .profiles import NotCoprime

    if gcd(d, n - 1) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (d, n - 1))
    return graded_iso_exists(n, d)


def reduce_large_d(n: int, d: int) -> int:
    """Smallest size in 1..n-1 with the same K_0 class: ((d-1) mod (n-1))+1."""
    return ((d - 1) % (n - 1)) + 1


def classification_report(n: int, sizes: Optional[List[int]] = None) -> dict:
    """Partition the sizes 1..n-1 (or the given ones) into isomorphism
    classes of M_d(L_n) and report which are realized by the construction."""
    if sizes is None:
        sizes = list(range(1, n))
    buckets = {}
    for d in sizes:
        buckets.setdefault(gcd(d, n - 1), []).append(d)
    classes = []
    for g in sorted(buckets):
        classes.append(
            {
                "gcd": g,
                "sizes": sorted(buckets[g]),
                "module_type": list(module_type(n, buckets[g][0])),
                "isomorphic_to_l": g == 1,
            }
        )
    return {"n": n, "modulus": n - 1, "classes": classes}
