"""Farey sequences and the modular residue partition they induce.

Everything here is exact integer/rational arithmetic (stdlib ``Fraction``);
interval membership at boundaries must never go through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrime, OrderTooLarge
from .power import is_prime


@dataclass(frozen=True, eq=False)
class FareySequence:
    """All reduced fractions in [0, 1] with denominator <= n, ascending."""

    n: int
    entries: tuple[Fraction, ...]

    @property
    def phi(self) -> int:
        """Number of entries excluding 0."""
        return len(self.entries) - 1


def farey_sequence(n: int) -> FareySequence:
    """Enumerate the order-n sequence by generating all reduced s/m and sorting."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    entries = {Fraction(s, m) for m in range(1, n + 1) for s in range(0, m + 1)}
    return FareySequence(n, tuple(sorted(entries)))


def phi_count(n: int) -> int:
    """Count the fractions of order n other than 0, by direct coprimality count.

    Kept independent of any totient sieve so the totient-sum identity stays a
    two-route check.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return sum(
        1
        for m in range(1, n + 1)
        for s in range(1, m + 1)
        if math.gcd(s, m) == 1
    )


@dataclass(frozen=True, eq=False)
class ResiduePartition:
    """Classes A_1..A_phi partitioning {1..p-1} by open Farey intervals.

    ``classes[i]`` holds the integers strictly between p*f_i and p*f_{i+1};
    classes may be empty. No m <= n members of one class (repeats allowed)
    sum to 0 modulo p; the oracles module checks that exhaustively.
    """

    p: int
    n: int
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, residue: int) -> int:
        """0-based class index of a residue in {1..p-1}."""
        idx = self._lookup().get(residue)
        if idx is None:
            raise ValueError(f"residue {residue} not in 1..{self.p - 1}")
        return idx

    def _lookup(self) -> dict[int, int]:
        lookup = getattr(self, "_cache", None)
        if lookup is None:
            lookup = {}
            for i, cls in enumerate(self.classes):
                for a in cls:
                    lookup[a] = i
            object.__setattr__(self, "_cache", lookup)
        return lookup

    def to_json_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "classes": [list(c) for c in self.classes]}


def residue_partition(p: int, n: int) -> ResiduePartition:
    """Partition {1..p-1} into the open-interval classes of the order-n sequence.

    Requires p prime and 1 <= n <= p-1: primality keeps every boundary p*s/m
    (m <= n < p) non-integral, which is what makes the classes a partition.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if n < 1 or n >= p:
        raise OrderTooLarge(n, p)
    entries = farey_sequence(n).entries
    classes = []
    for lo_frac, hi_frac in zip(entries, entries[1:]):
        lo = p * lo_frac
        hi = p * hi_frac
        first = math.floor(lo) + 1
        last = math.ceil(hi) - 1
        classes.append(tuple(range(first, last + 1)))
    return ResiduePartition(p, n, tuple(classes))
