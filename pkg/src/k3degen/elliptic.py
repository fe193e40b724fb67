"""Kodaira singular-fiber bookkeeping for elliptic K3 surfaces.

Euler numbers and fiber component counts are standard constants of the
Kodaira classification; an elliptic K3 has total Euler number 24, and the
zero section plus fiber components span the trivial lattice of rank
2 + sum(components - 1). The arithmetic here is the tame, characteristic-0
one; wild fibers in characteristic 2 or 3 can contribute more.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


class ImpossibleConfiguration(Exception):
    """Raised when a fiber configuration cannot live on a K3 surface."""


_FIXED_EULER = {"II": 2, "III": 3, "IV": 4, "II*": 10, "III*": 9, "IV*": 8}
_FIXED_COMPONENTS = {"II": 1, "III": 2, "IV": 3, "II*": 9, "III*": 8, "IV*": 7}

_FIBER_RE = re.compile(r"^I(\d+)(\*?)$")


@dataclass(frozen=True)
class KodairaFiber:
    """One singular fiber: kind "I" or "I*" with an index n, or one of the
    fixed kinds II, III, IV, II*, III*, IV*."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind == "I":
            if self.n is None or self.n < 1:
                raise ValueError("I(n) requires n >= 1")
        elif self.kind == "I*":
            if self.n is None or self.n < 0:
                raise ValueError("I*(n) requires n >= 0")
        elif self.kind in _FIXED_EULER:
            if self.n is not None:
                raise ValueError(f"{self.kind} takes no index")
        else:
            raise ValueError(f"unknown Kodaira fiber kind {self.kind!r}")

    @classmethod
    def parse(cls, label: str) -> "KodairaFiber":
        """Parse labels like "I1", "I11", "I0*", "II", "IV*"."""
        label = label.strip()
        if label in _FIXED_EULER:
            return cls(label)
        match = _FIBER_RE.match(label)
        if match:
            n = int(match.group(1))
            return cls("I*" if match.group(2) else "I", n)
        raise ValueError(f"cannot parse Kodaira fiber label {label!r}")

    def __str__(self):
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind


def euler_number(f: KodairaFiber) -> int:
    """Euler number of the fiber: n for I(n), n + 6 for I*(n), table otherwise."""
    if f.kind == "I":
        return f.n
    if f.kind == "I*":
        return f.n + 6
    return _FIXED_EULER[f.kind]


def component_count(f: KodairaFiber) -> int:
    """Number of irreducible components: n for I(n), n + 5 for I*(n)."""
    if f.kind == "I":
        return f.n
    if f.kind == "I*":
        return f.n + 5
    return _FIXED_COMPONENTS[f.kind]


class FiberConfiguration:
    """A multiset of Kodaira fibers."""

    def __init__(self, fibers):
        self.fibers = Counter()
        for item in fibers:
            if isinstance(item, KodairaFiber):
                self.fibers[item] += 1
            else:
                self.fibers[KodairaFiber.parse(item)] += 1

    @classmethod
    def from_json(cls, data) -> "FiberConfiguration":
        """Accepts a list of labels (with repeats) or a label -> count map."""
        if isinstance(data, dict):
            labels = []
            for label, count in data.items():
                count = int(count)
                if count < 1:
                    raise ValueError(f"fiber count must be positive, got {count}")
                labels.extend([label] * count)
            return cls(labels)
        return cls(data)

    def to_json_dict(self) -> dict:
        return {str(f): count for f, count in sorted(self.fibers.items(), key=lambda kv: str(kv[0]))}

    def euler_sum(self) -> int:
        return sum(euler_number(f) * count for f, count in self.fibers.items())

    def check_k3(self) -> bool:
        """True iff the Euler numbers sum to 24."""
        return self.euler_sum() == 24

    def trivial_lattice_rank(self) -> int:
        """Rank of the trivial lattice: 2 + sum over fibers of (components - 1).

        A rank above 22 cannot fit in H^2 of a K3 in any characteristic, so
        such configurations are rejected.
        """
        rank = 2 + sum((component_count(f) - 1) * count for f, count in self.fibers.items())
        if rank > 22:
            raise ImpossibleConfiguration(
                f"trivial lattice rank {rank} exceeds the K3 bound 22"
            )
        return rank


def check_k3_config(c: FiberConfiguration) -> bool:
    return c.check_k3()


def trivial_lattice_rank(c: FiberConfiguration) -> int:
    return c.trivial_lattice_rank()
