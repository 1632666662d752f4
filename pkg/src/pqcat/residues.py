"""Integer partitions and the least-residue set of F(p**2, n) mod p**2.

Every residue of F(p**2, n) is either 0 (the divisible case), 1 (the
pure-power family) or a multinomial p!/(c_1! ... c_s!) mod p**2 for a
partition (c_1, ..., c_s) of p, so the whole table falls out of a
partition scan with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .digits import _require_prime, is_prime


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def total(self) -> int:
        return sum(self.parts)


def partitions_of(p: int) -> list[Partition]:
    """All partitions of p >= 1, largest-first within each partition, in
    reverse lexicographic order ((p,) first, (1,...,1) last)."""
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for k in range(min(remaining, cap), 0, -1):
            rec(remaining - k, k, prefix + (k,))

    rec(p, p, ())
    return out


def multinomial(total: int, parts: Sequence[int]) -> int:
    """total! / (c_1! ... c_s!) for parts summing to total; exact integer."""
    if sum(parts) != total:
        raise ValueError(f"parts {tuple(parts)} do not sum to {total}")
    value = factorial(total)
    for c in parts:
        value //= factorial(c)
    return value


def residue_set_p2(p: int) -> list[int]:
    """Sorted distinct least residues of F(p**2, n) mod p**2 over all n >= 0.

    Always contains 0 and 1; the rest are the multinomial residues of the
    partitions of p, computed exactly and reduced.
    """
    _require_prime(p)
    p2 = p * p
    residues = {0, 1 % p2}
    for part in partitions_of(p):
        residues.add(multinomial(p, part.parts) % p2)
    return sorted(residues)


def residue_count_sequence(s_max: int) -> list[int | None]:
    """Sizes of the residue sets of F(s**2, .) mod s**2 for s = 1..s_max.

    Only prime s are supported by the partition construction; other s are
    reported as None.
    """
    if s_max < 1:
        raise ValueError(f"need s_max >= 1, got {s_max}")
    return [len(residue_set_p2(s)) if is_prime(s) else None for s in range(1, s_max + 1)]
