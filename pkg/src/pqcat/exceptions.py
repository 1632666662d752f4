"""Enumeration of the exceptional n for which p**q does not divide the
Fuss-Catalan number F(p**q, n).

Write X = (p**q - 1) n + 1.  Since v_p(F(p**q, n)) = (sigma_p(X) - 1)/(p - 1),
the number n is exceptional exactly when sigma_p(X) <= (p - 1)(q - 1) + 1.
X == 1 (mod p**q - 1) and sigma_p(X) == X (mod p - 1) force the digit sum
to be l = 1 or l = m (p - 1) + 1 with 1 <= m <= q - 1, so the enumeration
walks, per admissible l:

  * residue classes first: multisets (j_1 <= ... <= j_l) over {0, ..., q-1}
    with sum_i p**j_i == 1 (mod p**q - 1) -- a finite, cheap filter, since
    p**(q t + j) == p**j (mod p**q - 1);
  * then exponent lifts alpha = q t + j per class, each alpha repeated at
    most p - 1 times so the digits of X stay below p.

Digit expansions are unique, so each exceptional n is produced exactly once
and carries a canonical structural description:

  * l = 1 is the pure-power family n = (p**(t q) - 1)/(p**q - 1);
  * for q = 2 the only other family has all exponents odd, with
    multiplicities forming a composition (c_1, ..., c_s) of p;
  * for q >= 3 the description is the sorted exponent multiset itself.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Union

from .digits import PrimePower, _require_prime
from .residues import multinomial


@dataclass(frozen=True)
class PurePower:
    """n = (p**(t q) - 1) / (p**q - 1), i.e. X = p**(t q)."""

    t: int

    kind = "pure_power"


@dataclass(frozen=True)
class OddPowerSum:
    """n = (sum_k c_k p**(2 i_k + 1) - 1) / (p**2 - 1) with i_1 < ... < i_s,
    every c_k >= 1 and sum c_k = p (the q = 2 family)."""

    terms: tuple[tuple[int, int], ...]  # (c_k, i_k) pairs, i ascending

    kind = "odd_power_sum"

    @property
    def composition(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.terms)


@dataclass(frozen=True)
class GeneralSum:
    """X = sum of p**alpha over the recorded sorted exponent multiset."""

    exponents: tuple[int, ...]

    kind = "general_sum"


Form = Union[PurePower, OddPowerSum, GeneralSum]


@dataclass(frozen=True)
class ExceptionForm:
    """An exceptional n together with its structural description(s)."""

    value: int
    pp: PrimePower
    forms: tuple[Form, ...]

    @property
    def kind(self) -> str:
        return self.forms[0].kind


def _pure_powers(pp: PrimePower, bound: int) -> Iterator[tuple[int, PurePower]]:
    mod = pp.modulus - 1
    t = 1
    while True:
        n = (pp.modulus**t - 1) // mod
        if n > bound:
            return
        yield n, PurePower(t)
        t += 1


def _residue_class_multisets(p: int, q: int, l: int) -> Iterator[tuple[int, ...]]:
    mod = p**q - 1
    for combo in combinations_with_replacement(range(q), l):
        if sum(p**j for j in combo) % mod == 1 % mod:
            yield combo


def _lift_class(p: int, q: int, j: int, slots: int, budget: int, t_min: int = 0) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Sums of `slots` powers p**(q t + j), t >= t_min, each exponent used at
    most p - 1 times, with total <= budget.  Yields (sum, sorted exponents)."""
    if slots == 0:
        yield 0, ()
        return
    t = t_min
    while True:
        base = p ** (q * t + j)
        if base > budget:
            return
        for k in range(1, min(slots, p - 1) + 1):
            used = base * k
            if used > budget:
                break
            for rest_sum, rest in _lift_class(p, q, j, slots - k, budget - used, t + 1):
                yield used + rest_sum, (q * t + j,) * k + rest
        t += 1


def _sum_family(pp: PrimePower, bound: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All exceptional n <= bound with digit sum of X above 1, as
    (n, sorted exponent multiset of X) pairs."""
    p, q = pp.p, pp.q
    mod = pp.modulus - 1
    budget = mod * bound + 1
    for m in range(1, q):
        l = m * (p - 1) + 1
        for classes in _residue_class_multisets(p, q, l):
            grouped = sorted(Counter(classes).items())

            def rec(idx: int, acc_sum: int, acc: tuple[int, ...]) -> Iterator[tuple[int, tuple[int, ...]]]:
                if idx == len(grouped):
                    yield acc_sum, tuple(sorted(acc))
                    return
                j, slots = grouped[idx]
                for s, alphas in _lift_class(p, q, j, slots, budget - acc_sum):
                    yield from rec(idx + 1, acc_sum + s, acc + alphas)

            for x, alphas in rec(0, 0, ()):
                n = (x - 1) // mod
                if 1 <= n <= bound:
                    yield n, alphas


def _merge(pp: PrimePower, tagged: Iterator[tuple[int, Form]]) -> list[ExceptionForm]:
    by_value: dict[int, list[Form]] = {}
    for n, form in tagged:
        by_value.setdefault(n, []).append(form)
    return [ExceptionForm(n, pp, tuple(by_value[n])) for n in sorted(by_value)]


def enumerate_q1(p: int, bound: int) -> list[ExceptionForm]:
    """All n <= bound with p not dividing F(p, n): the repunit-like family
    n = 1 + p + ... + p**(t-1), ascending."""
    _require_prime(p)
    pp = PrimePower(p, 1)
    if bound < 1:
        return []
    return _merge(pp, iter(_pure_powers(pp, bound)))


def enumerate_q2(p: int, bound: int) -> list[ExceptionForm]:
    """All n <= bound with p**2 not dividing F(p**2, n), ascending, each
    tagged as a pure power or a sum of odd powers with its composition."""
    _require_prime(p)
    pp = PrimePower(p, 2)
    if bound < 1:
        return []

    def tagged() -> Iterator[tuple[int, Form]]:
        yield from _pure_powers(pp, bound)
        for n, alphas in _sum_family(pp, bound):
            counts = Counter(alphas)
            terms = tuple((counts[a], (a - 1) // 2) for a in sorted(counts))
            yield n, OddPowerSum(terms)

    return _merge(pp, tagged())


def enumerate_qgeq3(pp: PrimePower, bound: int) -> list[ExceptionForm]:
    """All n <= bound with p**q not dividing F(p**q, n) for odd p, q >= 3.

    The structural characterization needs an odd prime; p = 2 with q >= 3
    is rejected (only a brute-force sweep covers it).
    """
    if pp.p == 2 or pp.q < 3:
        raise ValueError(f"structural enumeration needs odd p and q >= 3, got {pp}")
    if bound < 1:
        return []

    def tagged() -> Iterator[tuple[int, Form]]:
        yield from _pure_powers(pp, bound)
        for n, alphas in _sum_family(pp, bound):
            yield n, GeneralSum(alphas)

    return _merge(pp, tagged())


def enumerate_exceptions(pp: PrimePower, bound: int) -> list[ExceptionForm]:
    """Dispatch to the structural enumerator for this (p, q).

    Raises ValueError for p = 2 with q >= 3, where no structural family is
    implemented.
    """
    if pp.q == 1:
        return enumerate_q1(pp.p, bound)
    if pp.q == 2:
        return enumerate_q2(pp.p, bound)
    return enumerate_qgeq3(pp, bound)


def residue_of_exception(form: ExceptionForm) -> int:
    """F(p**2, n) mod p**2 for a q = 2 exception: 1 on the pure-power
    family, else the multinomial p!/(c_1! ... c_s!) of the composition."""
    if form.pp.q != 2:
        raise ValueError(f"residues by structure only apply to q = 2, got {form.pp}")
    first = form.forms[0]
    p2 = form.pp.modulus
    if isinstance(first, PurePower):
        return 1 % p2
    if isinstance(first, OddPowerSum):
        return multinomial(form.pp.p, first.composition) % p2
    raise ValueError(f"unexpected form {first!r} for q = 2")


def count_exceptions_q2(p: int, exponent_bound: int) -> int:
    """C(exponent_bound, p): the number of odd-power-sum exceptions whose p
    exponents are drawn strictly increasing from exponent_bound choices.

    This is the counting convention of the headline bounds (289180 pairs
    for p = 2 from 761 choices, 18088476 triples for p = 3 from 478); sums
    with repeated exponents and the pure-power family are not counted.
    """
    _require_prime(p)
    if exponent_bound < 1:
        raise ValueError(f"need exponent_bound >= 1, got {exponent_bound}")
    return comb(exponent_bound, p)
