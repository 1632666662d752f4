"""Base-p digit primitives: expansions, digit sums, carries, valuations.

Everything here is exact integer arithmetic.  The numbers being expanded
may be arbitrarily large (structural exception witnesses reach sizes like
2**1520); the returned digit sums, carry counts and valuations always fit
comfortably in machine words.
"""

from __future__ import annotations

from dataclasses import dataclass, field

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BELOW = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test.

    The fixed witness set is proven complete below ~3.3e24, far beyond any
    prime this library is asked about; larger inputs are rejected rather
    than answered probabilistically.
    """
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_PROVEN_BELOW:
        raise ValueError(f"primality only decided deterministically below 3.3e24: {n}")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def _require_nonneg(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")


@dataclass(frozen=True)
class PrimePower:
    """A validated prime power: prime p, exponent q >= 1, cached p**q."""

    p: int
    q: int
    modulus: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"exponent must be >= 1, got {self.q}")
        _require_prime(self.p)
        object.__setattr__(self, "modulus", self.p**self.q)

    def __str__(self) -> str:
        return f"{self.p}^{self.q}"


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-p digits: digits[i] is the coefficient of p**i.

    Canonical form: the last digit is nonzero, so zero is the empty vector.
    """

    digits: tuple[int, ...]
    base: int

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("non-canonical digit vector: trailing zero limb")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}")

    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def digit(self, i: int) -> int:
        """Digit at power i, zero beyond the stored length."""
        return self.digits[i] if 0 <= i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __str__(self) -> str:
        # humans read most-significant-first
        if not self.digits:
            return f"0 (base {self.base})"
        sep = "" if self.base <= 10 else ","
        return sep.join(str(d) for d in reversed(self.digits)) + f" (base {self.base})"


def to_base_p(n: int, p: int) -> DigitVector:
    """Expand n >= 0 in base p, least-significant digit first."""
    _require_prime(p)
    _require_nonneg(n)
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitVector(tuple(digits), p)


def sigma_p(n: int, p: int) -> int:
    """Sum of the base-p digits of n."""
    _require_prime(p)
    _require_nonneg(n)
    if p == 2:
        return n.bit_count()
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return s


def legendre_valuation_factorial(n: int, p: int) -> int:
    """v_p(n!) as the sum of floor(n / p**i) over i >= 1.

    Equals (n - sigma_p(n)) / (p - 1).
    """
    _require_prime(p)
    _require_nonneg(n)
    total = 0
    while n:
        n //= p
        total += n
    return total


def kummer_carries(n: int, r: int, p: int, from_digit: int = 0) -> int:
    """Number of carries at digit positions >= from_digit when adding n and
    r in base p.

    With from_digit = 0 this equals v_p(C(n + r, n)); larger from_digit
    counts only the carries on or beyond that digit, the quantity the
    prime-power congruence needs for its sign.
    """
    _require_prime(p)
    _require_nonneg(n)
    _require_nonneg(r, "r")
    _require_nonneg(from_digit, "from_digit")
    carry = 0
    count = 0
    i = 0
    while n or r or carry:
        if n % p + r % p + carry >= p:
            carry = 1
            if i >= from_digit:
                count += 1
        else:
            carry = 0
        n //= p
        r //= p
        i += 1
    return count


def binom_valuation(m: int, n: int, p: int) -> int:
    """v_p(C(m, n)) via Kummer's carry count for n + (m - n)."""
    _require_nonneg(n)
    if n > m:
        raise ValueError(f"need n <= m, got m={m} n={n}")
    return kummer_carries(n, m - n, p)
