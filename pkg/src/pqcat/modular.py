"""Binomial coefficients modulo p and modulo p**q.

Lucas' digitwise product handles the prime modulus; the prime-power case
splits C(m, n) into p**e0 times a unit and computes the unit from window
products of the p-free factorial n!_p (the product of all k <= n coprime
to p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .digits import PrimePower, _require_nonneg, _require_prime

# prefix tables of k!_p mod p**q are only built for moduli up to this size
_FACT_TABLE_MAX = 1 << 22


@lru_cache(maxsize=None)
def _unit_factorial_table(p: int, q: int) -> tuple[int, ...] | None:
    """table[r] = product of k <= r with p !| k, reduced mod p**q."""
    pq = p**q
    if pq > _FACT_TABLE_MAX:
        return None
    table = [1] * pq
    acc = 1
    for k in range(1, pq):
        if k % p:
            acc = acc * k % pq
        table[k] = acc
    return tuple(table)


def factorial_p_mod(n: int, pp: PrimePower) -> int:
    """n!_p mod p**q: the product of all integers <= n not divisible by p.

    The product over any block of p**q consecutive integers coprime to p is
    one fixed unit W (generalized Wilson: -1 except +1 for p = 2, q >= 3).
    W is computed from the table rather than hard-coded, so n!_p reduces to
    W**(n div p**q) times a prefix product of the remainder: O(min(n, p**q)).
    """
    _require_nonneg(n)
    pq = pp.modulus
    blocks, rem = divmod(n, pq)
    table = _unit_factorial_table(pp.p, pp.q)
    if table is not None:
        return pow(table[pq - 1], blocks, pq) * table[rem] % pq
    # modulus too large for a table: direct products
    acc = 1
    if blocks:
        w = 1
        for k in range(1, pq):
            if k % pp.p:
                w = w * k % pq
        acc = pow(w, blocks, pq)
    for k in range(1, rem + 1):
        if k % pp.p:
            acc = acc * k % pq
    return acc


def lucas_binom_mod_p(m: int, n: int, p: int) -> int:
    """C(m, n) mod p as the product of the digitwise binomials C(m_i, n_i).

    n > m is allowed and gives 0, matching the vanishing binomial.
    """
    _require_prime(p)
    _require_nonneg(m, "m")
    _require_nonneg(n)
    out = 1
    while m or n:
        mi = m % p
        ni = n % p
        if ni > mi:
            return 0
        out = out * comb(mi, ni) % p
        m //= p
        n //= p
    return out


@dataclass(frozen=True)
class GranvilleResult:
    """The split C(m, n) = p**e0 * unit with the unit reduced mod p**q."""

    e0: int
    unit_residue: int


def granville_binom_mod_pq(m: int, n: int, pp: PrimePower) -> GranvilleResult:
    """Valuation e0 = v_p(C(m, n)) and the residue of C(m, n)/p**e0 mod p**q.

    Write r = m - n and read q-digit windows off the base-p expansions:
    M_j = m_j + m_{j+1} p + ... + m_{j+q-1} p**(q-1), likewise N_j and R_j.
    Then, with e_j the number of carries at positions >= j when adding n
    and r,

        C(m, n) / p**e0  ==  s**e_{q-1} * prod_j M_j!_p / (N_j!_p R_j!_p)
                                                           (mod p**q),

    where the sign s is -1 except for p = 2 with q >= 3, where it is +1.
    Windows are taken verbatim from the digits, padding with zeros beyond
    the top of each expansion (an all-zero window contributes 0!_p = 1);
    j runs over the digit positions of m, the widest of the three.
    """
    _require_nonneg(n)
    if n > m:
        raise ValueError(f"need 0 <= n <= m, got m={m} n={n}")
    p, q, pq = pp.p, pp.q, pp.modulus
    if m == 0:
        return GranvilleResult(0, 1 % pq)
    r = m - n

    md: list[int] = []
    mm = m
    while mm:
        mm, d = divmod(mm, p)
        md.append(d)
    width = len(md)

    def expand(x: int) -> list[int]:
        out = [0] * width
        i = 0
        while x:
            x, out[i] = divmod(x, p)
            i += 1
        return out

    nd = expand(n)
    rd = expand(r)

    carries = [0] * width
    c = 0
    for i in range(width):
        c = 1 if nd[i] + rd[i] + c >= p else 0
        carries[i] = c
    e0 = sum(carries)
    e_top = sum(carries[q - 1 :])

    table = _unit_factorial_table(p, q)
    if table is not None:
        fact = table.__getitem__
    else:
        fact = lambda k: factorial_p_mod(k, pp)  # noqa: E731

    powers = [p**t for t in range(q)]
    num = 1
    den = 1
    for j in range(width):
        mj = nj = rj = 0
        top = min(q, width - j)
        for t in range(top):
            w = powers[t]
            mj += md[j + t] * w
            nj += nd[j + t] * w
            rj += rd[j + t] * w
        num = num * fact(mj) % pq
        den = den * (fact(nj) * fact(rj) % pq) % pq

    unit = num * pow(den, -1, pq) % pq
    if e_top % 2 and not (p == 2 and q >= 3):
        unit = (pq - unit) % pq
    return GranvilleResult(e0, unit)


def inverse_mod_pq(a: int, pp: PrimePower) -> int:
    """The inverse of a modulo p**q; a must be coprime to p."""
    if a % pp.p == 0:
        raise ValueError(f"{a} is divisible by {pp.p}, not invertible mod {pp.modulus}")
    return pow(a, -1, pp.modulus)
