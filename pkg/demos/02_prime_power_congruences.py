#!/usr/bin/env python3
"""Binomial coefficients modulo p and modulo p**q.

Lucas' theorem reduces C(m, n) mod p to a product over digits.  The
prime-power generalization keeps a valuation e0 and a unit part: windows of
q digits feed the p-free factorial n!_p, and a sign depends on the carries
at or beyond digit q - 1 (with the famous exception p = 2, q >= 3).
"""

from math import comb

from pqcat import (
    PrimePower,
    factorial_p_mod,
    granville_binom_mod_pq,
    inverse_mod_pq,
    lucas_binom_mod_p,
)

print("Lucas, digit by digit: C(10, 4) mod 3")
print(f"  exact C(10,4) = {comb(10, 4)} == {comb(10, 4) % 3} (mod 3)")
print(f"  lucas_binom_mod_p(10, 4, 3) = {lucas_binom_mod_p(10, 4, 3)}")

print("\nThe p-free factorial n!_p mod p**q is periodic over blocks of p**q:")
pp = PrimePower(3, 2)
direct = 1
for k in range(1, 12):
    if k % 3:
        direct *= k
print(f"  11!_3 = {direct} == {direct % 9} (mod 9); factorial_p_mod -> {factorial_p_mod(11, pp)}")
print(f"  one full block multiplies to {factorial_p_mod(9, pp)} (generalized Wilson: -1 mod 9)")
print(f"  for p = 2, q >= 3 the block product flips to +1: {factorial_p_mod(16, PrimePower(2, 4))} mod 16")

print("\nSplitting C(m, n) = p**e0 * unit (mod p**q):")
for m, n, p, q in [(10, 4, 3, 2), (20, 7, 2, 3), (100, 37, 5, 2)]:
    pp = PrimePower(p, q)
    g = granville_binom_mod_pq(m, n, pp)
    c = comb(m, n)
    e = 0
    while c % p == 0:
        c //= p
        e += 1
    print(
        f"  C({m},{n}) mod {p}^{q}: e0 = {g.e0}, unit = {g.unit_residue}"
        f"   (exact: e = {e}, unit = {c % pp.modulus})"
    )

print("\nUnit inverses mod p**q make division by units exact:")
pp = PrimePower(3, 2)
print(f"  inverse of 2 mod 9 is {inverse_mod_pq(2, pp)}; 2 * {inverse_mod_pq(2, pp)} mod 9 = {2 * inverse_mod_pq(2, pp) % 9}")
