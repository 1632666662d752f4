#!/usr/bin/env python3
"""Digit expansions, factorial valuations, and carry counting.

Everything downstream rests on three exact digit-level facts:

  * v_p(n!) is the floor sum of n/p^i, which equals (n - sigma_p(n))/(p-1);
  * v_p(C(m, n)) is the number of carries when adding n and m - n in base p;
  * both stay cheap even when the integers involved are astronomical.
"""

from math import comb, factorial

from pqcat import (
    binom_valuation,
    kummer_carries,
    legendre_valuation_factorial,
    sigma_p,
    to_base_p,
)

print("Base-p expansions (little-endian digits, index = power):")
for n, p in [(11, 2), (45, 2), (91, 3)]:
    vec = to_base_p(n, p)
    print(f"  {n} in base {p}: digits {list(vec.digits)}  ->  {vec}  sigma = {sigma_p(n, p)}")

print("\nLegendre's factorial valuation, two ways:")
for n, p in [(10, 2), (9, 3), (100, 7)]:
    floors = legendre_valuation_factorial(n, p)
    digit_form = (n - sigma_p(n, p)) // (p - 1)
    exact = 0
    f = factorial(n)
    while f % p == 0:
        f //= p
        exact += 1
    print(f"  v_{p}({n}!) = {floors} (floor sums) = {digit_form} (digit sum) = {exact} (exact)")

print("\nCarries decide binomial valuations: v_3(C(9,4)) counts carries of 4 + 5 in base 3")
print(f"  4 = {to_base_p(4, 3)}, 5 = {to_base_p(5, 3)}, sum = {to_base_p(9, 3)}")
print(f"  kummer_carries(4, 5, 3) = {kummer_carries(4, 5, 3)}; exact C(9,4) = {comb(9, 4)} = 2 * 3^2 * 7")

print("\nThe from_digit parameter counts only carries at or beyond a position:")
for j in range(3):
    print(f"  carries of 1 + 1 in base 2 from digit {j}: {kummer_carries(1, 1, 2, from_digit=j)}")

print("\nValuations at sizes where the binomial itself is unthinkable:")
n = 2**1000 + 3**600
m = 4 * n + 1
print(f"  m has {m.bit_length()} bits; v_2(C(m, n)) = {binom_valuation(m, n, 2)} (pure digit work)")
