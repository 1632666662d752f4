#!/usr/bin/env python3
"""The explicit inequality that forces C(p**q n + 1, n) off squarefreeness,
evaluated with rigorous interval arithmetic.

Once

  (1-a) sqrt(p^q n + 1) - (1+a) sqrt((p^q-1) n + 1)
      > 21.683 p^(23q/48) n^(23/48) (ln(256((p^q-1)n+1)))^(11/4)
        + (11/8)(3 ln n + 2q ln p),        a = 1/400000,

holds, the binomial cannot be squarefree.  Both sides are evaluated with
outward rounding, so every verdict below is exact at the working precision.

The headline witness exponents 1518 (base 2) and 956 (base 3) do not
satisfy the natural-logarithm inequality; they reappear exactly when the
logarithms are read base 10 -- the tail constants 1.65566 and 2.62417 of
the specialized forms equal (11/8) * 2q * log10(p), which is how the
decimal-log provenance shows.  Under natural logs the true crossovers sit
at 2^1698 and 2^1763.
"""

from pqcat import (
    GENERAL_CONSTANTS,
    InequalityConstants,
    InequalityInstance,
    PrimePower,
    find_tau0,
    inequality_sides,
    specialized_constants,
    tau1,
)

for p, q, witness, label in [(2, 2, 2**1518, "2^1518"), (3, 2, 3**956, "3^956")]:
    inst = InequalityInstance(PrimePower(p, q))
    lhs, rhs = inequality_sides(inst, witness)
    print(f"({p},{q}) at n = {label}: lhs/rhs = {float(lhs / rhs):.4f}  holds: {lhs > rhs}")

print("\nCrossovers under natural logarithms (exponents of 2):")
for p, q in [(2, 2), (3, 2)]:
    inst = InequalityInstance(PrimePower(p, q))
    e = find_tau0(inst)
    print(f"  ({p},{q}): first holding power of two is 2^{e}")

print("\nSame search with base-10 logarithms recovers the headline 1518:")
decimal = InequalityConstants(natural_log=False)
inst = InequalityInstance(PrimePower(2, 2), constants=decimal)
print(f"  ({2},{2}) decimal-log crossover: 2^{find_tau0(inst)}")

print("\nSpecialized constant sets (reported for cross-checking only):")
for p, q in [(2, 2), (3, 2)]:
    c_main, c_tail = specialized_constants(PrimePower(p, q))
    print(f"  ({p},{q}): main {float(c_main)}, tail {float(c_tail)}")
print(f"  general main constant: {float(GENERAL_CONSTANTS.c_main)} with p^(23q/48)")

print("\nOverall threshold tau1 = max((e^60-1)/(p^q-1), 5^10 p^(5q), tau0):")
for p, q in [(2, 2), (3, 2)]:
    pp = PrimePower(p, q)
    e = find_tau0(InequalityInstance(pp))
    t = tau1(pp, 1 << e)
    print(f"  ({p},{q}): tau1 has {t.bit_length()} bits (tau0 = 2^{e} dominates)")
