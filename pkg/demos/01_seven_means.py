"""Tour of the seven binary means and the differences between them.

Run with: python3 demos/01_seven_means.py
"""

import numpy as np

from divcascade import means

rng = np.random.default_rng(0)

print("Seven means of (a, b) = (4, 1), in increasing order:")
for letter, tag in [("H", "harmonic"), ("G", "geometric"),
                    ("N", "Heronian"), ("A", "arithmetic"),
                    ("R", "centroidal"), ("S", "root-mean-square"),
                    ("C", "contra-harmonic")]:
    print(f"  {letter} ({tag:16s}) = {means.mean(letter, 4.0, 1.0):.6f}")

print()
print("The ordering H <= G <= N <= A <= R <= S <= C holds for every")
print("positive pair.  Checking 100000 random pairs:")
a = 10.0 ** rng.uniform(-6, 6, 100_000)
b = 10.0 ** rng.uniform(-6, 6, 100_000)
vals = [means.mean(k, a, b) for k in "HGNARSC"]
worst = max(float(np.max((lo - hi) / np.maximum(hi, 1e-300)))
            for lo, hi in zip(vals, vals[1:]))
print(f"  largest relative violation: {worst:.3e}  (negative = no violation)")

print()
print("Every mean M has a generator f with M(a,b) = b * f(a/b), f(1) = 1.")
print("At x = a/b = 9 the generators spread out:")
for k in "HGNARSC":
    print(f"  f_{k}(9) = {means.mean_generator(k, 9.0):.6f}")

print()
print("Differences of ordered means are divergences in their own right.")
print("Some collapse to the two classical discriminations:")
print("  3(C-R) = 2(A-H) = 2(C-A) = C-H = 6(R-A) = (3/2)(R-H) = delta")
print("  3(A-N) = A-G = (3/2)(N-G) = h")
a, b = 7.0, 2.0
checks = means.verify_mean_identities(a, b)
bad = [c for c in checks if not c[2]]
print(f"verified {len(checks)} identities at (a, b) = ({a}, {b}); "
      f"failures: {len(bad)}")
