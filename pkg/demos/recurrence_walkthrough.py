#!/usr/bin/env python3
"""Walk through the basic recurrence machinery on the simplest family.

The sequence s_{(k)}(x1, x2) = h_k is the complete homogeneous polynomial;
stretching the single-row shape (1) produces it.  Its characteristic
polynomial has one linear factor per filling of (1), and the resulting
recurrence is the classical h_{k+2} = (x1+x2) h_{k+1} - x1x2 h_k.
"""
from schurrec import (
    Partition,
    build_sequence,
    char_poly,
    enumerate_tableaux,
    SkewShape,
    verify_recurrence,
    weight,
)

empty = Partition()
mu = Partition([1])

print("fillings of the shape (1) with entries in {1,2}:")
for t in enumerate_tableaux(SkewShape(mu), 2):
    print(f"  rows={[list(r) for r in t.rows]}  weight={weight(t)}")

chi = char_poly(mu, empty, 2)
print(f"\ncharacteristic polynomial (degree {chi.degree}):")
print(f"  chi(t) = {chi}")

seq = build_sequence(empty, empty, mu, empty, 2)
print(f"\nsequence terms (start index r = {seq.r}):")
for k in range(5):
    print(f"  s_{k} = {seq.term(k)}")

ok = verify_recurrence(seq, chi, 0, 11)
print(f"\nrecurrence verified exactly for k = 0..10: {ok}")

# a skew family with a nontrivial base: s_{(1+2k, k)/(k)}
kappa, lam = Partition([1]), Partition()
mu, nu = Partition([2, 1]), Partition([1])
seq = build_sequence(kappa, lam, mu, nu, 2)
chi = char_poly(mu, nu, 2)
print(f"\nskew family kappa={kappa} mu={mu} nu={nu}: chi degree {chi.degree}, r = {seq.r}")
print(f"verified for {chi.degree + 3} consecutive indices: "
      f"{verify_recurrence(seq, chi, seq.r, chi.degree + 3)}")
