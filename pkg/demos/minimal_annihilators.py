#!/usr/bin/env python3
"""Minimal recurrences: the full characteristic polynomial can carry
repeated roots, and the minimal annihilator keeps each root monomial once.

For mu = (2,1) with three variables the product over all 8 fillings has the
factor (t - x1x2x3) twice; the minimal polynomial has degree 6, matching the
weights with positive Kostka coefficient whose sorted form dominates (2,1,0).
"""
from collections import Counter

from schurrec import (
    Partition,
    SkewShape,
    build_sequence,
    char_poly,
    conjecture_check,
    conjectured_weights,
    enumerate_tableaux,
    minimal_report,
    weight,
)

empty = Partition()
mu, n = Partition([2, 1]), 3

weights = Counter(weight(t) for t in enumerate_tableaux(SkewShape(mu), n))
print("fillings of (2,1) by weight:")
for w, c in sorted(weights.items(), reverse=True):
    print(f"  {w}: {c} tableau(x)")

chi = char_poly(mu, empty, n)
seq = build_sequence(empty, empty, mu, empty, n)
print(f"\nfull characteristic polynomial degree: {chi.degree}")

rep = minimal_report(seq, chi, seed=0)
print(f"minimal annihilator degree: {rep.char_poly.degree}")
print(f"dropped root monomials: {rep.removed}")
print(f"Berlekamp-Massey degrees on specializations {rep.specializations}: {rep.bm_degrees}")

conj = conjectured_weights(mu, empty, n)
print(f"\nKostka-positive, domination-filtered weights: {conj}")
print(f"matches the computed minimal root set: {sorted(conj) == sorted(rep.weights)}")

outcome = conjecture_check(empty, empty, mu, empty, n)
print(f"conjecture verdict for this family: {outcome.verdict}")
