#!/usr/bin/env python3
"""Kostka coefficients, the monomial-basis expansion, and an explicit
witness that positivity survives stretching.

If some filling of lambda/mu has weight w, then its k-th insertion power
fills k*lambda/k*mu with weight k*w, so the stretched Kostka coefficient
stays positive.
"""
from schurrec import (
    Partition,
    SkewShape,
    kostka,
    m_basis_reconstruction,
    schur_in_m_basis,
    skew_schur,
    stretch_positivity_check,
    weight,
)

shape = SkewShape(Partition([2, 1]))

print(f"Kostka numbers of {shape}:")
for w in [(2, 1, 0), (1, 1, 1), (1, 2, 0), (3, 0, 0)]:
    print(f"  K_{w} = {kostka(shape, w)}")

coeffs = schur_in_m_basis(shape, 3)
print("\nmonomial-basis expansion of the Schur polynomial:")
for lam, c in sorted(coeffs.items(), key=lambda kv: kv[0].parts, reverse=True):
    print(f"  {c} * m_{lam}")
print(f"round trip equals the tableau sum: "
      f"{m_basis_reconstruction(coeffs, 3) == skew_schur(shape, 3)}")

print("\nstretch-positivity witnesses for weight (1,1,1):")
for k in (1, 2, 3):
    witness = stretch_positivity_check(shape, (1, 1, 1), k)
    print(f"k = {k}: shape {witness.shape}, weight {weight(witness)}")
    print(witness.to_ascii())
    print()
