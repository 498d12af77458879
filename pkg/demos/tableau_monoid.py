#!/usr/bin/env python3
"""The row-insertion product on semistandard tableaux.

Two tableaux multiply by concatenating rows and re-sorting, with skew boxes
kept to the left.  The product adds shapes and weights, and every tableau
factors into its columns.
"""
from functools import reduce

from schurrec import (
    Partition,
    SkewShape,
    Tableau,
    column_factors,
    columns,
    decompose,
    empty_tableau,
    insert,
    weight,
)

t1 = Tableau(SkewShape(Partition([3, 1])), [[1, 1, 2], [2]], 3)
t2 = Tableau(SkewShape(Partition([2, 2]), Partition([1])), [[2], [1, 3]], 3)

print("t1 =")
print(t1.to_ascii())
print(f"weight {weight(t1)}\n")
print("t2 =")
print(t2.to_ascii())
print(f"weight {weight(t2)}\n")

prod = insert(t1, t2)
print("t1 * t2 =")
print(prod.to_ascii())
print(f"shape {prod.shape}, weight {weight(prod)}")
print(f"weights add: {tuple(a + b for a, b in zip(weight(t1), weight(t2)))}\n")

print("columns of the product:")
for cv in columns(prod):
    print(f"  column {cv.col_index}: rows {cv.first_row}..{cv.last_row}, entries {list(cv.entries)}")

rebuilt = reduce(insert, column_factors(prod), empty_tableau(3))
print(f"\nproduct of its column factors rebuilds it: {rebuilt == prod}")

back1, back2 = decompose(prod, t1.shape)
print(f"\ndecomposing along shape {t1.shape}:")
print(back1.to_ascii())
print("  *")
print(back2.to_ascii())
print(f"multiplies back: {insert(back1, back2) == prod}")
