#!/usr/bin/env python3
"""Roots of circle specializations accumulate on the circle.

Setting all variables but one to points with |xi| = R turns each sequence
term into a univariate polynomial; as the stretch index grows the roots
cluster on |z| = R (possibly plus the origin).  The staircase family
k*(2,1,0) evaluated at (z, 1, 1) keeps every root exactly on the unit
circle for every k.
"""
import pathlib

from schurrec import (
    Partition,
    build_sequence,
    clouds_to_csv,
    find_roots,
    limit_experiment,
    specialize,
)

empty = Partition()

staircase = build_sequence(empty, empty, Partition([2, 1]), empty, 3)
print("staircase roots at (z, 1, 1):")
for k in (1, 2, 4, 8):
    poly = specialize(staircase, k, [1.0, 1.0])
    roots = find_roots(poly)
    worst = max(abs(abs(z) - 1.0) for z in roots)
    print(f"  k = {k}: degree {poly.degree}, worst | |z| - 1 | = {worst:.2e}")

print("\nroot clouds for the h_k family at radius 2:")
hseq = build_sequence(empty, empty, Partition([1]), empty, 2)
result = limit_experiment(hseq, [2.0], 8)
for cloud in result.clouds:
    print(f"  k = {cloud.k}: {len(cloud.roots)} roots, deviation {cloud.deviation:.2e}")

out = pathlib.Path("staircase_roots.csv")
csv_text = clouds_to_csv(limit_experiment(staircase, [1.0, 1.0], 8).clouds)
out.write_text(csv_text)
print(f"\nwrote {sum(1 for _ in csv_text.splitlines()) - 1} root rows to {out}")
