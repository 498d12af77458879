"""Kostka coefficients of skew shapes, the monomial-basis expansion of skew
Schur polynomials, and explicit witnesses for stretch positivity."""
from __future__ import annotations

from functools import reduce
from typing import Sequence

from .partitions import Partition, scale
from .polynomials import MultiPoly, monomial_symmetric
from .tableaux import SkewShape, Tableau, insert, iter_tableaux, weight


def kostka(shape: SkewShape, w: Sequence[int]) -> int:
    """Number of SSYTs of the shape with weight w (alphabet bound len(w)).

    Zero when the weight total does not match the box count.  Counting is by
    weight-pruned enumeration: partial fillings that already exceed some
    multiplicity in w are abandoned.
    """
    wt = tuple(int(x) for x in w)
    if any(x < 0 for x in wt):
        raise ValueError(f"weight must be nonnegative, got {wt}")
    if sum(wt) != shape.num_boxes:
        return 0
    n = len(wt)
    count = 0
    for _ in iter_tableaux(shape, n, weight_cap=wt):
        count += 1
    return count


def schur_in_m_basis(shape: SkewShape, n: int) -> dict[Partition, int]:
    """Positive coefficients K with skew_schur = sum K_w * m_w, keyed by partition."""
    boxes = shape.num_boxes
    out: dict[Partition, int] = {}
    for lam in _partitions_of(boxes, n):
        k = kostka(shape, tuple(lam[i] for i in range(n)))
        if k:
            out[lam] = k
    return out


def m_basis_reconstruction(coeffs: dict[Partition, int], n: int) -> MultiPoly:
    """Sum K_w * m_w; equals skew_schur on the originating shape."""
    total = MultiPoly.zero(n)
    for lam, k in coeffs.items():
        total = total + monomial_symmetric(lam, n) * k
    return total


def first_tableau_of_weight(shape: SkewShape, w: Sequence[int]) -> Tableau:
    """First tableau with weight w in the canonical enumeration order."""
    wt = tuple(int(x) for x in w)
    for t in iter_tableaux(shape, len(wt), weight_cap=wt):
        if weight(t) == wt:
            return t
    raise ValueError(f"no tableau of shape {shape} has weight {wt}")


def stretch_positivity_check(shape: SkewShape, w: Sequence[int], k: int) -> Tableau:
    """Witness that K > 0 is preserved under stretching: the k-fold insertion
    power of the first tableau of weight w, of shape k*outer/k*inner and
    weight k*w."""
    if k < 1:
        raise ValueError("stretch factor k must be positive")
    wt = tuple(int(x) for x in w)
    seed = first_tableau_of_weight(shape, wt)
    witness = reduce(insert, [seed] * k)
    expected_shape = SkewShape(scale(k, shape.outer), scale(k, shape.inner))
    if witness.shape != expected_shape:
        raise RuntimeError("internal error: witness shape is not the stretched shape")
    if weight(witness) != tuple(k * x for x in wt):
        raise RuntimeError("internal error: witness weight is not the stretched weight")
    return witness


def _partitions_of(total: int, max_length: int) -> list[Partition]:
    out: list[Partition] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_length:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(prefix, remaining - p, p)
            prefix.pop()

    rec([], total, total if total else 1)
    return out
