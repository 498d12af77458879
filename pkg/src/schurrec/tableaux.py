"""Skew shapes, semistandard Young tableaux, and the row-insertion monoid.

The product `insert` concatenates two tableaux row by row and re-sorts each
row, with skew boxes kept to the left of ordinary boxes.  It is commutative,
associative and cancellative on SSYTs, and adds shapes and weights.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .partitions import Partition, add, contains, subtract

SKEW_CHAR = "■"  # filled square, marks skew boxes in diagrams


class SkewShape:
    """An outer/inner pair of partitions with inner contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        self.outer = outer if isinstance(outer, Partition) else Partition(outer)
        self.inner = inner if isinstance(inner, Partition) else Partition(inner)
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SkewShape):
            return self.outer == other.outer and self.inner == other.inner
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({self.outer}, {self.inner})"

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    @property
    def num_boxes(self) -> int:
        return self.outer.weight - self.inner.weight

    @property
    def num_skew_boxes(self) -> int:
        return self.inner.weight

    def row_span(self, i: int) -> tuple[int, int]:
        """Column bounds of the ordinary boxes of row i (0-based): (inner_i, outer_i]."""
        return self.inner[i], self.outer[i]

    def column_interval(self, j: int) -> Optional[tuple[int, int]]:
        """Rows (1-based, inclusive) occupied by column j (1-based), or None."""
        rows = [i + 1 for i in range(len(self.outer)) if self.inner[i] < j <= self.outer[i]]
        if not rows:
            return None
        return rows[0], rows[-1]

    def column_intervals(self) -> list[tuple[int, int, int]]:
        """(column index, first row, last row) for every nonempty column."""
        out = []
        for j in range(1, self.outer[0] + 1 if self.outer else 1):
            iv = self.column_interval(j)
            if iv is not None:
                out.append((j, iv[0], iv[1]))
        return out

    def cells(self) -> list[tuple[int, int]]:
        """Ordinary boxes as 0-based (row, col) pairs, row-major."""
        return [
            (i, j)
            for i in range(len(self.outer))
            for j in range(self.inner[i], self.outer[i])
        ]

    def to_ascii(self) -> str:
        lines = []
        for i in range(len(self.outer)):
            cells = [SKEW_CHAR] * self.inner[i] + ["."] * (self.outer[i] - self.inner[i])
            lines.append(" ".join(cells))
        return "\n".join(lines) if lines else "(empty)"


@dataclass(frozen=True)
class ColumnView:
    """One column of a tableau: its index, row interval (1-based), and entries."""

    col_index: int
    first_row: int
    last_row: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.last_row - self.first_row + 1 != len(self.entries):
            raise ValueError("entry count does not match the row interval")


class Tableau:
    """A filling of the ordinary boxes of a skew shape with entries in 1..n."""

    __slots__ = ("shape", "n", "rows")

    def __init__(self, shape: SkewShape, rows: Sequence[Sequence[int]], n: int):
        self.shape = shape
        self.n = int(n)
        if self.n < 1:
            raise ValueError("alphabet bound n must be positive")
        rs = tuple(tuple(int(v) for v in row) for row in rows)
        if len(rs) != len(shape.outer):
            raise ValueError(f"expected {len(shape.outer)} rows, got {len(rs)}")
        for i, row in enumerate(rs):
            lo, hi = shape.row_span(i)
            if len(row) != hi - lo:
                raise ValueError(f"row {i}: expected {hi - lo} entries, got {len(row)}")
        self.rows = rs

    def entry(self, i: int, j: int) -> int:
        """Entry at 0-based row i, 0-based diagram column j (must be an ordinary box)."""
        lo, hi = self.shape.row_span(i)
        if not lo <= j < hi:
            raise IndexError(f"({i},{j}) is not an ordinary box")
        return self.rows[i][j - lo]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Tableau):
            return self.shape == other.shape and self.rows == other.rows and self.n == other.n
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, self.rows, self.n))

    def __repr__(self) -> str:
        return f"Tableau({self.shape!r}, {[list(r) for r in self.rows]}, n={self.n})"

    def __mul__(self, other: "Tableau") -> "Tableau":
        return insert(self, other)

    def to_json(self) -> str:
        return json.dumps(
            {
                "outer": list(self.shape.outer),
                "inner": list(self.shape.inner),
                "n": self.n,
                "rows": [list(r) for r in self.rows],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Tableau":
        data = json.loads(text)
        shape = SkewShape(Partition(data["outer"]), Partition(data.get("inner", [])))
        return cls(shape, data["rows"], data["n"])

    def to_ascii(self) -> str:
        lines = []
        for i in range(len(self.shape.outer)):
            cells = [SKEW_CHAR] * self.shape.inner[i] + [str(v) for v in self.rows[i]]
            lines.append(" ".join(cells))
        return "\n".join(lines) if lines else "(empty)"


def empty_tableau(n: int) -> Tableau:
    return Tableau(SkewShape(Partition(), Partition()), [], n)


def is_valid_ssyt(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase, entries in 1..n."""
    shape = t.shape
    for i, row in enumerate(t.rows):
        for v in row:
            if not 1 <= v <= t.n:
                return False
        for a, b in zip(row, row[1:]):
            if a > b:
                return False
    for i in range(1, len(shape.outer)):
        lo, hi = shape.row_span(i)
        lo_up, hi_up = shape.row_span(i - 1)
        for j in range(max(lo, lo_up), min(hi, hi_up)):
            if t.entry(i - 1, j) >= t.entry(i, j):
                return False
    return True


def iter_tableaux(
    shape: SkewShape, n: int, weight_cap: Optional[Sequence[int]] = None
) -> Iterator[Tableau]:
    """Yield all SSYTs of the shape with entries in 1..n, in row-major
    lexicographic order.  weight_cap, when given, prunes fillings whose
    letter multiplicities would exceed it."""
    cells = shape.cells()
    ncells = len(cells)
    cap = list(weight_cap) if weight_cap is not None else None
    if cap is not None and len(cap) != n:
        raise ValueError("weight_cap must have length n")
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (n + 1)
    value_rows: list[list[int]] = [[] for _ in shape.outer]

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == ncells:
            yield Tableau(shape, [list(r) for r in value_rows], n)
            return
        i, j = cells[idx]
        lo = 1
        left = grid.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        up = grid.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for v in range(lo, n + 1):
            if cap is not None and counts[v] + 1 > cap[v - 1]:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            value_rows[i].append(v)
            yield from rec(idx + 1)
            value_rows[i].pop()
            counts[v] -= 1
            del grid[(i, j)]

    return rec(0)


def enumerate_tableaux(shape: SkewShape, n: int) -> list[Tableau]:
    """All SSYTs of the shape with entries in 1..n, canonical order."""
    return list(iter_tableaux(shape, n))


def weight(t: Tableau) -> tuple[int, ...]:
    """Letter multiplicity vector of length n."""
    w = [0] * t.n
    for row in t.rows:
        for v in row:
            w[v - 1] += 1
    return tuple(w)


def insert(t1: Tableau, t2: Tableau) -> Tableau:
    """Row-insertion product: concatenate rows, sort, skew boxes first."""
    if t1.n != t2.n:
        raise ValueError("tableaux must share the same alphabet bound n")
    outer = add(t1.shape.outer, t2.shape.outer)
    inner = add(t1.shape.inner, t2.shape.inner)
    shape = SkewShape(outer, inner)
    nrows = len(outer)
    rows = []
    for i in range(nrows):
        r1 = t1.rows[i] if i < len(t1.rows) else ()
        r2 = t2.rows[i] if i < len(t2.rows) else ()
        rows.append(sorted(r1 + r2))
    result = Tableau(shape, rows, t1.n)
    if not is_valid_ssyt(result):
        raise RuntimeError(f"internal error: insertion produced an invalid tableau from {t1!r} and {t2!r}")
    return result


def columns(t: Tableau) -> list[ColumnView]:
    """The nonempty columns of t, left to right."""
    out = []
    for j, first, last in t.shape.column_intervals():
        entries = tuple(t.entry(i - 1, j - 1) for i in range(first, last + 1))
        out.append(ColumnView(j, first, last, entries))
    return out


def column_tableau(cv: ColumnView, n: int) -> Tableau:
    """The single-column tableau occupying rows first..last with cv's entries."""
    height = cv.last_row
    skew = cv.first_row - 1
    shape = SkewShape(Partition([1] * height), Partition([1] * skew))
    rows = [[] for _ in range(skew)] + [[e] for e in cv.entries]
    return Tableau(shape, rows, n)


def column_factors(t: Tableau) -> list[Tableau]:
    """Single-column tableaux whose insertion product is exactly t.

    Columns holding only skew boxes contribute box-free factors of shape
    (1^h)/(1^h); without them the product would only recover t up to its
    fully-skew columns.
    """
    factors = []
    inner, outer = t.shape.inner, t.shape.outer
    width = outer[0] if len(outer) else 0
    for j in range(1, width + 1):
        iv = t.shape.column_interval(j)
        if iv is None:
            h = sum(1 for i in range(len(inner)) if inner[i] >= j)
            shape = SkewShape(Partition([1] * h), Partition([1] * h))
            factors.append(Tableau(shape, [[] for _ in range(h)], t.n))
        else:
            entries = tuple(t.entry(i - 1, j - 1) for i in range(iv[0], iv[1] + 1))
            factors.append(column_tableau(ColumnView(j, iv[0], iv[1], entries), t.n))
    return factors


def _column_signatures(shape: SkewShape) -> Counter:
    """Multiset of column signatures (first_row, last_row) of the ordinary
    boxes; a column holding only skew boxes down to row h is recorded as the
    empty run (h+1, h)."""
    sig: Counter = Counter()
    outer, inner = shape.outer, shape.inner
    width = outer[0] if len(outer) else 0
    for j in range(1, width + 1):
        rows = [i + 1 for i in range(len(outer)) if inner[i] < j <= outer[i]]
        if rows:
            sig[(rows[0], rows[-1])] += 1
        else:
            h = sum(1 for i in range(len(inner)) if inner[i] >= j)
            sig[(h + 1, h)] += 1
    return sig


def sits_inside(small: SkewShape, big: SkewShape) -> bool:
    """Multiset containment of column signatures (skew-only columns count)."""
    small_cols = _column_signatures(small)
    big_cols = _column_signatures(big)
    return all(big_cols[sig] >= c for sig, c in small_cols.items())


def first_enclosing_index(kappa: Partition, lam: Partition, mu: Partition, nu: Partition) -> int:
    """Least r0 >= 0 at which mu/nu sits inside (kappa + r0*mu)/(lam + r0*nu).

    Requires kappa/lam and mu/nu to be valid skew shapes; direct search,
    bounded by kappa_1 + 1.
    """
    if not contains(kappa, lam):
        raise ValueError("kappa/lam is not a valid skew shape")
    target = SkewShape(mu, nu)
    bound = kappa[0] + 1 if len(kappa) else 1
    for r0 in range(bound + 1):
        outer = Partition([kappa[i] + r0 * mu[i] for i in range(max(len(kappa), len(mu)))])
        inner = Partition([lam[i] + r0 * nu[i] for i in range(max(len(lam), len(nu)))])
        if contains(outer, inner) and sits_inside(target, SkewShape(outer, inner)):
            return r0
    raise RuntimeError("internal error: no enclosing index within the bound kappa_1 + 1")


def stabilization_index(kappa: Partition, lam: Partition, mu: Partition, nu: Partition) -> int:
    """First index from which the stretched family supports the recurrence.

    The recurrence starting at r only needs mu/nu to sit inside the shapes
    at indices r+1, r+2, ..., so this is max(0, first_enclosing_index - 1).
    """
    return max(0, first_enclosing_index(kappa, lam, mu, nu) - 1)


def decompose(t: Tableau, small: SkewShape) -> tuple[Tableau, Tableau]:
    """Split t = t1 * t2 with t1 of the given shape, choosing the leftmost
    matching columns for t1."""
    if not sits_inside(small, t.shape):
        raise ValueError(f"{small} does not sit inside {t.shape}")
    tcols = columns(t)
    used = [False] * len(tcols)
    chosen: list[tuple[int, ColumnView]] = []  # (small column index, source column)
    for j, first, last in small.column_intervals():
        for idx, cv in enumerate(tcols):
            if not used[idx] and (cv.first_row, cv.last_row) == (first, last):
                used[idx] = True
                chosen.append((j, cv))
                break
        else:
            raise RuntimeError("internal error: sits_inside held but no matching column found")

    # assemble t1 by writing the chosen entries into small's own diagram
    rows1: list[list[int]] = [[] for _ in range(len(small.outer))]
    for j, cv in sorted(chosen, key=lambda p: p[0]):
        for offset, v in enumerate(cv.entries):
            rows1[cv.first_row - 1 + offset].append(v)
    t1 = Tableau(small, rows1, t.n)
    if not is_valid_ssyt(t1):
        raise RuntimeError("internal error: extracted columns do not form an SSYT")

    try:
        rest_outer = Partition(subtract(t.shape.outer, small.outer))
        rest_inner = Partition(subtract(t.shape.inner, small.inner))
        rest = SkewShape(rest_outer, rest_inner)
    except ValueError as exc:
        # sits_inside only tracks ordinary-box columns, so the complementary
        # shape can still be malformed; that is a precondition failure here
        raise ValueError(
            f"{small} admits no complementary shape inside {t.shape}: {exc}"
        ) from exc
    rows2 = []
    for i in range(len(rest_outer)):
        remaining = Counter(t.rows[i] if i < len(t.rows) else ())
        remaining.subtract(rows1[i] if i < len(rows1) else ())
        if any(c < 0 for c in remaining.values()):
            raise RuntimeError("internal error: row difference went negative")
        rows2.append(sorted(remaining.elements()))
    t2 = Tableau(rest, rows2, t.n)
    if not is_valid_ssyt(t2):
        raise RuntimeError("internal error: column deletion did not yield an SSYT")
    if insert(t1, t2) != t:
        raise RuntimeError("internal error: decomposition does not multiply back")
    return t1, t2
