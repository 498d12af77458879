"""Linear recurrences for stretched skew Schur polynomial sequences.

Builds the characteristic polynomial chi(t) as the product of (t - x^w) over
all tableaux of the ground shape, verifies the recurrence exactly on sequence
terms, extracts the minimal annihilator of product form by greedy root
removal, and exposes the conjectured minimal root set driven by Kostka
positivity and domination.

Verification is exact throughout.  Sequence terms for shapes with at most
3 rows and 3 letters run on dense int64 weight tables (with an a-priori
coefficient bound guaranteeing no overflow); everything else falls back to
sparse exact polynomials.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import _dense
from .partitions import (
    IntVector,
    Partition,
    add,
    contains,
    dominates,
    scale,
    sort_decreasing,
    stretch_condition,
    stretch_violation,
    subtract,
)
from .polynomials import MultiPoly, skew_schur
from .kostka import kostka
from .tableaux import (
    SkewShape,
    enumerate_tableaux,
    first_enclosing_index,
    stabilization_index,
    weight,
)


class InvalidFamilyError(ValueError):
    """The four partitions do not define an eventually-valid stretched family."""


# ---------------------------------------------------------------------------
# characteristic polynomials


class CharPoly:
    """Monic polynomial in the shift symbol t with MultiPoly coefficients.

    coeffs[j] is the coefficient of t^j; the recurrence it encodes is
    sum_j coeffs[j] * s_{k+j} = 0.  root_weights, when known, lists the
    weight vectors w of the linear factors (t - x^w), with multiplicity.
    """

    __slots__ = ("nvars", "coeffs", "root_weights", "_plan")

    def __init__(
        self,
        nvars: int,
        coeffs: Sequence[MultiPoly],
        root_weights: Optional[Sequence[IntVector]] = None,
    ):
        self.nvars = nvars
        self.coeffs = tuple(coeffs)
        if not self.coeffs or self.coeffs[-1] != MultiPoly.one(nvars):
            raise ValueError("characteristic polynomial must be monic")
        self.root_weights = tuple(tuple(w) for w in root_weights) if root_weights is not None else None
        self._plan = None

    def dense_plan(self) -> tuple:
        """Cached per-coefficient term offsets, 1-norms and max offsets for
        the dense residual accumulation."""
        if self._plan is None:
            offsets = [_dense.multipoly_to_offsets(c, self.nvars) for c in self.coeffs]
            norms = [sum(abs(v) for v in c.terms.values()) for c in self.coeffs]
            axes = self.nvars - 1
            maxoff = [
                tuple(max((o[a] for o, _ in offs), default=0) for a in range(axes))
                for offs in offsets
            ]
            self._plan = (offsets, norms, maxoff)
        return self._plan

    @classmethod
    def from_root_weights(cls, weights: Sequence[IntVector], nvars: int) -> "CharPoly":
        coeffs = [MultiPoly.one(nvars)]
        for w in weights:
            mono = MultiPoly.monomial(w)
            new = [MultiPoly.zero(nvars) for _ in range(len(coeffs) + 1)]
            for j, c in enumerate(coeffs):
                new[j + 1] = new[j + 1] + c
                new[j] = new[j] - mono * c
            coeffs = new
        return cls(nvars, coeffs, root_weights=weights)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def remove_root(self, w: IntVector) -> "CharPoly":
        """Exact synthetic division by (t - x^w); requires w among root_weights."""
        if self.root_weights is None or tuple(w) not in self.root_weights:
            raise ValueError(f"{w} is not a recorded root")
        remaining = list(self.root_weights)
        remaining.remove(tuple(w))
        return CharPoly.from_root_weights(remaining, self.nvars)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharPoly):
            return self.nvars == other.nvars and self.coeffs == other.coeffs
        return NotImplemented

    def __str__(self) -> str:
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            tpow = "t" if j == 1 else (f"t^{j}" if j else "")
            if j == self.degree:
                parts.append(tpow or "1")
            else:
                body = str(c)
                wrapped = body if c.num_terms() == 1 and not body.startswith("-") else f"({body})"
                if wrapped.startswith("-") and c.num_terms() == 1:
                    parts.append(f"- {wrapped[1:]}" + (f"*{tpow}" if tpow else ""))
                else:
                    parts.append(f"+ {wrapped}" + (f"*{tpow}" if tpow else ""))
        return " ".join(parts) if parts else "1"

    __repr__ = __str__

    def to_json_obj(self) -> dict:
        return {
            "nvars": self.nvars,
            "degree": self.degree,
            "coeffs": [c.to_json_obj() for c in self.coeffs],
            "root_weights": [list(w) for w in self.root_weights] if self.root_weights else None,
        }


def char_poly(mu: Partition, nu: Partition, n: int) -> CharPoly:
    """chi(t): the product of (t - x^w(T)) over all tableaux of mu/nu."""
    if not contains(mu, nu):
        raise ValueError("mu must contain nu")
    weights = [weight(t) for t in enumerate_tableaux(SkewShape(mu, nu), n)]
    return CharPoly.from_root_weights(weights, n)


# ---------------------------------------------------------------------------
# stretched sequences


class SchurSequence:
    """The sequence k -> skew Schur polynomial of (kappa + k*mu)/(lam + k*nu).

    kappa/lam here are the effective base shapes: build_sequence absorbs the
    index shift needed to make the base a valid skew shape, recording it in
    `shift` (term(k) of this object is term(k + shift) of the requested
    family).
    """

    def __init__(
        self,
        kappa: Partition,
        lam: Partition,
        mu: Partition,
        nu: Partition,
        n: int,
        r: int,
        shift: int = 0,
        requested: Optional[tuple[Partition, Partition]] = None,
    ):
        self.kappa = kappa
        self.lam = lam
        self.mu = mu
        self.nu = nu
        self.n = n
        self.r = r
        self.shift = shift
        self.requested = requested if requested is not None else (kappa, lam)
        self._terms: dict[int, MultiPoly] = {}
        self._tables: dict[int, Optional[np.ndarray]] = {}
        self._counts: dict[int, int] = {}

    def outer_at(self, k: int) -> Partition:
        return add(self.kappa, scale(k, self.mu))

    def inner_at(self, k: int) -> Partition:
        return add(self.lam, scale(k, self.nu))

    def shape_at(self, k: int) -> SkewShape:
        return SkewShape(self.outer_at(k), self.inner_at(k))

    def boxes_at(self, k: int) -> int:
        return self.shape_at(k).num_boxes

    def term_table(self, k: int) -> Optional[np.ndarray]:
        """Dense weight table of term k, or None when unsupported."""
        if k not in self._tables:
            try:
                self._tables[k] = _dense.weight_counts(self.outer_at(k), self.inner_at(k), self.n)
            except _dense.UnsupportedShape:
                self._tables[k] = None
        return self._tables[k]

    def term(self, k: int) -> MultiPoly:
        """The exact skew Schur polynomial at index k."""
        if k < 0:
            raise ValueError("sequence index must be nonnegative")
        if k not in self._terms:
            table = self.term_table(k)
            if table is not None:
                self._terms[k] = _dense.counts_to_multipoly(table, self.n, self.boxes_at(k))
            else:
                self._terms[k] = skew_schur(self.shape_at(k), self.n)
        return self._terms[k]

    def count_at(self, k: int) -> int:
        """Number of SSYTs at index k (all-ones evaluation), exact."""
        if k not in self._counts:
            self._counts[k] = _dense.ssyt_count(self.outer_at(k), self.inner_at(k), self.n)
        return self._counts[k]

    def eval_at(self, k: int, point: tuple[int, ...]) -> int:
        """Exact integer evaluation of term k at an integer point."""
        return _dense.schur_int_eval(self.outer_at(k), self.inner_at(k), point)

    def family_json(self) -> dict:
        req_kappa, req_lam = self.requested
        return {
            "kappa": str(req_kappa),
            "lambda": str(req_lam),
            "mu": str(self.mu),
            "nu": str(self.nu),
            "n": self.n,
            "shift": self.shift,
            "effective_kappa": str(self.kappa),
            "effective_lambda": str(self.lam),
            "r": self.r,
        }


def build_sequence(kappa: Partition, lam: Partition, mu: Partition, nu: Partition, n: int) -> SchurSequence:
    """Validate the family, normalize the base shape, and compute the start
    index r from which the chi(t) recurrence is claimed."""
    if not contains(mu, nu):
        raise InvalidFamilyError(f"mu={mu} does not contain nu={nu}")
    k0 = stretch_condition(kappa, lam, mu, nu)
    if k0 is None:
        i = stretch_violation(kappa, lam, mu, nu)
        raise InvalidFamilyError(
            f"no stretch factor: coordinate {i} has mu-nu = 0 but lam-kappa > 0"
        )
    shift = 0 if contains(kappa, lam) else k0
    eff_kappa = add(kappa, scale(shift, mu))
    eff_lam = add(lam, scale(shift, nu))
    if not contains(eff_kappa, eff_lam):
        raise RuntimeError("internal error: index shift did not produce a valid base shape")
    if _dense.ssyt_count(mu, nu, n) == 0:
        # degree-0 recurrence (s_k = 0): valid only where mu/nu actually
        # sits inside, not one index earlier
        r = first_enclosing_index(eff_kappa, eff_lam, mu, nu)
    else:
        r = stabilization_index(eff_kappa, eff_lam, mu, nu)
    return SchurSequence(eff_kappa, eff_lam, mu, nu, n, r, shift, requested=(kappa, lam))


# ---------------------------------------------------------------------------
# exact recurrence verification


@dataclass
class VerifyResult:
    ok: bool
    failed_k: Optional[int] = None
    residual: Optional[MultiPoly] = None


def _residual_dense(seq: SchurSequence, chi: CharPoly, k: int) -> Optional[np.ndarray]:
    """Residual sum_j c_j * s_{k+j} on dense int64 tables; None if unsupported."""
    n = seq.n
    d = chi.degree
    tables = []
    for j in range(d + 1):
        tab = seq.term_table(k + j)
        if tab is None:
            return None
        tables.append(tab)
    offsets, norms, maxoff = chi.dense_plan()
    # a-priori bound keeping every int64 accumulation exact
    bound = sum(norms[j] * seq.count_at(k + j) for j in range(d + 1))
    if bound >= (1 << 62):
        return None
    if n == 1:
        total = 0
        for j in range(d + 1):
            val = int(tables[j][()])
            for _, c in offsets[j]:
                total += c * val
        return np.array(total, dtype=np.int64)
    axes = n - 1
    shape = [0] * axes
    for j in range(d + 1):
        tshape = tables[j].shape
        for axis in range(axes):
            shape[axis] = max(shape[axis], maxoff[j][axis] + tshape[axis])
    residual = np.zeros(tuple(shape), dtype=np.int64)
    for j in range(d + 1):
        tab = tables[j]
        tshape = tab.shape
        if axes == 1:
            t0 = tshape[0]
            for offs, c in offsets[j]:
                residual[offs[0] : offs[0] + t0] += c * tab
        else:
            t0, t1 = tshape
            for offs, c in offsets[j]:
                residual[offs[0] : offs[0] + t0, offs[1] : offs[1] + t1] += c * tab
    return residual


def _residual_exact(seq: SchurSequence, chi: CharPoly, k: int) -> MultiPoly:
    total = MultiPoly.zero(seq.n)
    for j, c in enumerate(chi.coeffs):
        total = total + c * seq.term(k + j)
    return total


def verify_certificate(seq: SchurSequence, chi: CharPoly, r: int, count: int) -> VerifyResult:
    """Exact check of sum_j coeffs[j] * term(k+j) = 0 for k = r ... r+count-1."""
    if count < 1:
        raise ValueError("count must be positive")
    for k in range(r, r + count):
        dense = _residual_dense(seq, chi, k)
        if dense is not None:
            if dense.any():
                return VerifyResult(False, k, _residual_exact(seq, chi, k))
        else:
            residual = _residual_exact(seq, chi, k)
            if not residual.is_zero():
                return VerifyResult(False, k, residual)
    return VerifyResult(True)


def verify_recurrence(seq: SchurSequence, chi: CharPoly, r: Optional[int] = None, count: Optional[int] = None) -> bool:
    """True iff the recurrence holds exactly at count consecutive indices from r."""
    start = seq.r if r is None else r
    cnt = chi.degree + 3 if count is None else count
    return verify_certificate(seq, chi, start, cnt).ok


# ---------------------------------------------------------------------------
# Berlekamp-Massey over the rationals


def berlekamp_massey(values: Sequence) -> list[Fraction]:
    """Monic coefficients [c_0, ..., c_L] of the shortest linear recurrence
    sum_i c_i * a_{k+i} = 0 satisfied by the given scalar sequence."""
    S = [Fraction(v) for v in values]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for i, s in enumerate(S):
        delta = s
        for j in range(1, L + 1):
            delta += C[j] * S[i - j]
        if delta == 0:
            m += 1
            continue
        if 2 * L <= i:
            T = C[:]
            coef = delta / b
            while len(C) < len(B) + m:
                C.append(Fraction(0))
            for j, bj in enumerate(B):
                C[j + m] -= coef * bj
            L, B, b, m = i + 1 - L, T, delta, 1
        else:
            coef = delta / b
            while len(C) < len(B) + m:
                C.append(Fraction(0))
            for j, bj in enumerate(B):
                C[j + m] -= coef * bj
            m += 1
    # a_{k+L} + C[1] a_{k+L-1} + ... + C[L] a_k = 0
    coeffs = [C[L - j] if L - j < len(C) else Fraction(0) for j in range(L)]
    coeffs.append(Fraction(1))
    return coeffs


# ---------------------------------------------------------------------------
# minimal characteristic polynomial


@dataclass
class MinimalReport:
    char_poly: CharPoly
    weights: list[IntVector]
    removed: list[IntVector]
    bm_degrees: list[int]
    specializations: list[tuple[int, ...]]
    seed: int


def _dedupe_canonical(weights: Sequence[IntVector]) -> list[IntVector]:
    distinct = set(tuple(w) for w in weights)
    return sorted(distinct, key=lambda w: (sum(w), w), reverse=True)


@lru_cache(maxsize=4096)
def _product_poly(weights: tuple, nvars: int) -> CharPoly:
    return CharPoly.from_root_weights(list(weights), nvars)


def _annihilates(seq: SchurSequence, cand: CharPoly, start: int, count: int) -> bool:
    for k in range(start, start + count):
        dense = _residual_dense(seq, cand, k)
        if dense is not None:
            if dense.any():
                return False
        elif not _residual_exact(seq, cand, k).is_zero():
            return False
    return True


def minimal_report(seq: SchurSequence, chi: CharPoly, seed: int = 0) -> MinimalReport:
    """Least-degree monic divisor of chi of product form annihilating the
    sequence.

    Exact annihilation at deg(chi) consecutive indices from seq.r suffices:
    the residual sequence itself satisfies the chi recurrence, so that many
    consecutive zeros force it to vanish for all k >= seq.r.  A Berlekamp-
    Massey degree check on >= 3 integer specializations (collision-free by
    construction) cross-checks the result.
    """
    if chi.root_weights is None:
        raise ValueError("chi must carry its root weights")
    d = chi.degree
    current = _dedupe_canonical(chi.root_weights)
    cand = _product_poly(tuple(current), chi.nvars)
    if not _annihilates(seq, cand, seq.r, d):
        raise RuntimeError(
            "internal error: the squarefree part of chi does not annihilate the sequence"
        )
    removed: list[IntVector] = []
    for w in list(current):
        trial = [u for u in current if u != w]
        if not trial:
            break
        trial_poly = _product_poly(tuple(trial), chi.nvars)
        if _annihilates(seq, trial_poly, seq.r, d):
            current = trial
            removed.append(w)
    minimal = CharPoly.from_root_weights(current, chi.nvars)

    rng = random.Random(seed)
    bm_degrees: list[int] = []
    points: list[tuple[int, ...]] = []
    needed = 2 * len(current) + 4
    distinct_all = _dedupe_canonical(chi.root_weights)
    for _ in range(3):
        point = _draw_point(rng, seq.n, distinct_all)
        values = [seq.eval_at(k, point) for k in range(seq.r, seq.r + needed)]
        bm = berlekamp_massey(values)
        bm_degrees.append(len(bm) - 1)
        points.append(point)
    if any(deg != len(current) for deg in bm_degrees):
        raise RuntimeError(
            f"specialized minimal degrees {bm_degrees} disagree with symbolic degree "
            f"{len(current)} (collision suspected; rerun with a different seed)"
        )
    return MinimalReport(minimal, current, removed, bm_degrees, points, seed)


def _draw_point(rng: random.Random, n: int, monomials: Sequence[IntVector]) -> tuple[int, ...]:
    """Small positive integer point at which all candidate root monomials take
    pairwise distinct values; collisions trigger a redraw."""
    for _ in range(1000):
        point = tuple(rng.randrange(2, 60) for _ in range(n))
        values = [_eval_monomial(point, w) for w in monomials]
        if len(set(values)) == len(values):
            return point
    raise RuntimeError("could not find a collision-free specialization point")


def _eval_monomial(point: tuple[int, ...], w: IntVector) -> int:
    v = 1
    for x, p in zip(point, w):
        v *= x**p
    return v


def minimal_char_poly(seq: SchurSequence, chi: CharPoly, seed: int = 0) -> CharPoly:
    return minimal_report(seq, chi, seed).char_poly


# ---------------------------------------------------------------------------
# the conjectured minimal root set


def conjectured_weights(mu: Partition, nu: Partition, n: int) -> list[IntVector]:
    """Weight vectors w with positive Kostka coefficient for mu/nu whose
    decreasing rearrangement dominates that of mu - nu."""
    if not contains(mu, nu):
        raise ValueError("mu must contain nu")
    shape = SkewShape(mu, nu)
    boxes = shape.num_boxes
    target = sort_decreasing(tuple(x for x in subtract(mu, nu)))
    kostka_cache: dict[IntVector, int] = {}
    out = []
    for w in _compositions(boxes, n):
        sw = sort_decreasing(w)
        if sw not in kostka_cache:
            kostka_cache[sw] = kostka(shape, sw)
        if kostka_cache[sw] == 0:
            continue
        if dominates(sw, target):
            out.append(w)
    return sorted(out, key=lambda w: (sum(w), w), reverse=True)


def _compositions(total: int, length: int):
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, length - 1):
            yield (first,) + rest


@dataclass
class ConjectureReport:
    verdict: str
    annihilates: bool
    failed_k: Optional[int]
    minimal_matches: Optional[bool]
    conjectured: list[IntVector]
    minimal_weights: Optional[list[IntVector]]
    count: int
    seed: int
    family: dict = field(default_factory=dict)
    degree: int = 0
    minimal_degree: Optional[int] = None

    def to_json_obj(self) -> dict:
        r = self.family.get("r", 0)
        return {
            "family": self.family,
            "r": r,
            "degree": self.degree,
            "verified_upto": r + self.count - 1 if self.annihilates else None,
            "minimal_degree": self.minimal_degree,
            "W": [list(w) for w in self.conjectured],
            "conjecture": self.verdict,
            "seed": self.seed,
            "annihilates": self.annihilates,
            "failed_k": self.failed_k,
            "minimal_matches": self.minimal_matches,
            "minimal_W": [list(w) for w in self.minimal_weights] if self.minimal_weights is not None else None,
            "count": self.count,
        }


def conjecture_check(
    kappa: Partition,
    lam: Partition,
    mu: Partition,
    nu: Partition,
    n: int,
    count: Optional[int] = None,
    seed: int = 0,
) -> ConjectureReport:
    """Test whether the product over the conjectured root set annihilates the
    sequence and equals the computed minimal characteristic polynomial.

    The verdict is evidence, not proof: SUPPORTED, REFUTED-AT(k) when the
    conjectured polynomial fails to annihilate at index k, REFUTED-MINIMALITY
    when it annihilates but is not minimal, or INCONCLUSIVE.
    """
    seq = build_sequence(kappa, lam, mu, nu, n)
    chi = char_poly(mu, nu, n)
    cnt = chi.degree if count is None else count
    cnt = max(cnt, 1)
    conj = conjectured_weights(mu, nu, n)
    conj_poly = CharPoly.from_root_weights(conj, n)
    cert = verify_certificate(seq, conj_poly, seq.r, cnt)
    if not cert.ok:
        return ConjectureReport(
            f"REFUTED-AT({cert.failed_k})", False, cert.failed_k, None,
            conj, None, cnt, seed, seq.family_json(), chi.degree, None,
        )
    minimal = minimal_report(seq, chi, seed)
    matches = sorted(minimal.weights) == sorted(conj)
    verdict = "SUPPORTED" if matches else "REFUTED-MINIMALITY"
    return ConjectureReport(
        verdict, True, None, matches, conj, minimal.weights, cnt, seed,
        seq.family_json(), chi.degree, minimal.char_poly.degree,
    )


# ---------------------------------------------------------------------------
# polynomiality of the filling counts


@dataclass
class PolynomialityReport:
    counts: list[int]
    degree: Optional[int]
    vanish_order: Optional[int]
    verdict: str
    newton_coefficients: Optional[list[int]]

    def to_json_obj(self) -> dict:
        return {
            "counts": self.counts,
            "degree": self.degree,
            "vanish_order": self.vanish_order,
            "verdict": self.verdict,
            "newton_coefficients": self.newton_coefficients,
        }


def polynomiality_check(mu: Partition, nu: Partition, n: int, kmax: int) -> PolynomialityReport:
    """Finite-difference check that k -> #SSYT of k*mu/k*nu is polynomial.

    Requires kmax >= degree + 2 to conclude; otherwise INCONCLUSIVE.
    """
    if not contains(mu, nu):
        raise ValueError("mu must contain nu")
    counts = [
        _dense.ssyt_count(scale(k, mu), scale(k, nu), n) for k in range(kmax + 1)
    ]
    diffs = [c for c in counts]
    newton = [counts[0]]
    order = 0
    while len(diffs) >= 2 and any(diffs):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        order += 1
        newton.append(diffs[0])
    if any(diffs):
        return PolynomialityReport(counts, None, None, "INCONCLUSIVE", None)
    # all differences of this order vanish; need at least 2 witnesses
    if len(diffs) < 2:
        return PolynomialityReport(counts, None, None, "INCONCLUSIVE", None)
    degree = order - 1 if order > 0 else 0
    return PolynomialityReport(counts, degree, order, f"POLYNOMIAL(degree={degree})", newton[:-1] or [counts[0]])
