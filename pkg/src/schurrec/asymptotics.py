"""Root clouds of univariate specializations of the stretched sequences.

Specializing all variables but the first to points on a circle of radius R
turns each sequence term into a complex polynomial P_k(z); as k grows the
roots accumulate on the circle |z| = R (possibly plus the origin).  This
module collects the exact coefficients symbolically, finds roots with a
simultaneous Aberth-Ehrlich iteration, and reports per-cloud deviations
from the circle.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

from .recurrence import SchurSequence

RESIDUAL_TOL = 1e-8
COEFF_TRIM = 1e-14
ORIGIN_EXCLUSION = 0.05
MAX_ITERATIONS = 10_000
DEGREE_CAP = 5_000


class RootConvergenceError(RuntimeError):
    """Raised when the iteration cap is hit with unconverged roots."""

    def __init__(self, bad_roots: list[tuple[int, complex, float]]):
        self.bad_roots = bad_roots
        detail = "; ".join(f"root {i}: z={z:.6g}, residual={r:.3g}" for i, z, r in bad_roots)
        super().__init__(f"unconverged roots after {MAX_ITERATIONS} iterations: {detail}")


class DegenerateSpecialization(ValueError):
    """The specialized polynomial vanished identically."""


@dataclass(frozen=True)
class ComplexPoly:
    """Dense complex polynomial; coeffs[j] multiplies z^j."""

    coeffs: tuple[complex, ...]

    @staticmethod
    def from_coefficients(values: Sequence[complex]) -> "ComplexPoly":
        cs = [complex(v) for v in values]
        while cs and abs(cs[-1]) <= COEFF_TRIM:
            cs.pop()
        return ComplexPoly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "ComplexPoly":
        return ComplexPoly(tuple(j * c for j, c in enumerate(self.coeffs) if j >= 1))

    def coefficient_scale(self, radius: float) -> float:
        """Sum of |c_j| * radius^j, the natural backward-error scale."""
        return sum(abs(c) * radius**j for j, c in enumerate(self.coeffs))

    def is_real(self) -> bool:
        biggest = max((abs(c) for c in self.coeffs), default=0.0)
        return all(abs(c.imag) <= 1e-14 * (1.0 + biggest) for c in self.coeffs)


@dataclass(frozen=True)
class RootCloud:
    """All roots of one specialized polynomial plus the circle deviation."""

    k: int
    roots: tuple[complex, ...]
    radius: float
    deviation: float

    @staticmethod
    def from_roots(k: int, roots: Sequence[complex], radius: float) -> "RootCloud":
        kept = [z for z in roots if abs(z) >= ORIGIN_EXCLUSION * radius]
        dev = max((abs(abs(z) - radius) for z in kept), default=0.0)
        return RootCloud(k, tuple(roots), radius, dev)


def specialize(seq: SchurSequence, k: int, xi: Sequence[complex]) -> ComplexPoly:
    """P_k(z): substitute x_2..x_n -> xi and collect powers of x_1.

    The collection runs over the exact integer terms first; each coefficient
    is evaluated in complex arithmetic once at the end.
    """
    xs = [complex(v) for v in xi]
    if len(xs) != seq.n - 1:
        raise ValueError(f"xi must have length n-1 = {seq.n - 1}")
    if xs:
        moduli = [abs(v) for v in xs]
        if max(moduli) - min(moduli) > 1e-12:
            raise ValueError("all xi must lie on a common circle |xi| = R")
    term = seq.term(k)
    by_power: dict[int, complex] = {}
    powers: dict[tuple[int, int], complex] = {}

    def xi_power(i: int, p: int) -> complex:
        got = powers.get((i, p))
        if got is None:
            got = xs[i] ** p
            powers[(i, p)] = got
        return got

    for exps, coef in term.terms.items():
        value = complex(coef)
        for i, p in enumerate(exps[1:]):
            if p:
                value *= xi_power(i, p)
        by_power[exps[0]] = by_power.get(exps[0], 0j) + value
    if not by_power:
        raise DegenerateSpecialization(f"term {k} is the zero polynomial")
    top = max(by_power)
    coeffs = [by_power.get(j, 0j) for j in range(top + 1)]
    poly = ComplexPoly.from_coefficients(coeffs)
    if poly.degree < 0:
        raise DegenerateSpecialization(f"specialized term {k} vanished identically")
    return poly


def _aberth(coeffs: list[complex]) -> list[complex]:
    """Simultaneous root iteration with Cauchy-bound initialization."""
    d = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    cauchy = 1.0 + max(abs(c) for c in monic[:-1])
    z = [
        cauchy * cmath.exp(2j * cmath.pi * (j / d) + 1j * cmath.pi / (2 * d))
        for j in range(d)
    ]
    deriv = [j * monic[j] for j in range(1, d + 1)]

    def horner(cs: list[complex], x: complex) -> complex:
        acc = 0j
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    best_step = float("inf")
    since_best = 0
    for _ in range(MAX_ITERATIONS):
        max_step = 0.0
        for i in range(d):
            zi = z[i]
            p = horner(monic, zi)
            if p == 0:
                continue
            dp = horner(deriv, zi)
            if dp == 0:
                newton = p / (dp + 1e-300)
            else:
                newton = p / dp
            repulsion = 0j
            for j in range(d):
                if j != i:
                    diff = zi - z[j]
                    if diff == 0:
                        diff = 1e-300
                    repulsion += 1.0 / diff
            denom = 1.0 - newton * repulsion
            step = newton / denom if denom != 0 else newton
            z[i] = zi - step
            max_step = max(max_step, abs(step))
        if max_step < 1e-14 * (1.0 + cauchy):
            break
        if max_step < best_step * 0.999:
            best_step = max_step
            since_best = 0
        else:
            since_best += 1
            if since_best > 64:
                break
    return z


def _conjugate_closure(roots: list[complex]) -> list[complex]:
    """For real polynomials: snap near-real roots to the axis and average
    conjugate pairs so the returned multiset is exactly conjugation-closed."""
    order = sorted(range(len(roots)), key=lambda i: -abs(roots[i].imag))
    used = [False] * len(roots)
    out: list[complex] = []
    for i in order:
        if used[i]:
            continue
        used[i] = True
        zi = roots[i]
        scale = 1.0 + abs(zi)
        if abs(zi.imag) <= 1e-8 * scale:
            out.append(complex(zi.real, 0.0))
            continue
        target = zi.conjugate()
        best_j, best_dist = -1, float("inf")
        for j in range(len(roots)):
            if not used[j]:
                dist = abs(roots[j] - target)
                if dist < best_dist:
                    best_j, best_dist = j, dist
        if best_j >= 0 and best_dist <= 1e-6 * scale:
            used[best_j] = True
            mean = (zi + roots[best_j].conjugate()) / 2.0
            out.append(mean)
            out.append(mean.conjugate())
        else:
            out.append(zi)
    return out


def find_roots(p: ComplexPoly) -> list[complex]:
    """All complex roots with multiplicity, deterministic, each validated to
    relative residual below 1e-8."""
    if p.degree < 1:
        raise ValueError("find_roots requires degree >= 1")
    coeffs = list(p.coeffs)
    zeros_at_origin = 0
    while coeffs and coeffs[0] == 0:
        zeros_at_origin += 1
        coeffs.pop(0)
    roots: list[complex] = [0j] * zeros_at_origin
    if len(coeffs) >= 2:
        found = _aberth(coeffs)
        if p.is_real():
            found = _conjugate_closure(found)
        roots.extend(found)
    bad = []
    for i, z in enumerate(roots):
        scale = p.coefficient_scale(abs(z))
        residual = abs(p(z)) / scale if scale > 0 else abs(p(z))
        if residual >= RESIDUAL_TOL:
            bad.append((i, z, residual))
    if bad:
        raise RootConvergenceError(bad)
    return sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


@dataclass
class ExperimentResult:
    clouds: list[RootCloud]
    radius: float
    trend_ok: bool

    @property
    def deviations(self) -> list[float]:
        return [c.deviation for c in self.clouds]


def limit_experiment(seq: SchurSequence, xi: Sequence[complex], kmax: int) -> ExperimentResult:
    """Root clouds of P_1 .. P_kmax with circle deviations.

    trend_ok records whether deviation(kmax) < deviation(1); the limit
    statement gives no convergence rate, so the series is reported in full.
    """
    if seq.mu == seq.nu:
        raise ValueError("the limit experiment requires mu != nu")
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    xs = [complex(v) for v in xi]
    radius = abs(xs[0]) if xs else 1.0
    clouds = []
    for k in range(1, kmax + 1):
        poly = specialize(seq, k, xs)
        if poly.degree + 1 > DEGREE_CAP:
            raise ValueError(f"specialized polynomial at k={k} exceeds {DEGREE_CAP} coefficients")
        roots = find_roots(poly) if poly.degree >= 1 else []
        clouds.append(RootCloud.from_roots(k, roots, radius))
    trend_ok = clouds[-1].deviation < clouds[0].deviation
    return ExperimentResult(clouds, radius, trend_ok)


def clouds_to_csv(clouds: Sequence[RootCloud]) -> str:
    """CSV rows k,root_index,re,im,modulus,deviation (per-root deviation)."""
    lines = ["k,root_index,re,im,modulus,deviation"]
    for cloud in clouds:
        for i, z in enumerate(cloud.roots):
            modulus = abs(z)
            dev = abs(modulus - cloud.radius)
            lines.append(
                f"{cloud.k},{i},{z.real:.15g},{z.imag:.15g},{modulus:.15g},{dev:.15g}"
            )
    return "\n".join(lines) + "\n"
