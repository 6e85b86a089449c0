"""Finite-support vectors, the modular, and the Luxemburg norm.

The norm solves φ(r) = Σ_{finite exponents} |x_i/r|^{p_i} = 1 by bisection on
the certified bracket [max|x_i|, Σ|x_i|]: the upper end satisfies φ ≤ 1
because every |x_i|/Σ|x_j| ≤ 1 and p_i ≥ 1, the lower end satisfies φ ≥ 1
because one term already contributes 1.  Coordinates with an infinite
exponent contribute a hard lower bound max|x_i| (the sup-norm on that part)
instead of a φ term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import SemanticError
from .exponents import ExponentSequence

INF = math.inf

DEFAULT_REL_TOL = 1e-12
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class SparseVector:
    """Finite-support real sequence; zero entries are not stored."""

    entries: tuple[tuple[int, float], ...]  # ascending index

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, float]]) -> "SparseVector":
        acc: dict[int, float] = {}
        for idx, val in pairs:
            idx = int(idx)
            val = float(val)
            if idx < 1:
                raise SemanticError(f"vector index must be >= 1, got {idx}")
            if not math.isfinite(val):
                raise SemanticError(f"vector entries must be finite, got {val} at index {idx}")
            if idx in acc:
                raise SemanticError(f"duplicate vector index {idx}")
            if val != 0.0:
                acc[idx] = val
        return SparseVector(tuple(sorted(acc.items())))

    @staticmethod
    def from_json(obj) -> "SparseVector":
        if isinstance(obj, dict):
            obj = obj["entries"]
        return SparseVector.from_pairs(obj)

    def to_json(self) -> dict:
        return {"entries": [[i, v] for i, v in self.entries]}

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx: int) -> float:
        for i, v in self.entries:
            if i == idx:
                return v
        return 0.0

    def scale(self, factor: float) -> "SparseVector":
        return SparseVector.from_pairs((i, factor * v) for i, v in self.entries)

    def add(self, other: "SparseVector") -> "SparseVector":
        acc = dict(self.entries)
        for i, v in other.entries:
            acc[i] = acc.get(i, 0.0) + v
        return SparseVector.from_pairs(acc.items())

    def abs(self) -> "SparseVector":
        return SparseVector(tuple((i, abs(v)) for i, v in self.entries))


def basis_vector(index: int, value: float = 1.0) -> SparseVector:
    return SparseVector.from_pairs([(index, value)])


@dataclass(frozen=True)
class NormResult:
    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    converged: bool

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "bracket": list(self.bracket),
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def _power(base: float, exponent: float) -> float:
    # |x/r| = 0 contributes nothing for any positive exponent
    if base == 0.0:
        return 0.0
    try:
        return base**exponent
    except OverflowError:
        return INF


def modular(p: ExponentSequence, x: SparseVector) -> float:
    """ρ(x) = Σ |x_i|^{p_i}; an infinite exponent contributes 0 when |x_i| <= 1
    and ∞ otherwise."""
    total = 0.0
    for idx, val in x.entries:
        exp = p.eval(idx)
        a = abs(val)
        if exp == INF:
            if a > 1.0:
                return INF
        else:
            total += _power(a, exp)
            if total == INF:
                return INF
    return total


def in_unit_ball(p: ExponentSequence, x: SparseVector) -> bool:
    """Modular unit ball membership, with a hair of slack for float powers."""
    return modular(p, x) <= 1.0 + 1e-12


def luxemburg_norm(p: ExponentSequence, x: SparseVector, rel_tol: float = DEFAULT_REL_TOL) -> NormResult:
    """inf { r > 0 : ρ(x/r) <= 1 }, bracketed to relative width ``rel_tol``."""
    if not (0.0 < rel_tol <= 1e-2):
        raise SemanticError(f"rel_tol must be in (0, 1e-2], got {rel_tol}")
    if not x.entries:
        return NormResult(0.0, (0.0, 0.0), 0.0, 0, True)

    finite_part = []
    inf_floor = 0.0
    for idx, val in x.entries:
        exp = p.eval(idx)
        a = abs(val)
        if exp == INF:
            inf_floor = max(inf_floor, a)
        else:
            finite_part.append((a, exp))

    def phi(r: float) -> float:
        total = 0.0
        for a, exp in finite_part:
            total += _power(a / r, exp)
            if total == INF:
                return INF
        return total

    if not finite_part:
        return NormResult(inf_floor, (inf_floor, inf_floor), 0.0, 0, True)

    lo = max(max(a for a, _ in finite_part), inf_floor)
    hi = sum(a for a, _ in finite_part) + inf_floor

    phi_lo = phi(lo)
    if phi_lo <= 1.0:
        # the sup-norm floor (or the single dominant coordinate) is binding
        return NormResult(lo, (lo, lo), phi_lo if inf_floor >= lo and inf_floor > 0 else abs(phi_lo - 1.0), 0, True)

    # refine all the way to float resolution (it is cheap: ~60 halvings);
    # rel_tol only decides whether the final bracket counts as converged
    iterations = 0
    while iterations < MAX_ITERATIONS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution exhausted
        if phi(mid) > 1.0:
            lo = mid
        else:
            hi = mid
        iterations += 1

    converged = hi - lo <= rel_tol * lo
    value = hi  # admissible end of the bracket: phi(hi) <= 1
    return NormResult(value, (lo, hi), abs(phi(value) - 1.0), iterations, converged)
