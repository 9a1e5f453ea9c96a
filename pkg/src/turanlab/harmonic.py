"""Characters, transforms and convolution on finite abelian groups.

The transform is the dense character sum

    fhat(t) = sum_x f(x) * conj(gamma_t(x)),
    gamma_t(x) = exp(2 pi i sum_j t_j x_j / n_j),

computed factor by factor along the cyclic components (a Kronecker
product of small dense DFT matrices, no FFT library). Roots of unity at
quarter turns are snapped to their exact values 1, -1, i, -i, so on
groups of exponent 2 the transform of an integer-valued function is
exactly integer-valued in float arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .groups import Element, FiniteAbelianGroup

_QUARTERS = {
    Fraction(0, 1): 1 + 0j,
    Fraction(1, 4): -1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): 1j,
}


def root_of_unity(frac: Fraction) -> complex:
    """exp(-2 pi i frac) with exact values at quarter turns."""
    frac = frac % 1
    if frac in _QUARTERS:
        return _QUARTERS[frac]
    a = -2.0 * math.pi * float(frac)
    return complex(math.cos(a), math.sin(a))


@lru_cache(maxsize=64)
def _dft_matrix(n: int) -> np.ndarray:
    w = [root_of_unity(Fraction(j, n)) for j in range(n)]
    return np.array([[w[(t * x) % n] for x in range(n)] for t in range(n)])


@dataclass
class GroupFunction:
    """Real-valued function on a finite abelian group, flat enumeration order."""
    group: FiniteAbelianGroup
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.group.order,):
            raise ValueError(f"expected {self.group.order} values, got shape {v.shape}")
        self.values = v

    def __call__(self, x) -> float:
        return float(self.values[self.group.index(self.group.canon(tuple(x)))])

    def support(self) -> list[Element]:
        return [self.group.element(i) for i in np.flatnonzero(self.values)]

    def total(self) -> float:
        return float(self.values.sum())

    def l1(self) -> float:
        return float(np.abs(self.values).sum())


@dataclass
class DualFunction:
    """Complex-valued function on the dual group, same enumeration order."""
    group: FiniteAbelianGroup
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.group.order,):
            raise ValueError(f"expected {self.group.order} values, got shape {v.shape}")
        self.values = v

    def __call__(self, t) -> complex:
        return complex(self.values[self.group.index(self.group.canon(tuple(t)))])


def from_dict(group: FiniteAbelianGroup, table: dict) -> GroupFunction:
    v = np.zeros(group.order)
    for x, val in table.items():
        if isinstance(x, int):
            x = (x,)
        v[group.index(group.canon(tuple(x)))] = val
    return GroupFunction(group, v)


def delta(group: FiniteAbelianGroup) -> GroupFunction:
    v = np.zeros(group.order)
    v[0] = 1.0
    return GroupFunction(group, v)


def indicator(group: FiniteAbelianGroup, subset: Iterable) -> GroupFunction:
    v = np.zeros(group.order)
    for x in subset:
        if isinstance(x, int):
            x = (x,)
        v[group.index(group.canon(tuple(x)))] = 1.0
    return GroupFunction(group, v)


def _axis_transform(arr: np.ndarray, moduli: tuple[int, ...], conjugate: bool) -> np.ndarray:
    out = arr.astype(complex).reshape(moduli if moduli else (1,))
    for axis, n in enumerate(moduli):
        W = _dft_matrix(n)
        if conjugate:
            W = W.conj()
        out = np.moveaxis(np.tensordot(W, out, axes=(1, axis)), 0, axis)
    return out.reshape(-1)


def dft(f: GroupFunction) -> DualFunction:
    return DualFunction(f.group, _axis_transform(f.values, f.group.moduli, False))


def idft(F: DualFunction, imag_tol: float = 1e-9) -> GroupFunction:
    vals = _axis_transform(F.values, F.group.moduli, True) / F.group.order
    worst = float(np.abs(vals.imag).max()) if vals.size else 0.0
    scale = max(1.0, float(np.abs(F.values).sum()))
    if worst > imag_tol * scale:
        raise ValueError(f"inverse transform is not real: max imag {worst:.3e}")
    return GroupFunction(F.group, vals.real)


def dft_exact_signs(group: FiniteAbelianGroup, values) -> list:
    """Exact transform for groups of exponent <= 2 (all characters +-1).

    `values` may be ints or Fractions; the result has the same arithmetic.
    """
    if any(m not in (1, 2) for m in group.moduli):
        raise ValueError("exact sign transform needs all moduli in {1, 2}")
    vals = list(values)
    if len(vals) != group.order:
        raise ValueError("value count mismatch")
    stride = group.order
    for m in group.moduli:
        if m == 1:
            continue
        stride //= 2
        out = [None] * len(vals)
        # butterfly along this axis: blocks of size 2*stride
        for base in range(0, len(vals), 2 * stride):
            for j in range(stride):
                a = vals[base + j]
                b = vals[base + stride + j]
                out[base + j] = a + b
                out[base + stride + j] = a - b
        vals = out
    return vals


def convolve(f: GroupFunction, g: GroupFunction) -> GroupFunction:
    """(f * g)(x) = sum_y f(y) g(x - y), exact shift-and-add.

    Integer inputs give integer outputs exactly (no transform round trip).
    """
    if f.group != g.group:
        raise ValueError("convolution needs both functions on the same group")
    G = f.group
    if G.rank == 0:
        return GroupFunction(G, f.values * g.values)
    # accumulate shifts of the denser function over the sparser support
    a, b = (f, g) if np.count_nonzero(f.values) <= np.count_nonzero(g.values) else (g, f)
    shape = G.moduli
    bb = b.values.reshape(shape)
    acc = np.zeros(shape)
    for i in np.flatnonzero(a.values):
        y = G.element(int(i))
        acc += a.values[i] * np.roll(bb, shift=y, axis=tuple(range(G.rank)))
    return GroupFunction(G, acc.reshape(-1))


def reflect(f: GroupFunction) -> GroupFunction:
    """x -> f(-x)."""
    G = f.group
    out = np.empty_like(f.values)
    for i in range(G.order):
        out[G.index(G.neg(G.element(i)))] = f.values[i]
    return GroupFunction(G, out)


def autocorrelation(f: GroupFunction) -> GroupFunction:
    """f * reflect(f); its transform is |fhat|^2, hence positive definite."""
    return convolve(f, reflect(f))


class PDReport(NamedTuple):
    flag: bool
    min_real: float
    max_imag: float
    tol: float


def is_positive_definite(f: GroupFunction, tol: float | None = None) -> PDReport:
    """Bochner test: positive definite iff the transform is nonnegative.

    Default tolerance 1e-9 scaled by the l1 mass of f. Both extrema are
    reported so callers can see the margin, not just the verdict.
    """
    if tol is None:
        tol = 1e-9 * max(1.0, f.l1())
    F = dft(f).values
    min_real = float(F.real.min()) if F.size else 0.0
    max_imag = float(np.abs(F.imag).max()) if F.size else 0.0
    return PDReport(min_real >= -tol and max_imag <= tol, min_real, max_imag, tol)


def parseval_gap(f: GroupFunction) -> float:
    """Relative gap in sum |f|^2 = (1/|G|) sum |fhat|^2 (diagnostic)."""
    lhs = float((f.values ** 2).sum())
    rhs = float((np.abs(dft(f).values) ** 2).sum()) / f.group.order
    return abs(lhs - rhs) / max(1.0, abs(lhs))
