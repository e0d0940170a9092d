"""Eigenvalues of symmetric circulant distance matrices.

For a symmetric first row ``c`` the eigenvalues are the real cosine sums
``lambda_k = sum_j c[j] cos(2 pi j k / n)``; no matrix is formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distance import DistanceRow
from .errors import DomainError

DIRECT_MAX_N = 4096
_COMPENSATED_FROM = 1 << 12
# Frequencies evaluated per numpy block in the direct path.
_K_BLOCK = 256


@dataclass(frozen=True, eq=False)
class Spectrum:
    """``by_frequency[k]`` is the eigenvalue for Fourier mode k; ``eigenvalues`` is sorted descending."""

    by_frequency: np.ndarray

    @property
    def n(self) -> int:
        return int(self.by_frequency.shape[0])

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.sort(self.by_frequency)[::-1]

    @property
    def radius(self) -> float:
        return float(self.by_frequency.max())

    def to_csv(self) -> str:
        return "".join(f"{k},{v:.12g}\n" for k, v in enumerate(self.by_frequency.tolist()))


def _as_row(row) -> np.ndarray:
    if isinstance(row, DistanceRow):
        return np.roll(row.dist, -row.source).astype(np.int64)
    return np.asarray(row, dtype=np.int64)


def _direct(c: np.ndarray) -> np.ndarray:
    n = c.shape[0]
    j = np.arange(n, dtype=np.int64)
    cf = c.astype(np.float64)
    half = n // 2
    out = np.empty(half + 1)
    for k0 in range(0, half + 1, _K_BLOCK):
        k = np.arange(k0, min(k0 + _K_BLOCK, half + 1), dtype=np.int64)
        # reduce jk mod n in integers so the angle is exact before scaling
        phase = (k[:, None] * j[None, :]) % n
        terms = cf[None, :] * np.cos((2.0 * np.pi / n) * phase)
        if n > _COMPENSATED_FROM:
            out[k0:k0 + k.size] = [math.fsum(t) for t in terms]
        else:
            out[k0:k0 + k.size] = terms.sum(axis=1)
    # lambda_k == lambda_{n-k} for symmetric rows
    full = np.empty(n)
    full[:half + 1] = out
    full[half + 1:] = out[1:n - half][::-1]
    return full


def _fft(c: np.ndarray) -> np.ndarray:
    n = c.shape[0]
    half = np.fft.rfft(c.astype(np.float64)).real
    full = np.empty(n)
    full[:half.shape[0]] = half
    full[half.shape[0]:] = half[1:n - half.shape[0] + 1][::-1]
    return full


def circulant_spectrum(row, method: str = "auto") -> Spectrum:
    """Spectrum of the circulant matrix with first row ``row``.

    ``method`` is ``"direct"`` (cosine sums, O(n^2)), ``"fft"``, or
    ``"auto"``, which uses direct summation up to ``DIRECT_MAX_N`` vertices.
    """
    c = _as_row(row)
    n = c.shape[0]
    if n == 0:
        raise DomainError("empty row")
    if not np.array_equal(c[1:], c[1:][::-1]):
        raise DomainError("row is not symmetric (c[j] != c[n-j]); the matrix would not be symmetric")
    if method == "auto":
        method = "direct" if n <= DIRECT_MAX_N else "fft"
    if method == "direct":
        values = _direct(c)
    elif method == "fft":
        values = _fft(c)
    else:
        raise DomainError(f"unknown method {method!r}")
    return Spectrum(values)


@dataclass(frozen=True)
class RadiusCheck:
    ok: bool
    radius: float
    transmission: int
    tol: float

    @property
    def relative_error(self) -> float:
        return abs(self.radius - self.transmission) / max(1, self.transmission)

    def __bool__(self):
        return self.ok


def spectral_radius_check(row, tol: float = 1e-9, method: str = "auto") -> RadiusCheck:
    """Compare the largest eigenvalue with the row sum."""
    c = _as_row(row)
    spectrum = circulant_spectrum(c, method=method)
    s = int(c.sum())
    radius = spectrum.radius
    return RadiusCheck(abs(radius - s) <= tol * max(1, s), radius, s, tol)
