"""Walsh transforms (naive and fast butterfly) and nonlinearity, all in exact integers."""

from dataclasses import dataclass

import numpy as np

from .boolfn import DEFAULT_MAX_VARS, BooleanFunction, TableSizeError, mask_value


class WalshSpectrum:
    """Full signed spectrum: values[enc(c)] = sum over x of (-1)^(f(x) + c.x)."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        arr = np.asarray(values, dtype=np.int64)
        if arr.ndim != 1 or arr.size != 1 << n:
            raise ValueError(f"spectrum must have length 2^{n}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.values = arr

    def __getitem__(self, c) -> int:
        return int(self.values[mask_value(c, self.n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return f"WalshSpectrum(n={self.n}, at_zero={int(self.values[0])})"


@dataclass(frozen=True)
class NonlinearityReport:
    """Distances to the linear functions alone and to the affine class."""

    linear_nl: int
    affine_nl: int
    max_abs_coeff: int
    argmax_masks: tuple


def fwht_inplace(values: np.ndarray) -> None:
    """In-place Walsh-Hadamard butterfly on a length-2^n int64 array."""
    size = values.size
    if size & (size - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < size:
        view = values.reshape(-1, 2, h)
        top = view[:, 0, :].copy()
        view[:, 0, :] += view[:, 1, :]
        view[:, 1, :] = top - view[:, 1, :]
        h <<= 1


def walsh_spectrum(f: BooleanFunction, max_vars: int = DEFAULT_MAX_VARS) -> WalshSpectrum:
    """Full spectrum via the fast butterfly, O(n 2^n)."""
    if f.n > max_vars:
        raise TableSizeError(f"n={f.n} exceeds explicit-table cap {max_vars}")
    signs = 1 - 2 * f.table.astype(np.int64)
    fwht_inplace(signs)
    return WalshSpectrum(f.n, signs)


def _parity(words: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(words) & 1).astype(np.uint8)


def walsh_point(f: BooleanFunction, c) -> int:
    """Single coefficient by the defining O(2^n) sum; the transform's oracle."""
    cv = mask_value(c, f.n)
    idx = np.arange(1 << f.n, dtype=np.uint64)
    mismatch = _parity(idx & np.uint64(cv)) ^ f.table
    return (1 << f.n) - 2 * int(mismatch.sum(dtype=np.int64))


def nonlinearity(spectrum: WalshSpectrum) -> NonlinearityReport:
    """Both nonlinearity conventions, from one spectrum.

    linear_nl minimizes distance over the linear functions c.x only;
    affine_nl also admits their complements, so it uses |W| and is never
    larger.
    """
    size = 1 << spectrum.n
    max_signed = int(spectrum.values.max())
    abs_vals = np.abs(spectrum.values)
    max_abs = int(abs_vals.max())
    argmax = tuple(int(i) for i in np.flatnonzero(abs_vals == max_abs))
    return NonlinearityReport(
        linear_nl=(size - max_signed) // 2,
        affine_nl=(size - max_abs) // 2,
        max_abs_coeff=max_abs,
        argmax_masks=argmax,
    )
