"""Cyclic (rotation-symmetric) function families, their four-way split, and orbit machinery.

The degree-3 cyclic family splits, by fixing the top two variables, into four
functions over the remaining variables that share the chain core
t_n = sum of x_i x_{i+1} x_{i+2} for 0 <= i <= n-3 (no wraparound).  Their
spectra compose back to the spectrum of the full family.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .boolfn import (
    DEFAULT_MAX_VARS,
    AnfForm,
    BooleanFunction,
    anf_to_table,
    mask_value,
)
from .walsh import _parity


class SubFamily(Enum):
    """Selector for the four top-two-variable restrictions of the cyclic family."""

    F0 = 0
    F1 = 1
    F2 = 2
    F3 = 3


@dataclass(frozen=True)
class OrbitSet:
    """Rotation classes of n-bit masks: minimal-encoding representatives and class sizes."""

    n: int
    representatives: tuple
    orbit_sizes: tuple


def generate_rsbf(n: int, base_monomial) -> AnfForm:
    """XOR of all n cyclic shifts of one base monomial (shifts coinciding mod 2 cancel)."""
    base = frozenset(base_monomial)
    if not base:
        raise ValueError("base monomial must be non-empty")
    if n < 1 + max(base):
        raise ValueError(f"base monomial {sorted(base)} needs n >= {1 + max(base)}")
    monomials = set()
    for k in range(n):
        shifted = frozenset((i + k) % n for i in base)
        monomials ^= {shifted}
    return AnfForm(n, monomials)


def F3(n: int) -> AnfForm:
    """The cyclic degree-3 family: sum of x_i x_{i+1} x_{i+2} over all i mod n."""
    if n < 3:
        raise ValueError(f"cyclic triple family needs n >= 3, got {n}")
    return generate_rsbf(n, {0, 1, 2})


def F2(n: int, s: int) -> AnfForm:
    """The cyclic quadratic family with stride s: sum of x_i x_{i+s} over all i mod n."""
    if n < 2:
        raise ValueError(f"cyclic quadratic family needs n >= 2, got {n}")
    if s % n == 0:
        raise ValueError(f"stride {s} is 0 mod n={n}")
    return generate_rsbf(n, {0, s % n})


def chain_triples(n: int) -> AnfForm:
    """The non-wraparound chain t_n = sum of x_i x_{i+1} x_{i+2}, 0 <= i <= n-3."""
    if n < 3:
        raise ValueError(f"chain core needs n >= 3, got {n}")
    return AnfForm(n, [frozenset({i, i + 1, i + 2}) for i in range(n - 2)])


def subfunction_family(n: int) -> dict:
    """The four restrictions f0..f3 over n variables, keyed by SubFamily.

    f0 = t_n
    f1 = t_n + x0 x1
    f2 = t_n + x_{n-2} x_{n-1}
    f3 = t_n + x0 x1 + x_{n-2} x_{n-1} + x0 + x_{n-1}
    """
    core = chain_triples(n).monomials
    lo = frozenset({0, 1})
    hi = frozenset({n - 2, n - 1})
    return {
        SubFamily.F0: AnfForm(n, core),
        SubFamily.F1: AnfForm(n, core ^ {lo}),
        SubFamily.F2: AnfForm(n, core ^ {hi}),
        SubFamily.F3: AnfForm(n, core ^ {lo} ^ {hi} ^ {frozenset({0})} ^ {frozenset({n - 1})}),
    }


def compose_F3_point(n: int, c, sub_values) -> int:
    """Recombine one coefficient of the cyclic family from its four sub-coefficients.

    sub_values must be the coefficients of (f0, f2, f1, f3) over n-2 variables,
    all evaluated at the low n-2 bits of c; the order matches the sign pattern
    (+1, (-1)^c_{n-2}, (-1)^c_{n-1}, (-1)^(c_{n-2}+c_{n-1})).
    """
    if n < 5:
        raise ValueError(f"composition needs n >= 5, got {n}")
    cv = mask_value(c, n)
    w0, w2, w1, w3 = sub_values
    s_hi2 = -1 if (cv >> (n - 2)) & 1 else 1
    s_hi1 = -1 if (cv >> (n - 1)) & 1 else 1
    return w0 + s_hi2 * w2 + s_hi1 * w1 + s_hi2 * s_hi1 * w3


def _necklaces(n: int):
    # FKM generation of binary necklaces in lexicographic order, with period.
    a = [0] * (n + 1)

    def gen(t, p):
        if t > n:
            if n % p == 0:
                yield a[1:], p
        else:
            a[t] = a[t - p]
            yield from gen(t + 1, p)
            if a[t - p] == 0:
                a[t] = 1
                yield from gen(t + 1, t)

    yield from gen(1, 1)


def orbit_representatives(n: int) -> OrbitSet:
    """One representative per rotation class, ascending, with class sizes.

    The representative of a class is its minimal integer encoding; a class's
    size is the period of its bit pattern.
    """
    if not 1 <= n <= 30:
        raise ValueError(f"orbit enumeration supports 1 <= n <= 30, got {n}")
    reps = []
    sizes = []
    for word, period in _necklaces(n):
        # word[0] is the most significant bit, so lexicographic generation
        # order is ascending numeric order of the representatives.
        reps.append(sum(bit << (n - 1 - j) for j, bit in enumerate(word)))
        sizes.append(period)
    return OrbitSet(n=n, representatives=tuple(reps), orbit_sizes=tuple(sizes))


@lru_cache(maxsize=16)
def _family_table(i: SubFamily, n: int, max_vars: int) -> BooleanFunction:
    return anf_to_table(subfunction_family(n)[i], max_vars=max_vars)


def restricted_sum_oracle(i: SubFamily, n: int, c, max_vars: int = DEFAULT_MAX_VARS) -> int:
    """Brute-force signed sum over the inputs with the top variable set to 1.

    Returns sum over x with x_{n-1}=1 of (-1)^(f_i(x) + c.x), straight from the
    explicit table; ground truth for the top-bit-set branch of the recurrence
    case rules.
    """
    if n < 8:
        raise ValueError(f"restricted-sum oracle needs n >= 8, got {n}")
    cv = mask_value(c, n)
    if not (cv >> (n - 1)) & 1:
        raise ValueError("oracle requires the top mask bit c_{n-1} = 1")
    table = _family_table(i, n, max_vars).table
    half = 1 << (n - 1)
    xs = np.arange(half, 1 << n, dtype=np.uint64)
    mismatch = _parity(xs & np.uint64(cv)) ^ table[half:]
    return half - 2 * int(mismatch.sum(dtype=np.int64))


def realize(anf: AnfForm, max_vars: int = DEFAULT_MAX_VARS) -> BooleanFunction:
    """Convenience alias for anf_to_table."""
    return anf_to_table(anf, max_vars=max_vars)
