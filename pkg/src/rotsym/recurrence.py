"""Length recursion for sub-family coefficients and exact big-integer sequences.

One Walsh coefficient of the cyclic degree-3 family at any n costs O(n)
big-integer operations.  The effective top mask bit selects between a
non-branching rule (lengths m-2, m-3) and a three-case rule (lengths m-1,
m-4, m-5); every rule is plain data below so the whole case table can be
audited in one place and checked against the brute-force oracles.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .boolfn import DEFAULT_MAX_VARS, anf_to_table, mask_value
from .rsbf import SubFamily, compose_F3_point, subfunction_family
from .walsh import walsh_spectrum

# Recursion applies only above this length; shorter prefixes come from the
# seed spectra.  Must stay >= 8 so the rule-selector bits c_{m-2}..c_{m-5}
# can never collide with a pending bit-0 flip.
BASE_THRESHOLD = 8


@dataclass(frozen=True)
class RuleTerm:
    """One summand of a length-reduction rule.

    Contributes coeff * (-1)^(XOR of mask bits m-k, k in sign_offsets) times
    the target family's coefficient at length m-drop.  flip_low is XORed
    into the pending bit-0 flip inherited from the parent; flip_high sets a
    pending top-bit flip on the shorter prefix (never inherited: a parent's
    top-bit flip lives at bit m-1, outside every shorter prefix).
    """

    coeff: int
    sign_offsets: tuple
    family: SubFamily
    drop: int
    flip_low: int = 0
    flip_high: int = 0


_F0, _F1, _F2, _F3 = SubFamily.F0, SubFamily.F1, SubFamily.F2, SubFamily.F3

# Effective top bit clear: one rule per family, no case split.
TOP_CLEAR_RULES = {
    _F0: (RuleTerm(2, (), _F0, 2), RuleTerm(2, (2,), _F0, 3)),
    _F1: (RuleTerm(2, (), _F1, 2), RuleTerm(2, (2,), _F1, 3)),
    _F2: (RuleTerm(2, (), _F0, 2), RuleTerm(2, (3, 2), _F2, 3, flip_high=1)),
    _F3: (RuleTerm(2, (2,), _F1, 3, flip_low=1),),
}

# Effective top bit set: head term at length m-1 ...
TOP_SET_HEADS = {
    _F0: RuleTerm(1, (), _F0, 1),
    _F1: RuleTerm(1, (), _F1, 1),
    _F2: RuleTerm(1, (), _F0, 1),
    _F3: RuleTerm(1, (), _F1, 1, flip_low=1),
}

# ... plus a tail selected by the raw mask bits (c_{m-2}, c_{m-3}).  The
# single-term case ignores c_{m-3}, hence the duplicate rows.  Which n-5
# family each two-term case targets was fixed by exhaustive comparison
# against the restricted-sum oracle, not taken on faith.
TOP_SET_TAILS = {
    (_F0, 1, 0): (RuleTerm(-2, (3,), _F0, 4),),
    (_F0, 1, 1): (RuleTerm(-2, (3,), _F0, 4),),
    (_F0, 0, 0): (RuleTerm(-2, (), _F0, 4), RuleTerm(-4, (4,), _F0, 5)),
    (_F0, 0, 1): (RuleTerm(-2, (), _F0, 4), RuleTerm(-4, (4, 5), _F2, 5, flip_high=1)),
    (_F2, 0, 0): (RuleTerm(-2, (3,), _F0, 4),),
    (_F2, 0, 1): (RuleTerm(-2, (3,), _F0, 4),),
    (_F2, 1, 0): (RuleTerm(-2, (), _F0, 4), RuleTerm(-4, (4,), _F0, 5)),
    (_F2, 1, 1): (RuleTerm(-2, (), _F0, 4), RuleTerm(-4, (4, 5), _F2, 5, flip_high=1)),
    (_F1, 1, 0): (RuleTerm(-2, (3,), _F1, 4),),
    (_F1, 1, 1): (RuleTerm(-2, (3,), _F1, 4),),
    (_F1, 0, 0): (RuleTerm(-2, (), _F1, 4), RuleTerm(-4, (4,), _F1, 5)),
    (_F1, 0, 1): (RuleTerm(-2, (), _F1, 4), RuleTerm(-4, (4, 5), _F3, 5, flip_low=1)),
    (_F3, 0, 0): (RuleTerm(2, (3,), _F1, 4, flip_low=1),),
    (_F3, 0, 1): (RuleTerm(2, (3,), _F1, 4, flip_low=1),),
    (_F3, 1, 0): (RuleTerm(2, (), _F1, 4, flip_low=1), RuleTerm(4, (4,), _F1, 5, flip_low=1)),
    (_F3, 1, 1): (RuleTerm(2, (), _F1, 4, flip_low=1), RuleTerm(4, (4, 5), _F3, 5)),
}

# The flip-state space closed under every rule above, given roots with no
# pending flips: bit-0 flips arise only in the F1/F3 cone, top-bit flips
# only on F2 targets.
_STATES = (
    (_F0, 0, 0),
    (_F1, 0, 0),
    (_F1, 1, 0),
    (_F2, 0, 0),
    (_F2, 0, 1),
    (_F3, 0, 0),
    (_F3, 1, 0),
)
_STATE_INDEX = {s: i for i, s in enumerate(_STATES)}


def _terms_for(family: SubFamily, branch: int, sel2: int, sel3: int):
    if branch == 0:
        return TOP_CLEAR_RULES[family]
    return (TOP_SET_HEADS[family],) + TOP_SET_TAILS[(family, sel2, sel3)]


def _compile_programs():
    # One program per value of the five raw mask bits c_{m-1}..c_{m-5}; a
    # program maps the level's 7 states to (signed coeff, drop, child index)
    # triples.  Mechanical flattening of the rule tables above.
    programs = {}
    for top, b2, b3, b4, b5 in product((0, 1), repeat=5):
        bit = {2: b2, 3: b3, 4: b4, 5: b5}
        prog = []
        for family, fl, fh in _STATES:
            entries = []
            for t in _terms_for(family, top ^ fh, b2, b3):
                parity = 0
                for k in t.sign_offsets:
                    parity ^= bit[k]
                child = _STATE_INDEX[(t.family, fl ^ t.flip_low, t.flip_high)]
                entries.append((-t.coeff if parity else t.coeff, t.drop, child))
            prog.append(tuple(entries))
        programs[top << 4 | b2 << 3 | b3 << 2 | b4 << 1 | b5] = tuple(prog)
    return programs


_PROGRAMS = _compile_programs()


@lru_cache(maxsize=None)
def _seed_spectrum(family: SubFamily, m: int) -> np.ndarray:
    return walsh_spectrum(anf_to_table(subfunction_family(m)[family])).values


def _state_window(n: int, cv: int) -> dict:
    """Bottom-up levels 3..n of the 7 flip states; keeps the last six levels."""
    levels = {}
    for m in range(3, n + 1):
        if m <= BASE_THRESHOLD:
            prefix = cv & ((1 << m) - 1)
            seeds = {f: _seed_spectrum(f, m) for f in SubFamily}
            levels[m] = tuple(
                int(seeds[f][prefix ^ fl ^ (fh << (m - 1))]) for f, fl, fh in _STATES
            )
        else:
            prog = _PROGRAMS[(cv >> (m - 5)) & 31]
            levels[m] = tuple(
                sum(sc * levels[m - drop][child] for sc, drop, child in entries)
                for entries in prog
            )
        levels.pop(m - 6, None)
    return levels


def eval_subfunction_point(i: SubFamily, n: int, c) -> int:
    """Exact Walsh coefficient of f_i over n variables at mask c, O(n) bigint ops."""
    if n < 3:
        raise ValueError(f"sub-family evaluation needs n >= 3, got {n}")
    cv = mask_value(c, n)
    return _state_window(n, cv)[n][_STATE_INDEX[(SubFamily(i), 0, 0)]]


def eval_F3_point(n: int, c) -> int:
    """Exact coefficient of the cyclic degree-3 family at mask c, any size n.

    Composes the four sub-family coefficients at the low n-2 bits of c.
    """
    if n < BASE_THRESHOLD + 2:
        raise ValueError(f"point recurrence needs n >= {BASE_THRESHOLD + 2}, got {n}")
    cv = mask_value(c, n)
    states = _state_window(n - 2, cv & ((1 << (n - 2)) - 1))[n - 2]
    subs = tuple(states[_STATE_INDEX[(f, 0, 0)]] for f in (_F0, _F2, _F1, _F3))
    return compose_F3_point(n, cv, subs)


def eval_restricted_sum(i: SubFamily, n: int, c) -> int:
    """Case-rule prediction for the signed sum over inputs with x_{n-1} = 1.

    The tail of the top-bit-set rule; rsbf.restricted_sum_oracle is its
    brute-force ground truth.
    """
    if n < BASE_THRESHOLD + 1:
        raise ValueError(f"restricted-sum rules need n >= {BASE_THRESHOLD + 1}, got {n}")
    cv = mask_value(c, n)
    if not (cv >> (n - 1)) & 1:
        raise ValueError("restricted-sum rules need the top mask bit set")
    levels = _state_window(n - 1, cv & ((1 << (n - 1)) - 1))
    sel = ((cv >> (n - 2)) & 1, (cv >> (n - 3)) & 1)
    total = 0
    for t in TOP_SET_TAILS[(SubFamily(i), *sel)]:
        parity = 0
        for k in t.sign_offsets:
            parity ^= (cv >> (n - k)) & 1
        child = levels[n - t.drop][_STATE_INDEX[(t.family, t.flip_low, t.flip_high)]]
        total += (-t.coeff if parity else t.coeff) * child
    return total


# Zero-coefficient and weight sequences, grown on demand.  Two recurrences
# each; any disagreement is a hard error since it would invalidate every
# downstream value.
_seq_lock = threading.Lock()
_zero_seq = {3: 6, 4: 8, 5: 20}
_weight_seq = {3: 1, 4: 4, 5: 6}
_seq_high = 5


def _extend_sequences(n: int) -> None:
    global _seq_high
    with _seq_lock:
        for m in range(_seq_high + 1, n + 1):
            z = 2 * (_zero_seq[m - 2] + _zero_seq[m - 3])
            if m >= 8:
                alt = _zero_seq[m - 1] + 2 * _zero_seq[m - 4] + 4 * _zero_seq[m - 5]
                if alt != z:
                    raise RuntimeError(f"zero-value recurrences disagree at n={m}")
            w = 2 * (_weight_seq[m - 2] + _weight_seq[m - 3]) + (1 << (m - 3))
            if 2 * w != (1 << m) - z:
                raise RuntimeError(f"weight and zero-value recurrences disagree at n={m}")
            _zero_seq[m] = z
            _weight_seq[m] = w
            _seq_high = m


def F3_zero_value(n: int) -> int:
    """Exact coefficient of the cyclic degree-3 family at the zero mask."""
    if n < 3:
        raise ValueError(f"zero-value sequence starts at n=3, got {n}")
    _extend_sequences(n)
    return _zero_seq[n]


def F3_weight_and_nonlinearity(n: int) -> tuple:
    """Exact (weight, nonlinearity) of the cyclic degree-3 family; they coincide."""
    if n < 3:
        raise ValueError(f"weight sequence starts at n=3, got {n}")
    _extend_sequences(n)
    w = _weight_seq[n]
    if 2 * w != (1 << n) - _zero_seq[n]:
        raise RuntimeError(f"weight and zero-value sequences disagree at n={n}")
    return (w, w)


@dataclass(frozen=True)
class SandwichReport:
    n_max: int
    holds: bool
    tight_cases: tuple
    failures: tuple


def check_sandwich_bounds(n_max: int) -> SandwichReport:
    """Check zero(n-1) <= zero(n) <= 2 zero(n-1) for 7 <= n <= n_max, exactly.

    Violations are reported, not raised; tight_cases lists (n, side) pairs
    where equality is attained.
    """
    if n_max < 7:
        raise ValueError(f"sandwich check needs n_max >= 7, got {n_max}")
    _extend_sequences(n_max)
    tight = []
    failures = []
    for m in range(7, n_max + 1):
        prev, cur = _zero_seq[m - 1], _zero_seq[m]
        lower_ok, upper_ok = prev <= cur, cur <= 2 * prev
        if not (lower_ok and upper_ok):
            failures.append((m, lower_ok, upper_ok))
        if prev == cur:
            tight.append((m, "lower"))
        if cur == 2 * prev:
            tight.append((m, "upper"))
    return SandwichReport(n_max, not failures, tuple(tight), tuple(failures))


@dataclass(frozen=True)
class QuarterBoundReport:
    n_lo: int
    n_hi: int
    restrict_c1: bool
    holds: bool
    max_ratio: Fraction
    attained_at: tuple
    per_n: tuple
    failures: tuple


def check_subfamily_quarter_bound(
    n_lo: int, n_hi: int, restrict_c1: bool = False, max_vars: int = DEFAULT_MAX_VARS
) -> QuarterBoundReport:
    """Check 4|Wf_i(c)| < zero(n+2) over all four sub-families by brute force.

    Quantifies over c != 0, or only c with bit 1 set when restrict_c1.
    Reports the maximum attained ratio 4|W|/zero(n+2) and where it occurs;
    violations are collected, not raised.
    """
    if n_lo < 3:
        raise ValueError(f"quarter-bound check needs n_lo >= 3, got {n_lo}")
    if n_hi < n_lo:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    best = Fraction(0)
    best_at = None
    per_n = []
    failures = []
    for m in range(n_lo, n_hi + 1):
        bound = F3_zero_value(m + 2)
        masks = np.arange(1 << m)
        keep = ((masks >> 1) & 1).astype(bool) if restrict_c1 else masks != 0
        n_max_abs = 0
        for fam, anf in subfunction_family(m).items():
            vals = walsh_spectrum(anf_to_table(anf, max_vars=max_vars)).values
            abs_kept = np.abs(vals[keep])
            fam_max = int(abs_kept.max())
            at_mask = int(masks[keep][int(np.argmax(abs_kept))])
            n_max_abs = max(n_max_abs, fam_max)
            ratio = Fraction(4 * fam_max, bound)
            if ratio > best:
                best = ratio
                best_at = (m, fam, at_mask)
            if 4 * fam_max >= bound:
                failures.append((m, fam, at_mask, fam_max, bound))
        per_n.append((m, n_max_abs, bound))
    return QuarterBoundReport(
        n_lo, n_hi, restrict_c1, not failures, best, best_at, tuple(per_n), tuple(failures)
    )
