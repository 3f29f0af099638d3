"""Truth-table Boolean functions, ANF conversion, and variable permutations.

Index convention throughout the package: input x = (x_0, ..., x_{n-1}) is
encoded as the integer sum x_i * 2^i, so variable x_0 is the least
significant bit of the table index.  Masks use the same encoding.
"""

import numpy as np

DEFAULT_MAX_VARS = 26


class TableSizeError(ValueError):
    """Requested explicit table exceeds the variable cap."""


class DimensionError(ValueError):
    """Operands have different variable counts."""


def _check_cap(n: int, max_vars: int) -> None:
    if not 1 <= n:
        raise ValueError(f"need n >= 1, got {n}")
    if n > max_vars:
        raise TableSizeError(f"n={n} exceeds explicit-table cap {max_vars}")


class BooleanFunction:
    """A Boolean function of n variables stored as a 0/1 table of length 2^n."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        arr = np.asarray(table, dtype=np.uint8)
        if arr.ndim != 1 or arr.size != 1 << n:
            raise ValueError(f"table must have length 2^{n} = {1 << n}, got shape {arr.shape}")
        if arr.max(initial=0) > 1:
            raise ValueError("table entries must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.table = arr

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"BooleanFunction(n={self.n}, weight={int(self.table.sum())})"

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def complement(self) -> "BooleanFunction":
        return BooleanFunction(self.n, self.table ^ 1)

    def to_hex(self) -> str:
        """Truth table as hex, nibble j holding table bits 4j..4j+3."""
        packed = np.packbits(self.table, bitorder="little").tobytes()
        chars = []
        for byte in packed:
            chars.append(format(byte & 0xF, "x"))
            chars.append(format(byte >> 4, "x"))
        return "".join(chars[: max(1, ((1 << self.n) + 3) >> 2)])

    @classmethod
    def from_hex(cls, n: int, hex_string: str, max_vars: int = DEFAULT_MAX_VARS) -> "BooleanFunction":
        _check_cap(n, max_vars)
        size = 1 << n
        want = max(1, (size + 3) >> 2)
        if len(hex_string) != want:
            raise ValueError(f"table_hex for n={n} must have {want} nibbles, got {len(hex_string)}")
        nibbles = [int(ch, 16) for ch in hex_string]
        bits = np.zeros(4 * len(nibbles), dtype=np.uint8)
        for j, v in enumerate(nibbles):
            for t in range(4):
                bits[4 * j + t] = (v >> t) & 1
        if bits[size:].any():
            raise ValueError("table_hex has set bits beyond 2^n")
        return cls(n, bits[:size])


class AnfForm:
    """Algebraic normal form: an XOR of monomials, each a set of variable indices.

    The empty monomial is the constant-1 term.  An empty monomial *set* is the
    zero function.
    """

    __slots__ = ("n", "monomials")

    def __init__(self, n: int, monomials):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        canon = frozenset(frozenset(m) for m in monomials)
        for m in canon:
            for i in m:
                if not 0 <= i < n:
                    raise ValueError(f"variable index {i} out of range for n={n}")
        self.n = n
        self.monomials = canon

    @property
    def degree(self):
        """Algebraic degree; None for the zero function."""
        if not self.monomials:
            return None
        return max(len(m) for m in self.monomials)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnfForm):
            return NotImplemented
        return self.n == other.n and self.monomials == other.monomials

    def __hash__(self):
        return hash((self.n, self.monomials))

    def __repr__(self) -> str:
        return f"AnfForm(n={self.n}, monomials={sorted(sorted(m) for m in self.monomials)})"


class LinearMask:
    """A length-n mask c, encoding the linear function x -> parity(c & x)."""

    __slots__ = ("n", "value")

    def __init__(self, n: int, value: int):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if not 0 <= value < 1 << n:
            raise ValueError(f"mask {value} out of range for n={n}")
        self.n = n
        self.value = value

    def bit(self, i: int) -> int:
        return (self.value >> i) & 1

    def dot(self, x: int) -> int:
        return (self.value & x).bit_count() & 1

    def rotated(self, k: int) -> "LinearMask":
        return LinearMask(self.n, rotate_bits(self.value, self.n, k))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMask):
            return NotImplemented
        return self.n == other.n and self.value == other.value

    def __hash__(self):
        return hash((self.n, self.value))

    def __repr__(self) -> str:
        return f"LinearMask(n={self.n}, value={self.value})"


def mask_value(c, n: int) -> int:
    """Coerce an int or LinearMask to a validated mask integer for size n."""
    if isinstance(c, LinearMask):
        if c.n != n:
            raise DimensionError(f"mask has n={c.n}, expected {n}")
        return c.value
    v = int(c)
    if not 0 <= v < 1 << n:
        raise ValueError(f"mask {v} out of range for n={n}")
    return v


def rotate_bits(value: int, n: int, k: int) -> int:
    """Cyclic rotation of an n-bit mask: bit i of the result is bit (i-k) mod n."""
    k %= n
    if k == 0:
        return value
    full = (1 << n) - 1
    return ((value << k) | (value >> (n - k))) & full


def _xor_fold_inplace(bits: np.ndarray) -> None:
    # Binary Moebius (subset-XOR) butterfly; an involution.
    h = 1
    while h < bits.size:
        view = bits.reshape(-1, 2, h)
        view[:, 1, :] ^= view[:, 0, :]
        h <<= 1


def anf_to_table(anf: AnfForm, max_vars: int = DEFAULT_MAX_VARS) -> BooleanFunction:
    """Realize an ANF as a truth table via the subset-XOR transform."""
    _check_cap(anf.n, max_vars)
    bits = np.zeros(1 << anf.n, dtype=np.uint8)
    for m in anf.monomials:
        bits[sum(1 << i for i in m)] = 1
    _xor_fold_inplace(bits)
    return BooleanFunction(anf.n, bits)


def table_to_anf(f: BooleanFunction) -> AnfForm:
    """Inverse of anf_to_table (the transform is an involution)."""
    bits = f.table.copy()
    _xor_fold_inplace(bits)
    idx = np.flatnonzero(bits)
    monomials = [frozenset(i for i in range(f.n) if (m >> i) & 1) for m in map(int, idx)]
    return AnfForm(f.n, monomials)


def weight(f: BooleanFunction) -> int:
    """Number of inputs on which f evaluates to 1."""
    return int(f.table.sum(dtype=np.int64))


def distance(f: BooleanFunction, g: BooleanFunction) -> int:
    """Hamming distance between two truth tables."""
    if f.n != g.n:
        raise DimensionError(f"cannot compare n={f.n} with n={g.n}")
    return int((f.table ^ g.table).sum(dtype=np.int64))


def _rotated_index(n: int, k: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx << k) | (idx >> (n - k))) & ((1 << n) - 1)


def rotate_variables(f: BooleanFunction, k: int) -> BooleanFunction:
    """Cyclically shift the input variables by k positions."""
    k %= f.n
    if k == 0:
        return f
    return BooleanFunction(f.n, f.table[_rotated_index(f.n, k)])


def is_rotation_symmetric(f: BooleanFunction) -> bool:
    """True iff f is invariant under cyclic rotation of its inputs."""
    if f.n == 1:
        return True
    return bool(np.array_equal(f.table, f.table[_rotated_index(f.n, 1)]))


def reverse_variables(f: BooleanFunction) -> BooleanFunction:
    """Reverse the variable order: g(x_0,...,x_{n-1}) = f(x_{n-1},...,x_0)."""
    idx = np.arange(1 << f.n, dtype=np.int64)
    rev = np.zeros_like(idx)
    for b in range(f.n):
        rev |= ((idx >> b) & 1) << (f.n - 1 - b)
    return BooleanFunction(f.n, f.table[rev])


def function_to_dict(obj) -> dict:
    """Serialize a BooleanFunction or AnfForm to the shared file format."""
    if isinstance(obj, BooleanFunction):
        return {"n": obj.n, "table_hex": obj.to_hex()}
    if isinstance(obj, AnfForm):
        mono = sorted(sorted(m) for m in obj.monomials)
        mono.sort(key=lambda m: sum(1 << i for i in m))
        return {"n": obj.n, "anf": mono}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def function_from_dict(data: dict, max_vars: int = DEFAULT_MAX_VARS) -> BooleanFunction:
    """Load a function from the shared file format (exactly one of anf/table_hex)."""
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError("function file must be an object with field 'n'")
    n = data["n"]
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    has_anf = "anf" in data
    has_hex = "table_hex" in data
    if has_anf == has_hex:
        raise ValueError("function file needs exactly one of 'anf' or 'table_hex'")
    _check_cap(n, max_vars)
    if has_hex:
        return BooleanFunction.from_hex(n, data["table_hex"], max_vars=max_vars)
    return anf_to_table(AnfForm(n, data["anf"]), max_vars=max_vars)
