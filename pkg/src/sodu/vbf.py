"""Lookup-table functions GF(2^n) -> GF(2^n): discrete derivatives, the
multivariate normal form, and algebraic degree."""

from __future__ import annotations

import re
from typing import IO

import numpy as np

from .gf2n import Field

_HEADER_RE = re.compile(r"#\s*gf2n\s+n=(\d+)\s+modulus=0x([0-9a-fA-F]+)\s*$")


class Vbf:
    """A function on GF(2^n) stored as a full value table.

    lut[x] = f(x), with x and f(x) as integer field elements.  `exponent`
    is set when the table was built as the power map x^d, else None.
    """

    __slots__ = ("field", "lut", "exponent")

    def __init__(self, field: Field, lut, exponent: int | None = None):
        arr = np.ascontiguousarray(lut, dtype=np.uint32)
        if arr.shape != (field.order,):
            raise ValueError(
                f"table must have 2^{field.n} = {field.order} entries,"
                f" got {arr.shape}"
            )
        if int(arr.max(initial=0)) >= field.order:
            raise ValueError("table entry out of field range")
        arr.setflags(write=False)
        self.field = field
        self.lut = arr
        self.exponent = exponent

    @property
    def is_power(self) -> bool:
        return self.exponent is not None

    def __call__(self, x: int) -> int:
        return int(self.lut[x])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Vbf)
            and other.field == self.field
            and bool(np.array_equal(other.lut, self.lut))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.lut.tobytes()))

    def __repr__(self) -> str:
        what = f"x^{self.exponent}" if self.is_power else "generic"
        return f"Vbf({what}, n={self.field.n})"


class Anf:
    """Output-word coefficients of the multivariate normal form, indexed
    by variable-subset bitmask."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        arr = np.ascontiguousarray(coeffs, dtype=np.uint32)
        if arr.shape != (1 << n,):
            raise ValueError("coefficient table has wrong length")
        arr.setflags(write=False)
        self.n = n
        self.coeffs = arr

    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        if nz.size == 0:
            return 0
        return max(int(mask).bit_count() for mask in nz)


def power_function(field: Field, d: int) -> Vbf:
    """Table of x -> x^d with x^d = 0 at x = 0.

    Exponents 0 and 2^n-1 are rejected: those tables are indicator-like
    maps, degenerate for uniformity purposes.  Build a generic Vbf if you
    really need one.
    """
    if not 1 <= d <= field.order - 2:
        raise ValueError(
            f"exponent must be in [1, 2^{field.n}-2], got {d}"
        )
    m = field.group_order
    lut = np.zeros(field.order, dtype=np.uint32)
    lut[field.exp_table] = field.exp_table[
        (np.arange(m, dtype=np.int64) * d) % m
    ]
    return Vbf(field, lut, exponent=d)


def derivative(f: Vbf, a: int) -> Vbf:
    """Direction-a derivative x -> f(x+a) + f(x)."""
    if not 0 < a < f.field.order:
        raise ValueError("direction must be a nonzero field element")
    x = np.arange(f.field.order, dtype=np.intp)
    return Vbf(f.field, f.lut ^ f.lut[x ^ a])


def second_derivative(f: Vbf, a: int, b: int) -> Vbf:
    """Four-point table x -> f(x) + f(x+a) + f(x+b) + f(x+a+b).

    Requires a, b nonzero and distinct; the pair (a, a) differentiates to
    the zero map and is excluded from every uniformity notion here.
    """
    order = f.field.order
    if not (0 < a < order and 0 < b < order):
        raise ValueError("directions must be nonzero field elements")
    if a == b:
        raise ValueError("directions must be distinct")
    x = np.arange(order, dtype=np.intp)
    lut = f.lut ^ f.lut[x ^ a] ^ f.lut[x ^ b] ^ f.lut[x ^ a ^ b]
    return Vbf(f.field, lut)


def _mobius(words: np.ndarray, n: int) -> np.ndarray:
    # xor butterfly over the subset lattice; acting on whole output words
    # transforms every coordinate function at once
    out = words.astype(np.uint32, copy=True)
    for i in range(n):
        step = 1 << i
        v = out.reshape(-1, 2, step)
        v[:, 1, :] ^= v[:, 0, :]
    return out.reshape(-1)


def anf(f: Vbf) -> Anf:
    """Normal-form coefficients of f; the transform is self-inverse."""
    return Anf(f.field.n, _mobius(f.lut, f.field.n))


def from_anf(field: Field, a: Anf) -> Vbf:
    """Value table of the function with the given normal-form coefficients."""
    if a.n != field.n:
        raise ValueError("coefficient table does not match the field degree")
    return Vbf(field, _mobius(a.coeffs, a.n))


def algebraic_degree(f: Vbf) -> int:
    """Largest variable-subset size with a nonzero normal-form coefficient.

    For the power map x^d this equals the binary weight of d.
    """
    return anf(f).degree()


def eval_d2_closed(field: Field, k: int, c: int, x: int) -> int:
    """Closed form of the (1, c) second derivative of x^(2^(2k)+2^k+1).

    With q = 2^k the table is
        x^(q^2) (c^q + c) + x^q (c^(q^2) + c) + x (c^(q^2) + c^q)
        + c^(q^2+q) + c^(q^2+1) + c^(q^2) + c^(q+1) + c^q + c,
    evaluated here with Frobenius maps and table multiplications.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if c in (0, 1):
        raise ValueError("c must lie outside the prime subfield")
    field._check_element(c)
    field._check_element(x)
    frob, mul = field.frobenius, field.mul
    cq = frob(c, k)
    cq2 = frob(c, 2 * k)
    xq = frob(x, k)
    xq2 = frob(x, 2 * k)
    linear = mul(xq2, cq ^ c) ^ mul(xq, cq2 ^ c) ^ mul(x, cq2 ^ cq)
    const = mul(cq2, cq) ^ mul(cq2, c) ^ cq2 ^ mul(cq, c) ^ cq ^ c
    return linear ^ const


def save_vbf(f: Vbf, fp: IO[str] | str) -> None:
    """Write a table as text: a header line, then one hex word per line."""
    if isinstance(fp, str):
        with open(fp, "w") as handle:
            save_vbf(f, handle)
        return
    fp.write(f"# gf2n n={f.field.n} modulus={f.field.modulus_hex}\n")
    for v in f.lut:
        fp.write(f"{int(v):x}\n")


def load_vbf(fp: IO[str] | str) -> Vbf:
    """Read a table written by save_vbf; the round trip is bit-exact."""
    if isinstance(fp, str):
        with open(fp) as handle:
            return load_vbf(handle)
    header = fp.readline()
    m = _HEADER_RE.match(header.strip())
    if not m:
        raise ValueError(f"bad table header: {header!r}")
    n = int(m.group(1))
    field = Field(n, int(m.group(2), 16))
    values = [int(line, 16) for line in fp if line.strip()]
    return Vbf(field, values)
