"""Arithmetic in GF(2^n) with log/antilog table acceleration.

Field elements are plain ints in [0, 2^n): bit i is the coefficient of
x^i in the polynomial-basis representation, so addition is xor and the
zero and one elements are the ints 0 and 1.  A Field instance fixes the
extension degree and an irreducible modulus and precomputes discrete
log / antilog tables over a primitive element; multiplication, powering
and Frobenius maps are then exponent arithmetic mod 2^n-1 plus table
lookups.

Moduli are encoded like elements but with the degree-n bit set:
x^4 + x + 1 is 0b10011 = 0x13.
"""

from __future__ import annotations

import numpy as np

MIN_DEGREE = 2
MAX_DEGREE = 24


def add(a: int, b: int) -> int:
    """Characteristic-2 addition (bitwise xor)."""
    return a ^ b


def poly_degree(p: int) -> int:
    """Degree of a polynomial over F_2 packed into an int (-1 for 0)."""
    return p.bit_length() - 1


def poly_mulmod(a: int, b: int, modulus: int, n: int) -> int:
    """Carry-less product of a and b reduced mod a degree-n modulus.

    Both inputs must already be reduced (degree < n).
    """
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= modulus
    return r


def _poly_mod(a: int, b: int) -> int:
    db = poly_degree(b)
    while a and poly_degree(a) >= db:
        a ^= b << (poly_degree(a) - db)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def is_irreducible(modulus: int, n: int | None = None) -> bool:
    """Rabin irreducibility test for a degree-n polynomial over F_2.

    Requires x^(2^n) = x mod f together with gcd(x^(2^(n/p)) + x, f) = 1
    for every prime p dividing n.  The gcd form matters: for composite n
    the weaker "x^(2^(n/p)) != x" check accepts some products of small
    irreducibles, e.g. (x+1)(x^2+x+1)(x^3+x+1).
    """
    if n is None:
        n = poly_degree(modulus)
    if n < 1 or poly_degree(modulus) != n:
        return False
    if modulus & 1 == 0:
        return False  # divisible by x
    x = 0b10
    t = x
    for _ in range(n):
        t = poly_mulmod(t, t, modulus, n)
    if t != x:
        return False
    for p in _prime_factors(n):
        t = x
        for _ in range(n // p):
            t = poly_mulmod(t, t, modulus, n)
        if _poly_gcd(t ^ x, modulus) != 1:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    """The degree-n irreducible whose bit-vector is smallest as an int."""
    for cand in range((1 << n) + 1, 1 << (n + 1), 2):
        if is_irreducible(cand, n):
            return cand
    raise AssertionError(f"no irreducible of degree {n}")  # unreachable


class Field:
    """GF(2^n) under a fixed irreducible modulus.

    Immutable after construction: all operations are pure, and instances
    may be shared freely across threads.
    """

    def __init__(self, n: int, modulus: int | None = None):
        if not MIN_DEGREE <= n <= MAX_DEGREE:
            raise ValueError(
                f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {n}"
            )
        if modulus is None:
            modulus = smallest_irreducible(n)
        else:
            if poly_degree(modulus) != n:
                raise ValueError(
                    f"modulus 0x{modulus:x} has degree {poly_degree(modulus)},"
                    f" expected {n}"
                )
            if modulus & 1 == 0:
                raise ValueError(
                    f"modulus 0x{modulus:x} has constant term 0 (x divides it)"
                )
            if not is_irreducible(modulus, n):
                raise ValueError(f"modulus 0x{modulus:x} is reducible")
        self.n = n
        self.modulus = modulus
        self.order = 1 << n
        self.group_order = self.order - 1
        self.generator = self._find_generator()
        self.exp_table, self.log_table = self._build_tables()

    def _pow_raw(self, a: int, e: int) -> int:
        # square-and-multiply without tables; used only during setup
        r = 1
        while e:
            if e & 1:
                r = poly_mulmod(r, a, self.modulus, self.n)
            a = poly_mulmod(a, a, self.modulus, self.n)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        primes = _prime_factors(self.group_order)
        for g in range(2, self.order):
            if all(self._pow_raw(g, self.group_order // p) != 1 for p in primes):
                return g
        raise AssertionError("no primitive element found")  # unreachable

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        exp = np.empty(self.group_order, dtype=np.uint32)
        log = np.zeros(self.order, dtype=np.uint32)  # log[0] is never read
        x = 1
        for i in range(self.group_order):
            exp[i] = x
            log[x] = i
            x = poly_mulmod(x, self.generator, self.modulus, self.n)
        if x != 1:
            raise AssertionError("generator order mismatch")
        exp.setflags(write=False)
        log.setflags(write=False)
        return exp, log

    def _check_element(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF(2^{self.n})")

    def mul(self, a: int, b: int) -> int:
        """Product in GF(2^n) via the log/antilog tables."""
        self._check_element(a)
        self._check_element(b)
        if a == 0 or b == 0:
            return 0
        i = int(self.log_table[a]) + int(self.log_table[b])
        return int(self.exp_table[i % self.group_order])

    def pow(self, a: int, d: int) -> int:
        """a^d with exponent arithmetic mod 2^n-1; 0^0 is rejected."""
        self._check_element(a)
        if d < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            if d == 0:
                raise ValueError("0^0 is undefined")
            return 0
        i = int(self.log_table[a]) * (d % self.group_order)
        return int(self.exp_table[i % self.group_order])

    def frobenius(self, a: int, k: int) -> int:
        """k-fold squaring a^(2^k); the identity when k = n."""
        self._check_element(a)
        if k < 0:
            raise ValueError("k must be non-negative")
        if a == 0:
            return 0
        i = int(self.log_table[a]) * pow(2, k, self.group_order)
        return int(self.exp_table[i % self.group_order])

    @property
    def modulus_hex(self) -> str:
        return f"0x{self.modulus:x}"

    def __repr__(self) -> str:
        return f"Field(n={self.n}, modulus={self.modulus_hex})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and other.n == self.n
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))
