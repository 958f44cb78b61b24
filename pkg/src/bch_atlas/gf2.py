"""Binary polynomials, GF(2^(2m)) arithmetic and generator polynomials.

Polynomials over GF(2) are packed into Python ints, bit i holding the
coefficient of X^i.  Field elements of GF(2^d) are ints below 2^d in the
polynomial basis of the chosen modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .cosets import CodeLength, coset_of, defining_set
from .errors import CapacityError, DegenerateCodeError, DomainError

MAX_FIELD_DEGREE = 32


@dataclass(frozen=True)
class BinaryPolynomial:
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise DomainError("negative bit pattern")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "BinaryPolynomial":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_exponents(cls, *exps: int) -> "BinaryPolynomial":
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.degree + 1))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(clmul(self.bits, other.bits))

    def __divmod__(self, other: "BinaryPolynomial"):
        q, r = poly_divmod(self.bits, other.bits)
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __mod__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(poly_mod(self.bits, other.bits))

    def __floordiv__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(poly_divmod(self.bits, other.bits)[0])

    def reciprocal(self) -> "BinaryPolynomial":
        """X^deg * p(1/X)."""
        if self.bits == 0:
            return self
        return BinaryPolynomial(int(format(self.bits, "b")[::-1], 2))

    def serialize(self) -> str:
        """``deg=D;hex=H`` with H the little-endian bytes of the coefficient bits."""
        nbytes = max(1, (self.degree + 8) // 8)
        return f"deg={self.degree};hex={self.bits.to_bytes(nbytes, 'little').hex()}"

    @classmethod
    def parse(cls, text: str) -> "BinaryPolynomial":
        try:
            deg_part, hex_part = text.strip().split(";")
            deg = int(deg_part.removeprefix("deg="))
            bits = int.from_bytes(bytes.fromhex(hex_part.removeprefix("hex=")), "little")
        except ValueError as exc:
            raise DomainError(f"malformed polynomial string {text!r}") from exc
        poly = cls(bits)
        if poly.degree != deg:
            raise DomainError(f"degree field {deg} disagrees with coefficients (degree {poly.degree})")
        return poly

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "X" if i == 1 else f"X^{i}")
        return " + ".join(terms)


def clmul(a: int, b: int) -> int:
    """Carry-less product of two packed binary polynomials."""
    if a.bit_count() < b.bit_count():
        a, b = b, a
    result = 0
    i = 0
    while b:
        if b & 1:
            result ^= a << i
        b >>= 1
        i += 1
    return result


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod(a: int, b: int, mod: int) -> int:
    return poly_mod(clmul(a, b), mod)


def poly_powmod(base: int, exp: int, mod: int) -> int:
    result = 1
    base = poly_mod(base, mod)
    while exp:
        if exp & 1:
            result = poly_mulmod(result, base, mod)
        base = poly_mulmod(base, base, mod)
        exp >>= 1
    return result


def is_irreducible(p: BinaryPolynomial) -> bool:
    """Ben-Or test over GF(2)."""
    f = p.bits
    d = p.degree
    if d < 1:
        return False
    x_pow = 2  # X
    for _ in range(d // 2):
        x_pow = poly_mulmod(x_pow, x_pow, f)
        if poly_gcd(f, x_pow ^ 2) != 1:
            return False
    return True


def prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def is_primitive(p: BinaryPolynomial) -> bool:
    """X has order 2^d - 1 modulo p (which forces p irreducible)."""
    d = p.degree
    if d < 1 or not p.bits & 1:
        return False
    order = (1 << d) - 1
    f = p.bits
    if poly_powmod(2, order, f) != 1:
        return False
    return all(poly_powmod(2, order // q, f) != 1 for q in prime_factors(order))


@lru_cache(maxsize=None)
def smallest_primitive_polynomial(d: int) -> BinaryPolynomial:
    """Primitive polynomial of degree d with the smallest packed value."""
    for bits in range((1 << d) | 1, 1 << (d + 1), 2):
        p = BinaryPolynomial(bits)
        if is_primitive(p):
            return p
    raise AssertionError(f"no primitive polynomial of degree {d}")


class GF2m:
    """Arithmetic in GF(2)[X]/(modulus)."""

    def __init__(self, modulus: BinaryPolynomial):
        self.modulus = modulus
        self.degree = modulus.degree
        self._mask = (1 << self.degree) - 1
        self._low = modulus.bits & self._mask

    def mul(self, a: int, b: int) -> int:
        result = 0
        top = 1 << self.degree
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= top | self._low
        return result

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result


@dataclass(frozen=True)
class FieldContext:
    length: CodeLength
    extension_degree: int
    modulus_polynomial: BinaryPolynomial
    generator_order: int
    unity_root: int
    root_exponent: int

    @property
    def field(self) -> GF2m:
        return _arith(self.modulus_polynomial)


@lru_cache(maxsize=None)
def _arith(modulus: BinaryPolynomial) -> GF2m:
    return GF2m(modulus)


def element_order(F: GF2m, a: int, group_order: int) -> int:
    order = group_order
    for q in prime_factors(group_order):
        while order % q == 0 and F.pow(a, order // q) == 1:
            order //= q
    return order


@lru_cache(maxsize=None)
def build_field(L: CodeLength) -> FieldContext:
    """GF(2^(2m)) with the smallest primitive modulus and xi = alpha^((2^(2m)-1)/n)."""
    d = 2 * L.m
    if d > MAX_FIELD_DEGREE:
        raise CapacityError(f"extension degree {d} exceeds the cap {MAX_FIELD_DEGREE}")
    modulus = smallest_primitive_polynomial(d)
    group_order = (1 << d) - 1
    exponent, rem = divmod(group_order, L.n)
    assert rem == 0, "n must divide 2^(2m) - 1"
    F = _arith(modulus)
    xi = F.pow(2, exponent)
    if element_order(F, xi, group_order) != L.n:
        raise AssertionError(f"xi has order {element_order(F, xi, group_order)}, expected {L.n}")
    return FieldContext(L, d, modulus, group_order, xi, exponent)


def minimal_polynomial(F: FieldContext, i: int) -> BinaryPolynomial:
    """Minimal polynomial of xi^i over GF(2)."""
    coset = coset_of(i, F.length)
    field = F.field
    beta = field.pow(F.unity_root, coset.leader)
    # coefficients over GF(2^d), lowest degree first
    coeffs = [1]
    for _ in range(coset.size):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] ^= c
            nxt[j] ^= field.mul(c, beta)
        coeffs = nxt
        beta = field.mul(beta, beta)
    if any(c not in (0, 1) for c in coeffs):
        raise AssertionError(f"minimal polynomial of xi^{i} has coefficients outside GF(2)")
    return BinaryPolynomial.from_coefficients(coeffs)


def generator_polynomial(F: FieldContext, L: CodeLength, delta: int, b: int) -> BinaryPolynomial:
    """Product of the minimal polynomials over the cosets of the defining set."""
    if F.length != L:
        raise DomainError("field was built for a different length")
    T = defining_set(L, delta, b)
    if T.size >= L.n:
        raise DegenerateCodeError(f"defining set covers all {L.n} residues; the code is zero")
    g = 1
    for leader in T.leaders:
        g = clmul(g, minimal_polynomial(F, leader).bits)
    return BinaryPolynomial(g)


def x_n_plus_1(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)


def is_self_reciprocal(p: BinaryPolynomial) -> bool:
    if p.is_zero() or not p.bits & 1:
        raise DomainError("reciprocal needs a nonzero constant term")
    return p.reciprocal() == p


def encode(msg: Sequence[int], g: BinaryPolynomial, n: int) -> np.ndarray:
    """Systematic codeword: parity bits in positions [0, deg g), message above."""
    r = g.degree
    if r < 0:
        raise DomainError("zero generator")
    msg = np.asarray(msg, dtype=np.uint8)
    if msg.ndim != 1 or len(msg) != n - r:
        raise DomainError(f"message must have {n - r} bits, got shape {msg.shape}")
    shifted = BinaryPolynomial.from_coefficients(msg).bits << r
    word = shifted ^ poly_mod(shifted, g.bits)
    return unpack(word, n)


def unpack(bits: int, n: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


def min_weight_exhaustive(g: BinaryPolynomial, n: int, k_cap: int = 20) -> int | None:
    """Minimum nonzero codeword weight by Gray-code enumeration of all 2^k - 1 messages."""
    k = n - g.degree
    if k > k_cap:
        return None
    if k <= 0:
        raise DegenerateCodeError("code has no nonzero codewords")
    basis = [g.bits << i for i in range(k)]
    word = 0
    best = n
    for step in range(1, 1 << k):
        word ^= basis[(step & -step).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
    return best
