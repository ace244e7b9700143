"""Arithmetic with polynomials over GF(2), packed into Python integers.

The polynomial q_{L-1} x^{L-1} + ... + q_1 x + q_0 is stored as the
integer q_{L-1} 2^{L-1} + ... + q_1 2 + q_0, i.e. bit i holds the
coefficient of x^i and the constant term sits in the lowest bit.
Addition is XOR.  Two quotient rings matter here: GF(2)[x]/p(x) for an
irreducible p of degree L (a field), and GF(2)[x]/(x^L+1), where
multiplication by x is a cyclic rotation of the L-bit word.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_WIDTH = 63

#: degree of the zero polynomial; compares below every integer degree
NEG_INF = float("-inf")


def degree(a):
    """Degree of polynomial a, or NEG_INF for the zero polynomial."""
    if a == 0:
        return NEG_INF
    return a.bit_length() - 1


def mul(a, b):
    """Carry-less product of polynomials a and b (no reduction)."""
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def mod(a, p):
    """Remainder of polynomial a modulo nonzero polynomial p."""
    if p == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dp = p.bit_length() - 1
    while a.bit_length() - 1 >= dp:
        a ^= p << (a.bit_length() - 1 - dp)
    return a


@dataclass(frozen=True)
class Modulus:
    """A degree-L modulus polynomial, either irreducible or x^L+1."""

    poly: int
    L: int
    kind: str  # "irreducible" or "cyclic"

    def __post_init__(self):
        if not 1 <= self.L <= MAX_WIDTH:
            raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {self.L}")
        if degree(self.poly) != self.L:
            raise ValueError(
                f"modulus degree {degree(self.poly)} != declared width {self.L}"
            )
        if self.kind == "irreducible":
            if not is_irreducible(self.poly):
                raise ValueError(f"{monomial_str(self.poly)} is not irreducible")
        elif self.kind == "cyclic":
            if self.poly != (1 << self.L) | 1:
                raise ValueError("cyclic modulus must be x^L+1")
        else:
            raise ValueError(f"unknown modulus kind {self.kind!r}")

    @classmethod
    def irreducible(cls, poly):
        return cls(poly, poly.bit_length() - 1, "irreducible")

    @classmethod
    def cyclic(cls, L):
        return cls((1 << L) | 1, L, "cyclic")


def shift_mod(a, p: Modulus):
    """x*a mod p(x), for a of degree < L.

    One left shift; if the shifted value has degree L, XOR with p(x)
    clears the top bit.
    """
    if a >> p.L:
        raise ValueError("operand degree must be below the modulus degree")
    a <<= 1
    if a >> p.L:
        a ^= p.poly
    return a


def mul_mod(a, b, p: Modulus):
    """a*b in GF(2)[x]/p(x), for operands of degree < L."""
    if a >> p.L or b >> p.L:
        raise ValueError("operand degree must be below the modulus degree")
    c = 0
    while b:
        if b & 1:
            c ^= a
        b >>= 1
        if b:
            a = shift_mod(a, p)
    return c


def rotate_left(a, k, L):
    """x^k * a mod x^L+1: cyclic left rotation of the L-bit word by k."""
    if a >> L:
        raise ValueError("operand does not fit in L bits")
    if k < 0:
        raise ValueError("rotation count must be nonnegative")
    k %= L
    mask = (1 << L) - 1
    return ((a << k) | (a >> (L - k))) & mask


def _powx_pow2(e, p):
    """x^(2^e) mod p, by repeated squaring of x."""
    r = mod(2, p)
    for _ in range(e):
        r = mod(mul(r, r), p)
    return r


def _gcd(a, b):
    while b:
        a, b = b, mod(a, b)
    return a


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p):
    """Exact irreducibility test (Rabin's criterion) for degree >= 1.

    p of degree d is irreducible iff x^(2^d) == x mod p and, for every
    prime q dividing d, gcd(x^(2^(d/q)) - x, p) is constant.
    """
    d = degree(p)
    if d is NEG_INF or d < 1:
        raise ValueError("irreducibility is defined for degree >= 1 only")
    if d == 1:
        return True
    if (p & 1) == 0:  # divisible by x
        return False
    if _powx_pow2(d, p) != mod(2, p):
        return False
    for q in _prime_factors(d):
        h = _powx_pow2(d // q, p) ^ mod(2, p)
        if degree(_gcd(p, h)) != 0:
            return False
    return True


def to_hex(a):
    """Hex form of the bit encoding, e.g. 0x80027."""
    return hex(a)


def from_hex(s):
    return int(s, 16)


def monomial_str(a):
    """Human-readable monomial form, e.g. 'x^19+x^5+x^2+x+1'."""
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append("x")
            else:
                terms.append(f"x^{i}")
    return "+".join(terms)


def from_monomial_str(s):
    """Parse 'x^19+x^5+1' style strings back to the bit encoding."""
    s = s.replace(" ", "")
    if s == "0":
        return 0
    a = 0
    for term in s.split("+"):
        if term == "1":
            a ^= 1
        elif term == "x":
            a ^= 2
        elif term.startswith("x^"):
            a ^= 1 << int(term[2:])
        else:
            raise ValueError(f"bad monomial {term!r}")
    return a
