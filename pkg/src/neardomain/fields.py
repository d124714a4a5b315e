"""Small prime-power fields GF(p^k) with table-driven arithmetic.

An element of GF(p^k) is encoded as the integer sum(c_i * p**i) of the
coefficients of its polynomial representative.  With this encoding the
field zero is 0 and the field one is 1, matching the carrier convention
of :mod:`neardomain.core`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import GroupTable

# Irreducible moduli, low degree coefficient first, leading 1 included.
MODULI = {
    (2, 2): (1, 1, 1),            # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),         # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),      # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),   # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
    (3, 2): (1, 0, 1),            # x^2 + 1
    (3, 3): (1, 2, 0, 1),         # x^3 + 2x + 1
    (5, 2): (2, 0, 1),            # x^2 + 2
    (7, 2): (1, 0, 1),            # x^2 + 1
}

MAX_ORDER = 64


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^k; raise ValueError if q is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not is_prime(p):
                break
            return p, k
    raise ValueError(f"{q} is not a prime power")


def _digits(a, p, k):
    out = []
    for _ in range(k):
        a, d = divmod(a, p)
        out.append(d)
    return out


def _encode(coeffs, p):
    return sum(c * p ** i for i, c in enumerate(coeffs))


@dataclass(frozen=True)
class Field:
    p: int
    k: int
    modulus: tuple
    add_table: tuple
    mul_table: tuple

    @property
    def q(self) -> int:
        return self.p ** self.k

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.add_table[a].index(0)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul_table[a].index(1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def from_int(self, m: int) -> int:
        """Image of the integer m in the prime subfield."""
        return m % self.p

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> Field:
    """Arithmetic context for GF(p^k), p^k <= 64."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    q = p ** k
    if q > MAX_ORDER:
        raise ValueError(f"GF({q}) exceeds the supported order {MAX_ORDER}")
    if k == 1:
        modulus = (0, 1)
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        return Field(p, 1, modulus, add, mul)
    if (p, k) not in MODULI:
        raise ValueError(f"no irreducible modulus configured for GF({p}^{k})")
    modulus = MODULI[p, k]
    digits = [_digits(a, p, k) for a in range(q)]
    add = tuple(
        tuple(_encode([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
        for a in range(q)
    )
    mul = tuple(
        tuple(_encode(poly_mulmod(digits[a], digits[b], modulus, p), p) for b in range(q))
        for a in range(q)
    )
    return Field(p, k, modulus, add, mul)


def field_of_order(q: int) -> Field:
    return field_make(*prime_power(q))


def poly_mulmod(a, b, modulus, p):
    """Product of coefficient lists a*b reduced mod the monic modulus over GF(p)."""
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i, m in enumerate(modulus):
                prod[d - k + i] = (prod[d - k + i] - c * m) % p
    return (prod + [0] * k)[:k]


def mul_group_of_field(F: Field) -> GroupTable:
    """The multiplicative group GF(q)* as a table on B1 (field encoding = carrier index)."""
    return GroupTable.from_function(F.q, F.mul, F.inv)
