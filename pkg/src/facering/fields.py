"""Exact scalar fields: the rationals, prime fields and binary extension fields.

Elements are plain Python objects: ``Fraction`` for Q, ``int`` in ``[0, p)``
for F_p, and ``int`` bit-vectors of polynomials over F_2 for GF(2^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

# Conway-style low-weight irreducible polynomials, bit i = coefficient of x^i
_BINARY_MODULI = {
    8: 0x11B,
    12: 0x1009,
    16: 0x1002B,
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A field: ``characteristic == 0`` is Q, otherwise GF(characteristic ** degree).

    Extension fields are only supported in characteristic 2; they stand in for
    an infinite field of characteristic 2 when generic linear forms are needed.
    """

    characteristic: int = 0
    degree: int = 1

    def __post_init__(self):
        c, k = self.characteristic, self.degree
        if c == 0:
            if k != 1:
                raise ValueError("Q has no extensions here")
        elif not is_prime(c):
            raise ValueError(f"{c} is not prime")
        elif k != 1:
            if c != 2 or k not in _BINARY_MODULI:
                raise ValueError(f"unsupported extension GF({c}^{k})")
        elif c >= 2**31:
            raise ValueError("prime must be below 2**31")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return QQ
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        if t.startswith("gf2^"):
            return cls(2, int(t[4:]))
        raise ValueError(f"unknown field {text!r}; use q, fp:<p> or gf2^<k>")

    def __str__(self) -> str:
        if self.characteristic == 0:
            return "q"
        if self.degree == 1:
            return f"fp:{self.characteristic}"
        return f"gf2^{self.degree}"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic > 0 and self.degree == 1

    @property
    def is_binary_extension(self) -> bool:
        return self.degree > 1

    @property
    def order(self) -> int | None:
        return None if self.characteristic == 0 else self.characteristic**self.degree

    @property
    def zero(self) -> Any:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Any:
        return Fraction(1) if self.characteristic == 0 else 1

    def __call__(self, x: Any) -> Any:
        """The image of an integer (or a Fraction) under the canonical map into the field."""
        c = self.characteristic
        if c == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self(x.numerator) if x.denominator == 1 else self.mul(
                self(x.numerator), self.inv(self(x.denominator)))
        return int(x) % c

    def from_bits(self, bits: int) -> int:
        """The GF(2^k) element whose polynomial coefficients are the bits of ``bits``."""
        if not self.is_binary_extension:
            raise ValueError(f"{self} is not a binary extension field")
        if not 0 <= bits < self.order:
            raise ValueError(f"{bits} is not an element of {self}")
        return bits

    # arithmetic used by the generic elimination path

    def add(self, a, b):
        if self.degree > 1:
            return a ^ b
        if self.characteristic == 0:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.degree > 1:
            return a ^ b
        if self.characteristic == 0:
            return a - b
        return (a - b) % self.characteristic

    def neg(self, a):
        if self.degree > 1:
            return a
        if self.characteristic == 0:
            return -a
        return -a % self.characteristic

    def mul(self, a, b):
        if self.degree > 1:
            if not a or not b:
                return 0
            log, exp = self._tables
            return exp[log[a] + log[b]]
        if self.characteristic == 0:
            return a * b
        return a * b % self.characteristic

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.degree > 1:
            log, exp = self._tables
            return exp[(self.order - 1) - log[a]]
        if self.characteristic == 0:
            return 1 / a
        return pow(a, -1, self.characteristic)

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        """Log/antilog tables for GF(2^k); the generator is the first primitive element found."""
        k = self.degree
        modulus = _BINARY_MODULI[k]
        size = 1 << k
        for g in range(2, size):
            exp = [0] * (2 * size)
            log = [0] * size
            x = 1
            ok = True
            for e in range(size - 1):
                if e and x == 1:
                    ok = False
                    break
                exp[e] = x
                log[x] = e
                x = _clmul_mod(x, g, modulus, k)
            if ok and x == 1:
                for e in range(size - 1, 2 * size):
                    exp[e] = exp[e - (size - 1)]
                return log, exp
        raise RuntimeError(f"no primitive element found for {self}")

    def binary_modulus(self) -> int:
        return _BINARY_MODULI[self.degree]

    def format(self, x) -> str:
        """Exact text rendering used in JSON reports."""
        if self.characteristic == 0:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x))


def _clmul_mod(a: int, b: int, modulus: int, k: int) -> int:
    """Carry-less product of two GF(2)[x] bit-vectors reduced modulo ``modulus``."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> k:
            a ^= modulus
    return r


QQ = FieldSpec(0)
GF32003 = FieldSpec(32003)
GF2 = FieldSpec(2)
GF2_16 = FieldSpec(2, 16)


def generic_extension(field: FieldSpec) -> FieldSpec:
    """A field of the same characteristic large enough to host generic forms.

    Q, odd prime fields and extensions are returned unchanged; F_2 is
    replaced by GF(2^16).  Dimensions of cohomology groups do not change under field
    extension, so results transfer back.
    """
    if field.characteristic == 0 or field.is_binary_extension:
        return field
    if field.characteristic == 2:
        return GF2_16
    return field
