"""Exact scalar arithmetic over the rationals or a prime field F_p.

Every value in the library is built from `Scalar`s.  A Scalar belongs to a
`Field` (either the rationals, backed by `fractions.Fraction`, or F_p with a
validated prime modulus) and all arithmetic is exact; there is no floating
point anywhere in this package.  Mixing scalars from different fields is an
error, never a silent coercion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class FieldMismatchError(ValueError):
    """Arithmetic between scalars of different fields was attempted."""


class NotPrimeError(ValueError):
    """The modulus passed to PrimeField is not a prime number."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Field:
    """Base class for the two coefficient fields."""

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        raise NotImplementedError

    def from_fraction(self, numerator: int, denominator: int) -> "Scalar":
        raise NotImplementedError


class RationalField(Field):
    """The field of rational numbers with arbitrary-precision integers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def from_int(self, n: int) -> "Scalar":
        return Scalar(self, Fraction(n))

    def from_fraction(self, numerator: int, denominator: int) -> "Scalar":
        return Scalar(self, Fraction(numerator, denominator))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """The prime field F_p; the modulus is checked for primality."""

    __slots__ = ("p",)
    _cache: dict[int, "PrimeField"] = {}

    def __new__(cls, p: int):
        inst = cls._cache.get(p)
        if inst is None:
            if not _is_prime(p):
                raise NotPrimeError(f"{p} is not prime")
            inst = super().__new__(cls)
            inst.p = p
            cls._cache[p] = inst
        return inst

    def from_int(self, n: int) -> "Scalar":
        return Scalar(self, n % self.p)

    def from_fraction(self, numerator: int, denominator: int) -> "Scalar":
        if denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator {denominator} is 0 mod {self.p}")
        inv = pow(denominator % self.p, -1, self.p)
        return Scalar(self, (numerator * inv) % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


class Scalar:
    """An exact field element: a Fraction over QQ, a residue in [0, p) over F_p.

    Scalars are immutable; the usual operators do exact field arithmetic and
    raise FieldMismatchError when the operands live in different fields.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Union[Fraction, int]):
        self.field = field
        self.value = value

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"cannot mix {self.field} and {other.field}")

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value + other.value) % self.field.p)
        return Scalar(self.field, self.value + other.value)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value - other.value) % self.field.p)
        return Scalar(self.field, self.value - other.value)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value * other.value) % self.field.p)
        return Scalar(self.field, self.value * other.value)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by field zero")
        if isinstance(self.field, PrimeField):
            inv = pow(other.value, -1, self.field.p)
            return Scalar(self.field, (self.value * inv) % self.field.p)
        return Scalar(self.field, self.value / other.value)

    def __neg__(self) -> "Scalar":
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (-self.value) % self.field.p)
        return Scalar(self.field, -self.value)

    def times_int(self, n: int) -> "Scalar":
        """Multiply by an integer; over F_p the integer reduces mod p."""
        return self * self.field.from_int(n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field!r}, {self})"

    def __str__(self):
        if isinstance(self.field, PrimeField):
            return f"{self.value} mod {self.field.p}"
        frac: Fraction = self.value
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"


def scalar_arith(a: Scalar, b: Scalar, kind: str) -> Scalar:
    """Dispatch form of the four field operations: kind in {add, sub, mul, div}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")
