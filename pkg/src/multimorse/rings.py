"""Exact coefficient arithmetic for chain complexes.

Supported rings: Z/p for a prime p (z2 is the default everywhere), the
rationals, and the integers. All arithmetic is exact; floats never enter
coefficient math. Values are plain hashable Python objects (int for Z/p
and Z, Fraction for Q); the ring object supplies the operations.
"""

from __future__ import annotations

from fractions import Fraction


class RingError(ValueError):
    """Raised for impossible coefficient operations (inexact division,
    inverting a non-unit) and for ring mismatches between objects."""


class CoefficientRing:
    """Common interface of the supported coefficient rings."""

    name = "?"
    is_field = False
    zero: object = 0
    one: object = 1

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        """Multiplicative inverse of a unit."""
        raise NotImplementedError

    def div(self, a, b):
        """Exact quotient a / b; raises RingError when it does not exist."""
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"<ring {self.name}>"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(CoefficientRing):
    """Z/p for a prime p. Values are ints normalized to [0, p)."""

    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise RingError(f"ring: modulus {p} is not prime")
        self.p = p
        self.name = f"z{p}"

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise RingError(f"ring: 0 has no inverse in {self.name}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def from_int(self, n: int):
        return n % self.p

    def parse(self, text: str):
        return int(text) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


class Rationals(CoefficientRing):
    """Q with Fraction values; parse/format use the p/q form."""

    name = "q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return a != 0

    def inv(self, a):
        if a == 0:
            raise RingError("ring: 0 has no inverse in q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise RingError("ring: division by zero in q")
        return Fraction(a) / b

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        return Fraction(text)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")


class Integers(CoefficientRing):
    """Z; only +1 and -1 are units, division must be exact."""

    name = "z"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise RingError(f"ring: {a} is not a unit in z")
        return a

    def div(self, a, b):
        if b == 0 or a % b != 0:
            raise RingError(f"ring: {a}/{b} is not exact in z")
        return a // b

    def from_int(self, n: int):
        return n

    def parse(self, text: str):
        return int(text)

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("Integers")


GF2 = PrimeField(2)
RATIONALS = Rationals()
INTEGERS = Integers()

_NAMED = {"q": RATIONALS, "z": INTEGERS, "z2": GF2}


def get_ring(name: str) -> CoefficientRing:
    """Look up a ring by its command-line name: z2, z3, ... zp, q, or z."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]
    if key.startswith("z") and key[1:].isdigit():
        return PrimeField(int(key[1:]))
    raise RingError(f"ring: unknown coefficient ring {name!r}")
