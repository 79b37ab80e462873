"""Exact modular arithmetic on elements of F_p* and exponents mod p-1.

Values are plain Python integers wrapped in small frozen dataclasses, so
every operation is exact for any modulus below 2**62: Python's native
integers are arbitrary precision, which serves as the double-width
intermediate that keeps products from overflowing.  Everything here is
immutable and pure, hence safe to share across threads.
"""

from dataclasses import dataclass

from .errors import BadInputError, ModulusMismatchError, NotAGroupElementError

MAX_MODULUS = 1 << 62


@dataclass(frozen=True)
class Modulus:
    """An odd modulus p with 3 <= p < 2**62.

    Oddness is enforced here; primality is certified separately (see
    :mod:`artinlog.primes`), so arithmetic can be exercised on composite
    moduli too.
    """

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int):
            raise BadInputError(f"modulus must be an integer, got {type(self.p).__name__}")
        if self.p < 3 or self.p >= MAX_MODULUS:
            raise BadInputError(f"modulus must satisfy 3 <= p < 2**62, got {self.p}")
        if self.p % 2 == 0:
            raise BadInputError(f"modulus must be odd, got {self.p}")

    @property
    def order(self) -> int:
        """Order of the multiplicative group when p is prime."""
        return self.p - 1

    def __int__(self) -> int:
        return self.p


@dataclass(frozen=True)
class Residue:
    """An integer in [0, p-1] tagged with its modulus.

    0 is representable so that reduction results can be expressed, but it
    is rejected by every group operation: the multiplicative group F_p*
    contains only [1, p-1].
    """

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value <= self.modulus.p - 1:
            raise BadInputError(
                f"residue {self.value} outside [0, {self.modulus.p - 1}] for modulus {self.modulus.p}"
            )

    @classmethod
    def reduce(cls, value: int, modulus: Modulus) -> "Residue":
        """Build a residue from an arbitrary integer, reducing mod p."""
        return cls(value % modulus.p, modulus)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Exponent:
    """A discrete logarithm: an integer in [0, order-1], arithmetic mod order.

    For a prime modulus p the order is p-1.
    """

    value: int
    order: int

    def __post_init__(self):
        if self.order < 2:
            raise BadInputError(f"exponent order must be >= 2, got {self.order}")
        if not 0 <= self.value <= self.order - 1:
            raise BadInputError(f"exponent {self.value} outside [0, {self.order - 1}]")

    def _coerce(self, other) -> int:
        if isinstance(other, Exponent):
            if other.order != self.order:
                raise BadInputError(f"exponent order mismatch: {self.order} != {other.order}")
            return other.value
        if isinstance(other, int):
            return other
        raise BadInputError(f"cannot combine Exponent with {type(other).__name__}")

    def __add__(self, other) -> "Exponent":
        return Exponent((self.value + self._coerce(other)) % self.order, self.order)

    def __sub__(self, other) -> "Exponent":
        return Exponent((self.value - self._coerce(other)) % self.order, self.order)

    def __int__(self) -> int:
        return self.value


def _group_value(r: Residue) -> int:
    if r.value == 0:
        raise NotAGroupElementError("0 is not an element of the multiplicative group")
    return r.value


def _same_modulus(a: Residue, b: Residue) -> Modulus:
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"moduli differ: {a.modulus.p} != {b.modulus.p}")
    return a.modulus


def mul_mod(a: Residue, b: Residue) -> Residue:
    """Product of two group elements, fully reduced into [1, p-1]."""
    mod = _same_modulus(a, b)
    return Residue(_group_value(a) * _group_value(b) % mod.p, mod)


def pow_mod(base: Residue, e: int) -> Residue:
    """base**e mod p by square-and-multiply, for e >= 0."""
    if e < 0:
        raise BadInputError(f"exponent must be nonnegative, got {e}")
    # built-in pow is square-and-multiply on arbitrary-precision ints
    return Residue(pow(_group_value(base), e, base.modulus.p), base.modulus)


def two_adic_valuation(n: int) -> tuple[int, int]:
    """Split n >= 1 as 2**k * odd_part; returns (k, odd_part)."""
    if n < 1:
        raise BadInputError(f"2-adic valuation needs n >= 1, got {n}")
    k = (n & -n).bit_length() - 1
    return k, n >> k


def negate(b: Residue) -> Residue:
    """The additive inverse p - b, again an element of [1, p-1]."""
    return Residue(b.modulus.p - _group_value(b), b.modulus)
