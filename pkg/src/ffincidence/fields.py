"""Exact arithmetic in prime fields F_p and the quadratic extension F_{p^2}.

Field contexts are immutable; element values are kept canonical after every
operation (residues in [0, p) for F_p, coefficient pairs for F_{p^2}).
Moduli are restricted to machine-word primes, which is all the desk-scale
constructions need.
"""

from __future__ import annotations

import random

WORD_LIMIT = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial division; sufficient for word-sized inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n; guaranteed < 2n for n > 1 by Bertrand's postulate."""
    if n < 2:
        raise ValueError("next_prime requires n >= 2")
    if 2 * n > WORD_LIMIT:
        raise OverflowError(f"prime search above {n} exceeds the word-size modulus cap")
    k = n
    while not is_prime(k):
        k += 1
    return k


def next_prime_3mod4(n: int) -> int:
    """Smallest prime p >= n with p = 3 mod 4."""
    if n < 2:
        raise ValueError("next_prime_3mod4 requires n >= 2")
    if 2 * n > WORD_LIMIT:
        raise OverflowError(f"prime search above {n} exceeds the word-size modulus cap")
    k = n
    while not (is_prime(k) and k % 4 == 3):
        k += 1
    return k


class FieldElement:
    """An element of a field context, kept in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = field.canonical(value)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        return self.field.canonical(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._coerce(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return self.value == self.field.canonical(other)

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.value} in {self.field}"


class PrimeField:
    """The field F_p for a word-sized prime p; raw element values are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not (2 <= p < WORD_LIMIT):
            raise ValueError(f"modulus must be a prime below 2^31, got {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    # raw-value operations (ints); used by the geometry stack
    def canonical(self, v) -> int:
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def size(self) -> int:
        return self.p

    @property
    def char(self) -> int:
        return self.p

    def elements(self):
        return range(self.p)

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def element(self, v) -> FieldElement:
        return FieldElement(self, v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class QuadraticExtensionField:
    """F_{p^2} = F_p[w]/(w^2 + 1) for p = 3 mod 4; raw values are pairs (a, b) = a + b*w.

    The congruence condition makes -1 a non-residue mod p, so w^2 + 1 is
    irreducible and the pair arithmetic below is a field.
    """

    __slots__ = ("p", "base")

    def __init__(self, p: int):
        if p % 4 != 3:
            raise ValueError(f"quadratic extension with w^2 = -1 needs p = 3 mod 4, got {p}")
        self.base = PrimeField(p)
        self.p = p

    def canonical(self, v):
        if isinstance(v, int):
            return (v % self.p, 0)
        a, b = v
        return (int(a) % self.p, int(b) % self.p)

    def add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def sub(self, x, y):
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def mul(self, x, y):
        p = self.p
        a, b = x
        c, d = y
        return ((a * c - b * d) % p, (a * d + b * c) % p)

    def neg(self, x):
        p = self.p
        return ((-x[0]) % p, (-x[1]) % p)

    def inv(self, x):
        a, b = x
        p = self.p
        norm = (a * a + b * b) % p
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        ninv = pow(norm, p - 2, p)
        return ((a * ninv) % p, ((-b) * ninv) % p)

    def pow(self, x, e: int):
        if e < 0:
            x, e = self.inv(x), -e
        result = (1, 0)
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_zero(self, x) -> bool:
        return x[0] % self.p == 0 and x[1] % self.p == 0

    @property
    def zero(self):
        return (0, 0)

    @property
    def one(self):
        return (1, 0)

    @property
    def omega(self):
        return (0, 1)

    @property
    def size(self) -> int:
        return self.p * self.p

    @property
    def char(self) -> int:
        return self.p

    def elements(self):
        p = self.p
        return ((a, b) for a in range(p) for b in range(p))

    def random_element(self, rng: random.Random):
        return (rng.randrange(self.p), rng.randrange(self.p))

    def element(self, v) -> FieldElement:
        return FieldElement(self, v)

    def embed(self, a: int):
        """Raw image of an F_p value under the natural inclusion F_p -> F_{p^2}."""
        return (a % self.p, 0)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtensionField) and other.p == self.p

    def __hash__(self):
        return hash(("QuadraticExtensionField", self.p))

    def __repr__(self):
        return f"F_{self.p}^2"


def field_inverse(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroDivisionError for a = 0."""
    return a.inverse()


def is_quadratic_residue(a: FieldElement) -> bool:
    """Euler's criterion in F_p (odd p); 0 counts as a residue."""
    field = a.field
    if not isinstance(field, PrimeField):
        raise TypeError("quadratic residues are decided in prime fields")
    if field.p == 2:
        raise ValueError("quadratic residue test requires odd p")
    if a.value == 0:
        return True
    return pow(a.value, (field.p - 1) // 2, field.p) == 1


def ext_sqrt_minus_one(field: QuadraticExtensionField) -> FieldElement:
    """The canonical square root of -1 in F_{p^2}: the generator w itself."""
    if not isinstance(field, QuadraticExtensionField):
        raise TypeError("expected a quadratic extension field")
    return FieldElement(field, field.omega)
