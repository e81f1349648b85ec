"""
Residue arithmetic over Z_q.

Residues are stored as canonical representatives in [0, q) and every
operation reduces eagerly, so equal vectors compare and hash equal. The
modulus travels with each value: codes over different rings can coexist.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from .domain import DimensionError, DomainError, ElementKind


def check_modulus(q: int) -> int:
    if q < 2:
        raise DomainError("q", q, "an integer >= 2")
    return q


def require_even(q: int, what: str) -> int:
    """Reject odd q for statements that use q/2."""
    check_modulus(q)
    if q % 2:
        raise DomainError("q", q, f"an even modulus ({what} uses q/2)")
    return q


@lru_cache(maxsize=None)
def euler_phi(q: int) -> int:
    """Number of units of Z_q, i.e. #{1 <= i < q : gcd(i, q) = 1}."""
    check_modulus(q)
    return sum(1 for i in range(1, q) if gcd(i, q) == 1)


def classify_element(a: int, q: int) -> ElementKind:
    check_modulus(q)
    if not 0 <= a < q:
        raise DomainError("a", a, f"a residue in [0, {q})")
    if a == 0:
        return ElementKind.ZERO
    return ElementKind.UNIT if gcd(a, q) == 1 else ElementKind.ZERO_DIVISOR


def units(q: int) -> tuple[int, ...]:
    check_modulus(q)
    return tuple(a for a in range(1, q) if gcd(a, q) == 1)


def zero_divisors(q: int) -> tuple[int, ...]:
    check_modulus(q)
    return tuple(a for a in range(1, q) if gcd(a, q) != 1)


# ---------------------------------------------------------------------------
# Residue
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Residue:
    value: int
    q: int

    def __post_init__(self) -> None:
        check_modulus(self.q)
        if not 0 <= self.value < self.q:
            raise DomainError("residue", self.value, f"a value in [0, {self.q})")

    @classmethod
    def of(cls, value: int, q: int) -> "Residue":
        """Reduce an arbitrary integer into Z_q."""
        return cls(value % q, q)

    @property
    def kind(self) -> ElementKind:
        return classify_element(self.value, self.q)

    def inverse(self) -> "Residue":
        if self.kind is not ElementKind.UNIT:
            raise DomainError("residue", self.value, f"a unit of Z_{self.q}")
        return Residue(pow(self.value, -1, self.q), self.q)

    def __add__(self, other: "Residue") -> "Residue":
        _same_modulus(self.q, other.q)
        return Residue((self.value + other.value) % self.q, self.q)

    def __mul__(self, other: "Residue") -> "Residue":
        _same_modulus(self.q, other.q)
        return Residue((self.value * other.value) % self.q, self.q)

    def __int__(self) -> int:
        return self.value


# ---------------------------------------------------------------------------
# ResidueVector
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResidueVector:
    """
    A fixed-length word over Z_q.

    Attributes:
        q: Modulus shared by every entry.
        entries: Canonical residues in [0, q); at least one entry.
    """

    q: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        check_modulus(self.q)
        if len(self.entries) < 1:
            raise DomainError("length", 0, "n >= 1")
        for position, value in enumerate(self.entries):
            if not 0 <= value < self.q:
                raise DomainError(
                    f"entry[{position}]", value, f"a residue in [0, {self.q})"
                )

    @classmethod
    def of(cls, q: int, values: Iterable[int]) -> "ResidueVector":
        """Build a vector reducing every value mod q."""
        check_modulus(q)
        return cls(q, tuple(int(v) % q for v in values))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __add__(self, other: "ResidueVector") -> "ResidueVector":
        return vector_add(self, other)

    def __sub__(self, other: "ResidueVector") -> "ResidueVector":
        return vector_sub(self, other)

    def __rmul__(self, scalar: Residue | int) -> "ResidueVector":
        if isinstance(scalar, int):
            scalar = Residue.of(scalar, self.q)
        return scalar_mul(scalar, self)

    def __str__(self) -> str:
        sep = "" if self.q <= 10 else " "
        return sep.join(str(v) for v in self.entries)


def _same_modulus(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"Z_{a}", f"Z_{b}")


def _same_shape(u: ResidueVector, v: ResidueVector) -> None:
    if u.q != v.q or u.n != v.n:
        raise DimensionError(f"Z_{u.q}^{u.n}", f"Z_{v.q}^{v.n}")


def constant_vector(value: int, n: int, q: int) -> ResidueVector:
    """The word (i, i, …, i) of length n."""
    return ResidueVector.of(q, [value] * n)


def zero_vector(n: int, q: int) -> ResidueVector:
    return constant_vector(0, n, q)


def vector_add(u: ResidueVector, v: ResidueVector) -> ResidueVector:
    _same_shape(u, v)
    q = u.q
    return ResidueVector(q, tuple((a + b) % q for a, b in zip(u, v)))


def vector_sub(u: ResidueVector, v: ResidueVector) -> ResidueVector:
    _same_shape(u, v)
    q = u.q
    return ResidueVector(q, tuple((a - b) % q for a, b in zip(u, v)))


def scalar_mul(a: Residue, v: ResidueVector) -> ResidueVector:
    _same_modulus(a.q, v.q)
    q = v.q
    return ResidueVector(q, tuple((a.value * x) % q for x in v))


def inner_product(u: ResidueVector, v: ResidueVector) -> Residue:
    _same_shape(u, v)
    return Residue(sum(a * b for a, b in zip(u, v)) % u.q, u.q)


def hamming_weight(v: ResidueVector) -> int:
    return sum(1 for x in v if x != 0)


def hamming_distance(u: ResidueVector, v: ResidueVector) -> int:
    """d(u, v) = wt(u − v)."""
    return hamming_weight(vector_sub(u, v))
