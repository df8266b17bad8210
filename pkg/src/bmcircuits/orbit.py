"""Cyclic-shift orbit decomposition of the even-weight model.

For an odd prime p, the nonzero even-weight vectors of F_2^p form a copy of
the complete binary matroid of dimension p - 1 (size 2^(p-1) - 1, rank p - 1).
When 2 has multiplicative order p - 1 modulo p, the orbits of the coordinate
rotation partition the model into (2^(p-1) - 1) / p circuits of size p, which
meets the quotient lower bound exactly. The order condition matters: p = 7
fails, and demonstrate_order_failure exhibits the breaking orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .circuits import Circuit, extract_any_circuit, is_circuit
from .errors import (
    NotCoprimeError,
    NotPrimeError,
    OrderConditionError,
    OutOfRangeError,
)
from .gf2core import BinaryMatroid, Gf2Vector

#: 2^p visited-bitmap bytes cap the model size
MAX_P = 31


def multiplicative_order(a: int, p: int) -> int:
    """Least k >= 1 with a^k = 1 (mod p); requires gcd(a, p) = 1."""
    if a < 2 or p < 2:
        raise OutOfRangeError("need a >= 2 and p >= 2")
    if gcd(a, p) != 1:
        raise NotCoprimeError(f"gcd({a}, {p}) != 1")
    k = 1
    value = a % p
    while value != 1:
        value = (value * a) % p
        k += 1
    return k


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def build_even_weight_model(p: int) -> BinaryMatroid:
    """All nonzero even-weight vectors of F_2^p: 2^(p-1) - 1 elements, rank p - 1."""
    if not _is_odd_prime(p):
        raise NotPrimeError(f"{p} is not an odd prime")
    if p > MAX_P:
        raise OutOfRangeError(f"p = {p} exceeds the cap {MAX_P}")
    # leading p-1 bits free, last coordinate fixes even parity
    keys = ((y << 1) | (y.bit_count() & 1) for y in range(1, 1 << (p - 1)))
    return BinaryMatroid.from_keys(p, keys)


def cyclic_shift(x: Gf2Vector, j: int) -> Gf2Vector:
    """Rotate coordinates by j: coordinate i moves to coordinate i + j (mod p)."""
    p = x.n
    j %= p
    if j == 0:
        return x
    mask = (1 << p) - 1
    key = ((x.key >> j) | (x.key << (p - j))) & mask
    return Gf2Vector(p, key)


def _rotations(key: int, p: int) -> list[int]:
    mask = (1 << p) - 1
    return [((key >> j) | (key << (p - j))) & mask if j else key for j in range(p)]


@dataclass(frozen=True)
class OrbitDecomposition:
    """The model, its rotation orbits (each a verified circuit of size p), and p."""

    p: int
    model: BinaryMatroid
    orbits: tuple[Circuit, ...]

    def __post_init__(self):
        expected = ((1 << (self.p - 1)) - 1) // self.p
        if len(self.orbits) != expected:
            raise OutOfRangeError(
                f"expected {expected} orbits, got {len(self.orbits)}"
            )
        covered: set[int] = set()
        for orb in self.orbits:
            if len(orb) != self.p:
                raise OutOfRangeError("orbit size differs from p")
            if covered & orb.key_set:
                raise OutOfRangeError("orbits overlap")
            covered |= orb.key_set
        if covered != set(self.model.key_set):
            raise OutOfRangeError("orbits do not partition the model")


def orbit_decompose(p: int) -> OrbitDecomposition:
    """Partition the even-weight model into rotation orbits and verify each
    is a circuit.

    Precondition: the multiplicative order of 2 mod p equals p - 1; otherwise
    OrderConditionError(order) is raised and nothing is computed. Orbit
    representatives are the canonically smallest members, discovered by a
    linear scan over a visited bitmap.
    """
    model = build_even_weight_model(p)
    order = multiplicative_order(2, p)
    if order != p - 1:
        raise OrderConditionError(p, order)
    visited = bytearray(((1 << p) + 7) // 8)
    orbits: list[Circuit] = []
    for v in model.elements:
        if visited[v.key >> 3] & (1 << (v.key & 7)):
            continue
        keys = _rotations(v.key, p)
        distinct = set(keys)
        if len(distinct) != p:
            raise OutOfRangeError(f"orbit of {v.bits()} has {len(distinct)} elements")
        for k in distinct:
            visited[k >> 3] |= 1 << (k & 7)
        orbits.append(Circuit.from_keys(p, distinct))  # validates the circuit law
    return OrbitDecomposition(p, model, tuple(orbits))


def compress_even_weight(m: BinaryMatroid) -> BinaryMatroid:
    """Drop the last coordinate after checking every vector has even weight.

    The projection is a linear bijection from the even-weight subspace onto
    F_2^(p-1), so matroid structure is preserved.
    """
    for v in m.elements:
        if v.weight % 2 != 0:
            raise OutOfRangeError(f"{v.bits()} has odd weight")
    return BinaryMatroid.from_keys(m.dim - 1, (v.key >> 1 for v in m.elements))


@dataclass(frozen=True)
class OrderFailureReport:
    """Artifacts of the p = 7 counterexample orbit."""

    p: int
    order: int
    orbit: tuple[Gf2Vector, ...]
    orbit_is_circuit: bool
    parts: tuple[Circuit, Circuit]


def demonstrate_order_failure() -> OrderFailureReport:
    """Show the rotation method break at p = 7.

    The orbit of 1110100 (coordinates 0, 1, 2, 4) has 7 elements but is not a
    circuit; extraction splits it into two circuits whose sizes sum to 7.
    """
    p = 7
    order = multiplicative_order(2, p)
    seed = Gf2Vector.from_coords(p, (0, 1, 2, 4))
    keys = _rotations(seed.key, p)
    orbit = tuple(sorted(Gf2Vector(p, k) for k in set(keys)))
    whole = is_circuit(orbit)
    as_matroid = BinaryMatroid(p, orbit)
    first = extract_any_circuit(as_matroid)
    second = Circuit(as_matroid.difference(first).elements)
    return OrderFailureReport(p, order, orbit, whole, (first, second))
