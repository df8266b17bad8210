"""Arboricity: partition a matroid into the minimum number of independent sets.

The constructive side is a matroid-union style augmenting search: to place an
element into one of k parts, look for a breadth-first alternating chain of
exchanges ending at a part that does not span the moved element. On failure
the set of reachable elements certifies infeasibility: its quotient
ceil(|N| / rank(N)) exceeds k, matching the max-side of the min-max formula.

edmonds_max_bruteforce evaluates that max exhaustively on tiny instances and
is the module's independent correctness oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Union

from .errors import EmptyMatroidError, OutOfRangeError, TooLargeError
from .gf2core import BinaryMatroid, Gf2Eliminator, Gf2Vector, rank

_BRUTEFORCE_LIMIT = 22


@dataclass(frozen=True)
class IndependentPartition:
    """Disjoint independent sets covering the source matroid."""

    source: BinaryMatroid
    parts: tuple[tuple[Gf2Vector, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise OutOfRangeError("empty part")
            elim = Gf2Eliminator(track_witnesses=False)
            for v in part:
                if v.key in seen:
                    raise OutOfRangeError("parts are not disjoint")
                seen.add(v.key)
                if elim.insert(v.key) is not None:
                    raise OutOfRangeError("part is not independent")
        if seen != set(self.source.key_set):
            raise OutOfRangeError("parts do not cover the matroid")


@dataclass(frozen=True)
class Infeasible:
    """Witness that no partition into k independent sets exists.

    certificate N satisfies ceil(|N| / rank(N)) = quotient > k.
    """

    k: int
    certificate: BinaryMatroid
    quotient: int


class _PartState:
    """Working partition with per-part elimination caches for one search round."""

    def __init__(self, dim: int, k: int):
        self.dim = dim
        self.members: list[list[Gf2Vector]] = [[] for _ in range(k)]
        self._elims: list[Gf2Eliminator | None] = [None] * k

    def invalidate(self) -> None:
        self._elims = [None] * len(self.members)

    def elim(self, j: int) -> Gf2Eliminator:
        if self._elims[j] is None:
            e = Gf2Eliminator()
            for v in self.members[j]:
                e.insert(v.key)
            self._elims[j] = e
        return self._elims[j]

    def witnesses(self, j: int, key: int) -> list[Gf2Vector] | None:
        """Members of part j whose XOR equals key, or None if key is outside
        the span (meaning key can simply be appended)."""
        residual, mask = self.elim(j).reduce(key)
        if residual != 0:
            return None
        part = self.members[j]
        out = []
        while mask:
            low = mask & -mask
            out.append(part[low.bit_length() - 1])
            mask ^= low
        return out


def _augment(state: _PartState, x: Gf2Vector) -> set[int] | None:
    """Place x via a shortest exchange chain. Returns None on success, else
    the set of reachable element keys (the infeasibility certificate)."""
    k = len(state.members)
    parent: dict[int, tuple[Gf2Vector, int]] = {}
    vec_of: dict[int, Gf2Vector] = {x.key: x}
    queue = [x]
    head = 0
    while head < len(queue):
        y = queue[head]
        head += 1
        for j in range(k):
            support = state.witnesses(j, y.key)
            if support is None:
                # free slot found: apply the chain from the end back to x
                state.members[j].append(y)
                cur = y
                while cur.key in parent:
                    pred, jj = parent[cur.key]
                    state.members[jj].remove(cur)
                    state.members[jj].append(pred)
                    cur = pred
                state.invalidate()
                return None
            for z in support:
                if z.key not in vec_of:
                    vec_of[z.key] = z
                    parent[z.key] = (y, j)
                    queue.append(z)
    return set(vec_of)


def can_partition(
    m: BinaryMatroid, k: int
) -> Union[IndependentPartition, Infeasible]:
    """Partition m into at most k independent sets, or return a certificate.

    Elements are inserted in canonical order; each insertion runs one
    breadth-first augmenting search over the exchange structure.
    """
    if k < 1:
        raise OutOfRangeError("k must be positive")
    state = _PartState(m.dim, k)
    for x in m.elements:
        reachable = _augment(state, x)
        if reachable is not None:
            cert = BinaryMatroid.from_keys(m.dim, reachable)
            quotient = ceil(len(cert) / rank(cert))
            if quotient <= k:  # would contradict the exchange argument
                raise OutOfRangeError("augmentation failed without a certificate")
            return Infeasible(k, cert, quotient)
    parts = tuple(tuple(sorted(p)) for p in state.members if p)
    return IndependentPartition(m, parts)


def arboricity(m: BinaryMatroid) -> tuple[int, IndependentPartition]:
    """Least k admitting a partition into k independent sets, plus a witness.

    Search starts at the quotient lower bound ceil(|M| / rank(M)) and
    increments; low values fail fast through their certificates.
    """
    if len(m) == 0:
        raise EmptyMatroidError("arboricity of the empty matroid is undefined")
    k = ceil(len(m) / rank(m))
    while True:
        result = can_partition(m, k)
        if isinstance(result, IndependentPartition):
            return k, result
        k += 1


def max_quotient_exhaustive(
    m: BinaryMatroid, denom_offset: int = 0, limit: int = _BRUTEFORCE_LIMIT
) -> int:
    """Exact max over nonempty N of ceil(|N| / (rank(N) + denom_offset)).

    Depth-first scan over all subsets with an incremental eliminator;
    branches die once even a rank-preserving completion cannot beat the
    incumbent. Exponential by design, hence the size limit.
    """
    if len(m) == 0:
        raise EmptyMatroidError("no nonempty subsets")
    if len(m) > limit:
        raise TooLargeError(f"|M| = {len(m)} exceeds the scan limit {limit}")
    keys = [v.key for v in m.elements]
    n = len(keys)
    elim = Gf2Eliminator(track_witnesses=False)
    best = ceil(n / (rank(m) + denom_offset))  # N = M is always a candidate

    def dfs(i: int, size: int) -> None:
        nonlocal best
        r = elim.rank
        if size:
            value = -(-size // (r + denom_offset))
            if value > best:
                best = value
        if i == n:
            return
        # adding everything left cannot shrink the rank below r
        bound = -(-(size + n - i) // (max(r, 1) + denom_offset))
        if bound <= best:
            return
        independent = elim.insert(keys[i]) is None
        dfs(i + 1, size + 1)
        if independent:
            elim.pop_last_row()
        else:
            elim.n_inserted -= 1
        dfs(i + 1, size)

    dfs(0, 0)
    return best


def edmonds_max_bruteforce(m: BinaryMatroid) -> int:
    """Exhaustive arboricity value: max over nonempty N of ceil(|N|/rank(N))."""
    return max_quotient_exhaustive(m, denom_offset=0)
