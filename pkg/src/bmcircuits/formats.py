"""Text interchange formats.

.bm --- one matroid:
    dim <n>
    <n-character line over {0,1}, leftmost character = coordinate 0>
    ...
Comment lines start with '#'; blank lines are ignored. Duplicate vector
lines and the all-zeros line are format errors.

.bmdec --- a list of vector blocks against one dimension:
    <kind> <count>          kind is circuits | oddcover | indsets
    dim <n>
    <blocks of vector lines separated by blank lines, each optionally
     preceded by '# ...' comments>
    # key=value trailer comments collected into metadata

Parsers report 1-based line numbers on every error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuits import Circuit, is_circuit
from .errors import FormatError
from .gf2core import BinaryMatroid, Gf2Vector

DEC_KINDS = ("circuits", "oddcover", "indsets")


def _parse_dim(token_line: str, lineno: int) -> int:
    parts = token_line.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
        raise FormatError(f"expected 'dim <n>', got {token_line!r}", lineno)
    n = int(parts[1])
    if n < 1:
        raise FormatError("dimension must be positive", lineno)
    return n


def _parse_vector(line: str, dim: int, lineno: int) -> Gf2Vector:
    if len(line) != dim or any(c not in "01" for c in line):
        raise FormatError(
            f"expected a {dim}-character line over 0/1, got {line!r}", lineno
        )
    if "1" not in line:
        raise FormatError("all-zeros vector is not allowed", lineno)
    return Gf2Vector.from_bits(line)


def parse_bm(text: str) -> BinaryMatroid:
    dim = None
    vectors: list[Gf2Vector] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dim is None:
            dim = _parse_dim(line, lineno)
            continue
        v = _parse_vector(line, dim, lineno)
        if v.key in seen:
            raise FormatError(f"duplicate vector {line}", lineno)
        seen.add(v.key)
        vectors.append(v)
    if dim is None:
        raise FormatError("missing 'dim <n>' header")
    return BinaryMatroid(dim, vectors)


def format_bm(m: BinaryMatroid, comments: tuple[str, ...] = ()) -> str:
    lines = [f"dim {m.dim}"]
    lines += [f"# {c}" for c in comments]
    lines += [v.bits() for v in m.elements]
    return "\n".join(lines) + "\n"


def format_circuit(c: Circuit) -> str:
    """Single circuit in .bm form with a '# circuit' marker."""
    lines = [f"dim {c.dim}", "# circuit"]
    lines += [v.bits() for v in c.elements]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DecFile:
    """Parsed .bmdec content: kind, dimension, vector blocks, trailer metadata."""

    kind: str
    dim: int
    blocks: tuple[tuple[Gf2Vector, ...], ...]
    meta: dict = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DecFile)
            and self.kind == other.kind
            and self.dim == other.dim
            and self.blocks == other.blocks
            and self.meta == other.meta
        )


def parse_bmdec(text: str) -> DecFile:
    kind = None
    count = None
    dim = None
    blocks: list[tuple[Gf2Vector, ...]] = []
    current: list[Gf2Vector] = []
    meta: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            for token in line[1:].split():
                if "=" in token:
                    key, _, value = token.partition("=")
                    meta[key] = value
            continue
        if not line:
            if current:
                blocks.append(tuple(current))
                current = []
            continue
        if kind is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] not in DEC_KINDS or not parts[1].isdigit():
                raise FormatError(
                    f"expected '<kind> <count>' header with kind in {DEC_KINDS}", lineno
                )
            kind, count = parts[0], int(parts[1])
            continue
        if dim is None:
            dim = _parse_dim(line, lineno)
            continue
        current.append(_parse_vector(line, dim, lineno))
    if current:
        blocks.append(tuple(current))
    if kind is None:
        raise FormatError("missing '<kind> <count>' header")
    if dim is None:
        raise FormatError("missing 'dim <n>' line")
    if count != len(blocks):
        raise FormatError(f"header announces {count} blocks, found {len(blocks)}")
    return DecFile(kind, dim, tuple(blocks), meta)


def format_bmdec(
    kind: str,
    dim: int,
    blocks: list[tuple[Gf2Vector, ...]],
    meta: dict | None = None,
    block_comment: str | None = None,
) -> str:
    if kind not in DEC_KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    lines = [f"{kind} {len(blocks)}", f"dim {dim}"]
    for block in blocks:
        lines.append("")
        if block_comment:
            lines.append(f"# {block_comment}")
        lines += [v.bits() for v in block]
    if meta:
        lines.append("")
        lines.append("# " + " ".join(f"{k}={v}" for k, v in meta.items()))
    return "\n".join(lines) + "\n"


def check_decomposition(m: BinaryMatroid, dec: DecFile) -> str | None:
    """None if the blocks are disjoint circuits whose union is m, else a reason."""
    if dec.dim != m.dim:
        return f"dimension mismatch: {dec.dim} vs {m.dim}"
    seen: set[int] = set()
    for i, block in enumerate(dec.blocks):
        if not is_circuit(block):
            return f"block {i} is not a circuit"
        keys = {v.key for v in block}
        if seen & keys:
            return f"block {i} overlaps an earlier block"
        seen |= keys
    if seen != set(m.key_set):
        return "union of blocks differs from the matroid"
    return None


def check_oddcover(m: BinaryMatroid, dec: DecFile) -> str | None:
    """None if every block is a circuit and the blocks XOR to m, else a reason."""
    if dec.dim != m.dim:
        return f"dimension mismatch: {dec.dim} vs {m.dim}"
    parity: set[int] = set()
    for i, block in enumerate(dec.blocks):
        if not is_circuit(block):
            return f"block {i} is not a circuit"
        parity ^= {v.key for v in block}
    if parity != set(m.key_set):
        return "symmetric difference of blocks differs from the matroid"
    return None


def check_partition(m: BinaryMatroid, dec: DecFile) -> str | None:
    """None if the blocks are disjoint independent sets covering m."""
    from .gf2core import Gf2Eliminator

    if dec.dim != m.dim:
        return f"dimension mismatch: {dec.dim} vs {m.dim}"
    seen: set[int] = set()
    for i, block in enumerate(dec.blocks):
        elim = Gf2Eliminator(track_witnesses=False)
        for v in block:
            if v.key in seen:
                return f"block {i} overlaps an earlier block"
            seen.add(v.key)
            if elim.insert(v.key) is not None:
                return f"block {i} is not independent"
    if seen != set(m.key_set):
        return "union of blocks differs from the matroid"
    return None
