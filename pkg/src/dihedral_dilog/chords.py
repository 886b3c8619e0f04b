"""
Combinatorics of the n-gon attached to the dihedral coordinates.

Vertices are labelled 1..n in the standard cyclic order 1 < 2 < ... < n < 1.
Vertex i sits between the sides labelled by the marked points z_i and z_{i+1}.
A chord {i, j} is strict when i, i+1, j, j+1 are pairwise distinct mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidArgumentError, InvalidSizeError, TargetTooSmallError

VertexBlock = tuple[int, ...]


def _wrap(i: int, n: int) -> int:
    """Representative of i mod n in 1..n."""
    return (i - 1) % n + 1


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 4:
        raise InvalidSizeError(f"polygon size must be an integer >= 4, got {n!r}")


def is_chord(i: int, j: int, n: int) -> bool:
    i, j = _wrap(i, n), _wrap(j, n)
    return len({i, j, _wrap(i + 1, n), _wrap(j + 1, n)}) == 4


@dataclass(frozen=True, order=True)
class Chord:
    """Strict chord {i, j} of the n-gon, stored with 1 <= i < j <= n."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        _check_size(self.n)
        i, j = _wrap(self.i, self.n), _wrap(self.j, self.n)
        if not is_chord(i, j, self.n):
            raise InvalidArgumentError(f"{{{self.i},{self.j}}} is not a strict chord of the {self.n}-gon")
        if i > j:
            i, j = j, i
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @property
    def ends(self) -> tuple[int, int]:
        return self.i, self.j

    def to_json(self) -> list[int]:
        return [self.i, self.j]

    def __str__(self):
        return f"{{{self.i},{self.j}}}"


def enumerate_chords(n: int) -> list[Chord]:
    """All n(n-3)/2 strict chords, sorted lexicographically on (i, j)."""
    _check_size(n)
    return [Chord(i, j, n) for i in range(1, n + 1) for j in range(i + 2, n + 1) if is_chord(i, j, n)]


def crosses(c1: Chord, c2: Chord) -> bool:
    """True when the endpoints of the two chords interleave around the polygon."""
    if c1.n != c2.n:
        raise InvalidArgumentError(f"chords of different polygons ({c1.n} and {c2.n})")
    if len({c1.i, c1.j, c2.i, c2.j}) < 4:
        return False
    return (c1.i < c2.i < c1.j) != (c1.i < c2.j < c1.j)


def cyclic_range(a: int, b: int, n: int) -> list[int]:
    """Vertices a, a+1, ..., b walking forward mod n (never empty)."""
    length = (b - a) % n + 1
    return [_wrap(a + t, n) for t in range(length)]


def crossing_set(c: Chord) -> frozenset[Chord]:
    """
    Chords {k, l} with a+1 <= k <= c-1 and c+1 <= l <= a-1 cyclically,
    where c = {a, c}. These are the factors of the product in
    u_{a,c} + prod u_{k,l} = 1.
    """
    n = c.n
    a, b = c.i, c.j
    return frozenset(
        Chord(k, l, n) for k in cyclic_range(a + 1, b - 1, n) for l in cyclic_range(b + 1, a - 1, n)
    )


@dataclass(frozen=True)
class DecoratedPolygon:
    """
    The m-gon obtained from the n-gon by forgetting the marked points in J.

    Forgetting z_s merges the vertex block starting at s into the block
    before it, so each block is a run (i, i+1, ..., i+k) whose leader i is a
    retained index. Blocks are listed by increasing leader.
    """

    n: int
    J: frozenset[int]
    blocks: tuple[VertexBlock, ...]

    @property
    def m(self) -> int:
        return len(self.blocks)

    def leaders(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    def forget(self, J: Iterable[int]) -> "DecoratedPolygon":
        """Forget further marked points (indices in the original 1..n labelling)."""
        return forget(self.n, self.J | frozenset(J))

    def adjacent(self, a: int, b: int) -> bool:
        """Adjacency of blocks given by their positions in ``blocks``."""
        return (a - b) % self.m in (1, self.m - 1)


def forget(n: int, J: Iterable[int]) -> DecoratedPolygon:
    _check_size(n)
    J = frozenset(J)
    if not J <= set(range(1, n + 1)):
        raise InvalidArgumentError(f"forgotten indices {sorted(J)} not within 1..{n}")
    if n - len(J) < 4:
        raise TargetTooSmallError(f"forgetting {len(J)} of {n} points leaves fewer than 4")
    blocks = []
    for v in range(1, n + 1):
        if v in J:
            continue
        block = [v]
        w = _wrap(v + 1, n)
        while w in J:
            block.append(w)
            w = _wrap(w + 1, n)
        blocks.append(tuple(block))
    return DecoratedPolygon(n, J, tuple(blocks))


@dataclass(frozen=True)
class BlockChord:
    a: VertexBlock
    b: VertexBlock
    host: DecoratedPolygon

    def to_json(self) -> list[list[int]]:
        return [list(self.a), list(self.b)]


def block_chords(p: DecoratedPolygon) -> list[BlockChord]:
    """The m(m-3)/2 strict chords of the block polygon."""
    m = p.m
    return [
        BlockChord(p.blocks[s], p.blocks[t], p)
        for s in range(m)
        for t in range(s + 2, m)
        if not p.adjacent(s, t)
    ]


def pullback(bc: BlockChord) -> frozenset[Chord]:
    """Elementary chords {i, j}, i in one block and j in the other.

    The pulled-back coordinate is the product of u over this set.
    """
    n = bc.host.n
    return frozenset(Chord(i, j, n) for i in bc.a for j in bc.b)
