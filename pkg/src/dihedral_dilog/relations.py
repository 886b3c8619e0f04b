"""
Structural identities among dihedral coordinates.

- the crossing relations u_c + prod_{c' crosses c} u_{c'} = 1 and their
  block (rectangle) generalisation,
- the exact cancellation of sum_c c ^ (1 - u_c) in the exterior square of
  the free abelian group on chords,
- the boundary specialisation u_c = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .chords import Chord, crossing_set, cyclic_range, enumerate_chords, is_chord, _wrap
from .errors import InvalidArgumentError, InvalidSizeError


class FormalSum:
    """Finite Z-linear combination of hashable symbols. Zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sym, coeff in items:
            if not isinstance(coeff, int):
                raise InvalidArgumentError(f"coefficients must be integers, got {coeff!r}")
            acc[sym] = acc.get(sym, 0) + coeff
        self._terms = {s: c for s, c in acc.items() if c != 0}

    @classmethod
    def of(cls, symbols: Iterable[Hashable], coeff: int = 1) -> "FormalSum":
        return cls((s, coeff) for s in symbols)

    def __getitem__(self, sym) -> int:
        return self._terms.get(sym, 0)

    def items(self):
        return self._terms.items()

    def symbols(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        return FormalSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FormalSum":
        return FormalSum({s: -c for s, c in self._terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> "FormalSum":
        if not isinstance(k, int):
            return NotImplemented
        return FormalSum({s: k * c for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"FormalSum({self._terms!r})"

    def to_json(self) -> list[dict]:
        rows = [{"symbol": symbol_to_json(s), "coefficient": c} for s, c in self._terms.items()]
        rows.sort(key=lambda r: repr(r["symbol"]))
        return rows


def symbol_to_json(sym):
    """Chords become [i, j]; tuples and sets of chords become (sorted) lists."""
    if isinstance(sym, Chord):
        return sym.to_json()
    if isinstance(sym, (frozenset, set)):
        return [symbol_to_json(s) for s in sorted(sym)]
    if isinstance(sym, tuple):
        return [symbol_to_json(s) for s in sym]
    return sym


# -- exterior square --------------------------------------------------------

def wedge(c1: Chord, c2: Chord) -> FormalSum:
    """c1 ^ c2 in the basis of pairs (a, b) with a < b."""
    if c1 == c2:
        return FormalSum()
    if c1 < c2:
        return FormalSum({(c1, c2): 1})
    return FormalSum({(c2, c1): -1})


def wedge_sum(n: int) -> FormalSum:
    """
    sum over chords c of c ^ (1 - u_c), with 1 - u_c expanded multiplicatively
    as the product over the crossing set of c. Vanishes identically.
    """
    acc: dict = {}
    for c in enumerate_chords(n):
        for d in crossing_set(c):
            for sym, coeff in wedge(c, d).items():
                acc[sym] = acc.get(sym, 0) + coeff
    return FormalSum(acc)


# -- numeric relations ------------------------------------------------------

def check_chord_relation(c: Chord, m, tol: float | None = None) -> float:
    """
    Residual u_c + prod_{c' in crossing_set(c)} u_{c'} - 1 on a CoordMap.
    With ``tol`` given, raise RelationViolation when |residual| > tol.
    """
    residual = m[c] + m.product(crossing_set(c)) - 1.0
    if tol is not None and not abs(residual) <= tol:
        raise RelationViolation(f"chord relation for {c}: residual {residual:.3e} > {tol:.1e}")
    return residual


class RelationViolation(AssertionError):
    pass


def _check_cyclic_order(a, b, c, d, n):
    pts = [_wrap(v, n) for v in (a, b, c, d)]
    if len(set(pts)) != 4:
        raise InvalidArgumentError(f"vertices {pts} are not distinct")
    gaps = [(pts[(t + 1) % 4] - pts[t]) % n for t in range(4)]
    if sum(gaps) != n:
        raise InvalidArgumentError(f"vertices {pts} are not in cyclic order")
    return pts


def block_relation_sets(a: int, b: int, c: int, d: int, n: int) -> tuple[frozenset[Chord], frozenset[Chord]]:
    """
    Index rectangles of the relation
        prod_{a<=i<=b-1, c<=j<=d-1} u_{i,j} + prod_{b<=k<=c-1, d<=l<=a-1} u_{k,l} = 1.
    """
    if n < 4:
        raise InvalidSizeError(f"need n >= 4, got {n}")
    a, b, c, d = _check_cyclic_order(a, b, c, d, n)
    first = [(i, j) for i in cyclic_range(a, b - 1, n) for j in cyclic_range(c, d - 1, n)]
    second = [(k, l) for k in cyclic_range(b, c - 1, n) for l in cyclic_range(d, a - 1, n)]
    for i, j in first + second:
        if not is_chord(i, j, n):
            raise InvalidArgumentError(f"rectangle contains the non-chord pair {{{i},{j}}}")
    return (frozenset(Chord(i, j, n) for i, j in first), frozenset(Chord(k, l, n) for k, l in second))


def check_block_relation(a: int, b: int, c: int, d: int, m) -> float:
    first, second = block_relation_sets(a, b, c, d, m.n)
    return m.product(first) + m.product(second) - 1.0


def all_block_relations(n: int) -> list[tuple[frozenset[Chord], frozenset[Chord]]]:
    """One rectangle pair for every 4-subset a < b < c < d of the vertices."""
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b + 1, n + 1):
                for d in range(c + 1, n + 1):
                    out.append(block_relation_sets(a, b, c, d, n))
    return out


# -- degeneration -------------------------------------------------------------

def _relation_key(left: frozenset, right: frozenset):
    return tuple(sorted((left, right), key=lambda s: sorted(s)))


@dataclass(frozen=True)
class DegenerationResult:
    """
    Effect of specialising u_chord = 0.

    ``split`` holds the vertex lists of the two polygons cut out by the chord
    (sizes n1 + n2 = n + 2); ``residual_relations`` holds, for each of them,
    the relations u_d + prod u = 1 that survive once ``forced_one`` is set to 1.
    """

    chord: Chord
    n: int
    forced_one: frozenset[Chord]
    split: tuple[tuple[int, ...], tuple[int, ...]]
    surviving: tuple[frozenset[Chord], frozenset[Chord]]
    residual_relations: tuple[tuple[tuple[frozenset[Chord], frozenset[Chord]], ...], ...]

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.split[0]), len(self.split[1])

    def is_reflection(self) -> bool:
        """True when the only surviving relation is a two-term u + v = 1."""
        rels = [r for fam in self.residual_relations for r in fam]
        return len(rels) == 1 and all(len(side) == 1 for side in rels[0])


def degenerate(c: Chord, n: int | None = None) -> DegenerationResult:
    if n is None:
        n = c.n
    if c.n != n:
        raise InvalidArgumentError(f"chord {c} belongs to the {c.n}-gon, not the {n}-gon")
    a, b = c.i, c.j
    forced = crossing_set(c)
    sides = (tuple(cyclic_range(a, b, n)), tuple(cyclic_range(b, a, n)))
    surviving = []
    families = []
    for verts in sides:
        vs = set(verts)
        inside = frozenset(d for d in enumerate_chords(n) if d != c and d.i in vs and d.j in vs)
        surviving.append(inside)
        rels = {_relation_key(frozenset([d]), crossing_set(d) - forced) for d in inside}
        families.append(tuple(sorted(rels, key=lambda r: (sorted(r[0]), sorted(r[1])))))
    return DegenerationResult(c, n, forced, sides, tuple(surviving), tuple(families))


def check_relation(rel, m) -> float:
    left, right = rel
    return m.product(left) + m.product(right) - 1.0
