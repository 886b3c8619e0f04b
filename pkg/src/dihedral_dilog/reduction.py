"""
Certificates reducing sum_{chords} L(u) = (n-3)(n-2)/2 L(1) to the five-term
relation and the reflection L(x) + L(1-x) = L(1).

Each instance is the equation of a smaller moduli space pulled back along a
forgetful map f_J; a block chord (I, J) of the decorated polygon pulls back
to the product of u_{i,j} over i in I, j in J. Products are kept as
*product-symbols* (frozensets of elementary chords), so two pullbacks giving
the same set are literally the same symbol and cancellations are exact.

For n = 2k or 2k+1 (n >= 7) the certificate is the inclusion-exclusion

    E_n = - sum_{J subset {1..k}, J nonempty} (-1)^|J| E_{2J},

where E_{2J} is the pulled-back equation of the polygon with the even
points z_{2j}, j in J, forgotten. n = 6 is handled by three pentagons and
three reflections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .chords import Chord, DecoratedPolygon, VertexBlock, block_chords, enumerate_chords, forget, pullback
from .coords import dihedral_coords, sample_cell
from .dilog import L1, rogers_l
from .errors import InvalidArgumentError, InvalidSizeError, WrongCaseError
from .relations import FormalSum, block_relation_sets, symbol_to_json

ProductSymbol = frozenset  # frozenset[Chord]


def eq_constant(m: int) -> Fraction:
    """Right-hand side of Eq_m in units of L(1)."""
    return Fraction((m - 3) * (m - 2), 2)


@dataclass(frozen=True)
class Term:
    blocks: tuple[VertexBlock, VertexBlock]
    chords: ProductSymbol

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "chords": symbol_to_json(self.chords)}


@dataclass(frozen=True)
class EquationInstance:
    """sum over terms of L(prod u) = constant * L(1), on the n-gon's moduli space."""

    kind: str  # "base" | "pullback" | "reflection"
    n: int
    J: tuple[int, ...]
    terms: tuple[Term, ...]
    constant: Fraction

    @property
    def m(self) -> int:
        return self.n - len(self.J)

    def symbols(self) -> list[ProductSymbol]:
        return [t.chords for t in self.terms]

    def to_json(self, sign: int) -> dict:
        c = Fraction(self.constant)
        return {
            "sign": sign,
            "kind": self.kind,
            "J": list(self.J),
            "terms": [t.to_json() for t in self.terms],
            "constant_L1": f"{c.numerator}/{c.denominator}",
        }


def _terms(p: DecoratedPolygon) -> tuple[Term, ...]:
    return tuple(Term((bc.a, bc.b), pullback(bc)) for bc in block_chords(p))


def pullback_instance(n: int, J: Iterable[int] = ()) -> EquationInstance:
    """Eq_m of the decorated polygon forget(n, J), pulled back to the n-gon."""
    p = forget(n, J)
    kind = "pullback" if p.J else "base"
    return EquationInstance(kind, n, tuple(sorted(p.J)), _terms(p), eq_constant(p.m))


def reflection_instance(n: int, J: Iterable[int]) -> EquationInstance:
    """
    L(A) + L(B) = L(1) for the two block chords of a square forget(n, J);
    A + B = 1 is then a rectangle relation among the u_{i,j}.
    """
    p = forget(n, J)
    if p.m != 4:
        raise InvalidArgumentError(f"reflection needs a square, forget({n}, {sorted(p.J)}) has {p.m} blocks")
    return EquationInstance("reflection", n, tuple(sorted(p.J)), _terms(p), Fraction(1))


def expand_instance(e: EquationInstance) -> FormalSum:
    return FormalSum.of(e.symbols())


def target_sum(n: int) -> FormalSum:
    """Left side of Eq_n: each elementary chord once."""
    return FormalSum.of(frozenset([c]) for c in enumerate_chords(n))


@dataclass(frozen=True)
class Certificate:
    n: int
    case: str  # "even" | "odd" | "six"
    instances: tuple[tuple[int, EquationInstance], ...]

    @cached_property
    def expansion(self) -> FormalSum:
        acc: dict = {}
        for sign, e in self.instances:
            for sym in e.symbols():
                acc[sym] = acc.get(sym, 0) + sign
        return FormalSum(acc)

    def constant(self) -> Fraction:
        return sum((sign * e.constant for sign, e in self.instances), Fraction(0))

    def expansion_ok(self) -> bool:
        return self.expansion == target_sum(self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "case": self.case,
            "instances": [e.to_json(sign) for sign, e in self.instances],
            "expansion_ok": self.expansion_ok(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        """Rebuild from JSON. Terms are taken as written, so tampering is visible to verify."""
        n = int(data["n"])
        instances = []
        for row in data["instances"]:
            terms = tuple(
                Term(
                    tuple(tuple(b) for b in t["blocks"]),
                    frozenset(Chord(i, j, n) for i, j in t["chords"]),
                )
                for t in row["terms"]
            )
            e = EquationInstance(row["kind"], n, tuple(row["J"]), terms, Fraction(row["constant_L1"]))
            instances.append((int(row["sign"]), e))
        return cls(n, data["case"], tuple(instances))


# -- builders -----------------------------------------------------------------

def _inclusion_exclusion(n: int, case: str) -> Certificate:
    k = n // 2
    instances = []
    for l in range(1, k + 1):
        for J in combinations(range(1, k + 1), l):
            # E_n = -sum_{J != {}} (-1)^|J| E_{2J}
            instances.append((-((-1) ** l), pullback_instance(n, [2 * j for j in J])))
    return Certificate(n, case, tuple(instances))


def build_certificate_even(n: int) -> Certificate:
    if n % 2 or n < 8:
        raise WrongCaseError(f"even case needs n = 2k with k >= 4, got {n}")
    return _inclusion_exclusion(n, "even")


def build_certificate_odd(n: int) -> Certificate:
    if n % 2 == 0 or n < 7:
        raise WrongCaseError(f"odd case needs n = 2k+1 with k >= 3, got {n}")
    return _inclusion_exclusion(n, "odd")


def build_certificate_six() -> Certificate:
    n = 6
    pentagons = [(1, pullback_instance(n, [j])) for j in (2, 4, 6)]
    # squares realising u14 u24 + u35 u36 = 1, u36 u46 + u15 u25 = 1, u14 u13 + u25 u26 = 1
    reflections = [(-1, reflection_instance(n, J)) for J in ((2, 6), (2, 4), (4, 6))]
    return Certificate(n, "six", tuple(pentagons + reflections))


def build_certificate(n: int) -> Certificate:
    """Dispatch on n; n = 4, 5 give the axiom itself as a one-instance certificate."""
    if n < 4:
        raise InvalidSizeError(f"need n >= 4, got {n}")
    if n in (4, 5):
        return Certificate(n, "even" if n == 4 else "odd", ((1, pullback_instance(n)),))
    if n == 6:
        return build_certificate_six()
    if n % 2 == 0:
        return build_certificate_even(n)
    return build_certificate_odd(n)


def flatten_certificate(cert: Certificate) -> Certificate:
    """
    Replace every instance on an m-gon with m >= 6 by the pullback of the
    certificate for m, recursively, until only Eq_4 / Eq_5 instances remain.
    Relative label s of the m-gon is the leader of its s-th block.
    """
    out = []
    for sign, e in cert.instances:
        if e.m <= 5:
            out.append((sign, e))
            continue
        p = forget(e.n, e.J)
        sub = flatten_certificate(build_certificate(p.m))
        for sub_sign, sub_e in sub.instances:
            J = set(e.J) | {p.blocks[s - 1][0] for s in sub_e.J}
            if sub_e.kind == "reflection":
                composed = reflection_instance(e.n, J)
            else:
                composed = pullback_instance(e.n, J)
            out.append((sign * sub_sign, composed))
    return Certificate(cert.n, cert.case, tuple(out))


# -- inclusion-exclusion bookkeeping -------------------------------------------

def inclusion_exclusion_columns(n: int) -> dict[ProductSymbol, dict[int, int]]:
    """
    For every product-symbol: l -> number of J subset {1..k}, |J| = l, whose
    polygon forget(n, 2J) has the symbol among its block chords.
    """
    k = n // 2
    cols: dict = {}
    for l in range(k + 1):
        for J in combinations(range(1, k + 1), l):
            for sym in pullback_instance(n, [2 * j for j in J]).symbols():
                col = cols.setdefault(sym, {})
                col[l] = col.get(l, 0) + 1
    return cols


def signed_column_sum(column: dict[int, int]) -> int:
    return sum((-1) ** l * count for l, count in column.items())


def symbol_kind(sym: ProductSymbol) -> str:
    """'elementary' (1 chord), 'mixed' (a singleton against a pair), 'double' (pair against pair)."""
    return {1: "elementary", 2: "mixed", 4: "double"}[len(sym)]


def constant_column(n: int) -> Fraction:
    """sum_{l=0}^{k} (-1)^l C(k, l) (n-l-3)(n-l-2)/2 with k = n // 2."""
    k = n // 2
    return sum(((-1) ** l * math.comb(k, l) * eq_constant(n - l) for l in range(k + 1)), Fraction(0))


# -- verification ---------------------------------------------------------------

@dataclass
class CertificateReport:
    n: int
    structural_ok: bool = True
    offending: list[tuple[ProductSymbol, int]] = field(default_factory=list)
    constant: Fraction = Fraction(0)
    constant_ok: bool = True
    well_founded: bool = True
    terms_ok: bool = True
    reflections_ok: bool = True
    problems: list[str] = field(default_factory=list)
    samples: int = 0
    numeric_ok: bool = True
    worst_instance_residual: float = 0.0
    worst_combination_residual: float = 0.0
    worst_sample_offset: int | None = None

    @property
    def ok(self) -> bool:
        return self.structural_ok and self.numeric_ok

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "structural_ok": self.structural_ok,
            "offending": [{"symbol": symbol_to_json(s), "coefficient": c} for s, c in self.offending],
            "constant_L1": f"{self.constant.numerator}/{self.constant.denominator}",
            "constant_ok": self.constant_ok,
            "well_founded": self.well_founded,
            "terms_ok": self.terms_ok,
            "reflections_ok": self.reflections_ok,
            "problems": list(self.problems),
            "samples": self.samples,
            "numeric_ok": self.numeric_ok,
            "worst_instance_residual": self.worst_instance_residual,
            "worst_combination_residual": self.worst_combination_residual,
            "worst_sample_offset": self.worst_sample_offset,
        }


def _check_structure(cert: Certificate, report: CertificateReport) -> None:
    n = cert.n
    diff = cert.expansion - target_sum(n)
    report.offending = sorted(diff.items(), key=lambda sc: (len(sc[0]), sorted(sc[0])))
    report.constant = cert.constant()
    report.constant_ok = report.constant == eq_constant(n)
    report.problems.extend(
        f"symbol {symbol_to_json(s)} left with coefficient {c:+d} after cancellation" for s, c in report.offending
    )
    if not report.constant_ok:
        report.problems.append(f"constants sum to {report.constant} L(1), expected {eq_constant(n)} L(1)")

    for sign, e in cert.instances:
        if sign not in (1, -1):
            report.well_founded = False
            report.problems.append(f"sign {sign} is not +-1")
        if e.n != n:
            report.terms_ok = False
            report.problems.append(f"instance on the {e.n}-gon inside a certificate for n = {n}")
            continue
        if e.kind == "base":
            if n not in (4, 5) or e.J:
                report.well_founded = False
                report.problems.append(f"base instance allowed only for n = 4, 5 (n = {n})")
        elif not 4 <= e.m < n:
            report.well_founded = False
            report.problems.append(f"instance J={list(e.J)} has target size {e.m}, need 4 <= m < {n}")
        try:
            expected = reflection_instance(n, e.J) if e.kind == "reflection" else pullback_instance(n, e.J)
        except (InvalidArgumentError, InvalidSizeError) as exc:
            report.terms_ok = False
            report.problems.append(f"instance J={list(e.J)}: {exc}")
            continue
        if set(e.terms) != set(expected.terms) or len(e.terms) != len(expected.terms):
            report.terms_ok = False
            report.problems.append(f"instance J={list(e.J)}: terms differ from the pullback of its polygon")
        if e.constant != expected.constant:
            report.terms_ok = False
            report.problems.append(f"instance J={list(e.J)}: constant {e.constant} != {expected.constant}")
        if e.kind == "reflection":
            p = forget(n, e.J)
            rect = block_relation_sets(*p.leaders(), n)
            if len(e.terms) != 2 or {t.chords for t in e.terms} != set(rect):
                report.reflections_ok = False
                report.problems.append(f"reflection J={list(e.J)} is not a rectangle relation")

    report.structural_ok = (
        not report.offending
        and report.constant_ok
        and report.well_founded
        and report.terms_ok
        and report.reflections_ok
    )


def verify_certificate(
    cert: Certificate, samples: int = 100, tol: float = 1e-10, seed: int = 0, margin: float = 1e-3
) -> CertificateReport:
    """
    Exact check of the cancellation and constant bookkeeping, then a numeric
    check on ``samples`` cell points: every instance holds within ``tol`` and
    the signed combination reproduces sum_c L(u_c).
    """
    report = CertificateReport(cert.n, samples=samples)
    _check_structure(cert, report)
    n = cert.n
    for s in range(samples):
        m = dihedral_coords(sample_cell(n, seed + s, margin))
        cache: dict = {}

        def value(sym):
            if sym not in cache:
                cache[sym] = rogers_l(m.product(sym))
            return cache[sym]

        combination = []
        for sign, e in cert.instances:
            lhs = math.fsum(value(t.chords) for t in e.terms)
            r = abs(lhs - float(e.constant) * L1)
            if r > report.worst_instance_residual:
                report.worst_instance_residual = r
                report.worst_sample_offset = s
            combination.append(sign * lhs)
        eq_lhs = math.fsum(value(frozenset([c])) for c in enumerate_chords(n))
        r = abs(math.fsum(combination) - eq_lhs)
        report.worst_combination_residual = max(report.worst_combination_residual, r)
    report.numeric_ok = report.worst_instance_residual <= tol and report.worst_combination_residual <= tol
    if not report.numeric_ok:
        report.problems.append(
            f"numeric residual {max(report.worst_instance_residual, report.worst_combination_residual):.3e} > {tol:.1e}"
        )
    return report


def eqn_residuals(n: int, samples: int = 100, seed: int = 0, margin: float = 1e-3) -> list[float]:
    """|sum_c L(u_c) - (n-3)(n-2)/2 L(1)| at the cell points seed, seed+1, ..."""
    rhs = float(eq_constant(n)) * L1
    out = []
    for s in range(samples):
        m = dihedral_coords(sample_cell(n, seed + s, margin))
        out.append(abs(math.fsum(rogers_l(v) for v in m.values()) - rhs))
    return out


def verify_eqn(n: int, samples: int = 100, tol: float | None = None, seed: int = 0, margin: float = 1e-3) -> float:
    """Max residual of Eq_n over the samples; raises AssertionError when above ``tol``."""
    worst = max(eqn_residuals(n, samples, seed, margin), default=0.0)
    if tol is not None and not worst <= tol:
        raise AssertionError(f"Eq_{n}: residual {worst:.3e} > {tol:.1e}")
    return worst
