"""Parity-enhanced biquandle 2-cocycles and the invariants they define.

A cocycle pair over ``A = Z_m`` is a reduced 2-cocycle ``φ⁰`` of the even
biquandle together with a map ``φ¹`` evaluated at odd crossings. Both are
stored as 0-indexed ``n x n`` tables of residues; the text encoding is the
``n x 2n`` block matrix ``[φ⁰ | φ¹]`` whose entry ``(i, j)`` is the
coefficient of the characteristic map of ``(x_i, x_j)``.

R3 weight condition, for a parity pattern ``(a, b, c)``::

    φᵃ(x,y) + φᵇ(x ⊲ᵃ y, z ⊳ᶜ y) + φᶜ(y,z)
        = φᵃ(x ⊲ᵇ z, y ⊲ᶜ z) + φᵇ(x,z) + φᶜ(y ⊳ᵃ x, z ⊳ᵇ x)

Pattern ``(0,0,0)`` is the ordinary 2-cocycle condition; the other three are
the mixed compatibility conditions.
"""
from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Sequence

from .algebra import (
    MIXED_PATTERNS,
    AlgebraError,
    Biquandle,
    Check,
    ParityBiquandle,
    Report,
    as_parity,
    format_matrix,
    parse_header,
    read_int_rows,
)
from .coloring import Coloring, is_coloring, iter_colorings, left_arcs
from .gauss import GaussDiagram

Table = tuple[tuple[int, ...], ...]


class Tier(enum.IntEnum):
    RAW = 0
    COMPATIBLE = 1
    STRONG = 2


class CocycleError(ValueError):
    pass


class NotCompatible(CocycleError):
    pass


class NotStrong(CocycleError):
    pass


class InvalidColoring(CocycleError):
    pass


@dataclass(frozen=True)
class CocyclePair:
    m: int
    phi0: Table
    phi1: Table
    tier: Tier = Tier.RAW

    def __post_init__(self):
        if self.m < 1:
            raise CocycleError("modulus must be positive")
        n = len(self.phi0)
        for name, tab in (("φ⁰", self.phi0), ("φ¹", self.phi1)):
            if len(tab) != n or any(len(r) != n for r in tab):
                raise CocycleError(f"{name} must be {n}x{n}")
        object.__setattr__(self, "phi0", _reduce(self.phi0, self.m))
        object.__setattr__(self, "phi1", _reduce(self.phi1, self.m))

    @property
    def n(self) -> int:
        return len(self.phi0)

    @property
    def phi(self) -> tuple[Table, Table]:
        return self.phi0, self.phi1

    def value(self, parity: int, x: int, y: int) -> int:
        """``φᵖᵃʳⁱᵗʸ(x_x, x_y)`` with 1-indexed elements."""
        return self.phi[parity][x - 1][y - 1]

    def to_matrix(self) -> list[list[int]]:
        return [list(r0) + list(r1) for r0, r1 in zip(self.phi0, self.phi1)]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], m: int) -> CocyclePair:
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != 2 * n for r in rows):
            raise CocycleError("cocycle matrix must be n x 2n")
        return cls(m, tuple(tuple(r[:n]) for r in rows), tuple(tuple(r[n:]) for r in rows))

    def verified(self, X: Biquandle | ParityBiquandle) -> CocyclePair:
        """Copy of this pair carrying its actual compatibility tier for ``X``."""
        return replace(self, tier=classify(self, X))


def _reduce(table, m: int) -> Table:
    return tuple(tuple(int(v) % m for v in row) for row in table)


def zero_pair(n: int, m: int) -> CocyclePair:
    zero = tuple((0,) * n for _ in range(n))
    return CocyclePair(m, zero, zero)


def odd_writhe_pair(n: int, m: int) -> CocyclePair:
    """``φ⁰ = 0``, ``φ¹ ≡ 1``: strongly compatible for every parity biquandle."""
    return CocyclePair(m, tuple((0,) * n for _ in range(n)), tuple((1 % m,) * n for _ in range(n)))


def _check_size(pair: CocyclePair, X) -> ParityBiquandle:
    X = as_parity(X)
    if pair.n != X.n:
        raise CocycleError(f"cocycle is {pair.n}x{pair.n} but the algebra has {X.n} elements")
    return X


# -- conditions ----------------------------------------------------------------


def is_reduced(phi0) -> bool:
    return all(phi0[x][x] == 0 for x in range(len(phi0)))


def _r3_violation(phi, lt, rt, m, abc):
    a, b, c = abc
    n = len(phi[0])
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = phi[a][x][y] + phi[b][lt[a][x][y]][rt[c][z][y]] + phi[c][y][z]
        rhs = phi[a][lt[b][x][z]][lt[c][y][z]] + phi[b][x][z] + phi[c][rt[a][y][x]][rt[b][z][x]]
        if (lhs - rhs) % m:
            return (x, y, z)
    return None


def _strong_violation(phi0, lt1, rt1, m):
    n = len(phi0)
    for x, y, z in itertools.product(range(n), repeat=3):
        if (phi0[y][z] - phi0[rt1[y][x]][rt1[z][x]]) % m:
            return 1, (x, y, z)
        if (phi0[x][z] - phi0[lt1[x][y]][rt1[z][y]]) % m:
            return 2, (x, y, z)
        if (phi0[x][y] - phi0[lt1[x][z]][lt1[y][z]]) % m:
            return 3, (x, y, z)
    return None


def is_cocycle(phi0, X_even: Biquandle | ParityBiquandle, m: int) -> bool:
    """2-cocycle condition for ``φ⁰`` over the even operations, exhaustive over triples."""
    X = as_parity(X_even)
    phi0 = _reduce(phi0, m)
    return _r3_violation((phi0, phi0), X.under, X.over, m, (0, 0, 0)) is None


def coboundary_1(lam: Sequence[int], X_even: Biquandle | ParityBiquandle, m: int) -> Table:
    """``(δλ)(x, y) = λ(x) - λ(x ⊲ y) - λ(y) + λ(y ⊳ x)`` in ``Z_m``."""
    X = as_parity(X_even)
    lt, rt = X.under[0], X.over[0]
    n = X.n
    if len(lam) != n:
        raise CocycleError(f"λ must have {n} entries")
    return tuple(
        tuple((lam[x] - lam[lt[x][y]] - lam[y] + lam[rt[y][x]]) % m for y in range(n))
        for x in range(n)
    )


def compatibility_report(pair: CocyclePair, X: Biquandle | ParityBiquandle, strong: bool = True) -> Report:
    """Every condition on a cocycle pair, with a 1-indexed witness for each failure."""
    X = _check_size(pair, X)
    phi, m = pair.phi, pair.m
    report = Report()
    diag = [x for x in range(pair.n) if pair.phi0[x][x]]
    report.checks.append(
        Check("reduced", not diag, (diag[0] + 1,) if diag else None,
              "φ⁰(x,x) ≠ 0" if diag else "")
    )
    for abc in ((0, 0, 0),) + MIXED_PATTERNS:
        bad = _r3_violation(phi, X.under, X.over, m, abc)
        name = "cocycle" if abc == (0, 0, 0) else "compatible(" + "".join(map(str, abc)) + ")"
        report.checks.append(Check(name, bad is None, tuple(v + 1 for v in bad) if bad else None))
    if strong:
        bad = _strong_violation(pair.phi0, X.under[1], X.over[1], m)
        if bad is None:
            report.checks.append(Check("strong", True))
        else:
            which, xyz = bad
            report.checks.append(Check(f"strong-{which}", False, tuple(v + 1 for v in xyz)))
    return report


def is_compatible(pair: CocyclePair, X: Biquandle | ParityBiquandle) -> bool:
    return compatibility_report(pair, X, strong=False).ok


def is_strongly_compatible(pair: CocyclePair, X: Biquandle | ParityBiquandle) -> bool:
    return compatibility_report(pair, X, strong=True).ok


def classify(pair: CocyclePair, X: Biquandle | ParityBiquandle) -> Tier:
    report = compatibility_report(pair, X, strong=True)
    weak_ok = all(c.passed for c in report.checks if not c.name.startswith("strong"))
    if not weak_ok:
        return Tier.RAW
    return Tier.STRONG if report.ok else Tier.COMPATIBLE


def _require(pair: CocyclePair, X, tier: Tier) -> CocyclePair:
    if pair.tier < tier:
        pair = pair.verified(X)
    if pair.tier < tier:
        if tier == Tier.STRONG:
            raise NotStrong("cocycle pair is not strongly compatible with this parity biquandle")
        raise NotCompatible("cocycle pair is not compatible with this parity biquandle")
    return pair


def _require_cocycle(pair: CocyclePair, X) -> None:
    if not (is_reduced(pair.phi0) and is_cocycle(pair.phi0, X, pair.m)):
        raise NotCompatible("φ⁰ is not a reduced 2-cocycle of the even biquandle")


# -- Boltzmann weights ---------------------------------------------------------


def _split_weight(d: GaussDiagram, f: Coloring, pair: CocyclePair, parity: bool) -> tuple[int, int]:
    even = odd = 0
    for c in d.crossings.values():
        e = c.parity if parity else 0
        ux, oy = left_arcs(d, c)
        w = c.sign * pair.phi[e][f[ux] - 1][f[oy] - 1]
        if e:
            odd += w
        else:
            even += w
    return even % pair.m, odd % pair.m


def _check_coloring(d, X, f: Coloring, parity: bool):
    if not is_coloring(d, X, f.labels, parity):
        raise InvalidColoring(f"{f.labels} is not a coloring of {d.code() or 'the unknot'}")


def boltzmann_weight(d: GaussDiagram, X, f: Coloring, pair: CocyclePair, parity: bool = True) -> int:
    """``Σ σ(c) φ^{ε(c)}(x_c, y_c)`` over classical crossings, in ``Z_m``."""
    X = _check_size(pair, X)
    if parity:
        pair = _require(pair, X, Tier.COMPATIBLE)
    else:
        _require_cocycle(pair, X)
    _check_coloring(d, X, f, parity)
    even, odd = _split_weight(d, f, pair, parity)
    return (even + odd) % pair.m


def strong_boltzmann_weight(d: GaussDiagram, X, f: Coloring, pair: CocyclePair) -> tuple[int, int]:
    """``(even-crossing weight, odd-crossing weight)``."""
    X = _check_size(pair, X)
    pair = _require(pair, X, Tier.STRONG)
    _check_coloring(d, X, f, True)
    return _split_weight(d, f, pair, True)


# -- polynomials ---------------------------------------------------------------


@dataclass(frozen=True)
class WeightPolynomial:
    """Multiset of weights as exponent -> multiplicity.

    Exponents are residues mod ``m``: plain ints for one variable ``u``, pairs
    ``(u-exponent, v-exponent)`` for two variables.
    """

    variables: int
    terms: dict = field(hash=False)

    def __post_init__(self):
        if self.variables not in (1, 2):
            raise ValueError("1 or 2 variables")
        object.__setattr__(self, "terms", {k: v for k, v in dict(self.terms).items() if v})

    def total(self) -> int:
        return sum(self.terms.values())

    def specialize(self, m: int) -> WeightPolynomial:
        """Set ``v = u``: collapse a two-variable polynomial to one variable."""
        if self.variables == 1:
            return self
        out = Counter()
        for (a, b), k in self.terms.items():
            out[(a + b) % m] += k
        return WeightPolynomial(1, dict(out))

    def __str__(self):
        return polynomial_to_string(self)


def _monomial(exps: tuple[int, int]) -> str:
    out = ""
    for var, e in zip("uv", exps):
        if e == 1:
            out += var
        elif e:
            out += f"{var}^{e}"
    return out


def polynomial_to_string(p: WeightPolynomial) -> str:
    """Render in table style: descending exponents, e.g. ``4u^2 + 4u + 8``."""
    if not p.terms:
        return "0"
    keyed = {(k, 0) if p.variables == 1 else tuple(k): v for k, v in p.terms.items()}
    parts = []
    for exps in sorted(keyed, reverse=True):
        coeff = keyed[exps]
        mono = _monomial(exps)
        if not mono:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(mono)
        else:
            parts.append(f"{coeff}{mono}")
    return " + ".join(parts)


def invariant_polynomial(d: GaussDiagram, X, pair: CocyclePair, parity: bool = True) -> WeightPolynomial:
    """``Σ_f u^{BW(f)}``; ``parity=False`` treats every crossing as even and uses ``φ⁰`` only."""
    X = _check_size(pair, X)
    if parity:
        pair = _require(pair, X, Tier.COMPATIBLE)
    else:
        _require_cocycle(pair, X)
    terms = Counter()
    for f in iter_colorings(d, X, parity):
        even, odd = _split_weight(d, f, pair, parity)
        terms[(even + odd) % pair.m] += 1
    return WeightPolynomial(1, dict(terms))


def strong_invariant_polynomial(d: GaussDiagram, X, pair: CocyclePair) -> WeightPolynomial:
    """``Σ_f u^{SBW(f)₀} v^{SBW(f)₁}``."""
    X = _check_size(pair, X)
    pair = _require(pair, X, Tier.STRONG)
    terms = Counter(_split_weight(d, f, pair, True) for f in iter_colorings(d, X, True))
    return WeightPolynomial(2, dict(terms))


# -- text files ----------------------------------------------------------------


def parse_cocycle(text: str) -> CocyclePair:
    """Read a ``cocycle n mod m`` file."""
    header, body = parse_header(text)
    if len(header) != 4 or header[0] != "cocycle" or header[2] != "mod":
        raise AlgebraError(f"unrecognised header {' '.join(header)!r}")
    try:
        n, m = int(header[1]), int(header[3])
    except ValueError:
        raise AlgebraError("bad cocycle header numbers") from None
    if n < 1 or m < 2:
        raise AlgebraError("need n >= 1 and m >= 2")
    rows = read_int_rows(body, n, 2 * n, "cocycle")
    for i, row in enumerate(rows, 1):
        if any(not 0 <= v < m for v in row):
            raise AlgebraError(f"cocycle: row {i} has entries outside 0..{m - 1}")
    return CocyclePair.from_matrix(rows, m)


def format_cocycle(pair: CocyclePair) -> str:
    lines = [f"cocycle {pair.n} mod {pair.m}"] + format_matrix(pair.to_matrix(), pair.n)
    return "\n".join(lines) + "\n"
