"""Finite biquandles and parity biquandles given by operation tables.

Elements are ``1..n`` at every public surface (matrices, files, witnesses,
the ``under_op``/``over_op`` helpers). Internally the tables are stored
0-indexed as tuples of tuples so the exhaustive checks stay cheap.

``x ⊲ y`` (``under``) is x after passing under y and ``x ⊳ y`` (``over``) is
x after passing over y, in the sideways convention.

Matrix layouts:

* biquandle: ``n x 2n``, blocks ``[⊲ | ⊳]``;
* parity biquandle: ``2n x 2n``, the even biquandle matrix stacked on the odd
  one, i.e. blocks ``[⊲⁰ | ⊳⁰]`` over ``[⊲¹ | ⊳¹]``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

Table = tuple[tuple[int, ...], ...]

MIXED_PATTERNS = ((0, 1, 1), (1, 0, 1), (1, 1, 0))


class AlgebraError(ValueError):
    pass


class OutOfRange(AlgebraError):
    pass


class AxiomViolation(AlgebraError):
    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"axiom {axiom} fails at {witness}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class NonUnit(AlgebraError):
    pass


class ConstraintViolated(AlgebraError):
    def __init__(self, index: int, value: int, modulus: int):
        self.index = index
        super().__init__(f"constraint {index} evaluates to {value} mod {modulus}, not 0")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def __str__(self):
        if self.passed:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL at {self.witness} {self.detail}".rstrip()


@dataclass
class Report:
    """Outcome of an exhaustive verification, one entry per condition."""

    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def raise_first(self):
        bad = self.first_failure()
        if bad is not None:
            raise AxiomViolation(bad.name, bad.witness, bad.detail)

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _w(*xs: int) -> tuple[int, ...]:
    return tuple(x + 1 for x in xs)


def _first(name, items, describe=lambda *a: ""):
    """Check named ``name``; ``items`` yields 0-indexed witnesses of failure."""
    for bad in items:
        return Check(name, False, _w(*bad), describe(*bad))
    return Check(name, True)


def _bijection_checks(label: str, under: Table, over: Table) -> list[Check]:
    n = len(under)
    r = range(n)

    def non_injective_column(table):
        for y in r:
            seen = {}
            for x in r:
                v = table[x][y]
                if v in seen:
                    yield (y, seen[v], x)
                    break
                seen[v] = x

    def non_injective_s():
        seen = {}
        for x in r:
            for y in r:
                img = (over[y][x], under[x][y])
                if img in seen:
                    yield seen[img] + (x, y)
                    return
                seen[img] = (x, y)

    return [
        _first(f"{label}alpha", non_injective_column(over),
               lambda y, x1, x2: f"x ⊳ {y + 1} takes equal values at x = {x1 + 1}, {x2 + 1}"),
        _first(f"{label}beta", non_injective_column(under),
               lambda y, x1, x2: f"x ⊲ {y + 1} takes equal values at x = {x1 + 1}, {x2 + 1}"),
        _first(f"{label}S", non_injective_s(),
               lambda *a: "S(x,y) = (y ⊳ x, x ⊲ y) identifies two pairs"),
    ]


def _exchange_checks(label: str, lt, rt, abc=(0, 0, 0)) -> list[Check]:
    """The three exchange laws; ``lt[e]``/``rt[e]`` are ⊲ᵉ/⊳ᵉ tables."""
    a, b, c = abc
    n = len(lt[0])
    triples = list(itertools.product(range(n), repeat=3))

    def law1():
        for x, y, z in triples:
            if rt[b][rt[a][z][y]][rt[c][x][y]] != rt[a][rt[b][z][x]][lt[c][y][x]]:
                yield (x, y, z)

    def law2():
        for x, y, z in triples:
            if lt[b][rt[a][x][y]][rt[c][z][y]] != rt[a][lt[b][x][z]][lt[c][y][z]]:
                yield (x, y, z)

    def law3():
        for x, y, z in triples:
            if lt[b][lt[a][y][x]][rt[c][z][x]] != lt[a][lt[b][y][z]][lt[c][x][z]]:
                yield (x, y, z)

    return [
        _first(f"{label}exchange-1", law1()),
        _first(f"{label}exchange-2", law2()),
        _first(f"{label}exchange-3", law3()),
    ]


def _as_table(rows, n: int, what: str) -> Table:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraError(f"{what} must be {n}x{n}")
    return tuple(tuple(int(v) for v in row) for row in rows)


def verify_biquandle_axioms(under: Sequence[Sequence[int]], over: Sequence[Sequence[int]]) -> Report:
    """Exhaustive check of axioms (i)-(iii) on 0-indexed tables."""
    n = len(under)
    lt = _as_table(under, n, "⊲ table")
    rt = _as_table(over, n, "⊳ table")
    report = Report()
    report.checks.append(_first(
        "i", ((x,) for x in range(n) if lt[x][x] != rt[x][x]),
        lambda x: f"x ⊲ x = {lt[x][x] + 1} but x ⊳ x = {rt[x][x] + 1}",
    ))
    report.checks.extend(_bijection_checks("ii-", lt, rt))
    report.checks.extend(_exchange_checks("iii-", (lt,), (rt,)))
    return report


def verify_parity_axioms(under0, under1, over0, over1) -> Report:
    """Even biquandle axioms, odd invertibility, and the three mixed exchange patterns."""
    n = len(under0)
    lt = (_as_table(under0, n, "⊲⁰"), _as_table(under1, n, "⊲¹"))
    rt = (_as_table(over0, n, "⊳⁰"), _as_table(over1, n, "⊳¹"))
    report = Report()
    report.extend(verify_biquandle_axioms(lt[0], rt[0]), prefix="even:")
    report.checks.extend(_bijection_checks("odd:", lt[1], rt[1]))
    for abc in MIXED_PATTERNS:
        tag = "".join(map(str, abc))
        report.checks.extend(_exchange_checks(f"mixed({tag}):", lt, rt, abc))
    return report


def _invert_columns(table: Table) -> Table:
    """inv[v][y] = the x with table[x][y] = v."""
    n = len(table)
    inv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inv[table[x][y]][y] = x
    return tuple(tuple(r) for r in inv)


def _invert_s(under: Table, over: Table) -> dict[tuple[int, int], tuple[int, int]]:
    n = len(under)
    return {(over[y][x], under[x][y]): (x, y) for x in range(n) for y in range(n)}


def _check_range(rows, n: int) -> None:
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise OutOfRange(f"entry ({i + 1},{j + 1}) = {v!r} not in 1..{n}")


@dataclass(frozen=True)
class Biquandle:
    """A verified finite biquandle; build it with :func:`biquandle_from_matrix`."""

    under: Table
    over: Table
    alpha_inv: Table = field(init=False, repr=False, compare=False)
    beta_inv: Table = field(init=False, repr=False, compare=False)
    s_inv: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verify_biquandle_axioms(self.under, self.over).raise_first()
        object.__setattr__(self, "alpha_inv", _invert_columns(self.over))
        object.__setattr__(self, "beta_inv", _invert_columns(self.under))
        object.__setattr__(self, "s_inv", _invert_s(self.under, self.over))

    @property
    def n(self) -> int:
        return len(self.under)

    def under_op(self, x: int, y: int) -> int:
        return self.under[x - 1][y - 1] + 1

    def over_op(self, x: int, y: int) -> int:
        return self.over[x - 1][y - 1] + 1

    def to_matrix(self) -> list[list[int]]:
        return [[v + 1 for v in lrow + rrow] for lrow, rrow in zip(self.under, self.over)]


@dataclass(frozen=True)
class ParityBiquandle:
    """A verified parity biquandle. ``under[e]``/``over[e]`` are ⊲ᵉ/⊳ᵉ."""

    under: tuple[Table, Table]
    over: tuple[Table, Table]
    alpha_inv: tuple[Table, Table] = field(init=False, repr=False, compare=False)
    beta_inv: tuple[Table, Table] = field(init=False, repr=False, compare=False)
    s_inv: tuple[dict, dict] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verify_parity_axioms(self.under[0], self.under[1], self.over[0], self.over[1]).raise_first()
        object.__setattr__(self, "alpha_inv", tuple(_invert_columns(t) for t in self.over))
        object.__setattr__(self, "beta_inv", tuple(_invert_columns(t) for t in self.under))
        object.__setattr__(self, "s_inv", tuple(_invert_s(u, o) for u, o in zip(self.under, self.over)))

    @property
    def n(self) -> int:
        return len(self.under[0])

    @property
    def even(self) -> Biquandle:
        return Biquandle(self.under[0], self.over[0])

    def under_op(self, x: int, y: int, parity: int = 0) -> int:
        return self.under[parity][x - 1][y - 1] + 1

    def over_op(self, x: int, y: int, parity: int = 0) -> int:
        return self.over[parity][x - 1][y - 1] + 1

    def to_matrix(self) -> list[list[int]]:
        return [
            [v + 1 for v in lrow + rrow]
            for e in (0, 1)
            for lrow, rrow in zip(self.under[e], self.over[e])
        ]


def _split_rows(rows, n: int, ncols: int):
    if any(len(r) != ncols for r in rows):
        raise AlgebraError(f"every row must have {ncols} entries")
    _check_range(rows, n)
    left = tuple(tuple(v - 1 for v in r[:n]) for r in rows)
    right = tuple(tuple(v - 1 for v in r[n:]) for r in rows)
    return left, right


def biquandle_from_matrix(rows: Sequence[Sequence[int]]) -> Biquandle:
    """Build and verify a biquandle from its ``n x 2n`` matrix ``[⊲ | ⊳]``."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise AlgebraError("empty matrix")
    under, over = _split_rows(rows, n, 2 * n)
    return Biquandle(under, over)


def parity_biquandle_from_matrix(rows: Sequence[Sequence[int]]) -> ParityBiquandle:
    """Build and verify a parity biquandle from its ``2n x 2n`` block matrix.

    The top ``n`` rows are the even matrix ``[⊲⁰ | ⊳⁰]`` and the bottom ``n``
    rows the odd one ``[⊲¹ | ⊳¹]``, so ``x_i ⊲¹ x_j`` is entry
    ``(n + i, j)`` and ``x_i ⊳⁰ x_j`` is entry ``(i, n + j)``.
    """
    rows = [list(r) for r in rows]
    if not rows or len(rows) % 2:
        raise AlgebraError("parity biquandle matrix needs an even, non-zero number of rows")
    n = len(rows) // 2
    under0, over0 = _split_rows(rows[:n], n, 2 * n)
    under1, over1 = _split_rows(rows[n:], n, 2 * n)
    return ParityBiquandle((under0, under1), (over0, over1))


def duplicate(b: Biquandle) -> ParityBiquandle:
    """A biquandle viewed as a parity biquandle with identical odd operations."""
    return ParityBiquandle((b.under, b.under), (b.over, b.over))


def as_parity(algebra: Biquandle | ParityBiquandle) -> ParityBiquandle:
    return duplicate(algebra) if isinstance(algebra, Biquandle) else algebra


# -- Alexander-type structures -------------------------------------------------


def _unit_inverse(value: int, m: int, name: str) -> int:
    if gcd(value, m) != 1:
        raise NonUnit(f"{name} = {value} is not a unit mod {m}")
    return pow(value, -1, m)


def _affine_tables(m: int, t: int, sinv: int):
    # element i encodes the residue i - 1; with 0-indexed storage that is i itself
    under = tuple(tuple((t * x + (sinv - t) * y) % m for y in range(m)) for x in range(m))
    over = tuple(tuple((sinv * x) % m for _ in range(m)) for x in range(m))
    return under, over


def alexander_biquandle(m: int, t: int, s: int) -> Biquandle:
    """``x ⊲ y = t x + (s⁻¹ - t) y`` and ``x ⊳ y = s⁻¹ x`` on ``Z_m``."""
    if m < 1:
        raise AlgebraError("modulus must be positive")
    sinv = _unit_inverse(s, m, "s")
    _unit_inverse(t, m, "t")
    return Biquandle(*_affine_tables(m, t, sinv))


def alexander_constraints(m: int, t: int, s: int, b: int, a: int) -> tuple[int, int, int]:
    sinv = pow(s, -1, m)
    ainv = pow(a, -1, m)
    d = ainv - b
    return (
        (d * d + (sinv - t) * (b - ainv)) % m,
        (d * (b - t)) % m,
        (d * (sinv - ainv)) % m,
    )


def alexander_parity_biquandle(m: int, t: int, s: int, b: int, a: int) -> ParityBiquandle:
    """Alexander parity biquandle: odd operations use ``b`` and ``a⁻¹`` in place of ``t``, ``s⁻¹``."""
    if m < 1:
        raise AlgebraError("modulus must be positive")
    for name, v in (("t", t), ("s", s), ("b", b), ("a", a)):
        _unit_inverse(v, m, name)
    for index, value in enumerate(alexander_constraints(m, t, s, b, a), 1):
        if value:
            raise ConstraintViolated(index, value, m)
    under0, over0 = _affine_tables(m, t, pow(s, -1, m))
    under1, over1 = _affine_tables(m, b, pow(a, -1, m))
    return ParityBiquandle((under0, under1), (over0, over1))


# -- text files ----------------------------------------------------------------


def _data_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def read_int_rows(rows: list[list[str]], count: int, width: int, what: str) -> list[list[int]]:
    if len(rows) != count:
        raise AlgebraError(f"{what}: expected {count} rows, found {len(rows)}")
    parsed = []
    for i, row in enumerate(rows, 1):
        if len(row) != width:
            raise AlgebraError(f"{what}: row {i} has {len(row)} entries, expected {width}")
        try:
            parsed.append([int(v) for v in row])
        except ValueError:
            raise AlgebraError(f"{what}: row {i} is not all integers") from None
    return parsed


def parse_header(text: str) -> tuple[list[str], list[list[str]]]:
    lines = _data_lines(text)
    if not lines:
        raise AlgebraError("empty file")
    return lines[0], lines[1:]


def parse_algebra(text: str) -> Biquandle | ParityBiquandle:
    """Read a ``biquandle n`` or ``parity-biquandle n`` file."""
    header, body = parse_header(text)
    if len(header) != 2 or header[0] not in ("biquandle", "parity-biquandle"):
        raise AlgebraError(f"unrecognised header {' '.join(header)!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise AlgebraError(f"bad size {header[1]!r}") from None
    if n < 1:
        raise AlgebraError("size must be positive")
    if header[0] == "biquandle":
        return biquandle_from_matrix(read_int_rows(body, n, 2 * n, "biquandle"))
    return parity_biquandle_from_matrix(read_int_rows(body, 2 * n, 2 * n, "parity-biquandle"))


def format_matrix(rows: list[list[int]], split: int) -> list[str]:
    width = max(len(str(v)) for row in rows for v in row)
    return [
        " ".join(str(v).rjust(width) for v in row[:split])
        + "  "
        + " ".join(str(v).rjust(width) for v in row[split:])
        for row in rows
    ]


def format_algebra(algebra: Biquandle | ParityBiquandle) -> str:
    n = algebra.n
    if isinstance(algebra, Biquandle):
        return "\n".join([f"biquandle {n}"] + format_matrix(algebra.to_matrix(), n)) + "\n"
    rows = algebra.to_matrix()
    body = format_matrix(rows[:n], n) + ["# odd operations"] + format_matrix(rows[n:], n)
    return "\n".join([f"parity-biquandle {n}"] + body) + "\n"
