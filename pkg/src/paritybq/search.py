"""Linear systems over ``Z_m`` and the search for (strongly) compatible cocycle pairs.

Every condition on a cocycle pair is linear and homogeneous in the ``2n²``
table entries, so the set of pairs is the kernel of an integer matrix mod
``m``. The kernel is computed from a diagonal (Smith-type) reduction done
directly mod ``m`` with extended-gcd row and column operations, which keeps
composite moduli exact.

Variable ``e*n*n + i*n + j`` is ``φᵉ(x_{i+1}, x_{j+1})``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterator, Sequence

from .algebra import MIXED_PATTERNS, Biquandle, ParityBiquandle, as_parity
from .cocycle import CocyclePair, Tier

COMPATIBLE = Tier.COMPATIBLE
STRONG = Tier.STRONG


class Inconsistent(ValueError):
    pass


class CapExceeded(Exception):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} solutions exceed the cap of {cap}")


@dataclass
class LinearSystemModM:
    """Rows ``(coefficients, constant)`` meaning ``coefficients · x ≡ constant (mod m)``."""

    m: int
    num_vars: int
    rows: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    def add_row(self, coeffs: Sequence[int], constant: int = 0) -> None:
        if len(coeffs) != self.num_vars:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {self.num_vars}")
        self.rows.append((tuple(c % self.m for c in coeffs), constant % self.m))

    def add_sparse(self, terms: dict[int, int], constant: int = 0) -> None:
        coeffs = [0] * self.num_vars
        for var, c in terms.items():
            coeffs[var] += c
        self.add_row(coeffs, constant)

    def is_homogeneous(self) -> bool:
        return all(c == 0 for _, c in self.rows)

    def satisfied_by(self, x: Sequence[int]) -> bool:
        m = self.m
        return all(
            (sum(a * b for a, b in zip(coeffs, x)) - const) % m == 0 for coeffs, const in self.rows
        )


@dataclass(frozen=True)
class SolutionSet:
    """``{particular + Σ cᵢ gᵢ : 0 <= cᵢ < orders[i]}``, each vector hit exactly once."""

    m: int
    particular: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]

    @property
    def count(self) -> int:
        return prod(self.orders)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        m = self.m
        for coeffs in itertools.product(*(range(o) for o in self.orders)):
            x = list(self.particular)
            for c, g in zip(coeffs, self.generators):
                if c:
                    for i, gi in enumerate(g):
                        x[i] += c * gi
            yield tuple(v % m for v in x)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)``; ``(a, 1, 0)`` whenever ``a | b``."""
    if b % a == 0:
        return a, 1, 0
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def _diagonalize(A: list[list[int]], k: int, m: int):
    """Reduce ``A`` mod ``m`` to diagonal form ``P A Q``; return diagonal and ``Q``.

    ``P`` and ``Q`` are products of determinant-one operations, hence invertible
    mod ``m``. Only ``Q`` is tracked.
    """
    A = [[v % m for v in row] for row in A if any(v % m for v in row)]
    Q = [[int(i == j) for j in range(k)] for i in range(k)]
    rows = len(A)
    diag = []
    r = 0
    while r < min(rows, k):
        # pivot: the nonzero entry in the remaining block with the smallest gcd with m
        best = None
        for i in range(r, rows):
            for j in range(r, k):
                v = A[i][j]
                if v:
                    g = gcd(v, m)
                    if best is None or g < best[0]:
                        best = (g, i, j)
                        if g == 1:
                            break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        A[r], A[pi] = A[pi], A[r]
        if pj != r:
            for row in A:
                row[r], row[pj] = row[pj], row[r]
            for row in Q:
                row[r], row[pj] = row[pj], row[r]

        # the pivot only shrinks (to a proper divisor) so this terminates
        while True:
            # clear column r below the pivot
            for i in range(r + 1, rows):
                b = A[i][r]
                if not b:
                    continue
                a = A[r][r]
                g, s, t = _egcd(a, b)
                ag, bg = a // g, b // g
                ri, rr = A[i], A[r]
                new_r = [(s * x + t * y) % m for x, y in zip(rr, ri)]
                new_i = [(-bg * x + ag * y) % m for x, y in zip(rr, ri)]
                A[r], A[i] = new_r, new_i
            # clear row r right of the pivot
            for j in range(r + 1, k):
                b = A[r][j]
                if not b:
                    continue
                a = A[r][r]
                g, s, t = _egcd(a, b)
                ag, bg = a // g, b // g
                for row in A:
                    x, y = row[r], row[j]
                    row[r], row[j] = (s * x + t * y) % m, (-bg * x + ag * y) % m
                for row in Q:
                    x, y = row[r], row[j]
                    row[r], row[j] = (s * x + t * y) % m, (-bg * x + ag * y) % m
            if all(A[i][r] == 0 for i in range(r + 1, rows)):
                break
        diag.append(A[r][r])
        r += 1
    return diag, Q


def solve_mod_m(sys: LinearSystemModM) -> SolutionSet:
    """All solutions of a homogeneous system mod ``m`` as a product of cyclic factors."""
    m, k = sys.m, sys.num_vars
    if not sys.is_homogeneous():
        raise Inconsistent("only homogeneous systems are supported")
    diag, Q = _diagonalize([list(c) for c, _ in sys.rows], k, m)
    generators, orders = [], []
    for j in range(k):
        d = diag[j] if j < len(diag) else 0
        order = gcd(d, m)  # gcd(0, m) = m: a free coordinate
        if order == 1:
            continue
        step = m // order
        generators.append(tuple((Q[i][j] * step) % m for i in range(k)))
        orders.append(order)
    return SolutionSet(m, (0,) * k, tuple(generators), tuple(orders))


# -- cocycle constraint systems ------------------------------------------------


def var_index(n: int, e: int, x: int, y: int) -> int:
    return e * n * n + x * n + y


def build_constraint_system(X: Biquandle | ParityBiquandle, m: int, strength: Tier = STRONG) -> LinearSystemModM:
    """Reduced, 2-cocycle and mixed-compatibility rows (plus strong rows if requested)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    X = as_parity(X)
    n = X.n
    lt, rt = X.under, X.over
    v = lambda e, x, y: var_index(n, e, x, y)  # noqa: E731
    sys = LinearSystemModM(m, 2 * n * n)
    for x in range(n):
        sys.add_sparse({v(0, x, x): 1})
    triples = list(itertools.product(range(n), repeat=3))
    for a, b, c in ((0, 0, 0),) + MIXED_PATTERNS:
        for x, y, z in triples:
            terms: dict[int, int] = {}
            for key, sgn in (
                (v(a, x, y), 1),
                (v(b, lt[a][x][y], rt[c][z][y]), 1),
                (v(c, y, z), 1),
                (v(a, lt[b][x][z], lt[c][y][z]), -1),
                (v(b, x, z), -1),
                (v(c, rt[a][y][x], rt[b][z][x]), -1),
            ):
                terms[key] = terms.get(key, 0) + sgn
            sys.add_sparse(terms)
    if strength >= STRONG:
        lt1, rt1 = lt[1], rt[1]
        for x, y, z in triples:
            sys.add_sparse(_diff(v(0, y, z), v(0, rt1[y][x], rt1[z][x])))
            sys.add_sparse(_diff(v(0, x, z), v(0, lt1[x][y], rt1[z][y])))
            sys.add_sparse(_diff(v(0, x, y), v(0, lt1[x][z], lt1[y][z])))
    return sys


def _diff(i: int, j: int) -> dict[int, int]:
    return {} if i == j else {i: 1, j: -1}


def pair_from_vector(vec: Sequence[int], n: int, m: int, tier: Tier = Tier.RAW) -> CocyclePair:
    nn = n * n
    phi0 = tuple(tuple(vec[x * n:(x + 1) * n]) for x in range(n))
    phi1 = tuple(tuple(vec[nn + x * n: nn + (x + 1) * n]) for x in range(n))
    return CocyclePair(m, phi0, phi1, tier)


def pair_to_vector(pair: CocyclePair) -> tuple[int, ...]:
    return tuple(v for tab in pair.phi for row in tab for v in row)


def cocycle_solutions(X: Biquandle | ParityBiquandle, m: int, strength: Tier = STRONG) -> SolutionSet:
    return solve_mod_m(build_constraint_system(X, m, strength))


def enumerate_cocycles(X: Biquandle | ParityBiquandle, m: int, strength: Tier = STRONG, cap: int = 10_000) -> list[CocyclePair]:
    """Every cocycle pair of the requested tier; raises :class:`CapExceeded` above ``cap``."""
    X = as_parity(X)
    space = cocycle_solutions(X, m, strength)
    if space.count > cap:
        raise CapExceeded(space.count, cap)
    return [pair_from_vector(vec, X.n, m, strength) for vec in space]
