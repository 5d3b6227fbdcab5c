"""Parity biquandle colorings of Gauss diagrams and the counting invariant.

Crossing relations use the sideways convention. Orient the crossing so both
strands point downward; the two left-hand semiarcs carry ``x`` (under strand)
and ``y`` (over strand), and the right-hand ones carry ``x ⊲ᵉ y`` (under) and
``y ⊳ᵉ x`` (over), with ``e`` the parity of the crossing. In Gauss-code terms:

* positive crossing: ``x = u_in``, ``y = o_out``, ``u_out = x ⊲ᵉ y``, ``o_in = y ⊳ᵉ x``;
* negative crossing: ``x = u_out``, ``y = o_in``, ``u_in = x ⊲ᵉ y``, ``o_out = y ⊳ᵉ x``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import Biquandle, ParityBiquandle, as_parity
from .gauss import Crossing, GaussDiagram


@dataclass(frozen=True)
class Coloring:
    """Semiarc index -> element of X (1-indexed)."""

    labels: tuple[int, ...]

    def __getitem__(self, semiarc: int) -> int:
        return self.labels[semiarc]

    def __len__(self):
        return len(self.labels)


def crossing_arcs(d: GaussDiagram, c: Crossing) -> tuple[int, int, int, int]:
    """``(u_in, u_out, o_in, o_out)`` semiarc indices at crossing ``c``."""
    return d.incoming(c.under_pos), c.under_pos, d.incoming(c.over_pos), c.over_pos


def left_arcs(d: GaussDiagram, c: Crossing) -> tuple[int, int]:
    """Semiarcs carrying the left-hand (under, over) labels of ``c``."""
    u_in, u_out, o_in, o_out = crossing_arcs(d, c)
    return (u_in, o_out) if c.sign > 0 else (u_out, o_in)


def _equations(d: GaussDiagram, X: ParityBiquandle, parity: bool):
    """Relations ``lab[t] = T[lab[a]][lab[b]]`` with ``Tinv[lab[t]][lab[b]] = lab[a]``."""
    eqs = []
    for c in d.crossings.values():
        e = c.parity if parity else 0
        u_in, u_out, o_in, o_out = crossing_arcs(d, c)
        if c.sign > 0:
            x, y, ux, oy = u_in, o_out, u_out, o_in
        else:
            x, y, ux, oy = u_out, o_in, u_in, o_out
        eqs.append((ux, x, y, X.under[e], X.beta_inv[e]))
        eqs.append((oy, y, x, X.over[e], X.alpha_inv[e]))
    return eqs


def _plan(d: GaussDiagram, X: ParityBiquandle, parity: bool):
    """For each semiarc in index order: a forcing rule (or None) and the relations to check."""
    eqs = _equations(d, X, parity)
    size = d.num_semiarcs
    plan = []
    for k in range(size):
        force = None
        for t, a, b, T, Tinv in eqs:
            if t == k and a < k and b < k:
                force = ("fwd", a, b, T)
                break
            if a == k and t < k and b < k:
                force = ("inv", t, b, Tinv)
                break
        checks = [(t, a, b, T) for t, a, b, T, _ in eqs if max(t, a, b) == k]
        plan.append((force, checks))
    return plan


def iter_colorings(d: GaussDiagram, X: Biquandle | ParityBiquandle, parity: bool = True) -> Iterator[Coloring]:
    """Yield every coloring of ``d`` by ``X`` in lexicographic label order.

    With ``parity=False`` every crossing is treated as even.
    """
    X = as_parity(X)
    n = X.n
    size = d.num_semiarcs
    plan = _plan(d, X, parity)
    lab = [0] * size
    full = range(n)

    def rec(k):
        if k == size:
            yield Coloring(tuple(v + 1 for v in lab))
            return
        force, checks = plan[k]
        if force is None:
            candidates = full
        elif force[0] == "fwd":
            _, a, b, T = force
            candidates = (T[lab[a]][lab[b]],)
        else:
            _, t, b, Tinv = force
            candidates = (Tinv[lab[t]][lab[b]],)
        for v in candidates:
            lab[k] = v
            if all(lab[t] == T[lab[a]][lab[b]] for t, a, b, T in checks):
                yield from rec(k + 1)

    yield from rec(0)


def enumerate_colorings(d: GaussDiagram, X: Biquandle | ParityBiquandle, parity: bool = True) -> list[Coloring]:
    return list(iter_colorings(d, X, parity))


def counting_invariant(d: GaussDiagram, X: Biquandle | ParityBiquandle, parity: bool = True) -> int:
    return sum(1 for _ in iter_colorings(d, X, parity))


def is_coloring(d: GaussDiagram, X: Biquandle | ParityBiquandle, labels, parity: bool = True) -> bool:
    X = as_parity(X)
    labels = tuple(labels)
    if len(labels) != d.num_semiarcs or any(not 1 <= v <= X.n for v in labels):
        return False
    lab = [v - 1 for v in labels]
    return all(lab[t] == T[lab[a]][lab[b]] for t, a, b, T, _ in _equations(d, X, parity))
