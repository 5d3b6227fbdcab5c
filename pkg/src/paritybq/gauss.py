"""Signed Gauss codes for virtual knots.

A virtual knot is determined by its signed Gauss code: the cyclic word of
over/under passages through the classical crossings, each tagged with the
crossing sign. Virtual crossings are not recorded at all.

Text format: a whitespace-free concatenation of tokens ``O3+``, ``U1-``, ...
(``o``/``u`` accepted, ``-`` or U+2212 for negative signs). The empty string
is the unknot.

Semiarc ``i`` is the gap immediately after token ``i``; the token at position
``p`` has incoming semiarc ``p - 1 (mod 2n)`` and outgoing semiarc ``p``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

OVER = "O"
UNDER = "U"

_TOKEN = re.compile(r"([OoUu])(\d+)([+\-−])")


class GaussCodeError(ValueError):
    """Base class for malformed or inconsistent Gauss codes."""


class MalformedToken(GaussCodeError):
    pass


class DuplicatePassage(GaussCodeError):
    pass


class SignMismatch(GaussCodeError):
    pass


class MissingPartner(GaussCodeError):
    pass


class UnknownCrossing(KeyError):
    pass


class InvalidPosition(IndexError):
    pass


@dataclass(frozen=True)
class GaussToken:
    passage: str
    crossing: int
    sign: int

    def __post_init__(self):
        if self.passage not in (OVER, UNDER):
            raise MalformedToken(f"passage must be O or U, got {self.passage!r}")
        if self.sign not in (1, -1):
            raise MalformedToken(f"sign must be +1 or -1, got {self.sign!r}")
        if self.crossing < 1:
            raise MalformedToken(f"crossing labels are positive, got {self.crossing}")

    def __str__(self):
        return f"{self.passage}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Crossing:
    id: int
    over_pos: int
    under_pos: int
    sign: int
    parity: int


@dataclass(frozen=True)
class GaussDiagram:
    """Validated signed Gauss code of a one-component virtual knot diagram."""

    tokens: tuple[GaussToken, ...]
    crossings: dict[int, Crossing] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "crossings", _index_crossings(self.tokens))

    @property
    def n(self) -> int:
        return len(self.tokens) // 2

    @property
    def num_semiarcs(self) -> int:
        return max(len(self.tokens), 1)

    def incoming(self, pos: int) -> int:
        return (pos - 1) % len(self.tokens)

    def odd_crossings(self) -> list[Crossing]:
        return [c for c in self.crossings.values() if c.parity == 1]

    def code(self) -> str:
        return "".join(str(t) for t in self.tokens)

    def normalized(self) -> GaussDiagram:
        """Relabel crossings 1..n in order of first appearance."""
        relabel: dict[int, int] = {}
        for t in self.tokens:
            relabel.setdefault(t.crossing, len(relabel) + 1)
        return GaussDiagram(
            tuple(GaussToken(t.passage, relabel[t.crossing], t.sign) for t in self.tokens)
        )

    def __str__(self):
        return self.code()


def _index_crossings(tokens: tuple[GaussToken, ...]) -> dict[int, Crossing]:
    seen: dict[int, dict[str, int]] = {}
    signs: dict[int, int] = {}
    for pos, tok in enumerate(tokens):
        slots = seen.setdefault(tok.crossing, {})
        if tok.passage in slots:
            raise DuplicatePassage(
                f"crossing {tok.crossing} has two {tok.passage} passages "
                f"(positions {slots[tok.passage]} and {pos})"
            )
        slots[tok.passage] = pos
        if signs.setdefault(tok.crossing, tok.sign) != tok.sign:
            raise SignMismatch(f"crossing {tok.crossing} carries both signs")

    crossings = {}
    for cid, slots in seen.items():
        if len(slots) != 2:
            raise MissingPartner(f"crossing {cid} appears only once")
        o, u = slots[OVER], slots[UNDER]
        parity = (abs(o - u) - 1) % 2
        crossings[cid] = Crossing(cid, o, u, signs[cid], parity)
    return crossings


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a signed Gauss code, relabelling crossings 1..n by first appearance."""
    text = text.strip()
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise MalformedToken(f"cannot read a token at offset {pos} of {text!r}")
        passage, label, sign = m.groups()
        label = int(label)
        if label < 1:
            raise MalformedToken(f"crossing label must be positive in {m.group(0)!r}")
        tokens.append(GaussToken(passage.upper(), label, 1 if sign == "+" else -1))
        pos = m.end()
    return GaussDiagram(tuple(tokens)).normalized()


def crossing_parity(d: GaussDiagram, crossing_id: int) -> int:
    """Number of tokens strictly between the two passages of a crossing, mod 2."""
    try:
        return d.crossings[crossing_id].parity
    except KeyError:
        raise UnknownCrossing(crossing_id) from None


def odd_writhe(d: GaussDiagram) -> int:
    return sum(c.sign for c in d.crossings.values() if c.parity == 1)


def rotate(d: GaussDiagram, k: int) -> GaussDiagram:
    """Move the basepoint ``k`` tokens forward; crossing labels are kept."""
    if not d.tokens:
        return d
    k %= len(d.tokens)
    return GaussDiagram(d.tokens[k:] + d.tokens[:k])


def _fresh_id(d: GaussDiagram) -> int:
    return max(d.crossings, default=0) + 1


def _check_gap(d: GaussDiagram, position: int) -> None:
    if not 0 <= position < d.num_semiarcs:
        raise InvalidPosition(
            f"semiarc {position} out of range 0..{d.num_semiarcs - 1}"
        )


def r1_insert(d: GaussDiagram, position: int, order: str = "OU", sign: int = 1) -> GaussDiagram:
    """Add a kink on semiarc ``position``.

    ``order`` is ``"OU"`` or ``"UO"``: which passage of the new crossing comes
    first along the knot. The new crossing is always even.
    """
    _check_gap(d, position)
    if order not in ("OU", "UO") or sign not in (1, -1):
        raise ValueError(f"bad R1 variant {order!r}, {sign!r}")
    k = _fresh_id(d)
    pair = tuple(GaussToken(p, k, sign) for p in order)
    cut = position + 1 if d.tokens else 0
    return GaussDiagram(d.tokens[:cut] + pair + d.tokens[cut:])


def r2_insert(
    d: GaussDiagram,
    pos_a: int,
    pos_b: int,
    a_over: bool = True,
    sign: int = 1,
    antiparallel: bool = True,
) -> GaussDiagram:
    """Push strand ``a`` (on semiarc ``pos_a``) across strand ``b`` (on ``pos_b``).

    Two fresh crossings j, k are created with signs ``sign`` and ``-sign``.
    Strand ``a`` receives ``[A_j, A_k]``; strand ``b`` receives ``[B_k, B_j]``
    when the strands run antiparallel through the bigon and ``[B_j, B_k]``
    when parallel. ``{A, B} = {O, U}`` as chosen by ``a_over``. When
    ``pos_a == pos_b`` the ``a`` block comes first.
    """
    _check_gap(d, pos_a)
    _check_gap(d, pos_b)
    if sign not in (1, -1):
        raise ValueError(f"bad sign {sign!r}")
    j = _fresh_id(d)
    k = j + 1
    a, b = (OVER, UNDER) if a_over else (UNDER, OVER)
    block_a = (GaussToken(a, j, sign), GaussToken(a, k, -sign))
    if antiparallel:
        block_b = (GaussToken(b, k, -sign), GaussToken(b, j, sign))
    else:
        block_b = (GaussToken(b, j, sign), GaussToken(b, k, -sign))

    toks = d.tokens
    if not toks:
        return GaussDiagram(block_a + block_b)
    inserts = sorted([(pos_a + 1, 0, block_a), (pos_b + 1, 1, block_b)])
    out: list[GaussToken] = []
    prev = 0
    for cut, _, block in inserts:
        out.extend(toks[prev:cut])
        out.extend(block)
        prev = cut
    out.extend(toks[prev:])
    return GaussDiagram(tuple(out))


def canonical_rotation(d: GaussDiagram) -> GaussDiagram:
    """Lexicographically least normalized code among all basepoints."""
    if not d.tokens:
        return d
    return min(
        (rotate(d, k).normalized() for k in range(len(d.tokens))),
        key=lambda r: r.code(),
    )


def _chord_words(n: int) -> Iterator[tuple[int, ...]]:
    """Words with each of 1..n twice, labels introduced in increasing order."""

    def rec(word, nxt, open_):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        if nxt <= n:
            yield from rec(word + [nxt], nxt + 1, open_ | {nxt})
        for c in sorted(open_):
            yield from rec(word + [c], nxt, open_ - {c})

    yield from rec([], 1, frozenset())


def enumerate_diagrams(n: int) -> Iterator[GaussDiagram]:
    """Every signed Gauss diagram with exactly ``n`` crossings, once per basepoint class.

    No reduction by Reidemeister moves is attempted, so non-minimal diagrams
    and every mirror/reverse variant are included.
    """
    import itertools

    seen: set[str] = set()
    for word in _chord_words(n):
        for first in itertools.product((OVER, UNDER), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                met = set()
                toks = []
                for c in word:
                    p = first[c - 1]
                    if c in met:
                        p = UNDER if p == OVER else OVER
                    met.add(c)
                    toks.append(GaussToken(p, c, signs[c - 1]))
                canon = canonical_rotation(GaussDiagram(tuple(toks)))
                key = canon.code()
                if key not in seen:
                    seen.add(key)
                    yield canon


# -- knot tables ---------------------------------------------------------------


@dataclass(frozen=True)
class KnotTable:
    entries: tuple[tuple[str, GaussDiagram], ...]

    def __post_init__(self):
        names = [name for name, _ in self.entries]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise ValueError(f"duplicate knot names: {sorted(dupes)}")

    def __iter__(self) -> Iterator[tuple[str, GaussDiagram]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name: str) -> GaussDiagram:
        for key, d in self.entries:
            if key == name:
                return d
        raise KeyError(name)

    def __contains__(self, name) -> bool:
        return any(key == name for key, _ in self.entries)

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]


def parse_knot_table(lines: Iterable[str]) -> KnotTable:
    """Read ``name<whitespace>code`` lines; ``#`` comments and blanks skipped.

    A name with no code is the unknot.
    """
    entries = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise GaussCodeError(f"line {lineno}: expected 'name code', got {raw.strip()!r}")
        name = parts[0]
        code = parts[1] if len(parts) == 2 else ""
        try:
            entries.append((name, parse_gauss_code(code)))
        except GaussCodeError as exc:
            raise type(exc)(f"line {lineno} ({name}): {exc}") from None
    return KnotTable(tuple(entries))


def load_knot_table(path: str | Path) -> KnotTable:
    with open(path, encoding="utf-8") as fh:
        return parse_knot_table(fh)


def bundled_knot_table() -> KnotTable:
    from importlib.resources import files

    text = files("paritybq").joinpath("data/knots.txt").read_text(encoding="utf-8")
    return parse_knot_table(text.splitlines())
