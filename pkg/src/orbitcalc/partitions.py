"""Exact partition combinatorics underlying the classification of
nilpotent orbits in the classical Lie algebras.

Partitions are weakly decreasing tuples of positive integers with no
trailing zeros.  Where an algorithm needs indexed rows including phantom
zero rows (the positional pairing rules for special orbits do), padding
is explicit at the call site via :func:`padded`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "ClassicalFamily",
    "Partition",
    "transpose",
    "from_columns",
    "padded",
    "dominates",
    "is_valid",
    "collapse",
    "enumerate_partitions",
    "valid_partitions",
    "parse_partition",
]


@dataclass(frozen=True)
class ClassicalFamily:
    """A classical family letter (A, B, C, D) with the dimension ``n`` of
    the natural module it governs: gl(n), so(n) with n odd, sp(n), so(n)
    with n even respectively."""

    letter: str
    n: int

    def __post_init__(self) -> None:
        if self.letter not in "ABCD":
            raise ValueError(f"unknown classical family {self.letter!r}")
        if self.n < 1:
            raise ValueError("natural module dimension must be positive")
        if self.letter == "B" and self.n % 2 == 0:
            raise ValueError("family B needs an odd natural module dimension")
        if self.letter in "CD" and self.n % 2 == 1:
            raise ValueError(f"family {self.letter} needs an even natural module dimension")

    @property
    def rank(self) -> int:
        if self.letter == "A":
            return self.n - 1
        if self.letter == "B":
            return (self.n - 1) // 2
        return self.n // 2

    def __str__(self) -> str:
        return f"{self.letter}(n={self.n})"


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts", "size")

    def __init__(self, parts: Iterable[int]):
        ps = tuple(int(p) for p in parts if int(p) != 0)
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"negative part in {ps}")
        object.__setattr__(self, "parts", ps)
        object.__setattr__(self, "size", sum(ps))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Partition is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"[{','.join(str(p) for p in self.parts)}]"

    def exp_str(self) -> str:
        """Render with exponent shorthand, e.g. ``[3,1^4]``."""
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            mult = j - i
            if mult == 1:
                out.append(str(self.parts[i]))
            elif mult <= 9 or i > 0 or j < len(self.parts):
                out.append(f"{self.parts[i]}^{mult}")
            else:
                # A lone run with a two-digit exponent would read back
                # compactly; spell it out instead.
                out.extend([str(self.parts[i])] * mult)
            i = j
        return f"[{','.join(out)}]" if out else "[]"


def transpose(p: Partition) -> Partition:
    """Conjugate partition (reflect the Young diagram); an involution."""
    if not p.parts:
        return Partition(())
    cols = [0] * p.parts[0]
    for part in p.parts:
        for i in range(part):
            cols[i] += 1
    return Partition(cols)


def from_columns(cols: Iterable[int]) -> Partition:
    """The partition whose column lengths are exactly the given multiset."""
    return transpose(Partition(sorted((c for c in cols if c), reverse=True)))


def padded(p: Partition, length: int) -> tuple[int, ...]:
    """Parts padded with trailing zeros up to ``length`` (read-only view)."""
    if length < len(p.parts):
        raise ValueError("cannot pad below the number of parts")
    return p.parts + (0,) * (length - len(p.parts))


def dominates(p: Partition, q: Partition) -> bool:
    """Dominance order: every prefix sum of ``p`` is >= that of ``q``.

    Only meaningful for partitions of the same size, which is not checked.
    """
    m = max(len(p), len(q))
    pp, qq = padded(p, m), padded(q, m)
    sp = sq = 0
    for a, b in zip(pp, qq):
        sp += a
        sq += b
        if sp < sq:
            return False
    return True


def is_valid(p: Partition, fam: ClassicalFamily) -> bool:
    """Whether ``p`` labels a nilpotent orbit of the family.

    B and D (orthogonal): even parts need even multiplicity.  C
    (symplectic): odd parts need even multiplicity.  A: any partition.
    """
    if p.size != fam.n:
        raise ValueError(f"partition of {p.size} does not fit natural module of dim {fam.n}")
    if fam.letter == "A":
        return True
    bad_parity = 0 if fam.letter in "BD" else 1
    mult: dict[int, int] = {}
    for part in p.parts:
        mult[part] = mult.get(part, 0) + 1
    return all(m % 2 == 0 for part, m in mult.items() if part % 2 == bad_parity)


def collapse(p: Partition, fam: ClassicalFamily) -> Partition:
    """The X-collapse: the dominance-largest valid partition below ``p``.

    Standard box-moving algorithm: take the largest part of the wrong
    parity with odd multiplicity, shrink its last row by one box, and
    give the box to the first lower row that can accept it.
    """
    if fam.letter == "A":
        if p.size != fam.n:
            raise ValueError("size mismatch")
        return p
    bad_parity = 0 if fam.letter in "BD" else 1
    parts = list(p.parts)
    if sum(parts) != fam.n:
        raise ValueError("size mismatch")
    while True:
        mult: dict[int, int] = {}
        for part in parts:
            mult[part] = mult.get(part, 0) + 1
        bad = [v for v, m in mult.items() if v % 2 == bad_parity and m % 2 == 1]
        if not bad:
            break
        q = max(bad)
        # Sum-parity forces a second violating value above 1, so q >= 2.
        assert q >= 2, parts
        i = max(k for k, v in enumerate(parts) if v == q)
        parts[i] -= 1
        j = next((k for k in range(i + 1, len(parts)) if parts[k] <= q - 2), None)
        if j is None:
            parts.append(1)
        else:
            parts[j] += 1
    return Partition(parts)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        return (Partition(()),)

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(t) for t in gen(n, n))


def valid_partitions(fam: ClassicalFamily) -> tuple[Partition, ...]:
    """All orbit-labelling partitions for the family."""
    return tuple(p for p in enumerate_partitions(fam.n) if is_valid(p, fam))


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def _parse_terms(body: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    if "," in body or " " in body:
        # Separated terms: multi-digit rows and exponents allowed.
        parts: list[int] = []
        for tok in (t for t in re.split(r"[,\s]+", body) if t):
            m = _TERM.match(tok)
            if not m:
                raise ValueError(f"bad partition term {tok!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return parts
    if body.isdigit() and len(body) <= 2:
        return [int(body)]
    # No separators: compact style [93^21] = [9,3,3,1].  Superscripts bind
    # a single digit, so both rows and exponents are one digit here.
    parts = []
    i = 0
    while i < len(body):
        if not body[i].isdigit():
            raise ValueError(f"bad compact partition {body!r}")
        val = int(body[i])
        i += 1
        mult = 1
        if i < len(body) and body[i] == "^":
            if i + 1 >= len(body) or not body[i + 1].isdigit():
                raise ValueError(f"bad exponent in {body!r}")
            mult = int(body[i + 1])
            i += 2
        parts.extend([val] * mult)
    return parts


def parse_partition(text: str) -> Partition:
    """Parse row notation ``[a,b,c]`` (exponents allowed, ``[3,1^4]``) or
    column notation ``(a,b,c)``; bare comma-separated terms mean rows."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        return Partition(sorted(_parse_terms(text[1:-1]), reverse=True))
    if text.startswith("(") and text.endswith(")"):
        return from_columns(_parse_terms(text[1:-1]))
    return Partition(sorted(_parse_terms(text), reverse=True))
