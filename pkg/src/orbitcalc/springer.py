"""Irreducible labels for classical Weyl groups, the Springer
correspondence for classical nilpotent orbits, and b-invariants.

Labels follow the usual combinatorics: a partition of n+1 for the
symmetric group factor of type A_n, an ordered bipartition (alpha, beta)
with |alpha| + |beta| = n for W(B_n) = W(C_n), and an unordered pair for
W(D_n).  The pair order convention here puts the trivial representation
at ((n), phi) and gives b = 2n(alpha) + 2n(beta) + |beta|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import ClassicalFamily, Partition, padded, transpose

__all__ = [
    "FactorLabel",
    "WeylRepLabel",
    "n_invariant",
    "springer_rep",
    "b_invariant",
    "tensor_sign",
    "VeryEvenOrbitError",
]


class VeryEvenOrbitError(ValueError):
    """A very even type-D partition needs an I/II choice that is out of scope."""


def n_invariant(p: Partition) -> int:
    """n(lambda) = sum (i-1) * lambda_i over decreasing parts."""
    return sum(i * part for i, part in enumerate(p.parts))


@dataclass(frozen=True)
class FactorLabel:
    """Label of an irreducible of one simple Weyl-group factor.

    kind "A" uses only ``alpha``.  Kinds "B" and "C" are ordered pairs.
    Kind "D" is an unordered pair, stored in a canonical order, with
    ``degenerate`` flagging alpha == beta (the split W(D) case).
    """

    kind: str
    alpha: Partition
    beta: Partition | None = None

    def __post_init__(self) -> None:
        if self.kind not in "ABCD":
            raise ValueError(f"bad factor kind {self.kind!r}")
        if self.kind == "A":
            if self.beta is not None:
                raise ValueError("type A label is a single partition")
        else:
            if self.beta is None:
                raise ValueError("classical pair label needs two partitions")
            if self.kind == "D" and self.beta.parts < self.alpha.parts:
                # canonical storage order for the unordered D pair
                a, b = self.alpha, self.beta
                object.__setattr__(self, "alpha", b)
                object.__setattr__(self, "beta", a)

    @property
    def degenerate(self) -> bool:
        return self.kind == "D" and self.alpha == self.beta

    def pair_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset((self.alpha.parts, self.beta.parts))

    def same_rep(self, other: "FactorLabel") -> bool:
        """Equality up to the conventions that do not matter: D pairs are
        unordered, and B/C pairs are compared as unordered sets too (the
        printed order varies between sources)."""
        if self.kind == "A" or other.kind == "A":
            return _as_unordered(self) == _as_unordered(other)
        return self.pair_set() == other.pair_set()

    def __str__(self) -> str:
        if self.kind == "A":
            return self.alpha.exp_str()
        fmt = lambda q: q.exp_str() if q.parts else "phi"
        return f"({fmt(self.alpha)},{fmt(self.beta)})"

    def to_json(self):
        if self.kind == "A":
            return {"A": list(self.alpha.parts)}
        return {self.kind: [list(self.alpha.parts), list(self.beta.parts)]}


def _as_unordered(lab: FactorLabel) -> frozenset:
    if lab.kind == "A":
        return frozenset((lab.alpha.parts, ()))
    return lab.pair_set()


@dataclass(frozen=True)
class WeylRepLabel:
    """A tuple of factor labels, one per simple Weyl-group factor."""

    factors: tuple[FactorLabel, ...]

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors) if self.factors else "1"

    def to_json(self):
        return [f.to_json() for f in self.factors]


def _factor_b(lab: FactorLabel) -> int:
    if lab.kind == "A":
        return n_invariant(lab.alpha)
    a, b = lab.alpha, lab.beta
    base = 2 * n_invariant(a) + 2 * n_invariant(b)
    if lab.kind in "BC":
        return base + b.size
    if a == b:
        return base + a.size
    return base + min(a.size, b.size)


def b_invariant(rep: WeylRepLabel | FactorLabel) -> int:
    """Least symmetric-power degree of the reflection representation
    containing the representation; additive over factors."""
    if isinstance(rep, FactorLabel):
        return _factor_b(rep)
    return sum(_factor_b(f) for f in rep.factors)


def _tensor_sign_factor(lab: FactorLabel) -> FactorLabel:
    if lab.kind == "A":
        return FactorLabel("A", transpose(lab.alpha))
    return FactorLabel(lab.kind, transpose(lab.beta), transpose(lab.alpha))


def tensor_sign(rep: WeylRepLabel | FactorLabel):
    """Tensor with the sign character: transpose in type A, swap and
    transpose the pair otherwise."""
    if isinstance(rep, FactorLabel):
        return _tensor_sign_factor(rep)
    return WeylRepLabel(tuple(_tensor_sign_factor(f) for f in rep.factors))


def springer_rep_partition(fam: ClassicalFamily, p: Partition) -> FactorLabel:
    """Springer label (trivial local system) of the orbit of ``p``.

    Classical symbol recipe: pad to the parity-correct length, add the
    staircase 0,1,2,... to the increasing parts, split by parity, halve,
    strip the staircases again.  Type A returns the partition itself.
    """
    if p.size != fam.n:
        raise ValueError("partition does not match the family")
    if fam.letter == "A":
        return FactorLabel("A", p)
    if fam.letter == "D" and all(part % 2 == 0 for part in p.parts) and p.parts:
        raise VeryEvenOrbitError(f"very even orbit {p} has no unambiguous label")
    k = len(p.parts)
    if fam.letter == "B":
        length = k if k % 2 == 1 else k + 1
    else:
        length = k if k % 2 == 0 else k + 1
    rows = sorted(padded(p, length))
    marked = [r + i for i, r in enumerate(rows)]
    odds = [(x - 1) // 2 for x in marked if x % 2 == 1]
    evens = [x // 2 for x in marked if x % 2 == 0]
    alpha = Partition(sorted((a - i for i, a in enumerate(odds)), reverse=True))
    beta = Partition(sorted((e - i for i, e in enumerate(evens)), reverse=True))
    if fam.letter == "B":
        assert len(odds) == len(evens) + 1
    else:
        assert len(odds) == len(evens)
    assert alpha.size + beta.size == fam.rank, (fam, p, alpha, beta)
    return FactorLabel(fam.letter, alpha, beta)


def springer_rep(orbit) -> WeylRepLabel:
    """Springer label of a classical orbit (see :mod:`orbitcalc.classical`)."""
    return WeylRepLabel((springer_rep_partition(orbit.fam, orbit.p),))
