"""Classical nilpotent orbit calculus: specialness, the even/odd row-pair
decomposition of special orbits, orbit dimensions, Lusztig-Spaltenstein
and Barbasch-Vogan duals, Richardson induction from zero, Lusztig
quotients and unipotent-representation counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import (
    ClassicalFamily,
    Partition,
    collapse,
    from_columns,
    is_valid,
    transpose,
    valid_partitions,
)
from .springer import VeryEvenOrbitError

__all__ = [
    "ClassicalOrbit",
    "NotSpecialError",
    "SpecialDecomposition",
    "LusztigQuotient",
    "is_special",
    "decompose_special",
    "dimension",
    "nilcone_dim",
    "ls_dual",
    "bv_dual",
    "induce_zero",
    "lusztig_quotient",
    "unipotent_count",
    "enumerate_orbits",
    "special_orbits",
]


class NotSpecialError(ValueError):
    """Raised when an operation defined only on special orbits gets a
    non-special one."""


@dataclass(frozen=True)
class ClassicalOrbit:
    """A nilpotent orbit of a classical Lie algebra, labelled by its
    Jordan-type partition.

    Very even type-D partitions (all parts even) label two orbits I/II;
    such values are carried at partition level and the operations that
    would need the numeral raise :class:`VeryEvenOrbitError`.
    """

    fam: ClassicalFamily
    p: Partition

    def __post_init__(self) -> None:
        if not is_valid(self.p, self.fam):
            raise ValueError(f"{self.p} is not a {self.fam.letter}-partition of {self.fam.n}")

    @property
    def very_even(self) -> bool:
        return (
            self.fam.letter == "D"
            and bool(self.p.parts)
            and all(part % 2 == 0 for part in self.p.parts)
        )

    def __str__(self) -> str:
        return f"({self.fam.letter}, {self.p})"

    def to_json(self):
        return {"family": self.fam.letter, "N": self.fam.n, "partition": list(self.p.parts)}


def is_special(o: ClassicalOrbit) -> bool:
    """Specialness via the transpose parity test: B needs even parts of
    the transpose to have even multiplicity, C and D need odd parts of
    the transpose to have even multiplicity; type A is always special.

    Equivalent to d(d(o)) = o, which the test suite checks exhaustively.
    """
    if o.fam.letter == "A":
        return True
    t = transpose(o.p)
    bad_parity = 0 if o.fam.letter == "B" else 1
    mult: dict[int, int] = {}
    for part in t.parts:
        mult[part] = mult.get(part, 0) + 1
    return all(m % 2 == 0 for part, m in mult.items() if part % 2 == bad_parity)


@dataclass(frozen=True)
class SpecialDecomposition:
    """Row-pair decomposition of a special classical orbit.

    ``skeleton`` holds the rows left after separating the alpha pairs
    (rows of the parity that forces pairing) and the positioned beta
    pairs; ``q`` is read off the skeleton's interlacing pattern and
    determines the Lusztig quotient (Z/2)^q.
    """

    fam: ClassicalFamily
    skeleton: Partition
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    q: int

    def reassemble(self) -> Partition:
        rows = list(self.skeleton.parts)
        for a in self.alphas:
            rows += [a, a]
        for b in self.betas:
            rows += [b, b]
        return Partition(sorted(rows, reverse=True))

    def to_json(self):
        return {
            "skeleton": list(self.skeleton.parts),
            "alpha": list(self.alphas),
            "beta": list(self.betas),
            "q": self.q,
        }


def _slot_kinds(letter: str):
    """Index-pair slots, counted from the bottom row (index 0 or 1).

    Returns (alpha_slot_parity, beta_slot_parity, base): a pair of rows
    (r_j, r_{j-1}) is an alpha slot when j has the first parity, a beta
    slot when j has the second; ``base`` is the lowest row index of the
    family's display (0 for B/D, 1 for C).
    """
    if letter == "B":
        return 1, 0, 0  # alpha at (r_{2l-1}, r_{2l-2}), beta at (r_{2l}, r_{2l-1})
    if letter == "C":
        return 1, 0, 1  # same slot parities, indices starting from r_1
    if letter == "D":
        return 1, 0, 0
    raise ValueError(letter)


def _display_rows(letter: str, p: Partition) -> list[int]:
    """Rows padded so the count matches the family's display: odd for
    B (r_0..r_2k) and C (r_1..r_2k+1), even for D (r_0..r_2k+1)."""
    rows = list(p.parts)
    if letter in "BC":
        if len(rows) % 2 == 0:
            rows.append(0)
    else:
        if len(rows) % 2 == 1:
            rows.append(0)
    return rows


def _pattern_ok(letter: str, rows: list[int]) -> bool:
    """Skeleton interlacing: strict where the display demands it.

    Indexing rows top-down as r_{m} >= ... >= r_low, strictness sits at
    the (r_{2l}, r_{2l-1}) boundaries for B/D and (r_{2l+1}, r_{2l}) for
    C, with low index 0 for B/D and 1 for C.
    """
    low = 1 if letter == "C" else 0
    m = len(rows)
    # rows[k] is r_{m-1-k+low} counted from the top; every family's display
    # is strict exactly where the upper row index is even.
    for k in range(m - 1):
        hi_index = (m - 1 - k) + low
        strict = hi_index % 2 == 0
        if strict:
            if not rows[k] > rows[k + 1]:
                return False
        else:
            if not rows[k] >= rows[k + 1]:
                return False
    return True


def decompose_special(o: ClassicalOrbit) -> SpecialDecomposition:
    """Separate the forced equal row pairs of a special orbit.

    Scans the zero-padded display positionally: equal adjacent pairs of
    the wrong parity sitting in their forced slots leave as alphas, equal
    pairs of the matching parity in the strict slots leave as betas, until
    the remaining skeleton satisfies the family's interlacing pattern.
    The result is independent of removal order (tested exhaustively).
    """
    letter = o.fam.letter
    if letter == "A":
        raise ValueError("type A orbits have no row-pair decomposition")
    if o.very_even:
        raise VeryEvenOrbitError(f"very even orbit {o.p} is out of scope")
    if not is_special(o):
        raise NotSpecialError(f"{o} is not special: no valid decomposition exists")
    alpha_parity = 0 if letter in "BD" else 1  # row value parity forced into alpha pairs
    low = 1 if letter == "C" else 0

    rows = _display_rows(letter, o.p)
    alphas: list[int] = []
    betas: list[int] = []
    while True:
        if _pattern_ok(letter, rows) and not _removable(rows, low, alpha_parity)[0]:
            break
        found, k, as_alpha = _removable(rows, low, alpha_parity)
        if not found:
            raise NotSpecialError(f"{o} admits no positional decomposition")
        val = rows[k]
        (alphas if as_alpha else betas).append(val)
        del rows[k : k + 2]
    skeleton = Partition(rows)
    n_rows = len(rows)
    if letter in "BC":
        assert n_rows % 2 == 1
        q = (n_rows - 1) // 2
    else:
        assert n_rows % 2 == 0
        q = n_rows // 2 - 1
    return SpecialDecomposition(o.fam, skeleton, tuple(sorted(alphas, reverse=True)),
                                tuple(sorted(betas, reverse=True)), q)


def _removable(rows: list[int], low: int, alpha_parity: int):
    """First removable slot pair in the current display, scanning top down.

    Returns (found, list_index, is_alpha).  rows[k] pairs with rows[k+1];
    their display indices are j = m-1-k+low and j-1.  Alpha slots are the
    (odd, even) index pairs, beta slots the (even, odd) ones, relative to
    ``low``; alphas must carry ``alpha_parity`` values, betas the other.
    """
    m = len(rows)
    for k in range(m - 1):
        if rows[k] != rows[k + 1] or rows[k] == 0:
            continue
        j = (m - 1 - k) + low
        val_parity = rows[k] % 2
        if j % 2 == 1 and val_parity == alpha_parity:
            return True, k, True
        if j % 2 == 0 and j - 1 >= low and val_parity != alpha_parity:
            return True, k, False
    return False, -1, False


def dimension(o: ClassicalOrbit) -> int:
    """Orbit dimension by the standard closed form over transpose parts."""
    n = o.fam.n
    tsq = sum(c * c for c in transpose(o.p).parts)
    odd = sum(1 for part in o.p.parts if part % 2 == 1)
    if o.fam.letter == "A":
        return n * n - tsq
    if o.fam.letter in "BD":
        return (n * n - tsq) // 2 - (n - odd) // 2
    return (n * n + n) // 2 - (tsq + odd) // 2


def nilcone_dim(fam: ClassicalFamily) -> int:
    """Dimension of the nilpotent cone = number of roots."""
    r = fam.rank
    if fam.letter == "A":
        return fam.n * fam.n - fam.n
    if fam.letter in "BC":
        return 2 * r * r
    return 2 * r * r - 2 * r


def _dual_family(fam: ClassicalFamily) -> ClassicalFamily:
    if fam.letter == "B":
        return ClassicalFamily("C", fam.n - 1)
    if fam.letter == "C":
        return ClassicalFamily("B", fam.n + 1)
    return fam


def ls_dual(o: ClassicalOrbit) -> ClassicalOrbit:
    """Lusztig-Spaltenstein dual within the same algebra: transpose then
    collapse (plain transpose in type A)."""
    if o.fam.letter == "A":
        return ClassicalOrbit(o.fam, transpose(o.p))
    return ClassicalOrbit(o.fam, collapse(transpose(o.p), o.fam))


def bv_dual(o: ClassicalOrbit) -> ClassicalOrbit:
    """Barbasch-Vogan dual, landing in the Langlands-dual algebra.

    so(2n+1) -> sp(2n): drop a box from the last row of the transpose,
    then C-collapse.  sp(2n) -> so(2n+1): add a box to the first row of
    the transpose, then B-collapse.  Types A and D stay put.
    """
    if o.fam.letter in "AD":
        return ls_dual(o)
    t = list(transpose(o.p).parts)
    target = _dual_family(o.fam)
    if o.fam.letter == "B":
        t[-1] -= 1
    else:
        t[0] += 1
    return ClassicalOrbit(target, collapse(Partition(sorted(t, reverse=True)), target))


def induce_zero(
    gl_blocks: Sequence[int],
    target: ClassicalFamily,
    cofactor_n: int | None = None,
) -> ClassicalOrbit:
    """Richardson orbit induced from the zero orbit of a Levi subalgebra.

    The Levi is gl(b) for each block size plus an optional classical
    cofactor of the target's letter with natural module dimension
    ``cofactor_n``.  Columns are two copies of every block size plus the
    single column of the cofactor's zero orbit; for an odd target a
    leftover padding column of height 1 is supplied automatically.
    """
    if target.letter == "A":
        if sum(gl_blocks) != target.n or cofactor_n is not None:
            raise ValueError("gl Levi blocks must sum to the natural dimension")
        return ClassicalOrbit(target, from_columns(gl_blocks))
    used = 2 * sum(gl_blocks)
    cols = []
    for b in gl_blocks:
        cols += [b, b]
    if cofactor_n is None:
        cofactor_n = target.n - used
        if cofactor_n not in (0, 1):
            raise ValueError(
                f"blocks {tuple(gl_blocks)} leave {target.n - used} of {target}; "
                "pass the cofactor size explicitly"
            )
    if used + cofactor_n != target.n:
        raise ValueError("Levi does not fill the natural module")
    if cofactor_n:
        cols.append(cofactor_n)
    return ClassicalOrbit(target, collapse(from_columns(cols), target))


@dataclass(frozen=True)
class LusztigQuotient:
    """Lusztig's canonical quotient, as one of the shapes that occur here:
    an elementary abelian 2-group (Z/2)^q or a small symmetric group."""

    descriptor: str
    conj_class_count: int

    _SYM = {"1": 1, "S2": 2, "S3": 3, "S4": 5, "S5": 7}

    @classmethod
    def two_group(cls, q: int) -> "LusztigQuotient":
        if q == 0:
            return cls("1", 1)
        if q == 1:
            return cls("S2", 2)
        return cls(f"Z2^{q}", 2 ** q)

    @classmethod
    def symmetric(cls, name: str) -> "LusztigQuotient":
        if name.startswith("Z2^"):
            return cls.two_group(int(name[3:]))
        if name not in cls._SYM:
            raise ValueError(f"unknown quotient descriptor {name!r}")
        return cls(name, cls._SYM[name])

    def __str__(self) -> str:
        return self.descriptor


def lusztig_quotient(o: ClassicalOrbit) -> LusztigQuotient:
    """(Z/2)^q with q from the row-pair decomposition; trivial in type A."""
    if o.fam.letter == "A":
        return LusztigQuotient.two_group(0)
    return LusztigQuotient.two_group(decompose_special(o).q)


def unipotent_count(o: ClassicalOrbit) -> int:
    """Number of special unipotent representations attached to the orbit:
    2^q, the number of irreducibles of (Z/2)^q."""
    return lusztig_quotient(o).conj_class_count


def enumerate_orbits(fam: ClassicalFamily) -> tuple[ClassicalOrbit, ...]:
    """All orbits of the family, very even D partitions included once."""
    return tuple(ClassicalOrbit(fam, p) for p in valid_partitions(fam))


def special_orbits(fam: ClassicalFamily, include_very_even: bool = False) -> tuple[ClassicalOrbit, ...]:
    orbs = (o for o in enumerate_orbits(fam) if is_special(o))
    if include_very_even:
        return tuple(orbs)
    return tuple(o for o in orbs if not o.very_even)
