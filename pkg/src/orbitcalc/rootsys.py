"""Explicit Euclidean realizations of the simple root systems with exact
rational arithmetic, integral and zero root subsystems of an
infinitesimal character, and Cartan-type classification of subsystems.

Realizations are the standard orthogonal-coordinate ones: B_n has
+-e_i +- e_j and +-e_i, C_n has +-2e_i instead of the short roots, D_n
only the +-e_i +- e_j, F4 adds the sixteen half-sum roots, and E6/E7/E8
live inside the eight-coordinate E8 model.  Pairing against a character
is the plain coordinate dot product throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iproduct
from typing import Iterable, Sequence

from .partitions import ClassicalFamily, Partition, is_valid

__all__ = [
    "Vec",
    "dot",
    "RootSystem",
    "Factor",
    "Subsystem",
    "InfinitesimalCharacter",
    "build",
    "classify",
    "lambda_from_wdd",
    "lambda_from_partition",
    "integral_subsystem",
    "zero_levi",
    "dominantize",
    "wdd_labels",
    "levi_saturation_wdd",
    "parse_cartan_type",
    "format_cartan_type",
    "normalize_type_str",
]

Vec = tuple[Fraction, ...]

HALF = Fraction(1, 2)


def _vec(xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def dot(u: Vec, v: Vec) -> Fraction:
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def solve_linear(mat: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular rational system by Gaussian elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def span_coefficients(basis: Sequence[Vec], target: Vec) -> list[Fraction] | None:
    """Coefficients of ``target`` in the given independent basis, or None
    if it lies outside the span (checked by reconstruction)."""
    gram = [[dot(b1, b2) for b2 in basis] for b1 in basis]
    rhs = [dot(b, target) for b in basis]
    try:
        coeffs = solve_linear(gram, rhs)
    except ValueError:
        return None
    recon = tuple(sum((c * b[i] for c, b in zip(coeffs, basis)), Fraction(0))
                  for i in range(len(target)))
    return coeffs if recon == tuple(Fraction(x) for x in target) else None


# ---------------------------------------------------------------------------
# realizations


def _classical_roots(letter: str, n: int):
    e = lambda i: tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))
    roots: list[Vec] = []
    for i, j in combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(vadd(vscale(si, e(i)), vscale(sj, e(j))))
    simples = [vsub(e(i), e(i + 1)) for i in range(n - 1)]
    if letter == "B":
        roots += [vscale(s, e(i)) for i in range(n) for s in (1, -1)]
        simples.append(e(n - 1))
    elif letter == "C":
        roots += [vscale(2 * s, e(i)) for i in range(n) for s in (1, -1)]
        simples.append(vscale(2, e(n - 1)))
    elif letter == "D":
        simples.append(vadd(e(n - 2), e(n - 1)))
    else:
        raise ValueError(letter)
    return roots, simples


def _a_roots(n: int):
    d = n + 1
    e = lambda i: tuple(Fraction(1) if k == i else Fraction(0) for k in range(d))
    roots = [vsub(e(i), e(j)) for i in range(d) for j in range(d) if i != j]
    simples = [vsub(e(i), e(i + 1)) for i in range(n)]
    return roots, simples


def _g2_roots():
    e = lambda i: tuple(Fraction(1) if k == i else Fraction(0) for k in range(3))
    short = []
    for i, j in combinations(range(3), 2):
        short += [vsub(e(i), e(j)), vsub(e(j), e(i))]
    longs = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        v = vsub(vscale(2, e(i)), vadd(e(j), e(k)))
        longs += [v, vscale(-1, v)]
    # alpha1 = e1 - e2 (short), alpha2 = -2e1 + e2 + e3 (long)
    simples = [vsub(e(0), e(1)), (Fraction(-2), Fraction(1), Fraction(1))]
    return short + longs, simples


def _f4_roots():
    e = lambda i: tuple(Fraction(1) if k == i else Fraction(0) for k in range(4))
    roots: list[Vec] = []
    for i, j in combinations(range(4), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(vadd(vscale(si, e(i)), vscale(sj, e(j))))
    roots += [vscale(s, e(i)) for i in range(4) for s in (1, -1)]
    roots += [tuple(HALF * s for s in signs) for signs in iproduct((1, -1), repeat=4)]
    simples = [
        vsub(e(1), e(2)),
        vsub(e(2), e(3)),
        e(3),
        (HALF, -HALF, -HALF, -HALF),
    ]
    return roots, simples


def _e8_roots():
    roots: list[Vec] = []
    e = lambda i: tuple(Fraction(1) if k == i else Fraction(0) for k in range(8))
    for i, j in combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(vadd(vscale(si, e(i)), vscale(sj, e(j))))
    for signs in iproduct((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(HALF * s for s in signs))
    simples = [
        (HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF),
        (Fraction(1), Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(0)),
    ]
    e8 = lambda i: tuple(Fraction(1) if k == i else Fraction(0) for k in range(8))
    for i in range(1, 7):
        simples.append(vsub(e8(i), e8(i - 1)))
    return roots, simples


def _e_sub_roots(rank: int):
    roots8, simples8 = _e8_roots()
    simples = simples8[:rank]
    roots = [r for r in roots8 if span_coefficients(simples, r) is not None]
    return roots, simples


_ROOT_COUNTS = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n,
                "C": lambda n: 2 * n * n, "D": lambda n: 2 * n * n - 2 * n,
                "E": {6: 72, 7: 126, 8: 240}, "F": {4: 48}, "G": {2: 12}}


def _single_factor(letter: str, rank: int):
    if letter == "A":
        if rank < 1:
            raise ValueError("rank of A factor must be >= 1")
        roots, simples = _a_roots(rank)
    elif letter in "BC":
        if rank < 1:
            raise ValueError(f"rank of {letter} factor must be >= 1")
        roots, simples = _classical_roots(letter, rank)
    elif letter == "D":
        if rank < 2:
            raise ValueError("rank of D factor must be >= 2")
        roots, simples = _classical_roots("D", rank)
    elif letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E rank must be 6, 7 or 8")
        roots, simples = (_e8_roots() if rank == 8 else _e_sub_roots(rank))
    elif letter == "F":
        if rank != 4:
            raise ValueError("F rank must be 4")
        roots, simples = _f4_roots()
    elif letter == "G":
        if rank != 2:
            raise ValueError("G rank must be 2")
        roots, simples = _g2_roots()
    else:
        raise ValueError(f"unknown family letter {letter!r}")
    expected = _ROOT_COUNTS[letter]
    expected = expected[rank] if isinstance(expected, dict) else expected(rank)
    assert len(set(roots)) == len(roots) == expected, (letter, rank, len(roots))
    return [_vec(r) for r in roots], [_vec(s) for s in simples]


def parse_cartan_type(spec) -> tuple[tuple[str, int], ...]:
    """Accept "D6+A1", [("D", 6), ("A", 1)], or a ClassicalFamily."""
    if isinstance(spec, ClassicalFamily):
        return ((spec.letter, spec.rank),)
    if isinstance(spec, str):
        out = []
        for tok in spec.replace(" ", "").split("+"):
            if not tok or tok == "0":
                continue
            out.append((tok[0].upper(), int(tok[1:])))
        return tuple(out)
    return tuple((str(l).upper(), int(r)) for l, r in spec)


def format_cartan_type(factors: Iterable[tuple[str, int]]) -> str:
    fs = sorted(factors, key=lambda fr: (-fr[1], tuple(-ord(c) for c in fr[0])))
    return "+".join(f"{l}{r}" for l, r in fs) if fs else "0"


def normalize_type_str(spec) -> tuple[tuple[str, int], ...]:
    """Canonical multiset of factors for comparisons: rank-one letters all
    read A1, D2 splits into A1+A1, D3 reads A3."""
    out: list[tuple[str, int]] = []
    for letter, rank in parse_cartan_type(spec):
        if rank == 1:
            if letter == "D":
                continue
            out.append(("A", 1))
        elif (letter, rank) == ("D", 2):
            out += [("A", 1), ("A", 1)]
        elif (letter, rank) == ("D", 3):
            out.append(("A", 3))
        else:
            out.append((letter, rank))
    return tuple(sorted(out))


class RootSystem:
    """An explicit realization of a (product of) root system(s)."""

    def __init__(self, spec):
        self.cartan_type = parse_cartan_type(spec)
        roots: list[Vec] = []
        simples: list[Vec] = []
        offset = 0
        self._factor_slices = []
        for letter, rank in self.cartan_type:
            froots, fsimples = _single_factor(letter, rank)
            dim = len(froots[0]) if froots else rank
            pad = lambda v: (Fraction(0),) * offset + v  # noqa: E731
            roots += [pad(r) for r in froots]
            simples += [pad(s) for s in fsimples]
            self._factor_slices.append((offset, offset + dim))
            offset += dim
        width = offset
        self.ambient_dim = width
        fix = lambda v: v + (Fraction(0),) * (width - len(v))  # noqa: E731
        self.roots = tuple(fix(r) for r in roots)
        self.simple_roots = tuple(fix(s) for s in simples)
        self.root_set = frozenset(self.roots)
        self.rank = len(self.simple_roots)
        # positivity: all roots have one-signed coefficients over the simples
        pos = []
        for r in self.roots:
            coeffs = span_coefficients(self.simple_roots, r)
            assert coeffs is not None, r
            if all(c >= 0 for c in coeffs):
                pos.append(r)
            else:
                assert all(c <= 0 for c in coeffs), (r, coeffs)
        self.positive_roots = tuple(pos)
        assert 2 * len(pos) == len(self.roots)
        g = (Fraction(0),) * width
        for r in pos:
            g = vadd(g, r)
        self.positivity_vec = g  # nonzero pairing with every root
        assert all(dot(g, r) != 0 for r in self.roots)

    @property
    def type_str(self) -> str:
        return format_cartan_type(self.cartan_type)

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.type_str})"

    def to_json(self):
        return {
            "cartan_type": self.type_str,
            "ambient_dim": self.ambient_dim,
            "roots": [[str(x) for x in r] for r in self.roots],
            "simple_roots": [[str(x) for x in s] for s in self.simple_roots],
        }


@lru_cache(maxsize=None)
def _build_cached(spec_str: str) -> RootSystem:
    return RootSystem(spec_str)


def build(spec) -> RootSystem:
    """Build (and cache) the standard realization of a Cartan type."""
    return _build_cached(format_cartan_type(parse_cartan_type(spec)))


@dataclass(frozen=True)
class InfinitesimalCharacter:
    """A rational coordinate vector in the ambient space of a realization."""

    coords: Vec

    def __post_init__(self):
        object.__setattr__(self, "coords", _vec(self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        return [str(c) for c in self.coords]


def _coords(lam) -> Vec:
    return lam.coords if isinstance(lam, InfinitesimalCharacter) else _vec(lam)


# ---------------------------------------------------------------------------
# classification of simple systems


@dataclass(frozen=True)
class Factor:
    """A simple factor of a subsystem: family letter, rank, and its simple
    roots in Bourbaki order."""

    letter: str
    rank: int
    simples: tuple[Vec, ...]

    @property
    def type_str(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def n_roots(self) -> int:
        f = _ROOT_COUNTS[self.letter]
        return f[self.rank] if isinstance(f, dict) else f(self.rank)

    def cartan_matrix(self) -> list[list[int]]:
        return [[int(2 * dot(si, sj) / dot(sj, sj)) for sj in self.simples]
                for si in self.simples]

    def f_vectors(self) -> tuple[Vec, ...]:
        """Coordinate vectors realizing the factor in its standard model:
        simple roots are f_i - f_{i+1} plus the family's closing root.
        For type A the chain is anchored at f_last = 0."""
        s = self.simples
        n = self.rank
        fs: list[Vec] = [None] * n  # type: ignore[list-item]
        if self.letter == "A":
            zero = vscale(0, s[0])
            fs = [zero] * (n + 1)
            for i in range(n - 1, -1, -1):
                fs[i] = vadd(s[i], fs[i + 1])
            return tuple(fs)
        if self.letter == "B":
            fs[n - 1] = s[n - 1]
        elif self.letter == "C":
            fs[n - 1] = vscale(HALF, s[n - 1])
        elif self.letter == "D":
            fs[n - 1] = vscale(HALF, vsub(s[n - 1], s[n - 2]))
            fs[n - 2] = vscale(HALF, vadd(s[n - 1], s[n - 2]))
        else:
            raise ValueError(f"no coordinate model for {self.type_str}")
        start = n - 3 if self.letter == "D" else n - 2
        for i in range(start, -1, -1):
            fs[i] = vadd(s[i], fs[i + 1])
        return tuple(fs)


def _classify_component(sims: list[Vec]) -> Factor:
    k = len(sims)
    norms = [dot(s, s) for s in sims]
    if k == 1:
        letter = "B" if norms[0] == 1 else ("C" if norms[0] == 4 else "A")
        return Factor(letter, 1, tuple(sims))
    pair_mult = {}
    adj = {i: [] for i in range(k)}
    for i in range(k):
        for j in range(i + 1, k):
            nij = 2 * dot(sims[i], sims[j]) / norms[j]
            nji = 2 * dot(sims[i], sims[j]) / norms[i]
            m = int(nij * nji)
            if m:
                adj[i].append(j)
                adj[j].append(i)
                pair_mult[(i, j)] = pair_mult[(j, i)] = m
    degs = {i: len(adj[i]) for i in range(k)}
    forks = [i for i, d in degs.items() if d == 3]
    if any(d > 3 for d in degs.values()) or len(forks) > 1:
        raise ValueError("not a simple system of finite type")
    if forks:
        return _classify_fork(sims, adj, forks[0])
    # a path; find its ends
    ends = [i for i, d in degs.items() if d == 1]
    if len(ends) != 2:
        raise ValueError("not a path")
    order = _path_order(adj, ends[0])
    mults = [pair_mult[(order[i], order[i + 1])] for i in range(k - 1)]
    if max(mults) == 1:
        # type A; orient deterministically
        a, b = sims[order[0]], sims[order[-1]]
        if b < a:
            order.reverse()
        return Factor("A", k, tuple(sims[i] for i in order))
    if max(mults) == 3:
        if k != 2:
            raise ValueError("triple edge only in G2")
        i, j = order
        # Bourbaki: alpha1 short, alpha2 long
        if norms[i] > norms[j]:
            i, j = j, i
        return Factor("G", 2, (sims[i], sims[j]))
    # one double edge
    dbl = [t for t in range(k - 1) if mults[t] == 2]
    if len(dbl) != 1:
        raise ValueError("more than one double edge")
    t = dbl[0]
    if 0 < t < k - 2:
        # internal double edge: F4, long pair first
        if k != 4 or t != 1:
            raise ValueError("internal double edge only in F4")
        if norms[order[0]] < norms[order[-1]]:
            order.reverse()
        if not all(norms[order[i]] > norms[order[i + 2]] for i in (0, 1)):
            raise ValueError("bad F4 norm pattern")
        return Factor("F", 4, tuple(sims[i] for i in order))
    # B or C: put the double edge at the far end
    if t != k - 2:
        order.reverse()
    end, prev = order[-1], order[-2]
    if norms[end] < norms[prev]:
        return Factor("B", k, tuple(sims[i] for i in order))
    if norms[end] > norms[prev]:
        return Factor("C", k, tuple(sims[i] for i in order))
    raise ValueError("double edge with equal norms")


def _path_order(adj, start) -> list[int]:
    order = [start]
    seen = {start}
    while True:
        nxt = [j for j in adj[order[-1]] if j not in seen]
        if not nxt:
            return order
        if len(nxt) > 1:
            raise ValueError("not a path")
        order.append(nxt[0])
        seen.add(nxt[0])


def _classify_fork(sims, adj, fork) -> Factor:
    k = len(sims)
    arms = []
    for nb in adj[fork]:
        arm = [nb]
        prev = fork
        while True:
            nxt = [j for j in adj[arm[-1]] if j != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), [sims[i] for i in a]))
    la, lb, lc = (len(a) for a in arms)
    if la == 1 and lb == 1:
        # D: long arm reversed, fork, then the two leaves
        order = list(reversed(arms[2])) + [fork] + [arms[0][0], arms[1][0]]
        return Factor("D", k, tuple(sims[i] for i in order))
    if la == 1 and lb == 2 and k in (6, 7, 8):
        # E: Bourbaki numbering
        two, long_arm = arms[1], arms[2]
        order = [two[1], arms[0][0], two[0], fork] + long_arm
        return Factor("E", k, tuple(sims[i] for i in order))
    raise ValueError(f"fork with arms {(la, lb, lc)} is not of finite type")


def classify(simples: Iterable[Vec]) -> tuple[Factor, ...]:
    """Split a simple system into its connected components and name each
    by Dynkin diagram shape, with B/C told apart by relative root length.
    Factors come back sorted by decreasing rank (letters break ties)."""
    sims = [_vec(s) for s in simples]
    if not sims:
        return ()
    n = len(sims)
    seen: set[int] = set()
    comps: list[list[Vec]] = []
    for i in range(n):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in range(n):
                if b not in seen and dot(sims[a], sims[b]) != 0:
                    seen.add(b)
                    stack.append(b)
        comps.append([sims[c] for c in comp])
    factors = [_classify_component(c) for c in comps]
    factors.sort(key=lambda f: (-f.rank, tuple(-ord(ch) for ch in f.letter)))
    return tuple(factors)


# ---------------------------------------------------------------------------
# subsystems


@dataclass(frozen=True)
class Subsystem:
    """A closed subsystem of an ambient realization, with its simple
    system and classified factors."""

    roots: frozenset[Vec]
    simples: tuple[Vec, ...]
    factors: tuple[Factor, ...]

    @property
    def type_str(self) -> str:
        return format_cartan_type((f.letter, f.rank) for f in self.factors)

    @property
    def rank(self) -> int:
        return len(self.simples)

    def factor_roots(self, factor: Factor) -> frozenset[Vec]:
        return frozenset(r for r in self.roots
                         if span_coefficients(factor.simples, r) is not None)


def _extract_subsystem(rs: RootSystem, member) -> Subsystem:
    roots = frozenset(r for r in rs.roots if member(r))
    pos = [r for r in roots if dot(rs.positivity_vec, r) > 0]
    pos_set = set(pos)
    simples = []
    for a in pos:
        if not any(vsub(a, b) in pos_set for b in pos if b != a):
            simples.append(a)
    simples.sort()
    return Subsystem(roots, tuple(simples), classify(simples))


def integral_subsystem(rs: RootSystem, lam) -> Subsystem:
    """Roots pairing integrally with the character under the ambient dot
    product.  Integrality is linear, so the set is closed and forms a
    root subsystem."""
    lamv = _coords(lam)
    return _extract_subsystem(rs, lambda r: dot(lamv, r).denominator == 1)


def zero_levi(rs: RootSystem, lam) -> Subsystem:
    """Roots orthogonal to the character: a Levi subsystem."""
    lamv = _coords(lam)
    return _extract_subsystem(rs, lambda r: dot(lamv, r) == 0)


# ---------------------------------------------------------------------------
# characters


def lambda_from_wdd(rs: RootSystem, labels: Sequence[int]) -> InfinitesimalCharacter:
    """The character lambda = h/2 for the semisimple element h of a
    standard triple with the given simple-root labels: the unique vector
    in the span of the simple coroots with (alpha_i, lambda) = d_i/2
    under the evaluation pairing of the realization."""
    if len(labels) != rs.rank:
        raise ValueError("label count does not match the rank")
    cartan = [[2 * dot(si, sj) / dot(sj, sj) for sj in rs.simple_roots]
              for si in rs.simple_roots]
    coeffs = solve_linear(cartan, [Fraction(d) for d in labels])
    h = (Fraction(0),) * rs.ambient_dim
    for c, s in zip(coeffs, rs.simple_roots):
        h = vadd(h, vscale(2 * c / dot(s, s), s))
    return InfinitesimalCharacter(vscale(HALF, h))


def lambda_from_partition(fam: ClassicalFamily, p: Partition) -> InfinitesimalCharacter:
    """Character of a classical orbit from its partition: each row r
    contributes the halved sl2 weights (r-1)/2, ..., -(r-1)/2 on the
    natural module; the dominant representative keeps the rank largest
    nonnegative entries."""
    if not is_valid(p, fam):
        raise ValueError(f"{p} is not a valid {fam.letter}-partition")
    weights: list[Fraction] = []
    for row in p.parts:
        weights += [Fraction(row - 1, 2) - k for k in range(row)]
    nonneg = sorted((w for w in weights if w >= 0), reverse=True)
    return InfinitesimalCharacter(tuple(nonneg[: fam.rank]))


def wdd_labels(rs: RootSystem, h: Vec) -> tuple[int, ...]:
    """Simple-root evaluations of a dominant semisimple element."""
    out = []
    for s in rs.simple_roots:
        v = dot(s, h)
        if v.denominator != 1:
            raise ValueError(f"non-integral label {v}")
        out.append(int(v))
    return tuple(out)


def dominantize(rs: RootSystem, v: Vec) -> Vec:
    """The dominant Weyl-chamber representative of a vector."""
    v = _vec(v)
    while True:
        for s in rs.simple_roots:
            d = dot(s, v)
            if d < 0:
                v = vsub(v, vscale(2 * d / dot(s, s), s))
                break
        else:
            return v


def regular_h(factor: Factor) -> Vec:
    """Semisimple element of a principal triple of the factor: every
    simple-root label equals 2."""
    cartan = [[Fraction(2 * dot(si, sj), dot(sj, sj)) for sj in factor.simples]
              for si in factor.simples]
    coeffs = solve_linear(cartan, [Fraction(2)] * factor.rank)
    h = vscale(0, factor.simples[0])
    for c, s in zip(coeffs, factor.simples):
        h = vadd(h, vscale(2 * c / dot(s, s), s))
    return h


def factor_h_from_labels(factor: Factor, labels: Sequence[int]) -> Vec:
    """Semisimple element in the factor's span with the given simple-root
    labels, transferred through the Cartan matrix so that root lengths of
    the embedding do not matter."""
    cartan = [[Fraction(2 * dot(si, sj), dot(sj, sj)) for sj in factor.simples]
              for si in factor.simples]
    coeffs = solve_linear(cartan, [Fraction(d) for d in labels])
    h = vscale(0, factor.simples[0])
    for c, s in zip(coeffs, factor.simples):
        h = vadd(h, vscale(2 * c / dot(s, s), s))
    return h


def levi_saturation_wdd(rs: RootSystem, levi_simples: Iterable[Vec]) -> tuple[int, ...]:
    """Weighted diagram of the ambient orbit through a regular nilpotent
    of the Levi with the given simple system (its Bala-Carter saturation)."""
    h = (Fraction(0),) * rs.ambient_dim
    for f in classify(levi_simples):
        h = vadd(h, regular_h(f))
    return wdd_labels(rs, dominantize(rs, h))
