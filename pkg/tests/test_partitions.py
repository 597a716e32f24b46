import pytest
from hypothesis import given, strategies as st

from orbitcalc.partitions import (
    ClassicalFamily,
    Partition,
    collapse,
    dominates,
    enumerate_partitions,
    from_columns,
    is_valid,
    parse_partition,
    transpose,
    valid_partitions,
)


def families_of(n):
    fams = [ClassicalFamily("A", n)]
    if n % 2 == 1:
        fams.append(ClassicalFamily("B", n))
    else:
        fams.append(ClassicalFamily("C", n))
        fams.append(ClassicalFamily("D", n))
    return fams


def brute_collapse(p, fam):
    """Oracle: dominance-maximum over all valid partitions below p."""
    below = [q for q in enumerate_partitions(p.size) if is_valid(q, fam) and dominates(p, q)]
    assert below, f"no valid partition below {p} for {fam}"
    best = below[0]
    for q in below[1:]:
        if dominates(q, best):
            best = q
    # The maximum must be unique and comparable to everything below p.
    assert all(dominates(best, q) for q in below)
    return best


partitions_st = st.lists(st.integers(1, 9), min_size=0, max_size=9).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


class TestBasics:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 2])

    def test_strips_zeros(self):
        assert Partition([3, 2, 0, 0]).parts == (3, 2)

    @pytest.mark.parametrize(
        "p,t",
        [([3, 2, 2], [3, 3, 1]), ([1, 1, 1], [3]), ([7, 1, 1], [3, 1, 1, 1, 1, 1, 1])],
    )
    def test_transpose_examples(self, p, t):
        assert transpose(Partition(p)) == Partition(t)

    @given(partitions_st)
    def test_transpose_involution(self, p):
        assert transpose(transpose(p)) == p

    def test_transpose_involution_exhaustive(self):
        for n in range(0, 21):
            for p in enumerate_partitions(n):
                assert transpose(transpose(p)) == p

    @pytest.mark.parametrize(
        "cols,expect",
        [((2, 2), [2, 2]), ((4, 1, 1), [3, 1, 1, 1]), ((14, 1, 1), [3] + [1] * 13)],
    )
    def test_from_columns(self, cols, expect):
        assert from_columns(cols) == Partition(expect)

    def test_enumeration_counts(self):
        # p(n) for n = 0..12
        counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
        for n, c in enumerate(counts):
            assert len(enumerate_partitions(n)) == c


class TestValidity:
    @pytest.mark.parametrize(
        "p,fam,expect",
        [
            ([3, 2, 2], ("B", 7), True),
            ([4, 2, 1], ("B", 7), False),
            ([2, 1, 1, 1, 1], ("C", 6), True),
            ([3, 1, 1, 1], ("C", 6), False),
            ([5, 3, 1, 1, 1, 1], ("D", 12), True),
            ([4, 4, 2, 2], ("D", 12), True),
        ],
    )
    def test_examples(self, p, fam, expect):
        assert is_valid(Partition(p), ClassicalFamily(*fam)) is expect

    def test_size_mismatch_raises(self):
        with pytest.raises(ValueError):
            is_valid(Partition([3, 2]), ClassicalFamily("B", 7))


class TestCollapse:
    @pytest.mark.parametrize(
        "p,fam,expect",
        [
            ([4, 2, 1], ("B", 7), [3, 3, 1]),
            ([3, 1], ("C", 4), [2, 2]),
            ([3, 3, 1], ("B", 7), [3, 3, 1]),
            ([14, 1, 1], ("D", 16), [13, 1, 1, 1]),
        ],
    )
    def test_examples(self, p, fam, expect):
        got = collapse(Partition(p), ClassicalFamily(*fam))
        assert got == Partition(expect)
        assert got == brute_collapse(Partition(p), ClassicalFamily(*fam))

    def test_agrees_with_oracle_up_to_12(self):
        for n in range(1, 13):
            for fam in families_of(n):
                if fam.letter == "A":
                    continue
                for p in enumerate_partitions(n):
                    assert collapse(p, fam) == brute_collapse(p, fam), (p, fam)

    def test_fixpoint_iff_valid(self):
        for n in range(1, 13):
            for fam in families_of(n):
                for p in enumerate_partitions(n):
                    assert (collapse(p, fam) == p) == is_valid(p, fam)

    def test_dominance_monotone(self):
        for n in range(1, 11):
            for fam in families_of(n):
                if fam.letter == "A":
                    continue
                ps = enumerate_partitions(n)
                for p in ps:
                    for q in ps:
                        if dominates(q, p):
                            assert dominates(collapse(q, fam), collapse(p, fam))


class TestParsing:
    @pytest.mark.parametrize(
        "text,parts",
        [
            ("[3,2,2]", (3, 2, 2)),
            ("[3, 2, 2]", (3, 2, 2)),
            ("[1^4]", (1, 1, 1, 1)),
            ("[2^21^6]", (2, 2, 1, 1, 1, 1, 1, 1)),
            ("[93^21]", (9, 3, 3, 1)),
            ("[711]", (7, 1, 1)),
            ("[11,1]", (11, 1)),
            ("[13,1^3]", (13, 1, 1, 1)),
            ("[53^21]", (5, 3, 3, 1)),
        ],
    )
    def test_rows(self, text, parts):
        assert parse_partition(text).parts == parts

    def test_columns(self):
        assert parse_partition("(2,2)") == Partition([2, 2])
        assert parse_partition("(4,1,1)") == Partition([3, 1, 1, 1])

    def test_roundtrip(self):
        for n in range(0, 13):
            for p in enumerate_partitions(n):
                assert parse_partition(repr(p)) == p
                assert parse_partition(p.exp_str()) == p


def test_valid_partitions_counts():
    # Orbit counts: so(7) has 7 orbits, sp(6) has 8, so(8) has 10
    # partition classes (very even ones not yet doubled).
    assert len(valid_partitions(ClassicalFamily("B", 7))) == 7
    assert len(valid_partitions(ClassicalFamily("C", 6))) == 8
    assert len(valid_partitions(ClassicalFamily("D", 8))) == 10
