import pytest
from hypothesis import given, strategies as st

from qtknots.coeff import QT_RING, q, t, to_intpoly
from qtknots.errors import InvalidInputError
from qtknots.partitions import (
    Partition, cell_stats, conjugate, dominance_leq, eta, format_partition, hook, hook_arm_leg, hook_lengths,
    horizontal_strips, iota, parse_partition, partitions_of, qt_invariants, vertical_strips, z_lambda,
)

partitions = st.integers(min_value=0, max_value=8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


class TestPartition:
    def test_trailing_zeros_are_dropped(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))

    @pytest.mark.parametrize("parts", [(1, 2), (2, -1)])
    def test_rejects_bad_parts(self, parts):
        with pytest.raises(InvalidInputError):
            Partition(parts)

    def test_accepts_text(self):
        assert Partition("3,2") == Partition((3, 2))
        assert Partition("1^2 3^1") == Partition((3, 1, 1))

    @pytest.mark.parametrize("parts", ["3,x", "2,3", ["a"], [None]])
    def test_rejects_non_integer_parts(self, parts):
        with pytest.raises(InvalidInputError):
            Partition(parts)

    def test_size_and_cells(self):
        mu = Partition((3, 1))
        assert mu.size == 4
        assert sorted(mu.cells()) == [(0, 0), (0, 1), (1, 0), (2, 0)]

    @given(partitions)
    def test_conjugation_is_an_involution(self, mu):
        assert conjugate(conjugate(mu)) == mu
        assert conjugate(mu).size == mu.size


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("3,2", (3, 2)),
            ("3 2", (3, 2)),
            ("[3,2]", (3, 2)),
            ("0", ()),
            ("1^2 3^1", (3, 1, 1)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_partition(text) == Partition(expected)

    @pytest.mark.parametrize("text", ["2,3", "a,b", "2^x"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidInputError):
            parse_partition(text)

    @given(partitions)
    def test_format_parses_back(self, mu):
        assert parse_partition(format_partition(mu)) == mu


class TestEnumeration:
    def test_partitions_of_four(self):
        assert partitions_of(4) == tuple(Partition(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])

    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (5, 7), (8, 22)])
    def test_counts(self, n, count):
        assert len(partitions_of(n)) == count

    def test_dominance(self):
        assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
        assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))

    def test_strips(self):
        assert vertical_strips(Partition((2, 1)), 1) == [Partition((2,)), Partition((1, 1))]
        assert horizontal_strips(Partition((2, 1)), 2) == [Partition((1,))]


class TestCellData:
    def test_hook(self):
        assert hook(2, 1) == Partition((3, 1))
        assert hook_arm_leg(Partition((3, 1, 1))) == (2, 2)
        with pytest.raises(InvalidInputError):
            hook_arm_leg(Partition((2, 2)))

    def test_eta_and_iota(self):
        assert eta(Partition((2, 1))) == 1
        assert eta(Partition((1, 1, 1))) == 3
        assert iota(Partition((3, 1))) == 2
        assert iota(hook(4, 2)) == 4

    def test_hook_lengths(self):
        assert sorted(hook_lengths(Partition((2, 1)))) == [1, 1, 3]

    def test_cell_stats(self):
        stats = cell_stats(Partition((2, 1)))
        assert stats["eta"] == 1 and stats["eta_conj"] == 1
        assert stats["cells"][(0, 0)].hook == 3

    def test_z_lambda(self):
        assert z_lambda(Partition((1, 1))) == 2
        assert z_lambda(Partition((2, 1, 1))) == 4


class TestQtInvariants:
    def test_row_of_two(self):
        inv = qt_invariants(Partition((2,)))
        assert inv.B == to_intpoly(1 + q)
        assert inv.T == to_intpoly(q)
        assert inv.Pi == to_intpoly(1 - q)
        assert inv.w == to_intpoly((q - t) * (1 - q ** 2) * (1 - t) * (1 - q))

    def test_empty_partition(self):
        inv = qt_invariants(Partition())
        assert inv.B == QT_RING.zero
        assert inv.Pi == QT_RING.one
