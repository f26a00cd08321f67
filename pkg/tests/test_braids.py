import math

import pytest
from hypothesis import given

from knotrecon.braids import (
    TABLE_BRAIDS,
    BraidWord,
    braid_closure,
    braid_permutation,
    format_braid_word,
    parse_braid_word,
    table_braid,
    torus_braid,
    torus_seifert_genus,
)
from knotrecon.diagram import component_count, is_connected, is_positive, writhe
from knotrecon.errors import DegenerateParameters, GeneratorOutOfRange, MalformedWord

from conftest import braids, permutation_cycles


class TestParsing:
    def test_basic(self):
        b = parse_braid_word("3 | 1 -2 1 -2")
        assert b == BraidWord(3, (1, -2, 1, -2))
        assert format_braid_word(b) == "3 | 1 -2 1 -2"

    def test_empty_word(self):
        assert parse_braid_word("4 |") == BraidWord(4, ())
        assert format_braid_word(BraidWord(4, ())) == "4 | "

    def test_commas_allowed(self):
        assert parse_braid_word("2 | 1, 1, 1") == BraidWord(2, (1, 1, 1))

    @pytest.mark.parametrize("text", ["1 1 1", "two | 1", "2 | 1 a", "| 1"])
    def test_malformed(self, text):
        with pytest.raises(MalformedWord):
            parse_braid_word(text)

    @pytest.mark.parametrize("text", ["2 | 2", "3 | 1 0", "3 | -3"])
    def test_out_of_range(self, text):
        with pytest.raises(GeneratorOutOfRange):
            parse_braid_word(text)

    def test_zero_strands(self):
        with pytest.raises(MalformedWord):
            BraidWord(0, ())

    @given(braids())
    def test_roundtrip(self, b):
        assert parse_braid_word(format_braid_word(b)) == b


class TestClosure:
    def test_crossing_count_and_signs(self):
        b = BraidWord(3, (1, -2, 2, 1))
        d = braid_closure(b)
        assert d.c == 4
        assert d.signs == (1, -1, 1, 1)

    def test_trivial_braid(self):
        d = braid_closure(BraidWord(3, ()))
        assert d.c == 0 and d.free_loops == 3

    def test_untouched_strand_is_free_loop(self):
        d = braid_closure(BraidWord(4, (1, 1, 1)))
        assert d.free_loops == 2
        assert component_count(d) == 3

    @given(braids())
    def test_components_match_permutation(self, b):
        assert component_count(braid_closure(b)) == permutation_cycles(b)

    @given(braids())
    def test_writhe_is_exponent_sum(self, b):
        assert writhe(braid_closure(b)) == sum(1 if v > 0 else -1 for v in b.letters)

    @given(braids())
    def test_connected_iff_full(self, b):
        assert is_connected(braid_closure(b)) == (b.is_full or (b.strands == 1))

    def test_permutation(self):
        assert braid_permutation(BraidWord(3, (1, 2))) == [1, 2, 0]


class TestFamilies:
    def test_torus_word(self):
        assert torus_braid(2, 3) == BraidWord(2, (1, 1, 1))
        assert torus_braid(3, 2) == BraidWord(3, (1, 2, 1, 2))

    @pytest.mark.parametrize("p,q", [(2, 3), (2, 4), (3, 3), (3, 4), (4, 6), (5, 3)])
    def test_torus_components(self, p, q):
        d = braid_closure(torus_braid(p, q))
        assert component_count(d) == math.gcd(p, q)
        assert is_positive(d)
        assert d.c == (p - 1) * q

    @pytest.mark.parametrize("p,q", [(1, 3), (3, 1), (0, 0), (-2, 3)])
    def test_degenerate(self, p, q):
        with pytest.raises(DegenerateParameters):
            torus_braid(p, q)

    def test_genus(self):
        assert torus_seifert_genus(2, 3) == 1
        assert torus_seifert_genus(3, 4) == 3
        with pytest.raises(DegenerateParameters):
            torus_seifert_genus(2, 4)

    def test_table(self):
        for name, b in TABLE_BRAIDS.items():
            d = braid_closure(b)
            assert component_count(d) == 1, name
            assert d.c == max(len(b), 0)
        assert table_braid("4_1") == BraidWord(3, (1, -2, 1, -2))
        with pytest.raises(DegenerateParameters):
            table_braid("9_42")

    def test_mirror(self):
        assert BraidWord(3, (1, -2)).mirror() == BraidWord(3, (-1, 2))
