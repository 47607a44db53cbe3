from math import comb

import pytest

from mzv_utilities.common import DomainError, IndexParseError
from mzv_utilities.index_core import (
    all_indices,
    classify,
    dagger,
    format_index,
    hoffman_dual,
    indices_of_weight,
    is_admissible,
    make_index,
    oplus,
    parse_index,
    raise_last,
    render_index,
    reverse,
)


def block_dagger(k):
    """Run-length oracle for the dual index

    Write k = ({1}^{a_1 - 1}, b_1 + 1, ..., {1}^{a_s - 1}, b_s + 1); then
    k† = ({1}^{b_s - 1}, a_s + 1, ..., {1}^{b_1 - 1}, a_1 + 1).
    """
    blocks = []
    ones_seen = 0
    for c in k:
        if c == 1:
            ones_seen += 1
        else:
            blocks.append((ones_seen + 1, c - 1))
            ones_seen = 0
    dual = []
    for a, b in reversed(blocks):
        dual.extend([1] * (b - 1))
        dual.append(a + 1)
    return tuple(dual)


def block_hoffman_dual(k):
    """Oracle by runs: a component c >= 2 becomes c - 1 new cuts, runs of 1s merge"""
    separators = []
    for position, c in enumerate(k):
        if position:
            separators.append("+")
        separators.extend([","] * (c - 1))
    parts = [1]
    for separator in separators:
        if separator == "+":
            parts[-1] += 1
        else:
            parts.append(1)
    return tuple(parts)


class TestParseIndex:
    def test_reads_components(self):
        "Show that `parse_index` reads comma-separated components"
        assert parse_index("1,2") == (1, 2)
        assert parse_index(" 3 , 1 ,2 ") == (3, 1, 2)

    def test_empty_forms(self):
        "Show that the empty string and the rendered empty index parse to ()"
        assert parse_index("") == ()
        assert parse_index("()") == ()

    @pytest.mark.parametrize("text,token", [("3,0", "0"), ("1,-2", "-2")])
    def test_rejects_small_components(self, text, token):
        "Show that zero and negative components are rejected, naming the token"
        with pytest.raises(IndexParseError) as excinfo:
            parse_index(text)
        assert excinfo.value.token == token
        assert "component must be ≥ 1" in str(excinfo.value)

    def test_rejects_non_numeric_tokens(self):
        "Show that a non-numeric token is named in the error"
        with pytest.raises(IndexParseError) as excinfo:
            parse_index("1,x,2")
        assert excinfo.value.token == "x"
        assert excinfo.value.info == {"token": "x"}

    def test_parse_format_round_trip(self, fake, random_index):
        "Show that parsing the canonical text form gives back the index"
        for _ in range(50):
            k = random_index(fake.pyint(min_value=1, max_value=12))
            assert parse_index(format_index(k)) == k


def test_render_index():
    "Show the report form of indices"
    assert render_index((1, 2)) == "(1,2)"
    assert render_index(()) == "()"
    assert format_index(()) == ""


def test_make_index_rejects_zero():
    with pytest.raises(DomainError):
        make_index([2, 0])


def test_classify():
    "Show weight, depth and admissibility"
    assert classify((1, 2)) == {"weight": 3, "depth": 2, "admissible": True}
    assert classify((1, 1)) == {"weight": 2, "depth": 2, "admissible": False}
    assert classify(()) == {"weight": 0, "depth": 0, "admissible": True}


class TestDagger:
    @pytest.mark.parametrize(
        "k,expected", [((2,), (2,)), ((3,), (1, 2)), ((1, 2), (3,)), ((), ())]
    )
    def test_examples(self, k, expected):
        assert dagger(k) == expected

    def test_rejects_non_admissible(self):
        with pytest.raises(DomainError):
            dagger((2, 1))

    def test_laws(self):
        "Show the dual is an involution that agrees with the block oracle"
        for k in all_indices(10, min_weight=1, admissible_only=True):
            dual = dagger(k)
            assert dagger(dual) == k
            assert sum(dual) == sum(k)
            assert len(dual) == sum(k) - len(k)
            assert dual == block_dagger(k)

    def test_involution_weight_12(self, fake, random_index):
        for _ in range(200):
            k = random_index(fake.pyint(min_value=2, max_value=12), admissible=True)
            assert is_admissible(k)
            assert dagger(dagger(k)) == k


class TestHoffmanDual:
    @pytest.mark.parametrize(
        "k,expected",
        [((1,), (1,)), ((2, 1), (1, 2)), ((2,), (1, 1)), ((1, 1, 1), (3,))],
    )
    def test_examples(self, k, expected):
        assert hoffman_dual(k) == expected

    def test_depth_one_gives_ones(self):
        for c in range(1, 8):
            assert hoffman_dual((c,)) == (1,) * c

    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            hoffman_dual(())

    def test_laws(self):
        "Show involution, weight preservation and agreement with the run oracle"
        for k in all_indices(10, min_weight=1):
            dual = hoffman_dual(k)
            assert hoffman_dual(dual) == k
            assert sum(dual) == sum(k)
            assert len(dual) == sum(k) + 1 - len(k)
            assert dual == block_hoffman_dual(k)


def test_bridge_identity():
    "Show that dagger(P(l)) = P(R(l^∨)) for every nonempty l of weight <= 10"
    for l in all_indices(10, min_weight=1):
        assert dagger(raise_last(l)) == raise_last(reverse(hoffman_dual(l)))


def test_reverse_and_raise_last():
    assert reverse((1, 2)) == (2, 1)
    assert reverse((3,)) == (3,)
    assert reverse(()) == ()
    assert raise_last((1, 1)) == (1, 2)
    assert raise_last((2,)) == (3,)
    with pytest.raises(DomainError):
        raise_last(())


def test_oplus():
    assert oplus((1, 2), (0, 1)) == (1, 3)
    assert oplus((2,), (0,)) == (2,)
    with pytest.raises(DomainError) as excinfo:
        oplus((1, 2), (1,))
    assert "depths differ" in str(excinfo.value)


class TestEnumeration:
    def test_counts(self):
        "Show there are 2^(w-1) indices of weight w and binom(w-1, r-1) of depth r"
        for w in range(1, 11):
            assert len(list(indices_of_weight(w))) == 2 ** (w - 1)
            for r in range(1, w + 1):
                assert len(list(indices_of_weight(w, r))) == comb(w - 1, r - 1)

    def test_order(self):
        "Show index order: depth ascending, then components ascending"
        assert list(indices_of_weight(3)) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
        assert list(indices_of_weight(0)) == [()]

    def test_all_indices_filters(self):
        assert list(all_indices(3, min_weight=1, admissible_only=True)) == [
            (2,),
            (3,),
            (1, 2),
        ]
        assert list(all_indices(3, min_weight=3, max_depth=2)) == [(3,), (1, 2), (2, 1)]
