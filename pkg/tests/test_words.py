import pytest
from hypothesis import given
from hypothesis import strategies as st

from biqp.errors import DomainError
from biqp.oracle import naive_occurrences
from biqp.words import (
    BiWord,
    alphabet,
    bi_factor_set,
    bi_window,
    border_array,
    canonical_triple,
    check_word,
    factors,
    is_primitive,
    least_rotation,
    letter_at,
    occurrences,
    padded_window,
    primitive_root,
    special_status,
)

from conftest import TWO_CHAINS, words


def test_check_word():
    assert check_word("abc") == "abc"
    assert check_word("") == ""
    with pytest.raises(DomainError):
        check_word("", nonempty=True)
    with pytest.raises(DomainError, match="'A'"):
        check_word("aAb")
    with pytest.raises(DomainError):
        check_word(3)


def test_alphabet_bounds():
    assert alphabet(2) == "ab"
    with pytest.raises(DomainError):
        alphabet(0)
    with pytest.raises(DomainError):
        alphabet(27)


@pytest.mark.parametrize(
    "u, w, expected",
    [
        # the naive scan also finds the occurrence at 3 (abaaba overlaps twice)
        ("aba", "abaababaabaaba", [0, 3, 5, 8, 11]),
        ("aa", "bbb", []),
        ("a", "aaa", [0, 1, 2]),
        ("abc", "ab", []),
    ],
)
def test_occurrences_examples(u, w, expected):
    assert occurrences(u, w) == expected
    assert naive_occurrences(u, w) == expected


def test_occurrences_rejects_empty_pattern():
    with pytest.raises(DomainError):
        occurrences("", "abc")


@given(words(1, 5, "abc"), words(0, 16, "abc"))
def test_kmp_matches_naive(u, w):
    assert occurrences(u, w) == naive_occurrences(u, w)


def test_kmp_exhaustive_small():
    from itertools import product

    pool = ["".join(p) for n in range(0, 9) for p in product("ab", repeat=n)]
    for u in pool[1:31]:
        for w in pool:
            assert occurrences(u, w) == naive_occurrences(u, w)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=12))
def test_border_array_on_integer_sequences(seq):
    b = border_array(seq)
    for i, k in enumerate(b):
        pre = seq[: i + 1]
        assert k < len(pre) or len(pre) == 1
        assert pre[:k] == pre[len(pre) - k:]
        assert all(pre[:j] != pre[len(pre) - j:] for j in range(k + 1, len(pre)))


@pytest.mark.parametrize(
    "w, n, expected",
    [("abaaba", 5, {"abaab", "baaba"}), ("abc", 0, {""}), ("aaaa", 2, {"aa"}), ("ab", 3, set())],
)
def test_factors(w, n, expected):
    assert factors(w, n) == expected


def test_primitive_helpers():
    assert primitive_root("abab") == "ab"
    assert primitive_root("aba") == "aba"
    assert is_primitive("aab") and not is_primitive("aaa")
    assert least_rotation("baa") == "aab"
    assert primitive_root((1, 2, 1, 2)) == (1, 2)


def test_special_status():
    fib3 = {"aba", "baa", "aab", "bab"}
    fib2 = {"ab", "ba", "aa"}
    st_a = special_status(fib2, "a")
    assert st_a.right_special and st_a.successors == {"aa", "ab"}
    assert not special_status(fib2, "b").right_special
    assert special_status(fib3, "ba").right_special
    unary = special_status({"aa"}, "a")
    assert not unary.right_special and unary.successors == {"aa"}
    assert special_status({"aa"}, "b").successors == frozenset()


def test_letter_at_and_windows():
    w = BiWord.parse("ba||ab")
    assert letter_at(w, 0) == "a"
    assert letter_at(w, -1) == "a"
    assert letter_at(BiWord.parse(TWO_CHAINS), 3) == "a"
    assert bi_window(BiWord.periodic("ab"), -2, 1) == "abab"
    assert bi_window(BiWord.parse("b|a|b"), 0, 0) == "a"
    assert bi_window(BiWord.parse(TWO_CHAINS), 0, 7) == "abaababa"
    assert bi_window(BiWord.parse(TWO_CHAINS), -7, -1) == "baababa"
    with pytest.raises(DomainError):
        bi_window(w, 3, 0)


def test_bi_factor_set():
    assert bi_factor_set(BiWord.periodic("a"), 3) == {"aaa"}
    assert bi_factor_set(BiWord.periodic("ab"), 2) == {"ab", "ba"}
    assert bi_factor_set(BiWord.parse(TWO_CHAINS), 2) == {"ab", "ba", "aa"}
    with pytest.raises(DomainError):
        bi_factor_set(BiWord.periodic("a"), 0)


def test_biword_parse_errors():
    for bad in ["ab|a", "|a|b", "a|b|", "a|B|b", "a|b|c|d"]:
        with pytest.raises(DomainError):
            BiWord.parse(bad)


def test_biword_equality_up_to_translation():
    assert BiWord.parse("ab||ab") == BiWord.parse("ba|b|ab")
    assert BiWord.parse("abab|a|ba") == BiWord.periodic("ab")
    assert BiWord.parse("a|b|a") != BiWord.parse("a|bb|a")
    assert BiWord.parse(TWO_CHAINS).normalized() == BiWord.parse(TWO_CHAINS)
    assert BiWord.periodic("aba").is_periodic()
    assert not BiWord.parse(TWO_CHAINS).is_periodic()
    assert len({BiWord.parse("a|b|a"), BiWord.parse("aa|ab|a")}) == 1


def test_canonical_triple_on_tuples():
    left, center, right, _ = canonical_triple((7,), (5,), (8,))
    assert (left, center, right) == ((7,), (5,), (8,))
    assert canonical_triple((2, 2), (), (2,))[:3] == ((2,), (), (2,))


biwords = st.builds(BiWord, words(1, 3), words(0, 4), words(1, 3))


@given(biwords)
def test_normalized_is_idempotent_and_equal(w):
    n = w.normalized()
    assert n == w
    assert n.normalized() == n
    assert str(n.normalized()) == str(n)


@given(biwords, st.integers(-6, 6))
def test_normalized_spells_same_word(w, probe):
    # the canonical form is a translate: some shift maps one onto the other
    _, _, _, shift = canonical_triple(w.left, w.center, w.right)
    n = w.normalized()
    assert letter_at(n, probe) == letter_at(w, probe + shift)


@given(biwords, st.integers(1, 6))
def test_factor_set_saturates(w, n):
    big = w.left * 6 + w.center + w.right * 6
    assert bi_factor_set(w, n) == factors(big, n)
    assert padded_window(w, n)[1] < 0
