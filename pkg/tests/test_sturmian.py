import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biqp.errors import DomainError, NeedsLongerDirectiveError
from biqp.sturmian import (
    SturmLang,
    _factor_counts,
    bispecial_factors,
    characteristic_prefix,
    factor_set,
    qp_by_oracle,
    rauzy_graph,
    shortest_bispecial_at_least,
    special_factors,
    sturmian_quasiperiods,
    windowed_qp_oracle,
)
from biqp.words import factors

from conftest import words

FIB = SturmLang.fibonacci()


def test_directive_validation():
    assert SturmLang.parse("1,2,3").directive == (1, 2, 3)
    for bad in [(), (0, 1), (1, -2)]:
        with pytest.raises(DomainError):
            SturmLang(bad)
    with pytest.raises(DomainError):
        SturmLang.parse("1,x")


def test_characteristic_prefix():
    assert characteristic_prefix(FIB, 13) == "abaababaabaab"
    assert characteristic_prefix(SturmLang((2, 2, 2)), 5) == "aabaa"
    assert characteristic_prefix(SturmLang((3,)), 1) == "a"
    short = SturmLang((1, 1))
    with pytest.raises(NeedsLongerDirectiveError):
        characteristic_prefix(short, short.max_prefix + 1)


def test_factor_sets():
    assert factor_set(FIB, 1) == {"a", "b"}
    assert factor_set(FIB, 2) == {"ab", "ba", "aa"}
    assert factor_set(FIB, 3) == {"aba", "baa", "aab", "bab"}
    assert factor_set(FIB, 0) == {""}
    with pytest.raises(NeedsLongerDirectiveError):
        factor_set(SturmLang((1, 1)), 10)


def test_max_valid_n_is_certified():
    lang = SturmLang.fibonacci(8)
    n = lang.max_valid_n
    assert n == 35
    assert len(factor_set(lang, n)) == n + 1
    with pytest.raises(NeedsLongerDirectiveError):
        factor_set(lang, n + 1)


@given(words(0, 24, "abc"))
def test_factor_counts_match_enumeration(w):
    assert _factor_counts(w) == [len(factors(w, n)) for n in range(len(w) + 1)]


def test_bispecial_factors():
    assert bispecial_factors(FIB, 12) == ["", "a", "aba", "abaaba", "abaababaaba"]
    assert bispecial_factors(FIB, 0) == [""]
    assert bispecial_factors(SturmLang((2,) * 8), 4) == ["", "a", "aa"]
    assert shortest_bispecial_at_least(FIB, 4) == "abaaba"
    with pytest.raises(DomainError):
        bispecial_factors(FIB, -1)


def test_special_factors_are_unique():
    for n in range(0, 20):
        right, left = special_factors(FIB, n)
        assert len(right) == len(left) == n
        assert right == left[::-1]  # the Fibonacci language is closed under reversal


def test_quasiperiod_examples():
    assert sturmian_quasiperiods(FIB, 1) == set()
    assert sturmian_quasiperiods(FIB, 4) == set()
    assert sturmian_quasiperiods(FIB, 5) == {"abaab", "baaba"}
    assert sturmian_quasiperiods(FIB, 8) == {"abaababa", "baababaa", "aababaab", "ababaaba"}
    with pytest.raises(DomainError):
        sturmian_quasiperiods(FIB, 0)


def test_windowed_oracle_examples():
    assert windowed_qp_oracle(FIB, "aba")
    assert not windowed_qp_oracle(FIB, "ab")
    assert not windowed_qp_oracle(FIB, "bb")


def test_rauzy_graph_examples():
    g = rauzy_graph(FIB, 1)
    assert g.vertices == ("a", "b") and g.right_special == "a"
    g = rauzy_graph(FIB, 2)
    assert set(g.vertices) == {"aa", "ab", "ba"}
    assert (g.right_special, g.left_special, g.decomposition) == ("ba", "ab", (2, 1, 0))
    g = rauzy_graph(FIB, 5)
    assert len(g.vertices) == 6
    assert [v for v in g.vertices if len(g.successors(v)) == 2] == [g.right_special]
    assert g.decomposition == (2, 1, 3)
    assert g.to_dot().startswith("digraph rauzy_5 {")
    assert g.as_dict()["decomposition"] == {"k": 2, "l": 1, "m": 3}
    with pytest.raises(DomainError):
        rauzy_graph(FIB, 0)


DIRECTIVES = [(1,) * 12, (2,) * 8, (1, 2) * 5, (3, 1, 2) * 3, (1, 4, 1, 1) * 2, (5, 1) * 3]


def _lengths(lang, top=26):
    out = []
    for n in range(1, top):
        try:
            sturmian_quasiperiods(lang, n)
            qp_by_oracle(lang, n)
        except NeedsLongerDirectiveError:
            break
        out.append(n)
    return out


@pytest.mark.parametrize("directive", DIRECTIVES)
def test_bispecial_rule_matches_oracle(directive):
    lang = SturmLang(directive)
    lengths = _lengths(lang)
    assert len(lengths) >= 10
    for n in lengths:
        assert sturmian_quasiperiods(lang, n) == qp_by_oracle(lang, n)


@pytest.mark.parametrize("directive", DIRECTIVES)
def test_rauzy_shape(directive):
    lang = SturmLang(directive)
    for n in _lengths(lang):
        g = rauzy_graph(lang, n)
        k, l, m = g.decomposition
        assert k + l + m == n + 1
        assert len(g.vertices) == n + 1 and len(g.edges) == n + 2
        # quasiperiods exist exactly when neither side path is empty
        assert bool(sturmian_quasiperiods(lang, n)) == (min(l, m) >= 1)


@settings(max_examples=25)
@given(st.lists(st.integers(1, 4), min_size=6, max_size=8), st.integers(1, 12))
def test_random_directives_agree_with_oracle(directive, n):
    lang = SturmLang(tuple(directive))
    try:
        want = qp_by_oracle(lang, n)
        got = sturmian_quasiperiods(lang, n)
    except NeedsLongerDirectiveError:
        return
    assert got == want
    assert all(len(q) == n for q in got)
