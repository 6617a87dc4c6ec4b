import itertools

import pytest
from hypothesis import given

from biqp.errors import DomainError, UndefinedSpanError
from biqp.oracle import naive_borders, naive_occurrences
from biqp.overlaps import border_spans, f_table, is_proper, k_overlap, occ, overlap

from conftest import Q, R, words

QR_TABLE = {
    (0, 0): 0, (0, 1): -2, (0, 3): 0,
    (1, 0): 3, (1, 1): 1, (1, 3): 3,
    (3, 0): 3, (3, 1): 1, (3, 3): 3,
}


@pytest.mark.parametrize("q, spans", [(Q, (0, 1, 3)), ("aaa", (0, 1, 2)), ("ab", (0,)), ("a", (0,))])
def test_border_spans(q, spans):
    assert border_spans(q) == spans


@given(words(1, 12))
def test_border_spans_match_naive(q):
    assert list(border_spans(q)) == naive_borders(q)


def test_overlap_examples():
    assert overlap("aaa", 1) == "aaaaa"
    assert overlap(Q, 0) == Q + Q
    assert overlap(Q, 3) == "abaababaababa"
    with pytest.raises(UndefinedSpanError):
        overlap(Q, 2)


def test_k_overlap_examples():
    v = k_overlap(Q, [1, 0])
    assert len(v) == 23
    assert naive_occurrences(Q, v) == [0, 7, 15]
    assert k_overlap("aa", [1, 1]) == "aaaa"
    assert k_overlap(Q, []) == Q
    with pytest.raises(UndefinedSpanError):
        k_overlap(Q, [0, 5])


def test_is_proper_examples():
    assert not is_proper("aaa", [1])
    assert is_proper(Q, [1])
    assert is_proper("ab", [0])


def test_occ_examples():
    assert occ(Q, R, 0) == 3
    assert occ(Q, R, 1) == 5
    assert occ(Q, R, 3) == 3
    assert occ(Q, R, 2) is None
    assert occ("aab", "abb", 0) is None


@pytest.mark.parametrize("q, r", [("ab", "abc"), ("ab", "ab"), ("", "")])
def test_couple_guard(q, r):
    with pytest.raises(DomainError):
        occ(q, r, 0)
    with pytest.raises(DomainError):
        f_table(q, r)


def test_reference_table():
    t = f_table(Q, R)
    assert t.f == QR_TABLE
    assert t.domain == [0, 1, 3]
    assert t(0, 1) == -2 and t(2, 0) is None


def test_small_tables():
    assert f_table("ab", "ba").f == {(0, 0): 0}
    assert f_table("aab", "abb").f == {}


def test_table_serialization():
    d = f_table(Q, R).as_dict()
    assert d["spans"] == [0, 1, 3]
    assert d["occ"] == {"0": 3, "1": 5, "3": 3}
    assert {(e["m"], e["n"]): e["value"] for e in d["f"]} == QR_TABLE


def test_table_format_marks_undefined():
    text = f_table("aab", "abb").format().splitlines()
    assert text[1].split() == ["0", "."]


def _naive_occ(q, r, m):
    v = q + q[m:]
    if len(naive_occurrences(q, v)) != 2:
        return None
    hits = naive_occurrences(r, v)
    return hits[0] if len(hits) == 1 else None


@given(words(1, 8).flatmap(lambda q: words(len(q), len(q)).map(lambda r: (q, r))))
def test_occ_matches_naive(pair):
    q, r = pair
    if q == r:
        return
    for m in naive_borders(q):
        assert occ(q, r, m) == _naive_occ(q, r, m)


@given(words(2, 9).flatmap(lambda q: words(len(q), len(q)).map(lambda r: (q, r))))
def test_sum_identity_and_diagonal(pair):
    q, r = pair
    if q == r:
        return
    t = f_table(q, r)
    for m in t.domain:
        assert t(m, m) == m
    for k in (2, 3, 4):
        for s in itertools.product(t.domain, repeat=k):
            assert sum(s) == sum(t(s[i], s[(i + 1) % k]) for i in range(k))
