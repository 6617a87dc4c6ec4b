"""Overlaps of a word with itself and the relation table between two words.

An overlap of ``q`` with span ``m`` is the word of length ``2|q| - m`` that
starts and ends with ``q``; it exists exactly when ``m`` is 0 or the length
of a proper border of ``q``.  Splicing further copies gives k-overlaps.  An
overlap is *proper* when it contains no occurrence of ``q`` besides the
spliced copies.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, UndefinedSpanError
from .words import border_array, check_word, occurrences


def border_spans(q: str) -> tuple[int, ...]:
    """Spans for which an overlap of ``q`` exists: 0 and every proper border length."""
    check_word(q, nonempty=True)
    spans = []
    b = border_array(q)[-1]
    fail = border_array(q)
    while b:
        spans.append(b)
        b = fail[b - 1]
    spans.append(0)
    return tuple(reversed(spans))


def _check_spans(q: str, spans: Sequence[int], allowed=None) -> None:
    if allowed is None:
        allowed = set(border_spans(q))
    for m in spans:
        if m not in allowed:
            raise UndefinedSpanError(f"{q!r} has no overlap of span {m}")


def overlap(q: str, m: int) -> str:
    _check_spans(q, [m])
    return q + q[m:]


def k_overlap(q: str, spans: Sequence[int]) -> str:
    _check_spans(q, spans)
    return q + "".join(q[m:] for m in spans)


def is_proper(q: str, spans: Sequence[int]) -> bool:
    return len(occurrences(q, k_overlap(q, spans))) == len(spans) + 1


def _check_couple(q: str, r: str) -> None:
    check_word(q, nonempty=True)
    check_word(r, nonempty=True)
    if len(q) != len(r):
        raise DomainError(f"words must have the same length: {q!r}, {r!r}")
    if q == r:
        raise DomainError(f"words must differ: {q!r}")


def _occ(q: str, r: str, m: int, q_border: list[int], r_border: list[int]) -> int | None:
    v = q + q[m:]
    if len(occurrences(q, v, q_border)) != 2:
        return None
    hits = occurrences(r, v, r_border)
    # at most one hit in a proper overlap of q when r != q
    assert len(hits) <= 1, (q, r, m, hits)
    return hits[0] if hits else None


def occ(q: str, r: str, m: int) -> int | None:
    """Position of ``r`` inside the proper overlap of ``q`` with span ``m``.

    ``None`` when that overlap does not exist, is not proper, or does not
    contain ``r``.
    """
    _check_couple(q, r)
    if m not in border_spans(q):
        return None
    return _occ(q, r, m, border_array(q), border_array(r))


@dataclass(frozen=True)
class FTable:
    q: str
    r: str
    spans: tuple[int, ...]
    occ: dict[int, int] = field(hash=False)
    f: dict[tuple[int, int], int] = field(hash=False)

    def __call__(self, m: int, n: int) -> int | None:
        return self.f.get((m, n))

    @property
    def domain(self) -> list[int]:
        return sorted(self.occ)

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "r": self.r,
            "spans": list(self.spans),
            "occ": {str(m): p for m, p in sorted(self.occ.items())},
            "f": [{"m": m, "n": n, "value": v} for (m, n), v in sorted(self.f.items())],
        }

    def format(self) -> str:
        """Grid with rows indexed by the first span; ``.`` marks undefined entries."""
        cols = self.spans
        head = ["f"] + [str(n) for n in cols]
        rows = [head]
        for m in cols:
            rows.append([str(m)] + [str(self.f[m, n]) if (m, n) in self.f else "." for n in cols])
        width = max(len(c) for row in rows for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in rows)


def f_table(q: str, r: str) -> FTable:
    """Tabulate ``f(m, n) = m + occ(q, r, m) - occ(q, r, n)``.

    Builds each of the O(|q|) overlaps once and searches it in linear time,
    so the table costs O(|q|^2).
    """
    _check_couple(q, r)
    spans = border_spans(q)
    qb, rb = border_array(q), border_array(r)
    occ_map = {}
    for m in spans:
        p = _occ(q, r, m, qb, rb)
        if p is not None:
            occ_map[m] = p
    f = {(m, n): m + occ_map[m] - occ_map[n] for m in occ_map for n in occ_map}
    return FTable(q, r, spans, occ_map, f)
