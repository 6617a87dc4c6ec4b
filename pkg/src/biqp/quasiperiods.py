"""Quasiperiods of finite and eventually periodic biinfinite words.

A word ``q`` is a quasiperiod of ``w`` when every position of ``w`` lies
inside an occurrence of ``q``.  For biinfinite words this module decides
quasiperiodicity exactly, lists quasiperiods of a given length, groups them
into successor chains, computes derivated (gap) sequences and implements the
local extension/shrinking rules for quasiperiods one letter longer or shorter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, NotRecurrentError
from .overlaps import _check_couple, border_spans, f_table, k_overlap, _check_spans
from .relations import proper_span_pairs
from .words import (
    BiWord,
    bi_factor_set,
    bi_special_status,
    canonical_triple,
    check_word,
    occurrences,
)


def _covers(occs: Sequence[int], n: int, lo: int, hi: int) -> bool:
    """Whether sorted occurrences of a length-``n`` word cover ``lo..hi``."""
    nxt = lo
    for p in occs:
        if p > nxt:
            return False
        nxt = max(nxt, p + n)
        if nxt > hi:
            return True
    return nxt > hi


# ---------------------------------------------------------------------------
# Finite words


def is_quasiperiod_finite(q: str, w: str) -> bool:
    check_word(q, nonempty=True)
    check_word(w)
    if len(q) > len(w):
        return False
    return _covers(occurrences(q, w), len(q), 0, len(w) - 1)


def quasiperiods_finite(w: str) -> set[str]:
    """Quasiperiods of ``w`` other than ``w`` itself."""
    check_word(w, nonempty=True)
    return {w[:n] for n in range(1, len(w)) if w.endswith(w[:n]) and is_quasiperiod_finite(w[:n], w)}


# ---------------------------------------------------------------------------
# Biinfinite words


def _window(w: BiWord, n: int, extra: int = 2) -> tuple[str, int]:
    lc = n // len(w.left) + extra
    rc = n // len(w.right) + extra
    return w.left * lc + w.center + w.right * rc, -lc * len(w.left)


def is_quasiperiod_bi(q: str, w: BiWord) -> bool:
    """Exact coverage test on a window holding a full period of each tail.

    Every position at distance at least ``|q|-1`` from the window ends has
    all of its covering occurrences inside the window, and those positions
    include one whole period of each periodic tail.
    """
    check_word(q, nonempty=True)
    W, _ = _window(w, 2 * len(q))
    return _covers(occurrences(q, W), len(q), len(q) - 1, len(W) - len(q))


def quasiperiods_of_length(w: BiWord, n: int) -> set[str]:
    if n < 1:
        raise DomainError("quasiperiod length must be positive")
    return {q for q in bi_factor_set(w, n) if is_quasiperiod_bi(q, w)}


@dataclass(frozen=True)
class DerivSeq:
    """Eventually periodic gap sequence ``^w(left) center (right)^w``.

    Index 0 is the first center gap (first right gap when the center is
    empty); ``anchor`` is the index of the gap that starts at the leftmost
    occurrence covering position 0.
    """

    left_gaps: tuple[int, ...]
    center_gaps: tuple[int, ...]
    right_gaps: tuple[int, ...]
    anchor: int = 0

    def gap(self, i: int) -> int:
        if i < 0:
            return self.left_gaps[i % len(self.left_gaps)]
        if i < len(self.center_gaps):
            return self.center_gaps[i]
        return self.right_gaps[(i - len(self.center_gaps)) % len(self.right_gaps)]

    def max_gap(self) -> int:
        return max(self.left_gaps + self.center_gaps + self.right_gaps)

    def same_up_to_shift(self, other: "DerivSeq") -> bool:
        return (self.left_gaps, self.center_gaps, self.right_gaps) == (
            other.left_gaps,
            other.center_gaps,
            other.right_gaps,
        )

    def text(self) -> str:
        def join(gs):
            return " ".join(map(str, gs))

        mid = f" {join(self.center_gaps)} " if self.center_gaps else ""
        return f"^w({join(self.left_gaps)}){mid}({join(self.right_gaps)})^w"

    __str__ = text

    def as_dict(self) -> dict:
        return {
            "text": self.text(),
            "left_gaps": list(self.left_gaps),
            "center_gaps": list(self.center_gaps),
            "right_gaps": list(self.right_gaps),
            "anchor": self.anchor,
        }


def _block_gaps(ps: list[int], period: int) -> tuple[int, ...]:
    return tuple(b - a for a, b in zip(ps, ps[1:])) + (ps[0] + period - ps[-1],)


def derivated_sequence(w: BiWord, q: str) -> DerivSeq:
    """Gaps between consecutive occurrences of ``q`` in ``w``."""
    check_word(q, nonempty=True)
    nl, nr, nc = len(w.left), len(w.right), len(w.center)
    W, start = _window(w, len(q), extra=4)
    occs = [p + start for p in occurrences(q, W)]

    left = [p for p in occs if start <= p < start + nl]
    right = [p for p in occs if nc <= p < nc + nr]
    if not left or not right:
        raise NotRecurrentError(f"{q!r} does not occur infinitely often in both tails of {w}")
    mids = [p for p in occs if left[0] <= p <= right[0]]
    center = tuple(b - a for a, b in zip(mids, mids[1:]))

    covering = [p for p in occs if p <= 0 < p + len(q)]
    q0 = covering[0] if covering else next(p for p in occs if p > 0)
    anchor = mids.index(q0)

    lg, cg, rg, shift = canonical_triple(_block_gaps(left, nl), center, _block_gaps(right, nr))
    return DerivSeq(lg, cg, rg, anchor - shift)


# ---------------------------------------------------------------------------
# Chains of quasiperiods


@dataclass(frozen=True)
class Chain:
    """Quasiperiods linked by unique successors, head to tail.

    A cyclic chain (periodic words only) is cut at its least member.
    """

    members: tuple[str, ...]
    cyclic: bool = False

    def __contains__(self, u) -> bool:
        return u in self.members

    def __len__(self) -> int:
        return len(self.members)

    def as_dict(self) -> dict:
        return {"members": list(self.members), "cyclic": self.cyclic}


def chain_of(w: BiWord, q: str) -> Chain:
    """Chain through the quasiperiod ``q``, found by following unique successors.

    No coverage test is run past ``q`` itself: a successor of a quasiperiod
    is a quasiperiod exactly when the quasiperiod is not right special, and
    symmetrically for predecessors.
    """
    if not is_quasiperiod_bi(q, w):
        raise DomainError(f"{q!r} is not a quasiperiod of {w}")
    status = lambda u: bi_special_status(w, u)  # noqa: E731

    members = [q]
    cur = q
    while True:
        st = status(cur)
        if st.right_special or not st.successors:
            break
        nxt = next(iter(st.successors))[1:]
        if nxt == q:
            return Chain(_cut(members), cyclic=True)
        if status(nxt).left_special:
            break
        members.append(nxt)
        cur = nxt

    cur = q
    while True:
        st = status(cur)
        if st.left_special or not st.predecessors:
            break
        prv = next(iter(st.predecessors))[:-1]
        if status(prv).right_special:
            break
        members.insert(0, prv)
        cur = prv
    return Chain(tuple(members))


def _cut(cycle: list[str]) -> tuple[str, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def chains_of_length(w: BiWord, n: int) -> list[Chain]:
    remaining = quasiperiods_of_length(w, n)
    chains = []
    while remaining:
        ch = chain_of(w, min(remaining))
        chains.append(ch)
        remaining -= set(ch.members)
    return sorted(chains, key=lambda c: c.members)


def same_chain(w: BiWord, q: str, r: str) -> bool:
    _check_couple(q, r)
    if not is_quasiperiod_bi(r, w):
        raise DomainError(f"{r!r} is not a quasiperiod of {w}")
    return r in chain_of(w, q)


# ---------------------------------------------------------------------------
# One-letter extension and shrinking rules


def _require_qp(q: str, w: BiWord) -> None:
    if not is_quasiperiod_bi(q, w):
        raise DomainError(f"{q!r} is not a quasiperiod of {w}")


def _require_factor(u: str, w: BiWord) -> None:
    if u not in bi_factor_set(w, len(u)):
        raise DomainError(f"{u!r} is not a factor of {w}")


def extend_right(w: BiWord, q: str, letter: str) -> bool:
    """Whether ``q + letter`` is a quasiperiod, given that ``q`` is one."""
    _require_qp(q, w)
    _require_factor(q + letter, w)
    return not bi_special_status(w, q).right_special


def extend_left(w: BiWord, q: str, letter: str) -> bool:
    _require_qp(q, w)
    _require_factor(letter + q, w)
    return not bi_special_status(w, q).left_special


def _shrink_rule(w: BiWord, q: str, square: str) -> bool:
    if square not in bi_factor_set(w, len(square)):
        return True
    return len(occurrences(q, square)) >= 3


def shrink_right(w: BiWord, qa: str) -> bool:
    """Whether ``qa`` minus its last letter is a quasiperiod, given that ``qa`` is one.

    True iff ``qa qa`` is not a factor or holds at least three copies of the
    shorter word.
    """
    if len(qa) < 2:
        raise DomainError("need a quasiperiod of length at least 2")
    _require_qp(qa, w)
    return _shrink_rule(w, qa[:-1], qa + qa)


def shrink_left(w: BiWord, aq: str) -> bool:
    """Mirror of :func:`shrink_right`: drop the first letter, test the square ``aq aq``."""
    if len(aq) < 2:
        raise DomainError("need a quasiperiod of length at least 2")
    _require_qp(aq, w)
    return _shrink_rule(w, aq[1:], aq + aq)


# ---------------------------------------------------------------------------
# Witness words and same-length couples


def bi_word_from_spans(q: str, cycle: Sequence[int]) -> BiWord:
    """Periodic word whose consecutive copies of ``q`` overlap with the spans in ``cycle``."""
    check_word(q, nonempty=True)
    if not cycle:
        raise DomainError("span cycle must be nonempty")
    _check_spans(q, cycle)
    return BiWord.periodic("".join(q[:len(q) - s] for s in cycle))


def occurring_couples(w: BiWord, q: str) -> list[tuple[int, int]]:
    """Span pairs whose proper 3-overlap of ``q`` is a factor of ``w``."""
    out = []
    for m, n in proper_span_pairs(q):
        v = k_overlap(q, [m, n])
        if v in bi_factor_set(w, len(v)):
            out.append((m, n))
    return out


def f_nonnegative_on_occurring(w: BiWord, q: str, r: str) -> bool:
    t = f_table(q, r)
    return all(t(m, n) is not None and t(m, n) >= 0 for m, n in occurring_couples(w, q))


# names used by the published interface
thm1_extend_right = extend_right
thm1_extend_left = extend_left
thm1_shrink = shrink_right
thm1_shrink_left = shrink_left


__all__ = [
    "Chain",
    "DerivSeq",
    "bi_word_from_spans",
    "border_spans",
    "chain_of",
    "chains_of_length",
    "derivated_sequence",
    "extend_left",
    "extend_right",
    "f_nonnegative_on_occurring",
    "is_quasiperiod_bi",
    "is_quasiperiod_finite",
    "occurring_couples",
    "quasiperiods_finite",
    "quasiperiods_of_length",
    "same_chain",
    "shrink_left",
    "shrink_right",
    "thm1_extend_left",
    "thm1_extend_right",
    "thm1_shrink",
    "thm1_shrink_left",
]
