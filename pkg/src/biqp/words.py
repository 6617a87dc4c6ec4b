"""Finite words, eventually periodic biinfinite words and factor machinery.

Letters are single lowercase ASCII characters and finite words are plain
``str`` objects.  A biinfinite word ``^w(u) x (v)^w`` is a :class:`BiWord`;
position 0 is the first letter of ``x`` (or of the first copy of ``v`` when
``x`` is empty), position -1 is the last letter of ``u``.

Most helpers are written against generic sequences so the same code serves
strings and the integer gap sequences of :mod:`biqp.quasiperiods`.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError

ALPHABET = string.ascii_lowercase


def check_word(u: str, *, nonempty: bool = False) -> str:
    if not isinstance(u, str):
        raise DomainError(f"expected a word, got {u!r}")
    bad = [c for c in u if c not in ALPHABET]
    if bad:
        raise DomainError(f"invalid letter {bad[0]!r} in word {u!r}")
    if nonempty and not u:
        raise DomainError("expected a nonempty word")
    return u


def alphabet(size: int) -> str:
    if not 1 <= size <= len(ALPHABET):
        raise DomainError(f"alphabet size must be in 1..{len(ALPHABET)}, got {size}")
    return ALPHABET[:size]


# ---------------------------------------------------------------------------
# Border array and string search


def border_array(u: Sequence) -> list[int]:
    """Failure function: ``b[i]`` is the longest proper border of ``u[:i+1]``."""
    b = [0] * len(u)
    k = 0
    for i in range(1, len(u)):
        while k and u[i] != u[k]:
            k = b[k - 1]
        if u[i] == u[k]:
            k += 1
        b[i] = k
    return b


def occurrences(u: Sequence, w: Sequence, border: list[int] | None = None) -> list[int]:
    """All positions where ``u`` occurs in ``w``, ascending (Knuth-Morris-Pratt)."""
    if len(u) == 0:
        raise DomainError("cannot search for the empty word")
    if border is None:
        border = border_array(u)
    out = []
    k = 0
    n = len(u)
    for i, c in enumerate(w):
        while k and c != u[k]:
            k = border[k - 1]
        if c == u[k]:
            k += 1
        if k == n:
            out.append(i - n + 1)
            k = border[k - 1]
    return out


def factors(w: str, n: int) -> set[str]:
    if n < 0:
        raise DomainError("factor length must be nonnegative")
    if n > len(w):
        return set()
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def primitive_root(u: Sequence) -> Sequence:
    if not u:
        raise DomainError("the empty word has no primitive root")
    p = len(u) - border_array(u)[-1]
    return u[:p] if len(u) % p == 0 else u


def is_primitive(u: Sequence) -> bool:
    return len(primitive_root(u)) == len(u)


def least_rotation(u: Sequence) -> Sequence:
    return min(u[i:] + u[:i] for i in range(len(u)))


class SpecialStatus(NamedTuple):
    right_special: bool
    left_special: bool
    successors: frozenset
    predecessors: frozenset


def special_status(extensions: set[str], u: str) -> SpecialStatus:
    """Right/left speciality of ``u`` given the factor set one letter longer.

    ``successors`` holds the right extensions ``u + c`` found in
    ``extensions``; ``predecessors`` the left extensions ``c + u``.  An empty
    successor set means ``u`` never occurs followed by a letter.
    """
    n = len(u)
    succ = frozenset(v for v in extensions if len(v) == n + 1 and v[:n] == u)
    pred = frozenset(v for v in extensions if len(v) == n + 1 and v[1:] == u)
    return SpecialStatus(len(succ) >= 2, len(pred) >= 2, succ, pred)


# ---------------------------------------------------------------------------
# Eventually periodic biinfinite sequences


def canonical_triple(left: Sequence, center: Sequence, right: Sequence):
    """Canonical ``(left, center, right, shift)`` of ``^w(left) center (right)^w``.

    The result describes the same biinfinite sequence up to translation.
    Periods become primitive, the center shrinks to the part that belongs
    to neither periodic tail (the left tail wins when the tails overlap) and
    a purely periodic sequence gets an empty center and its least rotation
    as both periods.  ``shift`` is the old coordinate of the new origin.
    """
    L = primitive_root(left)
    R = primitive_root(right)
    k = len(L) + len(R) + 2
    base = len(L) * k
    W = L * k + center + R * k
    n = len(W)

    a = len(L)
    while a < n and W[a] == W[a - len(L)]:
        a += 1
    if a == n:
        m = least_rotation(L)
        p = base
        while W[p:p + len(m)] != m:
            p += 1
        return m, center[:0], m, p - base

    j = n - len(R) - 1
    while j >= 0 and W[j] == W[j + len(R)]:
        j -= 1
    s = max(a, j + 1)
    return W[a - len(L):a], W[a:s], W[s:s + len(R)], a - base


@dataclass(frozen=True, eq=False)
class BiWord:
    """The biinfinite word ``^w(left) center (right)^w``.

    Equality and hashing compare canonical forms, so two BiWords are equal
    when they spell the same biinfinite word up to translation.
    """

    left: str
    center: str
    right: str

    def __post_init__(self):
        check_word(self.left, nonempty=True)
        check_word(self.center)
        check_word(self.right, nonempty=True)

    @classmethod
    def parse(cls, text: str) -> "BiWord":
        parts = text.split("|")
        if len(parts) != 3:
            raise DomainError(f"malformed biinfinite word literal {text!r}: expected LEFT|CENTER|RIGHT")
        return cls(*parts)

    @classmethod
    def periodic(cls, period: str) -> "BiWord":
        return cls(period, "", period)

    def __str__(self) -> str:
        return f"{self.left}|{self.center}|{self.right}"

    def __repr__(self) -> str:
        return f"BiWord({str(self)!r})"

    def normalized(self) -> "BiWord":
        left, center, right, _ = canonical_triple(self.left, self.center, self.right)
        return BiWord(left, center, right)

    def _key(self):
        return canonical_triple(self.left, self.center, self.right)[:3]

    def __eq__(self, other):
        if not isinstance(other, BiWord):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def is_periodic(self) -> bool:
        left, center, right = self._key()
        return not center and left == right

    def as_dict(self) -> dict:
        return {"literal": str(self), "left": self.left, "center": self.center, "right": self.right}


def letter_at(w: BiWord, i: int) -> str:
    if i < 0:
        return w.left[i % len(w.left)]
    if i < len(w.center):
        return w.center[i]
    return w.right[(i - len(w.center)) % len(w.right)]


def bi_window(w: BiWord, i: int, j: int) -> str:
    """Letters ``i..j`` inclusive."""
    if i > j + 1:
        raise DomainError(f"empty or reversed window {i}..{j}")
    return "".join(letter_at(w, k) for k in range(i, j + 1))


def padded_window(w: BiWord, n: int) -> tuple[str, int]:
    """A finite window around the center that contains every length-``n`` pattern.

    Returns the window and the biinfinite position of its first letter.
    """
    lc = -(-n // len(w.left)) + 1
    rc = -(-n // len(w.right)) + 1
    return w.left * lc + w.center + w.right * rc, -lc * len(w.left)


def bi_factor_set(w: BiWord, n: int) -> set[str]:
    if n < 1:
        raise DomainError("factor length must be positive")
    return factors(padded_window(w, n)[0], n)


def bi_special_status(w: BiWord, u: str) -> SpecialStatus:
    return special_status(bi_factor_set(w, len(u) + 1), u)
