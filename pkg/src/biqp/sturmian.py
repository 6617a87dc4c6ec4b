"""Sturmian factor languages, bispecial factors, Rauzy graphs and quasiperiods.

A slope is given by a truncated directive sequence ``d_1, d_2, ...`` of
partial quotients.  The characteristic word is the limit of the standard
words ``s_{-1} = b``, ``s_0 = a``, ``s_{k+1} = s_k^{d_{k+1}} s_{k-1}``.  Every
biinfinite Sturmian word of that slope has the same factors, hence the same
quasiperiods, so the language is all we need.

Only a prefix of the characteristic word is certified by a truncated
directive: ``s_K s_{K-1}`` is a prefix of ``s_{K+1}`` for every continuation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DomainError, InvalidDirectiveError, NeedsLongerDirectiveError
from .words import check_word, occurrences, special_status


@dataclass(frozen=True)
class SturmLang:
    directive: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.directive)
        if not d or any(not isinstance(x, int) or x < 1 for x in d):
            raise DomainError(f"directive must be a nonempty sequence of positive integers, got {self.directive!r}")
        object.__setattr__(self, "directive", d)

    @classmethod
    def fibonacci(cls, depth: int = 24) -> "SturmLang":
        return cls((1,) * depth)

    @classmethod
    def parse(cls, text: str) -> "SturmLang":
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise DomainError(f"malformed directive {text!r}") from None

    @cached_property
    def generated_prefix(self) -> str:
        prev, cur = "b", "a"
        for d in self.directive:
            prev, cur = cur, cur * d + prev
        # s_K s_{K-1} is common to every continuation of the directive
        return cur + prev

    @property
    def max_prefix(self) -> int:
        return len(self.generated_prefix)

    @cached_property
    def max_valid_n(self) -> int:
        """Largest length whose factor set the certified prefix pins down."""
        counts = _factor_counts(self.generated_prefix)
        n = 0
        while n + 1 < len(counts) and counts[n + 1] == n + 2:
            n += 1
        return n


def _factor_counts(w: str) -> list[int]:
    """``counts[n]`` is the number of distinct factors of length ``n`` in ``w``.

    Suffix automaton: each state stands for the factors whose lengths run
    over ``(len(link), len]``, so a difference array sums them in linear time.
    """
    length, link, trans = [0], [-1], [{}]
    last = 0
    for c in w:
        cur = len(length)
        length.append(length[last] + 1)
        link.append(0)
        trans.append({})
        p = last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p != -1:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                while p != -1 and trans[p].get(c) == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = link[cur] = clone
        last = cur
    diff = [0] * (len(w) + 2)
    for v in range(1, len(length)):
        diff[length[link[v]] + 1] += 1
        diff[length[v] + 1] -= 1
    counts, run = [1], 0
    for n in range(1, len(w) + 1):
        run += diff[n]
        counts.append(run)
    return counts


def characteristic_prefix(lang: SturmLang, n: int) -> str:
    if n < 0:
        raise DomainError("length must be nonnegative")
    if n > lang.max_prefix:
        raise NeedsLongerDirectiveError(
            f"directive of depth {len(lang.directive)} certifies only {lang.max_prefix} letters, asked for {n}"
        )
    return lang.generated_prefix[:n]


@lru_cache(maxsize=4096)
def _factor_set(prefix: str, n: int) -> frozenset[str]:
    seen = set()
    for i in range(len(prefix) - n + 1):
        seen.add(prefix[i:i + n])
        if len(seen) == n + 1:
            return frozenset(seen)
    raise NeedsLongerDirectiveError(
        f"certified prefix shows only {len(seen)} of {n + 1} factors of length {n}; use a longer directive"
    )


def factor_set(lang: SturmLang, n: int) -> frozenset[str]:
    """The ``n + 1`` factors of length ``n``.

    The prefix is scanned until ``n + 1`` distinct factors appear, which is
    all a Sturmian language has.
    """
    if n < 0:
        raise DomainError("length must be nonnegative")
    return _factor_set(lang.generated_prefix, n)


def special_factors(lang: SturmLang, n: int) -> tuple[str, str]:
    """The unique (right special, left special) factors of length ``n``."""
    ext = factor_set(lang, n + 1)
    right = [u for u in factor_set(lang, n) if special_status(ext, u).right_special]
    left = [u for u in factor_set(lang, n) if special_status(ext, u).left_special]
    if len(right) != 1 or len(left) != 1:
        raise InvalidDirectiveError(f"length {n}: right special {right}, left special {left}")
    return right[0], left[0]


def bispecial_factors(lang: SturmLang, up_to: int) -> list[str]:
    if up_to < 0:
        raise DomainError("length must be nonnegative")
    out = []
    for n in range(up_to + 1):
        right, left = special_factors(lang, n)
        if right == left:
            out.append(right)
    return out


def shortest_bispecial_at_least(lang: SturmLang, n: int) -> str:
    m = n
    while True:
        right, left = special_factors(lang, m)
        if right == left:
            return right
        m += 1


def sturmian_quasiperiods(lang: SturmLang, n: int) -> set[str]:
    """Quasiperiods of length ``n`` shared by all biinfinite words of the language.

    None when a bispecial factor has length ``n - 1``; otherwise the
    length-``n`` factors of the shortest bispecial factor of length at least
    ``n``.  The empty word counts as bispecial, which settles ``n = 1``.
    """
    if n < 1:
        raise DomainError("length must be positive")
    right, left = special_factors(lang, n - 1)
    if right == left:
        return set()
    s = shortest_bispecial_at_least(lang, n)
    return {s[i:i + n] for i in range(len(s) - n + 1)}


def windowed_qp_oracle(lang: SturmLang, q: str) -> bool:
    """Quasiperiodicity read straight off the factor language.

    ``q`` fails exactly when some factor of length ``2|q|`` starts with ``q``
    and holds no other occurrence of it: the next occurrence would then start
    more than ``|q|`` letters later, leaving a gap.
    """
    check_word(q, nonempty=True)
    if q not in factor_set(lang, len(q)):
        return False
    for v in factor_set(lang, 2 * len(q)):
        if v.startswith(q) and occurrences(q, v) == [0]:
            return False
    return True


@dataclass(frozen=True)
class RauzyGraph:
    n: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    right_special: str
    left_special: str
    decomposition: tuple[int, int, int]

    def successors(self, u: str) -> list[str]:
        return [v for a, v, _ in self.edges if a == u]

    def to_dot(self) -> str:
        lines = [f"digraph rauzy_{self.n} {{"]
        for v in self.vertices:
            attrs = []
            if v == self.right_special:
                attrs.append("shape=box")
            if v == self.left_special:
                attrs.append("style=bold")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{v}"{suffix};')
        for a, b, label in self.edges:
            lines.append(f'  "{a}" -> "{b}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        k, l, m = self.decomposition
        return {
            "n": self.n,
            "vertices": list(self.vertices),
            "edges": [{"from": a, "to": b, "label": c} for a, b, c in self.edges],
            "right_special": self.right_special,
            "left_special": self.left_special,
            "decomposition": {"k": k, "l": l, "m": m},
        }


def rauzy_graph(lang: SturmLang, n: int) -> RauzyGraph:
    """Successor graph on the length-``n`` factors.

    The decomposition ``(k, l, m)`` counts the central path from the left
    special to the right special vertex (both included) and the two side
    paths leading back from the right special vertex to the left special one.
    """
    if n < 1:
        raise DomainError("length must be positive")
    verts = tuple(sorted(factor_set(lang, n)))
    edges = tuple(sorted((v[:-1], v[1:], v[-1]) for v in factor_set(lang, n + 1)))
    right, left = special_factors(lang, n)
    succ = {}
    for a, b, _ in edges:
        succ.setdefault(a, []).append(b)

    k, cur = 1, left
    while cur != right:
        (cur,) = succ[cur]
        k += 1
    sides = []
    for start in sorted(succ[right]):
        length, cur = 0, start
        while cur != left:
            (cur,) = succ[cur]
            length += 1
        sides.append(length)
    l, m = sides
    return RauzyGraph(n, verts, edges, right, left, (k, l, m))


def quasiperiod_counts(lang: SturmLang, n_max: int, count=sturmian_quasiperiods) -> dict[int, int]:
    return {n: len(count(lang, n)) for n in range(1, n_max + 1)}


def qp_by_oracle(lang: SturmLang, n: int) -> set[str]:
    return {q for q in factor_set(lang, n) if windowed_qp_oracle(lang, q)}


__all__ = [
    "RauzyGraph",
    "SturmLang",
    "bispecial_factors",
    "characteristic_prefix",
    "factor_set",
    "qp_by_oracle",
    "quasiperiod_counts",
    "rauzy_graph",
    "shortest_bispecial_at_least",
    "special_factors",
    "sturmian_quasiperiods",
    "windowed_qp_oracle",
]
