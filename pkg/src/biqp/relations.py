"""Compatible / definite / positive couples and their three-way classification.

For two distinct words ``q`` and ``r`` of the same length:

* compatible: some biinfinite word has both as quasiperiods;
* definite and positive: every ``q``-quasiperiodic word is ``r``-quasiperiodic;
* otherwise the couple is compatible only: some words carry both, some only ``q``.

All three tests read the ``f`` table of :func:`biqp.overlaps.f_table`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .overlaps import FTable, _check_couple, border_spans, f_table, is_proper


class CoupleTag(str, enum.Enum):
    INCOMPATIBLE = "incompatible"
    IMPLIES_QUASIPERIODICITY = "implies-quasiperiodicity"
    COMPATIBLE_ONLY = "compatible-only"


@dataclass(frozen=True)
class CoupleClass:
    tag: CoupleTag
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {"class": self.tag.value, "witness": self.witness}


def proper_span_pairs(q: str) -> list[tuple[int, int]]:
    """Span pairs ``(m, n)`` whose 3-overlap of ``q`` is proper."""
    spans = border_spans(q)
    return [(m, n) for m, n in product(spans, spans) if is_proper(q, [m, n])]


def is_compatible(t: FTable) -> bool:
    return bool(t.f)


def is_definite(t: FTable) -> bool:
    return all(pair in t.f for pair in proper_span_pairs(t.q))


def is_positive(t: FTable) -> bool:
    return bool(t.f) and all(v >= 0 for v in t.f.values())


def classify(q: str, r: str) -> CoupleClass:
    _check_couple(q, r)
    t = f_table(q, r)
    if not is_compatible(t):
        return CoupleClass(CoupleTag.INCOMPATIBLE)
    definite, positive = is_definite(t), is_positive(t)
    if definite and positive:
        return CoupleClass(CoupleTag.IMPLIES_QUASIPERIODICITY)
    # both: a cycle carrying r, and a cycle breaking r-coverage
    m = min(t.occ)
    if not definite:
        bad = next(p for p in proper_span_pairs(q) if p not in t.f)
        reason = "undefined"
    else:
        bad = min(p for p, v in t.f.items() if v < 0)
        reason = "negative"
    witness = {"both": [m, m], "only_q": list(bad), "reason": reason}
    return CoupleClass(CoupleTag.COMPATIBLE_ONLY, witness)


def definiteness_meaning(q: str, r: str) -> bool:
    """Whether every ``q``-quasiperiodic biinfinite word has infinitely many ``r``."""
    _check_couple(q, r)
    return is_definite(f_table(q, r))
