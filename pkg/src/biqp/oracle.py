"""Brute-force reference checks.

Everything here is deliberately naive and shares no helper with the modules
it checks: occurrences are found by slicing, coverage by marking a boolean
array, witness words by physically placing copies of ``q`` on a line.  The
sweeps compare those answers against the library over exhaustive families of
small words and collect every disagreement.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from . import overlaps, quasiperiods, relations, sturmian
from .relations import CoupleTag
from .words import BiWord, alphabet


@dataclass(frozen=True)
class SweepConfig:
    alphabet_size: int = 2
    max_len: int = 6
    max_cycle: int = 2
    max_window_copies: int = 6

    def __post_init__(self):
        for name in ("alphabet_size", "max_len", "max_cycle", "max_window_copies"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


@dataclass
class SweepReport:
    name: str
    checked: int = 0
    discrepancies: list[str] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def fail(self, msg: str) -> None:
        self.discrepancies.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" {self.counts}" if self.counts else ""
        return f"{status} {self.name}: {self.checked} checked, {len(self.discrepancies)} discrepancies ({self.seconds:.2f}s){extra}"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "discrepancies": self.discrepancies[:50],
            "counts": self.counts,
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# Naive primitives


def naive_occurrences(u: str, w: str) -> list[int]:
    return [i for i in range(len(w) - len(u) + 1) if w[i:i + len(u)] == u]


def naive_cover(q: str, w: str) -> bool:
    covered = [False] * len(w)
    for i in naive_occurrences(q, w):
        for j in range(i, i + len(q)):
            covered[j] = True
    return all(covered)


def naive_borders(q: str) -> list[int]:
    return [b for b in range(len(q)) if q[:b] == q[len(q) - b:]]


def naive_bi_window(left: str, center: str, right: str, q_len: int, copies: int) -> str:
    """``copies`` blocks per side, each block a power of the period at least ``q_len`` long."""
    lp = left * -(-q_len // len(left))
    rp = right * -(-q_len // len(right))
    return lp * copies + center + rp * copies


def naive_bi_quasiperiod(q: str, w: BiWord, copies: int = 6) -> bool:
    W = naive_bi_window(w.left, w.center, w.right, len(q), copies)
    covered = [False] * len(W)
    for i in naive_occurrences(q, W):
        for j in range(i, i + len(q)):
            covered[j] = True
    return all(covered[len(q) - 1:len(W) - len(q) + 1])


def naive_bi_factors(w: BiWord, n: int, copies: int = 6) -> set[str]:
    W = naive_bi_window(w.left, w.center, w.right, n, copies)
    return {W[i:i + n] for i in range(len(W) - n + 1)}


def naive_witness_period(q: str, cycle) -> str:
    """Lay copies of ``q`` on a line with the gaps of ``cycle``; read one period."""
    gaps = [len(q) - s for s in cycle]
    period = sum(gaps)
    rounds = 2 + 2 * len(q) // period + 2
    line: dict[int, str] = {}
    pos = 0
    for g in gaps * rounds:
        for j, c in enumerate(q):
            assert line.setdefault(pos + j, c) == c, "inconsistent witness"
        pos += g
    start = period * (rounds // 2)
    return "".join(line[start + i] for i in range(period))


def naive_spliced_word(q: str, left_cycle, right_cycle) -> BiWord:
    """Copies of ``q`` with the gaps of ``left_cycle`` left of 0 and ``right_cycle`` from 0 on."""
    lg = [len(q) - s for s in left_cycle]
    rg = [len(q) - s for s in right_cycle]
    lp, rp = sum(lg), sum(rg)
    reach = 2 * (lp + rp + len(q))
    line: dict[int, str] = {}

    def put(pos):
        for j, c in enumerate(q):
            assert line.setdefault(pos + j, c) == c, "inconsistent witness"

    pos = 0
    for g in itertools.cycle(rg):
        if pos > reach:
            break
        put(pos)
        pos += g
    pos = 0
    for g in itertools.cycle(reversed(lg)):
        pos -= g
        if pos < -reach:
            break
        put(pos)
    left = "".join(line[i] for i in range(-lp, 0))
    right = "".join(line[i] for i in range(rp))
    return BiWord(left, "", right)


def naive_cyclic_count(r: str, period: str) -> int:
    """Occurrences of ``r`` starting in one period of ``period^w``."""
    W = period * (len(r) // len(period) + 2)
    return sum(1 for i in range(len(period)) if W[i:i + len(r)] == r)


def span_cycles(spans, max_cycle: int):
    """Span cycles up to rotation, of length at most ``max_cycle``."""
    seen = set()
    for k in range(1, max_cycle + 1):
        for c in itertools.product(spans, repeat=k):
            key = min(c[i:] + c[:i] for i in range(k))
            # a power of a shorter cycle spells the same word
            if any(k % d == 0 and c == c[:d] * (k // d) for d in range(1, k)):
                continue
            if key not in seen:
                seen.add(key)
                yield key


def _words(letters: str, lengths):
    for n in lengths:
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


# ---------------------------------------------------------------------------
# Shared witness data


@dataclass
class _Witness:
    cycle: tuple
    period: str
    covers: frozenset  # length-|q| words covering period^w
    counts: dict  # r -> occurrences per period


def _witnesses(q: str, cfg: SweepConfig) -> list[_Witness]:
    out = []
    for cycle in span_cycles(naive_borders(q), cfg.max_cycle):
        period = naive_witness_period(q, cycle)
        w = BiWord.periodic(period)
        cands = naive_bi_factors(w, len(q), cfg.max_window_copies)
        covers = frozenset(r for r in cands if naive_bi_quasiperiod(r, w, cfg.max_window_copies))
        counts = {r: naive_cyclic_count(r, period) for r in cands}
        out.append(_Witness(cycle, period, covers, counts))
    return out


def _couples(cfg: SweepConfig, min_len: int = 1):
    letters = alphabet(cfg.alphabet_size)
    for q in _words(letters, range(min_len, cfg.max_len + 1)):
        yield q, [r for r in _words(letters, [len(q)]) if r != q]


# ---------------------------------------------------------------------------
# Sweeps


def sweep_classify(cfg: SweepConfig = SweepConfig()) -> SweepReport:
    """Classification of every couple against its periodic witness words."""
    rep = SweepReport("classify")
    t0 = time.perf_counter()
    counts = {tag.value: 0 for tag in CoupleTag}
    rejected = 0
    letters = alphabet(cfg.alphabet_size)
    for q in _words(letters, range(1, cfg.max_len + 1)):
        rs = [r for r in _words(letters, [len(q)])]
        wit = None
        for r in rs:
            if r == q:
                try:
                    relations.classify(q, r)
                    rep.fail(f"({q},{r}) accepted although q = r")
                except ValueError:
                    rejected += 1
                continue
            wit = wit if wit is not None else _witnesses(q, cfg)
            tag = relations.classify(q, r).tag
            counts[tag.value] += 1
            rep.checked += 1
            both = [x.cycle for x in wit if r in x.covers]
            only_q = [x.cycle for x in wit if r not in x.covers]
            if tag is CoupleTag.INCOMPATIBLE and both:
                rep.fail(f"({q},{r}) incompatible but {both[0]} carries both")
            elif tag is CoupleTag.IMPLIES_QUASIPERIODICITY and only_q:
                rep.fail(f"({q},{r}) implies but {only_q[0]} is only q-quasiperiodic")
            elif tag is CoupleTag.COMPATIBLE_ONLY and not (both and only_q):
                rep.fail(f"({q},{r}) compatible-only but witnesses both={both} only_q={only_q}")
    counts["rejected_equal"] = rejected
    rep.counts = counts
    rep.seconds = time.perf_counter() - t0
    return rep


def sweep_sum_identity(cfg: SweepConfig = SweepConfig(), max_k: int = 3) -> SweepReport:
    """Cyclic sum identity of every f table: spans total equals the f values around the cycle."""
    rep = SweepReport("sum-identity")
    t0 = time.perf_counter()
    for q, rs in _couples(cfg):
        for r in rs:
            t = overlaps.f_table(q, r)
            dom = t.domain
            for m in dom:
                rep.checked += 1
                if t(m, m) != m:
                    rep.fail(f"({q},{r}) f({m},{m}) = {t(m, m)}")
            for k in range(2, max_k + 1):
                for s in itertools.product(dom, repeat=k):
                    rep.checked += 1
                    lhs = sum(s)
                    rhs = sum(t(s[i], s[(i + 1) % k]) for i in range(k))
                    if lhs != rhs:
                        rep.fail(f"({q},{r}) tuple {s}: {lhs} != {rhs}")
    rep.seconds = time.perf_counter() - t0
    return rep


def sweep_single_occurrence(max_len: int = 7, alphabet_size: int = 2) -> SweepReport:
    """A proper overlap of q holds at most one occurrence of any other r of the same length."""
    rep = SweepReport("single-occurrence")
    t0 = time.perf_counter()
    for q in _words(alphabet(alphabet_size), range(1, max_len + 1)):
        for b in naive_borders(q):
            v = q + q[b:]
            if len(naive_occurrences(q, v)) != 2:
                continue
            seen: dict[str, int] = {}
            for i in range(len(v) - len(q) + 1):
                seen[v[i:i + len(q)]] = seen.get(v[i:i + len(q)], 0) + 1
            rep.checked += 1
            many = [r for r, c in seen.items() if r != q and c > 1]
            if many:
                rep.fail(f"{q} span {b}: {many[0]} occurs {seen[many[0]]} times")
    rep.seconds = time.perf_counter() - t0
    return rep


def sweep_definite(cfg: SweepConfig = SweepConfig()) -> SweepReport:
    """Definite couples are exactly those whose witnesses repeat r with every copy of q."""
    rep = SweepReport("definite")
    t0 = time.perf_counter()
    for q, rs in _couples(cfg):
        wit = _witnesses(q, cfg)
        for r in rs:
            rep.checked += 1
            got = relations.is_definite(overlaps.f_table(q, r))
            want = all(x.counts.get(r, 0) >= len(x.cycle) for x in wit)
            if got != want:
                rep.fail(f"({q},{r}) definite={got} but witness count test says {want}")
    rep.seconds = time.perf_counter() - t0
    return rep


def sweep_same_length(cfg: SweepConfig = SweepConfig(), spliced: bool = False) -> SweepReport:
    """Same-chain tests for two quasiperiods of one length on witness words.

    Three tests: ``f >= 0`` on the proper 3-overlaps occurring in the word,
    equal gap sequences up to shift, membership in one chain.

    The default family is the periodic witnesses of :func:`sweep_classify`,
    where all three must agree.  With ``spliced`` the family is every word
    whose copies of ``q`` follow one single-span cycle on the left and
    another on the right.  There the local ``f`` test can hold while the
    other two fail (the word ``baababa||abaababa`` does this), so the sweep
    checks the implications that do hold: gaps equal iff same chain, gaps
    equal implies the local test, and a positive ``f`` table implies equal
    gaps.  Words where only the local test holds are counted, not failed.
    """
    rep = SweepReport("same-length-couples" + ("-spliced" if spliced else ""))
    t0 = time.perf_counter()
    agree = {True: 0, False: 0}
    local_only = 0
    letters = alphabet(cfg.alphabet_size)
    for q in _words(letters, range(1, cfg.max_len + 1)):
        if spliced:
            spans = naive_borders(q)
            words = [naive_spliced_word(q, [m], [n]) for m in spans for n in spans if m != n]
        else:
            words = [BiWord.periodic(x.period) for x in _witnesses(q, cfg)]
        for w in words:
            cands = naive_bi_factors(w, len(q), cfg.max_window_copies)
            covers = {r for r in cands if naive_bi_quasiperiod(r, w, cfg.max_window_copies)}
            if q not in covers:
                rep.fail(f"{w} built from copies of {q} is not {q}-quasiperiodic")
                continue
            dq = quasiperiods.derivated_sequence(w, q)
            for r in sorted(covers - {q}):
                rep.checked += 1
                a = quasiperiods.f_nonnegative_on_occurring(w, q, r)
                b = dq.same_up_to_shift(quasiperiods.derivated_sequence(w, r))
                c = quasiperiods.same_chain(w, q, r)
                detail = f"{w} q={q} r={r}: f>=0 {a}, same gaps {b}, same chain {c}"
                if not spliced:
                    if a == b == c:
                        agree[a] += 1
                    else:
                        rep.fail(detail)
                    continue
                if b != c or (b and not a):
                    rep.fail(detail)
                elif relations.is_positive(overlaps.f_table(q, r)) and not b:
                    rep.fail(detail + ", although the f table is positive")
                elif a and not b:
                    local_only += 1
                else:
                    agree[a] += 1
    rep.counts = {"all_true": agree[True], "all_false": agree[False]}
    if spliced:
        rep.counts["local_test_only"] = local_only
    rep.seconds = time.perf_counter() - t0
    return rep


def _small_biwords(letters: str, part: int):
    periods = [u for u in _words(letters, range(1, part + 1)) if all(u != u[:d] * (len(u) // d) for d in range(1, len(u)) if len(u) % d == 0)]
    seen = set()
    for left in periods:
        for center in _words(letters, range(0, part + 1)):
            for right in periods:
                w = BiWord(left, center, right)
                if w not in seen:
                    seen.add(w)
                    yield w


def sweep_extension_rules(cfg: SweepConfig = SweepConfig(), words=None) -> SweepReport:
    """One-letter extension/shrink rules and successor propagation against direct coverage."""
    rep = SweepReport("extension-rules")
    t0 = time.perf_counter()
    letters = alphabet(cfg.alphabet_size)
    if words is None:
        words = _small_biwords(letters, max(1, cfg.max_len // 2))
    per_rule = {"extend_right": 0, "extend_left": 0, "shrink_right": 0, "shrink_left": 0, "successor": 0, "predecessor": 0}
    nwords = 0
    for w in words:
        nwords += 1
        fac = {n: naive_bi_factors(w, n, cfg.max_window_copies) for n in range(1, cfg.max_len + 3)}
        qp = {}

        def is_qp(u):
            if u not in qp:
                qp[u] = naive_bi_quasiperiod(u, w, cfg.max_window_copies)
            return qp[u]

        def check(rule, got, want, detail):
            rep.checked += 1
            per_rule[rule] += 1
            if got != want:
                rep.fail(f"{w} {rule} {detail}: rule {got}, coverage {want}")

        for n in range(1, cfg.max_len + 1):
            for q in sorted(fac[n]):
                if is_qp(q):
                    succ = [v for v in fac[n + 1] if v.startswith(q)]
                    pred = [v for v in fac[n + 1] if v.endswith(q)]
                    for v in succ:
                        check("extend_right", quasiperiods.extend_right(w, q, v[-1]), is_qp(v), q + "+" + v[-1])
                    for v in pred:
                        check("extend_left", quasiperiods.extend_left(w, q, v[0]), is_qp(v), v[0] + "+" + q)
                    # a successor of q is q minus its first letter plus a letter
                    for v in succ:
                        check("successor", len(succ) < 2, is_qp(v[1:]), f"{q}->{v[1:]}")
                    for v in pred:
                        check("predecessor", len(pred) < 2, is_qp(v[:-1]), f"{v[:-1]}<-{q}")
                if n >= 2 and is_qp(q):
                    check("shrink_right", quasiperiods.shrink_right(w, q), is_qp(q[:-1]), q)
                    check("shrink_left", quasiperiods.shrink_left(w, q), is_qp(q[1:]), q)
    rep.counts = {"words": nwords, **per_rule}
    rep.seconds = time.perf_counter() - t0
    return rep


sweep_thm1 = sweep_extension_rules


def sweep_bi_coverage(cfg: SweepConfig = SweepConfig(), words=None) -> SweepReport:
    """Exact windowed coverage decision against the wide naive window."""
    rep = SweepReport("bi-coverage")
    t0 = time.perf_counter()
    letters = alphabet(cfg.alphabet_size)
    if words is None:
        words = _small_biwords(letters, max(1, cfg.max_len // 2))
    for w in words:
        for q in _words(letters, range(1, cfg.max_len + 1)):
            rep.checked += 1
            got = quasiperiods.is_quasiperiod_bi(q, w)
            want = naive_bi_quasiperiod(q, w, cfg.max_window_copies)
            if got != want:
                rep.fail(f"{w} q={q}: window {got}, naive {want}")
    rep.seconds = time.perf_counter() - t0
    return rep


def sweep_sturmian(lang: sturmian.SturmLang | None = None, n_max: int = 33) -> SweepReport:
    """Bispecial-factor description of Sturmian quasiperiods against the windowed test."""
    lang = lang or sturmian.SturmLang.fibonacci()
    rep = SweepReport("sturmian")
    t0 = time.perf_counter()
    for n in range(1, n_max + 1):
        want = set()
        for q in sturmian.factor_set(lang, n):
            rep.checked += 1
            if sturmian.windowed_qp_oracle(lang, q):
                want.add(q)
        got = sturmian.sturmian_quasiperiods(lang, n)
        if got != want:
            rep.fail(f"n={n}: bispecial rule {sorted(got)}, windowed {sorted(want)}")
    rep.counts = {"zero_lengths": [n for n in range(1, n_max + 1) if not sturmian.sturmian_quasiperiods(lang, n)]}
    rep.seconds = time.perf_counter() - t0
    return rep


def run_all(cfg: SweepConfig = SweepConfig()) -> list[SweepReport]:
    return [
        sweep_classify(cfg),
        sweep_sum_identity(cfg),
        sweep_single_occurrence(max(cfg.max_len, 7), cfg.alphabet_size),
        sweep_definite(cfg),
        sweep_same_length(cfg),
        sweep_same_length(cfg, spliced=True),
        sweep_extension_rules(cfg),
        sweep_bi_coverage(cfg),
        sweep_sturmian(),
    ]
