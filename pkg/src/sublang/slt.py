"""Strictly locally k-testable representations and decision procedures.

A representation fixes a window length k, three sets of length-k windows
(allowed prefixes, allowed interior windows, allowed suffixes) and a
finite set of short words (length < k).  A word of length >= k belongs to
the language iff its k-prefix is an allowed prefix, its k-suffix an
allowed suffix, and every window with at least one symbol strictly before
and after it is an allowed interior window; shorter words belong iff they
are listed among the short words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .automata import (
    Alphabet,
    Dfa,
    InputError,
    MAX_WORD_SPACE,
    are_equivalent,
    enumerate_upto,
    factor_sets,
    minimize,
)


@dataclass(frozen=True)
class SltRep:
    """Window-set representation of a strictly locally k-testable language."""

    k: int
    alphabet: Alphabet
    prefixes: frozenset[str]
    interiors: frozenset[str]
    suffixes: frozenset[str]
    short_words: frozenset[str]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError("window length k must be >= 1")
        for name, words in (
            ("prefix", self.prefixes),
            ("interior", self.interiors),
            ("suffix", self.suffixes),
        ):
            for w in words:
                if len(w) != self.k:
                    raise InputError(f"{name} window {w!r} must have length exactly {self.k}")
                if not self.alphabet.covers(w):
                    raise InputError(f"{name} window {w!r} not over the alphabet")
        for w in self.short_words:
            if len(w) >= self.k:
                raise InputError(f"short word {w!r} must be shorter than k={self.k}")
            if not self.alphabet.covers(w):
                raise InputError(f"short word {w!r} not over the alphabet")

    def sorted_fields(self) -> tuple[list[str], list[str], list[str], list[str]]:
        s = self.alphabet.sort_words
        return (
            s(self.prefixes),
            s(self.interiors),
            s(self.suffixes),
            s(self.short_words),
        )


def make_rep(
    k: int,
    alphabet: Alphabet,
    prefixes=(),
    interiors=(),
    suffixes=(),
    short_words=(),
) -> SltRep:
    return SltRep(
        k,
        alphabet,
        frozenset(prefixes),
        frozenset(interiors),
        frozenset(suffixes),
        frozenset(short_words),
    )


def slt_membership(rep: SltRep, word: str) -> bool:
    """Direct window test; words with foreign symbols are rejected."""
    if not rep.alphabet.covers(word):
        return False
    k = rep.k
    n = len(word)
    if n < k:
        return word in rep.short_words
    if word[:k] not in rep.prefixes or word[n - k :] not in rep.suffixes:
        return False
    # Interior windows start at positions 2..n-k (1-indexed); for
    # n in {k, k+1} there are none, exactly as the index range dictates.
    for j in range(1, n - k):
        if word[j : j + k] not in rep.interiors:
            return False
    return True


def slt_to_dfa(rep: SltRep) -> Dfa:
    """Minimal DFA accepting exactly the represented language.

    Sliding-window construction: short words are tracked by a prefix trie;
    for long words the state carries the most recent window plus whether
    that window is still the word's own prefix.
    """
    alphabet = rep.alphabet
    n_sym = len(alphabet)
    if n_sym ** rep.k > MAX_WORD_SPACE:
        raise InputError(f"window space |V|^{rep.k} too large")
    k = rep.k

    index: dict[object, int] = {}
    trans: list[list[int]] = []
    accepting: set[int] = set()

    def state(desc: object, accept: bool) -> int:
        if desc not in index:
            index[desc] = len(index)
            trans.append([-1] * n_sym)
            if accept:
                accepting.add(index[desc])
        return index[desc]

    dead = state("dead", False)
    for i in range(n_sym):
        trans[dead][i] = dead
    start = state(("short", ""), "" in rep.short_words)
    queue = deque([("short", "")])
    seen = {("short", ""), "dead"}
    while queue:
        desc = queue.popleft()
        q = index[desc]
        kind = desc[0]
        for i, a in enumerate(alphabet):
            if kind == "short":
                w = desc[1] + a
                if len(w) < k:
                    nxt = ("short", w)
                    t = state(nxt, w in rep.short_words)
                elif w in rep.prefixes:
                    nxt = ("long", w, True)
                    t = state(nxt, w in rep.suffixes)
                else:
                    trans[q][i] = dead
                    continue
            else:
                _, window, is_prefix = desc
                if not is_prefix and window not in rep.interiors:
                    trans[q][i] = dead
                    continue
                w = window[1:] + a
                nxt = ("long", w, False)
                t = state(nxt, w in rep.suffixes)
            trans[q][i] = t
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    raw = Dfa(
        alphabet,
        len(trans),
        start,
        frozenset(accepting),
        tuple(tuple(r) for r in trans),
    )
    return minimize(raw)


def canonical_rep(d: Dfa, k: int) -> SltRep:
    """The forced window sets of L plus its actual short words.

    Any valid window-set representation must contain these sets, so this
    candidate represents L iff any representation does.
    """
    starts, interiors, ends = factor_sets(d, k)
    short = enumerate_upto(d, k - 1)
    return make_rep(k, d.alphabet, starts, interiors, ends, short)


@dataclass(frozen=True)
class SltKResult:
    is_slt_k: bool
    rep: SltRep | None  # exact representation on yes
    witness: str | None  # word separating L from the canonical candidate on no

    def __bool__(self) -> bool:
        return self.is_slt_k


def is_slt_k(d: Dfa, k: int) -> SltKResult:
    """Exact decision of strict local k-testability via the canonical sets."""
    rep = canonical_rep(d, k)
    eq = are_equivalent(slt_to_dfa(rep), d)
    if eq.equal:
        return SltKResult(True, rep, None)
    return SltKResult(False, None, eq.witness)


@dataclass(frozen=True)
class InferSltResult:
    found_k: int | None
    rep: SltRep | None
    k_max: int  # bound actually searched
    per_k_witness: tuple[str, ...] = field(default=())

    @property
    def found(self) -> bool:
        return self.found_k is not None


# Default cap keeps |V|**k enumerable in well under a second.
_DEFAULT_WINDOW_BUDGET = 1 << 10


def default_k_max(d: Dfa) -> int:
    """min(n_min**2 + 1, largest k with |V|**k within the window budget)."""
    dm = d if d.minimal else minimize(d)
    bound = dm.n_states * dm.n_states + 1
    v = len(d.alphabet)
    if v >= 2:
        k = 1
        while v ** (k + 1) <= _DEFAULT_WINDOW_BUDGET:
            k += 1
        bound = min(bound, k)
    return max(1, bound)


def infer_slt(d: Dfa, k_max: int | None = None, k_start: int = 1) -> InferSltResult:
    """Smallest k <= k_max admitting a representation, else a bounded negative."""
    if k_max is None:
        k_max = default_k_max(d)
    if k_max < 1:
        raise InputError("k_max must be >= 1")
    witnesses: list[str] = []
    for k in range(k_start, k_max + 1):
        res = is_slt_k(d, k)
        if res:
            return InferSltResult(k, res.rep, k_max, tuple(witnesses))
        witnesses.append(res.witness or "")
    return InferSltResult(None, None, k_max, tuple(witnesses))
