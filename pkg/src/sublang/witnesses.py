"""Executable encodings of the classic witness languages and grammars.

Each witness id names one construction; verify_lemma replays its
machine-checkable claims: exact family separations, bounded equality of
grammar output against an independent enumeration oracle, and
certificate checks.  Oracles here are direct set builders and counters,
never the grammar engine itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .automata import Alphabet, Dfa, InputError, are_equivalent
from .families import (
    definite_to_slt,
    is_combinational,
    is_definite,
    is_finite,
    is_monoidal,
    is_orderable,
    is_suffix_closed,
    verify_order,
)
from .grammars import (
    Context,
    ContextualGrammar,
    LanguageHandle,
    SelectionPair,
    generate_bounded,
)
from .slt import infer_slt, is_slt_k, make_rep, slt_to_dfa

MAX_DESK_LEN = 20
_PARAM_CAPS = {"slt-hierarchy": 4, "lk-fin": 4, "l-ic-33": 3, "kk": 4}
_PARAM_MINS = {"slt-hierarchy": 1, "lk-fin": 1, "l-ic-33": 2, "kk": 1}

PLAIN_IDS = (
    "l-abna",
    "mon-to-slt1",
    "comb-to-slt1",
    "def-to-slt",
    "l-ec-35",
    "l-ic-32",
    "l-ic-34",
    "l-ic-35",
    "dyck",
)

_AB = Alphabet.of("ab")
_ABC = Alphabet.of("abc")
_ABCD = Alphabet.of("abcd")
_CD = Alphabet.of("cd")


def parse_witness_id(text: str) -> tuple[str, int | None]:
    m = re.fullmatch(r"([a-z0-9-]+)(?:\((\d+)\))?", text.strip())
    if not m:
        raise InputError(f"malformed witness id {text!r}")
    name, param = m.group(1), m.group(2)
    if name in _PARAM_CAPS:
        if param is None:
            raise InputError(f"witness {name!r} needs a parameter, e.g. {name}(1)")
        value = int(param)
        if not (_PARAM_MINS[name] <= value <= _PARAM_CAPS[name]):
            raise InputError(
                f"parameter {value} for {name!r} outside supported range "
                f"{_PARAM_MINS[name]}..{_PARAM_CAPS[name]}"
            )
        return name, value
    if name not in PLAIN_IDS:
        raise InputError(f"unknown witness id {text!r}")
    if param is not None:
        raise InputError(f"witness {name!r} takes no parameter")
    return name, None


def default_witness_ids() -> list[str]:
    return [
        "l-abna",
        "mon-to-slt1",
        "comb-to-slt1",
        "def-to-slt",
        "slt-hierarchy(1)",
        "slt-hierarchy(2)",
        "slt-hierarchy(3)",
        "lk-fin(1)",
        "lk-fin(2)",
        "lk-fin(3)",
        "lk-fin(4)",
        "l-ec-35",
        "l-ic-32",
        "l-ic-33(2)",
        "l-ic-33(3)",
        "l-ic-34",
        "l-ic-35",
        "dyck",
        "kk(1)",
        "kk(2)",
    ]


# ---------------------------------------------------------------------------
# builders


def build_witness(witness_id: str) -> LanguageHandle | ContextualGrammar:
    name, param = parse_witness_id(witness_id)
    if name == "l-abna":
        return LanguageHandle.from_regex("a|ab*a", _AB)
    if name == "slt-hierarchy":
        block = "a" + "b" * param  # type: ignore[operator]
        return LanguageHandle.from_regex(f"{block}({block})*", _AB)
    if name == "lk-fin":
        return LanguageHandle.from_regex("a" * (param + 1), Alphabet.of("a"))  # type: ignore[operator]
    if name == "mon-to-slt1":
        return LanguageHandle.from_regex("(a|b)*", _AB)
    if name == "comb-to-slt1":
        return LanguageHandle.from_regex("(a|b)*b", _AB)
    if name == "def-to-slt":
        return LanguageHandle.from_regex("a|(a|b)*ab", _AB)
    if name == "l-ec-35":
        return ec35_grammar()
    if name == "l-ic-32":
        return ic32_grammar()
    if name == "l-ic-33":
        return ic33_grammars(param)[0]  # type: ignore[arg-type]
    if name == "l-ic-34":
        return ic34_grammar()
    if name == "l-ic-35":
        return ic35_grammar()
    if name == "dyck":
        return dyck_grammar()
    if name == "kk":
        return kk_grammar(param)  # type: ignore[arg-type]
    raise AssertionError(name)  # pragma: no cover


def ec35_grammar() -> ContextualGrammar:
    grow = LanguageHandle.from_regex("(a|b)*", _AB)
    wrap = LanguageHandle.from_regex("a*b(a|b)*", _AB)
    return ContextualGrammar(
        _ABC,
        (
            SelectionPair(grow, (Context("", "a"), Context("a", "")), "ORD"),
            SelectionPair(wrap, (Context("c", "c"),), "ORD"),
        ),
        ("", "b"),
    )


def ic32_grammar() -> ContextualGrammar:
    sel = LanguageHandle.from_regex("bb*", Alphabet.of("b"))
    return ContextualGrammar(
        _ABCD,
        (SelectionPair(sel, (Context("c", "d"),), "SLT1"),),
        ("ab",),
    )


def ic33_grammars(n: int) -> tuple[ContextualGrammar, ContextualGrammar]:
    """The window-set-selection grammar and the finite-selection grammar."""
    if not (2 <= n <= _PARAM_CAPS["l-ic-33"]):
        raise InputError(f"l-ic-33 parameter {n} out of range")
    axioms = ("a" * n + "b" * (2 * n) + "c" * n, "a" * (n - 1) + "b" * n + "c" * (n - 1))
    rep = make_rep(
        n,
        _ABC,
        prefixes=["a" * n],
        interiors=_ABC.words_of_length(n),
        suffixes=["c" * n],
        short_words=[],  # encoded as printed; the second axiom is never selected
    )
    slt_sel = LanguageHandle.from_slt(rep)
    fin_sel = LanguageHandle.from_regex("b" * (2 * n), Alphabet.of("b"))
    g_slt = ContextualGrammar(
        _ABC, (SelectionPair(slt_sel, (Context("a", "c"),), f"SLT{n}"),), axioms
    )
    g_fin = ContextualGrammar(
        _ABC, (SelectionPair(fin_sel, (Context("a", "c"),), "FIN"),), axioms
    )
    return g_slt, g_fin


def ic34_grammar() -> ContextualGrammar:
    sel_ac = LanguageHandle.from_slt(
        make_rep(1, _ABC, prefixes=["a"], interiors=["b"], suffixes=["c"])
    )
    sel_bd = LanguageHandle.from_slt(
        make_rep(1, Alphabet.of("bcd"), prefixes=["b"], interiors=["c"], suffixes=["d"])
    )
    return ContextualGrammar(
        _ABCD,
        (
            SelectionPair(sel_ac, (Context("a", "c"),), "SLT1"),
            SelectionPair(sel_bd, (Context("b", "d"),), "SLT1"),
        ),
        ("abcd",),
    )


def ic35_grammar() -> ContextualGrammar:
    sel = LanguageHandle.from_regex("a*ba*ba*", _AB)
    return ContextualGrammar(
        _AB,
        (SelectionPair(sel, (Context("a", "a"),), "ORD"),),
        ("ababaababa",),
    )


def ic35_table_dfa() -> Dfa:
    """The published 4-state automaton for the grammar's selection language."""
    return Dfa(
        _AB,
        4,
        0,
        frozenset({2}),
        (
            (0, 1),  # q0: a -> q0, b -> q1
            (1, 2),
            (2, 3),
            (3, 3),
        ),
    )


def dyck_grammar() -> ContextualGrammar:
    sel = LanguageHandle.from_regex("(c|d)*", _CD)
    return ContextualGrammar(_CD, (SelectionPair(sel, (Context("c", "d"),), "MON"),), ("",))


def kk_grammar(k: int) -> ContextualGrammar:
    words = ["_"] + ["a" * r + "b" for r in range(k + 2)]
    sel = LanguageHandle.from_regex("|".join(words), _AB)
    axioms = ("a" * (k + 1) + "b", "c" * k + "a" * (3 * k) + "b" + "d" * k)
    return ContextualGrammar(
        _ABCD, (SelectionPair(sel, (Context("c", "d"),), "SUF"),), axioms
    )


# ---------------------------------------------------------------------------
# independent enumeration oracles


def _check_desk_scale(max_len: int) -> None:
    if not (0 <= max_len <= MAX_DESK_LEN):
        raise InputError(f"max_len must be within 0..{MAX_DESK_LEN}")


def dyck_words_upto(max_len: int) -> list[str]:
    """Balanced words over (c, d): every prefix has #c >= #d, totals equal."""
    _check_desk_scale(max_len)
    out: list[str] = []

    def rec(cur: str, open_: int) -> None:
        if open_ == 0:
            out.append(cur)
        if len(cur) + open_ + 2 <= max_len:
            rec(cur + "c", open_ + 1)
        if open_ > 0 and len(cur) + open_ <= max_len:
            rec(cur + "d", open_ - 1)

    rec("", 0)
    return _CD.sort_words(out)


def is_balanced(word: str) -> bool:
    depth = 0
    for ch in word:
        if ch == "c":
            depth += 1
        elif ch == "d":
            depth -= 1
        else:
            return False
        if depth < 0:
            return False
    return depth == 0


def hierarchy_oracle(h: int, max_len: int) -> list[str]:
    _check_desk_scale(max_len)
    block = "a" + "b" * h
    out = []
    w = block
    while len(w) <= max_len:
        out.append(w)
        w += block
    return out


def ec35_oracle(max_len: int) -> list[str]:
    _check_desk_scale(max_len)
    words = {"a" * i for i in range(max_len + 1)}
    for i in range(max_len):
        for j in range(max_len - i):
            words.add("a" * i + "b" + "a" * j)
    for i in range(max_len - 2):
        for j in range(max_len - 2 - i):
            words.add("c" + "a" * i + "b" + "a" * j + "c")
    return _ABC.sort_words(w for w in words if len(w) <= max_len)


def ic32_oracle(max_len: int) -> list[str]:
    _check_desk_scale(max_len)
    out = []
    n = 0
    while 2 * n + 2 <= max_len:
        out.append("a" + "c" * n + "b" + "d" * n)
        n += 1
    return _ABCD.sort_words(out)


def ic33_oracle(n: int, max_len: int) -> list[str]:
    _check_desk_scale(max_len)
    words = []
    special = "a" * (n - 1) + "b" * n + "c" * (n - 1)
    if len(special) <= max_len:
        words.append(special)
    m = n
    while 2 * m + 2 * n <= max_len:
        words.append("a" * m + "b" * (2 * n) + "c" * m)
        m += 1
    return _ABC.sort_words(words)


def ic34_oracle(max_len: int) -> list[str]:
    _check_desk_scale(max_len)
    words = []
    for n in range(1, max_len):
        for m in range(1, max_len):
            if 2 * n + 2 * m <= max_len:
                words.append("a" * n + "b" * m + "c" * n + "d" * m)
    return _ABCD.sort_words(words)


def ic35_oracle(max_len: int) -> list[str]:
    _check_desk_scale(max_len)
    words = []
    for p1 in range(1, max_len):
        for p2 in range(1, max_len):
            for p3 in range(1, max_len):
                if 2 * (p1 + p2 + p3) + 4 <= max_len:
                    words.append(
                        "a" * p1 + "b" + "a" * p2 + "b" + "a" * (p3 + p1) + "b" + "a" * p2 + "b" + "a" * p3
                    )
    return _AB.sort_words(words)


def kk_core_words(k: int, max_len: int) -> list[str]:
    """The pre-insertion words: block-counted c/a/b/d forms plus the wrapped copies."""
    _check_desk_scale(max_len)
    words: list[str] = []

    def plain_upto(limit: int) -> list[str]:
        out: list[str] = []
        base = k + 2  # k+1 letters a plus the letter b
        max_total = (limit - base) // 2
        if max_total < 0:
            return out

        def rec(blocks: list[int], remaining: int, slots: int) -> None:
            if slots == 1:
                final = blocks + [remaining]
                parts = ["c" * m + "a" for m in final[:-1]]
                parts.append("c" * final[-1])
                out.append("".join(parts) + "b" + "d" * sum(final))
                return
            for m in range(remaining + 1):
                rec(blocks + [m], remaining - m, slots - 1)

        for total in range(max_total + 1):
            rec([], total, k + 2)
        return [w for w in out if len(w) <= limit]

    words.extend(plain_upto(max_len))
    wrap_extra = (3 * k - 1) + k  # c^k a^(2k-1) prefix and d^k suffix
    prefix = "c" * k + "a" * (2 * k - 1)
    suffix = "d" * k
    for w in plain_upto(max_len - wrap_extra):
        words.append(prefix + w + suffix)
    return _ABCD.sort_words(set(words))


def kk_oracle_upto(k: int, max_len: int) -> list[str]:
    """Closure of the core words under inserting `cd` at any position.

    Valid because every balanced word arises from the empty word by
    repeated single insertions, so inserting balanced words equals
    iterating single insertions.
    """
    if not (1 <= k <= _PARAM_CAPS["kk"]):
        raise InputError(f"kk parameter {k} out of range")
    _check_desk_scale(max_len)
    seen = set(kk_core_words(k, max_len))
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            if len(w) + 2 > max_len:
                continue
            for i in range(len(w) + 1):
                y = w[:i] + "cd" + w[i:]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return _ABCD.sort_words(seen)


def oracle_words(witness_id: str, max_len: int) -> list[str]:
    """The id's direct-enumeration oracle, bounded by max_len."""
    name, param = parse_witness_id(witness_id)
    if name == "dyck":
        return dyck_words_upto(max_len)
    if name == "kk":
        return kk_oracle_upto(param or 1, max_len)
    if name == "l-ec-35":
        return ec35_oracle(max_len)
    if name == "l-ic-32":
        return ic32_oracle(max_len)
    if name == "l-ic-33":
        return ic33_oracle(param or 2, max_len)
    if name == "l-ic-34":
        return ic34_oracle(max_len)
    if name == "l-ic-35":
        return ic35_oracle(max_len)
    if name == "slt-hierarchy":
        return hierarchy_oracle(param or 1, max_len)
    built = build_witness(witness_id)
    if isinstance(built, LanguageHandle):
        return built.bounded_words(max_len)
    raise InputError(f"no enumeration oracle for witness {witness_id!r}")


# ---------------------------------------------------------------------------
# lemma verification


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "out-of-scope"
    detail: str = ""

    def render(self) -> str:
        line = f"  {self.status.upper():12s} {self.name}"
        if self.detail:
            line += f": {self.detail}"
        return line


@dataclass(frozen=True)
class LemmaReport:
    witness_id: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def render(self) -> list[str]:
        head = f"{self.witness_id}: {'PASS' if self.passed else 'FAIL'}"
        return [head] + [c.render() for c in self.checks]

    def render_porcelain(self) -> list[str]:
        return [
            f"lemma={self.witness_id} check={c.name} status={c.status}"
            for c in self.checks
        ]


def _chk(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", detail)


def _scope(name: str) -> CheckResult:
    return CheckResult(name, "out-of-scope", "proof-level claim over all grammars")


_DEFAULT_MAX_LEN = {"l-ic-35": 14}


def verify_lemma(witness_id: str, max_len: int | None = None, k_max: int | None = None) -> LemmaReport:
    name, param = parse_witness_id(witness_id)
    if max_len is None:
        max_len = _DEFAULT_MAX_LEN.get(name, 12)
    _check_desk_scale(max_len)
    checks: list[CheckResult]

    if name == "l-abna":
        handle = build_witness(witness_id)
        res = is_slt_k(handle.dfa, 1)
        printed = make_rep(1, _AB, ["a"], ["b"], ["a"])
        rep_ok = bool(res) and are_equivalent(slt_to_dfa(printed), handle.dfa).equal
        checks = [
            _chk("window-testable-at-1", rep_ok, "representation ({a},{b},{a},{})"),
            _chk("not-definite", is_definite(handle.dfa).value == "no"),
        ]
    elif name == "slt-hierarchy":
        handle = build_witness(witness_id)
        h = param or 1
        up = is_slt_k(handle.dfa, h + 1)
        low = is_slt_k(handle.dfa, h)
        gen_ok = handle.bounded_words(max_len) == hierarchy_oracle(h, max_len)
        checks = [
            _chk(f"window-testable-at-{h + 1}", bool(up)),
            _chk(f"not-window-testable-at-{h}", not low, f"witness={low.witness or '_'}"),
            _chk("matches-block-oracle", gen_ok),
        ]
    elif name == "lk-fin":
        handle = build_witness(witness_id)
        k = param or 1
        res = is_slt_k(handle.dfa, k)
        checks = [
            _chk("finite", is_finite(handle.dfa).value == "yes"),
            _chk(
                f"not-window-testable-at-{k}",
                not res and res.witness == "a" * k,
                f"canonical candidate admits {res.witness or '_'}",
            ),
        ]
    elif name == "mon-to-slt1":
        handle = build_witness(witness_id)
        rep = definite_to_slt((), ("",), _AB)
        fields = rep.sorted_fields()
        structural = (
            rep.k == 1
            and fields[0] == list(_AB.symbols)
            and fields[1] == list(_AB.symbols)
            and fields[2] == list(_AB.symbols)
            and fields[3] == [""]
        )
        checks = [
            _chk("monoidal", is_monoidal(handle.dfa).value == "yes"),
            _chk("window-rep-is-(V,V,V,{_})", structural),
            _chk(
                "rep-equivalent-to-universe",
                are_equivalent(slt_to_dfa(rep), handle.dfa).equal,
            ),
        ]
    elif name == "comb-to-slt1":
        handle = build_witness(witness_id)
        comb = is_combinational(handle.dfa)
        rep = make_rep(1, _AB, _AB.symbols, _AB.symbols, comb.payload or ())
        checks = [
            _chk("combinational", comb.value == "yes" and comb.payload == ("b",), "X={b}"),
            _chk(
                "window-rep-(V,V,X,{})-equivalent",
                are_equivalent(slt_to_dfa(rep), handle.dfa).equal,
            ),
            _chk("window-testable-at-1", bool(is_slt_k(handle.dfa, 1))),
        ]
    elif name == "def-to-slt":
        handle = build_witness(witness_id)
        ds, de = ("a",), ("ab",)
        rep = definite_to_slt(ds, de, _AB)
        checks = [
            _chk("definite", is_definite(handle.dfa).value == "yes"),
            _chk(
                "construction-equivalent",
                are_equivalent(slt_to_dfa(rep), handle.dfa).equal,
                f"k={rep.k}",
            ),
        ]
    elif name == "l-ec-35":
        g = ec35_grammar()
        ord0 = is_orderable(g.pairs[0].selector.dfa)
        ord1 = is_orderable(g.pairs[1].selector.dfa)
        cert1_ok = (
            ord1.value == "yes"
            and ord1.payload.dfa.n_states == 2  # type: ignore[union-attr]
            and verify_order(ord1.payload.dfa, ord1.payload.order)  # type: ignore[union-attr]
        )
        slt_sweep = infer_slt(g.pairs[1].selector.dfa, k_max)
        gen = generate_bounded(g, "ex", max_len, check_invariants=True)
        checks = [
            _chk("selector-0-orderable", ord0.value == "yes"),
            _chk("selector-1-orderable-2-states", cert1_ok),
            _chk(
                f"selector-1-not-window-testable-up-to-{slt_sweep.k_max}",
                not slt_sweep.found,
                "bounded verdict",
            ),
            _chk("external-generation-matches-oracle", gen == ec35_oracle(max_len)),
            _scope("not-EC(SLT)"),
        ]
    elif name == "l-ic-32":
        g = ic32_grammar()
        sel = g.pairs[0].selector
        res = is_slt_k(sel.dfa, 1)
        b_alpha = Alphabet.of("b")
        printed = make_rep(1, b_alpha, ["b"], ["b"], ["b"])
        checks = [
            _chk(
                "selector-window-testable-at-1",
                bool(res) and are_equivalent(slt_to_dfa(printed), sel.dfa).equal,
                "representation ({b},{b},{b},{})",
            ),
            _chk(
                "internal-generation-matches-oracle",
                generate_bounded(g, "in", max_len, check_invariants=True) == ic32_oracle(max_len),
            ),
            _scope("not-IC(COMB)"),
        ]
    elif name == "l-ic-33":
        n = param or 2
        g_slt, g_fin = ic33_grammars(n)
        sel = g_slt.pairs[0].selector
        res = is_slt_k(sel.dfa, n)
        printed = make_rep(
            n, _ABC, ["a" * n], _ABC.words_of_length(n), ["c" * n]
        )
        out_slt = generate_bounded(g_slt, "in", max_len, check_invariants=True)
        out_fin = generate_bounded(g_fin, "in", max_len, check_invariants=True)
        checks = [
            _chk(
                f"selector-window-testable-at-{n}",
                bool(res) and are_equivalent(slt_to_dfa(printed), sel.dfa).equal,
            ),
            _chk("finite-selector-finite", is_finite(g_fin.pairs[0].selector.dfa).value == "yes"),
            _chk(
                "short-axiom-never-selected",
                not sel.contains(g_slt.axioms[1]),
                f"axiom {g_slt.axioms[1]}",
            ),
            _chk("generation-matches-oracle", out_slt == ic33_oracle(n, max_len)),
            _chk("both-grammars-agree", out_slt == out_fin),
            _scope(f"not-IC(SLT{n - 1})"),
        ]
    elif name == "l-ic-34":
        g = ic34_grammar()
        ac_res = is_slt_k(g.pairs[0].selector.dfa, 1)
        bd_res = is_slt_k(g.pairs[1].selector.dfa, 1)
        checks = [
            _chk("selector-ac-window-testable-at-1", bool(ac_res)),
            _chk("selector-bd-window-testable-at-1", bool(bd_res)),
            _chk(
                "internal-generation-matches-oracle",
                generate_bounded(g, "in", max_len, check_invariants=True) == ic34_oracle(max_len),
            ),
            _scope("not-IC(DEF)"),
        ]
    elif name == "l-ic-35":
        g = ic35_grammar()
        sel = g.pairs[0].selector
        table = ic35_table_dfa()
        oracle = ic35_oracle(max_len)
        ordv = is_orderable(sel.dfa)
        sweep = infer_slt(sel.dfa, k_max)
        checks = [
            _chk(
                "axiom-is-minimal-element",
                g.axioms[0] == "ababaababa" == min(oracle, key=len),
            ),
            _chk(
                "published-table-accepts-selector",
                are_equivalent(table, sel.dfa).equal,
            ),
            _chk("published-order-is-monotone", verify_order(table, (0, 1, 2, 3))),
            _chk("selector-orderable", ordv.value == "yes"),
            _chk(
                f"selector-not-window-testable-up-to-{sweep.k_max}",
                not sweep.found,
                "bounded verdict",
            ),
            _chk(
                "internal-generation-matches-oracle",
                generate_bounded(g, "in", max_len, check_invariants=True) == oracle,
            ),
            _scope("not-IC(SLT)"),
        ]
    elif name == "dyck":
        g = dyck_grammar()
        gen = generate_bounded(g, "in", max_len, check_invariants=True)
        checks = [
            _chk("selector-monoidal", is_monoidal(g.pairs[0].selector.dfa).value == "yes"),
            _chk("generation-matches-balance-counter", gen == dyck_words_upto(max_len)),
            _chk("all-generated-words-balanced", all(is_balanced(w) for w in gen)),
        ]
    elif name == "kk":
        k = param or 1
        g = kk_grammar(k)
        sel = g.pairs[0].selector
        checks = [
            _chk("selector-suffix-closed", is_suffix_closed(sel.dfa).value == "yes"),
            _chk("selector-finite", is_finite(sel.dfa).value == "yes"),
            _chk(
                "internal-generation-matches-oracle",
                generate_bounded(g, "in", max_len, check_invariants=True) == kk_oracle_upto(k, max_len),
            ),
            _scope(f"not-IC(SLT{k})"),
        ]
    else:  # pragma: no cover
        raise AssertionError(name)

    return LemmaReport(witness_id, tuple(checks))
