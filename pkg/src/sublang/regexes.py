"""Regular expression trees and their compilation to minimal DFAs.

Surface syntax: juxtaposition for product, `|` for union, postfix `*`,
parentheses, `_` for the empty word.  No character classes.  Whitespace
is ignored, so `b b*` reads as `bb*`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet, Dfa, InputError, Nfa, minimize


class RegexAst:
    """Base class for expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(RegexAst):
    """The empty language (no surface syntax; API-level only)."""


@dataclass(frozen=True)
class Epsilon(RegexAst):
    pass


@dataclass(frozen=True)
class Sym(RegexAst):
    char: str


@dataclass(frozen=True)
class Concat(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Union(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Star(RegexAst):
    inner: RegexAst


_META = set("|*()_")


def parse_regex(text: str) -> RegexAst:
    """Recursive-descent parser for the surface syntax above."""
    src = [c for c in text if not c.isspace()]
    pos = 0

    def peek() -> str | None:
        return src[pos] if pos < len(src) else None

    def union_expr() -> RegexAst:
        nonlocal pos
        node = concat_expr()
        while peek() == "|":
            pos += 1
            node = Union(node, concat_expr())
        return node

    def concat_expr() -> RegexAst:
        nonlocal pos
        node = starred()
        while True:
            c = peek()
            if c is None or c in "|)":
                return node
            node = Concat(node, starred())

    def starred() -> RegexAst:
        nonlocal pos
        node = base()
        while peek() == "*":
            pos += 1
            node = Star(node)
        return node

    def base() -> RegexAst:
        nonlocal pos
        c = peek()
        if c is None:
            raise InputError(f"unexpected end of expression in {text!r}")
        if c == "(":
            pos += 1
            node = union_expr()
            if peek() != ")":
                raise InputError(f"unbalanced parenthesis in {text!r}")
            pos += 1
            return node
        if c == "_":
            pos += 1
            return Epsilon()
        if c in _META:
            raise InputError(f"unexpected {c!r} at position {pos} in {text!r}")
        pos += 1
        return Sym(c)

    if not src:
        raise InputError("empty regular expression")
    node = union_expr()
    if pos != len(src):
        raise InputError(f"trailing input at position {pos} in {text!r}")
    return node


def render_regex(ast: RegexAst) -> str:
    """Inverse of parse_regex for all nodes except Empty."""

    def prec(node: RegexAst) -> int:
        if isinstance(node, Union):
            return 0
        if isinstance(node, Concat):
            return 1
        return 2

    def go(node: RegexAst, ctx: int) -> str:
        if isinstance(node, Empty):
            raise InputError("the empty language has no surface syntax")
        if isinstance(node, Epsilon):
            return "_"
        if isinstance(node, Sym):
            return node.char
        if isinstance(node, Union):
            s = go(node.left, 0) + "|" + go(node.right, 0)
        elif isinstance(node, Concat):
            s = go(node.left, 1) + go(node.right, 2)
        elif isinstance(node, Star):
            s = go(node.inner, 3) + "*"
        else:  # pragma: no cover
            raise TypeError(node)
        return "(" + s + ")" if prec(node) < ctx else s

    return go(ast, 0)


def symbols_of(ast: RegexAst) -> list[str]:
    """Distinct symbols in first-appearance order."""
    out: list[str] = []
    seen: set[str] = set()

    def walk(node: RegexAst) -> None:
        if isinstance(node, Sym):
            if node.char not in seen:
                seen.add(node.char)
                out.append(node.char)
        elif isinstance(node, (Concat, Union)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Star):
            walk(node.inner)

    walk(ast)
    return out


def is_union_free(ast: RegexAst) -> bool:
    """True iff no union node occurs (a certificate on this expression only)."""
    if isinstance(ast, (Concat, Union)):
        if isinstance(ast, Union):
            return False
        return is_union_free(ast.left) and is_union_free(ast.right)
    if isinstance(ast, Star):
        return is_union_free(ast.inner)
    return True


def to_nfa(ast: RegexAst, alphabet: Alphabet) -> Nfa:
    """Thompson construction."""
    nfa = Nfa(alphabet)

    def build(node: RegexAst) -> tuple[int, int]:
        if isinstance(node, Empty):
            return nfa.add_state(), nfa.add_state()
        if isinstance(node, Epsilon):
            s = nfa.add_state()
            t = nfa.add_state()
            nfa.add_edge(s, None, t)
            return s, t
        if isinstance(node, Sym):
            if node.char not in alphabet:
                raise InputError(f"symbol {node.char!r} not in alphabet {''.join(alphabet.symbols)!r}")
            s = nfa.add_state()
            t = nfa.add_state()
            nfa.add_edge(s, node.char, t)
            return s, t
        if isinstance(node, Concat):
            s1, t1 = build(node.left)
            s2, t2 = build(node.right)
            nfa.add_edge(t1, None, s2)
            return s1, t2
        if isinstance(node, Union):
            s1, t1 = build(node.left)
            s2, t2 = build(node.right)
            s = nfa.add_state()
            t = nfa.add_state()
            nfa.add_edge(s, None, s1)
            nfa.add_edge(s, None, s2)
            nfa.add_edge(t1, None, t)
            nfa.add_edge(t2, None, t)
            return s, t
        if isinstance(node, Star):
            s1, t1 = build(node.inner)
            s = nfa.add_state()
            t = nfa.add_state()
            nfa.add_edge(s, None, s1)
            nfa.add_edge(s, None, t)
            nfa.add_edge(t1, None, s1)
            nfa.add_edge(t1, None, t)
            return s, t
        raise TypeError(node)  # pragma: no cover

    s, t = build(ast)
    nfa.starts.add(s)
    nfa.accepting.add(t)
    return nfa


def compile_regex(ast: RegexAst | str, alphabet: Alphabet | None = None) -> Dfa:
    """Minimal DFA of the denoted language.

    With no explicit alphabet, the symbols of the expression in
    first-appearance order are used.
    """
    if isinstance(ast, str):
        ast = parse_regex(ast)
    if alphabet is None:
        syms = symbols_of(ast)
        if not syms:
            raise InputError("cannot infer an alphabet from a symbol-free expression")
        alphabet = Alphabet.of(syms)
    return minimize(to_nfa(ast, alphabet).determinize())
