import itertools
import random

import pytest

from sublang.automata import Alphabet, Dfa, minimize
from sublang.regexes import Concat, Empty, Epsilon, RegexAst, Star, Sym, Union


def all_words(symbols: str, max_len: int) -> list[str]:
    """Every word up to max_len, sorted (length, lex by the given order)."""
    out = []
    for n in range(max_len + 1):
        out.extend("".join(t) for t in itertools.product(symbols, repeat=n))
    return out


def brute_accepted(d: Dfa, max_len: int) -> list[str]:
    """Oracle for enumerate_upto: filter the full word space by accepts."""
    return [w for w in all_words("".join(d.alphabet.symbols), max_len) if d.accepts(w)]


def ast_match(ast: RegexAst, word: str) -> bool:
    """Independent regex matcher: position-set interpretation of the tree.

    Deliberately avoids the NFA/DFA pipeline so regex compilation has a
    second route to be checked against.
    """

    def ends(node: RegexAst, i: int) -> set[int]:
        if isinstance(node, Empty):
            return set()
        if isinstance(node, Epsilon):
            return {i}
        if isinstance(node, Sym):
            if i < len(word) and word[i] == node.char:
                return {i + 1}
            return set()
        if isinstance(node, Concat):
            return {j for m in ends(node.left, i) for j in ends(node.right, m)}
        if isinstance(node, Union):
            return ends(node.left, i) | ends(node.right, i)
        if isinstance(node, Star):
            reached = {i}
            frontier = [i]
            while frontier:
                m = frontier.pop()
                for j in ends(node.inner, m):
                    if j not in reached:
                        reached.add(j)
                        frontier.append(j)
            return reached
        raise TypeError(node)

    return len(word) in ends(ast, 0)


def random_dfa(rng: random.Random, max_states: int = 5, symbols: str = "ab") -> Dfa:
    """A random complete DFA, minimized (canonically numbered)."""
    n = rng.randint(1, max_states)
    alpha = Alphabet.of(symbols)
    trans = tuple(
        tuple(rng.randrange(n) for _ in symbols) for _ in range(n)
    )
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return minimize(Dfa(alpha, n, rng.randrange(n), accepting, trans))


def random_regex_ast(rng: random.Random, depth: int = 3, symbols: str = "ab") -> RegexAst:
    roll = rng.random()
    if depth == 0 or roll < 0.4:
        if rng.random() < 0.15:
            return Epsilon()
        return Sym(rng.choice(symbols))
    if roll < 0.65:
        return Concat(random_regex_ast(rng, depth - 1, symbols), random_regex_ast(rng, depth - 1, symbols))
    if roll < 0.85:
        return Union(random_regex_ast(rng, depth - 1, symbols), random_regex_ast(rng, depth - 1, symbols))
    return Star(random_regex_ast(rng, depth - 1, symbols))


@pytest.fixture(scope="session")
def corpus() -> list[Dfa]:
    """Small fixed set of interesting languages for cross-checking."""
    from sublang.regexes import compile_regex

    ab = Alphabet.of("ab")
    specs = [
        ("a|ab*a", ab),
        ("ab(ab)*", ab),
        ("abb(abb)*", ab),
        ("a*b(a|b)*", ab),
        ("(a|b)*b", ab),
        ("a*ba*", ab),
        ("(a|b)*", ab),
        ("aa", ab),
        ("a*", ab),
        ("b", ab),
        ("a*ba*ba*", ab),
        ("(aa)*", ab),
        ("_|b|ab|aab", ab),
    ]
    return [compile_regex(expr, alpha) for expr, alpha in specs]
