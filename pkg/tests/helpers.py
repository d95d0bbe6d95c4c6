"""Shared builders and brute-force oracles for the test suite.

The brute-force pieces deliberately avoid the library's forward-chaining
code: satisfaction is evaluated straight from the implication definition,
closures come from meets of enumerated models, so they can serve as
independent ground truth.
"""

from __future__ import annotations

import random

from hornlearn import Assignment, HornFormula, Implication

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def vs(letters: str) -> frozenset[int]:
    """Variable set from letters: vs("ac") == {0, 2}."""
    return frozenset(LETTERS.index(ch) for ch in letters)


def imp(antecedent: str, consequent: str) -> Implication:
    return Implication(vs(antecedent), vs(consequent))


def formula(arity: int, *imps: tuple[str, str]) -> HornFormula:
    return HornFormula(arity, [imp(a, c) for a, c in imps])


def asg(bits: str) -> Assignment:
    return Assignment.from_string(bits)


def lex_key(mask: int, n: int) -> int:
    key = 0
    for i in range(n):
        key = (key << 1) | ((mask >> i) & 1)
    return key


def imp_masks(f: HornFormula) -> list[tuple[int, int]]:
    return [
        (
            sum(1 << v for v in i.antecedent),
            sum(1 << v for v in i.consequent),
        )
        for i in f.implications
    ]


def brute_model_masks(f: HornFormula) -> list[int]:
    """Satisfying assignments by direct per-mask evaluation, ascending masks."""
    pairs = imp_masks(f)
    out = []
    for mask in range(1 << f.arity):
        if all(not (a & mask == a and c & mask != c) for a, c in pairs):
            out.append(mask)
    return out


def model_table(f: HornFormula) -> int:
    """Big-int model indicator: bit z is set iff assignment z satisfies f.

    Walks the supersets of each antecedent and clears the violating ones,
    which is much faster than a full scan for formulas with few implications.
    """
    n = f.arity
    table = (1 << (1 << n)) - 1
    for a, c in imp_masks(f):
        free = ((1 << n) - 1) & ~a
        s = free
        while True:
            x = a | s
            if c & x != c:
                table &= ~(1 << x)
            if s == 0:
                break
            s = (s - 1) & free
    return table


def brute_equivalent(f: HornFormula, g: HornFormula) -> bool:
    assert f.arity == g.arity
    return model_table(f) == model_table(g)


def brute_closure_mask(mask: int, f: HornFormula) -> int:
    """Closure as the meet of all models above `mask` (no forward chaining)."""
    out = (1 << f.arity) - 1
    for m in brute_model_masks(f):
        if m & mask == mask:
            out &= m
    return out


def superset_meets(model_masks: list[int], n: int) -> list[int]:
    """For every z, the meet of all given masks above z (-1 when none)."""
    size = 1 << n
    meets = [-1] * size
    for m in model_masks:
        meets[m] = m
    for i in range(n):
        bit = 1 << i
        for z in range(size):
            if not z & bit:
                src = meets[z | bit]
                if src != -1:
                    cur = meets[z]
                    meets[z] = src if cur == -1 else cur & src
    return meets


def augment(f: HornFormula, rng: random.Random, extra: int = 3) -> HornFormula:
    """An equivalent formula: adds implications entailed by f, then shuffles.

    Each added implication draws a random antecedent and a nonempty subset
    of its closure as consequent, so the represented function is unchanged.
    """
    from hornlearn import closure

    n = f.arity
    imps = list(f.implications)
    for _ in range(extra):
        ant = frozenset(rng.sample(range(n), rng.randint(0, min(3, n))))
        closed = sorted(closure(ant, f))
        if not closed:
            continue
        size = rng.randint(1, len(closed))
        imps.append(Implication(ant, frozenset(rng.sample(closed, size))))
    rng.shuffle(imps)
    return HornFormula(n, imps, f.names)
