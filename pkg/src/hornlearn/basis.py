"""Saturation predicates and the canonical (Guigues-Duquenne) basis.

An implication of a formula H is right-saturated when its consequent equals
the closure of its antecedent, left-saturated when its antecedent equals its
own quasi-closure, and saturated when both hold (always with respect to H
itself).  A definite Horn function has at most one fully saturated basis,
which also has the minimum number of implications; the pipeline here
computes it as right-saturate, then left-saturate, then drop redundant
implications.
"""

from __future__ import annotations

from .core import HornFormula, Implication, _chain, _vars_of


def right_saturate(formula: HornFormula) -> HornFormula:
    """Replace every consequent by the closure of its antecedent."""
    imps = [
        Implication(imp.antecedent, _vars_of(formula.close(a)))
        for imp, (a, _) in zip(formula.implications, formula._pairs)
    ]
    return HornFormula(formula.arity, imps, formula.names)


def is_right_saturated(formula: HornFormula) -> bool:
    return all(c == formula.close(a) for a, c in formula._pairs)


def is_left_saturated(formula: HornFormula) -> bool:
    pairs = formula._pairs
    cls = [formula.close(a) for a, _ in pairs]
    for i, (a, _) in enumerate(pairs):
        rest = [pairs[j] for j in range(len(pairs)) if cls[j] != cls[i]]
        if _chain(a, rest) != a:
            return False
    return True


def is_saturated(formula: HornFormula) -> bool:
    return is_right_saturated(formula) and is_left_saturated(formula)


def left_saturate(formula: HornFormula) -> HornFormula:
    """Replace every antecedent by its quasi-closure, iterating to a fixpoint.

    Requires a right-saturated input.  Each pass recomputes the antecedent
    closures (the implication classes) and rewrites antecedents one at a
    time, chaining over the already-updated implication list.  A rewrite
    preserves the represented function, so the closures taken at the start
    of a pass stay valid throughout it.  Consequents are re-closed on
    rewrite, which keeps the formula right-saturated.
    """
    if not is_right_saturated(formula):
        raise ValueError("left_saturate requires a right-saturated formula")
    pairs = [list(p) for p in formula._pairs]
    while True:
        plist = [tuple(p) for p in pairs]
        cls = [_chain(a, plist) for a, _ in plist]
        changed = False
        for i in range(len(pairs)):
            a = pairs[i][0]
            rest = [tuple(pairs[j]) for j in range(len(pairs)) if cls[j] != cls[i]]
            bullet = _chain(a, rest)
            if bullet != a:
                pairs[i][0] = bullet
                pairs[i][1] = cls[i]  # (quasi-closure)* equals the old closure
                changed = True
        if not changed:
            break
    imps = [Implication(_vars_of(a), _vars_of(c)) for a, c in pairs]
    return HornFormula(formula.arity, imps, formula.names)


def remove_redundant(formula: HornFormula) -> HornFormula:
    """Drop, in list order, every implication entailed by the remaining ones."""
    pairs = list(formula._pairs)
    imps = list(formula.implications)
    i = 0
    while i < len(pairs):
        a, c = pairs[i]
        rest = pairs[:i] + pairs[i + 1 :]
        if c & _chain(a, rest) == c:
            del pairs[i]
            del imps[i]
        else:
            i += 1
    return HornFormula(formula.arity, imps, formula.names)


def gd_basis(formula: HornFormula) -> HornFormula:
    """The unique saturated, minimum-size implication basis of the formula.

    Equivalent inputs yield the same implication set, whatever their
    ordering or redundancy.
    """
    return remove_redundant(left_saturate(right_saturate(formula)))
