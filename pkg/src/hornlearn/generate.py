"""Seeded random targets and the named corpus of worked examples."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import HornFormula, Implication
from .oracles import family_member

__all__ = ["GenConfig", "random_formula", "example_corpus", "family_member"]


@dataclass(frozen=True)
class GenConfig:
    """Shape of a random definite Horn formula.

    Antecedent and consequent variable sets are drawn uniformly with sizes
    in the given inclusive ranges; they may overlap, and nothing prevents
    duplicate or redundant implications, which make good stress inputs for
    basis computation and learners.
    """

    arity: int
    count: int
    antecedent_sizes: tuple[int, int] | None = None
    consequent_sizes: tuple[int, int] | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError(f"negative arity {self.arity}")
        if self.count < 0:
            raise ValueError(f"negative implication count {self.count}")
        if self.antecedent_sizes is None:
            object.__setattr__(self, "antecedent_sizes", (0, min(3, self.arity)))
        if self.consequent_sizes is None:
            object.__setattr__(
                self, "consequent_sizes", (1, max(1, min(3, self.arity)))
            )
        alo, ahi = self.antecedent_sizes
        clo, chi = self.consequent_sizes
        if not 0 <= alo <= ahi <= self.arity:
            raise ValueError(f"infeasible antecedent size range {alo}..{ahi}")
        if not 1 <= clo <= chi:
            raise ValueError(f"infeasible consequent size range {clo}..{chi}")
        if self.count and chi > self.arity:
            raise ValueError(
                f"consequent size {chi} impossible with arity {self.arity}"
            )


def random_formula(config: GenConfig) -> HornFormula:
    """Deterministic-per-seed random formula matching the configuration."""
    rng = random.Random(config.seed)
    alo, ahi = config.antecedent_sizes
    clo, chi = config.consequent_sizes
    variables = range(config.arity)
    imps = []
    for _ in range(config.count):
        ant = rng.sample(variables, rng.randint(alo, ahi))
        con = rng.sample(variables, rng.randint(clo, chi))
        imps.append(Implication(frozenset(ant), frozenset(con)))
    return HornFormula(config.arity, imps)


def _imp(antecedent: str, consequent: str) -> Implication:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return Implication(
        frozenset(letters.index(ch) for ch in antecedent),
        frozenset(letters.index(ch) for ch in consequent),
    )


def example_corpus() -> dict[str, HornFormula]:
    """Named worked examples.

    * ``gd-example``: the classic six-implication formula over a..e whose
      antecedent closures split into the three classes ed / bcd / abcde.
    * ``bullet-example``: the four-variable formula {a->b, a->c, c->d},
      where the closure of {a,c} is {a,b,c,d} but its quasi-closure is only
      {a,c,d}.

    Unknown names raise KeyError.  The two-model family constructor is
    re-exported as :func:`family_member`.
    """
    return {
        "gd-example": HornFormula(
            5,
            [
                _imp("e", "d"),
                _imp("bc", "d"),
                _imp("bd", "c"),
                _imp("cd", "b"),
                _imp("ad", "bce"),
                _imp("ce", "ab"),
            ],
            names=tuple("abcde"),
        ),
        "bullet-example": HornFormula(
            4,
            [_imp("a", "b"), _imp("a", "c"), _imp("c", "d")],
            names=tuple("abcd"),
        ),
    }
