"""Seeded random monomial ideals for property sweeps."""

from __future__ import annotations

import random

from .monomial import MonomialIdeal, default_var_names, is_generic, minimalize


def random_generic_ideal(rng: random.Random, max_n: int = 4, max_r: int = 8,
                         min_n: int = 2) -> MonomialIdeal:
    """Generic ideal: in each variable the non-zero exponents are distinct."""
    n = rng.randint(min_n, max_n)
    r = rng.randint(1, max_r)
    cols = []
    for _ in range(n):
        vals = rng.sample(range(1, r + 3), r)
        cols.append([0 if rng.random() < 0.25 else v for v in vals])
    gens = [tuple(cols[s][i] for s in range(n)) for i in range(r)]
    gens = [g for g in gens if any(g)] or [tuple(1 if s == 0 else 0 for s in range(n))]
    ideal = minimalize(gens, default_var_names(n))
    assert is_generic(ideal)
    return ideal


def random_nongeneric_ideal(rng: random.Random, max_n: int = 4, max_r: int = 8,
                            top: int = 2) -> MonomialIdeal:
    """Ideal with small exponents and at least one forced exponent collision."""
    while True:
        n = rng.randint(2, max_n)
        r = rng.randint(3, max_r)
        gens = [tuple(rng.randint(0, top) for _ in range(n)) for _ in range(r)]
        gens = [g for g in gens if any(g)]
        if len(gens) < 2:
            continue
        ideal = minimalize(gens, default_var_names(n))
        if not is_generic(ideal):
            return ideal


def random_monomial(rng: random.Random, bound) -> tuple:
    return tuple(rng.randint(0, b) for b in bound)
