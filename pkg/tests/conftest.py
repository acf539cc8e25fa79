from __future__ import annotations

import random
from fractions import Fraction as F

from lotus.complexes import new_lotus


def random_lotus(rng: random.Random, max_petals: int = 12, max_branches: int = 3):
    """A random well-formed lotus with a few arrowhead branches attached."""
    lotus = new_lotus("L", "L1")
    petals = rng.randint(1, max_petals)
    for _ in range(petals):
        candidates = [
            (u, v) for u, v in lotus.edges() if lotus.petal_on(u, v) is None
        ]
        lotus.add_petal(*rng.choice(candidates))
        if rng.random() < 0.2:
            exceptional = [v.id for v in lotus.vertices if v.kind == "exceptional"]
            lotus.add_base_edge(
                rng.choice(exceptional), f"L{len(lotus.vertices)}", arrowhead=False
            )
    exceptional = [v.id for v in lotus.vertices if v.kind == "exceptional"]
    for i in range(rng.randint(1, max_branches)):
        lotus.add_base_edge(rng.choice(exceptional), f"A{i + 1}", arrowhead=True)
    lotus.validate()
    return lotus


SMALL_EXPONENT_STEPS = [
    F(1, 2), F(1, 3), F(2, 3), F(1, 4), F(3, 4), F(1), F(5, 4), F(4, 3), F(3, 2), F(2)
]


def random_series_text(rng: random.Random, max_terms: int = 3) -> str:
    exponent = F(0)
    body = ""
    for _ in range(rng.randint(1, max_terms)):
        exponent += rng.choice(SMALL_EXPONENT_STEPS)
        sign = rng.choice([" + ", " - "]) if body else rng.choice(["", "-"])
        body += f"{sign}{rng.choice([1, 2, 3])}*x^({exponent.numerator}/{exponent.denominator})"
    return body
