import math

import numpy as np

from bridgekit.groups import SfsGroup
from bridgekit.groups.words import Letter


def random_fiber(rng: np.random.Generator, max_alpha: int = 7) -> tuple[int, int]:
    "(α, β) with 2 <= α <= max_alpha, |β| < 2α and gcd(α, β) = 1"
    while True:
        alpha = int(rng.integers(2, max_alpha + 1))
        beta = int(rng.integers(-2 * alpha + 1, 2 * alpha))
        if math.gcd(alpha, beta) == 1:
            return alpha, beta


def random_group(rng: np.random.Generator, max_alpha: int = 7) -> SfsGroup:
    a1, b1 = random_fiber(rng, max_alpha)
    a2, b2 = random_fiber(rng, max_alpha)
    return SfsGroup(a1, b1, a2, b2)


def random_letters(rng: np.random.Generator, length: int = 8, max_power: int = 6) -> list[Letter]:
    gens = ["c1", "c2", "h"]
    return [(gens[int(rng.integers(0, 3))], int(rng.integers(-max_power, max_power + 1))) for _ in range(length)]
