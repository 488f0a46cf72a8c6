import random

from dyckrepair.core import ParenString


def random_string(rng: random.Random, max_len=14, max_s=3, min_len=0):
    s = rng.randint(1, max_s)
    n = rng.randint(min_len, max_len)
    return ParenString(tuple(rng.choice((1, -1)) * rng.randint(1, s) for _ in range(n)), s)
