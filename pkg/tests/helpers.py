"""Shared generators for the test suite."""

import random

from altermatic import SignVector, SimpleGraph


def random_sign_vector(rng: random.Random, n: int) -> SignVector:
    reds = blues = 0
    for p in range(n):
        r = rng.random()
        if r < 1 / 3:
            reds |= 1 << p
        elif r < 2 / 3:
            blues |= 1 << p
    return SignVector(n, reds, blues)


def all_sign_vectors(n: int):
    for code in range(3**n):
        reds = blues = 0
        c = code
        for p in range(n):
            c, digit = divmod(c, 3)
            if digit == 1:
                reds |= 1 << p
            elif digit == 2:
                blues |= 1 << p
        yield SignVector(n, reds, blues)


def sub_vectors(y: SignVector):
    """All x with x below y componentwise, via subsets of y's support."""
    support = [p for p in range(y.n) if (y.reds | y.blues) >> p & 1]
    for code in range(1 << len(support)):
        reds = blues = 0
        for i, p in enumerate(support):
            if code >> i & 1:
                bit = 1 << p
                if y.reds & bit:
                    reds |= bit
                else:
                    blues |= bit
        yield SignVector(y.n, reds, blues)


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return SimpleGraph.from_edges(n, pairs)
