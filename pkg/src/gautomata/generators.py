"""Seeded random automata for property checks."""
from __future__ import annotations

import itertools
import random

from .automaton import make_automaton
from .lattice import AbelianSpec


def random_automaton(
    rng: random.Random,
    max_vertices: int = 4,
    max_edges: int = 8,
    max_rank: int = 2,
    label_range: int = 2,
    alphabet: str = "ab",
    eps_prob: float = 0.3,
):
    rank = rng.randint(1, max_rank)
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(rng.randint(1, max_edges)):
        src, dst = rng.choice(vertices), rng.choice(vertices)
        g = tuple(rng.randint(-label_range, label_range) for _ in range(rank))
        sigma = "" if rng.random() < eps_prob else rng.choice(alphabet)
        edges.append((f"e{i}", src, dst, g, sigma))
    return make_automaton(AbelianSpec(rank), alphabet, vertices, edges, rng.choice(vertices), rng.choice(vertices))


def all_words(alphabet, max_len: int):
    for n in range(max_len + 1):
        for letters in itertools.product(sorted(alphabet), repeat=n):
            yield "".join(letters)
