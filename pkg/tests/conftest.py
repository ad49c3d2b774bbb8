"""Shared randomized generators for property tests.

random_alternating_graph builds graphs whose tree expansion provably
alternates mod 8: a series-parallel core whose edges all share one sign
(duplicating an edge in parallel or subdividing it preserves the
alternation pattern), then pendant edges and loops of either sign, each
of which multiplies the polynomial by a single monomial.
"""

import random

from qalt.tait import SignedPlanarGraph


def random_alternating_graph(rng: random.Random, max_edges: int = 10):
    sign = rng.choice((1, -1))
    n = 2
    edges = [(0, 1, sign)]
    core_ops = rng.randint(0, max_edges - 4)
    for _ in range(core_ops):
        i = rng.randrange(len(edges))
        u, v, s = edges[i]
        if rng.random() < 0.5:
            edges.append((u, v, sign))
        else:
            edges[i] = (u, n, s)
            edges.append((n, v, sign))
            n += 1
    for _ in range(rng.randint(0, 3)):
        if len(edges) >= max_edges:
            break
        s = rng.choice((1, -1))
        if rng.random() < 0.5:
            edges.append((rng.randrange(n), n, s))
            n += 1
        else:
            w = rng.randrange(n)
            edges.append((w, w, s))
    rng.shuffle(edges)
    return SignedPlanarGraph(n, tuple(edges))


def random_connected_graph(rng: random.Random, max_extra: int = 4):
    """Connected multigraph, signs and loops unconstrained."""
    n = rng.randint(2, 5)
    edges = [(i, i + 1, rng.choice((1, -1))) for i in range(n - 1)]
    for _ in range(rng.randint(0, max_extra)):
        edges.append((rng.randrange(n), rng.randrange(n),
                      rng.choice((1, -1))))
    rng.shuffle(edges)
    return SignedPlanarGraph(n, tuple(edges))
