"""Damped PageRank on the star K_{1,4} by high-precision fixed-point iteration.

Produces the golden center/leaf values frozen in the centrality tests.
"""
from mpmath import mp, mpf

mp.dps = 40
damping = mpf("0.85")
n = 5
neighbors = {0: [1, 2, 3, 4], 1: [0], 2: [0], 3: [0], 4: [0]}
rank = [mpf(1) / n] * n
for _ in range(100000):
    nxt = [(1 - damping) / n + damping * sum(rank[u] / len(neighbors[u]) for u in neighbors[v]) for v in range(n)]
    total = sum(nxt)
    nxt = [r / total for r in nxt]
    if max(abs(a - b) for a, b in zip(rank, nxt)) < mpf("1e-30"):
        rank = nxt
        break
    rank = nxt
print("center", mp.nstr(rank[0], 20))
print("leaf  ", mp.nstr(rank[1], 20))
