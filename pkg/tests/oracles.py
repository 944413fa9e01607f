"""Independent reference implementations used as test oracles.

None of these import the code paths they check.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import pdist, squareform


def brute_force_edges(positions, r):
    """Edge set {(i, j): i < j, |p_i - p_j| <= r} via scipy's dense distance matrix."""
    pts = np.asarray(positions, dtype=float)
    if len(pts) < 2:
        return set()
    dm = squareform(pdist(pts))
    i, j = np.nonzero(np.triu(dm <= r, k=1))
    return set(zip(i.tolist(), j.tolist()))


def union_find_components(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(a) for a in range(n)})


def brute_min_distance(positions):
    pts = np.asarray(positions, dtype=float)
    return float(pdist(pts).min())


def reference_weight(self_weight, self_id, nbrs, weight_limit, leader_id):
    """Straight-line interpreter of the four ordered weight rules.

    ``nbrs`` is a list of (id, weight). Each rule is a (guard, action) pair
    evaluated in order against the working value.
    """
    if len(nbrs) == 0:
        return self_weight
    ws = sorted(w for _, w in nbrs)
    hi, lo = ws[-1], ws[0]
    leader_nbr_ids = sorted(i for i, w in nbrs if w == leader_id)
    rules = [
        (lambda w: lo < w, lambda w: lo + 1),
        (lambda w: hi == weight_limit, lambda w: leader_id),
        (lambda w: lo >= w and w != leader_id, lambda w: lo + 1),
        (
            lambda w: w == leader_id and len(leader_nbr_ids) > 0 and self_id > leader_nbr_ids[0],
            lambda w: w + 1,
        ),
    ]
    w = self_weight
    for guard, action in rules:
        if guard(w):
            w = action(w)
    return w


def reference_election_step(weights, adjacency, weight_limit, leader_id):
    return [
        reference_weight(weights[u], u, [(v, weights[v]) for v in adjacency[u]], weight_limit, leader_id)
        for u in range(len(weights))
    ]
