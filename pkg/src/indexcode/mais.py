"""Brute-force baselines for small graphs.

These routines are deliberately independent of the code construction: they
establish ground truth (largest acyclic sets, removal numbers, disjoint
cycle pairs) by direct search so that the constructive pipeline can be
checked against them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import Digraph, GuardError, enumerate_cycles, DEFAULT_CYCLE_CAP

MAX_MAIS_VERTICES = 24

__all__ = [
    "MAX_MAIS_VERTICES",
    "RemovalResult",
    "find_disjoint_cycle_pair",
    "mais_oracle",
    "removal_number",
]


def mais_oracle(g: Digraph) -> frozenset[int]:
    """Largest vertex set inducing an acyclic subgraph, by subset sweep.

    Subsets are tried in decreasing size, lexicographically within each
    size, so the returned witness is deterministic. Guarded to 24 live
    vertices.
    """
    verts = g.vertices
    if len(verts) > MAX_MAIS_VERTICES:
        raise GuardError(
            f"acyclic-set sweep guarded to {MAX_MAIS_VERTICES} vertices, got {len(verts)}")
    out = {v: 0 for v in verts}
    for u, w in g.arcs:
        out[u] |= 1 << w
    for k in range(len(verts), 0, -1):
        for comb in itertools.combinations(verts, k):
            mask = 0
            for v in comb:
                mask |= 1 << v
            if _mask_acyclic(out, comb, mask):
                return frozenset(comb)
    return frozenset()


def _mask_acyclic(out, comb, mask) -> bool:
    # Peel vertices with no out-arc inside the mask; acyclic iff all peel.
    while mask:
        progressed = False
        for v in comb:
            b = 1 << v
            if mask & b and not (out[v] & mask):
                mask ^= b
                progressed = True
        if not progressed:
            return False
    return True


@dataclass(frozen=True)
class RemovalResult:
    """How many vertices must go before the graph is acyclic.

    r is 0, 1 or 2 with a witness set of that size; r None means three or
    more deletions are needed (a first-class answer, not an error), and the
    witness is None as well.
    """

    r: Optional[int]
    witness: Optional[frozenset[int]]

    @property
    def supported(self) -> bool:
        return self.r is not None


def removal_number(g: Digraph) -> RemovalResult:
    """Smallest number of deletions (up to 2) that leaves g acyclic.

    Tries the empty set, then single vertices in id order, then pairs in
    lexicographic order; each candidate is tested by actual deletion.
    """
    if g.is_acyclic():
        return RemovalResult(0, frozenset())
    for v in g.vertices:
        if g.delete_vertices({v}).is_acyclic():
            return RemovalResult(1, frozenset({v}))
    for u, v in itertools.combinations(g.vertices, 2):
        if g.delete_vertices({u, v}).is_acyclic():
            return RemovalResult(2, frozenset({u, v}))
    return RemovalResult(None, None)


def find_disjoint_cycle_pair(g: Digraph, cap: int = DEFAULT_CYCLE_CAP):
    """First pair of vertex-disjoint elementary cycles, or None.

    Pairs are scanned in the deterministic cycle order. A None (absence)
    conclusion is only allowed from a complete enumeration; if the cycle cap
    truncated the list and no pair was found, a GuardError is raised instead
    of guessing.
    """
    cl = enumerate_cycles(g, cap)
    cycles = cl.cycles
    vsets = [frozenset(c) for c in cycles]
    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            if vsets[a].isdisjoint(vsets[b]):
                return cycles[a], cycles[b]
    if cl.truncated:
        raise GuardError(
            f"cycle enumeration truncated at {cap}; cannot certify absence of a disjoint pair")
    return None
