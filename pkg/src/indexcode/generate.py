"""Graph generators: seeded random digraphs and direct configuration builds."""

from __future__ import annotations

import random

from .graphs import Digraph
from .interlinked import InterlinkedConfig, validate_config
from .mais import find_disjoint_cycle_pair, removal_number

PATH_LENGTH_ORDER = ("B", "C", "D", "E", "F", "H", "I", "U", "W")

__all__ = ["PATH_LENGTH_ORDER", "random_digraph", "structured_digraph"]


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Sample each ordered pair as an arc with probability p.

    Pairs are visited in lexicographic order under a fixed Mersenne Twister
    stream, so (n, p, seed) names one reproducible graph on any platform.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError("arc probability must lie in [0, 1]")
    rng = random.Random(seed)
    arcs = [(i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j and rng.random() < p]
    return Digraph.from_arcs(n, arcs)


def structured_digraph(lengths) -> tuple[Digraph, InterlinkedConfig]:
    """Build a graph that is exactly one interlinked configuration.

    `lengths` gives the nine path lengths in the order B,C,D,E,F,H,I,U,W;
    the first six must be >= 1, the last three may be 0 (which merges the
    corresponding junction pair). Junctions get the smallest ids, then inner
    vertices are numbered path by path in the same fixed order. Returns the
    graph together with the configuration it realizes; the result is
    re-checked against the brute-force baselines before being handed out.
    """
    if len(lengths) != 9:
        raise ValueError("nine path lengths required (B,C,D,E,F,H,I,U,W)")
    lens = {name: int(val) for name, val in zip(PATH_LENGTH_ORDER, lengths)}
    for name in ("B", "C", "D", "E", "F", "H"):
        if lens[name] < 1:
            raise ValueError(f"path {name} must carry at least one arc")
    for name in ("I", "U", "W"):
        if lens[name] < 0:
            raise ValueError(f"path {name} length cannot be negative")
    v1, v2, v3 = 1, 2, 3
    nxt = 4
    if lens["I"] == 0:
        v4 = v3
    else:
        v4, nxt = nxt, nxt + 1
    if lens["W"] == 0:
        v5 = v2
    else:
        v5, nxt = nxt, nxt + 1
    if lens["U"] == 0:
        v6 = v1
    else:
        v6, nxt = nxt, nxt + 1
    ends = {"B": (v2, v6), "C": (v1, v5), "D": (v2, v4), "E": (v3, v5),
            "F": (v1, v4), "H": (v3, v6), "I": (v4, v3), "U": (v6, v1),
            "W": (v5, v2)}
    paths: dict[str, tuple[int, ...]] = {}
    for name in PATH_LENGTH_ORDER:
        s, t = ends[name]
        length = lens[name]
        if length == 0:
            paths[name] = (s,)
            continue
        inner = tuple(range(nxt, nxt + length - 1))
        nxt += length - 1
        paths[name] = (s,) + inner + (t,)
    cfg = InterlinkedConfig(
        junctions=(v1, v2, v3, v4, v5, v6),
        b=paths["B"], c=paths["C"], d=paths["D"], e=paths["E"],
        f=paths["F"], h=paths["H"], i=paths["I"], u=paths["U"], w=paths["W"])
    n = nxt - 1
    g = Digraph(n, cfg.arcs, frozenset(range(1, n + 1)))
    rep = validate_config(g, cfg)
    if not rep.ok:
        raise RuntimeError(f"generated configuration failed validation: {rep.reason}")
    if removal_number(g).r != 2:
        raise RuntimeError("generated graph does not need exactly two deletions")
    if find_disjoint_cycle_pair(g) is not None:
        raise RuntimeError("generated graph contains two vertex-disjoint cycles")
    return g, cfg
