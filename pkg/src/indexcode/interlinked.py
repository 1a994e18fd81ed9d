"""Interlinked-cycle configurations.

A configuration is a system of nine directed paths B,C,D,E,F,H,I,U,W between
six junction vertices v1..v6:

    C: v1->v5   F: v1->v4   B: v2->v6   D: v2->v4   I: v4->v3
    E: v3->v5   H: v3->v6   W: v5->v2   U: v6->v1

B,C,D,E,F,H carry at least one arc; I, U, W may be zero-length, which is the
same thing as merging their endpoints (v4=v3, v6=v1, v5=v2). The paths are
internally disjoint and chain into three cycles F·I·H·U, D·I·E·W, C·W·B·U
that pairwise intersect but share no common vertex. Graphs that need two
vertex deletions to become acyclic and contain no two vertex-disjoint cycles
always contain such a configuration, and `build_config` finds one
deterministically; the encoder in `codec` turns it into a short decodable
code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    DEFAULT_CYCLE_CAP,
    Digraph,
    GuardError,
    canonical_rotation,
    cycle_arcs,
    enumerate_cycles,
    path_arcs,
    union_of_cycles,
)
from .mais import find_disjoint_cycle_pair, removal_number

__all__ = [
    "InterlinkedConfig",
    "OuterPath",
    "StructuralError",
    "ValidationReport",
    "assemble_from_cover",
    "build_config",
    "classify_case",
    "config_from_json_dict",
    "config_search_oracle",
    "config_to_json_dict",
    "find_three_cycles",
    "largest_coverage_filter",
    "outer_paths",
    "validate_config",
]


class StructuralError(RuntimeError):
    """The graph contradicts an invariant the construction relies on.

    Under the documented preconditions (two deletions needed, no two
    vertex-disjoint cycles) this never fires; it surfaces misuse and bugs
    instead of silently producing a wrong configuration.
    """


@dataclass(frozen=True)
class OuterPath:
    """A maximal run of non-center arcs from one center vertex to another.

    `vertices` includes both center endpoints. A looping path returns to its
    starting vertex (origin == terminus); that is the only repetition
    allowed.
    """

    vertices: tuple[int, ...]

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def terminus(self) -> int:
        return self.vertices[-1]

    @property
    def inner(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def looping(self) -> bool:
        return self.origin == self.terminus


_ROLES = ("b", "c", "d", "e", "f", "h", "i", "u", "w")
# role -> (origin, terminus) as indices into the junction tuple
_ROLE_ENDS = {
    "b": (1, 5), "c": (0, 4), "d": (1, 3), "e": (2, 4), "f": (0, 3),
    "h": (2, 5), "i": (3, 2), "u": (5, 0), "w": (4, 1),
}
_MAY_BE_ZERO = frozenset({"i", "u", "w"})
_CYCLE_TRIPLES = (("f", "i", "h", "u"), ("d", "i", "e", "w"), ("c", "w", "b", "u"))


@dataclass(frozen=True)
class InterlinkedConfig:
    """Six junctions and the nine paths connecting them."""

    junctions: tuple[int, int, int, int, int, int]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]
    e: tuple[int, ...]
    f: tuple[int, ...]
    h: tuple[int, ...]
    i: tuple[int, ...]
    u: tuple[int, ...]
    w: tuple[int, ...]

    @property
    def v1(self) -> int:
        return self.junctions[0]

    @property
    def v2(self) -> int:
        return self.junctions[1]

    @property
    def v3(self) -> int:
        return self.junctions[2]

    @property
    def v4(self) -> int:
        return self.junctions[3]

    @property
    def v5(self) -> int:
        return self.junctions[4]

    @property
    def v6(self) -> int:
        return self.junctions[5]

    def role_paths(self) -> dict[str, tuple[int, ...]]:
        return {r: getattr(self, r) for r in _ROLES}

    @property
    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for p in self.role_paths().values():
            out.update(p)
        return frozenset(out)

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for p in self.role_paths().values():
            out.update(path_arcs(p))
        return frozenset(out)

    def out_within(self, v: int) -> tuple[int, ...]:
        """Heads of configuration arcs leaving v, ascending."""
        return tuple(sorted(h for (t, h) in self.arcs if t == v))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    reason: Optional[str] = None


# ---------------------------------------------------------------------------
# center geometry helpers


def _segment(center: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Vertices along the center cycle from a to b inclusive; (a,) if a == b."""
    if a == b:
        return (a,)
    L = len(center)
    t = center.index(a)
    seq = [a]
    while center[t] != b:
        t = (t + 1) % L
        seq.append(center[t])
    return tuple(seq)


def _coverage(center: tuple[int, ...], p: OuterPath) -> frozenset[int]:
    """Center vertices strictly inside the span of an outer path."""
    if p.looping:
        return frozenset(center) - {p.origin}
    return frozenset(_segment(center, p.origin, p.terminus)[1:-1])


# ---------------------------------------------------------------------------
# pipeline stages


def find_three_cycles(g: Digraph, cap: int = DEFAULT_CYCLE_CAP):
    """The first center cycle admitting two other cycles whose intersections
    with it are non-empty and disjoint, plus the first such pair.

    Not every cycle can anchor the configuration — a composite cycle may
    meet every other cycle in overlapping vertex sets — so candidate centers
    are tried in sorted order until one works.
    """
    cl = enumerate_cycles(g, cap)
    if not cl.cycles:
        raise StructuralError("graph has no cycles; nothing to build on")
    for center in cl.cycles:
        cset = frozenset(center)
        rest = [c for c in cl.cycles if c != center]
        for c1, c2 in itertools.combinations(rest, 2):
            x1 = frozenset(c1) & cset
            x2 = frozenset(c2) & cset
            if x1 and x2 and not (x1 & x2):
                return center, c1, c2
    if cl.truncated:
        raise GuardError(
            f"cycle enumeration truncated at {cap}; cannot locate the three defining cycles")
    raise StructuralError(
        "no cycle meets two others at disjoint non-empty vertex sets")


def outer_paths(g_sub: Digraph, center: tuple[int, ...]) -> tuple[OuterPath, ...]:
    """All maximal non-center runs between center vertices, sorted.

    Every arc of g_sub outside the center must appear on at least one such
    path; a leftover arc means some cycle avoids the center entirely, which
    the caller's preconditions rule out.
    """
    cset = set(center)
    carc = set(cycle_arcs(center))
    nc_out: dict[int, list[int]] = {}
    noncenter: set[tuple[int, int]] = set()
    for u, v in g_sub.arcs:
        if (u, v) not in carc:
            noncenter.add((u, v))
            nc_out.setdefault(u, []).append(v)
    for u in nc_out:
        nc_out[u].sort()
    found: set[tuple[int, ...]] = set()
    for s in sorted(cset):
        stack: list[tuple[int, tuple[int, ...]]] = [(s, (s,))]
        while stack:
            v, seq = stack.pop()
            for w in nc_out.get(v, ()):
                if w in cset:
                    found.add(seq + (w,))
                elif w not in seq:
                    stack.append((w, seq + (w,)))
    paths = tuple(OuterPath(p) for p in sorted(found))
    covered: set[tuple[int, int]] = set()
    for p in paths:
        covered.update(path_arcs(p.vertices))
    if noncenter - covered:
        raise StructuralError(
            "arcs outside the center lie on no center-to-center run — "
            "a cycle avoiding the center is present")
    return paths


def largest_coverage_filter(center, paths) -> tuple[OuterPath, ...]:
    """Keep a path only if it has the largest coverage among the paths
    sharing its origin and among those sharing its terminus (ties broken
    toward the lexicographically first vertex sequence)."""
    cov = {p: _coverage(center, p) for p in paths}

    def champion(group):
        return sorted(group, key=lambda x: (-len(cov[x]), x.vertices))[0]

    keep = []
    for p in paths:
        if p != champion([x for x in paths if x.origin == p.origin]):
            continue
        if p != champion([x for x in paths if x.terminus == p.terminus]):
            continue
        keep.append(p)
    return tuple(keep)


def _first_sharing_pair(filtered):
    for a, b in itertools.combinations(filtered, 2):
        if set(a.inner) & set(b.inner):
            return a, b
    return None


def classify_case(center, paths) -> str:
    """Which construction route applies to the outer-path family.

    "looping-path": some outer path returns to its own origin.
    "shared-inner": after coverage filtering, two paths share an inner vertex.
    "disjoint-covers": the remaining paths interleave around the center.
    """
    if any(p.looping for p in paths):
        return "looping-path"
    if _first_sharing_pair(largest_coverage_filter(center, paths)) is not None:
        return "shared-inner"
    return "disjoint-covers"


def build_config(g: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> InterlinkedConfig:
    """Find an interlinked configuration in g.

    Preconditions: g needs exactly two vertex deletions to become acyclic
    and has no two vertex-disjoint cycles. The result is deterministic and
    always passes validate_config.
    """
    center, c1, c2 = find_three_cycles(g, cap)
    g_sub = union_of_cycles(g, (center, c1, c2))
    paths = outer_paths(g_sub, center)
    loops = [p for p in paths if p.looping]
    if loops:
        cfg = _config_from_loop(center, paths, loops)
    else:
        filtered = largest_coverage_filter(center, paths)
        pair = _first_sharing_pair(filtered)
        if pair is not None:
            cfg = _config_from_shared_pair(center, *pair)
        else:
            cfg = _config_from_cover_chain(center, filtered)
    rep = validate_config(g, cfg)
    if not rep.ok:
        raise StructuralError(f"constructed configuration failed validation: {rep.reason}")
    return cfg


# --- route 1: a looping outer path -----------------------------------------


def _config_from_loop(center, paths, loops) -> InterlinkedConfig:
    a = min(p.origin for p in loops)
    loop = min((p for p in loops if p.origin == a), key=lambda p: p.vertices)
    L = len(center)
    start = center.index(a)
    pos = {center[(start + k) % L]: k for k in range(L)}
    cands = [p for p in paths
             if p.origin != a and p.terminus != a
             and pos[p.origin] >= pos[p.terminus]]
    if not cands:
        raise StructuralError("no outer path runs against the center past the loop vertex")
    ret = cands[0]
    inner_set = set(loop.vertices[1:-1])
    onloop = [v for v in ret.vertices if v in inner_set]
    if not onloop:
        raise StructuralError(
            "loop and opposing path are vertex-disjoint — two disjoint cycles present")
    d_v, e_v = onloop[0], onloop[-1]
    lpos = {v: k for k, v in enumerate(loop.vertices[:-1])}
    if lpos[d_v] > lpos[e_v]:
        raise StructuralError("opposing path meets the loop against its direction")
    b_v, c_v = ret.origin, ret.terminus
    pv = ret.vertices
    di = pv.index(d_v)
    ei = pv.index(e_v)
    dl = loop.vertices.index(d_v)
    el = loop.vertices.index(e_v)
    return InterlinkedConfig(
        junctions=(b_v, e_v, a, a, d_v, c_v),
        b=pv[ei:],
        c=pv[:di + 1],
        d=loop.vertices[el:],
        e=loop.vertices[:dl + 1],
        f=_segment(center, b_v, a),
        h=_segment(center, a, c_v),
        i=(a,),
        u=_segment(center, c_v, b_v),
        w=loop.vertices[dl:el + 1],
    )


# --- route 2: interleaved covering paths ------------------------------------


def _union_coverage(cov, group) -> set[int]:
    s: set[int] = set()
    for p in group:
        s |= cov[p]
    return s


def _verify_chain(center, paths):
    """Order covering paths by origin and check the interleaving pattern:
    walking the center, each path's terminus falls past the next path's
    origin and no later than the one after that."""
    K = len(paths)
    if K == 1:
        raise StructuralError("a single non-looping path cannot cover the center")
    if K == 2:
        raise StructuralError(
            "exactly two covering paths would yield two vertex-disjoint cycles")
    pos = {v: k for k, v in enumerate(center)}
    if len({p.origin for p in paths}) < K or len({p.terminus for p in paths}) < K:
        raise StructuralError("covering paths repeat an origin or terminus")
    ordered = sorted(paths, key=lambda p: pos[p.origin])
    L = len(center)
    t0 = pos[ordered[0].origin]

    def t(v: int) -> int:
        return (pos[v] - t0) % L

    bs = [t(p.origin) for p in ordered]
    cs = [t(p.terminus) for p in ordered]
    for k in range(K):
        lo = bs[(k + 1) % K]
        hi = bs[(k + 2) % K]
        ci = cs[k]
        if lo < hi:
            ok = lo < ci <= hi
        else:
            ok = ci > lo or ci <= hi
        if not ok:
            raise StructuralError("covering paths do not interleave around the center")
    return ordered


def _merge_once(center, chain):
    """Fuse two covering paths two apart in the interleaving into one longer
    path via the terminus-to-origin center run between them; the path in
    between joins the new, shorter center. Drops the path count by two."""
    K = len(chain)
    j = min(range(K),
            key=lambda k: (chain[k].vertices, chain[(k + 2) % K].vertices))
    pj = chain[j]
    pj1 = chain[(j + 1) % K]
    pj2 = chain[(j + 2) % K]
    connector = _segment(center, pj.terminus, pj2.origin)
    merged = OuterPath(pj.vertices + connector[1:] + pj2.vertices[1:])
    back = _segment(center, pj1.terminus, pj1.origin)
    new_center = canonical_rotation(pj1.vertices + back[1:-1])
    rest = [p for p in chain if p not in (pj, pj1, pj2)]
    return new_center, rest + [merged]


def _config_from_cover_chain(center, filtered) -> InterlinkedConfig:
    full = frozenset(center)
    paths = list(filtered)
    cov = {p: _coverage(center, p) for p in paths}
    if _union_coverage(cov, paths) != full:
        raise StructuralError("filtered paths fail to cover the center")
    # irredundant reduction: drop paths whose coverage the others supply
    while True:
        for p in sorted(paths, key=lambda x: x.vertices):
            rest = [x for x in paths if x is not p]
            if _union_coverage(cov, rest) == full:
                paths = rest
                break
        else:
            break
    while True:
        chain = _verify_chain(center, paths)
        if len(chain) == 3:
            return assemble_from_cover(center, chain)
        center, paths = _merge_once(center, chain)
        cov = {p: _coverage(center, p) for p in paths}
        if _union_coverage(cov, paths) != frozenset(center):
            raise StructuralError("coverage lost while merging covering paths")


# --- route 3: two paths sharing an inner vertex -----------------------------


def _config_from_shared_pair(center, p, q) -> InterlinkedConfig:
    candidates = []
    for first, second in ((p, q), (q, p)):
        cfg = _shared_pair_one_order(center, first, second)
        if cfg is not None:
            candidates.append(cfg)
    if not candidates:
        raise StructuralError(
            "paths sharing an inner vertex do not interleave around the center")
    return min(candidates, key=lambda c: c.junctions)


def _shared_pair_one_order(center, P, Q) -> Optional[InterlinkedConfig]:
    p1, plast = P.origin, P.terminus
    q1, qlast = Q.origin, Q.terminus
    if len({p1, plast, q1, qlast}) != 4:
        return None
    L = len(center)
    pos = {v: k for k, v in enumerate(center)}
    t0 = pos[p1]

    def t(v: int) -> int:
        return (pos[v] - t0) % L

    # required reading around the center: p1, qlast, q1, plast
    if not (0 < t(qlast) < t(q1) < t(plast)):
        return None
    shared = set(P.inner) & set(Q.inner)
    z = next(v for v in Q.inner if v in shared)
    zp = P.vertices.index(z)
    zq = Q.vertices.index(z)
    Z = P.vertices[:zp + 1] + Q.vertices[zq + 1:]
    if len(set(Z)) != len(Z):
        raise StructuralError(
            "spliced path revisits a vertex — a cycle avoiding the center is present")
    zset = set(Z)
    q_cut = next(v for v in Q.vertices[:zq + 1] if v in zset)
    p_cut = next(v for v in reversed(P.vertices[zp:]) if v in zset)
    seg = _segment(center, qlast, p1)
    new_center = canonical_rotation(seg + Z[1:-1])
    three = [
        OuterPath(_segment(center, p1, qlast)),
        OuterPath(P.vertices[P.vertices.index(p_cut):]),
        OuterPath(Q.vertices[:Q.vertices.index(q_cut) + 1]),
    ]
    try:
        return assemble_from_cover(new_center, three)
    except StructuralError:
        return None


# --- final assembly ----------------------------------------------------------


def assemble_from_cover(center, paths) -> InterlinkedConfig:
    """Assign three covering paths to the off-center roles F, E, B.

    The junction reading v1, v5, v2, v4, v3, v6 around the center determines
    the six center segments C, W, D, I, H, U. Several assignments can
    satisfy the pattern; the one with the lexicographically smallest
    junction tuple is returned so the result is canonical.
    """
    if len(paths) != 3:
        raise ValueError("exactly three covering paths are required")
    best: Optional[InterlinkedConfig] = None
    for pf, pe, pb in itertools.permutations(sorted(paths, key=lambda p: p.vertices)):
        cfg = _try_roles(center, pf, pe, pb)
        if cfg is not None and (best is None or cfg.junctions < best.junctions):
            best = cfg
    if best is None:
        raise StructuralError(
            "no assignment of the three covering paths matches the junction pattern")
    return best


def _try_roles(center, pf, pe, pb) -> Optional[InterlinkedConfig]:
    v1, v4 = pf.origin, pf.terminus
    v3, v5 = pe.origin, pe.terminus
    v2, v6 = pb.origin, pb.terminus
    L = len(center)
    pos = {v: k for k, v in enumerate(center)}
    if any(v not in pos for v in (v1, v2, v3, v4, v5, v6)):
        return None
    t0 = pos[v1]

    def t(v: int) -> int:
        return (pos[v] - t0) % L

    t6 = t(v6) if t(v6) != 0 else L
    if not (1 <= t(v5) <= t(v2) < t(v4) <= t(v3) < t6):
        return None
    return InterlinkedConfig(
        junctions=(v1, v2, v3, v4, v5, v6),
        b=pb.vertices,
        c=_segment(center, v1, v5),
        d=_segment(center, v2, v4),
        e=pe.vertices,
        f=pf.vertices,
        h=_segment(center, v3, v6),
        i=_segment(center, v4, v3),
        u=_segment(center, v6, v1),
        w=_segment(center, v5, v2),
    )


# ---------------------------------------------------------------------------
# validation, serialization, independent search


def validate_config(g: Digraph, cfg: InterlinkedConfig) -> ValidationReport:
    """Check every defining property of a configuration against g.

    Returns the first violated clause instead of raising, so callers can
    report validation outcomes.
    """

    def fail(msg: str) -> ValidationReport:
        return ValidationReport(False, msg)

    j = cfg.junctions
    if len(j) != 6:
        return fail("junction tuple must have six entries")
    v1, v2, v3, v4, v5, v6 = j
    paths = cfg.role_paths()
    for r, p in paths.items():
        if len(p) == 0:
            return fail(f"path {r.upper()} is empty")
        if len(p) == 1 and r not in _MAY_BE_ZERO:
            return fail(f"path {r.upper()} must contain at least one arc")
        if len(set(p)) != len(p):
            return fail(f"path {r.upper()} repeats a vertex")
    if (len(cfg.i) == 1) != (v4 == v3):
        return fail("path I is zero-length exactly when v4 and v3 merge")
    if (len(cfg.u) == 1) != (v6 == v1):
        return fail("path U is zero-length exactly when v6 and v1 merge")
    if (len(cfg.w) == 1) != (v5 == v2):
        return fail("path W is zero-length exactly when v5 and v2 merge")
    distinct = [v1, v2, v3]
    if v4 != v3:
        distinct.append(v4)
    if v5 != v2:
        distinct.append(v5)
    if v6 != v1:
        distinct.append(v6)
    if len(set(distinct)) != len(distinct):
        return fail("junctions coincide beyond the allowed merges")
    for r, (oi, ti) in _ROLE_ENDS.items():
        p = paths[r]
        if p[0] != j[oi] or p[-1] != j[ti]:
            return fail(f"path {r.upper()} does not run between its junctions")
    if not cfg.vertices <= g.live:
        return fail("configuration uses vertices outside the graph")
    for r, p in paths.items():
        for x, y in path_arcs(p):
            if not g.has_arc(x, y):
                return fail(f"path {r.upper()} uses a missing arc ({x},{y})")
    for ra, rb in itertools.combinations(_ROLES, 2):
        ea = {paths[ra][0], paths[ra][-1]}
        eb = {paths[rb][0], paths[rb][-1]}
        extra = (set(paths[ra]) & set(paths[rb])) - (ea & eb)
        if extra:
            return fail(
                f"paths {ra.upper()} and {rb.upper()} overlap at non-junction "
                f"vertices {sorted(extra)}")
    cyc_sets = []
    for combo in _CYCLE_TRIPLES:
        seq = paths[combo[0]]
        for r in combo[1:]:
            seq = seq + paths[r][1:]
        name = "·".join(x.upper() for x in combo)
        if seq[0] != seq[-1]:
            return fail(f"cycle {name} does not close")
        body = seq[:-1]
        if len(set(body)) != len(body):
            return fail(f"cycle {name} revisits a vertex")
        cyc_sets.append(set(body))
    for a, b in itertools.combinations(range(3), 2):
        if not (cyc_sets[a] & cyc_sets[b]):
            return fail("two of the defining cycles are vertex-disjoint")
    if cyc_sets[0] & cyc_sets[1] & cyc_sets[2]:
        return fail("the three defining cycles share a common vertex")
    sub = Digraph(g.n, cfg.arcs, cfg.vertices)
    rr = removal_number(sub)
    if rr.r != 2:
        return fail("configuration graph does not need exactly two deletions")
    if find_disjoint_cycle_pair(sub) is not None:
        return fail("configuration graph contains two vertex-disjoint cycles")
    return ValidationReport(True, None)


def config_to_json_dict(cfg: InterlinkedConfig) -> dict:
    out: dict = {"junctions": list(cfg.junctions)}
    for r in _ROLES:
        out[r.upper()] = list(getattr(cfg, r))
    return dict(sorted(out.items(), key=lambda kv: (kv[0] != "junctions", kv[0])))


def config_from_json_dict(d: dict) -> InterlinkedConfig:
    try:
        junctions = tuple(int(x) for x in d["junctions"])
        kwargs = {r: tuple(int(x) for x in d[r.upper()]) for r in _ROLES}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed configuration object: {exc}") from None
    if len(junctions) != 6:
        raise ValueError("junctions must list six vertices")
    return InterlinkedConfig(junctions=junctions, **kwargs)


MAX_SEARCH_VERTICES = 10


def config_search_oracle(g: Digraph) -> Optional[InterlinkedConfig]:
    """Exhaustive search for any valid configuration, for cross-checking.

    Tries junction tuples in a fixed nested order (merged options first) and
    fills the nine paths by backtracking over vertex-disjoint simple paths
    in lexicographic order. Independent of build_config. Guarded to 10
    vertices; intended for tests.
    """
    if g.num_vertices > MAX_SEARCH_VERTICES:
        raise GuardError(
            f"configuration search guarded to {MAX_SEARCH_VERTICES} vertices")
    verts = g.vertices

    def simple_paths(s, t, banned):
        """Yield s->t paths (>=1 arc) whose interior avoids `banned`, lex order."""
        stack = [(s, (s,))]
        out = []
        while stack:
            v, seq = stack.pop()
            for w in g.out_neighbors(v):
                if w == t and len(seq) >= 1:
                    out.append(seq + (w,))
                elif w not in banned and w not in seq and w != s and w != t:
                    stack.append((w, seq + (w,)))
        out.sort()
        return out

    def fill(roles_left, junctions, used_inner, acc):
        if not roles_left:
            cfg = InterlinkedConfig(junctions=junctions, **acc)
            if validate_config(g, cfg).ok:
                return cfg
            return None
        r = roles_left[0]
        oi, ti = _ROLE_ENDS[r]
        s, t = junctions[oi], junctions[ti]
        if s == t:
            if r not in _MAY_BE_ZERO:
                return None
            return fill(roles_left[1:], junctions, used_inner,
                        {**acc, r: (s,)})
        banned = set(junctions) | used_inner
        for pth in simple_paths(s, t, banned):
            inner = set(pth[1:-1])
            got = fill(roles_left[1:], junctions, used_inner | inner,
                       {**acc, r: pth})
            if got is not None:
                return got
        return None

    for v1 in verts:
        for v2 in verts:
            if v2 == v1:
                continue
            for v3 in verts:
                if v3 in (v1, v2):
                    continue
                for v4 in [v3] + [x for x in verts if x not in (v1, v2, v3)]:
                    for v5 in [v2] + [x for x in verts if x not in (v1, v2, v3, v4)]:
                        for v6 in [v1] + [x for x in verts
                                          if x not in (v1, v2, v3, v4, v5)]:
                            junctions = (v1, v2, v3, v4, v5, v6)
                            got = fill(list(_ROLES), junctions, set(), {})
                            if got is not None:
                                return got
    return None
