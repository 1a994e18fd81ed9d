"""Linear index codes over Z_q and their construction.

For a graph needing r <= 2 vertex deletions to become acyclic, `build_code`
emits a code of length n - r, which matches the acyclic-set lower bound and
is therefore optimal. All rows use 0/1 coefficients regardless of q.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .graphs import DEFAULT_CYCLE_CAP, Digraph, enumerate_cycles
from .interlinked import InterlinkedConfig, build_config
from .mais import find_disjoint_cycle_pair, removal_number

__all__ = [
    "LinearCode",
    "UnsupportedRemovalNumber",
    "apply_code",
    "build_code",
    "code_from_json",
    "code_to_json",
    "decode_receiver",
    "encode_cyclic",
    "encode_interlinked",
    "encode_uncoded",
]


class UnsupportedRemovalNumber(ValueError):
    """The graph needs three or more deletions; outside this construction."""


@dataclass(frozen=True)
class LinearCode:
    """A list of coefficient rows over Z_q on message slots x1..xn.

    `labels` records where each row came from: ("uncoded", v) for an
    identity row, ("cycle", u, w) for a two-term cyclic row, ("config", a)
    for the row a configuration vertex contributes. Labels are in-memory
    bookkeeping and are not serialized.
    """

    q: int
    n: int
    rows: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[tuple, ...]] = None

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.n < 1:
            raise ValueError("message count must be at least 1")
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError("row width differs from the message count")
            if any(not (0 <= c < self.q) for c in row):
                raise ValueError("coefficients must lie in 0..q-1")
            if not any(row):
                raise ValueError("zero rows are not allowed")
        if self.labels is not None and len(self.labels) != len(self.rows):
            raise ValueError("one label per row required")

    @property
    def length(self) -> int:
        return len(self.rows)

    @property
    def exprs(self) -> tuple[str, ...]:
        return tuple(_expr(row) for row in self.rows)


def _expr(row) -> str:
    terms = []
    for v, c in enumerate(row, 1):
        if c == 0:
            continue
        terms.append(f"x{v}" if c == 1 else f"{c}*x{v}")
    return "+".join(terms)


def code_to_json(code: LinearCode) -> str:
    obj = {
        "q": code.q,
        "n": code.n,
        "rows": [list(r) for r in code.rows],
        "exprs": list(code.exprs),
    }
    return json.dumps(obj, indent=2)


def code_from_json(text: str) -> LinearCode:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ValueError("code file must hold a JSON object")
    try:
        q = int(obj["q"])
        n = int(obj["n"])
        rows = tuple(tuple(int(c) for c in r) for r in obj["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed code object: {exc}") from None
    return LinearCode(q, n, rows)


def _unit_row(n: int, v: int) -> tuple[int, ...]:
    row = [0] * n
    row[v - 1] = 1
    return tuple(row)


def encode_uncoded(g: Digraph, q: int = 2) -> LinearCode:
    """One identity row per live vertex; the trivial broadcast."""
    rows = tuple(_unit_row(g.n, v) for v in g.vertices)
    labels = tuple(("uncoded", v) for v in g.vertices)
    return LinearCode(q, g.n, rows, labels)


def encode_cyclic(cycle, n: int, q: int = 2):
    """Rows x_{c_k} + x_{c_{k+1}} along a cycle, one fewer than its length.

    Every vertex on the cycle already knows its successor's message, so it
    can chain-solve these rows for its own.
    """
    rows = []
    labels = []
    for k in range(len(cycle) - 1):
        row = [0] * n
        row[cycle[k] - 1] = 1
        row[cycle[k + 1] - 1] = 1
        rows.append(tuple(row))
        labels.append(("cycle", cycle[k], cycle[k + 1]))
    return rows, labels


def encode_interlinked(cfg: InterlinkedConfig, n: int, q: int = 2):
    """One row per configuration vertex except v1 and v2: the vertex's own
    message plus the messages at the heads of its configuration arcs."""
    rows = []
    labels = []
    for a in sorted(cfg.vertices - {cfg.v1, cfg.v2}):
        row = [0] * n
        row[a - 1] = 1
        for h in cfg.out_within(a):
            row[h - 1] = 1
        rows.append(tuple(row))
        labels.append(("config", a))
    return rows, labels


def build_code(g: Digraph, q: int = 2, cap: int = DEFAULT_CYCLE_CAP) -> LinearCode:
    """Optimal-length code for any graph with removal number r <= 2.

    r=0: identity rows. r=1: a cyclic code on the first enumerated cycle
    plus identity rows elsewhere. r=2: cyclic codes on the first pair of
    vertex-disjoint cycles if one exists, otherwise the configuration code.
    Always n - r rows; raises UnsupportedRemovalNumber when r >= 3.
    """
    if g.num_vertices == 0:
        raise ValueError("graph has no live vertices")
    rr = removal_number(g)
    if rr.r is None:
        raise UnsupportedRemovalNumber(
            "graph needs three or more vertex deletions to become acyclic")
    rows: list[tuple[int, ...]] = []
    labels: list[tuple] = []
    coded: set[int] = set()
    if rr.r == 1:
        cyc = enumerate_cycles(g, cap).cycles[0]
        crows, clabels = encode_cyclic(cyc, g.n, q)
        rows.extend(crows)
        labels.extend(clabels)
        coded.update(cyc)
    elif rr.r == 2:
        pair = find_disjoint_cycle_pair(g, cap)
        if pair is not None:
            for cyc in pair:
                crows, clabels = encode_cyclic(cyc, g.n, q)
                rows.extend(crows)
                labels.extend(clabels)
                coded.update(cyc)
        else:
            cfg = build_config(g, cap)
            crows, clabels = encode_interlinked(cfg, g.n, q)
            rows.extend(crows)
            labels.extend(clabels)
            coded.update(cfg.vertices)
    for v in g.vertices:
        if v not in coded:
            rows.append(_unit_row(g.n, v))
            labels.append(("uncoded", v))
    code = LinearCode(q, g.n, tuple(rows), tuple(labels))
    assert code.length == g.num_vertices - rr.r
    return code


def apply_code(code: LinearCode, x) -> tuple[int, ...]:
    """Encode a message vector: y_j = sum_v row_j[v] * x_v mod q."""
    if len(x) != code.n:
        raise ValueError(f"message vector must have {code.n} entries")
    q = code.q
    return tuple(sum(c * int(xv) for c, xv in zip(row, x)) % q
                 for row in code.rows)


# ---------------------------------------------------------------------------
# chain decoding for configuration codes


def _chain_forward(path, start_value, sym, q):
    # row at path[k] is x_{path[k]} + x_{path[k+1]}; walk to the last vertex
    cur = start_value
    for k in range(1, len(path) - 1):
        cur = (sym[path[k]] - cur) % q
    return cur


def _chain_backward(path, last_value, sym, q):
    # same rows read in reverse: recover the second vertex from the last
    cur = last_value
    for k in range(len(path) - 2, 0, -1):
        cur = (sym[path[k]] - cur) % q
    return cur


def decode_receiver(cfg: InterlinkedConfig, code: LinearCode, y, i: int, side) -> int:
    """Recover x_i from the codeword and receiver i's side information.

    Receivers v1 and v2 run the two multi-path chains; other configuration
    vertices subtract their known neighbors from their own row; vertices
    outside the configuration read their identity row. `side` maps each
    out-neighbor of i to its message value.
    """
    if code.labels is None:
        raise ValueError("code carries no row labels; build it with build_code")
    if len(y) != code.length:
        raise ValueError(f"codeword must have {code.length} symbols")
    q = code.q
    sym: dict[int, int] = {}
    unc: dict[int, int] = {}
    for lab, val in zip(code.labels, y):
        if lab[0] == "config":
            sym[lab[1]] = val % q
        elif lab[0] == "uncoded":
            unc[lab[1]] = val % q

    def sv(v: int) -> int:
        try:
            return side[v] % q
        except KeyError:
            raise ValueError(f"missing side information for vertex {v}") from None

    if i == cfg.v1:
        f_then_i = cfg.f + cfg.i[1:]
        x_v3 = _chain_forward(f_then_i, sv(f_then_i[1]), sym, q)
        x_e_last = _chain_forward(cfg.c, sv(cfg.c[1]), sym, q)
        x_e2 = _chain_backward(cfg.e, x_e_last, sym, q)
        x_h2 = (sym[cfg.v3] - x_v3 - x_e2) % q
        h_then_u = cfg.h + cfg.u[1:]
        return _chain_forward(h_then_u, x_h2, sym, q)
    if i == cfg.v2:
        x_b_last = _chain_forward(cfg.b, sv(cfg.b[1]), sym, q)
        x_h2 = _chain_backward(cfg.h, x_b_last, sym, q)
        d_then_i = cfg.d + cfg.i[1:]
        x_v3 = _chain_forward(d_then_i, sv(d_then_i[1]), sym, q)
        x_e2 = (sym[cfg.v3] - x_v3 - x_h2) % q
        e_then_w = cfg.e + cfg.w[1:]
        return _chain_forward(e_then_w, x_e2, sym, q)
    if i in sym:
        val = sym[i]
        for h in cfg.out_within(i):
            val = (val - sv(h)) % q
        return val
    if i in unc:
        return unc[i]
    raise ValueError(f"receiver {i} has no usable row in this code")
