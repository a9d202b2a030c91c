"""All six central parts of a graph in one report."""

from __future__ import annotations

import json
import time
from collections.abc import Sequence
from dataclasses import dataclass, field

from . import centers, counting, spectral
from .graph import Graph
from .metric import apsp

PART_NAMES = (
    "center",
    "median",
    "security_center",
    "characteristic_center",
    "subgraph_core",
    "core_vertices",
)
SKIPPED = "skipped(cap)"


@dataclass
class CentralPartsReport:
    graph_name: str
    n: int
    m: int
    parts: dict[str, list[str] | str]
    mu: float | None
    fiedler_multiplicity: int | None
    count_mode: str
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "graph_name": self.graph_name,
            "n": self.n,
            "m": self.m,
            "parts": self.parts,
            "mu": self.mu,
            "fiedler_multiplicity": self.fiedler_multiplicity,
            "count_mode": self.count_mode,
        }
        if timings:
            out["timings_ms"] = self.timings_ms
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2)

    def to_table(self) -> str:
        rows = [("graph", self.graph_name), ("n", str(self.n)), ("m", str(self.m))]
        if self.mu is not None:
            rows.append(("mu", f"{self.mu:.10g}"))
            rows.append(("fiedler multiplicity", str(self.fiedler_multiplicity)))
        rows.append(("count mode", self.count_mode))
        for name, value in self.parts.items():
            rows.append((name, value if isinstance(value, str) else "{" + ", ".join(value) + "}"))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def compute_parts(
    g: Graph,
    parts: Sequence[str] = PART_NAMES,
    mode: counting.CountMode = counting.CountMode.INDUCED,
    name: str = "",
) -> CentralPartsReport:
    """Compute the requested parts of a connected graph.

    Counting-based parts come back as ``"skipped(cap)"`` when the graph
    exceeds the counting cap.  A single-vertex graph has every part equal
    to itself and no Fiedler data.
    """
    unknown = set(parts) - set(PART_NAMES)
    if unknown:
        raise ValueError(f"unknown part(s): {', '.join(sorted(unknown))}")
    g.require_connected()
    timings: dict[str, float] = {}
    out: dict[str, list[str] | str] = {}

    def timed(key, fn):
        t0 = time.perf_counter()
        value = fn()
        timings[key] = round((time.perf_counter() - t0) * 1000.0, 3)
        return value

    dm = timed("apsp", lambda: apsp(g))
    mu = mult = None
    space = None
    if g.n >= 2:
        space = timed("fiedler", lambda: spectral.fiedler_space(g))
        mu, mult = space.mu, space.multiplicity

    pc = None
    needs_counts = {"subgraph_core", "core_vertices"} & set(parts)
    cap_hit = False
    if needs_counts:
        try:
            pc = timed("pair_counts", lambda: counting.pair_counts(g, mode))
        except counting.CapExceededError:
            cap_hit = True

    everything = frozenset(range(g.n))
    compute = {
        "center": lambda: centers.center(g, dm),
        "median": lambda: centers.median(g, dm),
        "security_center": lambda: centers.security_center(g, dm),
        "characteristic_center": lambda: (
            spectral.characteristic_center(g, space) if space is not None else everything
        ),
        "subgraph_core": lambda: counting.subgraph_core(g, mode, pc),
        "core_vertices": lambda: counting.core_vertices(g, mode, pc),
    }
    for part in PART_NAMES:
        if part not in parts:
            continue
        if part in needs_counts and cap_hit:
            out[part] = SKIPPED
            continue
        out[part] = g.sorted_labels(timed(part, compute[part]))
    return CentralPartsReport(
        graph_name=name,
        n=g.n,
        m=g.m,
        parts=out,
        mu=mu,
        fiedler_multiplicity=mult,
        count_mode=mode.value,
        timings_ms=timings,
    )
