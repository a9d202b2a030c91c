"""Evidence scans over random graphs.

For every sample the scan records whether each central part sits inside a
single block and which parts cover the whole vertex set.  Block
containment is proven for the first four parts (a failure there is a bug);
for the subgraph core and core vertices it is open, so a failure is logged
as a counterexample, never raised.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import generators
from .counting import CountMode
from .graph import Graph, serialize
from .metric import blocks, contained_in_some_block
from .report import PART_NAMES, SKIPPED, compute_parts

log = logging.getLogger(__name__)

PROVEN_IN_BLOCK = ("center", "median", "security_center", "characteristic_center")
OPEN_IN_BLOCK = ("subgraph_core", "core_vertices")


@dataclass(frozen=True)
class SampleSpec:
    index: int
    kind: str  # "random", "tree" or "family"
    n: int
    p: float
    seed: int | None
    family: str | None = None


def _build(spec: SampleSpec) -> Graph:
    if spec.kind == "family":
        return generators.parse_generator_spec(spec.family)
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "tree":
        return generators.random_tree(spec.n, rng)
    return generators.random_connected_gnp(spec.n, spec.p, rng)


def scan_sample(spec: SampleSpec, mode: CountMode = CountMode.INDUCED) -> dict:
    g = _build(spec)
    rep = compute_parts(g, mode=mode)
    bd = blocks(g)
    in_block: dict[str, bool | None] = {}
    full: list[str] = []
    skipped: list[str] = []
    everything = sorted(g.labels)
    for part in PART_NAMES:
        labels = rep.parts[part]
        if labels == SKIPPED:
            in_block[part] = None
            skipped.append(part)
            log.info("sample %d: %s skipped by counting cap", spec.index, part)
            continue
        in_block[part] = contained_in_some_block(bd, g.indices(labels))
        if labels == everything:
            full.append(part)
    out = {
        "index": spec.index,
        "kind": spec.kind,
        "n": g.n,
        "m": g.m,
        "parts": rep.parts,
        "in_block": in_block,
        "equals_vertex_set": full,
        "skipped": skipped,
    }
    if spec.kind == "family":
        out["family"] = spec.family
    if any(v is False for v in in_block.values()):
        out["edges"] = serialize(g)
    return out


def plan(
    random: int = 0,
    trees: int = 0,
    n: int = 10,
    p: float = 0.3,
    seed: int = 0,
    families: Sequence[str] = (),
) -> list[SampleSpec]:
    """Sample list; each random sample gets its own child seed of ``seed``."""
    children = np.random.SeedSequence(seed).spawn(random + trees)
    seeds = [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]
    specs = [SampleSpec(k, "random", n, p, seeds[k]) for k in range(random)]
    specs += [SampleSpec(random + k, "tree", n, p, seeds[random + k]) for k in range(trees)]
    base = len(specs)
    specs += [SampleSpec(base + k, "family", 0, 0.0, None, f) for k, f in enumerate(families)]
    return specs


def run_scan(
    specs: Sequence[SampleSpec], mode: CountMode = CountMode.INDUCED, jobs: int = 1
) -> dict:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            samples = list(pool.map(scan_sample, specs, [mode] * len(specs)))
    else:
        samples = [scan_sample(s, mode) for s in specs]
    samples.sort(key=lambda s: s["index"])

    violations = {part: 0 for part in PART_NAMES}
    counterexamples = []
    for s in samples:
        for part, ok in s["in_block"].items():
            if ok is False:
                violations[part] += 1
                counterexamples.append(
                    {
                        "index": s["index"],
                        "part": part,
                        "proven": part in PROVEN_IN_BLOCK,
                        "edges": s["edges"],
                    }
                )
    summary = {
        "samples": len(samples),
        "block_violations": violations,
        "theorem_violations": sum(violations[p] for p in PROVEN_IN_BLOCK),
        "conjecture_violations": sum(violations[p] for p in OPEN_IN_BLOCK),
        "equals_vertex_set": {
            part: sum(part in s["equals_vertex_set"] for s in samples) for part in PART_NAMES
        },
        "skipped": sum(bool(s["skipped"]) for s in samples),
    }
    return {
        "count_mode": mode.value,
        "summary": summary,
        "counterexamples": counterexamples,
        "samples": samples,
    }
