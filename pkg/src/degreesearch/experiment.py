"""Monte-Carlo experiment harness.

Runs batches of searches over sampled source/target pairs, round by
round, with one or more search variants compared on *identical* pair
sets.  Every random choice derives from the plan's master seed, keyed by
round, pair and variant, so results are reproducible bit for bit no
matter how the work is scheduled.
"""

from __future__ import annotations

import csv
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import ConfigError
from .generate import BaConfig, generate_ba
from .graphs import Graph, pair_distance
from .refine import refine_route
from .search import SearchConfig, SearchOutcome, materialize_route, run_search
from .topology import load_edge_list

__all__ = [
    "VariantSpec",
    "ExperimentPlan",
    "SearchRecord",
    "ExperimentSummary",
    "ExperimentResult",
    "sample_pairs",
    "run_experiment",
    "emit_csv",
    "emit_histogram",
]

_MASK64 = (1 << 64) - 1
_STREAM_PAIRS = 1
_STREAM_SEARCH = 2
_CHUNK_PAIRS = 50

_CSV_COLUMNS = (
    "round",
    "pair_index",
    "s",
    "t",
    "variant",
    "outcome",
    "walk_steps",
    "route_length",
    "refined_length",
    "consults",
    "oracle_distance",
)


def _mix64(x: int) -> int:
    # splitmix64 finalizer; enough to decorrelate structured seed tuples.
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _derive_seed(*parts: int) -> int:
    acc = 0
    for p in parts:
        acc = _mix64(acc ^ (p & _MASK64))
    return acc


@dataclass(frozen=True)
class VariantSpec:
    """One search configuration under comparison.

    The per-search RNG seed is filled in by the harness; everything else
    about the search comes from here.  ``label`` defaults to a compact
    name like ``h2c5`` or ``h2+refine``.
    """

    visibility_h: int = 2
    consult_budget_c: int = 0
    refine: bool = False
    step_cap: int | None = None
    label: str = ""

    def __post_init__(self) -> None:
        # Validate h/c/cap combinations early, not at search time.
        SearchConfig(self.visibility_h, self.consult_budget_c, self.step_cap, 0)
        if not self.label:
            label = f"h{self.visibility_h}"
            if self.consult_budget_c:
                label += f"c{self.consult_budget_c}"
            if self.refine:
                label += "+refine"
            object.__setattr__(self, "label", label)


@dataclass(frozen=True)
class ExperimentPlan:
    """Everything needed to reproduce one experiment.

    ``topology`` is either a ``BaConfig`` to generate or a path to an
    edge-list file (loaded keeping the giant component only).
    """

    topology: BaConfig | str | Path
    variants: tuple[VariantSpec, ...]
    pairs_per_round: int = 500
    rounds: int = 10
    master_seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "variants", tuple(self.variants))
        if not self.variants:
            raise ConfigError("plan needs at least one variant")
        labels = [v.label for v in self.variants]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"variant labels must be unique, got {labels}")
        if self.pairs_per_round < 1:
            raise ConfigError(f"pairs_per_round must be >= 1, got {self.pairs_per_round}")
        if self.rounds < 1:
            raise ConfigError(f"rounds must be >= 1, got {self.rounds}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class SearchRecord:
    """One row of raw experiment output."""

    round: int
    pair_index: int
    s: int
    t: int
    variant: str
    outcome: str
    walk_steps: int
    route_length: int | None
    refined_length: int | None
    consults: int
    oracle_distance: int | None


@dataclass(frozen=True)
class ExperimentSummary:
    """Aggregates for one variant.

    Means cover successful searches only; ``oracle_mean_shortest_path``
    averages the exact distances over the same successful pairs so the
    comparison stays matched.  Fields holding means are ``None`` when
    nothing qualified (no successes, or refinement disabled).
    """

    variant: str
    total_searches: int
    successful_searches: int
    success_rate: float
    mean_walk_steps: float | None
    mean_route_length: float | None
    mean_refined_length: float | None
    max_refined_length: int | None
    fraction_under_10: float | None
    mean_consults: float | None
    length_histogram: dict[int, int]
    oracle_mean_shortest_path: float | None


@dataclass(frozen=True)
class ExperimentResult:
    plan: ExperimentPlan
    summaries: tuple[ExperimentSummary, ...]
    records: tuple[SearchRecord, ...]


def sample_pairs(g: Graph, count: int, rng_seed: int) -> list[tuple[int, int]]:
    """Sample ordered source/target pairs uniformly, s != t.

    Pairs are drawn with replacement across the batch; identical inputs
    give identical batches.

    Raises:
        ConfigError: If the graph has fewer than two nodes.
    """
    if g.node_count < 2:
        raise ConfigError("pair sampling requires at least 2 nodes")
    rng = random.Random(rng_seed)
    n = g.node_count
    pairs: list[tuple[int, int]] = []
    for _ in range(count):
        s = rng.randrange(n)
        t = rng.randrange(n)
        while t == s:
            t = rng.randrange(n)
        pairs.append((s, t))
    return pairs


def _resolve_topology(topology: BaConfig | str | Path) -> Graph:
    if isinstance(topology, BaConfig):
        return generate_ba(topology)
    graph, _ = load_edge_list(topology, take_giant_component=True)
    return graph


def _run_chunk(
    g: Graph,
    variants: tuple[VariantSpec, ...],
    master_seed: int,
    round_index: int,
    base_index: int,
    pairs: list[tuple[int, int]],
) -> list[SearchRecord]:
    records: list[SearchRecord] = []
    for offset, (s, t) in enumerate(pairs):
        pair_index = base_index + offset
        oracle = pair_distance(g, s, t)
        for vi, var in enumerate(variants):
            seed = _derive_seed(master_seed, _STREAM_SEARCH, round_index, pair_index, vi)
            cfg = SearchConfig(
                visibility_h=var.visibility_h,
                consult_budget_c=var.consult_budget_c,
                step_cap=var.step_cap,
                rng_seed=seed,
            )
            trace = run_search(g, s, t, cfg)
            route_length: int | None = None
            refined_length: int | None = None
            if trace.outcome is SearchOutcome.FOUND:
                route = materialize_route(g, trace, t)
                route_length = route.length
                if var.refine:
                    refined_length = refine_route(g, route).refined.length
            records.append(
                SearchRecord(
                    round=round_index,
                    pair_index=pair_index,
                    s=s,
                    t=t,
                    variant=var.label,
                    outcome=trace.outcome.value,
                    walk_steps=trace.walk_steps,
                    route_length=route_length,
                    refined_length=refined_length,
                    consults=trace.consults,
                    oracle_distance=oracle,
                )
            )
    return records


_WORKER_STATE: tuple[Graph, tuple[VariantSpec, ...], int] | None = None


def _init_worker(g: Graph, variants: tuple[VariantSpec, ...], master_seed: int) -> None:
    global _WORKER_STATE
    _WORKER_STATE = (g, variants, master_seed)


def _run_chunk_in_worker(task: tuple[int, int, list[tuple[int, int]]]) -> list[SearchRecord]:
    g, variants, master_seed = _WORKER_STATE
    round_index, base_index, pairs = task
    return _run_chunk(g, variants, master_seed, round_index, base_index, pairs)


def run_experiment(plan: ExperimentPlan) -> ExperimentResult:
    """Execute a plan and aggregate per-variant summaries.

    All variants are run against the same pairs in every round.  Records
    come back ordered by (round, pair, variant) regardless of the worker
    count.
    """
    g = _resolve_topology(plan.topology)
    tasks: list[tuple[int, int, list[tuple[int, int]]]] = []
    for round_index in range(plan.rounds):
        pair_seed = _derive_seed(plan.master_seed, _STREAM_PAIRS, round_index)
        pairs = sample_pairs(g, plan.pairs_per_round, pair_seed)
        for base in range(0, len(pairs), _CHUNK_PAIRS):
            tasks.append((round_index, base, pairs[base : base + _CHUNK_PAIRS]))
    if plan.workers == 1:
        chunks = [
            _run_chunk(g, plan.variants, plan.master_seed, *task) for task in tasks
        ]
    else:
        with ProcessPoolExecutor(
            max_workers=plan.workers,
            initializer=_init_worker,
            initargs=(g, plan.variants, plan.master_seed),
        ) as pool:
            chunks = list(pool.map(_run_chunk_in_worker, tasks))
    records = tuple(record for chunk in chunks for record in chunk)
    summaries = _summarize(plan.variants, records)
    return ExperimentResult(plan=plan, summaries=summaries, records=records)


def _mean(values) -> float | None:
    values = list(values)
    if not values:
        return None
    return sum(values) / len(values)


def _summarize(
    variants: tuple[VariantSpec, ...], records: tuple[SearchRecord, ...]
) -> tuple[ExperimentSummary, ...]:
    grouped: dict[str, list[SearchRecord]] = {v.label: [] for v in variants}
    for record in records:
        grouped[record.variant].append(record)
    summaries = []
    for var in variants:
        rows = grouped[var.label]
        found = [r for r in rows if r.outcome == SearchOutcome.FOUND.value]
        refined = [r.refined_length for r in found if r.refined_length is not None]
        histogram: dict[int, int] = {}
        for r in found:
            histogram[r.walk_steps] = histogram.get(r.walk_steps, 0) + 1
        summaries.append(
            ExperimentSummary(
                variant=var.label,
                total_searches=len(rows),
                successful_searches=len(found),
                success_rate=len(found) / len(rows) if rows else 0.0,
                mean_walk_steps=_mean(r.walk_steps for r in found),
                mean_route_length=_mean(r.route_length for r in found),
                mean_refined_length=_mean(refined),
                max_refined_length=max(refined) if refined else None,
                fraction_under_10=(
                    sum(1 for r in found if r.walk_steps < 10) / len(found)
                    if found
                    else None
                ),
                mean_consults=_mean(r.consults for r in found),
                length_histogram=dict(sorted(histogram.items())),
                oracle_mean_shortest_path=_mean(r.oracle_distance for r in found),
            )
        )
    return tuple(summaries)


def emit_csv(
    summaries: tuple[ExperimentSummary, ...],
    records: tuple[SearchRecord, ...],
    records_path,
    summary_path,
) -> None:
    """Write per-search rows as CSV and per-variant summaries as JSON.

    Output is byte-identical for identical inputs: fixed column order,
    LF newlines, empty cells for absent values.
    """
    with open(records_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.round,
                    r.pair_index,
                    r.s,
                    r.t,
                    r.variant,
                    r.outcome,
                    r.walk_steps,
                    "" if r.route_length is None else r.route_length,
                    "" if r.refined_length is None else r.refined_length,
                    r.consults,
                    "" if r.oracle_distance is None else r.oracle_distance,
                ]
            )
    payload = [asdict(s) for s in summaries]
    with open(summary_path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")


def emit_histogram(
    records: tuple[SearchRecord, ...], bin_width: int, path
) -> None:
    """Write per-variant walk-step histograms of successful searches.

    Rows are ``variant,bin_lower_bound,count`` with bins of the given
    width; counts per variant sum to its number of successful searches.
    """
    if bin_width < 1:
        raise ConfigError(f"bin_width must be >= 1, got {bin_width}")
    variant_order: list[str] = []
    bins: dict[str, dict[int, int]] = {}
    for r in records:
        if r.variant not in bins:
            variant_order.append(r.variant)
            bins[r.variant] = {}
        if r.outcome != SearchOutcome.FOUND.value:
            continue
        lower = (r.walk_steps // bin_width) * bin_width
        per = bins[r.variant]
        per[lower] = per.get(lower, 0) + 1
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["variant", "bin_lower_bound", "count"])
        for variant in variant_order:
            for lower in sorted(bins[variant]):
                writer.writerow([variant, lower, bins[variant][lower]])
