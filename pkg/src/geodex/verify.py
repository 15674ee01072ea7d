"""Randomized cross-validation of every fast solver against the oracle."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .engine import Outcome, Position, SearchBudgetExceeded, grundy, outcome
from .families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    star_graph,
)
from .formulas import (
    grid_outcome,
    grundy_complete,
    grundy_complete_bipartite,
    grundy_cycle,
    grundy_path,
    grundy_star,
    product_outcome,
)
from .generators import random_block_graph, random_cactus, random_tree
from .graphs import Graph, format_graph
from .solvers import solve_block_graph, solve_cactus, solve_tree

VERIFY_FAMILIES = ("tree", "block", "cactus", "closed-forms", "product")


@dataclass
class Mismatch:
    graph: str
    expected: str
    got: str


@dataclass
class VerifyReport:
    family: str
    instances: int
    seed: int
    max_n: int
    mismatches: list[Mismatch] = field(default_factory=list)
    budget_exceeded: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "instances": self.instances,
            "seed": self.seed,
            "max_n": self.max_n,
            "mismatches": [vars(m) for m in self.mismatches],
            "budget_exceeded": list(self.budget_exceeded),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _closed_form_instance(rng: random.Random, max_n: int):
    """One random (graph, formula value) pair from the solved families."""
    kind = rng.choice(("path", "cycle", "complete", "star", "bipartite",
                       "grid"))
    if kind == "path":
        n = rng.randint(1, max_n)
        return path_graph(n), grundy_path(n)
    if kind == "cycle":
        n = rng.randint(3, max(3, max_n))
        return cycle_graph(n), grundy_cycle(n)
    if kind == "complete":
        n = rng.randint(1, min(max_n, 10))
        return complete_graph(n), grundy_complete(n)
    if kind == "star":
        leaves = rng.randint(1, max(1, max_n - 1))
        return star_graph(leaves), grundy_star(leaves)
    if kind == "bipartite":
        m = rng.randint(2, max(2, max_n // 2))
        n = rng.randint(2, max(2, max_n - m))
        return complete_bipartite_graph(m, n), grundy_complete_bipartite(m, n)
    dims = [rng.randint(1, 4), rng.randint(2, 4)]
    while dims[0] * dims[1] > 16:
        dims = [rng.randint(1, 4), rng.randint(2, 4)]
    return grid_graph(dims), grid_outcome(dims)


_PRODUCT_POOL = (
    ("P2", lambda: path_graph(2)),
    ("P3", lambda: path_graph(3)),
    ("P5", lambda: path_graph(5)),
    ("C3", lambda: cycle_graph(3)),
    ("C5", lambda: cycle_graph(5)),
    ("star2", lambda: star_graph(2)),
)


def run_verify(family: str, count: int = 100, max_n: int = 14,
               seed: int = 0, budget: int | None = None) -> VerifyReport:
    """Generate seeded instances and compare the target solver with the
    oracle; budget blowups are flagged per instance, never fatal."""
    if family not in VERIFY_FAMILIES:
        raise ValueError(
            f"unknown verify family {family!r}; pick one of {VERIFY_FAMILIES}")
    rng = random.Random(seed)
    report = VerifyReport(family=family, instances=count, seed=seed,
                          max_n=max_n)
    start = time.perf_counter()
    for _ in range(count):
        try:
            _one_instance(family, rng, max_n, budget, report)
        except SearchBudgetExceeded:
            report.budget_exceeded.append(_LAST_GRAPH_TEXT[0])
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


# stashes the most recent instance so budget blowups can name it
_LAST_GRAPH_TEXT = [""]


def _one_instance(family: str, rng: random.Random, max_n: int,
                  budget: int | None, report: VerifyReport) -> None:
    if family in ("tree", "block", "cactus"):
        n = rng.randint(1, max_n)
        maker = {"tree": random_tree, "block": random_block_graph,
                 "cactus": random_cactus}[family]
        solver = {"tree": solve_tree, "block": solve_block_graph,
                  "cactus": solve_cactus}[family]
        g = maker(n, rng)
        _LAST_GRAPH_TEXT[0] = format_graph(g)
        got = solver(g)
        expected = grundy(Position(g), budget=budget)
        if got != expected:
            report.mismatches.append(Mismatch(
                graph=_LAST_GRAPH_TEXT[0], expected=str(expected),
                got=str(got)))
        return
    if family == "closed-forms":
        g, formula_value = _closed_form_instance(rng, max_n)
        _LAST_GRAPH_TEXT[0] = format_graph(g)
        if isinstance(formula_value, Outcome):
            truth: object = outcome(Position(g), budget=budget)
        else:
            truth = grundy(Position(g), budget=budget)
        if formula_value != truth:
            report.mismatches.append(Mismatch(
                graph=_LAST_GRAPH_TEXT[0],
                expected=str(getattr(truth, "value", truth)),
                got=str(getattr(formula_value, "value", formula_value))))
        return
    # product: outcome of the product vs the factor-outcome rule
    (name_a, make_a), (name_b, make_b) = (rng.choice(_PRODUCT_POOL),
                                          rng.choice(_PRODUCT_POOL))
    ga, gb = make_a(), make_b()
    while ga.n * gb.n > 16:
        (name_b, make_b) = rng.choice(_PRODUCT_POOL)
        gb = make_b()
    from .graphs import cartesian_product
    prod = cartesian_product([ga, gb])
    _LAST_GRAPH_TEXT[0] = f"# {name_a} x {name_b}\n" + format_graph(prod)
    rule = product_outcome([outcome(Position(ga), budget=budget),
                            outcome(Position(gb), budget=budget)])
    truth = outcome(Position(prod), budget=budget)
    if rule != truth:
        report.mismatches.append(Mismatch(
            graph=_LAST_GRAPH_TEXT[0], expected=truth.value, got=rule.value))
