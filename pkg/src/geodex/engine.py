"""The closed geodetic game: positions, legal moves, and the Grundy oracle.

A move adds a vertex outside the current geodetic closure of the selected
set; play ends when the closure covers every vertex. The game is impartial
under normal play, so positions carry Sprague-Grundy values: 0 means the
player to move loses against optimal play.

The oracle is a memoized mex recursion over selected-set bitmasks, split
per connected component and combined by nim-sum. Memo entries are pure
functions of (graph, mask) and write-once, so concurrent solvers may race
to fill them without harm.
"""

from __future__ import annotations

import random
import time
import weakref
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, VertexSet, connected_components

DEFAULT_BUDGET = 50_000_000

# How many expansions between deadline checks; keeps time syscalls rare.
_DEADLINE_STRIDE = 4096


class SearchBudgetExceeded(RuntimeError):
    """The expanded-state cap was hit before the value was determined."""


class SearchDeadlineExceeded(RuntimeError):
    """The wall-clock deadline passed before the value was determined."""


class IllegalMoveError(ValueError):
    """The vertex is already covered or is not a valid id."""


# A Grundy value is a plain nonnegative int; game length bounds it by n+1.
GrundyValue = int


class Outcome(str, Enum):
    N = "N"  # next player (the one to move) wins
    P = "P"  # previous player wins; grundy 0


@dataclass(frozen=True)
class Position:
    """A graph plus the selected set S; the closure is always derived."""

    graph: Graph
    selected: VertexSet = VertexSet()

    def __post_init__(self) -> None:
        if not self.selected.issubset(self.graph.vertices):
            raise IllegalMoveError("selected set contains invalid vertex ids")


@dataclass(frozen=True)
class OptimalPlay:
    """Perfect play: win in as few moves as possible, otherwise drag the
    game out as long as possible. Deterministic (vertex-id tie-break)."""


@dataclass(frozen=True)
class RandomPlay:
    """Uniform random legal moves from a seeded generator."""

    seed: int = 0


PlayoutPolicy = OptimalPlay | RandomPlay


@dataclass(frozen=True)
class AnalysisReport:
    grundy: GrundyValue
    outcome: Outcome
    options: tuple[tuple[int, GrundyValue], ...]
    best_move: int | None


class _Budget:
    """Counts expanded states and occasionally checks the clock."""

    __slots__ = ("remaining", "deadline", "stride")

    def __init__(self, limit: int, deadline: float | None):
        self.remaining = limit
        self.deadline = deadline
        self.stride = _DEADLINE_STRIDE

    def tick(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise SearchBudgetExceeded(
                "search budget exhausted before the value was determined")
        if self.deadline is not None:
            self.stride -= 1
            if self.stride <= 0:
                self.stride = _DEADLINE_STRIDE
                if time.monotonic() > self.deadline:
                    raise SearchDeadlineExceeded("search deadline passed")


class _GraphEngine:
    """Per-graph solver state: interval masks and write-once memo tables."""

    def __init__(self, g: Graph):
        self.g = g
        self.masks = g.intervals.masks
        self.comps = [c.bits for c in connected_components(g)]
        self.comp_memo: dict[tuple[int, int], int] = {}
        self.mono_memo: dict[int, int] = {}
        self.len_memo: dict[int, int] = {}

    # -- closure bookkeeping ------------------------------------------------

    def closure_bits(self, smask: int) -> int:
        out = 0
        rest = smask
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            out |= low
            row = self.masks[u]
            others = rest
            while others:
                olow = others & -others
                others ^= olow
                out |= row[olow.bit_length() - 1]
        return out

    def extend_closure(self, cl: int, smask: int, v: int) -> int:
        """Closure after adding v to a set whose closure is cl."""
        out = cl | (1 << v)
        row = self.masks[v]
        rest = smask
        while rest:
            low = rest & -rest
            rest ^= low
            out |= row[low.bit_length() - 1]
        return out

    # -- grundy values ------------------------------------------------------

    def comp_value(self, comp: int, smask: int, cl: int, budget: _Budget) -> int:
        memo = self.comp_memo
        key = (comp, smask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        budget.tick()
        legal = comp & ~cl
        seen = 0
        rest = legal
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            child_cl = self.extend_closure(cl, smask, v) & comp
            seen |= 1 << self.comp_value(comp, smask | low, child_cl, budget)
        val = (~seen & (seen + 1)).bit_length() - 1
        memo[key] = val
        return val

    def value(self, smask: int, budget: _Budget) -> int:
        cl = self.closure_bits(smask)
        total = 0
        for comp in self.comps:
            total ^= self.comp_value(comp, smask & comp, cl & comp, budget)
        return total

    def mono_value(self, smask: int, cl: int, budget: _Budget) -> int:
        """Whole-graph recursion with no component split (test harness)."""
        memo = self.mono_memo
        hit = memo.get(smask)
        if hit is not None:
            return hit
        budget.tick()
        legal = ((1 << self.g.n) - 1) & ~cl
        seen = 0
        rest = legal
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            child_cl = self.extend_closure(cl, smask, v)
            seen |= 1 << self.mono_value(smask | low, child_cl, budget)
        val = (~seen & (seen + 1)).bit_length() - 1
        memo[smask] = val
        return val

    # -- optimal game length ------------------------------------------------

    def length(self, smask: int, cl: int, budget: _Budget) -> int:
        """Moves remaining under optimal play: win fast, lose slow.

        Lengths are not additive across components, so this recursion runs
        over whole-graph masks and only the values come from the split.
        """
        memo = self.len_memo
        hit = memo.get(smask)
        if hit is not None:
            return hit
        budget.tick()
        legal = ((1 << self.g.n) - 1) & ~cl
        if not legal:
            memo[smask] = 0
            return 0
        winning = self.value(smask, budget) > 0
        best: int | None = None
        rest = legal
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            child_s = smask | low
            child_cl = self.extend_closure(cl, smask, v)
            if winning:
                if self.value(child_s, budget) != 0:
                    continue
                cand = self.length(child_s, child_cl, budget)
                if best is None or cand < best:
                    best = cand
            else:
                cand = self.length(child_s, child_cl, budget)
                if best is None or cand > best:
                    best = cand
        assert best is not None
        memo[smask] = best + 1
        return best + 1


_engines: "weakref.WeakKeyDictionary[Graph, _GraphEngine]" = (
    weakref.WeakKeyDictionary())


def _engine(g: Graph) -> _GraphEngine:
    eng = _engines.get(g)
    if eng is None:
        eng = _GraphEngine(g)
        _engines[g] = eng
    return eng


def _mk_budget(budget: int | None, deadline: float | None) -> _Budget:
    return _Budget(DEFAULT_BUDGET if budget is None else budget, deadline)


def legal_moves(p: Position) -> VertexSet:
    """Every vertex outside the geodetic closure of the selected set."""
    eng = _engine(p.graph)
    cl = eng.closure_bits(p.selected.bits)
    return VertexSet(((1 << p.graph.n) - 1) & ~cl)


def is_terminal(p: Position) -> bool:
    return not legal_moves(p)


def apply_move(p: Position, v: int) -> Position:
    if not (0 <= v < p.graph.n):
        raise IllegalMoveError(f"vertex {v} is not a valid id")
    if v not in legal_moves(p):
        raise IllegalMoveError(f"vertex {v} is already covered")
    return Position(p.graph, p.selected.add(v))


def grundy(p: Position, *, budget: int | None = None,
           deadline: float | None = None, split: bool = True) -> GrundyValue:
    """Exact Sprague-Grundy value of the position.

    ``split`` keeps the per-component nim-sum decomposition on; turning it
    off forces a monolithic search (only the additivity tests want that).
    """
    eng = _engine(p.graph)
    b = _mk_budget(budget, deadline)
    if split:
        return eng.value(p.selected.bits, b)
    cl = eng.closure_bits(p.selected.bits)
    return eng.mono_value(p.selected.bits, cl, b)


def outcome(p: Position, *, budget: int | None = None,
            deadline: float | None = None) -> Outcome:
    return Outcome.N if grundy(p, budget=budget, deadline=deadline) else Outcome.P


def nim_sum(values: list[GrundyValue]) -> GrundyValue:
    total = 0
    for v in values:
        total ^= v
    return total


def best_move(p: Position, policy: PlayoutPolicy = OptimalPlay(), *,
              budget: int | None = None,
              deadline: float | None = None) -> int | None:
    """The move to play, or None on a terminal position.

    Under OptimalPlay: from a winning position, a 0-valued option reached
    with the shortest remaining optimal play; from a losing one, the move
    that drags the game out longest. Ties break to the smallest vertex id.
    """
    moves = legal_moves(p)
    if not moves:
        return None
    if isinstance(policy, RandomPlay):
        rng = random.Random(policy.seed)
        return rng.choice(moves.members())
    eng = _engine(p.graph)
    b = _mk_budget(budget, deadline)
    smask = p.selected.bits
    cl = eng.closure_bits(smask)
    winning = eng.value(smask, b) > 0
    best_v: int | None = None
    best_len = 0
    for v in moves:
        child_s = smask | (1 << v)
        child_cl = eng.extend_closure(cl, smask, v)
        if winning:
            if eng.value(child_s, b) != 0:
                continue
            cand = eng.length(child_s, child_cl, b)
            if best_v is None or cand < best_len:
                best_v, best_len = v, cand
        else:
            cand = eng.length(child_s, child_cl, b)
            if best_v is None or cand > best_len:
                best_v, best_len = v, cand
    return best_v


def analyze(p: Position, *, budget: int | None = None,
            deadline: float | None = None) -> AnalysisReport:
    """Grundy value, outcome, every option's value, and the engine's move."""
    eng = _engine(p.graph)
    b = _mk_budget(budget, deadline)
    smask = p.selected.bits
    value = eng.value(smask, b)
    options = []
    for v in legal_moves(p):
        options.append((v, eng.value(smask | (1 << v), b)))
    move = best_move(p, OptimalPlay(), budget=budget, deadline=deadline)
    return AnalysisReport(grundy=value,
                          outcome=Outcome.N if value else Outcome.P,
                          options=tuple(options), best_move=move)


def random_playout(p: Position, policy: PlayoutPolicy) -> list[int]:
    """Play the position to the end under the policy; returns the moves."""
    rng = random.Random(policy.seed) if isinstance(policy, RandomPlay) else None
    seq: list[int] = []
    cur = p
    while True:
        moves = legal_moves(cur)
        if not moves:
            return seq
        if rng is not None:
            v = rng.choice(moves.members())
        else:
            v = best_move(cur, OptimalPlay())
            assert v is not None
        seq.append(v)
        cur = Position(cur.graph, cur.selected.add(v))
