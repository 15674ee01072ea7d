"""Solvers for the closed geodetic game on finite simple graphs."""

from .engine import (
    AnalysisReport,
    IllegalMoveError,
    OptimalPlay,
    Outcome,
    PlayoutPolicy,
    Position,
    RandomPlay,
    SearchBudgetExceeded,
    SearchDeadlineExceeded,
    analyze,
    apply_move,
    best_move,
    grundy,
    is_terminal,
    legal_moves,
    nim_sum,
    outcome,
    random_playout,
)
from .graphs import (
    CAPACITY,
    BlockCutTree,
    CapacityError,
    DistanceMatrix,
    FamilyKind,
    Graph,
    GraphClassTag,
    GraphError,
    IntervalTable,
    VertexSet,
    all_pairs_distances,
    block_cut_tree,
    cartesian_product,
    closure,
    connected_components,
    format_graph,
    interval,
    parse_graph,
    recognize_family,
    simplicial_vertices,
)

__all__ = [name for name in dir() if not name.startswith("_")]
