"""Closed-form Grundy values and outcomes for exactly solved families.

Every function here is a constant-time formula; each one is validated
against the search oracle across its whole desk-scale range in the tests,
so none of them should be trusted in isolation after an edit.
"""

from __future__ import annotations

from .engine import GrundyValue, Outcome
from .graphs import FamilyKind, Graph, GraphClassTag, recognize_family


class FormulaDomainError(ValueError):
    """Parameters outside the family the formula is proven for."""


def grundy_complete(n: int) -> GrundyValue:
    """Complete graph: every move covers only itself, so pure parity."""
    if n < 1:
        raise FormulaDomainError("complete graph needs n >= 1")
    return n % 2


def grundy_star(leaves: int) -> GrundyValue:
    """Star with the given leaf count: opposite parity of the leaves."""
    if leaves < 1:
        raise FormulaDomainError("star needs at least one leaf")
    return 1 - leaves % 2


def grundy_complete_bipartite(m: int, n: int) -> GrundyValue:
    """Both sides at least 2: 0 when the sides agree in parity, else 2."""
    if min(m, n) < 2:
        raise FormulaDomainError(
            "needs both sides >= 2; use grundy_star for K_{1,n}")
    return 0 if (m - n) % 2 == 0 else 2


def grundy_cycle(n: int) -> GrundyValue:
    if n < 3:
        raise FormulaDomainError("cycle needs n >= 3")
    return n % 2


def grundy_path(n: int) -> GrundyValue:
    if n < 1:
        raise FormulaDomainError("path needs n >= 1")
    return n % 2


def grundy_cycle_selected(n: int, d: int | None = None) -> GrundyValue:
    """Cycle with one vertex selected, or two at cyclic distance d.

    One selected: n/2 on even cycles, 0 on odd ones. Two selected:
    ceil(n/2) - d, a single formula covering both parities (antipodal
    pairs on even cycles give 0).
    """
    if n < 3:
        raise FormulaDomainError("cycle needs n >= 3")
    if d is None:
        return n // 2 if n % 2 == 0 else 0
    if not 1 <= d <= n // 2:
        raise FormulaDomainError(
            f"cyclic distance must be in 1..{n // 2}, got {d}")
    return (n + 1) // 2 - d


def grid_outcome(dims: list[int]) -> Outcome:
    """Product of paths: first player wins iff every dimension is odd.

    Dimension-1 factors are allowed; they are odd, hence neutral.
    """
    if not dims:
        raise FormulaDomainError("grid needs at least one dimension")
    if any(d < 1 for d in dims):
        raise FormulaDomainError("grid dimensions must be positive")
    return Outcome.N if all(d % 2 == 1 for d in dims) else Outcome.P


def product_outcome(outcomes: list[Outcome]) -> Outcome:
    """Cartesian product: a win for the first player iff every factor is."""
    if not outcomes:
        raise FormulaDomainError("product needs at least one factor")
    return Outcome.N if all(o is Outcome.N for o in outcomes) else Outcome.P


def closed_form_lookup(g: Graph,
                       tag: GraphClassTag) -> GrundyValue | Outcome | None:
    """Dispatch to the family formula matching the tag.

    Returns None for families with no closed form (tree, block graph,
    cactus, general); grid tags yield only an outcome, since no grid
    Grundy formula is known. The tag must be the recognized tag of g.
    """
    if tag != recognize_family(g):
        raise FormulaDomainError("tag does not match the graph")
    kind = tag.kind
    if kind is FamilyKind.COMPLETE:
        return grundy_complete(tag.params[0])
    if kind is FamilyKind.STAR:
        return grundy_star(tag.params[0])
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return grundy_complete_bipartite(*tag.params)
    if kind is FamilyKind.CYCLE:
        return grundy_cycle(tag.params[0])
    if kind is FamilyKind.PATH:
        return grundy_path(tag.params[0])
    if kind is FamilyKind.GRID:
        return grid_outcome(list(tag.params))
    return None
