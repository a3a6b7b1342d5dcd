"""Spanning-tree counting, closed-form counts for the windmill families,
a brute-force oracle, and spanning-tree entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .engines import EngineKind, det
from .graphs import Graph, UnionFind, reduced_laplacian

FRIENDSHIP = "friendship"
SUBDIVIDED = "subdivided"

BRUTE_FORCE_EDGE_CAP = 24


class EngineConsistencyError(ArithmeticError):
    """A determinant engine returned a value no spanning-tree count can have."""


def tau(g: Graph, engine: EngineKind | str = EngineKind.BAREISS, drop: int = 0) -> int:
    """Number of spanning trees of ``g``: the determinant of its reduced
    Laplacian. Zero exactly when ``g`` is disconnected.

    Any ``drop`` vertex gives the same count. A non-integer or negative
    determinant is impossible here, so one is reported as an engine bug.
    """
    if g.n < 1:
        raise ValueError("spanning trees need at least one vertex")
    if g.n == 1:
        return 1
    value = det(reduced_laplacian(g, drop), engine)
    if isinstance(value, Fraction):
        raise EngineConsistencyError(
            f"engine {EngineKind(engine).value} returned non-integer {value} for a Laplacian minor"
        )
    if value < 0:
        raise EngineConsistencyError(
            f"engine {EngineKind(engine).value} returned negative {value} for a Laplacian minor"
        )
    return value


def tau_closed_friendship(k: int) -> int:
    """Spanning trees of the k-triangle windmill: 3**k."""
    if k < 1:
        raise ValueError(f"triangle count must be at least 1, got {k}")
    return 3**k


def tau_closed_subdivided_friendship(k: int) -> int:
    """Spanning trees of the edge-subdivided k-triangle windmill: 6**k."""
    if k < 1:
        raise ValueError(f"triangle count must be at least 1, got {k}")
    return 6**k


def tau_bruteforce(g: Graph, edge_cap: int = BRUTE_FORCE_EDGE_CAP) -> int:
    """Count spanning trees by testing every (n-1)-edge subset with union-find.

    Exhaustive and engine-independent, so it anchors the matrix-tree route.
    Refuses graphs with more than ``edge_cap`` edges; use ``tau`` for those.
    """
    m = g.num_edges
    if m > edge_cap:
        raise ValueError(
            f"{m} edges exceeds the exhaustive cap of {edge_cap}; use the matrix-tree route (tau)"
        )
    n = g.n
    if n < 1:
        raise ValueError("spanning trees need at least one vertex")
    if n == 1:
        return 1
    if m < n - 1:
        return 0
    count = 0
    edges = sorted(g.edges)
    for subset in combinations(edges, n - 1):
        uf = UnionFind(n)
        for u, v in subset:
            if not uf.union(u, v):
                break
        else:
            count += 1
    return count


def ln_tree_count(count: int) -> float:
    """Natural log of a positive count, exact-integer safe far beyond float range."""
    if count <= 0:
        raise ValueError(f"count must be positive, got {count}")
    bits = count.bit_length()
    if bits <= 53:
        return math.log(count)
    shift = bits - 53
    return math.log(count >> shift) + shift * math.log(2.0)


@dataclass(frozen=True)
class EntropyEstimate:
    """One point of the entropy sequence ln(tau) / n for a windmill family."""

    k: int
    n: int
    value: float


def _family_key(family: str) -> str:
    key = family.strip().lower()
    if key in (FRIENDSHIP,):
        return FRIENDSHIP
    if key in (SUBDIVIDED, "subdivided_friendship"):
        return SUBDIVIDED
    raise ValueError(f"unknown family {family!r}; expected {FRIENDSHIP!r} or {SUBDIVIDED!r}")


def entropy_estimate(family: str, k: int) -> EntropyEstimate:
    """ln(tau) / n for the k-th member of the family, computed from the
    closed forms so huge counts never touch floating point."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if _family_key(family) == FRIENDSHIP:
        n = 2 * k + 1
        value = k * math.log(3.0) / n
    else:
        n = 5 * k + 1
        value = k * math.log(6.0) / n
    return EntropyEstimate(k=k, n=n, value=value)


def entropy_limit(family: str) -> float:
    """Limit of ln(tau) / n as the family grows."""
    if _family_key(family) == FRIENDSHIP:
        return math.log(3.0) / 2.0
    return math.log(6.0) / 5.0


def entropy_point(g: Graph, engine: EngineKind | str = EngineKind.BAREISS) -> float:
    """ln(tau(g)) / n for a single connected graph."""
    count = tau(g, engine)
    if count == 0:
        raise ValueError("graph is disconnected; it has no spanning trees")
    return ln_tree_count(count) / g.n
