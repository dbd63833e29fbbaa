"""Layouts and book embeddings."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Sequence, Tuple

from .graph import Edge

PALETTE: Tuple[str, ...] = ("yellow", "purple", "green", "red", "blue")
YELLOW, PURPLE, GREEN, RED, BLUE = range(5)


@dataclass(frozen=True)
class Layout:
    """Circular vertex order; index 0 is the anchor."""

    order: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError("layout must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


@dataclass
class BookEmbedding:
    layout: Layout
    pages: int
    assignment: Dict[Edge, int]
    route: str
    stats: Dict[str, int] = field(default_factory=dict)

    @property
    def order(self) -> Tuple[int, ...]:
        return self.layout.order

    def page_edges(self) -> Dict[int, list]:
        out: Dict[int, list] = {p: [] for p in range(self.pages)}
        for e, p in sorted(self.assignment.items()):
            out.setdefault(p, []).append(e)
        return out


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def make_embedding(order: Sequence[int], assignment: Mapping[Edge, int], route: str,
                   pages: int | None = None, **stats: int) -> BookEmbedding:
    assign = {canonical(*e): p for e, p in assignment.items()}
    if pages is None:
        pages = max(assign.values()) + 1 if assign else 0
    return BookEmbedding(Layout(tuple(order)), pages, assign, route, dict(stats))
