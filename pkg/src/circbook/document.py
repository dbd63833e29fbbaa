"""JSON interchange for embeddings.

Keys are written in a fixed order and edges in canonical order, so equal
embeddings serialize to identical bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

from .book import PALETTE, BookEmbedding, make_embedding
from .graph import CirculantSpec, build

FIELDS = ("n", "jumps", "route", "order", "pages", "edges", "palette")


@dataclass(frozen=True)
class EmbeddingDocument:
    n: int
    jumps: Tuple[int, ...]
    route: str
    order: Tuple[int, ...]
    pages: int
    edges: Tuple[Tuple[int, int, int], ...]
    palette: Tuple[str, ...] = PALETTE

    @classmethod
    def from_embedding(cls, spec: CirculantSpec, emb: BookEmbedding) -> "EmbeddingDocument":
        edges = tuple((u, v, p) for (u, v), p in sorted(emb.assignment.items()))
        return cls(spec.n, tuple(spec.jumps), emb.route, tuple(emb.order), emb.pages, edges)

    @property
    def name(self) -> str:
        if len(self.jumps) == 2 and self.jumps[0] == 1:
            return f"C({self.n},{self.jumps[1]})"
        return f"C(Z_{self.n},{{{','.join(map(str, self.jumps))}}})"

    @property
    def spec(self) -> CirculantSpec:
        return build(self.n, self.jumps)

    def to_embedding(self) -> BookEmbedding:
        return make_embedding(self.order, {(u, v): p for u, v, p in self.edges}, self.route, self.pages)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "jumps": list(self.jumps),
            "route": self.route,
            "order": list(self.order),
            "pages": self.pages,
            "edges": [{"u": u, "v": v, "page": p} for u, v, p in self.edges],
            "palette": list(self.palette),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingDocument":
        missing = [f for f in FIELDS if f not in data]
        if missing:
            raise ValueError(f"embedding document lacks {', '.join(missing)}")
        return cls(
            int(data["n"]),
            tuple(int(j) for j in data["jumps"]),
            str(data["route"]),
            tuple(int(v) for v in data["order"]),
            int(data["pages"]),
            tuple((int(e["u"]), int(e["v"]), int(e["page"])) for e in data["edges"]),
            tuple(str(c) for c in data["palette"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=1) + "\n"

    @classmethod
    def loads(cls, text: str) -> "EmbeddingDocument":
        return cls.from_dict(json.loads(text))

    def write(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def read(cls, path: Union[str, Path]) -> "EmbeddingDocument":
        return cls.loads(Path(path).read_text(encoding="utf-8"))
