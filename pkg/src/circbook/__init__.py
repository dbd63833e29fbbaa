"""Circulant graph classification and matching book embeddings."""
from .book import PALETTE, BookEmbedding, Layout
from .classify import Classification, certificate, classify, verify_certificate
from .document import EmbeddingDocument
from .embed import embed
from .graph import CirculantSpec, build, circ, max_degree, predicted_mbt
from .kernels import BACKEND
from .numth import reduction_trace, solve_diophantine
from .partition import build_partition
from .verify import brute_force_mbt, verify_embedding

__all__ = [
    "PALETTE",
    "BACKEND",
    "BookEmbedding",
    "Layout",
    "Classification",
    "CirculantSpec",
    "EmbeddingDocument",
    "build",
    "build_partition",
    "brute_force_mbt",
    "certificate",
    "circ",
    "classify",
    "embed",
    "max_degree",
    "predicted_mbt",
    "reduction_trace",
    "solve_diophantine",
    "verify_certificate",
    "verify_embedding",
]
