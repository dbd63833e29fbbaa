import json

import pytest
from hypothesis import given, settings, strategies as st

from circbook.book import PALETTE
from circbook.document import FIELDS, EmbeddingDocument
from circbook.embed import embed
from circbook.graph import circ
from circbook.verify import verify_embedding


def doc_for(n, k):
    return EmbeddingDocument.from_embedding(circ(n, k), embed(n, k))


def test_schema_fields():
    data = json.loads(doc_for(12, 6).dumps())
    assert list(data) == list(FIELDS)
    assert data["pages"] == 4 and data["jumps"] == [1, 6]
    assert data["palette"] == list(PALETTE) == ["yellow", "purple", "green", "red", "blue"]
    assert set(data["edges"][0]) == {"u", "v", "page"}


def test_edges_canonical():
    doc = doc_for(27, 13)
    pairs = [(u, v) for u, v, _ in doc.edges]
    assert all(u < v for u, v in pairs) and pairs == sorted(pairs)


def test_byte_stable():
    assert doc_for(25, 8).dumps() == doc_for(25, 8).dumps()


def test_file_roundtrip(tmp_path):
    doc = doc_for(14, 5)
    doc.write(tmp_path / "d.json")
    back = EmbeddingDocument.read(tmp_path / "d.json")
    assert back == doc
    assert verify_embedding(back.spec, back.to_embedding()).valid


def test_missing_field():
    data = doc_for(6, 2).to_dict()
    del data["palette"]
    with pytest.raises(ValueError):
        EmbeddingDocument.from_dict(data)


def test_names():
    assert doc_for(14, 5).name == "C(14,5)"
    assert EmbeddingDocument(10, (2, 3), "x", tuple(range(1, 11)), 1, ()).name == "C(Z_10,{2,3})"


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 60), st.data())
def test_roundtrip_property(n, data):
    k = data.draw(st.integers(1, n // 2))
    doc = doc_for(n, k)
    assert EmbeddingDocument.loads(doc.dumps()) == doc
