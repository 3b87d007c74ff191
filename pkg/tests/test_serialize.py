"""Round trips and byte determinism of the JSON record formats."""

import itertools
import json

import pytest

from schurbox.algebra import AlgebraElement, VectorElement
from schurbox.combinatorics import Configuration, Params, enumerate_configurations
from schurbox.graphs import BipartiteMultigraph, enumerate_graphs
from schurbox.serialize import (
    dumps,
    element_from_records,
    element_records,
    graph_from_record,
    graph_record,
    table_line,
    vector_from_records,
    vector_records,
)

G1 = BipartiteMultigraph(((2, 1), (0, 1)))
G2 = BipartiteMultigraph(((2, 0), (1, 1)))


def test_graph_roundtrip():
    for g in enumerate_graphs(Params(2, 3)):
        assert graph_from_record(graph_record(g)) == g
        assert graph_from_record(json.loads(dumps(graph_record(g)))) == g


def test_graph_record_validation():
    with pytest.raises(ValueError, match="needs keys"):
        graph_from_record({"matrix": [[1]]})
    with pytest.raises(ValueError, match="needs keys"):
        graph_from_record([1, 2])
    with pytest.raises(ValueError, match="says n="):
        graph_from_record({"n": 3, "d": 4, "matrix": [[2, 1], [0, 1]]})
    with pytest.raises(ValueError, match="says d="):
        graph_from_record({"n": 2, "d": 5, "matrix": [[2, 1], [0, 1]]})


def test_element_roundtrip_with_extreme_coefficients():
    x = AlgebraElement(2, 4, [(G1, 10**30), (G2, -7)])
    records = element_records(x)
    assert records[0]["coeff"] in ("-7", str(10**30))
    assert element_from_records(records, 2, 4) == x
    assert element_from_records(json.loads(dumps(records)), 2, 4) == x
    assert element_records(AlgebraElement.zero(2, 4)) == []


def test_element_records_sorted():
    x = AlgebraElement(2, 4, [(G2, 1), (G1, 1)])
    records = element_records(x)
    keys = [tuple(itertools.chain.from_iterable(r["graph"]["matrix"])) for r in records]
    assert keys == sorted(keys)


def test_element_record_validation():
    with pytest.raises(ValueError, match="needs keys"):
        element_from_records([{"coeff": "1"}], 2, 4)
    with pytest.raises(ValueError):
        element_from_records([{"coeff": "x", "graph": graph_record(G1)}], 2, 4)


def test_vector_roundtrip():
    p = Params(2, 3)
    for config in enumerate_configurations(p):
        v = 5 * VectorElement.basis(config)
        assert vector_from_records(vector_records(v), p.n, p.d) == v
    with pytest.raises(ValueError, match="needs keys"):
        vector_from_records([{"coeff": "1"}], 2, 3)


def test_dumps_is_deterministic():
    record = {"b": 1, "a": [3, 2]}
    assert dumps(record) == '{"a":[3,2],"b":1}'
    assert dumps(record) == dumps(dict(reversed(record.items())))


def test_table_line_parses_back():
    product = AlgebraElement(2, 4, [(G1, 2)])
    line = table_line(G1, G2, product)
    record = json.loads(line)
    assert graph_from_record(record["g1"]) == G1
    assert graph_from_record(record["g2"]) == G2
    assert element_from_records(record["terms"], 2, 4) == product
    assert "\n" not in line
