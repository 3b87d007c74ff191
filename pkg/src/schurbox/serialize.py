"""JSON records for graphs, configurations, vectors, elements, and tables.

Coefficients travel as decimal strings so that arbitrary-precision integers
survive any JSON reader.  All emitters sort keys and terms, so equal objects
always serialize to identical bytes.
"""

import json

from .algebra import AlgebraElement, VectorElement
from .combinatorics import Configuration
from .graphs import BipartiteMultigraph


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def graph_record(g: BipartiteMultigraph) -> dict:
    return {"n": g.n, "d": g.d, "matrix": [list(row) for row in g.matrix]}


def graph_from_record(record) -> BipartiteMultigraph:
    if not isinstance(record, dict) or not {"n", "d", "matrix"} <= set(record):
        raise ValueError(f"a graph record needs keys n, d, matrix: {record!r}")
    g = BipartiteMultigraph(tuple(tuple(row) for row in record["matrix"]))
    if g.n != record["n"]:
        raise ValueError(f"matrix is {g.n}x{g.n} but the record says n={record['n']}")
    if g.d != record["d"]:
        raise ValueError(f"matrix entries sum to {g.d} but the record says d={record['d']}")
    return g


def element_records(x: AlgebraElement) -> list:
    return [{"coeff": str(coeff), "graph": graph_record(g)} for g, coeff in x.items()]


def element_from_records(records, n: int, d: int) -> AlgebraElement:
    pairs = []
    for record in records:
        if not isinstance(record, dict) or not {"coeff", "graph"} <= set(record):
            raise ValueError(f"an element term needs keys coeff, graph: {record!r}")
        pairs.append((graph_from_record(record["graph"]), int(record["coeff"])))
    return AlgebraElement(n, d, pairs)


def vector_records(v: VectorElement) -> list:
    return [{"coeff": str(coeff), "config": config.word()} for config, coeff in v.items()]


def vector_from_records(records, n: int, d: int) -> VectorElement:
    pairs = []
    for record in records:
        if not isinstance(record, dict) or not {"coeff", "config"} <= set(record):
            raise ValueError(f"a vector term needs keys coeff, config: {record!r}")
        pairs.append((Configuration.from_word(record["config"], n=n, d=d), int(record["coeff"])))
    return VectorElement(n, d, pairs)


def table_line(g1: BipartiteMultigraph, g2: BipartiteMultigraph, product: AlgebraElement) -> str:
    """One tabulation record: both factors and the expanded product."""
    return dumps({"g1": graph_record(g1), "g2": graph_record(g2), "terms": element_records(product)})


def load_json_file(path: str):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)
