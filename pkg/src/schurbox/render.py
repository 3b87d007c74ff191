"""Text and DOT drawings of graphs and of three-row product diagrams."""

from .combinatorics import Configuration
from .graphs import BipartiteMultigraph, edge_labels
from .structconst import middle_fillings


def _multiplicity(g: BipartiteMultigraph, label) -> int:
    top, bottom = label
    return g.matrix[bottom - 1][top - 1]


def _edge_lines(g: BipartiteMultigraph, upper: str, lower: str, indent: str = "  ") -> list[str]:
    lines = []
    for label in edge_labels(g):
        top, bottom = label
        mult = _multiplicity(g, label)
        suffix = f"   x{mult}" if mult > 1 else ""
        lines.append(f"{indent}{upper} {top} -- {lower} {bottom}{suffix}")
    return lines


def render_graph_ascii(g: BipartiteMultigraph) -> str:
    """Two vertex rows and one line per parallel class, with multiplicities."""
    vertex_row = " ".join(f"({v})" for v in range(1, g.n + 1))
    lines = [f"top:    {vertex_row}", f"bottom: {vertex_row}", "edges:"]
    lines += _edge_lines(g, "top", "bottom")
    return "\n".join(lines) + "\n"


def render_graph_dot(g: BipartiteMultigraph) -> str:
    """An undirected DOT graph; parallel edges are repeated."""
    lines = ["graph pair {", "  rankdir=TB;", "  node [shape=circle];"]
    lines.append("  { rank=same; " + " ".join(f't{v} [label="t{v}"];' for v in range(1, g.n + 1)) + " }")
    lines.append("  { rank=same; " + " ".join(f'b{v} [label="b{v}"];' for v in range(1, g.n + 1)) + " }")
    for top, bottom in edge_labels(g):
        for _ in range(_multiplicity(g, (top, bottom))):
            lines.append(f"  t{top} -- b{bottom};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_product_ascii(
    g1: BipartiteMultigraph, g2: BipartiteMultigraph, g: BipartiteMultigraph
) -> str:
    """Three-row diagrams, one per middle filling of the composed graph.

    The top row is the canonical configuration for g2's top valencies, the
    bottom row the canonical partner for g; each middle row is one way of
    lettings balls flow down the edges of g2 and then g1.
    """
    a, c, middles = middle_fillings(g1, g2, g)
    header = f"{len(middles)} filling(s) of {g1} * {g2} composing to {g}"
    blocks = [header]
    for k, b in enumerate(middles, start=1):
        lines = [f"filling {k}:"]
        lines.append(f"  top     {c.word()}")
        lines += _edge_lines(g2, "top", "middle", indent="    ")
        lines.append(f"  middle  {b.word()}")
        lines += _edge_lines(g1, "middle", "bottom", indent="    ")
        lines.append(f"  bottom  {a.word()}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _box_label(config: Configuration, v: int) -> str:
    box = config.boxes[v - 1]
    return ",".join(str(ball) for ball in box) if box else "-"


def render_product_dot(
    g1: BipartiteMultigraph, g2: BipartiteMultigraph, g: BipartiteMultigraph
) -> str:
    """One DOT graph per middle filling, with box contents as node labels."""
    a, c, middles = middle_fillings(g1, g2, g)
    graphs = []
    for k, b in enumerate(middles, start=1):
        lines = [f"graph filling_{k} {{", "  rankdir=TB;", "  node [shape=box];"]
        lines.append(
            "  { rank=same; "
            + " ".join(f't{v} [label="{_box_label(c, v)}"];' for v in range(1, g.n + 1))
            + " }"
        )
        lines.append(
            "  { rank=same; "
            + " ".join(f'm{v} [label="{_box_label(b, v)}"];' for v in range(1, g.n + 1))
            + " }"
        )
        lines.append(
            "  { rank=same; "
            + " ".join(f'b{v} [label="{_box_label(a, v)}"];' for v in range(1, g.n + 1))
            + " }"
        )
        for top, bottom in edge_labels(g2):
            for _ in range(_multiplicity(g2, (top, bottom))):
                lines.append(f"  t{top} -- m{bottom};")
        for top, bottom in edge_labels(g1):
            for _ in range(_multiplicity(g1, (top, bottom))):
                lines.append(f"  m{top} -- b{bottom};")
        lines.append("}")
        graphs.append("\n".join(lines))
    return "\n\n".join(graphs) + "\n"
