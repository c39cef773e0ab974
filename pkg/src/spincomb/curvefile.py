"""Line-oriented text format for marked dual graphs.

Grammar (ASCII or UTF-8 names, LF or CRLF line endings)::

    # comment
    v <name> genus=<int>
    e <name> <vertex-name> <vertex-name>

Vertex and edge indices are assigned in declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import DuplicateNameError, ParseError, UnknownVertexError
from .graphs import build_graph
from .spin import CurveDualGraph


@dataclass(frozen=True)
class CurveFile:
    """Parsed declarations, keeping the symbolic names for display."""

    vertex_names: Tuple[str, ...]
    genus_marks: Tuple[int, ...]
    edge_names: Tuple[str, ...]
    edge_pairs: Tuple[Tuple[int, int], ...]

    def to_dual_graph(self) -> CurveDualGraph:
        return CurveDualGraph(
            build_graph(len(self.vertex_names), self.edge_pairs), self.genus_marks
        )


def parse_curve(text: str) -> CurveFile:
    vertex_names: List[str] = []
    genus_marks: List[int] = []
    edge_names: List[str] = []
    edge_pairs: List[Tuple[int, int]] = []
    vertex_index = {}
    edge_seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "v":
            if len(fields) != 3 or not fields[2].startswith("genus="):
                raise ParseError(lineno, f"expected 'v <name> genus=<int>': {raw!r}")
            name = fields[1]
            if name in vertex_index:
                raise DuplicateNameError(lineno, name)
            try:
                mark = int(fields[2][len("genus="):])
            except ValueError:
                raise ParseError(lineno, f"bad genus value in {raw!r}") from None
            if mark < 0:
                raise ParseError(lineno, f"genus must be nonnegative: {raw!r}")
            vertex_index[name] = len(vertex_names)
            vertex_names.append(name)
            genus_marks.append(mark)
        elif kind == "e":
            if len(fields) != 4:
                raise ParseError(lineno, f"expected 'e <name> <v> <v>': {raw!r}")
            name = fields[1]
            if name in edge_seen:
                raise DuplicateNameError(lineno, name)
            for endpoint in fields[2:]:
                if endpoint not in vertex_index:
                    raise UnknownVertexError(lineno, endpoint)
            edge_seen.add(name)
            edge_names.append(name)
            edge_pairs.append((vertex_index[fields[2]], vertex_index[fields[3]]))
        else:
            raise ParseError(lineno, f"unknown declaration {kind!r}")
    return CurveFile(
        tuple(vertex_names), tuple(genus_marks), tuple(edge_names), tuple(edge_pairs)
    )


def parse_curve_file(text: str) -> CurveDualGraph:
    """Parse the text format directly into a marked dual graph."""
    return parse_curve(text).to_dual_graph()


def format_curve_file(
    x: CurveDualGraph,
    vertex_names: Optional[Sequence[str]] = None,
    edge_names: Optional[Sequence[str]] = None,
) -> str:
    """Emit a dual graph in the text format; round-trips through parsing."""
    if vertex_names is None:
        vertex_names = [f"c{i}" for i in range(x.graph.vertex_count)]
    if edge_names is None:
        edge_names = [f"n{i}" for i in range(x.graph.edge_count)]
    lines = [
        f"v {vertex_names[v]} genus={x.genus_marks[v]}"
        for v in range(x.graph.vertex_count)
    ]
    lines.extend(
        f"e {edge_names[eid]} {vertex_names[a]} {vertex_names[b]}"
        for eid, (a, b) in enumerate(x.graph.edges)
    )
    return "\n".join(lines) + "\n"
