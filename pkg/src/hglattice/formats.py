"""File formats: edge lists, incidence CSV, lattice JSON documents, DOT.

The JSON document is the canonical machine-readable form of a lattice and
round-trips losslessly; DOT renders the Hasse diagram with Galois labels
for external graph tooling. Parse failures raise ParseError with the line
or cell that offended.
"""

from __future__ import annotations

import csv
import io
import json

from .core import BitVec, Hypergraph, IncidenceMatrix, IngestionError, from_edge_list
from .lattice import Concept, ConceptLattice


class ParseError(ValueError):
    """Input text could not be parsed; the message carries the location."""


def parse_edge_list(text: str) -> Hypergraph:
    """Parse ``edge_name: v1, v2, ...`` lines into a hypergraph.

    Blank lines and ``#`` comments are ignored; an edge with no vertices is
    written as ``name:``. Duplicate vertex mentions inside an edge collapse.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(
                f"line {lineno}: expected 'edge_name: v1, v2, ...', got {raw!r}"
            )
        name, _, members = line.partition(":")
        name = name.strip()
        if not name:
            raise ParseError(f"line {lineno}: missing edge name")
        vertices = [v.strip() for v in members.split(",") if v.strip()]
        edges.append((name, vertices))
    try:
        return from_edge_list(edges)
    except IngestionError as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(h: Hypergraph) -> str:
    lines = []
    for j, name in enumerate(h.edge_names):
        members = h.vertex_names_of(h.edge_column(j))
        lines.append(f"{name}: {', '.join(members)}".rstrip())
    return "\n".join(lines) + ("\n" if lines else "")


def parse_incidence_csv(text: str) -> Hypergraph:
    """Parse an incidence matrix CSV: header row of edge names (first cell
    is the corner and ignored), then one row per vertex with 0/1 cells."""
    rows = [row for row in csv.reader(io.StringIO(text))]
    rows = [row for row in rows if any(cell.strip() for cell in row)]
    if not rows:
        return from_edge_list([])
    header = rows[0]
    edge_names = [cell.strip() for cell in header[1:]]
    n_edges = len(edge_names)
    vertex_names = []
    columns = [0] * n_edges
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != n_edges + 1:
            raise ParseError(
                f"row {r}: expected {n_edges + 1} cells, got {len(row)}"
            )
        vertex_names.append(row[0].strip())
        for c, cell in enumerate(row[1:], start=2):
            value = cell.strip()
            if value == "1":
                columns[c - 2] |= 1 << (r - 2)
            elif value != "0":
                raise ParseError(
                    f"row {r}, column {c}: expected 0 or 1, got {cell!r}"
                )
    try:
        chi = IncidenceMatrix(len(vertex_names), n_edges, tuple(columns))
        return Hypergraph(tuple(vertex_names), tuple(edge_names), chi)
    except IngestionError as exc:
        raise ParseError(str(exc)) from exc


DOCUMENT_FORMAT = "hg-lattice/1"


def lattice_to_document(lat: ConceptLattice) -> dict:
    """JSON-ready dict describing the canonical lattice."""
    h = lat.hypergraph
    duplicates = {
        name: h.edge_names[rep]
        for name, rep in sorted(lat.edge_aliases.items())
        if name != h.edge_names[rep]
    }
    nodes = []
    for i, c in enumerate(lat.nodes):
        nodes.append(
            {
                "id": i,
                "extent": list(h.vertex_names_of(c.extent)),
                "intent": list(h.edge_names_of(c.intent)),
                "introduces": list(h.edge_names_of(lat.introduced[i])),
            }
        )
    return {
        "format": DOCUMENT_FORMAT,
        "hypergraph": {
            "n_vertices": h.n_vertices,
            "n_edges": h.n_edges,
            "vertices": list(h.vertex_names),
            "edges": list(h.edge_names),
            "duplicate_edges": duplicates,
        },
        "top": lat.top_index,
        "bottom": lat.bottom_index,
        "nodes": nodes,
        "covers": sorted([lo, hi] for lo, hi in lat.covers),
    }


def serialize_lattice(lat: ConceptLattice) -> str:
    return json.dumps(lattice_to_document(lat), indent=2) + "\n"


def _require(condition: bool, message: str):
    if not condition:
        raise ParseError(message)


def document_to_lattice(doc: dict) -> ConceptLattice:
    """Rebuild the canonical lattice from its document form.

    Extents are taken from the node records, the order and covers are
    recomputed from them, and the stored covers/top/bottom are
    cross-checked so a tampered document fails instead of producing an
    inconsistent lattice.
    """
    _require(isinstance(doc, dict), "document must be a JSON object")
    _require(doc.get("format") == DOCUMENT_FORMAT,
             f"unsupported document format {doc.get('format')!r}")
    hg = doc["hypergraph"]
    vertex_names = tuple(hg["vertices"])
    edge_names = tuple(hg["edges"])
    _require(hg.get("n_vertices") == len(vertex_names),
             "vertex table does not match n_vertices")
    _require(hg.get("n_edges") == len(edge_names),
             "edge table does not match n_edges")
    vidx = {name: i for i, name in enumerate(vertex_names)}
    eidx = {name: i for i, name in enumerate(edge_names)}
    nv, ne = len(vertex_names), len(edge_names)

    records = doc["nodes"]
    _require([rec.get("id") for rec in records] == list(range(len(records))),
             "node ids must be 0..n-1 in order")
    extents = []
    intents = []
    introduces = []
    for rec in records:
        try:
            ext = sum(1 << vidx[name] for name in rec["extent"])
            intn = sum(1 << eidx[name] for name in rec["intent"])
            intro = sum(1 << eidx[name] for name in rec["introduces"])
        except KeyError as exc:
            raise ParseError(f"node {rec['id']}: unknown name {exc.args[0]!r}")
        extents.append(ext)
        intents.append(intn)
        introduces.append(intro)
    _require(len(set(extents)) == len(extents), "node extents must be distinct")

    # Edge columns are recovered from the nodes that introduce each edge.
    columns = [None] * ne
    for i, intro in enumerate(introduces):
        bits = intro
        while bits:
            low = bits & -bits
            j = low.bit_length() - 1
            _require(columns[j] is None,
                     f"edge {edge_names[j]!r} introduced at more than one node")
            columns[j] = extents[i]
            bits ^= low
    _require(all(col is not None for col in columns),
             "every edge must be introduced at exactly one node")
    _require(len(set(columns)) == ne, "duplicate edge columns in document")
    h = Hypergraph(
        vertex_names, edge_names, IncidenceMatrix(nv, ne, tuple(columns))
    )
    for i, ext in enumerate(extents):
        derived = sum(
            1 << j for j, col in enumerate(columns) if ext & col == ext
        )
        _require(derived == intents[i],
                 f"node {i}: stored intent disagrees with edge columns")

    n_nodes = len(extents)
    up_masks = []
    for i in range(n_nodes):
        acc = 0
        for j in range(n_nodes):
            if i != j and extents[i] & extents[j] == extents[i]:
                acc |= 1 << j
        up_masks.append(acc)
    cover_masks = []
    for i in range(n_nodes):
        reachable = 0
        bits = up_masks[i]
        while bits:
            low = bits & -bits
            reachable |= up_masks[low.bit_length() - 1]
            bits ^= low
        cover_masks.append(up_masks[i] & ~reachable)

    covers = sorted(
        [i, j]
        for i in range(n_nodes)
        for j in range(n_nodes)
        if (cover_masks[i] >> j) & 1
    )
    _require(covers == [list(p) for p in doc["covers"]],
             "stored covers disagree with node extents")

    full = (1 << nv) - 1
    _require(full in extents, "lattice top (full vertex set) is missing")
    top_index = extents.index(full)
    _require(doc.get("top") == top_index, "stored top id is wrong")
    all_mask = (1 << n_nodes) - 1
    bottom_index = next(
        i for i in range(n_nodes) if up_masks[i] | (1 << i) == all_mask
    )
    _require(doc.get("bottom") == bottom_index, "stored bottom id is wrong")

    node_by_extent = {e: i for i, e in enumerate(extents)}
    try:
        edge_anchors = tuple(node_by_extent[col] for col in columns)
    except KeyError:
        raise ParseError("an edge column is not a node extent")

    nodes = tuple(
        Concept(BitVec(nv, e), BitVec(ne, b)) for e, b in zip(extents, intents)
    )
    aliases = {name: j for j, name in enumerate(edge_names)}
    for dup, rep in hg.get("duplicate_edges", {}).items():
        _require(rep in eidx, f"duplicate edge {dup!r} maps to unknown {rep!r}")
        aliases[dup] = eidx[rep]

    return ConceptLattice(
        hypergraph=h,
        nodes=nodes,
        up_masks=tuple(up_masks),
        cover_masks=tuple(cover_masks),
        top_index=top_index,
        bottom_index=bottom_index,
        edge_anchors=edge_anchors,
        introduced=tuple(BitVec(ne, b) for b in introduces),
        edge_aliases=aliases,
    )


def parse_lattice_document(text: str) -> ConceptLattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return document_to_lattice(doc)


def lattice_to_dot(lat: ConceptLattice) -> str:
    """Hasse diagram in DOT form, one edge per cover pair, nodes labelled
    ``{extent} : {intent}``."""
    lines = [
        "digraph lattice {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="Helvetica"];',
    ]
    for i in range(len(lat.nodes)):
        label = lat.node_label(i).replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for lo, hi in sorted(lat.covers):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
