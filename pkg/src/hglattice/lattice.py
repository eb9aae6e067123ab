"""Concept lattice construction for hypergraph incidence matrices.

Two builders produce the same lattice object: a plain pairwise-intersection
fixpoint over Python ints, and a vectorized one that batches whole-matrix
Boolean conjunctions with numpy and derives the containment relation from
packed-word matrix comparisons. Their outputs are canonically ordered and
must compare equal byte for byte; the test suite enforces that, plus
agreement with an independent powerset enumeration of the concepts.

Node extents are exactly the closure of the edge columns under pairwise
intersection, together with the full vertex set as top. Ordered by extent
containment this family is a lattice: meets exist because the extent family
is intersection closed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .core import (
    BitVec,
    EdgeSet,
    Hypergraph,
    SizeLimitError,
    VertexSet,
    dedup_edges,
    extent_prime,
    intent_prime,
    iter_bits,
)

ORACLE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class Concept:
    """A closed (extent, intent) pair: each prime-maps to the other."""

    extent: VertexSet
    intent: EdgeSet


@dataclass(frozen=True)
class GaloisLabel:
    """Name-level annotation of one lattice node."""

    node: int
    extent_names: tuple[str, ...]
    intent_names: tuple[str, ...]
    introduced_edges: tuple[str, ...]


class ConceptLattice:
    """Canonically ordered concept lattice of a deduplicated hypergraph.

    Nodes are sorted by (extent cardinality, extent index tuple), which is
    a topological order of the cover DAG from bottom to top. ``up_masks``
    and ``cover_masks`` hold, per node, the strict-superset and upper-cover
    node sets as bitmasks over node indices. ``edge_anchors[j]`` is the
    node whose extent equals column j; ``introduced[n]`` the edges whose
    anchor is n. Instances are immutable after construction.
    """

    def __init__(
        self,
        hypergraph: Hypergraph,
        nodes: tuple[Concept, ...],
        up_masks: tuple[int, ...],
        cover_masks: tuple[int, ...],
        top_index: int,
        bottom_index: int,
        edge_anchors: tuple[int, ...],
        introduced: tuple[EdgeSet, ...],
        source: Hypergraph | None = None,
        edge_map: dict[int, int] | None = None,
        edge_aliases: dict[str, int] | None = None,
    ):
        self.hypergraph = hypergraph
        self.nodes = nodes
        self.up_masks = up_masks
        self.cover_masks = cover_masks
        self.top_index = top_index
        self.bottom_index = bottom_index
        self.edge_anchors = edge_anchors
        self.introduced = introduced
        self.source = hypergraph if source is None else source
        if edge_map is None:
            edge_map = {j: j for j in range(hypergraph.n_edges)}
        self.edge_map = edge_map
        if edge_aliases is None:
            edge_aliases = {
                name: edge_map[j] for j, name in enumerate(self.source.edge_names)
            }
        self.edge_aliases = edge_aliases

    def __len__(self) -> int:
        return len(self.nodes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConceptLattice):
            return NotImplemented
        return (
            self.hypergraph == other.hypergraph
            and self.nodes == other.nodes
            and self.up_masks == other.up_masks
            and self.cover_masks == other.cover_masks
            and self.top_index == other.top_index
            and self.bottom_index == other.bottom_index
            and self.edge_anchors == other.edge_anchors
            and self.introduced == other.introduced
            and self.edge_aliases == other.edge_aliases
        )

    __hash__ = None

    @cached_property
    def order(self) -> frozenset[tuple[int, int]]:
        """Full containment order as (lower, upper) pairs, reflexive pairs
        included: (i, j) is present exactly when extent_i is a subset of
        extent_j."""
        pairs = {(i, i) for i in range(len(self.nodes))}
        for i, mask in enumerate(self.up_masks):
            pairs.update((i, j) for j in iter_bits(mask))
        return frozenset(pairs)

    @cached_property
    def covers(self) -> frozenset[tuple[int, int]]:
        """Transitive reduction of the strict order: (lower, upper) pairs."""
        pairs = set()
        for i, mask in enumerate(self.cover_masks):
            pairs.update((i, j) for j in iter_bits(mask))
        return frozenset(pairs)

    @cached_property
    def lower_cover_masks(self) -> tuple[int, ...]:
        down = [0] * len(self.nodes)
        for i, mask in enumerate(self.cover_masks):
            for j in iter_bits(mask):
                down[j] |= 1 << i
        return tuple(down)

    @cached_property
    def _extent_to_node(self) -> dict[int, int]:
        return {c.extent.bits: i for i, c in enumerate(self.nodes)}

    def node_of_extent(self, extent: VertexSet) -> int | None:
        return self._extent_to_node.get(extent.bits)

    def anchored_edges(self, node: int) -> EdgeSet:
        """Edges introduced at ``node`` (empty for pure intersections)."""
        return self.introduced[node]

    def is_anchor(self, node: int) -> bool:
        return self.introduced[node].bits != 0

    def node_label(self, node: int) -> str:
        """Galois label ``{extent names} : {intent names}``."""
        c = self.nodes[node]
        ext = ",".join(self.hypergraph.vertex_names_of(c.extent))
        intn = ",".join(self.hypergraph.edge_names_of(c.intent))
        return "{%s} : {%s}" % (ext, intn)

    def resolve_edge(self, name: str) -> int:
        """Deduplicated edge index for an edge name, duplicates included."""
        try:
            return self.edge_aliases[name]
        except KeyError:
            raise KeyError(f"unknown edge name {name!r}") from None


def edge_anchor(lat: ConceptLattice, edge: int) -> int:
    """Node whose extent equals the given source edge's column.

    ``edge`` indexes the source hypergraph handed to the builder; it is
    routed through the dedup map before the anchor lookup.
    """
    if not 0 <= edge < lat.source.n_edges:
        raise IndexError(f"edge index {edge} out of range")
    return lat.edge_anchors[lat.edge_map[edge]]


def _prepare(h: Hypergraph) -> tuple[Hypergraph, dict[int, int], Hypergraph]:
    reduced, mapping = dedup_edges(h)
    if reduced is not h:
        warnings.warn(
            "hypergraph has duplicate edge columns; deduplicating before "
            "lattice construction",
            stacklevel=3,
        )
    return reduced, mapping, h


def _canonical_order(extents: set[int]) -> list[int]:
    return sorted(extents, key=lambda e: (e.bit_count(), tuple(iter_bits(e))))


def _finalize(
    reduced: Hypergraph,
    source: Hypergraph,
    edge_map: dict[int, int],
    extents: list[int],
    up_masks: list[int],
    intents: list[int] | None = None,
) -> ConceptLattice:
    """Assemble the lattice object from canonically sorted extents and the
    strict-superset masks; everything else is derived here."""
    n_nodes = len(extents)
    nv, ne = reduced.n_vertices, reduced.n_edges

    if intents is None:
        intents = [
            intent_prime(reduced, BitVec(nv, e)).bits for e in extents
        ]

    nodes = tuple(
        Concept(BitVec(nv, e), BitVec(ne, b)) for e, b in zip(extents, intents)
    )

    # Upper covers: strict supersets not reachable through another one.
    cover_masks = []
    for i in range(n_nodes):
        reachable = 0
        for k in iter_bits(up_masks[i]):
            reachable |= up_masks[k]
        cover_masks.append(up_masks[i] & ~reachable)

    full = (1 << nv) - 1
    top_index = extents.index(full)
    # The extent family is intersection closed, so it has a unique minimum:
    # the node below every other one.
    all_others = (1 << n_nodes) - 1
    bottom_index = next(
        i for i in range(n_nodes) if up_masks[i] | (1 << i) == all_others
    )

    node_by_extent = {e: i for i, e in enumerate(extents)}
    edge_anchors = tuple(node_by_extent[col] for col in reduced.chi.columns)

    introduced_bits = []
    for i in range(n_nodes):
        upper_union = 0
        for k in iter_bits(cover_masks[i]):
            upper_union |= intents[k]
        introduced_bits.append(intents[i] & ~upper_union)
    introduced = tuple(BitVec(ne, b) for b in introduced_bits)

    return ConceptLattice(
        hypergraph=reduced,
        nodes=nodes,
        up_masks=tuple(up_masks),
        cover_masks=tuple(cover_masks),
        top_index=top_index,
        bottom_index=bottom_index,
        edge_anchors=edge_anchors,
        introduced=introduced,
        source=source,
        edge_map=edge_map,
    )


def build_lattice_naive(h: Hypergraph) -> ConceptLattice:
    """Pairwise-intersection fixpoint builder.

    Seeds the extent family with the edge columns, repeatedly intersects
    new extents against all known ones until a pass adds nothing, then adds
    the full vertex set as top. Containment is decided by per-pair subset
    tests on the backing ints.
    """
    reduced, mapping, source = _prepare(h)

    extents: set[int] = set(reduced.chi.columns)
    frontier = list(extents)
    while frontier:
        known = list(extents)
        fresh = []
        for a in frontier:
            for b in known:
                x = a & b
                if x not in extents:
                    extents.add(x)
                    fresh.append(x)
        frontier = fresh
    extents.add((1 << reduced.n_vertices) - 1)

    ordered = _canonical_order(extents)
    n_nodes = len(ordered)
    up_masks = [0] * n_nodes
    for i in range(n_nodes):
        ei = ordered[i]
        acc = 0
        for j in range(n_nodes):
            ej = ordered[j]
            if i != j and ei & ej == ei:
                acc |= 1 << j
        up_masks[i] = acc
    return _finalize(reduced, source, mapping, ordered, up_masks)


def _pack_words(values: list[int], n_bits: int) -> np.ndarray:
    """Rows of 64-bit words, little-endian, one row per value."""
    n_words = (n_bits + 63) // 64
    out = np.empty((len(values), n_words), dtype=np.uint64)
    nbytes = n_words * 8
    for i, v in enumerate(values):
        out[i] = np.frombuffer(v.to_bytes(nbytes, "little"), dtype=np.uint64)
    return out


def _unpack_words(row: np.ndarray) -> int:
    return int.from_bytes(row.tobytes(), "little")


def _subset_matrix(rows: np.ndarray, cols: np.ndarray, block: int = 128) -> np.ndarray:
    """Boolean matrix S with S[i, j] = rows[i] is a subset of cols[j]."""
    n, m = rows.shape[0], cols.shape[0]
    out = np.empty((n, m), dtype=bool)
    if rows.shape[1] == 0:
        out[:] = True
        return out
    for start in range(0, m, block):
        chunk = cols[start : start + block]
        # rows[i] & ~cols[j] must be all-zero words for containment
        diff = rows[:, None, :] & ~chunk[None, :, :]
        out[:, start : start + chunk.shape[0]] = ~diff.any(axis=2)
    return out


def build_lattice_vectorized(h: Hypergraph) -> ConceptLattice:
    """Batched matrix builder; output is identical to the naive builder.

    Each round conjoins the whole (packed) incidence matrix against the
    block of extents discovered in the previous round, keeps only columns
    not seen before, and stops when a round adds none. The containment
    relation is then computed by blocked whole-matrix word comparisons
    instead of per-pair loops.
    """
    reduced, mapping, source = _prepare(h)
    nv, ne = reduced.n_vertices, reduced.n_edges
    full = (1 << nv) - 1

    if ne == 0 or nv == 0:
        # Degenerate shapes skip the matrix machinery: the extent family
        # collapses to {V} (plus nothing else when every column is empty).
        extents = set(reduced.chi.columns)
        extents.add(full)
        ordered = _canonical_order(extents)
        up_masks = [0] * len(ordered)
        for i, ei in enumerate(ordered):
            up_masks[i] = sum(
                1 << j
                for j, ej in enumerate(ordered)
                if i != j and ei & ej == ei
            )
        return _finalize(reduced, source, mapping, ordered, up_masks)

    matrix = _pack_words(list(reduced.chi.columns), nv)  # (|E|, words)
    known: dict[bytes, int] = {}
    extent_ints: list[int] = []
    for row in matrix:
        key = row.tobytes()
        if key not in known:
            known[key] = len(extent_ints)
            extent_ints.append(_unpack_words(row))

    new_rows = np.unique(matrix, axis=0)
    while new_rows.shape[0]:
        added = []
        for start in range(0, new_rows.shape[0], 512):
            chunk = new_rows[start : start + 512]
            cand = (matrix[:, None, :] & chunk[None, :, :]).reshape(
                -1, matrix.shape[1]
            )
            for row in np.unique(cand, axis=0):
                key = row.tobytes()
                if key not in known:
                    known[key] = len(extent_ints)
                    extent_ints.append(_unpack_words(row))
                    added.append(row)
        new_rows = np.array(added, dtype=np.uint64) if added else np.empty(
            (0, matrix.shape[1]), dtype=np.uint64
        )

    extents = set(extent_ints)
    extents.add(full)
    ordered = _canonical_order(extents)

    words = _pack_words(ordered, nv)
    sub = _subset_matrix(words, words)  # sub[i, j] = extent_i <= extent_j
    np.fill_diagonal(sub, False)
    up_masks = [
        int.from_bytes(np.packbits(sub[i], bitorder="little").tobytes(), "little")
        for i in range(len(ordered))
    ]

    # Intents the same way: containment of each extent in each edge column.
    in_cols = _subset_matrix(words, matrix)
    intents = [
        int.from_bytes(np.packbits(in_cols[i], bitorder="little").tobytes(), "little")
        for i in range(len(ordered))
    ]
    return _finalize(reduced, source, mapping, ordered, up_masks, intents)


def enumerate_concepts_oracle(h: Hypergraph) -> frozenset[Concept]:
    """All concepts by brute force: close every subset of the edge set.

    Enumerates the full powerset of edges, so it refuses inputs with more
    than ORACLE_EDGE_LIMIT edges. Deliberately independent of the builders;
    only the prime operators are shared.
    """
    ne = h.n_edges
    if ne > ORACLE_EDGE_LIMIT:
        raise SizeLimitError(
            f"concept enumeration is limited to {ORACLE_EDGE_LIMIT} edges; "
            f"got {ne}"
        )
    found = set()
    for bits in range(1 << ne):
        extent = extent_prime(h, BitVec(ne, bits))
        intent = intent_prime(h, extent)
        found.add(Concept(extent, intent))
    return frozenset(found)


class IsomorphismResult:
    """Truthy on success; carries a diagnostic for the first mismatch."""

    def __init__(self, ok: bool, detail: str = ""):
        self.ok = ok
        self.detail = detail

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"IsomorphismResult(ok={self.ok}, detail={self.detail!r})"


def verify_isomorphism(lat: ConceptLattice, concepts) -> IsomorphismResult:
    """Check that a lattice realizes a concept set, extent for extent.

    The lattice's extents must coincide with the concepts' extents, intents
    must agree per extent, and the stored order must match recomputed
    containment of the concept extents. ``concepts`` should come from the
    same (deduplicated) hypergraph the lattice was built over.
    """
    concepts = list(concepts)
    by_extent = {}
    for c in concepts:
        by_extent[c.extent.bits] = c

    lattice_extents = {c.extent.bits for c in lat.nodes}
    oracle_extents = set(by_extent)
    missing = oracle_extents - lattice_extents
    if missing:
        bits = next(iter(missing))
        return IsomorphismResult(
            False, f"extent {sorted(iter_bits(bits))} missing from lattice"
        )
    extra = lattice_extents - oracle_extents
    if extra:
        bits = next(iter(extra))
        return IsomorphismResult(
            False, f"lattice extent {sorted(iter_bits(bits))} is not a concept"
        )

    for i, node in enumerate(lat.nodes):
        expected = by_extent[node.extent.bits].intent
        if node.intent != expected:
            return IsomorphismResult(
                False,
                f"node {i}: intent {node.intent.indices()} != "
                f"concept intent {expected.indices()}",
            )

    order = lat.order
    index = {c.extent.bits: i for i, c in enumerate(lat.nodes)}
    for c, d in combinations(concepts, 2):
        for lo, hi in ((c, d), (d, c)):
            should = lo.extent.issubset(hi.extent)
            stored = (index[lo.extent.bits], index[hi.extent.bits]) in order
            if should != stored:
                return IsomorphismResult(
                    False,
                    f"order disagrees on extents {lo.extent.indices()} vs "
                    f"{hi.extent.indices()}",
                )
    return IsomorphismResult(True)


def galois_labels(lat: ConceptLattice) -> list[GaloisLabel]:
    """Per-node name-level labels, including the edges each node introduces."""
    h = lat.hypergraph
    out = []
    for i, c in enumerate(lat.nodes):
        out.append(
            GaloisLabel(
                node=i,
                extent_names=h.vertex_names_of(c.extent),
                intent_names=h.edge_names_of(c.intent),
                introduced_edges=h.edge_names_of(lat.introduced[i]),
            )
        )
    return out
