"""Oriented knot diagrams as signed PD codes.

A diagram is a whitespace-separated list of tokens ``X[a,b,c,d]``; the
reserved token ``U`` denotes the crossingless unknot.  Each 4-tuple lists
the edge labels around a crossing counterclockwise, starting from the
incoming under-strand.  Edges are labelled 1..2c consecutively along the
orientation of the knot, so edge e is followed by edge (e mod 2c) + 1.

Validation enforces: every label in 1..2c appears exactly twice, strand
in/out assignments are globally consistent with the labelling, and the
diagram is a single knot component.  Planarity of the code is trusted, not
verified.  KnotDiagram values are immutable and safe to share.
"""

from __future__ import annotations

import csv
import hashlib
import io
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import PDSyntaxError, PDValidationError

_TOKEN_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


@dataclass(frozen=True)
class Crossing:
    """One crossing: edge labels counterclockwise from the incoming under-strand."""

    edges: tuple[int, int, int, int]
    sign: int = 0  # +1 or -1 once the diagram is validated

    def __iter__(self):
        return iter(self.edges)


class KnotDiagram:
    """A validated oriented knot diagram.  Immutable."""

    __slots__ = ("crossings", "edge_count", "name", "_edge_slots")

    def __init__(self, crossings: Sequence[tuple[int, int, int, int]], name: str | None = None):
        tuples = [tuple(int(e) for e in c) for c in crossings]
        edge_slots = _validate(tuples)
        signs = _crossing_sign_list(tuples, edge_slots)
        object.__setattr__(
            self, "crossings", tuple(Crossing(t, s) for t, s in zip(tuples, signs))
        )
        object.__setattr__(self, "edge_count", 2 * len(tuples))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_edge_slots", edge_slots)

    def __setattr__(self, name, value):
        raise AttributeError("KnotDiagram is immutable")

    # -- structure ----------------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_unknot_diagram(self) -> bool:
        return not self.crossings

    def edge_slots(self, edge: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two (crossing index, slot) positions where an edge label occurs."""
        return self._edge_slots[edge]

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def __eq__(self, other):
        if not isinstance(other, KnotDiagram):
            return NotImplemented
        return [c.edges for c in self.crossings] == [c.edges for c in other.crossings]

    def __hash__(self):
        return hash(tuple(c.edges for c in self.crossings))

    def __repr__(self):
        label = self.name or f"{self.crossing_count} crossings"
        return f"KnotDiagram({label}: {serialize(self)})"

    def digest(self) -> str:
        """Stable content hash of the diagram (used as cache key)."""
        return hashlib.sha256(serialize(self).encode()).hexdigest()[:16]


def parse_pd(text: str, name: str | None = None) -> KnotDiagram:
    """Parse a PD-code string into a validated KnotDiagram."""
    stripped = text.strip()
    if not stripped:
        raise PDSyntaxError("empty diagram; the unknot is written as the token 'U'")
    if stripped == "U":
        return KnotDiagram((), name=name)
    tuples = []
    pos = 0
    for tok in stripped.split():
        m = _TOKEN_RE.fullmatch(tok)
        if not m:
            raise PDSyntaxError(f"malformed token {tok!r} at position {pos}")
        tuples.append(tuple(int(g) for g in m.groups()))
        pos += 1
    return KnotDiagram(tuples, name=name)


def serialize(diagram: KnotDiagram) -> str:
    """Canonical PD string; parse_pd(serialize(D)) == D."""
    if diagram.is_unknot_diagram:
        return "U"
    return " ".join("X[{},{},{},{}]".format(*c.edges) for c in diagram.crossings)


def crossing_signs(diagram: KnotDiagram) -> tuple[int, int, int]:
    """(c_plus, c_minus, writhe) of the diagram."""
    c_plus = sum(1 for c in diagram.crossings if c.sign > 0)
    c_minus = diagram.crossing_count - c_plus
    return c_plus, c_minus, c_plus - c_minus


def mirror(diagram: KnotDiagram) -> KnotDiagram:
    """Switch every crossing (over <-> under).  An involution."""
    if diagram.is_unknot_diagram:
        return diagram
    new_tuples = []
    for idx, crossing in enumerate(diagram.crossings):
        a, b, c, d = crossing.edges
        # The old over-strand becomes the incoming under-strand; rotate the
        # cyclic (counterclockwise) tuple to start at the over-strand's
        # incoming end, which is d for a positive crossing and b for a
        # negative one under this sign convention.
        if crossing.sign > 0:
            new_tuples.append((d, a, b, c))
        else:
            new_tuples.append((b, c, d, a))
    return KnotDiagram(new_tuples, name=diagram.name)


def parse_csv(text: str) -> list[tuple[str, KnotDiagram]]:
    """Parse CSV with header ``name,pd`` into named diagrams."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["name", "pd"]:
        raise PDSyntaxError("CSV must have header 'name,pd'")
    out = []
    for row in reader:
        out.append((row["name"], parse_pd(row["pd"], name=row["name"])))
    return out


# -- validation internals ----------------------------------------------------


def _successor(edge: int, edge_count: int) -> int:
    return edge % edge_count + 1


def _validate(tuples: list[tuple[int, ...]]) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
    """Check label counts, orientation consistency and connectedness.

    Returns the edge -> ((crossing, slot), (crossing, slot)) occurrence map.
    """
    n = len(tuples)
    edge_count = 2 * n
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(tuples):
        if len(t) != 4:
            raise PDSyntaxError(f"crossing {ci} is not a 4-tuple")
        for slot, e in enumerate(t):
            if not 1 <= e <= edge_count:
                raise PDValidationError(
                    f"edge label {e} out of range 1..{edge_count} at crossing {ci}"
                )
            occurrences.setdefault(e, []).append((ci, slot))
    for e in range(1, edge_count + 1):
        occ = occurrences.get(e, [])
        if len(occ) != 2:
            raise PDValidationError(f"edge label {e} appears {len(occ)} times, expected 2")

    # Strand in/out assignment: the under-strand enters at slot 0 and leaves
    # at slot 2; its outgoing label must be the successor of the incoming one.
    # Over slots (1, 3) are then forced edge by edge.
    direction: dict[tuple[int, int], str] = {}
    for ci, t in enumerate(tuples):
        if t[2] != _successor(t[0], edge_count):
            raise PDValidationError(
                f"crossing {ci}: under-strand {t[0]}->{t[2]} breaks the sequential labelling"
            )
        direction[(ci, 0)] = "in"
        direction[(ci, 2)] = "out"
    for e in range(1, edge_count + 1):
        slots = occurrences[e]
        known = [direction.get(s) for s in slots]
        if known.count(None) == 0:
            if set(known) != {"in", "out"}:
                raise PDValidationError(f"edge {e} has inconsistent orientation")
        elif known.count(None) == 1:
            free = slots[known.index(None)]
            direction[free] = "out" if "in" in known else "in"
    # Edges met only at over slots: fix by the successor rule.
    for ci, t in enumerate(tuples):
        s1, s3 = (ci, 1), (ci, 3)
        if s1 in direction and s3 in direction:
            continue
        if s1 not in direction and s3 not in direction:
            if t[1] == _successor(t[3], edge_count):
                direction[s3], direction[s1] = "in", "out"
            elif t[3] == _successor(t[1], edge_count):
                direction[s1], direction[s3] = "in", "out"
            else:
                raise PDValidationError(
                    f"crossing {ci}: over-strand {t[1]}/{t[3]} breaks the sequential labelling"
                )
        else:
            fixed, free = (s1, s3) if s1 in direction else (s3, s1)
            direction[free] = "out" if direction[fixed] == "in" else "in"

    # Per-crossing consistency of the over passage with the labelling.
    for ci, t in enumerate(tuples):
        over_in = t[3] if direction[(ci, 3)] == "in" else t[1]
        over_out = t[1] if direction[(ci, 3)] == "in" else t[3]
        if over_out != _successor(over_in, edge_count):
            raise PDValidationError(
                f"crossing {ci}: over-strand {over_in}->{over_out} breaks the sequential labelling"
            )
    for e in range(1, edge_count + 1):
        kinds = sorted(direction[s] for s in occurrences[e])
        if kinds != ["in", "out"]:
            raise PDValidationError(f"edge {e} has inconsistent orientation")

    # Single component: walk the knot through opposite slots.
    if n:
        visited_edges = set()
        ci, slot = occurrences[1][0] if direction[occurrences[1][0]] == "in" else occurrences[1][1]
        edge = 1
        for _ in range(edge_count):
            visited_edges.add(edge)
            out_slot = (slot + 2) % 4
            edge = tuples[ci][out_slot]
            other = [s for s in occurrences[edge] if s != (ci, out_slot)]
            if not other:
                # edge occurs twice at the same crossing slot pair (kink): pick the in-slot
                other = [s for s in occurrences[edge] if direction[s] == "in"]
            ci, slot = other[0]
        if len(visited_edges) != edge_count:
            raise PDValidationError(
                f"diagram has more than one component (traversal met {len(visited_edges)}"
                f" of {edge_count} edges)"
            )

    # Stash the over-in slot per crossing for sign computation.
    occ_pairs = {e: (occurrences[e][0], occurrences[e][1]) for e in occurrences}
    occ_pairs[0] = tuple((ci, 3 if direction[(ci, 3)] == "in" else 1) for ci in range(n))  # type: ignore
    return occ_pairs  # type: ignore


def _crossing_sign_list(tuples, edge_slots) -> list[int]:
    """Signs from the over-strand direction: over entering at slot 3 is +1."""
    if not tuples:
        return []
    over_in_slots = edge_slots[0]
    return [1 if slot == 3 else -1 for (_, slot) in over_in_slots]
