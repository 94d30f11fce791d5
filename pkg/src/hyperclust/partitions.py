"""Partitioned sets: an underlying set plus a family of parts.

Parts may overlap, may be empty, and need not cover the underlying set;
this is deliberately looser than a partition.  Elements are either vertex
names or, for line-graph style objects, frozensets of vertex names.
"""

from __future__ import annotations

from .graphs import Validation


def _element_key(x):
    # Elements are strings or frozensets of strings; the two kinds never mix
    # inside one PartitionedSet, but a uniform key keeps sorting total.
    if isinstance(x, frozenset):
        return (1, tuple(sorted(x)))
    return (0, x)


def _as_element(x):
    if isinstance(x, str):
        return x
    if isinstance(x, (set, frozenset)):
        return frozenset(str(v) for v in x)
    return str(x)


class PartitionedSet:
    """Immutable underlying set plus a set of parts, each part a subset."""

    __slots__ = ("elements", "parts", "_hash")

    def __init__(self, elements, parts=()):
        elems = tuple(sorted({_as_element(x) for x in elements}, key=_element_key))
        universe = set(elems)
        cooked = set()
        for part in parts:
            p = frozenset(_as_element(x) for x in part)
            stray = p - universe
            if stray:
                names = ", ".join(sorted(map(str, stray)))
                raise ValueError(f"part contains elements outside the underlying set: {names}")
            cooked.add(p)
        self.elements = elems
        self.parts = frozenset(cooked)
        self._hash = hash((elems, self.parts))

    def sorted_parts(self):
        """Parts as sorted tuples, ordered lexicographically."""
        return sorted(
            (tuple(sorted(p, key=_element_key)) for p in self.parts),
        )

    def __eq__(self, other):
        if not isinstance(other, PartitionedSet):
            return NotImplemented
        return self.elements == other.elements and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PartitionedSet({len(self.elements)} elements, {len(self.parts)} parts)"


class PartitionMorphism:
    """A total map of underlying sets meant to send parts into parts."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, mapping):
        pairs = mapping.items() if hasattr(mapping, "items") else mapping
        vm = {_as_element(a): _as_element(b) for a, b in pairs}
        missing = [x for x in source.elements if x not in vm]
        if missing:
            names = ", ".join(str(x) for x in missing[:5])
            raise ValueError(f"map is not total, undefined on: {names}")
        stray = set(vm.values()) - set(target.elements)
        if stray:
            names = ", ".join(sorted(map(str, stray)))
            raise ValueError(f"map has values outside the target: {names}")
        self.source = source
        self.target = target
        self.map = vm

    def image(self, part):
        return frozenset(self.map[x] for x in part)


def validate_partition_morphism(morphism):
    """Every source part must land inside some target part."""
    bad = []
    for part in morphism.source.sorted_parts():
        image = morphism.image(part)
        if not any(image <= q for q in morphism.target.parts):
            names = ", ".join(sorted(map(str, image)))
            bad.append(f"image of a part is covered by no target part: {{{names}}}")
    return Validation(bad)


def remove_spurious(partitioned):
    """Drop every part strictly contained in another part."""
    parts = partitioned.parts
    kept = [p for p in parts if not any(p < q for q in parts)]
    return PartitionedSet(partitioned.elements, kept)


def is_refinement(finer, coarser):
    """Whether ``finer`` refines ``coarser``: every part of ``finer`` sits
    inside some part of ``coarser``, and every part of ``coarser`` literally
    appears among ``finer``'s parts.

    Returns ``(ok, offender)`` where the offender is the first failing part
    in sorted order, or None.
    """
    if finer.elements != coarser.elements:
        raise ValueError("refinement compares partitioned sets over one underlying set")
    for part in finer.sorted_parts():
        p = frozenset(part)
        if not any(p <= q for q in coarser.parts):
            return False, p
    for part in coarser.sorted_parts():
        p = frozenset(part)
        if p not in finer.parts:
            return False, p
    return True, None


def is_non_overlapping(partitioned):
    parts = sorted(partitioned.parts, key=lambda p: tuple(sorted(p, key=_element_key)))
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            if p & q:
                return False
    return True


def part_union(partitioned):
    """Collapse a partitioned set of sets: the underlying set becomes the
    union of its elements, and each part becomes the union of its members."""
    for x in partitioned.elements:
        if not isinstance(x, frozenset):
            raise ValueError("part_union needs every element to be a set of vertex names")
    universe = frozenset().union(*partitioned.elements) if partitioned.elements else frozenset()
    parts = []
    for p in partitioned.parts:
        parts.append(frozenset().union(*p) if p else frozenset())
    return PartitionedSet(universe, parts)


def clustering_to_json(partitioned):
    for x in partitioned.elements:
        if not isinstance(x, str):
            raise ValueError("only vertex-name clusterings serialize to JSON")
    return {
        "underlying": list(partitioned.elements),
        "parts": [list(p) for p in partitioned.sorted_parts()],
    }


def clustering_from_json(data):
    try:
        return PartitionedSet(data["underlying"], data.get("parts", []))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed clustering JSON: {exc}") from exc
