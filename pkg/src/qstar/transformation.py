"""Total self-maps of {0..n-1} under apply-left-first composition.

``compose(a, b)`` applies ``a`` first, then ``b``, matching the right-action
convention x(ab) = (xa)b used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError, ValidationError
from .partition import PartitionedSet


@dataclass(frozen=True, order=True)
class Transformation:
    """A total map x -> images[x] on {0..n-1}.

    The generated ordering (lexicographic on the image sequence) is the
    canonical total order used everywhere for deduplication and for
    deterministic output.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValidationError("a transformation needs degree at least 1")
        for x, v in enumerate(images):
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValidationError(f"image of {x} is {v!r}, outside 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)


def identity_map(n: int) -> Transformation:
    return Transformation(tuple(range(n)))


def constant_map(n: int, value: int) -> Transformation:
    return Transformation((value,) * n)


def compose(a: Transformation, b: Transformation) -> Transformation:
    """Apply ``a`` first, then ``b``: x -> b(a(x))."""
    if a.n != b.n:
        raise ValidationError(f"degree mismatch: {a.n} vs {b.n}")
    bi = b.images
    return Transformation(tuple(bi[v] for v in a.images))


def image(a: Transformation) -> frozenset:
    """The image set Xa."""
    return frozenset(a.images)


@dataclass(frozen=True)
class KernelPartition:
    """The fibers of a map: classes ordered by least element, with their images."""

    classes: tuple[tuple[int, ...], ...]
    class_image: tuple[int, ...]

    def as_set_partition(self) -> frozenset:
        return frozenset(frozenset(c) for c in self.classes)


def kernel_partition(a: Transformation) -> KernelPartition:
    """Group the domain into fibers x a^{-1}, one class per image point."""
    fibers: dict[int, list[int]] = {}
    for x, v in enumerate(a.images):
        fibers.setdefault(v, []).append(x)
    items = sorted(fibers.items(), key=lambda kv: kv[1][0])
    classes = tuple(tuple(xs) for _, xs in items)
    class_image = tuple(v for v, _ in items)
    return KernelPartition(classes, class_image)


def q_shorthand(P: PartitionedSet, a: Transformation) -> tuple[int, ...]:
    """Compact 1-based tuple (one image per block) for a block-constant map.

    Raises :class:`ContractError` when ``a`` is not constant on some block.
    """
    if a.n != P.n:
        raise ValidationError(f"degree mismatch: map on {a.n} points, partition of {P.n}")
    out = []
    for bi, block in enumerate(P.blocks):
        vals = {a.images[x] for x in block}
        if len(vals) != 1:
            raise ContractError(f"map is not constant on block {bi + 1}")
        out.append(next(iter(vals)) + 1)
    return tuple(out)


def from_q_shorthand(P: PartitionedSet, vals: Sequence[int]) -> Transformation:
    """Build the block-constant map from a 1-based tuple, one image per block."""
    vals = tuple(vals)
    if len(vals) != P.k:
        raise ValidationError(f"expected {P.k} entries (one per block), got {len(vals)}")
    for v in vals:
        if not isinstance(v, int) or not 1 <= v <= P.n:
            raise ValidationError(f"entry {v!r} outside 1..{P.n}")
    return Transformation(tuple(vals[P.block_of[x]] - 1 for x in range(P.n)))


def transformation_to_json(a: Transformation) -> dict:
    return {"images": [v + 1 for v in a.images]}


def transformation_from_json(obj: dict, P: PartitionedSet | None = None) -> Transformation:
    """Parse ``{"images": [...]}`` or, given a partition, ``{"q": [...]}`` (1-based)."""
    if not isinstance(obj, dict):
        raise ValidationError("transformation JSON must be an object")
    if "images" in obj:
        images = obj["images"]
        for v in images:
            if not isinstance(v, int) or v < 1:
                raise ValidationError(f"image entries are 1-based integers, got {v!r}")
        return Transformation(tuple(v - 1 for v in images))
    if "q" in obj:
        if P is None:
            raise ValidationError("the 'q' shorthand form needs a partition for context")
        return from_q_shorthand(P, tuple(obj["q"]))
    raise ValidationError("transformation JSON needs an 'images' or 'q' key")
