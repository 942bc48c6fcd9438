"""Membership predicates for the equivalence-preserving map families.

For a partitioned set (X, E) with blocks A_1..A_k these decide, for a total
map a on X:

* ``in_TE``      membership in T_E(X): related points have related images,
* ``in_TEstar``  membership in T_{E*}(X): related points if and only if
                 related images,
* ``in_Q``       membership in Q_{E*}(X): every block collapses to a single
                 point and the image meets every block.
"""

from __future__ import annotations

from .errors import ContractError, InternalConsistencyError, ValidationError
from .partition import PartitionedSet, is_cross_section
from .transformation import Transformation, compose


def _check_degree(P: PartitionedSet, a: Transformation) -> None:
    if a.n != P.n:
        raise ValidationError(f"degree mismatch: map on {a.n} points, partition of {P.n}")


def in_TE(P: PartitionedSet, a: Transformation) -> bool:
    """True when each block of P maps into a single block."""
    _check_degree(P, a)
    block_of = P.block_of
    imgs = a.images
    for block in P.blocks:
        first = block_of[imgs[block[0]]]
        if any(block_of[imgs[x]] != first for x in block):
            return False
    return True


def in_TEstar(P: PartitionedSet, a: Transformation) -> bool:
    """True when a preserves E in both directions.

    Fast form: each block maps into a single block, and distinct blocks map
    into distinct blocks.  Equivalence with the quantified definition is
    covered by :func:`in_TEstar_pairwise`.
    """
    if not in_TE(P, a):
        return False
    targets = {P.block_of[a.images[block[0]]] for block in P.blocks}
    return len(targets) == P.k


def in_TEstar_pairwise(P: PartitionedSet, a: Transformation) -> bool:
    """Quantified O(n^2) oracle: for all x, y, (x,y) in E iff (xa, ya) in E."""
    _check_degree(P, a)
    block_of = P.block_of
    imgs = a.images
    for x in range(P.n):
        for y in range(x + 1, P.n):
            if (block_of[x] == block_of[y]) != (block_of[imgs[x]] == block_of[imgs[y]]):
                return False
    return True


def in_Q(P: PartitionedSet, a: Transformation) -> bool:
    """True when every block collapses to one point and the image meets every block.

    These two conditions force the induced block map to be a bijection, so
    members automatically lie in T_{E*}(X); the cross-section postcondition
    is re-checked defensively.
    """
    _check_degree(P, a)
    imgs = a.images
    points = []
    for block in P.blocks:
        first = imgs[block[0]]
        if any(imgs[x] != first for x in block):
            return False
        points.append(first)
    covered = {P.block_of[v] for v in points}
    if len(covered) != P.k:
        return False
    if not is_cross_section(P, points):
        raise InternalConsistencyError("accepted map whose image is not a cross-section")
    return True


def is_idempotent_Q(P: PartitionedSet, a: Transformation) -> bool:
    """For a member of Q: true iff each block maps into itself.

    Cross-checked against the definitional test a*a == a; a disagreement is
    an internal error.  Raises :class:`ContractError` when a is not in Q.
    """
    if not in_Q(P, a):
        raise ContractError("is_idempotent_Q needs a member of Q")
    blockwise = all(P.block_of[a.images[block[0]]] == bi for bi, block in enumerate(P.blocks))
    definitional = compose(a, a) == a
    if blockwise != definitional:
        raise InternalConsistencyError("blockwise idempotence test disagrees with a*a == a")
    return definitional


def is_regular_element(a: Transformation, S) -> bool:
    """True when some b in S satisfies a*b*a == a.  Requires a in S."""
    if a not in S:
        raise ContractError("is_regular_element needs a to be a member of S")
    return any(compose(compose(a, b), a) == a for b in S)
