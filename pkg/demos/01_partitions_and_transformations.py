"""Ground objects: a partitioned finite set and the maps on it.

The running example throughout these demos is the 6-point set with
blocks {1,2,3}, {4,5}, {6}.  Everything downstream is built from two
ingredients: the partition (an equivalence relation given by its
classes) and transformations (self-maps given by their image tuples).
"""

from qstar import (
    Transformation,
    compose,
    image,
    kernel_partition,
    partition_from_spec,
    q_shorthand,
)

P = partition_from_spec("1,2,3|4,5|6")
print("partition:", P.to_spec())
print("n =", P.n, " k =", P.k, "blocks,  m =", P.m, "(product of block sizes)")
print()

# A transformation is written by its images, 0-based internally.
# This one sends 1,2,3 -> 4, 4,5 -> 1, 6 -> 6 (in 1-based display form).
a = Transformation((3, 3, 3, 0, 0, 5))
print("a images (1-based):", [v + 1 for v in a.images])
print("a collapses each block, so its block shorthand is", q_shorthand(P, a))
print("image of a:", sorted(v + 1 for v in image(a)))

ker = kernel_partition(a)
print("kernel classes of a:", [[v + 1 for v in c] for c in ker.classes])
print()

# Composition applies the LEFT factor first: x -> b(a(x)).
b = Transformation((0, 0, 0, 3, 3, 5))
ab = compose(a, b)
print("b shorthand:", q_shorthand(P, b))
print("a then b:", q_shorthand(P, ab))
print("squaring a gives the idempotent:", q_shorthand(P, compose(a, a)))
