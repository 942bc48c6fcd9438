"""Which maps preserve the relation, and in which directions.

Three nested conditions on a map a over a partitioned set:

* forward preserving:  equivalent points stay equivalent (each block
  lands inside one block);
* preserving in both directions: additionally, points from different
  blocks stay inequivalent (blocks go to pairwise distinct blocks);
* the full condition: on top of that, every block is collapsed to a
  single point and the image meets every block.

The maps satisfying the full condition are the object of study; we call
that set Q below.
"""

from qstar import Transformation, in_Q, in_TE, in_TEstar, partition_from_spec

P = partition_from_spec("1,2,3|4,5|6")

CASES = [
    ("member of Q", (4, 4, 4, 1, 1, 6)),
    ("constant map (forward only)", (1, 1, 1, 1, 1, 1)),
    ("two blocks share a target", (1, 1, 1, 4, 4, 4)),
    ("splits a block (not even forward)", (1, 4, 1, 4, 4, 6)),
    ("injective but does not collapse", (1, 2, 3, 4, 4, 6)),
]

print(f"{'map':28}  {'forward':>8}  {'both-dir':>8}  {'in Q':>5}")
for label, images in CASES:
    a = Transformation(tuple(v - 1 for v in images))
    print(
        f"{label:28}  {str(in_TE(P, a)):>8}  {str(in_TEstar(P, a)):>8}  {str(in_Q(P, a)):>5}"
    )

print()
print("Over all 6^6 =", 6**6, "self-maps of the 6-point set:")
import itertools

counts = {"forward": 0, "both": 0, "q": 0}
for imgs in itertools.product(range(6), repeat=6):
    a = Transformation(imgs)
    if in_TE(P, a):
        counts["forward"] += 1
    if in_TEstar(P, a):
        counts["both"] += 1
    if in_Q(P, a):
        counts["q"] += 1
print("forward preserving:", counts["forward"])
print("preserving both directions:", counts["both"])
print("members of Q:", counts["q"], "(= 3! * 6 as the formula says)")
