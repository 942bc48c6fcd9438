"""Maximal subsemigroups of Q, constructed and then re-derived blind.

When m >= 2 there are exactly s_k + m of them, where s_k counts the
maximal subgroups of the symmetric group on k letters:

* group type: shrink the pattern group to a maximal subgroup, keep all
  idempotents;
* right-zero type: keep all patterns, drop one idempotent's whole
  H-class.

The construction is cross-checked against an exhaustive enumeration of
every composition-closed subset, which knows nothing about the theory.
"""

from qstar import (
    enumerate_Q,
    exhaustive_maximal_oracle,
    maximal_subsemigroups_Q,
    partition_from_spec,
    q_shorthand,
)

P = partition_from_spec("1,2,3|4,5|6")
report = maximal_subsemigroups_Q(P)
print("s_k =", report.s_k, " m =", report.m, " total =", report.total)
print()

print("group type (all idempotents kept):")
for T in report.group_type:
    print("  size", len(T))
print("right-zero type (one idempotent column dropped):")
for T, f in zip(report.right_zero_type, report.omitted_idempotents):
    print("  size", len(T), " omits the H-class of", q_shorthand(P, f))
print()

oracle = exhaustive_maximal_oracle(enumerate_Q(P))
constructed = {T.elements for T in report.all_subsemigroups()}
print("exhaustive oracle found", len(oracle), "maximal subsemigroups")
print("set-equal to the construction:", constructed == {T.elements for T in oracle})
