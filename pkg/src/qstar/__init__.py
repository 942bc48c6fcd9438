"""Structure of the semigroup of double-class-preserving transformations.

Given a finite set carrying an equivalence relation, the package studies
the transformations that preserve the relation in both directions, send
every class into a single point, and reach every class.  Those maps form
a right group: this package enumerates them, decomposes them, computes
rank, minimal generating sets, maximal subsemigroups, and classifies the
resulting semigroups up to isomorphism, with each structural claim
re-checked against definitional brute force.
"""

from .errors import (
    ContractError,
    InternalConsistencyError,
    QstarError,
    ResourceLimitError,
    UnsupportedCaseError,
    ValidationError,
)
from .partition import (
    PartitionedSet,
    identity_partition,
    is_cross_section,
    make_partitioned_set,
    partition_from_json,
    partition_from_sizes,
    partition_from_spec,
    universal_partition,
)
from .transformation import (
    KernelPartition,
    Transformation,
    compose,
    constant_map,
    from_q_shorthand,
    identity_map,
    image,
    kernel_partition,
    q_shorthand,
    transformation_from_json,
    transformation_to_json,
)
from .membership import (
    in_Q,
    in_TE,
    in_TEstar,
    in_TEstar_pairwise,
    is_idempotent_Q,
    is_regular_element,
)
from .engine import (
    GroupTable,
    SemigroupSet,
    all_closed_subsets,
    closure,
    green_R_definitional,
    green_R_related,
    groups_isomorphic,
    is_left_cancellative,
    is_maximal_subsemigroup,
    is_regular_semigroup,
    is_right_group,
    maximal_subgroups,
    subgroup_lattice,
    symmetric_group_table,
)
from .qsemigroup import (
    RightGroupDecomposition,
    block_permutation,
    cardinality_Q,
    decompose,
    enumerate_Q,
    enumerate_Q_bruteforce,
    h_class,
    idempotents_Q,
    is_group_Q,
)
from .rank import (
    GeneratingSetReport,
    brute_force_no_generating_set_of_size,
    generating_set_hits_every_hclass,
    minimal_generating_set,
    minimality_certificate,
    rank_Q,
    symmetric_part_generators,
    verify_image_right_invariance,
)
from .maximal import (
    MaximalSubsemigroupReport,
    count_maximal,
    exhaustive_maximal_oracle,
    maximal_subsemigroups_Q,
)
from .iso import (
    IsoClassKey,
    build_isomorphism,
    classify_partitions,
    integer_partitions,
    iso_key,
    q_isomorphic,
)
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "GeneratingSetReport",
    "GroupTable",
    "InternalConsistencyError",
    "IsoClassKey",
    "KernelPartition",
    "MaximalSubsemigroupReport",
    "PartitionedSet",
    "QstarError",
    "ResourceLimitError",
    "RightGroupDecomposition",
    "SemigroupSet",
    "Transformation",
    "UnsupportedCaseError",
    "ValidationError",
    "VerificationReport",
    "all_closed_subsets",
    "block_permutation",
    "brute_force_no_generating_set_of_size",
    "build_isomorphism",
    "cardinality_Q",
    "classify_partitions",
    "closure",
    "compose",
    "constant_map",
    "count_maximal",
    "decompose",
    "enumerate_Q",
    "enumerate_Q_bruteforce",
    "exhaustive_maximal_oracle",
    "from_q_shorthand",
    "generating_set_hits_every_hclass",
    "green_R_definitional",
    "green_R_related",
    "groups_isomorphic",
    "h_class",
    "identity_map",
    "identity_partition",
    "idempotents_Q",
    "image",
    "in_Q",
    "in_TE",
    "in_TEstar",
    "in_TEstar_pairwise",
    "integer_partitions",
    "is_cross_section",
    "is_group_Q",
    "is_idempotent_Q",
    "is_left_cancellative",
    "is_maximal_subsemigroup",
    "is_regular_element",
    "is_regular_semigroup",
    "is_right_group",
    "iso_key",
    "kernel_partition",
    "make_partitioned_set",
    "maximal_subgroups",
    "maximal_subsemigroups_Q",
    "minimal_generating_set",
    "minimality_certificate",
    "partition_from_json",
    "partition_from_sizes",
    "partition_from_spec",
    "q_isomorphic",
    "q_shorthand",
    "rank_Q",
    "run_verification",
    "subgroup_lattice",
    "symmetric_group_table",
    "symmetric_part_generators",
    "transformation_from_json",
    "transformation_to_json",
    "universal_partition",
    "verify_image_right_invariance",
]
