from yokonuma.combi.partition import (
    Composition,
    Partition,
    RDNode,
    RDPartition,
    SetPartition,
    addable_removable,
    dominates,
    enumerate_rd_partitions,
    generalized_hook,
    hook_length,
    integer_partitions,
    set_partition_of,
)
from yokonuma.combi.permutation import Permutation, symmetric_group, young_subgroup
from yokonuma.combi.tableau import (
    RDTableau,
    content_and_position,
    coset_rep,
    dominates_tableau,
    initial_tableau,
    row_standard_tableaux,
    standard_tableaux,
)
