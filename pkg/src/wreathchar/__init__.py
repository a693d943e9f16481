"""Exact character values of wreath products G wr S_N, mod-p canonical class
forms, and divisibility censuses (exact, sampled, certificate-only)."""

__version__ = "0.1.0"

from .base_group import GroupData, GroupValidationError, builtin, load, store, validate
from .congruence import (
    MashedClass,
    mash_canonical,
    predicted_divisible,
    sim_p_equivalent,
    zero_certificate,
)
from .partitions import (
    MultiPartition,
    Partition,
    RimhookRemoval,
    count_multipartitions,
    count_partitions,
    dominates,
    enumerate_multipartitions,
    enumerate_partitions,
    hook_lengths,
    is_t_core,
    rank_multipartition,
    remove_rimhooks,
    syt_count,
    unrank_multipartition,
)
from .stats import (
    CensusReport,
    CounterStream,
    asymptotic_check,
    certificate_census,
    concentration_check,
    exact_census,
    random_multipartition,
    sampled_census,
)
from .weyl_d import (
    bn_class_in_dn,
    dn_half_classes_property,
    dn_irrep_census,
    dn_restricted_census,
)
from .wreath_chars import (
    CellBudgetExceeded,
    CharTable,
    character_table,
    class_size,
    dimension,
    kostka,
    mn_character,
    perm_character,
    perm_multiplicity,
)

__all__ = [
    "GroupData",
    "GroupValidationError",
    "builtin",
    "load",
    "store",
    "validate",
    "MashedClass",
    "mash_canonical",
    "predicted_divisible",
    "sim_p_equivalent",
    "zero_certificate",
    "MultiPartition",
    "Partition",
    "RimhookRemoval",
    "count_multipartitions",
    "count_partitions",
    "dominates",
    "enumerate_multipartitions",
    "enumerate_partitions",
    "hook_lengths",
    "is_t_core",
    "rank_multipartition",
    "remove_rimhooks",
    "syt_count",
    "unrank_multipartition",
    "CensusReport",
    "CounterStream",
    "asymptotic_check",
    "certificate_census",
    "concentration_check",
    "exact_census",
    "random_multipartition",
    "sampled_census",
    "bn_class_in_dn",
    "dn_half_classes_property",
    "dn_irrep_census",
    "dn_restricted_census",
    "CellBudgetExceeded",
    "CharTable",
    "character_table",
    "class_size",
    "dimension",
    "kostka",
    "mn_character",
    "perm_character",
    "perm_multiplicity",
    "__version__",
]
