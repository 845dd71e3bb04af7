"""Sequences: partitions, Bell, central binomial, Catalan and prime shifts."""

from anbn.sequences.asymptotic import hardy_ramanujan_estimate, hardy_ramanujan_ratio
from anbn.sequences.bell import bell
from anbn.sequences.binomial import catalan, central_binomial
from anbn.sequences.factory import available_sequences, get_sequence, seq_term, seq_term_mod
from anbn.sequences.partitions import (
    get_partition_table,
    partition_p,
    strict_partition_q,
    strict_partitions_by_parts,
)
from anbn.sequences.schemas import PartitionKind, PartitionTable, SequenceKind, SequenceSpec

__all__ = [
    "PartitionKind",
    "PartitionTable",
    "SequenceKind",
    "SequenceSpec",
    "available_sequences",
    "bell",
    "catalan",
    "central_binomial",
    "get_partition_table",
    "get_sequence",
    "hardy_ramanujan_estimate",
    "hardy_ramanujan_ratio",
    "partition_p",
    "seq_term",
    "seq_term_mod",
    "strict_partition_q",
    "strict_partitions_by_parts",
]
