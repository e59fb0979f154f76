"""Signed tree models as a compact graph representation.

Conversion pipeline (models -> interval biclique partitions -> DAG
compressions / positive models), shortest paths on the derived distance
models, randomized sd-degeneracy sequences, and structured matrix
multiplication, all checked against brute-force oracles.
"""

from .convert import (ConstructionSequence, DagCompression,
                      IntervalBicliquePartition, PartitionViolation,
                      SdDegenSequence, SequenceError, cover_set, cseq_replay,
                      cseq_shorten, cseq_to_stm, dag_to_graph, ibp_to_dag,
                      ibp_to_graph, ibp_to_positive_model, sdseq_to_stm,
                      stm_to_ibp, stm_to_rects)
from .graph import (Graph, InputError, LinearOrder, bfs_sssp_oracle,
                    graphs_equal, symmetric_difference)
from .matmul import INT64_GROUP, AdditiveGroup, adjacency_matmul, ibp_matvec
from .paths import (DistanceModel, ShortestPathTree, apsp,
                    dag_to_distance_model, radius_r_width,
                    scattered_maximal_subset, sssp, zero_one_bfs)
from .rect import (DynamicPointSet, InclusionForest, LaminarityError, Rect,
                   complement_partition, inclusion_forest)
from .sddegen import (CapExceeded, SdConfig, WidthReport, preset_symdiff,
                      preset_twinwidth, sd_sequence_greedy,
                      sd_sequence_randomized, validate_sequence)
from .stm import (EditLog, InvalidModelError, SignedTreeModel,
                  ValidationReport, clean_same_sign, decode_bruteforce,
                  default_edit_log, insert_edit, remove_loops, validate)

__version__ = "0.1.0"

__all__ = [
    "AdditiveGroup", "CapExceeded", "ConstructionSequence", "DagCompression",
    "DistanceModel", "DynamicPointSet", "EditLog", "Graph", "INT64_GROUP",
    "InclusionForest", "InputError", "IntervalBicliquePartition",
    "InvalidModelError", "LaminarityError", "LinearOrder",
    "PartitionViolation", "Rect", "SdConfig", "SdDegenSequence",
    "SequenceError", "ShortestPathTree", "SignedTreeModel",
    "ValidationReport", "WidthReport", "adjacency_matmul", "apsp",
    "bfs_sssp_oracle", "clean_same_sign", "complement_partition", "cover_set",
    "cseq_replay", "cseq_shorten", "cseq_to_stm", "dag_to_distance_model",
    "dag_to_graph", "decode_bruteforce", "default_edit_log", "graphs_equal",
    "ibp_matvec", "ibp_to_dag", "ibp_to_graph", "ibp_to_positive_model",
    "inclusion_forest", "insert_edit", "preset_symdiff", "preset_twinwidth",
    "radius_r_width", "remove_loops", "scattered_maximal_subset",
    "sd_sequence_greedy", "sd_sequence_randomized", "sdseq_to_stm", "sssp",
    "stm_to_ibp", "stm_to_rects", "symmetric_difference", "validate",
    "validate_sequence", "zero_one_bfs",
]
