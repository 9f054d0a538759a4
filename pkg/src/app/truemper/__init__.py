"""Ladder family: generation, embedding certificates, rung partitions and pathwidth."""

from .dto import PathDecomposition, RungPartition, TruemperCertificate
from .embedding import embed_in_truemper, verify_certificate
from .generator import extend_truemper, generate_truemper, shrink_truemper, truemper_rung
from .partition import crossing, find_valid_partition, is_valid_partition
from .pathwidth import exact_pathwidth, verify_path_decomposition
from .sampler import sample_truemper_minor

__all__ = [
    "PathDecomposition",
    "RungPartition",
    "TruemperCertificate",
    "crossing",
    "embed_in_truemper",
    "exact_pathwidth",
    "extend_truemper",
    "find_valid_partition",
    "generate_truemper",
    "is_valid_partition",
    "sample_truemper_minor",
    "shrink_truemper",
    "truemper_rung",
    "verify_certificate",
    "verify_path_decomposition",
]
