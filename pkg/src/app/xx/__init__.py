"""XX linkage-minor detection and extraction from a second linkage."""

from .detector import canonical_xx, has_xx_linkage_minor, xx_segmentation
from .dto import XxSegmentation, XxWitness
from .extraction import extract_xx_from_second_linkage

__all__ = [
    "XxSegmentation",
    "XxWitness",
    "canonical_xx",
    "extract_xx_from_second_linkage",
    "has_xx_linkage_minor",
    "xx_segmentation",
]
