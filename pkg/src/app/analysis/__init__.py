"""Brute-force referee: linkage enumeration and vitality by definition."""

from .dto import LinkageEnumeration
from .minors import enumerate_linkage_minors
from .oracle import (
    count_spanning_linkages,
    enumerate_linkages,
    enumerate_spanning_linkages,
    find_second_linkage,
    is_vital,
    iter_linkages,
    iter_spanning_linkages,
)

__all__ = [
    "LinkageEnumeration",
    "count_spanning_linkages",
    "enumerate_linkage_minors",
    "enumerate_linkages",
    "enumerate_spanning_linkages",
    "find_second_linkage",
    "is_vital",
    "iter_linkages",
    "iter_spanning_linkages",
]
