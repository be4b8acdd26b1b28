from .base import BaseWebBuilder, assign_roles, check_fan, copy_groups, frame_of
from .base_cases import (
    BaseN3Builder,
    CommonNeighboursN4Builder,
    ThreeCopiesN4Builder,
    base_common_neighbours_n4,
    base_three_copies_n4,
    base_web_n3,
)
from .fallback import fallback_web, search_web
from .same_copy import SameCopyEvenBuilder, SameCopyOddBuilder
from .three_copies import ThreeCopiesBuilder, ThreeCopyPlan, select_border_sets
from .two_copies import TwoCopiesEvenBuilder, TwoCopiesOddBuilder, split_lengths

__all__ = [
    "BaseWebBuilder",
    "assign_roles",
    "check_fan",
    "copy_groups",
    "frame_of",
    "BaseN3Builder",
    "CommonNeighboursN4Builder",
    "ThreeCopiesN4Builder",
    "base_common_neighbours_n4",
    "base_three_copies_n4",
    "base_web_n3",
    "fallback_web",
    "search_web",
    "SameCopyEvenBuilder",
    "SameCopyOddBuilder",
    "ThreeCopiesBuilder",
    "ThreeCopyPlan",
    "select_border_sets",
    "TwoCopiesEvenBuilder",
    "TwoCopiesOddBuilder",
    "split_lengths",
]
