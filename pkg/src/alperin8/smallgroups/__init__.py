"""Small explicit groups, conjugacy classes, exact character tables, Sylow 2-subgroups."""

from .chartable import CharacterTable, LiftError, character_table, splitting_prime
from .constructions import (
    SUPPORTED_Q, build_gl2, build_pgl2, build_psl2, build_semidirect, build_sl2, gl_f2,
    local_group, odd_subgroups_gl3f2,
)
from .cyclotomic import CyclotomicInteger
from .fields import FiniteField, UnsupportedField, field
from .group import ConjugacyClass, FiniteGroup, GroupError, conjugacy_classes
from .sylow import TwoGroupType, recognize_2group, sylow2

__all__ = [
    "CharacterTable", "LiftError", "character_table", "splitting_prime", "SUPPORTED_Q",
    "build_gl2", "build_pgl2", "build_psl2", "build_semidirect", "build_sl2", "gl_f2",
    "local_group", "odd_subgroups_gl3f2", "CyclotomicInteger", "FiniteField", "UnsupportedField",
    "field", "ConjugacyClass", "FiniteGroup", "GroupError", "conjugacy_classes",
    "TwoGroupType", "recognize_2group", "sylow2",
]
