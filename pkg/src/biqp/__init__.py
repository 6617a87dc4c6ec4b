"""Quasiperiods of finite and biinfinite words."""
from .errors import (
    DomainError,
    InvalidDirectiveError,
    NeedsLongerDirectiveError,
    NotRecurrentError,
    UndefinedSpanError,
)
from .overlaps import FTable, f_table, occ
from .quasiperiods import (
    chains_of_length,
    derivated_sequence,
    is_quasiperiod_bi,
    is_quasiperiod_finite,
    quasiperiods_finite,
    quasiperiods_of_length,
    same_chain,
)
from .relations import CoupleTag, classify
from .sturmian import SturmLang, sturmian_quasiperiods
from .words import BiWord

__version__ = "0.1.0"
