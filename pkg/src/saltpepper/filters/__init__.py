from ._base import DecisionFilter, IdentityFilter, ImageFilter
from .baseline import (DBPTGMF, DBUTMF, UTMF, UTMP, AdaptiveMedianFilter,
                       MedianFilter)
from .cascade import (TABLE_FILTERS, Cascade, amf, available_filters, cascade,
                      check_pipeline, dbptgmf, dbutmf, dmf, dmf_utmf, dmf_utmp,
                      make_filter, mdbptgmf, mdbutmf, median_filter, pa1, pa2,
                      utmf, utmp)
from .proposed import MDBPTGMF, MDBUTMF, DecisionMedianFilter

__all__ = [
    "ImageFilter", "DecisionFilter", "IdentityFilter",
    "DecisionMedianFilter", "MDBPTGMF", "MDBUTMF",
    "MedianFilter", "AdaptiveMedianFilter", "DBUTMF", "DBPTGMF", "UTMF", "UTMP",
    "Cascade", "TABLE_FILTERS", "available_filters", "make_filter",
    "check_pipeline", "cascade",
    "dmf", "mdbptgmf", "mdbutmf", "pa1", "pa2",
    "median_filter", "amf", "dbutmf", "dbptgmf", "utmf", "utmp",
    "dmf_utmf", "dmf_utmp",
]
