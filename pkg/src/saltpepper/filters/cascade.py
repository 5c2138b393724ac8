"""Filter cascades and the string-identifier registry used by the CLI."""
from ..exceptions import PipelineError
from ._base import IdentityFilter, ImageFilter
from .baseline import (DBPTGMF, DBUTMF, UTMF, UTMP, AdaptiveMedianFilter,
                       MedianFilter)
from .proposed import MDBPTGMF, MDBUTMF, DecisionMedianFilter


class Cascade(ImageFilter):
    """Apply filters left to right, each consuming the previous full output.

    Parameters
    ----------
    stages : sequence of str or ImageFilter
        Registered identifiers (see :func:`available_filters`) or filter
        instances. Must be non-empty.
    """

    def __init__(self, stages):
        self.stages = stages

    def _resolved(self):
        stages = [self.stages] if isinstance(self.stages, str) else list(self.stages)
        if not stages:
            raise PipelineError("a pipeline needs at least one stage")
        return [make_filter(s) if isinstance(s, str) else s for s in stages]

    def _filter(self, img):
        for stage in self._resolved():
            img = stage.transform(img)
        return img


def _cascade(*names):
    return lambda **kw: Cascade([make_filter(n, **kw) for n in names])


_REGISTRY = {
    "identity": lambda **kw: IdentityFilter(),
    "dmf": lambda recursive=False, **kw: DecisionMedianFilter(recursive=recursive),
    "mdbptgmf": lambda mdbptgmf_case12="paper", recursive=False, **kw: MDBPTGMF(
        case12=mdbptgmf_case12, recursive=recursive),
    "mdbutmf": lambda recursive=False, **kw: MDBUTMF(recursive=recursive),
    "pa1": _cascade("dmf", "mdbptgmf"),
    "pa2": _cascade("dmf", "mdbutmf"),
    "mf": lambda **kw: MedianFilter(k=3),
    "amf": lambda **kw: AdaptiveMedianFilter(max_window=11),
    "dbutmf": lambda recursive=False, **kw: DBUTMF(recursive=recursive),
    "dbptgmf": lambda recursive=False, **kw: DBPTGMF(recursive=recursive),
    "utmf": lambda recursive=False, **kw: UTMF(recursive=recursive),
    "utmp": lambda recursive=False, **kw: UTMP(recursive=recursive),
    "dmf+utmf": _cascade("dmf", "utmf"),
    "dmf+utmp": _cascade("dmf", "utmp"),
}

# column order of the published comparison tables
TABLE_FILTERS = ("amf", "dbutmf", "mdbutmf", "dbptgmf",
                 "dmf+utmf", "dmf+utmp", "pa1", "pa2")


def available_filters():
    return tuple(_REGISTRY)


def _check_name(name):
    if not isinstance(name, str) or name not in _REGISTRY:
        raise PipelineError(f"unknown filter {name!r}; choose from "
                            f"{', '.join(_REGISTRY)}")


def make_filter(name, **options):
    """Build the filter registered under ``name``.

    ``options`` may carry ``mdbptgmf_case12`` ("paper" or "mean") and
    ``recursive`` (bool); they reach every stage they apply to, including the
    stages inside the cascades.
    """
    _check_name(name)
    return _REGISTRY[name](**options)


def check_pipeline(names):
    names = [names] if isinstance(names, str) else list(names)
    if not names:
        raise PipelineError("a pipeline needs at least one stage")
    for name in names:
        _check_name(name)
    return names


def cascade(img, pipeline, **options):
    stages = [make_filter(name, **options) for name in check_pipeline(pipeline)]
    return Cascade(stages).transform(img)


def dmf(img):
    return DecisionMedianFilter().transform(img)


def mdbptgmf(img, case12="paper"):
    return MDBPTGMF(case12=case12).transform(img)


def mdbutmf(img):
    return MDBUTMF().transform(img)


def pa1(img, case12="paper"):
    return cascade(img, ["dmf", "mdbptgmf"], mdbptgmf_case12=case12)


def pa2(img):
    return cascade(img, ["dmf", "mdbutmf"])


def median_filter(img, k=3):
    return MedianFilter(k=k).transform(img)


def amf(img, max_window=11):
    return AdaptiveMedianFilter(max_window=max_window).transform(img)


def dbutmf(img):
    return DBUTMF().transform(img)


def dbptgmf(img):
    return DBPTGMF().transform(img)


def utmf(img):
    return UTMF().transform(img)


def utmp(img):
    return UTMP().transform(img)


def dmf_utmf(img):
    return cascade(img, ["dmf", "utmf"])


def dmf_utmp(img):
    return cascade(img, ["dmf", "utmp"])
