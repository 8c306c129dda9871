"""Knot-diagram toolkit: HOMFLY skein engine, Seifert-circle bookkeeping,
parallel-band families, and Morton-inequality audits over PD codes."""

from .diagram import Diagram, parse_pd
from .homfly import HomflyEngine, homfly, naive_homfly
from .poly import LaurentPoly1, LaurentPoly2, alexander_specialize, mirror_substitute
from .seifert import diagram_genus, seifert_circles

__version__ = "0.1.0"

__all__ = [
    "Diagram",
    "parse_pd",
    "HomflyEngine",
    "homfly",
    "naive_homfly",
    "LaurentPoly1",
    "LaurentPoly2",
    "alexander_specialize",
    "mirror_substitute",
    "diagram_genus",
    "seifert_circles",
    "__version__",
]
