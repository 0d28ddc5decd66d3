"""Exact character sums over sparse finite-field elements.

Core pieces: field arithmetic (ff), polynomials and rational functions
(polyrat), character evaluation with exact root-of-unity accumulation
(chars), sparse/subspace/full-field sums (sums), membership classification
for the bound's applicability class (classify), and the entropy-exponent
bound machinery (bounds).  The cli module ties everything to a command
line; verify runs the self-check suites.
"""

from .bounds import EtaResult, entropy_H, entropy_Hstar, eta
from .chars import AddChar, MultChar, UnitAccumulator
from .classify import Status, Verdict, oracle_classify_poly
from .errors import (FieldConstructionError, GuardViolation, NotCertified,
                     SparseCharSumError, SpecParseError)
from .ff import FieldDesc, LogTable, find_primitive, make_field
from .guards import DEFAULT, Guards
from .polyrat import POLE, Poly, RatFn
from .sums import Domain, SumReport, mixed_sum, weil_check

__all__ = [
    "AddChar", "DEFAULT", "Domain", "EtaResult", "FieldConstructionError",
    "FieldDesc", "Guards", "GuardViolation", "LogTable", "MultChar",
    "NotCertified", "POLE", "Poly", "RatFn", "SparseCharSumError",
    "SpecParseError", "Status", "SumReport", "UnitAccumulator",
    "entropy_H", "entropy_Hstar", "eta", "find_primitive", "make_field",
    "mixed_sum", "oracle_classify_poly", "weil_check",
]
