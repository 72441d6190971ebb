"""Asymptotic numerosities of point sets in N^k.

Exact counting of symbolic point sets, a finite model of ultrafilter
commitments, equinumerosity verdicts and witnesses, quasi-selectivity
searches, Ramsey norms and characteristic series.
"""

from .errors import (AsynumError, Budget, HorizonTooSmall, ParseError,
                     ResourceError, WorkBudgetExceeded)
from .numerosity import (Numerosity, Verdict, axiom_check, build_subset_representative,
                         build_u_congruence, compare, e_sequence, equinumerous, num_add,
                         num_mul, quasi_numerosity_e)
from .oracle import EMPTY_MODEL, Answer, FilterModel, commit, decided_superset_witness, query
from .parsing import parse_expr, parse_func, parse_series
from .pointset import (AP, NAT, Diff, Finite, Intersect, Lift, Product, Range, Union,
                       contains, count, counting_sequence, counting_tail, truncate)
from .seqring import CountingSequence, ExplicitSet, PeriodicSet, QuasiPolynomial, sign_pattern
from .series import SeriesExpr, phi, series_of_set

__version__ = "0.1.0"
