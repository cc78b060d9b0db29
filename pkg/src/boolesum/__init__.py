"""Exact finite differences, Lagrange interpolation and the generalized Boole sum."""

__version__ = "0.1.0"

from .boole import (FuzzReport, SumReport, boole_classic, boole_sum, expected_vanishing,
                    fuzz_verify, predicted_value, random_instance, vanishing_sum,
                    verify_proposition)
from .errors import (BooleError, DegenerateNodesError, DegreeOverflowError, DimensionError,
                     InvalidStepError, OutOfRangeError, PolynomialSyntaxError,
                     UndefinedDegreeError)
from .exact_core import (NodeGrid, Polynomial, Rational, binomial, factorial,
                         format_polynomial, format_rational, leading_coefficient,
                         parse_rational, poly_eval, poly_linear_combine, poly_mul,
                         poly_shift, rational_arith)
from .finite_difference import DifferenceTable, delta, difference_table, nth_delta
from .interpolation import (PointSet, lagrange_basis, lagrange_interpolate,
                            leading_coeff_from_samples, sample)
from .numerics import (FloatErrorRecord, Strategy, error_record, error_sweep,
                       float_boole_sum)
from .parsing import parse_polynomial
