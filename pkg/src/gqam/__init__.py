"""Generalized quasiarithmetic means with strictly increasing, possibly
discontinuous, piecewise-linear generators, in exact rational arithmetic."""

from .analysis import (CompareVerdict, ContinuityDiagnosis, Counterexample, FloorCheck, KolmogorovReport,
                       Relation, Witness, affine_relation, compare, convex_bridge, critical_triples,
                       floor_condition, kolmogorov_probe, ratio, semicontinuity_probe,
                       witness_to_counterexample)
from .continuous import ContinuousPWL
from .core import (JumpNode, MonotonePWL, Position, Segment, classify_position, compose, conv_range,
                   evaluate, generalized_inverse, left_limit, lower_envelope, position_holds, right_limit,
                   upper_envelope)
from .errors import (BadArity, BadParameters, DomainMismatch, EmptyVector, GqamError, InvariantViolation,
                     LengthMismatch, MalformedSpec, NotAWitness, OutOfDomain, WeightViolation)
from .frak import escape_witness, frak_generator, frak_inverse, frak_m, prop_m_experiment
from .interval import OpenInterval
from .means import envelope_means, f_average, quasi_mean, reduce_from_n, weighted_quasi_mean
from .rational import INF, NEG_INF, as_extended, as_rational, fmt
from .specio import dump_function, function_from_dict, function_to_dict, load_function, parse_function

__version__ = "0.1.0"
