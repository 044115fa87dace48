"""(p,q)-Salagean harmonic univalent function families on the unit disc."""

from .bounds import (DistortionMode, beta, check_thm3_hypothesis, coeff_bounds, convexity_radius,
                     covering_radius, distortion)
from .extremal import WeightVector, combine, decompose, extreme_g, extreme_h
from .family import (CoeffSeq, FamilySpec, coefficient_functional, gamma_k, is_member_sufficient,
                     is_member_T, kernels, phi_k, preset, ratio)
from .pq_core import PQParams, bracket, bracket_pow, pq_derive_quotient, pq_derive_series
from .series import HarmonicFunction, Kernel, dilatation, evaluate, hadamard, salagean
from .verify import (GridSpec, VerificationReport, brute_convexity_radius, check_distortion,
                     check_re_condition, check_sense_preserving, convex_image_test,
                     necessity_probe)

__version__ = "0.1.0"
