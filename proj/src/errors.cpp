// SPDX-License-Identifier: Apache-2.0
#include "qcond/errors.hpp"

namespace qcond {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_hermitian: return "NotHermitian";
    case errc::not_unitary: return "NotUnitary";
    case errc::not_projection: return "NotProjection";
    case errc::not_density_matrix: return "NotDensityMatrix";
    case errc::not_commutative: return "NotCommutative";
    case errc::incompatible_conditioning: return "IncompatibleConditioning";
    case errc::all_branches_null: return "AllBranchesNull";
    case errc::zero_probability_outcome: return "ZeroProbabilityOutcome";
    case errc::zero_vector: return "ZeroVector";
    case errc::unknown_outcome: return "UnknownOutcome";
    case errc::out_of_schedule: return "OutOfSchedule";
    case errc::no_convergence: return "NoConvergence";
    case errc::too_few_steps: return "TooFewSteps";
    case errc::axis_out_of_range: return "AxisOutOfRange";
    case errc::not_mutually_exclusive: return "NotMutuallyExclusive";
    case errc::invalid_joint: return "InvalidJoint";
    case errc::not_qubit: return "NotQubit";
    case errc::chain_too_large: return "ChainTooLarge";
    case errc::schema_error: return "SchemaError";
    case errc::unsupported_format: return "UnsupportedFormat";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace qcond
