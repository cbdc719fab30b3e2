#include "error.hpp"

namespace treegap {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::dangling_partner: return "DanglingPartner";
    case Errc::fixed_point_involution: return "FixedPointInvolution";
    case Errc::non_positive_index: return "NonPositiveIndex";
    case Errc::disconnected: return "Disconnected";
    case Errc::cycle_inconsistent: return "CycleInconsistent";
    case Errc::zero_indeg: return "ZeroIndeg";
    case Errc::convergence_failure: return "ConvergenceFailure";
    case Errc::degenerate_function: return "DegenerateFunction";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::not_regular: return "NotRegular";
    case Errc::empty_or_full_set: return "EmptyOrFullSet";
    case Errc::too_large: return "TooLarge";
    case Errc::core_too_small: return "CoreTooSmall";
    case Errc::core_not_connected: return "CoreNotConnected";
    case Errc::ray_structure: return "RayStructure";
    case Errc::decay_violated: return "DecayViolated";
    case Errc::non_integer_index: return "NonIntegerIndex";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace treegap
