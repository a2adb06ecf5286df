#include "lgmk/error.hpp"
#include "lgmk/milnor.hpp"
#include "lgmk/polynomial.hpp"

namespace lgmk {

Classification classify(const Polynomial& w) {
  Classification c;
  if (w.is_zero()) {
    c.reason = "zero polynomial";
    return c;
  }
  ExponentMatrix a = exponent_matrix(w);
  WeightSolution sol = solve_weights(a);
  c.weight_status = sol.status;
  c.weights = sol.weights;
  if (!sol.ok()) {
    c.reason = std::string(weight_status_name(sol.status)) + " weights";
    return c;
  }
  c.nondegenerate = is_nondegenerate(w);
  if (!*c.nondegenerate) {
    c.reason = "degenerate (Milnor ring is infinite dimensional)";
    return c;
  }
  c.kind = a.rows() == a.cols() ? Admissibility::kInvertible : Admissibility::kNoninvertible;
  return c;
}

WeightSystem admissible_weights(const Polynomial& w) {
  Classification c = classify(w);
  if (!c.admissible()) throw Error(ErrorCode::kNotAdmissible, to_string(w) + " is not admissible: " + c.reason);
  return *c.weights;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kGroupNotAdmissible: return "GroupNotAdmissible";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kNotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::kInfiniteGroup: return "InfiniteGroup";
    case ErrorCode::kDegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::kWeightCondition: return "WeightConditionViolated";
    case ErrorCode::kTailProductTooLarge: return "TailProductTooLarge";
    case ErrorCode::kInternal: return "Internal";
  }
  return "?";
}

}  // namespace lgmk
