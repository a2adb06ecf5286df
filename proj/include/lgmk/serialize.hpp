#pragma once

// JSON encodings shared by the CLI and the tests. Rationals are "p/q"
// strings except inside SearchReport solutions, which use [num, den] pairs.

#include "json.hpp"

#include "lgmk/amodel.hpp"
#include "lgmk/milnor.hpp"
#include "lgmk/mirror.hpp"
#include "lgmk/symmetry.hpp"

namespace lgmk {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [num, den]; throws std::overflow_error outside the signed 64-bit range.
Json fraction_pair_json(const Rational& r);
Rational fraction_pair_from_json(const Json& j);

Json weights_json(const WeightSystem& q);
Json element_json(const GroupElement& g);
Json graded_json(const GradedDims& g);
GradedDims graded_from_json(const Json& j);
Json group_json(const SymmetryGroup& g, bool with_elements);

/// {target_dim, target_top, vars, bound, status, solutions: [[[num, den], ...], ...]}
Json search_report_json(const SearchReport& r);
SearchReport search_report_from_json(const Json& j);

}  // namespace lgmk
