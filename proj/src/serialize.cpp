#include "lgmk/serialize.hpp"

#include <stdexcept>

#include "lgmk/error.hpp"

namespace lgmk {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  auto r = parse_rational(j.get<std::string>());
  if (!r) throw std::invalid_argument("not a rational: " + j.dump());
  return *r;
}

Json fraction_pair_json(const Rational& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) {
    throw std::overflow_error("fraction " + to_string(r) + " does not fit in 64 bits");
  }
  return Json::array({r.get_num().get_si(), r.get_den().get_si()});
}

Rational fraction_pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]: " + j.dump());
  return make_rational(j[0].get<long>(), j[1].get<long>());
}

Json weights_json(const WeightSystem& q) {
  Json out = Json::array();
  for (const auto& v : q.values()) out.push_back(rational_json(v));
  return out;
}

Json element_json(const GroupElement& g) {
  Json out = Json::array();
  for (const auto& p : g.phases()) out.push_back(rational_json(p));
  return out;
}

Json graded_json(const GradedDims& g) {
  Json out = Json::array();
  for (const auto& [d, n] : g.entries()) out.push_back({{"degree", rational_json(d)}, {"dim", n}});
  return out;
}

GradedDims graded_from_json(const Json& j) {
  GradedDims g;
  for (const auto& e : j) g.add(rational_from_json(e.at("degree")), e.at("dim").get<std::size_t>());
  return g;
}

Json group_json(const SymmetryGroup& g, bool with_elements) {
  Json out;
  out["order"] = g.order();
  Json factors = Json::array();
  for (const auto& f : invariant_factors(g)) factors.push_back(f.get_str());
  out["invariant_factors"] = factors;
  Json gens = Json::array();
  for (const auto& e : g.generators()) gens.push_back(element_json(e));
  out["generators"] = gens;
  if (with_elements) {
    Json elems = Json::array();
    for (const auto& e : g.elements()) elems.push_back(element_json(e));
    out["elements"] = elems;
  }
  return out;
}

Json search_report_json(const SearchReport& r) {
  Json out;
  out["target_dim"] = rational_json(r.target_dim);
  out["target_top"] = rational_json(r.target_top);
  out["vars"] = r.vars;
  out["bound"] = r.bound;
  out["status"] = search_status_name(r.status);
  Json sols = Json::array();
  for (const auto& s : r.solutions) {
    Json one = Json::array();
    for (const auto& q : s.values()) one.push_back(fraction_pair_json(q));
    sols.push_back(one);
  }
  out["solutions"] = sols;
  return out;
}

SearchReport search_report_from_json(const Json& j) {
  SearchReport r;
  r.target_dim = rational_from_json(j.at("target_dim"));
  r.target_top = rational_from_json(j.at("target_top"));
  r.vars = j.at("vars").get<int>();
  r.bound = j.at("bound").get<long>();
  const auto status = j.at("status").get<std::string>();
  bool known = false;
  for (auto s : {SearchStatus::kSolutionsFound, SearchStatus::kNoneWithinBound, SearchStatus::kNoneExact}) {
    if (status == search_status_name(s)) {
      r.status = s;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown search status " + status);
  for (const auto& s : j.at("solutions")) {
    std::vector<Rational> q;
    for (const auto& p : s) q.push_back(fraction_pair_from_json(p));
    r.solutions.emplace_back(std::move(q));
  }
  return r;
}

}  // namespace lgmk
