#include "lgmk/milnor.hpp"

#include <stdexcept>

#include "lgmk/error.hpp"

namespace lgmk {

void GradedDims::add(const Rational& degree, std::size_t count) {
  if (count == 0) return;
  entries_[degree] += count;
}

std::size_t GradedDims::total() const {
  std::size_t t = 0;
  for (const auto& [d, n] : entries_) t += n;
  return t;
}

std::optional<Rational> GradedDims::top() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

std::size_t GradedDims::at(const Rational& degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

bool GradedDims::is_symmetric() const {
  if (entries_.empty()) return true;
  Rational t = *top();
  for (const auto& [d, n] : entries_) {
    if (at(Rational(t - d)) != n) return false;
  }
  return true;
}

std::string to_string(const GradedDims& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, n] : g.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(d) + ":" + std::to_string(n);
  }
  return out + "}";
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& w) {
  std::vector<Polynomial> out;
  out.reserve(w.num_vars());
  for (std::size_t i = 0; i < w.num_vars(); ++i) out.push_back(w.derivative(i));
  return out;
}

MonomialOrder milnor_order(const Polynomial& w) {
  WeightSolution sol = solve_weights(exponent_matrix(w));
  if (sol.weights) {
    bool positive = true;
    for (const auto& q : sol.weights->values()) positive = positive && q > 0;
    if (positive) return MonomialOrder::weighted(sol.weights->integer_weights());
  }
  return MonomialOrder::degrevlex(w.num_vars());
}

GroebnerBasis jacobian_basis(const Polynomial& w, const GroebnerOptions& options) {
  auto jac = jacobian_ideal(w);
  return buchberger(jac, milnor_order(w), options);
}

bool is_nondegenerate(const Polynomial& w, const GroebnerOptions& options) {
  if (w.num_vars() == 0) return true;
  return is_zero_dimensional(jacobian_basis(w, options));
}

std::vector<Monomial> milnor_basis(const Polynomial& w, const GroebnerOptions& options) {
  if (w.num_vars() == 0) return {Monomial()};
  return standard_monomials(jacobian_basis(w, options));
}

std::vector<Monomial> milnor_basis(const Polynomial& w, const MonomialOrder& order, const GroebnerOptions& options) {
  if (w.num_vars() == 0) return {Monomial()};
  return standard_monomials(buchberger(jacobian_ideal(w), order, options));
}

BModel bmodel(const Polynomial& w, const GroebnerOptions& options) {
  WeightSystem q = admissible_weights(w);
  BModel b{w, q, milnor_basis(w, options), {}};
  for (const auto& m : b.basis) b.graded.add(monomial_bdegree(m, q));

  if (Rational(static_cast<long>(b.basis.size())) != bdim_formula(q)) {
    throw Error(ErrorCode::kInternal, "Milnor basis size " + std::to_string(b.basis.size()) +
                                          " disagrees with prod(1/q_i - 1) = " + to_string(bdim_formula(q)));
  }
  if (b.graded.top() != btop_formula(q)) {
    throw Error(ErrorCode::kInternal, "Milnor ring top degree disagrees with 2 sum(1 - 2 q_i) = " +
                                          to_string(btop_formula(q)));
  }
  return b;
}

Rational bdim_formula(const WeightSystem& q) {
  Rational p = 1;
  for (const auto& v : q.values()) {
    if (v <= 0) throw std::invalid_argument("weights must be positive");
    p *= 1 / v - 1;
  }
  return p;
}

Rational btop_formula(const WeightSystem& q) {
  Rational s = 0;
  for (const auto& v : q.values()) s += 1 - 2 * v;
  return 2 * s;
}

}  // namespace lgmk
