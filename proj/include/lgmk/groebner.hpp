#pragma once

// Buchberger's algorithm over Q. Used for Milnor ring bases and for the
// finiteness test behind nondegeneracy.

#include <cstddef>
#include <string>
#include <vector>

#include "lgmk/monomial.hpp"
#include "lgmk/polynomial.hpp"

namespace lgmk {

/// Process-wide default cap on reduced S-pairs (initially 10^6).
std::size_t default_pair_budget();
void set_default_pair_budget(std::size_t budget);

struct GroebnerOptions {
  std::size_t pair_budget = default_pair_budget();
};

/// Reduced Groebner basis: monic generators, no leading monomial divides
/// another, sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_vars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  /// Number of S-pairs that were actually reduced.
  std::size_t pairs_processed() const { return pairs_processed_; }
  bool is_unit_ideal() const;

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, const MonomialOrder&, const GroebnerOptions&);
  GroebnerBasis(std::vector<std::string> vars, MonomialOrder order) : variables_(std::move(vars)), order_(std::move(order)) {}

  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  std::size_t pairs_processed_ = 0;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

/// Throws Error(kResourceLimit) when more than options.pair_budget S-pairs
/// would be reduced. gens must share one variable list; zero generators are
/// ignored.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& g);

/// Monomials divisible by no leading monomial, ascending in the basis order.
/// Throws Error(kNotFiniteDimensional) if the quotient is infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g);

}  // namespace lgmk
