#pragma once

// Milnor rings Q_W = C[x]/(dW) and the unorbifolded B-model as a graded
// vector space.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgmk/groebner.hpp"
#include "lgmk/polynomial.hpp"
#include "lgmk/rational.hpp"

namespace lgmk {

/// Poincare data: degree -> dimension, only positive dimensions stored.
/// Equality of two GradedDims is the graded-vector-space isomorphism test.
class GradedDims {
 public:
  void add(const Rational& degree, std::size_t count = 1);

  const std::map<Rational, std::size_t>& entries() const { return entries_; }
  std::size_t total() const;
  bool empty() const { return entries_.empty(); }
  std::optional<Rational> top() const;
  std::size_t at(const Rational& degree) const;
  /// dim at d equals dim at (top - d) for every d.
  bool is_symmetric() const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  std::map<Rational, std::size_t> entries_;
};

/// "{0:1, 2/3:2, 4/3:1}"
std::string to_string(const GradedDims& g);

std::vector<Polynomial> jacobian_ideal(const Polynomial& w);

/// The order used for Milnor ring computations: weighted by q when W has a
/// positive weight solution, DegRevLex otherwise.
MonomialOrder milnor_order(const Polynomial& w);

/// Reduced Groebner basis of the Jacobian ideal in milnor_order(w).
GroebnerBasis jacobian_basis(const Polynomial& w, const GroebnerOptions& options = {});

/// Zero-dimensionality of the Jacobian ideal. A zero-variable polynomial is
/// nondegenerate.
bool is_nondegenerate(const Polynomial& w, const GroebnerOptions& options = {});

/// Standard-monomial basis of Q_W. Zero variables give the single empty
/// monomial. Throws Error(kNotFiniteDimensional) for degenerate W.
std::vector<Monomial> milnor_basis(const Polynomial& w, const GroebnerOptions& options = {});
std::vector<Monomial> milnor_basis(const Polynomial& w, const MonomialOrder& order,
                                   const GroebnerOptions& options = {});

struct BModel {
  Polynomial source;
  WeightSystem weights;
  std::vector<Monomial> basis;
  GradedDims graded;
};

/// B_{W,{0}} = Q_W graded by 2 sum a_i q_i. Throws Error(kNotAdmissible).
BModel bmodel(const Polynomial& w, const GroebnerOptions& options = {});

/// prod (1/q_i - 1)
Rational bdim_formula(const WeightSystem& q);
/// 2 sum (1 - 2 q_i)
Rational btop_formula(const WeightSystem& q);

}  // namespace lgmk
