#pragma once

// A-model state spaces A_{W,G} = sum over g in G of (Q_{W|fix g})^G, graded
// by dim fix(g) + 2 sum (g_i - q_i).

#include <optional>
#include <vector>

#include "lgmk/milnor.hpp"
#include "lgmk/polynomial.hpp"
#include "lgmk/symmetry.hpp"

namespace lgmk {

/// Basis element [m; g]. The monomial has full ambient length with zero
/// exponents outside fix(g).
struct SectorElement {
  Monomial monomial;
  GroupElement sector;
  Rational adegree;
};

struct AModel {
  Polynomial source;
  WeightSystem weights;
  SymmetryGroup group;
  std::vector<SectorElement> basis;
  GradedDims graded;
};

struct AModelOptions {
  unsigned threads = 1;
  GroebnerOptions groebner{};
};

/// Terms of W whose support lies inside `fix`, as a polynomial in those
/// variables. nullopt (the trivial restriction) when no term survives.
std::optional<Polynomial> restrict_polynomial(const Polynomial& w, const std::vector<std::size_t>& fix);

/// Milnor basis monomials x^a of W|fix(g) with
///   sum_{i in fix} h_i (1 + a_i) in Z   for every h in G,
/// i.e. invariant under h*(m) = det(h|fix) m o h. An empty fixed locus gives
/// the single unit monomial. Throws Error(kDegenerateRestriction) when the
/// fixed locus is nonempty but W|fix has an infinite Milnor ring.
std::vector<Monomial> invariant_monomials(const GroupElement& g, const Polynomial& w, const SymmetryGroup& group,
                                          const GroebnerOptions& options = {});

Rational adegree(const GroupElement& g, const WeightSystem& q);

/// Throws Error(kNotAdmissible) for non-admissible W and
/// Error(kGroupNotAdmissible) when G is not inside G^max or misses J.
/// Basis sorted by (degree, sector phases, monomial).
AModel amodel(const Polynomial& w, const SymmetryGroup& group, const AModelOptions& options = {});

/// Graded comparison of A_{W1,G} and A_{W2,G}. Throws Error(kInvalidArgument)
/// when the weights differ and Error(kGroupNotAdmissible) when G is not
/// admissible for both.
bool group_weights_compare(const Polynomial& w1, const Polynomial& w2, const SymmetryGroup& group);

}  // namespace lgmk
