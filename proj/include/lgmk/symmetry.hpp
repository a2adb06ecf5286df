#pragma once

// Diagonal symmetry groups written additively as finite subgroups of
// (Q/Z)^n. Groups are small, so they are stored fully enumerated.

#include <cstddef>
#include <string>
#include <vector>

#include "lgmk/polynomial.hpp"
#include "lgmk/rational.hpp"

namespace lgmk {

/// Phase vector with every coordinate reduced into [0, 1).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::size_t n) : phases_(n) {}
  explicit GroupElement(std::vector<Rational> phases);

  std::size_t size() const { return phases_.size(); }
  const Rational& operator[](std::size_t i) const { return phases_[i]; }
  const std::vector<Rational>& phases() const { return phases_; }
  bool is_identity() const;
  /// Smallest k > 0 with k * g = 0.
  BigInt order() const;
  /// sum g_i
  Rational phase_sum() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a);
  friend GroupElement operator*(long k, const GroupElement& g);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  std::vector<Rational> phases_;
};

std::string to_string(const GroupElement& g);

class SymmetryGroup {
 public:
  static SymmetryGroup trivial(std::size_t n);
  /// Closure of gens under addition mod 1. All gens must have length n.
  static SymmetryGroup generated_by(std::size_t n, std::vector<GroupElement> gens);
  /// Wraps an already closed, duplicate-free element list.
  static SymmetryGroup from_elements(std::size_t n, std::vector<GroupElement> elements);

  std::size_t ambient() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Sorted lexicographically by phases; the identity is first.
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const GroupElement& g) const;
  bool is_subgroup_of(const SymmetryGroup& other) const;

  /// Element sets are compared; generator lists are not.
  friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) {
    return a.ambient_ == b.ambient_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

/// Integer Smith normal form U A V = D with U, V unimodular.
struct SmithForm {
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix u, d, v;
  /// d_11 | d_22 | ... over the min(m, n) diagonal; zeros last.
  std::vector<BigInt> diagonal;
};

SmithForm smith_normal_form(const ExponentMatrix& a);

/// True iff A g is an integer vector.
bool is_symmetry(const ExponentMatrix& a, const GroupElement& g);

/// G_W^max = { g : A g in Z^m }, generated by V e_i / d_i from the Smith
/// form. Throws Error(kInfiniteGroup) if rank(A) < n.
SymmetryGroup gmax(const ExponentMatrix& a);
SymmetryGroup gmax(const Polynomial& w);

/// Oracle: every g with N g integral (N = denominator_bound) and A g
/// integral. Complete only when N is a multiple of the group exponent.
SymmetryGroup gmax_bruteforce(const Polynomial& w, long denominator_bound);

SymmetryGroup subgroup_generated(std::size_t n, const std::vector<GroupElement>& gens);

/// J = (q_1, ..., q_n) mod 1 lies in G.
bool is_admissible_group(const SymmetryGroup& g, const WeightSystem& q);

/// Elements whose phases sum to an integer.
SymmetryGroup sl_subgroup(const SymmetryGroup& g);

/// G^T = { g in G^max(W^T) : g A h^T in Z for all h in G }, with A the
/// square exponent matrix of W in transpose order. Throws
/// Error(kNotInvertible).
SymmetryGroup transpose_group(const SymmetryGroup& g, const Polynomial& w);

/// 0-based indices i with g_i = 0.
std::vector<std::size_t> fixed_locus(const GroupElement& g);

/// <(1/p, 1/q), (1/gcd(p, r), 0)>, the maximal group of x^p + y^q + x^r y^s.
/// Throws Error(kWeightCondition) unless r/p + s/q = 1.
SymmetryGroup bendall_gmax(long p, long q, long r, long s);

/// Invariant factors (all > 1, each dividing the next) of the quotient
/// G / H. H must be a subgroup of G.
std::vector<BigInt> invariant_factors(const SymmetryGroup& g, const SymmetryGroup& h);
std::vector<BigInt> invariant_factors(const SymmetryGroup& g);

/// All subgroups of G that contain every element of `base`, sorted by order
/// then elements.
std::vector<SymmetryGroup> subgroups_containing(const SymmetryGroup& g, const std::vector<GroupElement>& base);

}  // namespace lgmk
