#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lgmk {

/// Exponent vector x_1^{a_1} ... x_n^{a_n}. The empty vector is the monomial
/// of the zero-variable ring.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents(n, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t size() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  int& operator[](std::size_t i) { return exponents[i]; }

  int total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// Index of the only variable with a nonzero exponent, or -1.
  int pure_power_variable() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors; for use as a map
  /// key only, not a monomial order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents <=> b.exponents; }
};

/// Renders with the given variable names, e.g. "x^3*y"; "1" for the unit.
std::string to_string(const Monomial& m, const std::vector<std::string>& variables);

/// Weighted degree with integer weights followed by reverse-lexicographic
/// tie-breaking on the variable index (x_1 > x_2 > ... > x_n). Unit weights
/// give plain DegRevLex.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(std::size_t n);
  /// Positive integer weights; scale rational weights to a common
  /// denominator before calling.
  static MonomialOrder weighted(std::vector<long> weights);

  std::size_t num_vars() const { return weights_.size(); }
  const std::vector<long>& weights() const { return weights_; }
  bool is_degrevlex() const { return degrevlex_; }

  long weighted_degree(const Monomial& m) const;

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(std::vector<long> w, bool degrevlex) : weights_(std::move(w)), degrevlex_(degrevlex) {}
  std::vector<long> weights_;
  bool degrevlex_ = true;
};

}  // namespace lgmk
