#pragma once

// Polynomials with exact rational coefficients, the exponent matrix of a
// polynomial, quasihomogeneous weight solving and admissibility
// classification.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgmk/monomial.hpp"
#include "lgmk/rational.hpp"

namespace lgmk {

struct Term {
  Rational coef;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial in a named, ordered list of variables. Terms are collected
/// (one per monomial), have nonzero coefficients and are sorted descending
/// in DegRevLex. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);
  /// Collects like terms and drops zeros. Every monomial must have
  /// variables.size() entries.
  Polynomial(std::vector<std::string> variables, std::vector<Term> terms);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial monomial(std::vector<std::string> variables, const Monomial& m, const Rational& c = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_vars() const { return variables_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Polynomial derivative(std::size_t var) const;
  Polynomial scaled(const Rational& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Term> terms_;
};

/// Canonical text form, e.g. "x^4 + x^3*y + y^4"; "0" for zero.
std::string to_string(const Polynomial& p);

/// Parses the grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coef | [coef '*'] factor ('*' factor)*
///   factor := var ['^' posint]
///   coef   := digits ['/' digits]
/// Variables are a letter optionally followed by digits (x, y, x1, x12).
/// Variable order: x, y, z, w, then the remaining letters alphabetically,
/// then indexed names by (letter, index). Throws ParseError.
Polynomial parse_polynomial(std::string_view text);
/// Same grammar over a fixed variable list; unknown names are an error.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// m x n matrix; row i is the exponent vector of term i.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, std::vector<int>(cols, 0)) {}
  explicit ExponentMatrix(std::vector<std::vector<int>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  int& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<int>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<int>>& data() const { return rows_; }

  ExponentMatrix transposed() const;
  /// True if some row is x_i * x_j with i != j.
  bool has_cross_term() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<int>> rows_;
};

ExponentMatrix exponent_matrix(const Polynomial& w);

/// The weight vector J = (q_1, ..., q_n).
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<Rational> q) : q_(std::move(q)) {}

  std::size_t size() const { return q_.size(); }
  const Rational& operator[](std::size_t i) const { return q_[i]; }
  const std::vector<Rational>& values() const { return q_; }

  /// Smallest common denominator times q, as a positive integer vector.
  std::vector<long> integer_weights() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<Rational> q_;
};

std::string to_string(const WeightSystem& q);

enum class WeightStatus { kOk, kNonUnique, kNoSolution, kNonPositiveWeight, kWeightBoundViolated };

const char* weight_status_name(WeightStatus s);

struct WeightSolution {
  WeightStatus status = WeightStatus::kNoSolution;
  /// Present for kOk, and also for the two validation failures so the
  /// offending vector can be reported.
  std::optional<WeightSystem> weights;

  bool ok() const { return status == WeightStatus::kOk; }
};

/// Solves A q = (1, ..., 1) exactly.
WeightSolution solve_weights(const ExponentMatrix& a);

/// Exact rank over Q.
std::size_t rank(const ExponentMatrix& a);

enum class Admissibility { kInvertible, kNoninvertible, kNotAdmissible };

const char* admissibility_name(Admissibility a);

struct Classification {
  Admissibility kind = Admissibility::kNotAdmissible;
  WeightStatus weight_status = WeightStatus::kNoSolution;
  std::optional<WeightSystem> weights;
  /// Only evaluated once weights are valid.
  std::optional<bool> nondegenerate;
  /// Empty unless kind == kNotAdmissible.
  std::string reason;

  bool admissible() const { return kind != Admissibility::kNotAdmissible; }
};

Classification classify(const Polynomial& w);

/// Requires an admissible polynomial; throws Error(kNotAdmissible) with the
/// classification reason otherwise.
WeightSystem admissible_weights(const Polynomial& w);

/// B-model degree 2 * sum a_i q_i.
Rational monomial_bdegree(const Monomial& m, const WeightSystem& q);

}  // namespace lgmk
