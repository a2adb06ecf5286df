#pragma once

// Transposition of invertible polynomials, the A_{W,Gmax} = B_{W^T,{0}}
// check, and exact searches for weight systems of candidate mirror
// polynomials with a prescribed B-model dimension and top degree.

#include <optional>
#include <utility>
#include <vector>

#include "lgmk/milnor.hpp"
#include "lgmk/polynomial.hpp"

namespace lgmk {

/// Square exponent matrix of an invertible W with its rows permuted so that
/// row i holds the monomial whose exponent of x_i sits on the diagonal (the
/// row permutation maximising the diagonal product, lexicographically first
/// on ties). Row i of this matrix is variable i of W^T. Throws
/// Error(kNotInvertible).
ExponentMatrix transpose_ready_matrix(const Polynomial& w);

/// Polynomial with exponent matrix A^T and unit coefficients, over the same
/// variable names as W.
Polynomial transpose_polynomial(const Polynomial& w);

struct MirrorComparison {
  Polynomial transpose;
  GradedDims a_side;  // A_{W, Gmax(W)}
  GradedDims b_side;  // B_{W^T, {0}}
  bool equal = false;
};

MirrorComparison compare_mirror(const Polynomial& w, unsigned threads = 1);
bool mirror_check(const Polynomial& w);

/// Result of solving (1/q1 - 1)(1/q2 - 1) = d, q1 + q2 = s exactly.
struct PairSolution {
  /// Every rational root pair with q1 <= q2, before the (0, 1/2] filter.
  std::vector<std::pair<Rational, Rational>> candidates;
  /// Candidates with both coordinates in (0, 1/2].
  std::vector<std::pair<Rational, Rational>> solutions;
  /// s^2 - 4 (1 - s)/(d - 1) of t^2 - s t + (1 - s)/(d - 1); absent for d = 1.
  std::optional<Rational> discriminant;

  bool none() const { return solutions.empty(); }
};

PairSolution solve_pair(const Rational& d_pair, const Rational& s_pair);

/// Coefficients of n(2n-3) q^2 + 2(3-2n) q + (n-2) = 0, the two-variable
/// system for dimension 2n-2 and top degree 2(2n-4)/n.
struct Quadratic {
  Rational a, b, c;
  Rational discriminant() const { return b * b - 4 * a * c; }
};

Quadratic pair_quadratic_2var(long n);
/// Discriminant of pair_quadratic_2var(n), computed from its coefficients.
Rational discriminant_2var(long n);

/// Residual two-variable problem once the tail q_3..q_m is fixed.
struct PairReduction {
  Rational d_pair;  // d / prod_tail (1/q_i - 1)
  Rational s_pair;  // (2m - delta)/4 - sum_tail q_i
  std::vector<Rational> tail;

  /// A = 1 - d_pair and B = s_pair, so the system reads
  /// A q1 q2 - q1 - q2 + 1 = 0, q2 = B - q1.
  Rational a_coefficient() const { return 1 - d_pair; }
  Rational b_coefficient() const { return s_pair; }
  /// (AB)^2 - 4A(B - 1), discriminant of A q1^2 - AB q1 + (B - 1) = 0.
  Rational discriminant() const;
};

/// Throws Error(kTailProductTooLarge) when prod_tail (1/q_i - 1) > d and
/// std::invalid_argument when the tail has the wrong length or leaves
/// (0, 1/2].
PairReduction reduce_to_pair(const Rational& d, const Rational& delta, int m, const std::vector<Rational>& tail);

enum class SearchStatus { kSolutionsFound, kNoneWithinBound, kNoneExact };

const char* search_status_name(SearchStatus s);

struct SearchReport {
  Rational target_dim;
  Rational target_top;
  int vars = 0;
  long bound = 0;
  SearchStatus status = SearchStatus::kNoneExact;
  /// Sorted weight systems, each ascending (q1 <= ... <= qm).
  std::vector<WeightSystem> solutions;
};

struct SearchOptions {
  unsigned threads = 1;
};

/// Weight systems q in ((0, 1/2] cap Q)^m with prod (1/q_i - 1) = d and
/// 2 sum (1 - 2 q_i) = delta. Exact for m <= 2. For m >= 3 the tail
/// q_3..q_m runs over fractions in [1/(d+1), 1/2] with denominator at most
/// the bound and the remaining pair is solved exactly.
SearchReport search_weight_systems(const Rational& d, const Rational& delta, int m, long denominator_bound,
                                   const SearchOptions& options = {});

/// Three-variable case: the largest grid value q_3 (denominator <= bound)
/// whose reduced pair system has a nonnegative discriminant, or nullopt.
std::optional<Rational> discriminant_sign_boundary(const Rational& d, const Rational& delta, long denominator_bound);

/// Fractions a/b in [lo, hi] with 1 <= b <= bound, ascending.
std::vector<Rational> fraction_grid(const Rational& lo, const Rational& hi, long bound);

/// Monomials x^a with sum a_i q_i = 1.
std::vector<Monomial> weight_one_monomials(const WeightSystem& q);

/// Unit-coefficient polynomials built from subsets (size >= n) of
/// weight_one_monomials(q) that have unique weights and a finite Milnor
/// ring. Nondegeneracy is only tested for unit coefficients. Sorted by term
/// count, then text.
std::vector<Polynomial> enumerate_admissible_supports(const WeightSystem& q);

/// x, y, z, w for n <= 4, otherwise x1..xn.
std::vector<std::string> default_variables(std::size_t n);

}  // namespace lgmk
