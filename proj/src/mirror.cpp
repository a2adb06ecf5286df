#include "lgmk/mirror.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "lgmk/amodel.hpp"
#include "lgmk/error.hpp"
#include "lgmk/symmetry.hpp"

namespace lgmk {

ExponentMatrix transpose_ready_matrix(const Polynomial& w) {
  ExponentMatrix a = exponent_matrix(w);
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNotInvertible,
                to_string(w) + " has " + std::to_string(a.rows()) + " monomials in " + std::to_string(a.cols()) +
                    " variables; its transposed exponent matrix would give a non-admissible polynomial");
  }
  Classification c = classify(w);
  if (c.kind != Admissibility::kInvertible) {
    throw Error(ErrorCode::kNotInvertible, to_string(w) + " is not invertible: " + c.reason);
  }
  const std::size_t n = a.cols();
  std::vector<std::size_t> perm(n), best;
  std::iota(perm.begin(), perm.end(), 0);
  BigInt best_product = -1;
  do {
    BigInt product = 1;
    for (std::size_t i = 0; i < n; ++i) product *= a(perm[i], i);
    if (product > best_product) {
      best_product = product;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  ExponentMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(best[i], j);
  }
  return out;
}

Polynomial transpose_polynomial(const Polynomial& w) {
  ExponentMatrix t = transpose_ready_matrix(w).transposed();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < t.rows(); ++i) terms.push_back({Rational(1), Monomial(t.row(i))});
  return Polynomial(w.variables(), std::move(terms));
}

MirrorComparison compare_mirror(const Polynomial& w, unsigned threads) {
  Polynomial wt = transpose_polynomial(w);
  AModelOptions opts;
  opts.threads = threads;
  MirrorComparison out{wt, amodel(w, gmax(w), opts).graded, bmodel(wt).graded, false};
  out.equal = out.a_side == out.b_side;
  return out;
}

bool mirror_check(const Polynomial& w) { return compare_mirror(w).equal; }

// ---------------------------------------------------------------------------
// Exact pair solving

namespace {

bool in_weight_range(const Rational& q) { return q > 0 && q <= Rational(1, 2); }

}  // namespace

PairSolution solve_pair(const Rational& d, const Rational& s) {
  PairSolution out;
  if (d == 1) {
    // (1 - q1)(1 - q2) = q1 q2 collapses to q1 + q2 = 1; inside (0, 1/2]
    // only q1 = q2 = 1/2 remains.
    if (s == 1) {
      out.candidates.push_back({Rational(1, 2), Rational(1, 2)});
      out.solutions = out.candidates;
    }
    return out;
  }
  // (1 - q1)(1 - q2) = d q1 q2  <=>  q1 q2 (d - 1) = 1 - s.
  Rational product = (1 - s) / (d - 1);
  Rational disc = s * s - 4 * product;
  out.discriminant = disc;
  auto root = exact_sqrt(disc);
  if (!root) return out;
  Rational lo = (s - *root) / 2;
  Rational hi = (s + *root) / 2;
  out.candidates.push_back({lo, hi});
  if (in_weight_range(lo) && in_weight_range(hi)) out.solutions.push_back({lo, hi});
  return out;
}

Quadratic pair_quadratic_2var(long n) {
  Rational rn(n);
  return {rn * (2 * rn - 3), 2 * (3 - 2 * rn), rn - 2};
}

Rational discriminant_2var(long n) { return pair_quadratic_2var(n).discriminant(); }

Rational PairReduction::discriminant() const {
  Rational a = a_coefficient();
  Rational b = b_coefficient();
  return (a * b) * (a * b) - 4 * a * (b - 1);
}

PairReduction reduce_to_pair(const Rational& d, const Rational& delta, int m, const std::vector<Rational>& tail) {
  if (m < 2 || tail.size() != static_cast<std::size_t>(m - 2)) {
    throw std::invalid_argument("tail must hold exactly m - 2 weights");
  }
  Rational product = 1;
  Rational sum = 0;
  for (const auto& q : tail) {
    if (!in_weight_range(q)) throw std::invalid_argument("tail weight " + to_string(q) + " outside (0, 1/2]");
    product *= 1 / q - 1;
    sum += q;
  }
  if (product > d) {
    throw Error(ErrorCode::kTailProductTooLarge,
                "tail product " + to_string(product) + " exceeds target dimension " + to_string(d));
  }
  return {d / product, (2 * Rational(m) - delta) / 4 - sum, tail};
}

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kSolutionsFound: return "SolutionsFound";
    case SearchStatus::kNoneWithinBound: return "NoneWithinBound";
    case SearchStatus::kNoneExact: return "NoneExact";
  }
  return "?";
}

std::vector<Rational> fraction_grid(const Rational& lo, const Rational& hi, long bound) {
  std::set<Rational> grid;
  for (long b = 1; b <= bound; ++b) {
    for (long a = 0; a <= b; ++a) {
      Rational r = make_rational(a, b);
      if (r >= lo && r <= hi) grid.insert(r);
    }
  }
  return {grid.begin(), grid.end()};
}

namespace {

using Solution = std::vector<Rational>;

void add_pair_solutions(const PairSolution& ps, const std::vector<Rational>& tail, std::set<Solution>& out) {
  for (const auto& [a, b] : ps.solutions) {
    Solution s = tail;
    s.push_back(a);
    s.push_back(b);
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  }
}

// Depth-first over nondecreasing tails starting at grid index `start`.
void walk_tails(const Rational& d, const Rational& delta, int m, const std::vector<Rational>& grid,
                std::size_t start, std::vector<Rational>& tail, const Rational& product, const Rational& sum,
                const Rational& total_sum, std::set<Solution>& out) {
  if (tail.size() == static_cast<std::size_t>(m - 2)) {
    PairReduction r = reduce_to_pair(d, delta, m, tail);
    if (r.s_pair <= 0) return;
    add_pair_solutions(solve_pair(r.d_pair, r.s_pair), tail, out);
    return;
  }
  for (std::size_t i = start; i < grid.size(); ++i) {
    Rational p = product * (1 / grid[i] - 1);
    Rational s = sum + grid[i];
    // Factors only shrink as q grows, but every later factor is >= 1, so a
    // product above d can never recover. Likewise the sum only grows.
    if (p > d) continue;
    if (s >= total_sum) break;
    tail.push_back(grid[i]);
    walk_tails(d, delta, m, grid, i, tail, p, s, total_sum, out);
    tail.pop_back();
  }
}

}  // namespace

SearchReport search_weight_systems(const Rational& d, const Rational& delta, int m, long denominator_bound,
                                   const SearchOptions& options) {
  if (m < 1) throw std::invalid_argument("number of variables must be at least 1");
  if (denominator_bound < 2) throw std::invalid_argument("denominator bound must be at least 2");

  SearchReport report{d, delta, m, denominator_bound, SearchStatus::kNoneExact, {}};
  std::set<Solution> found;

  if (m == 1) {
    if (d + 1 > 0) {
      Rational q = 1 / (d + 1);
      if (in_weight_range(q) && 2 * (1 - 2 * q) == delta) found.insert({q});
    }
  } else if (m == 2) {
    add_pair_solutions(solve_pair(d, (4 - delta) / 4), {}, found);
  } else if (d >= 1) {
    const std::vector<Rational> grid = fraction_grid(1 / (d + 1), Rational(1, 2), denominator_bound);
    const Rational total_sum = (2 * Rational(m) - delta) / 4;
    const unsigned threads = std::max(1u, options.threads);
    // Contiguous blocks of first-tail-element indices per worker.
    std::vector<std::set<Solution>> partial(threads);
    auto run_block = [&](unsigned t) {
      std::size_t begin = grid.size() * t / threads;
      std::size_t end = grid.size() * (t + 1) / threads;
      std::vector<Rational> tail;
      for (std::size_t i = begin; i < end; ++i) {
        Rational p = 1 / grid[i] - 1;
        if (p > d || grid[i] >= total_sum) continue;
        tail.assign(1, grid[i]);
        walk_tails(d, delta, m, grid, i, tail, p, grid[i], total_sum, partial[t]);
      }
    };
    if (threads == 1) {
      run_block(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run_block, t);
    }
    for (auto& p : partial) found.insert(p.begin(), p.end());
  }

  for (const auto& s : found) report.solutions.emplace_back(s);
  if (!report.solutions.empty()) {
    report.status = SearchStatus::kSolutionsFound;
  } else {
    report.status = m <= 2 ? SearchStatus::kNoneExact : SearchStatus::kNoneWithinBound;
  }
  return report;
}

std::optional<Rational> discriminant_sign_boundary(const Rational& d, const Rational& delta, long denominator_bound) {
  std::optional<Rational> best;
  for (const auto& q3 : fraction_grid(1 / (d + 1), Rational(1, 2), denominator_bound)) {
    if (q3 <= 0) continue;
    PairReduction r = reduce_to_pair(d, delta, 3, {q3});
    if (r.discriminant() >= 0) best = q3;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Supports

std::vector<Monomial> weight_one_monomials(const WeightSystem& q) {
  const std::size_t n = q.size();
  std::vector<Monomial> out;
  Monomial m(n);
  // Odometer over 0 <= a_i <= 1/q_i.
  std::vector<int> cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i] <= 0) throw std::invalid_argument("weights must be positive");
    BigInt c;
    mpz_fdiv_q(c.get_mpz_t(), q[i].get_den_mpz_t(), q[i].get_num_mpz_t());
    cap[i] = static_cast<int>(c.get_si());
  }
  while (true) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += q[i] * m[i];
    if (s == 1) out.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] > cap[i]) m[i++] = 0;
    if (i == n) break;
  }
  const auto order = MonomialOrder::degrevlex(n);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::vector<std::string> default_variables(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? letters[i] : "x" + std::to_string(i + 1));
  return out;
}

std::vector<Polynomial> enumerate_admissible_supports(const WeightSystem& q) {
  const std::size_t n = q.size();
  auto pool = weight_one_monomials(q);
  if (pool.size() > 20) throw std::invalid_argument("monomial pool too large to enumerate subsets");
  const auto vars = default_variables(n);
  std::vector<Polynomial> out;
  for (unsigned long mask = 1; mask < (1ul << pool.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) < n) continue;
    std::vector<Term> terms;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (mask & (1ul << k)) terms.push_back({Rational(1), pool[k]});
    }
    Polynomial p(vars, std::move(terms));
    WeightSolution sol = solve_weights(exponent_matrix(p));
    if (!sol.ok() || *sol.weights != q) continue;
    if (!is_nondegenerate(p)) continue;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
    return to_string(a) < to_string(b);
  });
  return out;
}

}  // namespace lgmk
