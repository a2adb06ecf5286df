#include "lgmk/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lgmk/error.hpp"
#include "lgmk/mirror.hpp"

namespace lgmk {

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::vector<Rational> phases) : phases_(std::move(phases)) {
  for (auto& p : phases_) p = frac(p);
}

bool GroupElement::is_identity() const {
  return std::all_of(phases_.begin(), phases_.end(), [](const Rational& p) { return p == 0; });
}

BigInt GroupElement::order() const {
  BigInt o = 1;
  for (const auto& p : phases_) o = lcm(o, p.get_den());
  return o;
}

Rational GroupElement::phase_sum() const {
  Rational s = 0;
  for (const auto& p : phases_) s += p;
  return s;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("group elements of different length");
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return GroupElement(std::move(out));
}

GroupElement operator-(const GroupElement& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return GroupElement(std::move(out));
}

GroupElement operator*(long k, const GroupElement& g) {
  std::vector<Rational> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] * k;
  return GroupElement(std::move(out));
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::lexicographical_compare(a.phases_.begin(), a.phases_.end(), b.phases_.begin(), b.phases_.end());
}

std::string to_string(const GroupElement& g) { return to_string(g.phases()); }

// ---------------------------------------------------------------------------
// SymmetryGroup

SymmetryGroup SymmetryGroup::trivial(std::size_t n) { return generated_by(n, {}); }

SymmetryGroup SymmetryGroup::generated_by(std::size_t n, std::vector<GroupElement> gens) {
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("generator length does not match ambient dimension");
  }
  std::set<GroupElement> seen{GroupElement(n)};
  std::vector<GroupElement> frontier{GroupElement(n)};
  while (!frontier.empty()) {
    GroupElement x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      GroupElement y = x + g;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  SymmetryGroup out;
  out.ambient_ = n;
  std::vector<GroupElement> kept;
  for (auto& g : gens) {
    if (!g.is_identity()) kept.push_back(std::move(g));
  }
  out.generators_ = std::move(kept);
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

SymmetryGroup SymmetryGroup::from_elements(std::size_t n, std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SymmetryGroup out;
  out.ambient_ = n;
  out.elements_ = elements;
  // Greedy generating set: add an element whenever it is not yet reached.
  SymmetryGroup span = trivial(n);
  for (const auto& e : elements) {
    if (span.contains(e)) continue;
    out.generators_.push_back(e);
    span = generated_by(n, out.generators_);
  }
  if (span.order() != out.elements_.size()) throw std::invalid_argument("element list is not a group");
  return out;
}

bool SymmetryGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SymmetryGroup::is_subgroup_of(const SymmetryGroup& other) const {
  if (ambient_ != other.ambient_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const GroupElement& g) { return other.contains(g); });
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

using Matrix = SmithForm::Matrix;

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_a += k * row_b (on D and U).
void add_row(Matrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += k * m[b][j];
}

void add_col(Matrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  for (auto& row : m) row[a] += k * row[b];
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const ExponentMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s;
  s.d.assign(m, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.d[i][j] = a(i, j);
  }
  s.u = identity(m);
  s.v = identity(n);
  Matrix& d = s.d;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d[i][j] != 0 && (pi == m || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) break;
      std::swap(d[t], d[pi]);
      std::swap(s.u[t], s.u[pi]);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        BigInt q = floor_div(d[i][t], d[t][t]);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        BigInt q = floor_div(d[t][j], d[t][t]);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, 1);
            add_row(s.u, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
  }
  for (std::size_t t = 0; t < std::min(m, n); ++t) s.diagonal.push_back(d[t][t]);
  return s;
}

// ---------------------------------------------------------------------------
// Maximal groups

bool is_symmetry(const ExponentMatrix& a, const GroupElement& g) {
  if (g.size() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += g[j] * a(i, j);
    if (!is_integer(s)) return false;
  }
  return true;
}

SymmetryGroup gmax(const ExponentMatrix& a) {
  const std::size_t n = a.cols();
  SmithForm s = smith_normal_form(a);
  // With h = V^{-1} g the condition is d_i h_i in Z, so h_i = k / d_i.
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= s.diagonal.size() || s.diagonal[i] == 0) {
      throw Error(ErrorCode::kInfiniteGroup, "exponent matrix has rank below the number of variables");
    }
    if (s.diagonal[i] == 1) continue;
    std::vector<Rational> phases(n);
    for (std::size_t r = 0; r < n; ++r) phases[r] = make_rational(s.v[r][i], s.diagonal[i]);
    GroupElement g(std::move(phases));
    // Smallest generator of the same cyclic factor.
    GroupElement best = g;
    const long d = s.diagonal[i].get_si();
    for (long k = 2; k < d; ++k) {
      if (std::gcd(k, d) == 1 && k * g < best) best = k * g;
    }
    gens.push_back(std::move(best));
  }
  return SymmetryGroup::generated_by(n, std::move(gens));
}

SymmetryGroup gmax(const Polynomial& w) { return gmax(exponent_matrix(w)); }

SymmetryGroup gmax_bruteforce(const Polynomial& w, long denominator_bound) {
  if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be positive");
  ExponentMatrix a = exponent_matrix(w);
  const std::size_t n = a.cols();
  std::vector<long> k(n, 0);
  std::vector<GroupElement> found;
  while (true) {
    std::vector<Rational> phases(n);
    for (std::size_t i = 0; i < n; ++i) phases[i] = make_rational(k[i], denominator_bound);
    GroupElement g(std::move(phases));
    if (is_symmetry(a, g)) found.push_back(std::move(g));
    std::size_t i = 0;
    while (i < n && ++k[i] == denominator_bound) k[i++] = 0;
    if (i == n) break;
  }
  return SymmetryGroup::from_elements(n, std::move(found));
}

SymmetryGroup subgroup_generated(std::size_t n, const std::vector<GroupElement>& gens) {
  return SymmetryGroup::generated_by(n, gens);
}

bool is_admissible_group(const SymmetryGroup& g, const WeightSystem& q) {
  if (q.size() != g.ambient()) return false;
  return g.contains(GroupElement(q.values()));
}

SymmetryGroup sl_subgroup(const SymmetryGroup& g) {
  std::vector<GroupElement> keep;
  for (const auto& e : g.elements()) {
    if (is_integer(e.phase_sum())) keep.push_back(e);
  }
  return SymmetryGroup::from_elements(g.ambient(), std::move(keep));
}

SymmetryGroup transpose_group(const SymmetryGroup& g, const Polynomial& w) {
  ExponentMatrix a = transpose_ready_matrix(w);
  const std::size_t n = a.cols();
  if (g.ambient() != n) throw std::invalid_argument("group and polynomial have different ambient dimension");
  SymmetryGroup dual_max = gmax(transpose_polynomial(w));
  // Bilinear form is bilinear, so generators of G suffice.
  const auto& test = g.generators();
  std::vector<GroupElement> keep;
  for (const auto& x : dual_max.elements()) {
    bool ok = true;
    for (const auto& h : test) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s += x[i] * a(i, j) * h[j];
      }
      if (!is_integer(s)) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(x);
  }
  return SymmetryGroup::from_elements(n, std::move(keep));
}

std::vector<std::size_t> fixed_locus(const GroupElement& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) out.push_back(i);
  }
  return out;
}

SymmetryGroup bendall_gmax(long p, long q, long r, long s) {
  if (p <= 0 || q <= 0 || r <= 0 || s <= 0) throw Error(ErrorCode::kWeightCondition, "exponents must be positive");
  if (make_rational(r, p) + make_rational(s, q) != 1) {
    throw Error(ErrorCode::kWeightCondition, "x^r y^s does not have the weights of x^p + y^q (r/p + s/q != 1)");
  }
  long n = std::gcd(p, r);
  return SymmetryGroup::generated_by(
      2, {GroupElement({make_rational(1, p), make_rational(1, q)}), GroupElement({make_rational(1, n), Rational(0)})});
}

// ---------------------------------------------------------------------------
// Structure of finite Abelian quotients

namespace {

std::vector<unsigned long> prime_factors(unsigned long x) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

std::vector<BigInt> invariant_factors(const SymmetryGroup& g, const SymmetryGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("quotient by a non-subgroup");
  BigInt exponent = 1;
  for (const auto& e : g.elements()) exponent = lcm(exponent, e.order());
  if (!exponent.fits_ulong_p()) throw std::overflow_error("group exponent too large");
  const std::size_t hsize = h.order();

  // |Q[k]| = #{x in G : k x in H} / |H|
  auto killed = [&](long k) {
    std::size_t c = 0;
    for (const auto& e : g.elements()) c += h.contains(k * e) ? 1 : 0;
    return c / hsize;
  };

  // Per prime: exponents of the cyclic p-factors, descending.
  std::vector<std::vector<unsigned long>> prime_powers;
  for (unsigned long p : prime_factors(exponent.get_ui())) {
    std::vector<std::size_t> rank_at;  // rank_at[k] = log_p |Q[p^k]|
    long pk = 1;
    std::size_t prev_size = 1;
    rank_at.push_back(0);
    while (true) {
      pk *= static_cast<long>(p);
      std::size_t size = killed(pk);
      if (size == prev_size) break;
      std::size_t r = 0;
      for (std::size_t s = size; s > 1; s /= p) ++r;
      rank_at.push_back(r);
      prev_size = size;
    }
    // Number of factors with exponent >= k is rank_at[k] - rank_at[k-1].
    std::vector<unsigned long> powers;
    const std::size_t top = rank_at.size() - 1;
    for (std::size_t k = top; k >= 1; --k) {
      std::size_t at_least_k = rank_at[k] - rank_at[k - 1];
      std::size_t at_least_next = k < top ? rank_at[k + 1] - rank_at[k] : 0;
      unsigned long val = 1;
      for (std::size_t e = 0; e < k; ++e) val *= p;
      for (std::size_t c = at_least_next; c < at_least_k; ++c) powers.push_back(val);
    }
    prime_powers.push_back(std::move(powers));
  }

  std::size_t count = 0;
  for (const auto& pp : prime_powers) count = std::max(count, pp.size());
  std::vector<BigInt> out(count, 1);
  for (const auto& pp : prime_powers) {
    for (std::size_t i = 0; i < pp.size(); ++i) out[i] *= pp[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<BigInt> invariant_factors(const SymmetryGroup& g) {
  return invariant_factors(g, SymmetryGroup::trivial(g.ambient()));
}

std::vector<SymmetryGroup> subgroups_containing(const SymmetryGroup& g, const std::vector<GroupElement>& base) {
  SymmetryGroup start = SymmetryGroup::generated_by(g.ambient(), base);
  if (!start.is_subgroup_of(g)) throw std::invalid_argument("base elements are not in the group");
  std::map<std::vector<GroupElement>, SymmetryGroup> found{{start.elements(), start}};
  std::vector<SymmetryGroup> frontier{start};
  while (!frontier.empty()) {
    SymmetryGroup s = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& e : g.elements()) {
      if (s.contains(e)) continue;
      std::vector<GroupElement> gens = s.generators();
      gens.push_back(e);
      SymmetryGroup bigger = SymmetryGroup::generated_by(g.ambient(), std::move(gens));
      if (found.emplace(bigger.elements(), bigger).second) frontier.push_back(bigger);
    }
  }
  std::vector<SymmetryGroup> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const SymmetryGroup& a, const SymmetryGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace lgmk
