#include "lgmk/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgmk {

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

int Monomial::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.exponents[i] -= b.exponents[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exponents[i] != 0 && b.exponents[i] != 0) return false;
  }
  return true;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) { return MonomialOrder(std::vector<long>(n, 1), true); }

MonomialOrder MonomialOrder::weighted(std::vector<long> weights) {
  for (long w : weights) {
    if (w <= 0) throw std::invalid_argument("monomial order weights must be positive");
  }
  bool unit = std::all_of(weights.begin(), weights.end(), [](long w) { return w == 1; });
  return MonomialOrder(std::move(weights), unit);
}

long MonomialOrder::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights_[i] * m[i];
  return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  long da = weighted_degree(a);
  long db = weighted_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Reverse lex: the monomial with the smaller exponent in the last
  // differing variable is the larger one.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace lgmk
