#include "lgmk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "lgmk/error.hpp"

namespace lgmk {

namespace {

std::vector<Term> collect(std::size_t n, std::vector<Term> terms) {
  std::map<Monomial, Rational> acc;
  for (auto& t : terms) {
    if (t.mono.size() != n) throw std::invalid_argument("monomial length does not match variable count");
    acc[t.mono] += t.coef;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({c, m});
  }
  const auto order = MonomialOrder::degrevlex(n);
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return out;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial::Polynomial(std::vector<std::string> variables, std::vector<Term> terms)
    : variables_(std::move(variables)), terms_(collect(variables_.size(), std::move(terms))) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  std::size_t n = variables.size();
  return Polynomial(std::move(variables), {{c, Monomial(n)}});
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, const Monomial& m, const Rational& c) {
  return Polynomial(std::move(variables), {{c, m}});
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d = t;
    d.coef *= t.mono[var];
    d.mono[var] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(variables_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  return Polynomial(variables_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::vector<Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial(a.variables_, std::move(all));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::vector<Term> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) all.push_back({s.coef * t.coef, s.mono * t.mono});
  }
  return Polynomial(a.variables_, std::move(all));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    bool unit = t.mono.is_one();
    if (mag != 1 || unit) {
      out += to_string(mag);
      if (!unit) out += '*';
    }
    if (!unit) out += to_string(t.mono, p.variables());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct VarKey {
  int letter_rank;
  bool indexed;
  long index;
  auto operator<=>(const VarKey&) const = default;
};

int letter_rank(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'w': return 3;
    default: return 4 + (c - 'a');
  }
}

VarKey var_key(const std::string& name) {
  VarKey k{letter_rank(name[0]), name.size() > 1, 0};
  if (k.indexed) k.index = std::stol(name.substr(1));
  // Plain letters sort before every indexed name.
  return k;
}

bool var_less(const std::string& a, const std::string& b) {
  VarKey ka = var_key(a), kb = var_key(b);
  if (ka.indexed != kb.indexed) return !ka.indexed;
  return ka < kb;
}

struct RawFactor {
  std::string var;
  int power;
};

struct RawTerm {
  Rational coef;
  std::vector<RawFactor> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty input");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(term(sign));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-' ? -1 : 1));
      skip_ws();
    }
    return terms;
  }

 private:
  RawTerm term(int sign) {
    skip_ws();
    RawTerm t{Rational(sign), {}};
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coef *= coefficient();
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') return t;
      if (peek() != '*') throw ParseError(pos_, "expected '*' after coefficient");
      ++pos_;
    }
    t.factors.push_back(factor());
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      t.factors.push_back(factor());
      skip_ws();
    }
    return t;
  }

  Rational coefficient() {
    std::size_t start = pos_;
    std::string digits = read_digits();
    skip_ws();
    std::string den = "1";
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected denominator");
      den = read_digits();
    }
    auto r = parse_rational(digits + "/" + den);
    if (!r) throw ParseError(start, "invalid coefficient");
    if (*r == 0) throw ParseError(start, "zero coefficient");
    return *r;
  }

  RawFactor factor() {
    skip_ws();
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected variable");
    std::string name(1, peek());
    ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) name += text_[pos_++];
    if (name.size() > 1 && name[1] == '0') throw ParseError(pos_ - name.size() + 1, "variable index may not start with 0");
    skip_ws();
    int power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected exponent");
      std::string digits = read_digits();
      if (digits.size() > 6) throw ParseError(at, "exponent too large");
      power = std::stoi(digits);
      if (power <= 0) throw ParseError(at, "exponent must be positive");
    }
    return {name, power};
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Polynomial assemble(const std::vector<RawTerm>& raw, const std::vector<std::string>& vars) {
  std::vector<Term> terms;
  for (const auto& rt : raw) {
    Monomial m(vars.size());
    for (const auto& f : rt.factors) {
      auto it = std::find(vars.begin(), vars.end(), f.var);
      if (it == vars.end()) throw ParseError(0, "unknown variable '" + f.var + "'");
      m[static_cast<std::size_t>(it - vars.begin())] += f.power;
    }
    terms.push_back({rt.coef, std::move(m)});
  }
  Polynomial p(vars, std::move(terms));
  if (p.is_zero()) throw ParseError(0, "polynomial is empty after collecting like terms");
  return p;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  auto raw = Parser(text).parse();
  std::vector<std::string> vars;
  for (const auto& t : raw) {
    for (const auto& f : t.factors) {
      if (std::find(vars.begin(), vars.end(), f.var) == vars.end()) vars.push_back(f.var);
    }
  }
  std::sort(vars.begin(), vars.end(), var_less);
  return assemble(raw, vars);
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return assemble(Parser(text).parse(), variables);
}

// ---------------------------------------------------------------------------
// Exponent matrices and weights

ExponentMatrix::ExponentMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("ragged exponent matrix");
  }
}

ExponentMatrix ExponentMatrix::transposed() const {
  ExponentMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  }
  return t;
}

bool ExponentMatrix::has_cross_term() const {
  for (const auto& r : rows_) {
    int ones = 0;
    bool other = false;
    for (int e : r) {
      if (e == 1) ++ones;
      else if (e != 0) other = true;
    }
    if (ones == 2 && !other) return true;
  }
  return false;
}

ExponentMatrix exponent_matrix(const Polynomial& w) {
  std::vector<std::vector<int>> rows;
  rows.reserve(w.num_terms());
  for (const auto& t : w.terms()) rows.push_back(t.mono.exponents);
  ExponentMatrix a(std::move(rows));
  if (a.rows() == 0) return ExponentMatrix(0, w.num_vars());
  return a;
}

std::vector<long> WeightSystem::integer_weights() const {
  BigInt den = 1;
  for (const auto& q : q_) den = lcm(den, q.get_den());
  std::vector<long> out;
  out.reserve(q_.size());
  for (const auto& q : q_) {
    Rational scaled = q * Rational(den);
    if (!is_integer(scaled) || scaled <= 0 || !scaled.get_num().fits_slong_p())
      throw std::invalid_argument("weights must be positive and of moderate size");
    out.push_back(scaled.get_num().get_si());
  }
  return out;
}

std::string to_string(const WeightSystem& q) { return to_string(q.values()); }

const char* weight_status_name(WeightStatus s) {
  switch (s) {
    case WeightStatus::kOk: return "Ok";
    case WeightStatus::kNonUnique: return "NonUnique";
    case WeightStatus::kNoSolution: return "NoSolution";
    case WeightStatus::kNonPositiveWeight: return "NonPositiveWeight";
    case WeightStatus::kWeightBoundViolated: return "WeightBoundViolated";
  }
  return "?";
}

namespace {

struct Echelon {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form of the given matrix.
Echelon rref(std::vector<std::vector<Rational>> m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

}  // namespace

std::size_t rank(const ExponentMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  }
  return rref(std::move(m), a.cols()).pivots.size();
}

WeightSolution solve_weights(const ExponentMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::vector<Rational>> aug(a.rows(), std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = 1;
  }
  Echelon e = rref(std::move(aug), n + 1);
  // A pivot in the augmented column means 0 = 1 somewhere.
  if (!e.pivots.empty() && e.pivots.back() == n) return {WeightStatus::kNoSolution, std::nullopt};
  if (e.pivots.size() < n || n == 0) return {WeightStatus::kNonUnique, std::nullopt};

  std::vector<Rational> q(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) q[e.pivots[r]] = e.rows[r][n];
  WeightSystem ws(std::move(q));
  for (const auto& v : ws.values()) {
    if (v <= 0) return {WeightStatus::kNonPositiveWeight, ws};
  }
  if (!a.has_cross_term()) {
    for (const auto& v : ws.values()) {
      if (v > Rational(1, 2)) return {WeightStatus::kWeightBoundViolated, ws};
    }
  }
  return {WeightStatus::kOk, ws};
}

const char* admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::kInvertible: return "Invertible";
    case Admissibility::kNoninvertible: return "Noninvertible";
    case Admissibility::kNotAdmissible: return "NotAdmissible";
  }
  return "?";
}

Rational monomial_bdegree(const Monomial& m, const WeightSystem& q) {
  if (m.size() != q.size()) throw std::invalid_argument("monomial and weight system lengths differ");
  Rational d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += q[i] * m[i];
  return 2 * d;
}

}  // namespace lgmk
