// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact; the only
// tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lgmk/amodel.hpp"
#include "lgmk/cli.hpp"
#include "lgmk/error.hpp"
#include "lgmk/mirror.hpp"
#include "lgmk/serialize.hpp"
#include "oracle.hpp"

using namespace lgmk;

namespace {

constexpr double kFamilySeconds = 5.0;
constexpr double kTwoVariableSeconds = 1.0;
constexpr double kThreeVariableSeconds = 60.0;
constexpr double kMirrorSeconds = 60.0;
constexpr long kThreeVariableBound = 60;
constexpr std::size_t kMinMirrorCorpus = 30;

Rational r(long p, long q = 1) { return make_rational(p, q); }
Polynomial P(const std::string& s) { return parse_polynomial(s); }

Polynomial family_poly(long n) {
  auto s = std::to_string(n);
  return P("x^" + s + "+y^" + s + "+x^" + std::to_string(n - 1) + "*y");
}

SymmetryGroup j_group(const Polynomial& w) {
  return SymmetryGroup::generated_by(w.num_vars(), {GroupElement(admissible_weights(w).values())});
}

// Collects failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    " + f;
    return s;
  }

 private:
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  bool pass = c.ok() && in_time;
  if (!pass) ++failures;
  std::printf("criterion %2d %s  %-44s %5zu checks  %7.3f s", id, pass ? "PASS" : "FAIL", name.c_str(), c.count(),
              secs);
  if (limit_seconds > 0) std::printf(" (limit %.0f s)", limit_seconds);
  if (!detail.empty()) std::printf("  %s", detail.c_str());
  if (!in_time) std::printf("\n    time limit exceeded");
  std::printf("%s\n", c.summary().c_str());
  std::fflush(stdout);
}

std::vector<std::string> corpus_two_vars() {
  std::vector<std::string> out;
  for (const auto& t : oracle::invertible_corpus()) {
    if (P(t).num_vars() == 2) out.push_back(t);
  }
  return out;
}

std::string amodel_json(const AModel& a) {
  Json basis = Json::array();
  for (const auto& e : a.basis) {
    basis.push_back({{"sector", element_json(e.sector)},
                     {"monomial", to_string(e.monomial, a.source.variables())},
                     {"degree", rational_json(e.adegree)}});
  }
  return Json{{"basis", basis}, {"graded", graded_json(a.graded)}}.dump();
}

}  // namespace

int main() {
  criterion(1, "family: dim 2n-2, top 2(2n-4)/n, n=3..12", kFamilySeconds, [](Check& c) {
    for (long n = 3; n <= 12; ++n) {
      auto w = family_poly(n);
      auto a = amodel(w, j_group(w));
      c.expect(a.graded.total() == static_cast<std::size_t>(2 * n - 2), "n=" + std::to_string(n) + " dim");
      c.expect(a.graded.top() == r(2 * (2 * n - 4), n), "n=" + std::to_string(n) + " top");
    }
    return std::string();
  });

  criterion(2, "Gmax = <J> by Smith form and brute force", 0, [](Check& c) {
    for (long n = 3; n <= 12; ++n) {
      auto w = family_poly(n);
      auto expected = SymmetryGroup::generated_by(2, {GroupElement({r(1, n), r(1, n)})});
      c.expect(gmax(w) == expected, "snf n=" + std::to_string(n));
      c.expect(gmax_bruteforce(w, n) == expected, "brute n=" + std::to_string(n));
    }
    return std::string();
  });

  criterion(3, "two variables: NoneExact n=4..50, D(n), n=1..3", kTwoVariableSeconds, [](Check& c) {
    for (long n = 4; n <= 50; ++n) {
      auto rep = search_weight_systems(2 * n - 2, r(2 * (2 * n - 4), n), 2, 2);
      c.expect(rep.status == SearchStatus::kNoneExact && rep.solutions.empty(), "n=" + std::to_string(n));
    }
    for (long n = 1; n <= 1000; ++n) {
      c.expect(discriminant_2var(n) == Rational(-4 * (2 * n * n * n - 11 * n * n + 18 * n - 9)),
               "D n=" + std::to_string(n));
    }
    auto three = search_weight_systems(4, r(4, 3), 2, 2);
    c.expect(three.solutions == std::vector<WeightSystem>{WeightSystem({r(1, 3), r(1, 3)})}, "n=3 solution");
    using Pair = std::pair<Rational, Rational>;
    auto one = solve_pair(0, 2);
    c.expect(one.candidates == std::vector<Pair>{{r(1), r(1)}} && one.none(), "n=1 rejected");
    auto two = solve_pair(2, 1);
    c.expect(two.candidates == std::vector<Pair>{{r(0), r(1)}} && two.none(), "n=2 rejected");
    c.expect(search_weight_systems(0, -4, 2, 2).solutions.empty(), "n=1 search");
    c.expect(search_weight_systems(2, 0, 2, 2).solutions.empty(), "n=2 search");
    return std::string();
  });

  criterion(4, "d=8, top 12/5 in one, two, three variables", kThreeVariableSeconds, [](Check& c) {
    const Rational d = 8, delta = r(12, 5);
    c.expect(search_weight_systems(d, delta, 1, kThreeVariableBound).status == SearchStatus::kNoneExact, "m=1");
    auto x9 = bmodel(P("x^9"));
    c.expect(x9.graded.total() == 8 && x9.graded.top() == r(14, 9) && r(14, 9) != delta, "x^9 candidate");
    c.expect(search_weight_systems(d, delta, 2, kThreeVariableBound).status == SearchStatus::kNoneExact, "m=2");
    auto three = search_weight_systems(d, delta, 3, kThreeVariableBound);
    c.expect(three.status == SearchStatus::kNoneWithinBound && three.bound == kThreeVariableBound, "m=3");
    auto boundary = discriminant_sign_boundary(d, delta, kThreeVariableBound);
    c.expect(boundary == r(1, 9), "boundary");
    return "boundary q3 = " + (boundary ? to_string(*boundary) : std::string("none"));
  });

  criterion(5, "A(W, Gmax) = B(W^T) on invertible corpus", kMirrorSeconds, [](Check& c) {
    auto corpus = oracle::invertible_corpus();
    c.expect(corpus.size() >= kMinMirrorCorpus, "corpus size");
    for (const auto& t : corpus) c.expect(mirror_check(P(t)), t);
    return std::to_string(corpus.size()) + " polynomials";
  });

  criterion(6, "transpose group algebra", 0, [](Check& c) {
    std::size_t pairs = 0;
    for (const auto& t : oracle::invertible_corpus()) {
      auto w = P(t);
      auto wt = transpose_polynomial(w);
      auto g = gmax(w);
      auto n = w.num_vars();
      c.expect(transpose_group(SymmetryGroup::trivial(n), w) == gmax(wt), t + " {0}^T");
      c.expect(transpose_group(g, w) == SymmetryGroup::trivial(n), t + " Gmax^T");
      c.expect(transpose_group(j_group(w), w) == sl_subgroup(gmax(wt)), t + " <J>^T");
      if (n != 2) continue;
      auto lattice = subgroups_containing(g, {GroupElement(admissible_weights(w).values())});
      for (const auto& g1 : lattice) {
        auto t1 = transpose_group(g1, w);
        c.expect(transpose_group(t1, wt) == g1, t + " (G^T)^T");
        for (const auto& g2 : lattice) {
          if (!g1.is_subgroup_of(g2)) continue;
          auto t2 = transpose_group(g2, w);
          ++pairs;
          c.expect(t2.is_subgroup_of(t1), t + " inclusion");
          c.expect(g2.order() * t2.order() == g1.order() * t1.order(), t + " orders");
          c.expect(invariant_factors(g2, g1) == invariant_factors(t1, t2), t + " quotients");
        }
      }
    }
    return std::to_string(pairs) + " subgroup pairs";
  });

  criterion(7, "Bendall formula, 2 <= p,q <= 9", 0, [](Check& c) {
    std::size_t tuples = 0;
    for (long p = 2; p <= 9; ++p) {
      for (long q = 2; q <= 9; ++q) {
        for (long rr = 1; rr < p; ++rr) {
          Rational s = (1 - r(rr, p)) * q;
          if (!is_integer(s) || s < 1) continue;
          long si = s.get_num().get_si();
          auto w = P("x^" + std::to_string(p) + "+y^" + std::to_string(q) + "+x^" + std::to_string(rr) + "*y^" +
                     std::to_string(si));
          auto b = bendall_gmax(p, q, rr, si);
          c.expect(oracle::element_set(b) == oracle::element_set(gmax(w)), to_string(w));
          long m = std::gcd(q, si);
          auto alt = subgroup_generated(2, {GroupElement({r(1, p), r(1, q)}), GroupElement({r(0), r(1, m)})});
          c.expect(alt == b, to_string(w) + " alternative generators");
          ++tuples;
        }
      }
    }
    return std::to_string(tuples) + " tuples";
  });

  criterion(8, "Milnor dim and top degree formulas", 0, [](Check& c) {
    auto corpus = oracle::invertible_corpus();
    for (const auto& [n, row] : oracle::examples_table()) corpus.insert(corpus.end(), row.begin(), row.end());
    for (const auto& t : corpus) {
      auto w = P(t);
      auto q = admissible_weights(w);
      auto basis = milnor_basis(w);
      Rational top = 0;
      for (const auto& m : basis) top = std::max(top, monomial_bdegree(m, q));
      c.expect(Rational(static_cast<long>(basis.size())) == bdim_formula(q), t + " dim");
      c.expect(top == btop_formula(q), t + " top");
    }
    return std::to_string(corpus.size()) + " polynomials";
  });

  criterion(9, "Group-Weights on table rows n=4..7", 0, [](Check& c) {
    std::size_t pairs = 0;
    for (const auto& [n, row] : oracle::examples_table()) {
      auto j = SymmetryGroup::generated_by(2, {GroupElement({r(1, n), r(1, n)})});
      for (std::size_t a = 0; a < row.size(); ++a) {
        for (std::size_t b = a + 1; b < row.size(); ++b) {
          c.expect(group_weights_compare(P(row[a]), P(row[b]), j), row[a] + " vs " + row[b]);
          ++pairs;
        }
      }
    }
    return std::to_string(pairs) + " pairs";
  });

  criterion(10, "identical output on 1, 2 and 8 threads", 0, [](Check& c) {
    struct Search {
      const char *dim, *top;
      int vars;
      long bound;
    };
    for (const auto& s : {Search{"8", "12/5", 3, 60}, Search{"8", "2", 3, 40}, Search{"8", "2", 4, 16},
                          Search{"16", "8/3", 3, 40}}) {
      std::string base = cli::to_json(cli::cmd_search(s.dim, s.top, s.vars, s.bound, 1)).dump();
      for (unsigned t : {2u, 8u}) {
        c.expect(cli::to_json(cli::cmd_search(s.dim, s.top, s.vars, s.bound, t)).dump() == base,
                 std::string("search ") + s.dim + " " + s.top + " threads " + std::to_string(t));
      }
    }
    std::string tables = cli::to_json(cli::cmd_paper_tables(30, 1)).dump();
    for (unsigned t : {2u, 8u}) {
      c.expect(cli::to_json(cli::cmd_paper_tables(30, t)).dump() == tables, "paper-tables");
    }
    for (const char* t : {"x^3*y+y^3*z+z^3*x", "x^7+y^7+x^6*y", "x^2+x*y^3+y*z^5"}) {
      auto w = P(t);
      for (const auto& g : {gmax(w), j_group(w)}) {
        std::string base = amodel_json(amodel(w, g));
        for (unsigned k : {2u, 8u}) {
          AModelOptions opts;
          opts.threads = k;
          c.expect(amodel_json(amodel(w, g, opts)) == base, std::string("amodel ") + t);
        }
      }
    }
    return std::string();
  });

  std::printf("%s\n", failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed");
  return failures == 0 ? 0 : 1;
}
