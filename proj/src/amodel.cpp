#include "lgmk/amodel.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

#include "lgmk/error.hpp"

namespace lgmk {

std::optional<Polynomial> restrict_polynomial(const Polynomial& w, const std::vector<std::size_t>& fix) {
  std::vector<std::string> vars;
  for (std::size_t i : fix) vars.push_back(w.variables().at(i));
  std::vector<Term> kept;
  for (const auto& t : w.terms()) {
    bool inside = true;
    for (std::size_t j = 0; j < t.mono.size() && inside; ++j) {
      if (t.mono[j] != 0 && std::find(fix.begin(), fix.end(), j) == fix.end()) inside = false;
    }
    if (!inside) continue;
    Monomial m(fix.size());
    for (std::size_t k = 0; k < fix.size(); ++k) m[k] = t.mono[fix[k]];
    kept.push_back({t.coef, std::move(m)});
  }
  if (kept.empty()) return std::nullopt;
  return Polynomial(std::move(vars), std::move(kept));
}

namespace {

// Invariant monomials depend on the sector only through its fixed locus.
std::vector<Monomial> invariant_monomials_on(const std::vector<std::size_t>& fix, const Polynomial& w,
                                             const WeightSystem& q, const SymmetryGroup& group,
                                             const GroebnerOptions& options) {
  const std::size_t n = w.num_vars();
  if (fix.empty()) return {Monomial(n)};
  auto restricted = restrict_polynomial(w, fix);
  if (!restricted) {
    throw Error(ErrorCode::kDegenerateRestriction,
                "restriction of " + to_string(w) + " to a nonempty fixed locus has no terms");
  }
  std::vector<Rational> sub_q;
  for (std::size_t i : fix) sub_q.push_back(q[i]);
  std::vector<Monomial> local;
  try {
    local = milnor_basis(*restricted, MonomialOrder::weighted(WeightSystem(sub_q).integer_weights()), options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotFiniteDimensional) throw;
    throw Error(ErrorCode::kDegenerateRestriction, "restriction " + to_string(*restricted) + " is degenerate");
  }

  std::vector<Monomial> out;
  for (const auto& lm : local) {
    bool invariant = true;
    for (const auto& h : group.generators()) {
      Rational s = 0;
      for (std::size_t k = 0; k < fix.size(); ++k) s += h[fix[k]] * (1 + lm[k]);
      if (!is_integer(s)) {
        invariant = false;
        break;
      }
    }
    if (!invariant) continue;
    Monomial full(n);
    for (std::size_t k = 0; k < fix.size(); ++k) full[fix[k]] = lm[k];
    out.push_back(std::move(full));
  }
  return out;
}

void require_group_for(const Polynomial& w, const WeightSystem& q, const SymmetryGroup& group) {
  if (group.ambient() != w.num_vars()) {
    throw Error(ErrorCode::kGroupNotAdmissible, "group acts on " + std::to_string(group.ambient()) +
                                                    " variables but the polynomial has " +
                                                    std::to_string(w.num_vars()));
  }
  ExponentMatrix a = exponent_matrix(w);
  for (const auto& g : group.generators()) {
    if (!is_symmetry(a, g)) {
      throw Error(ErrorCode::kGroupNotAdmissible,
                  "group element " + to_string(g) + " is not a symmetry of " + to_string(w));
    }
  }
  if (!is_admissible_group(group, q)) {
    throw Error(ErrorCode::kGroupNotAdmissible, "group does not contain J = " + to_string(q));
  }
}

}  // namespace

std::vector<Monomial> invariant_monomials(const GroupElement& g, const Polynomial& w, const SymmetryGroup& group,
                                          const GroebnerOptions& options) {
  WeightSolution sol = solve_weights(exponent_matrix(w));
  if (!sol.weights) throw Error(ErrorCode::kNotAdmissible, to_string(w) + " has no unique weights");
  return invariant_monomials_on(fixed_locus(g), w, *sol.weights, group, options);
}

Rational adegree(const GroupElement& g, const WeightSystem& q) {
  if (g.size() != q.size()) throw std::invalid_argument("group element and weights lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] - q[i];
  return Rational(static_cast<long>(fixed_locus(g).size())) + 2 * s;
}

AModel amodel(const Polynomial& w, const SymmetryGroup& group, const AModelOptions& options) {
  WeightSystem q = admissible_weights(w);
  require_group_for(w, q, group);

  std::vector<std::vector<std::size_t>> loci;
  for (const auto& g : group.elements()) {
    auto f = fixed_locus(g);
    if (std::find(loci.begin(), loci.end(), f) == loci.end()) loci.push_back(std::move(f));
  }
  std::sort(loci.begin(), loci.end());

  std::vector<std::vector<Monomial>> per_locus(loci.size());
  std::vector<std::exception_ptr> failures(loci.size());
  auto work = [&](std::size_t k) {
    try {
      per_locus[k] = invariant_monomials_on(loci[k], w, q, group, options.groebner);
    } catch (...) {
      failures[k] = std::current_exception();
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(loci.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < loci.size(); ++k) work(k);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < loci.size(); k += threads) work(k);
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  AModel out{w, q, group, {}, {}};
  for (const auto& g : group.elements()) {
    auto f = fixed_locus(g);
    std::size_t k = static_cast<std::size_t>(std::find(loci.begin(), loci.end(), f) - loci.begin());
    Rational deg = adegree(g, q);
    for (const auto& m : per_locus[k]) out.basis.push_back({m, g, deg});
  }
  const auto order = MonomialOrder::degrevlex(w.num_vars());
  std::sort(out.basis.begin(), out.basis.end(), [&](const SectorElement& a, const SectorElement& b) {
    if (a.adegree != b.adegree) return a.adegree < b.adegree;
    if (a.sector != b.sector) return a.sector < b.sector;
    return order.less(a.monomial, b.monomial);
  });
  for (const auto& e : out.basis) out.graded.add(e.adegree);
  return out;
}

bool group_weights_compare(const Polynomial& w1, const Polynomial& w2, const SymmetryGroup& group) {
  WeightSystem q1 = admissible_weights(w1);
  WeightSystem q2 = admissible_weights(w2);
  if (q1 != q2) {
    throw Error(ErrorCode::kInvalidArgument, "polynomials have different weights " + to_string(q1) + " and " +
                                                 to_string(q2));
  }
  return amodel(w1, group).graded == amodel(w2, group).graded;
}

}  // namespace lgmk
