#include "lgmk/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

#include "lgmk/error.hpp"

namespace lgmk {

namespace {

std::atomic<std::size_t> g_pair_budget{1'000'000};

// Working representation: terms sorted descending in the active order.
using Terms = std::vector<Term>;

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

Terms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return t;
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  Rational inv = 1 / t.front().coef;
  for (auto& term : t) term.coef *= inv;
}

struct Reducer {
  const MonomialOrder& order;
  const std::vector<Terms>& basis;  // monic

  const Terms* find_divisor(const Monomial& m) const {
    for (const auto& g : basis) {
      if (g.front().mono.divides(m)) return &g;
    }
    return nullptr;
  }

  // Full reduction of f modulo the basis.
  Terms reduce(const Terms& f) const {
    std::map<Monomial, Rational, OrderGreater> work(OrderGreater{&order});
    for (const auto& t : f) work[t.mono] += t.coef;
    Terms remainder;
    while (!work.empty()) {
      auto it = work.begin();
      if (it->second == 0) {
        work.erase(it);
        continue;
      }
      Monomial m = it->first;
      Rational c = it->second;
      work.erase(it);
      const Terms* g = find_divisor(m);
      if (!g) {
        remainder.push_back({std::move(c), std::move(m)});
        continue;
      }
      Monomial shift = m / g->front().mono;
      for (std::size_t k = 1; k < g->size(); ++k) {
        const Term& gt = (*g)[k];
        Monomial mm = gt.mono * shift;
        auto [pos, inserted] = work.try_emplace(std::move(mm));
        pos->second -= c * gt.coef;
        if (pos->second == 0) work.erase(pos);
      }
    }
    return remainder;
  }
};

Terms spoly(const Terms& f, const Terms& g, const MonomialOrder& order) {
  Monomial l = lcm(f.front().mono, g.front().mono);
  Monomial sf = l / f.front().mono;
  Monomial sg = l / g.front().mono;
  std::map<Monomial, Rational, OrderGreater> acc(OrderGreater{&order});
  for (std::size_t k = 1; k < f.size(); ++k) acc[f[k].mono * sf] += f[k].coef;
  for (std::size_t k = 1; k < g.size(); ++k) acc[g[k].mono * sg] -= g[k].coef;
  Terms out;
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({c, m});
  }
  return out;
}

Polynomial to_polynomial(const std::vector<std::string>& vars, const Terms& t) { return Polynomial(vars, t); }

}  // namespace

std::size_t default_pair_budget() { return g_pair_budget.load(); }
void set_default_pair_budget(std::size_t budget) { g_pair_budget.store(budget); }

bool GroebnerBasis::is_unit_ideal() const { return leading_.size() == 1 && leading_.front().is_one(); }

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const Monomial* best = &p.terms().front().mono;
  for (const auto& t : p.terms()) {
    if (order.greater(t.mono, *best)) best = &t.mono;
  }
  return *best;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const auto& vars = gens.front().variables();
  if (order.num_vars() != vars.size()) throw std::invalid_argument("monomial order arity does not match ring");
  for (const auto& g : gens) {
    if (g.variables() != vars) throw std::invalid_argument("generators live in different rings");
  }

  std::vector<Terms> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Terms t = sorted_terms(g, order);
    make_monic(t);
    basis.push_back(std::move(t));
  }

  GroebnerBasis result(vars, order);
  // Pairs (i, j) with i < j still to be considered.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }

  auto in_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first; ties resolved by set order.
    auto best = pending.begin();
    Monomial best_lcm = lcm(basis[best->first].front().mono, basis[best->second].front().mono);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(basis[it->first].front().mono, basis[it->second].front().mono);
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].front().mono;
    const Monomial& lj = basis[j].front().mono;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (basis[k].front().mono.divides(best_lcm) && !in_pending(i, k) && !in_pending(j, k)) chain = true;
    }
    if (chain) continue;

    if (++processed > options.pair_budget) {
      throw Error(ErrorCode::kResourceLimit,
                  "Groebner S-pair budget of " + std::to_string(options.pair_budget) + " exhausted");
    }
    Terms h = Reducer{order, basis}.reduce(spoly(basis[i], basis[j], order));
    if (h.empty()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
    std::size_t k = basis.size() - 1;
    for (std::size_t a = 0; a < k; ++a) pending.insert({a, k});
  }

  // Minimalize: drop elements whose leading monomial is divisible by another
  // (keeping the first of equal leaders).
  std::vector<Terms> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = basis[a].front().mono;
      const Monomial& lb = basis[b].front().mono;
      if (lb.divides(la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // Interreduce the tails.
  std::vector<Terms> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Terms> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    Terms tail(minimal[a].begin() + 1, minimal[a].end());
    Terms rest = Reducer{order, others}.reduce(tail);
    Terms full;
    full.push_back(minimal[a].front());
    full.insert(full.end(), rest.begin(), rest.end());
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& a, const Terms& b) { return order.less(a.front().mono, b.front().mono); });

  for (const auto& t : reduced) {
    result.leading_.push_back(t.front().mono);
    result.generators_.push_back(to_polynomial(vars, t));
  }
  result.pairs_processed_ = processed;
  return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (p.variables() != g.variables()) throw std::invalid_argument("polynomial and basis live in different rings");
  std::vector<Terms> basis;
  for (const auto& gen : g.generators()) basis.push_back(sorted_terms(gen, g.order()));
  return Polynomial(p.variables(), Reducer{g.order(), basis}.reduce(sorted_terms(p, g.order())));
}

bool is_zero_dimensional(const GroebnerBasis& g) {
  if (g.is_unit_ideal()) return true;
  std::vector<bool> covered(g.num_vars(), false);
  for (const auto& m : g.leading_monomials()) {
    int v = m.pure_power_variable();
    if (v >= 0) covered[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
  if (!is_zero_dimensional(g)) throw Error(ErrorCode::kNotFiniteDimensional, "quotient ring is not finite dimensional");
  const auto& leads = g.leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen;
  std::vector<Monomial> frontier;
  Monomial one(g.num_vars());
  if (standard(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t v = 0; v < g.num_vars(); ++v) {
      Monomial next = m;
      next[v] += 1;
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return g.order().less(a, b); });
  return out;
}

}  // namespace lgmk
