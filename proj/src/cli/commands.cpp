#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "lgmk/cli.hpp"

namespace lgmk::cli {

Json to_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  out["inputs"] = r.inputs;
  out["payload"] = r.payload;
  out["warnings"] = r.warnings;
  return out;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.payload = j.at("payload");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + ")";
  }
  return j.dump();
}

bool is_flat(const Json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e); });
}

// Every row an object with the same keys and flat values.
bool is_table(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_object()) return false;
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  for (const auto& row : j) {
    if (!row.is_object() || row.size() != keys.size()) return false;
    std::size_t i = 0;
    for (const auto& [k, v] : row.items()) {
      if (k != keys[i++] || !is_flat(v)) return false;
    }
  }
  return true;
}

void render_table(const Json& rows, const std::string& indent, std::ostream& out) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows[0].items()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells{keys};
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : keys) line.push_back(scalar_text(row[k]));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string s = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << s << "\n";
  }
}

void render_value(const std::string& key, const Json& v, const std::string& indent, std::ostream& out) {
  if (is_flat(v)) {
    out << indent << key << ": " << scalar_text(v) << "\n";
  } else if (is_table(v)) {
    out << indent << key << ":\n";
    render_table(v, indent + "  ", out);
  } else if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, e] : v.items()) render_value(k, e, indent + "  ", out);
  } else {
    out << indent << key << ":\n";
    std::size_t i = 0;
    for (const auto& e : v) render_value("[" + std::to_string(i++) + "]", e, indent + "  ", out);
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.inputs.items()) render_value(k, v, "", out);
  for (const auto& [k, v] : r.payload.items()) render_value(k, v, "", out);
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Commands

namespace {

Json matrix_json(const ExponentMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rows;
}

Polynomial admissible_input(const std::string& text) {
  Polynomial w = parse_polynomial(text);
  admissible_weights(w);
  return w;
}

Json classification_json(const Classification& c) {
  Json out;
  out["classification"] = admissibility_name(c.kind);
  out["reason"] = c.reason;
  out["weight_status"] = weight_status_name(c.weight_status);
  out["weights"] = c.weights ? weights_json(*c.weights) : Json(nullptr);
  out["nondegenerate"] = c.nondegenerate ? Json(*c.nondegenerate) : Json(nullptr);
  return out;
}

}  // namespace

SymmetryGroup parse_group_spec(std::string_view spec, const Polynomial& w) {
  const std::size_t n = w.num_vars();
  if (spec == "max") return gmax(w);
  if (spec == "0") return SymmetryGroup::trivial(n);
  if (spec == "J" || spec == "sl") {
    WeightSystem q = admissible_weights(w);
    if (spec == "J") return SymmetryGroup::generated_by(n, {GroupElement(q.values())});
    return sl_subgroup(gmax(w));
  }
  std::vector<GroupElement> gens;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = std::min(spec.find(';', pos), spec.size());
    std::string_view vec = spec.substr(pos, end - pos);
    std::vector<Rational> phases;
    std::size_t p = 0;
    while (p <= vec.size()) {
      std::size_t e = std::min(vec.find(',', p), vec.size());
      auto r = parse_rational(vec.substr(p, e - p));
      if (!r) throw ParseError(pos + p, "expected a rational phase in group spec '" + std::string(spec) + "'");
      phases.push_back(*r);
      p = e + 1;
    }
    if (phases.size() != n) {
      throw ParseError(pos, "group generator has " + std::to_string(phases.size()) + " phases, expected " +
                                std::to_string(n));
    }
    gens.emplace_back(std::move(phases));
    pos = end + 1;
  }
  return SymmetryGroup::generated_by(n, std::move(gens));
}

Report cmd_weights(const std::string& poly) {
  Report r{"weights", {{"input", poly}}, {}, {}};
  Polynomial w = parse_polynomial(poly);
  r.payload["polynomial"] = to_string(w);
  r.payload["variables"] = w.variables();
  r.payload["exponent_matrix"] = matrix_json(exponent_matrix(w));
  r.payload.update(classification_json(classify(w)));
  return r;
}

Report cmd_gmax(const std::string& poly, bool with_elements) {
  Report r{"gmax", {{"input", poly}}, {}, {}};
  Polynomial w = admissible_input(poly);
  r.payload["polynomial"] = to_string(w);
  r.payload["weights"] = weights_json(admissible_weights(w));
  r.payload["group"] = group_json(gmax(w), with_elements);
  return r;
}

Report cmd_amodel(const std::string& poly, const std::string& group_spec, bool with_elements) {
  Report r{"amodel", {{"input", poly}, {"group", group_spec}}, {}, {}};
  Polynomial w = admissible_input(poly);
  SymmetryGroup g = parse_group_spec(group_spec, w);
  AModel a = amodel(w, g);
  r.payload["polynomial"] = to_string(w);
  r.payload["weights"] = weights_json(a.weights);
  r.payload["group"] = group_json(g, with_elements);
  Json basis = Json::array();
  for (const auto& e : a.basis) {
    basis.push_back({{"sector", element_json(e.sector)},
                     {"monomial", to_string(e.monomial, w.variables())},
                     {"degree", rational_json(e.adegree)}});
  }
  r.payload["basis"] = basis;
  r.payload["graded"] = graded_json(a.graded);
  r.payload["dim"] = a.graded.total();
  r.payload["top"] = a.graded.top() ? rational_json(*a.graded.top()) : Json(nullptr);
  return r;
}

Report cmd_bmodel(const std::string& poly) {
  Report r{"bmodel", {{"input", poly}}, {}, {}};
  Polynomial w = admissible_input(poly);
  BModel b = bmodel(w);
  r.payload["polynomial"] = to_string(w);
  r.payload["weights"] = weights_json(b.weights);
  Json basis = Json::array();
  for (const auto& m : b.basis) {
    basis.push_back({{"monomial", to_string(m, w.variables())}, {"degree", rational_json(monomial_bdegree(m, b.weights))}});
  }
  r.payload["basis"] = basis;
  r.payload["graded"] = graded_json(b.graded);
  r.payload["dim"] = b.graded.total();
  r.payload["dim_formula"] = rational_json(bdim_formula(b.weights));
  r.payload["top"] = rational_json(*b.graded.top());
  r.payload["top_formula"] = rational_json(btop_formula(b.weights));
  return r;
}

Report cmd_mirror_check(const std::string& poly) {
  Report r{"mirror-check", {{"input", poly}}, {}, {}};
  Polynomial w = parse_polynomial(poly);
  MirrorComparison m = compare_mirror(w);
  r.payload["polynomial"] = to_string(w);
  r.payload["transpose"] = to_string(m.transpose);
  r.payload["a_model"] = graded_json(m.a_side);
  r.payload["b_model"] = graded_json(m.b_side);
  r.payload["equal"] = m.equal;
  return r;
}

namespace {

Rational parse_rational_arg(const std::string& text, const char* what) {
  auto r = parse_rational(text);
  if (!r) throw ParseError(0, std::string("invalid rational for ") + what + ": '" + text + "'");
  return *r;
}

// n with d = 2n - 2 and delta = 2(2n - 4)/n, if any.
std::optional<long> lemma_family(const Rational& d, const Rational& delta) {
  Rational n = (d + 2) / 2;
  if (!is_integer(n) || n < 1) return std::nullopt;
  if (delta != 2 * (2 * n - 4) / n) return std::nullopt;
  return n.get_num().get_si();
}

const char* const kBoundWarning = "nonexistence for three or more variables is relative to the denominator bound";

}  // namespace

Report cmd_search(const std::string& dim, const std::string& top, int vars, long bound, unsigned threads) {
  Report r{"search", {{"dim", dim}, {"top", top}, {"vars", vars}, {"bound", bound}}, {}, {}};
  Rational d = parse_rational_arg(dim, "dim");
  Rational delta = parse_rational_arg(top, "top");
  if (vars < 1) throw Error(ErrorCode::kInvalidArgument, "vars must be at least 1");
  if (bound < 2) throw Error(ErrorCode::kInvalidArgument, "bound must be at least 2");
  SearchReport report = search_weight_systems(d, delta, vars, bound, {threads});
  r.payload = search_report_json(report);
  if (vars == 2) {
    if (auto n = lemma_family(d, delta)) {
      r.payload["discriminant"] = rational_json(discriminant_2var(*n));
      r.payload["discriminant_form"] = "n(2n-3) q^2 + 2(3-2n) q + (n-2), n = " + std::to_string(*n);
    } else {
      Rational s = (4 - delta) / 4;
      r.payload["discriminant"] = rational_json((d - 1) * ((d - 1) * s * s - 4 * (1 - s)));
      r.payload["discriminant_form"] = "(d-1) q^2 - (d-1) s q + (1-s), s = (4-top)/4";
    }
    auto pair = solve_pair(d, (4 - delta) / 4);
    r.payload["pair_discriminant"] = pair.discriminant ? rational_json(*pair.discriminant) : Json(nullptr);
  }
  if (vars == 3) {
    auto b = d >= 1 ? discriminant_sign_boundary(d, delta, bound) : std::nullopt;
    r.payload["discriminant_boundary"] = b ? rational_json(*b) : Json(nullptr);
  }
  if (vars >= 3) r.warnings.push_back(kBoundWarning);
  return r;
}

Report cmd_paper_tables(long bound, unsigned threads) {
  Report r{"paper-tables", {{"bound", bound}}, {}, {}};
  Json lemma = Json::array();
  Json matrix = Json::array();
  Json cells = Json::array();
  for (long n = 4; n <= 12; ++n) {
    Polynomial w = parse_polynomial("x^" + std::to_string(n) + "+y^" + std::to_string(n) + "+x^" +
                                    std::to_string(n - 1) + "*y");
    WeightSystem q = admissible_weights(w);
    AModel a = amodel(w, SymmetryGroup::generated_by(2, {GroupElement(q.values())}));
    Rational d(2 * n - 2);
    Rational delta = make_rational(2 * (2 * n - 4), n);
    lemma.push_back({{"n", n},
                     {"dim", a.graded.total()},
                     {"dim_formula", rational_json(d)},
                     {"top", rational_json(*a.graded.top())},
                     {"top_formula", rational_json(delta)}});
    Json row{{"n", n}};
    for (int m = 1; m <= 3; ++m) {
      SearchReport s = search_weight_systems(d, delta, m, bound, {threads});
      const char* mark = s.solutions.empty() ? "X" : "found";
      row["m" + std::to_string(m)] = mark;
      cells.push_back({{"n", n}, {"m", m}, {"status", search_status_name(s.status)}, {"mark", mark}});
    }
    matrix.push_back(row);
  }
  r.payload["lemma"] = lemma;
  r.payload["conclusion"] = matrix;
  r.payload["cells"] = cells;
  r.warnings.push_back(kBoundWarning);
  return r;
}

// ---------------------------------------------------------------------------
// Entry point

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return 2;
    case ErrorCode::kNotAdmissible: return 3;
    case ErrorCode::kGroupNotAdmissible: return 4;
    case ErrorCode::kNotInvertible: return 5;
    case ErrorCode::kResourceLimit: return 6;
    default: return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau-Ginzburg A- and B-models for quasihomogeneous polynomials", "lgmk"};
  app.require_subcommand(1);
  bool json = false;
  unsigned threads = 1;
  long bound = 60;
  bool elements = false;
  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_option("--threads", threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));
  app.add_option("--bound", bound, "Denominator bound for searches in three or more variables")
      ->check(CLI::Range(2l, 100000l));
  app.add_flag("--elements", elements, "List every group element");

  std::string poly, group_spec = "max", dim, top;
  int vars = 2;
  auto* weights = app.add_subcommand("weights", "Weights, classification and nondegeneracy");
  weights->add_option("polynomial", poly)->required();
  auto* gmax_cmd = app.add_subcommand("gmax", "Maximal diagonal symmetry group");
  gmax_cmd->add_option("polynomial", poly)->required();
  auto* amodel_cmd = app.add_subcommand("amodel", "A-model state space for a group: max, J, sl, 0 or a/b,c/d;...");
  amodel_cmd->add_option("polynomial", poly)->required();
  amodel_cmd->add_option("group", group_spec);
  auto* bmodel_cmd = app.add_subcommand("bmodel", "Unorbifolded B-model (Milnor ring)");
  bmodel_cmd->add_option("polynomial", poly)->required();
  auto* mirror = app.add_subcommand("mirror-check", "Compare A with maximal group against B of the transpose");
  mirror->add_option("polynomial", poly)->required();
  auto* search = app.add_subcommand("search", "Weight systems with given B-model dimension and top degree");
  search->add_option("dim", dim)->required();
  search->add_option("top", top)->required();
  search->add_option("vars", vars)->required();
  auto* tables = app.add_subcommand("paper-tables", "Dimension and nonexistence tables for n = 4..12");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (const char* env = std::getenv("LGMK_PAIR_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (*env == '\0' || *end != '\0' || v == 0) {
        throw ParseError(0, std::string("LGMK_PAIR_BUDGET must be a positive integer, got '") + env + "'");
      }
      set_default_pair_budget(static_cast<std::size_t>(v));
    }
    Report report;
    if (*weights) report = cmd_weights(poly);
    else if (*gmax_cmd) report = cmd_gmax(poly, elements);
    else if (*amodel_cmd) report = cmd_amodel(poly, group_spec, elements);
    else if (*bmodel_cmd) report = cmd_bmodel(poly);
    else if (*mirror) report = cmd_mirror_check(poly);
    else if (*search) report = cmd_search(dim, top, vars, bound, threads);
    else if (*tables) report = cmd_paper_tables(bound, threads);
    if (json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      out << render_text(report);
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lgmk::cli
