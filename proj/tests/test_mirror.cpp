#include <gtest/gtest.h>

#include <map>

#include "lgmk/error.hpp"
#include "lgmk/mirror.hpp"
#include "lgmk/serialize.hpp"
#include "oracle.hpp"

using namespace lgmk;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }
Polynomial P(const std::string& s) { return parse_polynomial(s); }
using Pair = std::pair<Rational, Rational>;

}  // namespace

TEST(Transpose, Examples) {
  EXPECT_EQ(to_string(transpose_polynomial(P("x^3+x*y^2"))), "x^3*y + y^2");
  EXPECT_EQ(transpose_polynomial(P("x^7")), P("x^7"));
  EXPECT_EQ(transpose_polynomial(P("x^2*y+x*y^3")), P("x^2*y+x*y^3"));
  EXPECT_EQ(to_string(transpose_polynomial(P("x^3*y+y^4*z+z^2*x"))), "x*y^4 + x^3*z + y*z^2");
}

TEST(Transpose, RejectsNoninvertible) {
  for (const char* text : {"x^4+y^4+x^3*y", "x^2*y", "x^4+x^2*y^2"}) {
    try {
      transpose_polynomial(P(text));
      FAIL() << text;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::kNotInvertible) << text;
    }
  }
}

TEST(MirrorCheck, Examples) {
  auto c = compare_mirror(P("x^3"));
  GradedDims expected;
  expected.add(r(0));
  expected.add(r(2, 3));
  EXPECT_EQ(c.a_side, expected);
  EXPECT_EQ(c.b_side, expected);
  EXPECT_TRUE(mirror_check(P("x^3+y^3")));
  EXPECT_TRUE(mirror_check(P("x^3+x*y^2")));
}

TEST(SolvePair, Examples) {
  auto s = solve_pair(4, r(2, 3));
  EXPECT_EQ(s.solutions, (std::vector<Pair>{{r(1, 3), r(1, 3)}}));
  EXPECT_EQ(s.discriminant, 0);

  s = solve_pair(8, r(2, 5));
  EXPECT_TRUE(s.none());
  ASSERT_TRUE(s.discriminant.has_value());
  EXPECT_LT(*s.discriminant, 0);

  s = solve_pair(1, 1);
  EXPECT_EQ(s.solutions, (std::vector<Pair>{{r(1, 2), r(1, 2)}}));
  EXPECT_TRUE(solve_pair(1, r(71, 90)).none());
}

TEST(SolvePair, FilterRejectsSmallN) {
  // n = 1: d = 0, s = 2
  auto s = solve_pair(0, 2);
  EXPECT_EQ(s.candidates, (std::vector<Pair>{{r(1), r(1)}}));
  EXPECT_TRUE(s.none());
  // n = 2: d = 2, s = 1
  s = solve_pair(2, 1);
  EXPECT_EQ(s.candidates, (std::vector<Pair>{{r(0), r(1)}}));
  EXPECT_TRUE(s.none());
}

TEST(SolvePair, QuinticQuadratic) {
  auto q = pair_quadratic_2var(5);
  EXPECT_EQ(q.a, 35);
  EXPECT_EQ(q.b, -14);
  EXPECT_EQ(q.c, 3);
  EXPECT_EQ(q.discriminant(), r(196 - 420));
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant_2var(3), 0);
  EXPECT_EQ(discriminant_2var(5), -224);
  EXPECT_EQ(discriminant_2var(1), 0);
}

TEST(Discriminant, ClosedForm) {
  for (long n = 1; n <= 200; ++n) {
    EXPECT_EQ(discriminant_2var(n), Rational(-4 * (2 * n * n * n - 11 * n * n + 18 * n - 9))) << n;
  }
}

TEST(Discriminant, AgreesWithPairSolver) {
  // n^2 times the monic discriminant of solve_pair, up to the (d - 1)^2 scaling.
  for (long n = 3; n <= 60; ++n) {
    auto s = solve_pair(2 * n - 2, r(2, n));
    ASSERT_TRUE(s.discriminant.has_value());
    Rational d1 = 2 * n - 3;
    EXPECT_EQ(*s.discriminant * d1 * d1 * n * n, discriminant_2var(n)) << n;
  }
}

TEST(ReduceToPair, Examples) {
  auto p = reduce_to_pair(8, r(12, 5), 3, {r(1, 9)});
  EXPECT_EQ(p.d_pair, 1);
  EXPECT_EQ(p.s_pair, r(71, 90));
  EXPECT_TRUE(solve_pair(p.d_pair, p.s_pair).none());

  p = reduce_to_pair(8, r(12, 5), 3, {r(1, 2)});
  EXPECT_EQ(p.d_pair, 8);
  EXPECT_EQ(p.s_pair, r(2, 5));
  EXPECT_EQ(p.a_coefficient(), -7);

  p = reduce_to_pair(6, r(4, 3), 2, {});
  EXPECT_EQ(p.d_pair, 6);
  EXPECT_EQ(p.s_pair, r(2, 3));
}

TEST(ReduceToPair, Errors) {
  try {
    reduce_to_pair(8, r(12, 5), 3, {r(1, 10)});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kTailProductTooLarge);
  }
  EXPECT_THROW(reduce_to_pair(8, r(12, 5), 3, {}), std::invalid_argument);
  EXPECT_THROW(reduce_to_pair(8, r(12, 5), 3, {r(3, 5)}), std::invalid_argument);
}

TEST(ReduceToPair, DiscriminantSignBoundary) {
  EXPECT_GE(reduce_to_pair(8, r(12, 5), 3, {r(1, 9)}).discriminant(), 0);
  EXPECT_LT(reduce_to_pair(8, r(12, 5), 3, {r(1, 8)}).discriminant(), 0);
  EXPECT_EQ(discriminant_sign_boundary(8, r(12, 5), 60), r(1, 9));
}

TEST(Search, OneVariable) {
  auto rep = search_weight_systems(8, r(12, 5), 1, 60);
  EXPECT_EQ(rep.status, SearchStatus::kNoneExact);
  EXPECT_EQ(btop_formula(WeightSystem({r(1, 9)})), r(14, 9));
  rep = search_weight_systems(8, r(14, 9), 1, 60);
  ASSERT_EQ(rep.solutions.size(), 1u);
  EXPECT_EQ(rep.solutions[0], WeightSystem({r(1, 9)}));
}

TEST(Search, TwoVariablesFermatPlusFamily) {
  for (long n = 4; n <= 20; ++n) {
    auto rep = search_weight_systems(2 * n - 2, r(2 * (2 * n - 4), n), 2, 60);
    EXPECT_EQ(rep.status, SearchStatus::kNoneExact) << n;
  }
  auto rep = search_weight_systems(4, r(4, 3), 2, 60);
  EXPECT_EQ(rep.status, SearchStatus::kSolutionsFound);
  EXPECT_EQ(rep.solutions, (std::vector<WeightSystem>{WeightSystem({r(1, 3), r(1, 3)})}));
}

TEST(Search, ThreeVariables) {
  auto rep = search_weight_systems(8, r(12, 5), 3, 60);
  EXPECT_EQ(rep.status, SearchStatus::kNoneWithinBound);
  EXPECT_EQ(rep.bound, 60);
  // x^3 + y^3 + z^3 has d = 8 and top 2
  rep = search_weight_systems(8, 2, 3, 12);
  EXPECT_EQ(rep.status, SearchStatus::kSolutionsFound);
  EXPECT_NE(std::find(rep.solutions.begin(), rep.solutions.end(), WeightSystem({r(1, 3), r(1, 3), r(1, 3)})),
            rep.solutions.end());
}

TEST(Search, PairMatchesGridOracle) {
  const long bound = 40;
  std::map<std::pair<Rational, Rational>, std::vector<Pair>> by_target;
  for (const auto& [a, b] : oracle::pair_grid(bound)) {
    by_target[{(1 / a - 1) * (1 / b - 1), 4 - 4 * (a + b)}].push_back({a, b});
  }
  std::size_t checked = 0;
  for (const auto& [target, expected] : by_target) {
    auto rep = search_weight_systems(target.first, target.second, 2, 2);
    std::vector<Pair> got;
    for (const auto& s : rep.solutions) {
      if (s[0].get_den() <= bound && s[1].get_den() <= bound) got.push_back({s[0], s[1]});
    }
    EXPECT_EQ(got, expected) << to_string(target.first) << " " << to_string(target.second);
    ++checked;
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Search, Serialization) {
  auto rep = search_weight_systems(8, 2, 3, 12);
  Json j = search_report_json(rep);
  EXPECT_EQ(j["status"], "SolutionsFound");
  EXPECT_EQ(j["target_dim"], "8");
  EXPECT_EQ(j["bound"], 12);
  auto back = search_report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.solutions, rep.solutions);
  EXPECT_EQ(back.status, rep.status);
  EXPECT_EQ(back.target_top, rep.target_top);
  EXPECT_EQ(search_report_json(back), j);

  Json empty = search_report_json(search_weight_systems(8, r(12, 5), 2, 60));
  EXPECT_EQ(empty.dump(),
            R"({"target_dim":"8","target_top":"12/5","vars":2,"bound":60,"status":"NoneExact","solutions":[]})");
}

TEST(Supports, Examples) {
  auto quartic = enumerate_admissible_supports(WeightSystem({r(1, 4), r(1, 4)}));
  std::vector<std::string> texts;
  for (const auto& p : quartic) texts.push_back(to_string(p));
  EXPECT_EQ(weight_one_monomials(WeightSystem({r(1, 4), r(1, 4)})).size(), 5u);
  for (const char* want : {"x^4+y^4+x^3*y", "x^4+x^2*y^2+x*y^3", "x^4+x*y^3"}) {
    EXPECT_NE(std::find(texts.begin(), texts.end(), to_string(P(want))), texts.end()) << want;
  }
  auto single = enumerate_admissible_supports(WeightSystem({r(1, 2)}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(to_string(single[0]), "x^2");

  auto quintic = enumerate_admissible_supports(WeightSystem({r(1, 5), r(1, 5)}));
  bool found = false;
  for (const auto& p : quintic) found = found || p == P("x^4*y+x*y^4+x^3*y^2+x^2*y^3");
  EXPECT_TRUE(found);
  for (const auto& p : quintic) EXPECT_EQ(admissible_weights(p), WeightSystem({r(1, 5), r(1, 5)}));
}

TEST(DefaultVariables, Names) {
  EXPECT_EQ(default_variables(3), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(default_variables(5)[4], "x5");
}
