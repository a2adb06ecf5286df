#include <gtest/gtest.h>

#include "lgmk/amodel.hpp"
#include "lgmk/error.hpp"
#include "oracle.hpp"

using namespace lgmk;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }
GroupElement e(std::vector<Rational> v) { return GroupElement(std::move(v)); }
Polynomial P(const std::string& s) { return parse_polynomial(s); }

Polynomial family_poly(int n) {
  auto s = std::to_string(n);
  return P("x^" + s + "+y^" + s + "+x^" + std::to_string(n - 1) + "*y");
}

SymmetryGroup j_group(const Polynomial& w) {
  return SymmetryGroup::generated_by(w.num_vars(), {GroupElement(admissible_weights(w).values())});
}

}  // namespace

TEST(Restrict, Examples) {
  auto w = P("x^5+y^5+x^4*y");
  EXPECT_EQ(restrict_polynomial(w, {0, 1}), w);
  EXPECT_FALSE(restrict_polynomial(w, {}).has_value());
  auto q = restrict_polynomial(P("x^2+x*y+y^2"), {0});
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(to_string(*q), "x^2");
  EXPECT_EQ(q->variables(), (std::vector<std::string>{"x"}));
}

TEST(Invariants, IdentitySectorOfFamily) {
  for (int n = 3; n <= 9; ++n) {
    auto w = family_poly(n);
    auto ms = invariant_monomials(GroupElement(2), w, j_group(w));
    EXPECT_EQ(ms.size(), static_cast<std::size_t>(n - 1)) << n;
    for (const auto& m : ms) {
      EXPECT_EQ((m[0] + m[1]) % n, n - 2);
      EXPECT_LE(m[0], n - 2);
      EXPECT_LE(m[1], n - 2);
    }
  }
}

TEST(Invariants, EmptyLocus) {
  auto w = family_poly(5);
  auto ms = invariant_monomials(e({r(2, 5), r(2, 5)}), w, j_group(w));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(ms[0].is_one());
}

TEST(Invariants, CubicIdentitySectorIsEmpty) {
  auto w = P("x^3");
  EXPECT_TRUE(invariant_monomials(GroupElement(1), w, gmax(w)).empty());
}

TEST(Adegree, Examples) {
  for (long n = 3; n <= 12; ++n) {
    WeightSystem q({r(1, n), r(1, n)});
    EXPECT_EQ(adegree(GroupElement(2), q), r(2 * (n - 2), n));
    EXPECT_EQ(adegree(e({r(n - 1, n), r(n - 1, n)}), q), r(2 * (2 * n - 4), n));
    EXPECT_EQ(adegree(e(q.values()), q), 0);
  }
}

TEST(AModel, QuinticWithJ) {
  auto w = family_poly(5);
  auto a = amodel(w, j_group(w));
  GradedDims expected;
  expected.add(r(0));
  expected.add(r(4, 5));
  expected.add(r(6, 5), 4);
  expected.add(r(8, 5));
  expected.add(r(12, 5));
  EXPECT_EQ(a.graded, expected);
  EXPECT_EQ(a.basis.size(), 8u);
}

TEST(AModel, FermatPlusFamily) {
  for (int n = 3; n <= 12; ++n) {
    auto a = amodel(family_poly(n), j_group(family_poly(n)));
    EXPECT_EQ(a.graded.total(), static_cast<std::size_t>(2 * n - 2));
    EXPECT_EQ(a.graded.top(), r(2 * (2 * n - 4), n));
  }
}

TEST(AModel, Cubic) {
  auto a = amodel(P("x^3"), gmax(P("x^3")));
  GradedDims expected;
  expected.add(r(0));
  expected.add(r(2, 3));
  EXPECT_EQ(a.graded, expected);
}

TEST(AModel, BasisOrder) {
  auto a = amodel(family_poly(5), j_group(family_poly(5)));
  for (std::size_t i = 1; i < a.basis.size(); ++i) {
    EXPECT_LE(a.basis[i - 1].adegree, a.basis[i].adegree);
    for (const auto& m : a.basis) EXPECT_EQ(m.monomial.size(), 2u);
  }
}

TEST(AModel, GroupChecks) {
  auto w = P("x^3+y^3");
  try {
    amodel(w, SymmetryGroup::trivial(2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kGroupNotAdmissible);
  }
  try {
    amodel(w, SymmetryGroup::generated_by(2, {e({r(1, 3), r(1, 3)}), e({r(1, 2), 0})}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kGroupNotAdmissible);
  }
  EXPECT_THROW(amodel(w, gmax(P("x^3"))), Error);
}

TEST(AModel, MatchesCharacterOracle) {
  for (const auto& text : oracle::invertible_corpus()) {
    auto w = P(text);
    auto q = admissible_weights(w).values();
    for (const auto& g : {gmax(w), j_group(w)}) {
      EXPECT_EQ(amodel(w, g).graded, oracle::amodel_graded(w, q, g)) << text;
    }
  }
  for (const auto& [n, row] : oracle::examples_table()) {
    for (const auto& text : row) {
      auto w = P(text);
      auto g = j_group(w);
      EXPECT_EQ(amodel(w, g).graded, oracle::amodel_graded(w, admissible_weights(w).values(), g)) << text;
    }
  }
}

TEST(GroupWeights, Examples) {
  auto j5 = SymmetryGroup::generated_by(2, {e({r(1, 5), r(1, 5)})});
  EXPECT_TRUE(group_weights_compare(P("x^5+y^5+x^4*y"), P("x^5+x^2*y^3+x*y^4"), j5));
  EXPECT_TRUE(group_weights_compare(P("x^5+y^5+x^4*y"), P("x^5+y^5+x^4*y"), j5));
  auto j4 = SymmetryGroup::generated_by(2, {e({r(1, 4), r(1, 4)})});
  EXPECT_TRUE(group_weights_compare(P("x^4+y^4+x^3*y"), P("x^4+x*y^3"), j4));
  EXPECT_THROW(group_weights_compare(P("x^4+y^4"), P("x^3+y^3"), j4), Error);
}

TEST(AModel, ThreadCountDoesNotChangeBasis) {
  auto w = P("x^3*y+y^3*z+z^3*x");
  auto g = gmax(w);
  auto one = amodel(w, g);
  for (unsigned t : {2u, 8u}) {
    AModelOptions opts;
    opts.threads = t;
    auto many = amodel(w, g, opts);
    ASSERT_EQ(many.basis.size(), one.basis.size());
    for (std::size_t i = 0; i < one.basis.size(); ++i) {
      EXPECT_EQ(many.basis[i].monomial, one.basis[i].monomial);
      EXPECT_EQ(many.basis[i].sector, one.basis[i].sector);
    }
  }
}
