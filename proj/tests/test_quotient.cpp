#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "orbikit/invariants.hpp"
#include "orbikit/quotient.hpp"
#include "support/oracles.hpp"

namespace orbikit {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

std::int64_t euler(const HodgeDiamond& d) {
  std::int64_t chi = 0;
  for (const auto& [key, h] : d.entries()) chi += ((key.first + key.second).numerator() % 2 == 0) ? h : -h;
  return chi;
}

TEST(ProjectiveQuotient, P2ModZ3) {
  auto p = build_projective_quotient({2, {3}, {{0, 1, 2}}});
  ASSERT_EQ(p.components().size(), 7u);
  int points = 0;
  for (const auto& c : p.components()) {
    if (c.untwisted()) {
      EXPECT_EQ(c.coarse_diamond(), projective_space_diamond(2));
      continue;
    }
    ++points;
    EXPECT_EQ(c.order(), 3);
    EXPECT_EQ(c.coarse_diamond().dim(), 0);
    EXPECT_EQ(age(c), Grade(1));
  }
  EXPECT_EQ(points, 6);
  EXPECT_TRUE(is_gorenstein(p));
  EXPECT_EQ(assemble_diamond(p), testing::p2_mu3_diamond());
}

TEST(ProjectiveQuotient, HandEnumeratedEigenspaces) {
  // g = 1 on P^2 with weights (0,1,2): eigenvalues 0,1,2 mod 3, so at the
  // point of eigenvalue chi the tangent exponents are {1-chi, 2-chi} \ {0} mod 3.
  const auto fixed = enumerate_fixed_components({2, {3}, {{0, 1, 2}}});
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> got;
  for (const auto& f : fixed)
    if (f.element_index != 0) got[{f.element_index, f.eigenvalue}] = f.component.exponents();
  const std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> expected{
      {{1, 0}, {1, 2}}, {{1, 1}, {2, 1}}, {{1, 2}, {1, 2}},
      {{2, 0}, {2, 1}}, {{2, 1}, {2, 1}}, {{2, 2}, {1, 2}}};
  EXPECT_EQ(got, expected);
}

TEST(ProjectiveQuotient, Errors) {
  EXPECT_EQ(kind_of([] { build_projective_quotient({1, {2}, {{0, 1}}}); }),
            ErrorKind::PseudoReflection);
  EXPECT_EQ(kind_of([] { build_projective_quotient({2, {3}, {{1, 1, 1}}}); }),
            ErrorKind::ScalarAction);
  // Z/2 x Z/2 where the product acts as the identity projectively.
  EXPECT_EQ(kind_of([] { build_projective_quotient({3, {2, 2}, {{0, 0, 1, 1}, {1, 1, 0, 0}}}); }),
            ErrorKind::ScalarAction);
  EXPECT_EQ(kind_of([] { build_projective_quotient({2, {2}, {{0, 0, 1}}}); }),
            ErrorKind::PseudoReflection);
  EXPECT_EQ(kind_of([] {
              ProjectiveQuotientSpec s{3, {101, 101}, {{0, 1, 2, 3}, {0, 2, 1, 5}}};
              build_projective_quotient(s);
            }),
            ErrorKind::GroupTooLarge);
  EXPECT_EQ(kind_of([] { build_projective_quotient({2, {3}, {{0, 1}}}); }),
            ErrorKind::InvalidArgument);
}

TEST(ProjectiveQuotient, TrivialGroupGivesProjectiveSpace) {
  for (int n = 1; n <= 5; ++n) {
    auto p = build_projective_quotient({n, {}, {}});
    ASSERT_EQ(p.components().size(), 1u);
    EXPECT_EQ(assemble_diamond(p), projective_space_diamond(n));
  }
}

struct Case {
  int n;
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> weights;
};

std::vector<Case> valid_cases() {
  return {
      {2, {3}, {{0, 1, 2}}},
      {2, {5}, {{0, 1, 3}}},
      {2, {7}, {{0, 1, 3}}},
      {3, {2}, {{0, 0, 1, 1}}},
      {3, {4}, {{0, 1, 2, 3}}},
      {3, {5}, {{0, 1, 2, 3}}},
      {3, {2, 2}, {{0, 0, 1, 1}, {0, 1, 0, 1}}},
      {4, {5}, {{0, 1, 2, 3, 4}}},
      {4, {3, 3}, {{0, 0, 1, 1, 2}, {0, 1, 0, 2, 1}}},
      {4, {6}, {{0, 1, 2, 3, 5}}},
  };
}

TEST(ProjectiveQuotient, EulerNumberMatchesEigenspaceCount) {
  for (const auto& c : valid_cases()) {
    auto p = build_projective_quotient({c.n, c.orders, c.weights});
    std::int64_t sum = 0;
    for (const auto& s : p.components()) sum += euler(s.coarse_diamond());
    EXPECT_EQ(sum, testing::projective_quotient_euler(c.n, c.orders, c.weights));
    // All sector classes live in even degree, so stringy E at (1,1) sums to the same.
    std::int64_t e = 0;
    const auto poly = stringy_e(p);
    for (const auto& [key, coeff] : poly.terms()) e += coeff;
    EXPECT_EQ(e, sum);
  }
}

TEST(ProjectiveQuotient, GeneratedDiamondsAreSymmetricAndColumnsAgree) {
  for (const auto& c : valid_cases()) {
    auto p = build_projective_quotient({c.n, c.orders, c.weights});
    auto d = assemble_diamond(p);
    auto r = check_symmetries(d);
    EXPECT_TRUE(r.serre);
    EXPECT_TRUE(r.hodge);
    EXPECT_EQ(hochschild_via_sectors(p), columns(d));
  }
}

TEST(ProjectiveQuotient, InverseSectorsHaveComplementaryAges) {
  for (const auto& c : valid_cases()) {
    const auto fixed = enumerate_fixed_components({c.n, c.orders, c.weights});
    std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, const FixedComponent*> by_key;
    for (const auto& f : fixed) by_key[{f.element, f.eigenvalue}] = &f;
    for (const auto& f : fixed) {
      if (f.element_index == 0) continue;
      std::vector<std::int64_t> inverse(f.element.size());
      for (std::size_t j = 0; j < inverse.size(); ++j)
        inverse[j] = (c.orders[j] - f.element[j]) % c.orders[j];
      const auto inv_chi = (f.element_order - f.eigenvalue) % f.element_order;
      auto it = by_key.find({inverse, inv_chi});
      ASSERT_NE(it, by_key.end());
      EXPECT_EQ(it->second->eigenspace_dim, f.eigenspace_dim);
      EXPECT_EQ(age(f.component) + age(it->second->component),
                Grade(f.component.codimension()));
    }
  }
}

TEST(ProjectiveQuotient, SectorsSortedByElementThenEigenvalue) {
  const auto fixed = enumerate_fixed_components({3, {2, 2}, {{0, 0, 1, 1}, {0, 1, 0, 1}}});
  for (std::size_t i = 1; i < fixed.size(); ++i)
    EXPECT_LT(std::tie(fixed[i - 1].element_index, fixed[i - 1].eigenvalue),
              std::tie(fixed[i].element_index, fixed[i].eigenvalue));
}

TEST(ProjectiveQuotient, RepeatedEigenvaluesGroupIntoOneComponent) {
  // Z/2 acting on P^3 by (0,0,1,1): two fixed lines, each of codimension 2.
  auto p = build_projective_quotient({3, {2}, {{0, 0, 1, 1}}});
  ASSERT_EQ(p.components().size(), 3u);
  for (const auto& c : p.components()) {
    if (c.untwisted()) continue;
    EXPECT_EQ(c.coarse_diamond(), projective_space_diamond(1));
    EXPECT_EQ(c.exponents(), (std::vector<std::int64_t>{1, 1, 0}));
    EXPECT_EQ(age(c), Grade(1));
  }
  EXPECT_EQ(assemble_diamond(p), testing::make_diamond(3, {{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
}

TEST(Kummer, Surface) {
  auto p = build_kummer({2});
  EXPECT_EQ(p.components().size(), 1u + 16u);
  EXPECT_EQ(assemble_diamond(p), testing::k3_diamond());
  EXPECT_EQ(extract_h0q(p, 1), 0);
  EXPECT_TRUE(is_gorenstein(p));
}

TEST(Kummer, Threefold) {
  auto p = build_kummer({3});
  EXPECT_EQ(p.components().size(), 1u + 64u);
  for (const auto& c : p.components()) {
    if (!c.untwisted()) {
      EXPECT_EQ(age(c), Grade(3, 2));
    }
  }
  EXPECT_FALSE(is_gorenstein(p));
}

TEST(Kummer, SectorCountAndSymmetry) {
  for (int n = 2; n <= 5; ++n) {
    auto p = build_kummer({n});
    EXPECT_EQ(p.components().size(), 1u + (std::size_t{1} << (2 * n)));
    auto r = check_symmetries(assemble_diamond(p));
    EXPECT_TRUE(r.serre);
    EXPECT_TRUE(r.hodge);
    EXPECT_EQ(is_gorenstein(p), n % 2 == 0);
  }
}

TEST(Kummer, Errors) {
  EXPECT_EQ(kind_of([] { build_kummer({1}); }), ErrorKind::DimensionTooSmall);
  EXPECT_EQ(kind_of([] { build_kummer({0}); }), ErrorKind::DimensionTooSmall);
  EXPECT_EQ(kind_of([] { build_kummer({11}); }), ErrorKind::GroupTooLarge);
}

}  // namespace
}  // namespace orbikit
