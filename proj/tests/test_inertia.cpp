#include <gtest/gtest.h>

#include "orbikit/inertia.hpp"
#include "orbikit/quotient.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace orbikit {
namespace {

using testing::make_diamond;

HodgeDiamond point() { return make_diamond(0, {{0, 0, 1}}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

TEST(Age, Examples) {
  EXPECT_EQ(age(InertiaComponent(1, {0, 0}, make_diamond(2, {{0, 0, 1}}))), Grade(0));
  EXPECT_EQ(age(InertiaComponent(3, {1, 2}, point())), Grade(1));
  EXPECT_EQ(age(InertiaComponent(2, {1, 1, 1}, point())), Grade(3, 2));
}

TEST(Age, InverseSectorsSumToCodimension) {
  // exponents a and l - a: (sum a + sum (l - a)) / l = number of nonzero a.
  InertiaComponent g(5, {1, 2, 0}, make_diamond(1, {{0, 0, 1}, {1, 1, 1}}));
  InertiaComponent inv(5, {4, 3, 0}, make_diamond(1, {{0, 0, 1}, {1, 1, 1}}));
  EXPECT_EQ(age(g) + age(inv), Grade(2));
}

TEST(InertiaComponent, Validation) {
  EXPECT_EQ(kind_of([] { InertiaComponent(3, {1, 0}, make_diamond(1, {{0, 0, 1}, {1, 1, 1}})); }),
            ErrorKind::PseudoReflection);
  EXPECT_EQ(kind_of([] { InertiaComponent(3, {3, 1}, point()); }), ErrorKind::InvalidComponent);
  EXPECT_EQ(kind_of([] { InertiaComponent(0, {}, point()); }), ErrorKind::InvalidComponent);
  // Exponents (2, 2) only generate Z/2 inside Z/4.
  EXPECT_EQ(kind_of([] { InertiaComponent(4, {2, 2}, point()); }), ErrorKind::InvalidComponent);
  // Coarse dimension must equal the number of zero exponents.
  EXPECT_EQ(kind_of([] { InertiaComponent(2, {1, 1, 0}, point()); }), ErrorKind::InvalidComponent);
  // Untwisted sector has only zero exponents; order 1 forces that.
  EXPECT_EQ(kind_of([] { InertiaComponent(1, {1, 0}, point()); }), ErrorKind::InvalidComponent);
  // Coarse diamonds are integer graded and nonempty.
  EXPECT_EQ(kind_of([] {
              InertiaComponent(2, {1, 1, 0, 0},
                               HodgeDiamond(2, {{{Grade(1, 2), Grade(1, 2)}, 1}, {{0, 0}, 1}}));
            }),
            ErrorKind::InvalidComponent);
  EXPECT_EQ(kind_of([] { InertiaComponent(2, {1, 1}, HodgeDiamond(0, {})); }),
            ErrorKind::InvalidComponent);
}

TEST(InertiaComponent, ExponentsGeneratingTheOrderJointlyAreAccepted) {
  // Eigenvalue orders 3 and 2 generate Z/6 although no single exponent is a unit.
  InertiaComponent c(6, {2, 3}, point());
  EXPECT_EQ(age(c), Grade(5, 6));
}

TEST(OrbifoldPresentation, Validation) {
  auto p2 = projective_space_diamond(2);
  EXPECT_EQ(kind_of([&] {
              OrbifoldPresentation(2, {InertiaComponent(3, {1, 2}, point())});
            }),
            ErrorKind::InvalidPresentation);
  EXPECT_EQ(kind_of([&] {
              OrbifoldPresentation(2, {InertiaComponent(1, {0, 0}, p2), InertiaComponent(1, {0, 0}, p2)});
            }),
            ErrorKind::InvalidPresentation);
  EXPECT_EQ(kind_of([&] {
              OrbifoldPresentation(
                  2, {InertiaComponent(1, {0, 0}, p2), InertiaComponent(2, {1, 1, 1}, point())});
            }),
            ErrorKind::InvalidPresentation);
  EXPECT_EQ(kind_of([&] { OrbifoldPresentation(2, {}); }), ErrorKind::InvalidPresentation);
}

TEST(IsGorenstein, Examples) {
  OrbifoldPresentation untwisted(2, {InertiaComponent(1, {0, 0}, projective_space_diamond(2))});
  EXPECT_TRUE(is_gorenstein(untwisted));

  OrbifoldPresentation a2(4, {InertiaComponent(1, {0, 0, 0, 0}, projective_space_diamond(4)),
                              InertiaComponent(3, {1, 2, 0, 0}, projective_space_diamond(2))});
  EXPECT_EQ(age(a2.components()[1]), Grade(1));
  EXPECT_TRUE(is_gorenstein(a2));

  EXPECT_FALSE(is_gorenstein(build_kummer({3})));
}

TEST(AssembleDiamond, UntwistedOnly) {
  OrbifoldPresentation p(2, {InertiaComponent(1, {0, 0}, projective_space_diamond(2))});
  EXPECT_EQ(assemble_diamond(p), make_diamond(2, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}}));
}

TEST(AssembleDiamond, KummerSurfaceFromRawSectors) {
  auto torus_even = make_diamond(2, {{0, 0, 1}, {2, 0, 1}, {1, 1, 4}, {0, 2, 1}, {2, 2, 1}});
  std::vector<InertiaComponent> sectors{InertiaComponent(1, {0, 0}, torus_even, "untwisted")};
  for (int i = 0; i < 16; ++i) sectors.emplace_back(2, std::vector<std::int64_t>{1, 1}, point());
  auto d = assemble_diamond(OrbifoldPresentation(2, sectors));
  EXPECT_EQ(d, testing::k3_diamond());
  EXPECT_EQ(d.level(), 2);
}

TEST(AssembleDiamond, KummerThreefold) {
  auto d = assemble_diamond(build_kummer({3}));
  EXPECT_EQ(d, testing::kummer3_diamond());
  EXPECT_EQ(d.at(Grade(3, 2), Grade(3, 2)), 64);
}

TEST(AssembleDiamond, LargestAgesStayInsideTheBox) {
  // Age < codimension and p' <= dim Z, so validated sectors cannot overflow.
  auto surface = make_diamond(2, {{0, 0, 1}, {2, 2, 1}});
  OrbifoldPresentation p(4, {InertiaComponent(1, {0, 0, 0, 0}, projective_space_diamond(4)),
                             InertiaComponent(7, {6, 6, 0, 0}, surface, "g^-1"),
                             InertiaComponent(7, {1, 1, 0, 0}, surface, "g")});
  auto d = assemble_diamond(p);
  EXPECT_EQ(d.at(Grade(26, 7), Grade(26, 7)), 1);
  EXPECT_EQ(d.at(Grade(2, 7), Grade(2, 7)), 1);
  EXPECT_TRUE(check_symmetries(d).serre);
}

TEST(ExtractH0q, Examples) {
  auto kummer = build_kummer({2});
  EXPECT_EQ(extract_h0q(kummer, 1), 0);
  EXPECT_EQ(extract_h0q(kummer, 2), 1);
  EXPECT_EQ(extract_h0q(kummer, 0), 1);
  auto d = assemble_diamond(kummer);
  for (int q = 0; q <= 2; ++q) EXPECT_EQ(extract_h0q(kummer, q), d.at(0, q));
  EXPECT_EQ(kind_of([&] { extract_h0q(kummer, 3); }), ErrorKind::InvalidArgument);
}

// Randomized properties over presentations built in inverse-closed pairs.
class RandomPresentations : public ::testing::Test {
 protected:
  static std::vector<OrbifoldPresentation> sample(int count, std::uint64_t seed) {
    testing::Rng rng(seed);
    std::vector<OrbifoldPresentation> out;
    for (int i = 0; i < count; ++i) out.push_back(testing::random_presentation(rng));
    return out;
  }
};

TEST_F(RandomPresentations, TwistedContributionsStayOffTheOuterColumns) {
  for (const auto& p : sample(200, 11)) {
    for (const auto& c : p.components()) {
      if (c.untwisted()) continue;
      const int fixed = c.coarse_diamond().dim();
      EXPECT_LE(fixed, p.dim() - 2);
      for (const auto& [key, h] : c.coarse_diamond().entries()) {
        const auto shifted_diff = (key.first + age(c)) - (key.second + age(c));
        EXPECT_TRUE(is_integral(shifted_diff));
        EXPECT_LE(boost::abs(shifted_diff), fixed);
      }
    }
  }
}

TEST_F(RandomPresentations, AgeVanishesExactlyOnTheUntwistedSector) {
  for (const auto& p : sample(200, 12))
    for (const auto& c : p.components()) EXPECT_EQ(age(c) == Grade(0), c.untwisted());
}

TEST_F(RandomPresentations, TotalDimensionIsSumOfSectors) {
  for (const auto& p : sample(200, 13)) {
    std::int64_t sum = 0;
    for (const auto& c : p.components()) sum += c.coarse_diamond().total();
    EXPECT_EQ(assemble_diamond(p).total(), sum);
  }
}

TEST_F(RandomPresentations, GorensteinIffIntegerGraded) {
  int gorenstein = 0;
  for (const auto& p : sample(300, 14)) {
    EXPECT_EQ(is_gorenstein(p), assemble_diamond(p).integer_graded());
    gorenstein += is_gorenstein(p);
  }
  // The sample must exercise both sides of the equivalence.
  EXPECT_GT(gorenstein, 0);
  EXPECT_LT(gorenstein, 300);
}

TEST_F(RandomPresentations, SymmetriesHold) {
  for (const auto& p : sample(200, 15)) {
    auto r = check_symmetries(assemble_diamond(p));
    EXPECT_TRUE(r.serre);
    EXPECT_TRUE(r.hodge);
  }
}

TEST(AgeConvention, InverseSectorsLandSerreDual) {
  // Exponents (1,1,1) and (4,4,4) mod 5: ages 3/5 and 12/5, which sum to the
  // codimension 3 and place the two point classes at Serre-dual grades.
  OrbifoldPresentation p(3, {InertiaComponent(1, {0, 0, 0}, projective_space_diamond(3)),
                             InertiaComponent(5, {1, 1, 1}, point(), "g"),
                             InertiaComponent(5, {4, 4, 4}, point(), "g^-1")});
  auto d = assemble_diamond(p);
  EXPECT_EQ(d.at(Grade(3, 5), Grade(3, 5)), 1);
  EXPECT_EQ(d.at(Grade(12, 5), Grade(12, 5)), 1);
  EXPECT_EQ(d.level(), 5);
  EXPECT_TRUE(check_symmetries(d).serre);
  EXPECT_FALSE(is_gorenstein(p));
}

}  // namespace
}  // namespace orbikit
