#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace semifield;
using namespace testsupport;

TEST(ZeroDivisorScan, Examples) {
  const Tower f4 = make_tower(2, 1, 2);
  const auto ok = zero_divisor_scan(to_spec(make_sandler(f4, "T")));
  EXPECT_TRUE(ok.division);
  EXPECT_FALSE(ok.witness.has_value());
  EXPECT_GT(ok.products, 0u);

  const Tower f16 = make_tower(2, 1, 4);
  const SemifieldSpec s = to_spec(SandlerParams{f16, f16->pow(f16->primitive(), 5)});
  const auto bad = zero_divisor_scan(s);
  EXPECT_FALSE(bad.division);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_FALSE(is_zero(bad.witness->x));
  EXPECT_FALSE(is_zero(bad.witness->y));
  EXPECT_TRUE(is_zero(ref_product(s, bad.witness->x, bad.witness->y)));
}

TEST(ZeroDivisorScan, OddCharacteristicWitness) {
  const Tower t = make_tower(3, 1, 2);
  for (std::uint32_t eta = 1; eta < 9; ++eta) {
    for (std::uint32_t mu = 0; mu < 9; ++mu) {
      const SemifieldSpec s = to_spec(make_family(t, Kind::Kn3, FieldElement{eta}, FieldElement{mu}));
      const auto r = zero_divisor_scan(s);
      ASSERT_EQ(r.division, is_division_family(*t, FieldElement{eta}, FieldElement{mu}, 1));
      if (!r.division) {
        ASSERT_TRUE(r.witness.has_value());
        ASSERT_TRUE(is_zero(ref_product(s, r.witness->x, r.witness->y)));
      }
    }
  }
}

TEST(ZeroDivisorScan, RespectsBound) {
  const Tower t = make_tower(2, 1, 4);
  EXPECT_THROW(zero_divisor_scan(to_spec(make_sandler(t, t->primitive())), 4096), SizeLimitError);
  const Tower big = make_tower(2, 1, 5);
  EXPECT_THROW(zero_divisor_scan(to_spec(make_sandler(big, big->primitive()))), SizeLimitError);
}

TEST(BruteForceAutomorphisms, Examples) {
  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const SemifieldSpec at = to_spec(make_sandler(f9, "T"));
  const auto r9 = brute_force_automorphisms(at);
  EXPECT_EQ(r9.maps.size(), 8u);
  EXPECT_GT(r9.search_space, 0u);
  EXPECT_NE(std::find(r9.maps.begin(), r9.maps.end(), FpMatrix::identity(3, 4)), r9.maps.end());

  const Tower f4 = make_tower(2, 1, 2);
  EXPECT_EQ(brute_force_automorphisms(to_spec(make_sandler(f4, "T"))).maps.size(), 3u);
}

TEST(BruteForceAutomorphisms, IdentityAlwaysFound) {
  for (const Tower& t : {make_tower(2, 1, 2), make_tower(3, 1, 2), make_tower(2, 1, 3)}) {
    for (Kind k : {Kind::Kn1, Kind::Kn2, Kind::Kn3, Kind::HK, Kind::HKOpposite}) {
      const SemifieldSpec s = to_spec(make_family(t, k, t->gen_t(), t->one()));
      const auto maps = brute_force_automorphisms(s).maps;
      EXPECT_NE(std::find(maps.begin(), maps.end(), FpMatrix::identity(t->p(), s.dimension())), maps.end());
    }
  }
}

TEST(BruteForceAutomorphisms, ResultsAreVerifiedAndFormAGroup) {
  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  for (auto a : outside_base(*f9)) {
    const SemifieldSpec s = to_spec(SandlerParams{f9, a});
    auto maps = brute_force_automorphisms(s).maps;
    for (const auto& m : maps) {
      ASSERT_TRUE(is_invertible(m));
      ASSERT_TRUE(is_homomorphism(s, s, m));
    }
    EXPECT_NO_THROW(make_map_group(s, std::move(maps)));
  }
}

TEST(BruteForceAutomorphisms, AgreesWithGLSearchOnOrder16) {
  const Tower f4 = make_tower(2, 1, 2);
  std::vector<SemifieldSpec> specs{to_spec(make_sandler(f4, "T")), to_spec(make_sandler(f4, "T+1"))};
  for (std::uint32_t eta = 1; eta < 4; ++eta) {
    for (std::uint32_t mu = 0; mu < 4; ++mu) {
      for (Kind k : {Kind::Kn1, Kind::Kn2, Kind::Kn3, Kind::HK, Kind::HKOpposite}) {
        specs.push_back(to_spec(make_family(f4, k, FieldElement{eta}, FieldElement{mu})));
      }
    }
  }
  for (const auto& s : specs) {
    ASSERT_EQ(brute_force_automorphisms(s).maps, gl_search_automorphisms(s)) << kind_name(s.kind);
  }
  const Tower f8 = make_tower(2, 1, 3);
  EXPECT_THROW(gl_search_automorphisms(to_spec(make_sandler(f8, "T"))), SizeLimitError);
}

TEST(BruteForceAutomorphisms, MatchesSandlerEnumerationUpTo4096) {
  for (const auto& shape : sandler_shapes(4096)) {
    const Tower t = make_tower(shape.p, shape.e, shape.n);
    if (!is_prime(shape.n)) continue;
    for (const auto& cls : enumerate_classes(t).classes) {
      const SandlerParams sp{t, cls.representative};
      std::vector<FpMatrix> mine;
      for (const auto& m : sandler_automorphisms(sp)) mine.push_back(m.matrix);
      detail::sort_matrices(mine);
      ASSERT_EQ(brute_force_automorphisms(to_spec(sp)).maps, mine) << shape.p << "^" << shape.e << " n=" << shape.n;
    }
  }
}

TEST(BruteForceAutomorphisms, RespectsBound) {
  const Tower t = make_tower(2, 1, 4);
  EXPECT_THROW(brute_force_automorphisms(to_spec(make_sandler(t, t->primitive()))), SizeLimitError);
}

TEST(BruteForceClasses, Examples) {
  const Tower f4 = make_tower(2, 1, 2);
  const auto r4 = brute_force_classes(f4);
  ASSERT_EQ(r4.classes.size(), 1u);
  EXPECT_EQ(r4.classes[0].size(), 2u);
  EXPECT_EQ(r4.witnesses_verified, 1u);

  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const auto r9 = brute_force_classes(f9);
  ASSERT_EQ(r9.classes.size(), 2u);
  EXPECT_EQ(f9->format(r9.classes[0].front()), "T");
  EXPECT_EQ(f9->format(r9.classes[1].front()), "T+1");

  EXPECT_THROW(brute_force_classes(make_tower(2, 1, 10)), SizeLimitError);
}

TEST(BruteForceClasses, AgreesWithEnumerationOnCompositeDegree) {
  const Tower t = make_tower(2, 1, 4);
  const auto bf = brute_force_classes(t);
  const auto en = enumerate_classes(t);
  ASSERT_EQ(bf.classes.size(), en.classes.size());
  for (std::size_t i = 0; i < bf.classes.size(); ++i) EXPECT_EQ(bf.classes[i], en.classes[i].members);
}

TEST(RunClaim, RecordsAgreement) {
  const auto yes = run_claim("same", [] { return std::string("1"); }, [] { return std::string("1"); });
  EXPECT_TRUE(yes.agree);
  EXPECT_EQ(yes.claim, "same");
  const auto no = run_claim("different", [] { return std::string("1"); }, [] { return std::string("2"); });
  EXPECT_FALSE(no.agree);
  EXPECT_EQ(no.formula_value, "1");
  EXPECT_EQ(no.oracle_value, "2");
}

}  // namespace
