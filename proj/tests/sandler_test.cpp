#include <gtest/gtest.h>

#include <optional>

#include "support.hpp"

namespace {

using namespace semifield;
using namespace testsupport;

TEST(SandlerParams, RejectsBaseFieldParameters) {
  const Tower f9 = make_tower(3, 1, 2);
  EXPECT_THROW(make_sandler(f9, "2"), DomainError);
  EXPECT_THROW(make_sandler(f9, "0"), DomainError);
  EXPECT_THROW(make_sandler(f9, FieldElement{81}), DomainError);
  EXPECT_THROW(make_sandler(f9, "T+"), ParseError);
  EXPECT_NO_THROW(make_sandler(f9, "T"));
}

TEST(MultiplyMonomial, Examples) {
  const Tower f4 = make_tower(2, 1, 2);
  const SandlerParams p4 = make_sandler(f4, "T");
  const SemifieldSpec s4 = to_spec(p4);
  EXPECT_EQ(multiply_monomial(p4, f4->one(), 1, f4->one(), 1), monomial(s4, f4->gen_t(), 0));
  for (std::uint32_t m = 0; m < 4; ++m) {
    EXPECT_EQ(multiply_monomial(p4, f4->one(), 0, FieldElement{m}, 1), monomial(s4, FieldElement{m}, 1));
  }

  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const SandlerParams p9 = make_sandler(f9, "T");
  const FieldElement t = f9->gen_t();
  const AlgElement got = multiply_monomial(p9, t, 1, t, 1);
  EXPECT_EQ(got, monomial(to_spec(p9), f9->mul(f9->mul(t, f9->sigma(t, 1)), t), 0));
  EXPECT_EQ(got, monomial(to_spec(p9), f9->parse("T"), 0));
  EXPECT_THROW(multiply_monomial(p9, t, 2, t, 0), DomainError);
}

TEST(MultiplyMonomial, AgreesWithFullProduct) {
  const Tower t = make_tower(2, 1, 3);
  const SandlerParams p = make_sandler(t, "T^2+1");
  const SemifieldSpec s = to_spec(p);
  for (std::uint32_t l = 0; l < 8; ++l) {
    for (std::uint32_t m = 0; m < 8; ++m) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          EXPECT_EQ(multiply_monomial(p, FieldElement{l}, i, FieldElement{m}, j),
                    ref_product(s, monomial(s, FieldElement{l}, i), monomial(s, FieldElement{m}, j)));
        }
      }
    }
  }
}

TEST(Independence, Examples) {
  for (unsigned r : {2u, 3u, 5u}) {
    const Tower t = make_tower(2, 1, r);
    for (auto a : outside_base(*t)) EXPECT_TRUE(is_division_by_independence({t, a}));
  }
  const Tower f16 = make_tower(2, 1, 4);
  const FieldElement w = f16->pow(f16->primitive(), 5);
  EXPECT_FALSE(is_division_by_independence({f16, w}));
  EXPECT_TRUE(is_division_by_independence({f16, f16->primitive()}));
}

TEST(IsSemifield, Examples) {
  const Tower f4 = make_tower(2, 1, 2);
  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const Tower f16 = make_tower(2, 1, 4);
  EXPECT_TRUE(is_semifield(make_sandler(f4, "T")));
  EXPECT_TRUE(is_semifield(make_sandler(f9, "T+1")));
  EXPECT_FALSE(is_semifield({f16, f16->pow(f16->primitive(), 5)}));
}

TEST(DivisionCriteria, AgreeOnEveryParameter) {
  for (const auto& shape : sandler_shapes(4096)) {
    const Tower t = make_tower(shape.p, shape.e, shape.n);
    for (auto a : outside_base(*t)) {
      const SandlerParams sp{t, a};
      const bool matrix = is_division(to_spec(sp));
      ASSERT_EQ(is_division_by_independence(sp), matrix) << t->format(a);
      ASSERT_EQ(is_semifield(sp), matrix) << t->format(a);
    }
  }
}

TEST(DivisionCriteria, NonSemifieldsInCompositeDegree) {
  // Order 3^16 is beyond the matrix test, so each non-semifield gets an
  // explicit zero divisor: a lies in F_9, b sigma^2(b) = a for some b, and
  // (b + z^2)(1 - b^-1 z^2) = 0.
  const Tower t = make_tower(3, 1, 4);
  std::size_t checked = 0;
  for (auto a : outside_base(*t)) {
    const SandlerParams sp{t, a};
    if (is_semifield(sp)) continue;
    EXPECT_FALSE(is_division_by_independence(sp));
    ASSERT_EQ(ref_sigma(*t, a, 2), a);
    std::optional<FieldElement> b;
    for (std::uint32_t c = 1; c < t->order() && !b; ++c) {
      if (t->mul(FieldElement{c}, ref_sigma(*t, FieldElement{c}, 2)) == a) b = FieldElement{c};
    }
    ASSERT_TRUE(b.has_value()) << t->format(a);
    const SemifieldSpec s = to_spec(sp);
    AlgElement x = zero_element(s), y = zero_element(s);
    x.coords[0] = *b;
    x.coords[2] = t->one();
    y.coords[0] = t->one();
    y.coords[2] = t->neg(t->inv(*b));
    EXPECT_TRUE(is_zero(ref_product(s, x, y))) << t->format(a);
    ++checked;
  }
  EXPECT_EQ(checked, 6u);
}

TEST(LeftNucleus, PredictionExamples) {
  const Tower f16 = make_tower(2, 1, 4);
  const auto p16 = predicted_left_nucleus({f16, f16->pow(f16->primitive(), 5)});
  EXPECT_EQ(p16.s, 2u);
  EXPECT_EQ(p16.dim, 8u);
  EXPECT_EQ(p16.z_powers, (std::vector<unsigned>{0, 2}));

  const auto prim = predicted_left_nucleus({f16, f16->primitive()});
  EXPECT_EQ(prim.s, 4u);
  EXPECT_EQ(prim.dim, 4u);

  const Tower f64 = make_tower(2, 1, 6);
  const auto p64 = predicted_left_nucleus({f64, f64->pow(f64->primitive(), 9)});
  EXPECT_EQ(p64.s, 3u);
  EXPECT_EQ(p64.dim, 12u);
}

TEST(LeftNucleus, PredictionEqualsLinearSolve) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 4u}, {2u, 6u}}) {
    const Tower t = make_tower(p, 1, n);
    for (auto a : outside_base(*t)) {
      const SandlerParams sp{t, a};
      if (is_semifield(sp)) continue;
      const auto pred = predicted_left_nucleus(sp);
      const SemifieldSpec s = to_spec(sp);
      ASSERT_EQ(nucleus(s, Side::Left), Subspace(p, s.dimension(), pred.basis)) << p << " " << n << " " << t->format(a);
    }
  }
}

TEST(LeftNucleus, IsLForSemifields) {
  const Tower t = make_tower(2, 1, 4);
  const SandlerParams sp{t, t->primitive()};
  const SemifieldSpec s = to_spec(sp);
  EXPECT_EQ(nucleus(s, Side::Left), embedded_field(s));
}

TEST(SandlerSpec, RoundTripsThroughParams) {
  const Tower f9 = make_tower(3, 1, 2);
  const SemifieldSpec s = to_spec(make_sandler(f9, "T+1"));
  EXPECT_EQ(sandler_params(s).a, f9->parse("T+1"));
  EXPECT_EQ(s.dimension(), 4u);
  EXPECT_THROW(family_params(s), DomainError);
}

}  // namespace
