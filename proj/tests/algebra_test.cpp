#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

namespace {

using namespace semifield;
using namespace testsupport;

std::vector<SemifieldSpec> small_specs() {
  const Tower f4 = make_tower(2, 1, 2);
  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const Tower f8 = make_tower(2, 1, 3);
  return {to_spec(make_sandler(f4, "T")),
          to_spec(make_sandler(f9, "T")),
          to_spec(make_sandler(f9, "T+1")),
          to_spec(make_sandler(f8, "T")),
          to_spec(make_family(f4, Kind::HK, f4->one(), f4->one())),
          to_spec(make_family(f4, Kind::Kn1, f4->one(), f4->parse("T"))),
          to_spec(make_family(f9, Kind::Kn2, f9->parse("T"), f9->one())),
          to_spec(make_family(f9, Kind::Kn3, f9->parse("T+2"), f9->parse("2T"))),
          to_spec(make_family(f9, Kind::HKOpposite, f9->one(), f9->parse("T"))),
          to_spec(make_family(f8, Kind::Kn1, f8->parse("T^2"), f8->parse("T+1"), 2))};
}

TEST(Multiply, MatchesReferenceOnFullScans) {
  for (const auto& s : small_specs()) {
    const std::uint64_t order = algebra_order(s);
    if (order > 729) continue;
    for (std::uint64_t i = 0; i < order; ++i) {
      for (std::uint64_t j = 0; j < order; ++j) {
        const AlgElement x = element_at(s, i), y = element_at(s, j);
        ASSERT_EQ(multiply(s, x, y), ref_product(s, x, y)) << kind_name(s.kind) << " " << format(s, x) << format(s, y);
      }
    }
  }
}

TEST(Multiply, MatchesReferenceOnSamplesAtOrder4096) {
  const Tower f64 = make_tower(2, 3, 2);
  const Tower f16 = make_tower(2, 2, 3);
  std::mt19937_64 rng(7);
  for (const auto& s : {to_spec(make_sandler(f64, f64->primitive())), to_spec(make_sandler(f16, f16->primitive())),
                        to_spec(make_family(f64, Kind::Kn1, f64->parse("T"), f64->parse("T^2+1")))}) {
    for (int k = 0; k < 2000; ++k) {
      const AlgElement x = random_element(s, rng), y = random_element(s, rng);
      ASSERT_EQ(multiply(s, x, y), ref_product(s, x, y));
    }
  }
}

TEST(Multiply, Examples) {
  const Tower f4 = make_tower(2, 1, 2);
  const SemifieldSpec a = to_spec(make_sandler(f4, "T"));
  const AlgElement z = monomial(a, f4->one(), 1);
  EXPECT_EQ(multiply(a, z, z), monomial(a, f4->gen_t(), 0));

  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const FieldElement eta = f9->parse("T+2"), mu = f9->parse("2T");
  const SemifieldSpec hk = to_spec(make_family(f9, Kind::HK, eta, mu));
  const AlgElement unit_y{{f9->zero(), f9->one()}};
  EXPECT_EQ(multiply(hk, unit_y, unit_y), (AlgElement{{eta, mu}}));

  const SemifieldSpec kn2 = to_spec(make_family(f9, Kind::Kn2, eta, mu));
  for (std::uint32_t x = 0; x < 9; ++x) {
    for (std::uint32_t y = 0; y < 9; ++y) {
      for (std::uint32_t l = 0; l < 9; ++l) {
        const FieldElement fx{x}, fy{y}, fl{l};
        EXPECT_EQ(multiply(kn2, AlgElement{{fx, fy}}, AlgElement{{fl, f9->zero()}}),
                  (AlgElement{{f9->mul(fx, fl), f9->mul(fy, f9->sigma(fl, 1))}}));
      }
    }
  }
}

TEST(Multiply, EmbeddedFieldIsASubalgebraForEveryFamily) {
  const Tower f9 = make_tower(3, 1, 2);
  for (Kind k : {Kind::Kn1, Kind::Kn2, Kind::Kn3, Kind::HK, Kind::HKOpposite}) {
    const SemifieldSpec s = to_spec(make_family(f9, k, f9->parse("T"), f9->parse("T+1")));
    for (std::uint32_t x = 0; x < 9; ++x) {
      for (std::uint32_t u = 0; u < 9; ++u) {
        EXPECT_EQ(multiply(s, AlgElement{{FieldElement{x}, {}}}, AlgElement{{FieldElement{u}, {}}}),
                  (AlgElement{{f9->mul(FieldElement{x}, FieldElement{u}), {}}}));
      }
    }
  }
}

TEST(Multiply, UnitDistributivityAndBilinearity) {
  for (const auto& s : small_specs()) {
    const FieldTower& t = *s.tower;
    const std::uint64_t order = algebra_order(s);
    if (order > 81) continue;
    const AlgElement one = unit_element(s);
    const auto base = t.base_field_elements();
    for (std::uint64_t i = 0; i < order; ++i) {
      const AlgElement x = element_at(s, i);
      ASSERT_EQ(multiply(s, one, x), x);
      ASSERT_EQ(multiply(s, x, one), x);
      for (std::uint64_t j = 0; j < order; ++j) {
        const AlgElement y = element_at(s, j);
        for (auto c : base) {
          ASSERT_EQ(multiply(s, scale(t, c, x), y), scale(t, c, multiply(s, x, y)));
          ASSERT_EQ(multiply(s, x, scale(t, c, y)), scale(t, c, multiply(s, x, y)));
        }
        for (std::uint64_t k = 0; k < order; ++k) {
          const AlgElement z = element_at(s, k);
          ASSERT_EQ(multiply(s, x, add(t, y, z)), add(t, multiply(s, x, y), multiply(s, x, z)));
          ASSERT_EQ(multiply(s, add(t, y, z), x), add(t, multiply(s, y, x), multiply(s, z, x)));
        }
      }
    }
  }
}

TEST(Associator, Examples) {
  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const SemifieldSpec s = to_spec(make_sandler(f9, "T"));
  const AlgElement z = monomial(s, f9->one(), 1);
  EXPECT_EQ(associator(s, z, z, z), monomial(s, f9->parse("2T"), 1));
  for (std::uint64_t i = 0; i < 81; i += 7) {
    for (std::uint64_t j = 0; j < 81; j += 5) {
      EXPECT_TRUE(is_zero(associator(s, unit_element(s), element_at(s, i), element_at(s, j))));
    }
  }
  for (std::uint32_t x = 0; x < 9; ++x) {
    for (std::uint32_t y = 0; y < 9; ++y) {
      for (std::uint32_t w = 0; w < 9; ++w) {
        EXPECT_TRUE(is_zero(associator(s, monomial(s, FieldElement{x}, 0), monomial(s, FieldElement{y}, 0),
                                       monomial(s, FieldElement{w}, 0))));
      }
    }
  }
}

TEST(Associator, AgreesWithTrilinearExtension) {
  std::mt19937_64 rng(11);
  for (const auto& s : small_specs()) {
    const StructureTensor st = structure_tensor(s);
    const std::size_t dim = s.dimension();
    const std::uint32_t p = s.tower->p();
    for (int trial = 0; trial < 1000; ++trial) {
      const AlgElement x = random_element(s, rng), y = random_element(s, rng), z = random_element(s, rng);
      const FpVector fx = flatten(s, x), fy = flatten(s, y), fz = flatten(s, z);
      FpVector expect(dim, 0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (fx[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (fy[j] == 0) continue;
          for (std::size_t k = 0; k < dim; ++k) {
            if (fz[k] == 0) continue;
            const FpVector b = basis_associator(st, i, j, k);
            const std::uint64_t w = std::uint64_t{fx[i]} * fy[j] % p * fz[k] % p;
            for (std::size_t c = 0; c < dim; ++c) expect[c] = static_cast<std::uint32_t>((expect[c] + w * b[c]) % p);
          }
        }
      }
      ASSERT_EQ(flatten(s, associator(s, x, y, z)), expect);
    }
  }
}

TEST(StructureTensor, ProductMatchesMultiply) {
  std::mt19937_64 rng(3);
  for (const auto& s : small_specs()) {
    const StructureTensor st = structure_tensor(s);
    for (int k = 0; k < 200; ++k) {
      const AlgElement x = random_element(s, rng), y = random_element(s, rng);
      ASSERT_EQ(st.product(flatten(s, x), flatten(s, y)), flatten(s, multiply(s, x, y)));
    }
  }
}

TEST(Division, Examples) {
  const Tower f4 = make_tower(2, 1, 2);
  const Tower f16 = make_tower(2, 1, 4);
  EXPECT_TRUE(is_division(to_spec(make_sandler(f4, "T"))));
  const FieldElement w = f16->pow(f16->primitive(), 5);  // generates F_4
  EXPECT_FALSE(is_division(to_spec(make_sandler(f16, w))));
  EXPECT_TRUE(is_division(to_spec(make_family(f4, Kind::HK, f4->one(), f4->one()))));
  EXPECT_FALSE(is_division(to_spec(make_family(f4, Kind::HK, f4->gen_t(), f4->one()))));
}

TEST(Division, MatrixTestAgreesWithZeroDivisorScan) {
  for (const auto& shape : sandler_shapes(729)) {
    const Tower t = make_tower(shape.p, shape.e, shape.n);
    for (auto a : outside_base(*t)) {
      const SemifieldSpec s = to_spec(SandlerParams{t, a});
      ASSERT_EQ(is_division(s), zero_divisor_scan(s).division) << shape.p << "^" << shape.e << " n=" << shape.n;
    }
  }
}

TEST(Division, DivisionAlgebrasHaveBijectiveMultiplications) {
  for (const auto& s : small_specs()) {
    const std::uint64_t order = algebra_order(s);
    if (order > 81 || !is_division(s)) continue;
    for (std::uint64_t i = 1; i < order; ++i) {
      std::set<FpVector> left, right;
      for (std::uint64_t j = 0; j < order; ++j) {
        left.insert(flatten(s, multiply(s, element_at(s, i), element_at(s, j))));
        right.insert(flatten(s, multiply(s, element_at(s, j), element_at(s, i))));
      }
      ASSERT_EQ(left.size(), order);
      ASSERT_EQ(right.size(), order);
    }
  }
}

TEST(Nuclei, ContainUnitAndAreClosed) {
  for (const auto& s : small_specs()) {
    const StructureTensor st = structure_tensor(s);
    const Nuclei nuc = all_nuclei(st);
    for (const Subspace* n : {&nuc.left, &nuc.middle, &nuc.right, &nuc.nucleus}) {
      EXPECT_NO_THROW(verify_subalgebra(st, *n, "nucleus"));
    }
  }
}

TEST(Nuclei, MembersAssociateWithEverything) {
  const Tower f16 = make_tower(2, 1, 4);
  const SemifieldSpec s = to_spec(make_sandler(f16, f16->pow(f16->primitive(), 5)));
  const StructureTensor st = structure_tensor(s);
  const Subspace left = nucleus(st, Side::Left);
  std::mt19937_64 rng(5);
  for (const auto& b : left.basis()) {
    const AlgElement x = unflatten(s, b);
    for (int k = 0; k < 200; ++k) {
      EXPECT_TRUE(is_zero(associator(s, x, random_element(s, rng), random_element(s, rng))));
    }
  }
}

TEST(Nuclei, SandlerSemifieldsHaveNucleusLAndCentreF) {
  for (const auto& shape : sandler_shapes(4096)) {
    const Tower t = make_tower(shape.p, shape.e, shape.n);
    for (auto a : outside_base(*t)) {
      const SandlerParams sp{t, a};
      if (!is_semifield(sp)) continue;
      const SemifieldSpec s = to_spec(sp);
      const StructureTensor st = structure_tensor(s);
      const Nuclei nuc = all_nuclei(st);
      const Subspace l = embedded_field(s);
      ASSERT_EQ(nuc.middle, l);
      ASSERT_EQ(nuc.right, l);
      ASSERT_EQ(nuc.nucleus, l);
      ASSERT_EQ(center_and_commutative_centre(st).center.dim(), shape.e);
    }
  }
}

TEST(Nuclei, QuadraticOverF16) {
  const Tower t = make_tower(2, 4, 2);
  const SemifieldSpec s = to_spec(make_sandler(t, t->primitive()));
  const StructureTensor st = structure_tensor(s);
  EXPECT_EQ(all_nuclei(st).nucleus.dim(), 8u);
  EXPECT_EQ(center_and_commutative_centre(st).center.dim(), 4u);
}

TEST(Nuclei, FieldIsItsOwnNucleusAndCentre) {
  const Tower t = make_tower(3, 1, 3);
  const StructureTensor st = field_tensor(*t);
  const Nuclei nuc = all_nuclei(st);
  EXPECT_EQ(nuc.nucleus.dim(), 3u);
  const Centres c = center_and_commutative_centre(st);
  EXPECT_EQ(c.center.dim(), 3u);
  EXPECT_EQ(c.commutative_centre.dim(), 3u);
}

TEST(Fingerprint, ReportsDimsAndDivision) {
  const Tower f9 = make_tower(3, 1, 2, "T^2-2");
  const Fingerprint f = fingerprint(to_spec(make_sandler(f9, "T")));
  EXPECT_EQ(f.dim, 4u);
  EXPECT_TRUE(f.is_division);
  EXPECT_EQ(f.nuc_left, 2u);
  EXPECT_EQ(f.nucleus, 2u);
  EXPECT_EQ(f.center, 1u);
  EXPECT_EQ(f.params.at("a"), "T");
}

TEST(Fingerprint, TheoremAndMatrixDivisionAgree) {
  for (const auto& s : small_specs()) {
    EXPECT_EQ(fingerprint(s).is_division, fingerprint(s, DivisionTest::Theorem).is_division);
  }
}

TEST(Limits, DivisionScanRespectsBound) {
  const Tower t = make_tower(2, 1, 4);
  const StructureTensor st = structure_tensor(to_spec(make_sandler(t, t->primitive())));
  EXPECT_THROW(is_division(st, 1000), SizeLimitError);
}

}  // namespace
