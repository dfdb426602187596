#ifndef SEMIFIELD_FAMILY_REPORT_HPP
#define SEMIFIELD_FAMILY_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semifield/autgroup.hpp"
#include "semifield/oracle.hpp"

namespace semifield {

struct NucleiCheck {
  NucleiPattern predicted;
  /// Per side (left, middle, right): nucleus equals L ⊕ 0, nucleus contains L ⊕ 0.
  std::array<bool, 3> equals_l{};
  std::array<bool, 3> contains_l{};
  /// Named nuclei equal L exactly and the others do not contain L.
  bool matches = false;
};

inline NucleiCheck check_predicted_nuclei(const FamilyParams& fp) {
  NucleiCheck out;
  out.predicted = predicted_nuclei(fp);
  const SemifieldSpec spec = to_spec(fp);
  const Nuclei nuc = all_nuclei(structure_tensor(spec));
  const Subspace l = embedded_field(spec);
  const std::array<const Subspace*, 3> sides{&nuc.left, &nuc.middle, &nuc.right};
  const std::array<bool, 3> want{out.predicted.left, out.predicted.middle, out.predicted.right};
  out.matches = true;
  for (std::size_t s = 0; s < 3; ++s) {
    out.equals_l[s] = *sides[s] == l;
    out.contains_l[s] = sides[s]->contains(l);
    out.matches = out.matches && (want[s] ? out.equals_l[s] : !out.contains_l[s]);
  }
  return out;
}

struct MutualIsoReport {
  bool degenerate = false;  // σ² = Id and μ = 0
  std::array<Kind, 4> kinds{Kind::Kn1, Kind::Kn2, Kind::Kn3, Kind::HK};
  std::array<Fingerprint, 4> fingerprints;
  bool pairwise_distinct = false;
  bool tables_identical = false;
  /// Non-degenerate: invariant fingerprints pairwise distinct. Degenerate: identical tables.
  bool holds = false;
};

inline MutualIsoReport mutual_isomorphism_check(const Tower& tower, FieldElement eta, FieldElement mu,
                                                unsigned sigma_power = 1) {
  MutualIsoReport out;
  std::array<StructureTensor, 4> tables{StructureTensor(2, 0), StructureTensor(2, 0), StructureTensor(2, 0),
                                        StructureTensor(2, 0)};
  for (std::size_t i = 0; i < 4; ++i) {
    const SemifieldSpec spec = to_spec(make_family(tower, out.kinds[i], eta, mu, sigma_power));
    out.fingerprints[i] = fingerprint(spec);
    tables[i] = structure_tensor(spec);
  }
  out.degenerate = sigma_squared_is_identity(*tower, sigma_power) && mu.code == 0;
  out.tables_identical = tables[0] == tables[1] && tables[1] == tables[2] && tables[2] == tables[3];
  out.pairwise_distinct = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (invariants(out.fingerprints[i]) == invariants(out.fingerprints[j])) out.pairwise_distinct = false;
    }
  }
  out.holds = out.degenerate ? out.tables_identical : out.pairwise_distinct;
  return out;
}

struct SweepRow {
  Kind kind = Kind::HK;
  unsigned sigma_power = 1;
  FieldElement eta{};
  FieldElement mu{};
  bool is_division = false;
  Fingerprint fingerprint;
  /// Aut order for division rows: the (τ, b) enumeration for hk/kn2/kn3/hk_op,
  /// the brute-force count for kn1 when the algebra has order ≤ 729.
  std::optional<std::size_t> aut_order;
};

struct SweepResult {
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;
};

inline std::optional<std::size_t> family_aut_order(const FamilyParams& fp) {
  if (fp.family == Kind::Kn1) {
    const SemifieldSpec spec = to_spec(fp);
    if (saturating_order(spec.tower->p(), spec.dimension()) > 729) return std::nullopt;
    return brute_force_automorphisms(spec).maps.size();
  }
  return family_automorphisms(fp).size();
}

/// Every (σ power, η ≠ 0, μ) over the tower when |L| ≤ 16; otherwise `samples`
/// pairs (η, μ) per σ power drawn from a 64-bit Mersenne Twister seeded with `seed`.
inline SweepResult family_sweep(const Tower& tower, const std::vector<Kind>& kinds, std::uint64_t seed = 1,
                                std::size_t samples = 32) {
  const FieldTower& t = *tower;
  SweepResult out;
  out.seed = seed;
  out.sampled = t.order() > 16;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (!out.sampled) {
    for (std::uint32_t e = 1; e < t.order(); ++e) {
      for (std::uint32_t m = 0; m < t.order(); ++m) pairs.emplace_back(e, m);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto e = static_cast<std::uint32_t>(1 + rng() % (t.order() - 1));
      const auto m = static_cast<std::uint32_t>(rng() % t.order());
      pairs.emplace_back(e, m);
    }
  }
  for (unsigned sp = 1; sp < t.n(); ++sp) {
    for (Kind kind : kinds) {
      for (auto [e, m] : pairs) {
        const FamilyParams fp = make_family(tower, kind, FieldElement{e}, FieldElement{m}, sp);
        SweepRow row{kind, sp, fp.eta, fp.mu, false, fingerprint(to_spec(fp)), std::nullopt};
        row.is_division = row.fingerprint.is_division;
        if (row.is_division) row.aut_order = family_aut_order(fp);
        out.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

}  // namespace semifield

#endif  // SEMIFIELD_FAMILY_REPORT_HPP
