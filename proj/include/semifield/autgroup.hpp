#ifndef SEMIFIELD_AUTGROUP_HPP
#define SEMIFIELD_AUTGROUP_HPP

// Automorphism groups of Sandler algebras and of the HK / Knuth families,
// and identification of small groups from their Cayley tables.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "semifield/maps.hpp"

namespace semifield {

struct Automorphism {
  enum class Form { Sandler, Family, Generic };
  Form form = Form::Generic;
  /// Sandler: twist index j and l. Family: τ = Frobenius_q^{galois} and b.
  unsigned galois = 0;
  FieldElement element{};
  FpMatrix matrix;
};

// ---------------------------------------------------------------- Sandler

/// x z^i ↦ σ^j(x) · l σ(l) ... σ^{i-1}(l) · z^i, as a matrix (unverified).
inline FpMatrix sandler_map_matrix(const SemifieldSpec& spec, unsigned j, FieldElement l) {
  const FieldTower& t = *spec.tower;
  const std::size_t n = t.n(), d = t.degree();
  std::vector<AlgElement> images;
  images.reserve(n * d);
  FieldElement lambda = t.one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const FieldElement tk = t.pow(t.gen_t(), static_cast<std::int64_t>(k));
      images.push_back(monomial(spec, t.mul(t.sigma(tk, j), lambda), i));
    }
    lambda = t.mul(lambda, t.sigma(l, static_cast<std::int64_t>(i)));
  }
  return matrix_from_images(spec, images);
}

inline Automorphism sandler_automorphism(const SandlerParams& params, unsigned j, FieldElement l) {
  const SemifieldSpec spec = to_spec(params);
  const FieldTower& t = *params.tower;
  if (t.div(t.sigma(params.a, j), params.a) != norm(t, l)) {
    throw DomainError("sandler_automorphism: sigma^j(a) != N(l) a");
  }
  Automorphism out{Automorphism::Form::Sandler, j, l, sandler_map_matrix(spec, j, l)};
  verify_isomorphism(spec, spec, out.matrix, "sandler automorphism");
  return out;
}

/// All maps (j, l) with σ^j(a) = N(l) a, each verified exactly, and the
/// whole set verified to be closed under composition.
inline std::vector<Automorphism> sandler_automorphisms(const SandlerParams& params) {
  const FieldTower& t = *params.tower;
  std::vector<Automorphism> out;
  for (unsigned j = 0; j < t.n(); ++j) {
    const FieldElement k = t.div(t.sigma(params.a, j), params.a);
    if (!t.in_base_field(k)) continue;
    for (auto l : norm_fiber(t, k)) out.push_back(sandler_automorphism(params, j, l));
  }
  std::vector<FpMatrix> mats;
  for (const auto& a : out) mats.push_back(a.matrix);
  make_map_group(to_spec(params), std::move(mats));
  return out;
}

/// s = (q^r - 1)/(q - 1) when no σ^i(a), 1 ≤ i < r, lies in F^× a; r·s otherwise.
inline std::uint64_t predicted_sandler_aut_order(const SandlerParams& params) {
  const FieldTower& t = *params.tower;
  const unsigned r = t.n();
  if (!is_prime(r)) throw DomainError("predicted_sandler_aut_order: n = " + std::to_string(r) + " is not prime");
  const std::uint64_t s = (std::uint64_t{t.order()} - 1) / (t.q() - 1);
  for (unsigned i = 1; i < r; ++i) {
    if (t.in_base_field(t.div(t.sigma(params.a, i), params.a))) return r * s;
  }
  return s;
}

// ---------------------------------------------------------------- families

/// (x, y) ↦ (τ(x), τ(y) b) with τ = (x ↦ x^{q^galois}).
inline FpMatrix family_map_matrix(const SemifieldSpec& spec, unsigned galois, FieldElement b) {
  const FieldTower& t = *spec.tower;
  const std::size_t d = t.degree();
  std::vector<AlgElement> images;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const FieldElement x = t.sigma(t.pow(t.gen_t(), static_cast<std::int64_t>(k)), galois);
      images.push_back(monomial(spec, i == 0 ? x : t.mul(x, b), i));
    }
  }
  return matrix_from_images(spec, images);
}

/// True iff τ commutes with σ on L (checked on a primitive element).
inline bool commutes_with_sigma(const FieldTower& t, unsigned galois, unsigned sigma_power) {
  const FieldElement g = t.primitive();
  return t.sigma(t.sigma(g, sigma_power), galois) == t.sigma(t.sigma(g, galois), sigma_power);
}

/// The conditions on (τ, b) for (x, y) ↦ (τ(x), τ(y) b) to be an automorphism.
inline bool family_conditions_hold(const FamilyParams& fp, unsigned galois, FieldElement b) {
  const FieldTower& t = *fp.tower;
  const auto sp = static_cast<std::int64_t>(fp.sigma_power);
  auto s = [&](FieldElement x, std::int64_t k) { return t.sigma(x, k * sp); };
  const FieldElement teta = t.sigma(fp.eta, galois);
  const FieldElement tmu = t.sigma(fp.mu, galois);
  switch (fp.family) {
    case Kind::HK:
    case Kind::HKOpposite:
      return t.mul(t.mul(fp.eta, b), s(b, 1)) == teta && t.mul(fp.mu, s(b, 1)) == tmu;
    case Kind::Kn2:
      return t.mul(t.mul(fp.eta, s(b, -1)), s(b, -2)) == teta && t.mul(fp.mu, s(b, -1)) == tmu;
    case Kind::Kn3:
      return t.mul(t.mul(fp.eta, b), s(b, -1)) == teta && t.mul(fp.mu, b) == tmu;
    case Kind::Kn1:
      return t.mul(t.mul(fp.eta, s(b, 1)), s(b, -2)) == teta && t.mul(t.mul(fp.mu, s(b, 1)), s(b, -1)) == t.mul(tmu, b);
    case Kind::Sandler: break;
  }
  return false;
}

namespace detail {

inline std::vector<Automorphism> solve_family_conditions(const FamilyParams& fp) {
  const FieldTower& t = *fp.tower;
  const SemifieldSpec spec = to_spec(fp);
  std::vector<Automorphism> out;
  for (unsigned galois = 0; galois < t.n(); ++galois) {
    if (!commutes_with_sigma(t, galois, fp.sigma_power)) continue;
    for (std::uint32_t c = 1; c < t.order(); ++c) {
      const FieldElement b{c};
      if (!family_conditions_hold(fp, galois, b)) continue;
      Automorphism a{Automorphism::Form::Family, galois, b, family_map_matrix(spec, galois, b)};
      verify_isomorphism(spec, spec, a.matrix, std::string(kind_name(fp.family)) + " automorphism");
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace detail

/// Automorphisms of HK, Kn2 or Kn3 (and HK^op, which shares HK's group)
/// restricting to L, from the exact (τ, b) conditions. Every map is verified
/// and the set is checked for closure.
inline std::vector<Automorphism> family_automorphisms(const FamilyParams& fp) {
  if (fp.family == Kind::Kn1 || fp.family == Kind::Sandler) {
    throw DomainError("family_automorphisms: use kn1_candidate_automorphisms for kn1");
  }
  auto out = detail::solve_family_conditions(fp);
  std::vector<FpMatrix> mats;
  for (const auto& a : out) mats.push_back(a.matrix);
  make_map_group(to_spec(fp), std::move(mats));
  return out;
}

/// Automorphisms of Kn1 restricting to L. Not known to be all of Aut(Kn1).
inline std::vector<Automorphism> kn1_candidate_automorphisms(const FamilyParams& fp) {
  if (fp.family != Kind::Kn1) throw DomainError("kn1_candidate_automorphisms: kind must be kn1");
  return detail::solve_family_conditions(fp);
}

/// μ σ(μ) σ(η)^{-1}.
inline FieldElement stabilized_element(const FamilyParams& fp) {
  const FieldTower& t = *fp.tower;
  const auto sp = static_cast<std::int64_t>(fp.sigma_power);
  return t.div(t.mul(fp.mu, t.sigma(fp.mu, sp)), t.sigma(fp.eta, sp));
}

/// Galois indices τ in the centralizer of σ with τ(μσ(μ)/σ(η)) = μσ(μ)/σ(η).
inline std::vector<unsigned> family_aut_as_stabilizer(const FamilyParams& fp) {
  if (fp.mu.code == 0) throw DomainError("family_aut_as_stabilizer: requires mu != 0");
  if (fp.family != Kind::HK && fp.family != Kind::Kn2 && fp.family != Kind::Kn3 && fp.family != Kind::HKOpposite) {
    throw DomainError("family_aut_as_stabilizer: kind must be hk, kn2 or kn3");
  }
  const FieldTower& t = *fp.tower;
  const FieldElement c = stabilized_element(fp);
  std::vector<unsigned> out;
  for (unsigned galois = 0; galois < t.n(); ++galois) {
    if (commutes_with_sigma(t, galois, fp.sigma_power) && t.sigma(c, galois) == c) out.push_back(galois);
  }
  return out;
}

// ---------------------------------------------------------------- groups

struct GroupID {
  std::size_t order = 0;
  bool abelian = true;
  std::string label;
  /// Sorted element orders.
  std::vector<std::size_t> signature;
  /// For Dic_m (and Q8 = Dic_2): indices of generators x, y with
  /// y^{2m} = 1, x^2 = y^m, x^{-1} y x = y^{-1}.
  std::optional<std::pair<std::size_t, std::size_t>> dicyclic_generators;
};

inline std::vector<std::size_t> element_orders(const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  std::vector<std::size_t> out(table.size());
  for (std::size_t g = 0; g < table.size(); ++g) {
    std::size_t k = 1, x = g;
    while (x != identity) {
      x = table[g][x];
      if (++k > table.size()) throw VerificationError("element of infinite order in a finite table");
    }
    out[g] = k;
  }
  return out;
}

namespace detail {

inline std::size_t table_power(const std::vector<std::vector<std::size_t>>& table, std::size_t identity, std::size_t g,
                               std::size_t k) {
  std::size_t x = identity;
  for (std::size_t i = 0; i < k; ++i) x = table[x][g];
  return x;
}

inline std::size_t table_inverse(const std::vector<std::vector<std::size_t>>& table, std::size_t identity, std::size_t g) {
  for (std::size_t h = 0; h < table.size(); ++h) {
    if (table[g][h] == identity) return h;
  }
  throw VerificationError("element without inverse");
}

}  // namespace detail

/// Searches generators x, y with |y| = 2m, x^2 = y^m and x^{-1} y x = y^{-1}
/// in a group of order 4m.
inline std::optional<std::pair<std::size_t, std::size_t>> find_dicyclic_generators(
    const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  const std::size_t order = table.size();
  if (order % 4 != 0 || order < 8) return std::nullopt;
  const std::size_t m = order / 4;
  const auto orders = element_orders(table, identity);
  for (std::size_t y = 0; y < order; ++y) {
    if (orders[y] != 2 * m) continue;
    const std::size_t ym = detail::table_power(table, identity, y, m);
    const std::size_t yinv = detail::table_inverse(table, identity, y);
    for (std::size_t x = 0; x < order; ++x) {
      if (table[x][x] != ym) continue;
      const std::size_t xinv = detail::table_inverse(table, identity, x);
      if (table[table[xinv][y]][x] == yinv) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

inline GroupID identify_group(const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  GroupID id;
  id.order = table.size();
  for (std::size_t a = 0; a < id.order && id.abelian; ++a) {
    for (std::size_t b = 0; b < id.order; ++b) {
      if (table[a][b] != table[b][a]) {
        id.abelian = false;
        break;
      }
    }
  }
  id.signature = element_orders(table, identity);
  std::sort(id.signature.begin(), id.signature.end());
  const auto involutions = std::count(id.signature.begin(), id.signature.end(), std::size_t{2});
  if (id.signature.back() == id.order) {
    id.label = "cyclic(" + std::to_string(id.order) + ")";
    return id;
  }
  if (!id.abelian) id.dicyclic_generators = find_dicyclic_generators(table, identity);
  if (id.order == 8 && !id.abelian && involutions == 1) {
    id.label = "Q8";
  } else if (id.dicyclic_generators) {
    id.label = "Dic" + std::to_string(id.order / 4);
  } else {
    std::string sig;
    for (auto o : id.signature) sig += (sig.empty() ? "" : ",") + std::to_string(o);
    id.label = "other(" + sig + ")";
  }
  return id;
}

inline GroupID identify_group(const MapGroup& g) { return identify_group(g.table, g.identity); }

inline MapGroup map_group(const SemifieldSpec& spec, const std::vector<Automorphism>& maps) {
  std::vector<FpMatrix> mats;
  for (const auto& a : maps) mats.push_back(a.matrix);
  return make_map_group(spec, std::move(mats));
}

inline GroupID identify_group(const SemifieldSpec& spec, const std::vector<Automorphism>& maps) {
  return identify_group(map_group(spec, maps));
}

}  // namespace semifield

#endif  // SEMIFIELD_AUTGROUP_HPP
