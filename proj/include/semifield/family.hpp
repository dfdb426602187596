#ifndef SEMIFIELD_FAMILY_HPP
#define SEMIFIELD_FAMILY_HPP

// Knuth (Kn1, Kn2, Kn3) and Hughes-Kleinfeld (HK) multiplications on L ⊕ L,
// parameterized by a nontrivial σ ∈ Gal(L/F) and η, μ ∈ L.

#include <string>
#include <utility>

#include "semifield/spec.hpp"

namespace semifield {

struct FamilyParams {
  Tower tower;
  Kind family = Kind::HK;
  FieldElement eta{};
  FieldElement mu{};
  unsigned sigma_power = 1;
};

inline bool sigma_is_trivial(const FieldTower& t, unsigned sigma_power) { return sigma_power % t.n() == 0; }

/// σ² = Id for σ = Frobenius_q^{sigma_power}.
inline bool sigma_squared_is_identity(const FieldTower& t, unsigned sigma_power) {
  return (2 * sigma_power) % t.n() == 0;
}

inline FamilyParams make_family(Tower tower, Kind family, FieldElement eta, FieldElement mu, unsigned sigma_power = 1) {
  if (!is_family(family)) throw DomainError("make_family: kind must be kn1, kn2, kn3, hk or hk_op");
  if (!tower->contains(eta) || !tower->contains(mu)) throw DomainError("eta and mu must be elements of L");
  if (eta.code == 0) throw DomainError("eta = 0: the family constructions require eta != 0");
  if (sigma_is_trivial(*tower, sigma_power)) throw DomainError("sigma must be a nontrivial automorphism of L/F");
  const unsigned sp = sigma_power % tower->n();
  return FamilyParams{std::move(tower), family, eta, mu, sp};
}

inline SemifieldSpec to_spec(const FamilyParams& params) {
  SemifieldSpec s;
  s.tower = params.tower;
  s.kind = params.family;
  s.eta = params.eta;
  s.mu = params.mu;
  s.sigma_power = params.sigma_power;
  return s;
}

inline FamilyParams family_params(const SemifieldSpec& s) {
  if (!is_family(s.kind)) throw DomainError("not a family algebra");
  return FamilyParams{s.tower, s.kind, s.eta, s.mu, s.sigma_power};
}

/// (x, y) ∘ (u, v) for the given family.
inline std::pair<FieldElement, FieldElement> multiply_family(const FieldTower& t, Kind family, FieldElement eta,
                                                             FieldElement mu, unsigned sigma_power, FieldElement x,
                                                             FieldElement y, FieldElement u, FieldElement v) {
  const auto sp = static_cast<std::int64_t>(sigma_power);
  auto s = [&](FieldElement w, std::int64_t k) { return t.sigma(w, k * sp); };
  auto m3 = [&](FieldElement a, FieldElement b, FieldElement c) { return t.mul(t.mul(a, b), c); };
  const FieldElement xu = t.mul(x, u);
  const FieldElement vx = t.mul(v, x);
  const FieldElement ysu = t.mul(y, s(u, 1));
  switch (family) {
    case Kind::Kn1:
      return {t.add(xu, m3(eta, s(v, 1), s(y, -2))), t.add(t.add(vx, ysu), m3(mu, s(v, 1), s(y, -1)))};
    case Kind::Kn2:
      return {t.add(xu, m3(eta, s(v, -1), s(y, -2))), t.add(t.add(vx, ysu), m3(mu, v, s(y, -1)))};
    case Kind::Kn3:
      return {t.add(xu, m3(eta, s(v, -1), y)), t.add(t.add(vx, ysu), m3(mu, v, y))};
    case Kind::HK:
      return {t.add(xu, m3(eta, s(v, 1), y)), t.add(t.add(vx, ysu), m3(mu, s(v, 1), y))};
    case Kind::HKOpposite:
      return {t.add(xu, m3(eta, s(y, 1), v)), t.add(t.add(t.mul(y, u), t.mul(s(x, 1), v)), m3(mu, s(y, 1), v))};
    case Kind::Sandler:
      break;
  }
  throw DomainError("multiply_family: not a family kind");
}

inline AlgElement family_multiply(const SemifieldSpec& spec, const AlgElement& a, const AlgElement& b) {
  if (a.coords.size() != 2 || b.coords.size() != 2) throw DomainError("element dimension does not match the algebra");
  auto [first, second] = multiply_family(*spec.tower, spec.kind, spec.eta, spec.mu, spec.sigma_power, a.coords[0],
                                         a.coords[1], b.coords[0], b.coords[1]);
  return AlgElement{{first, second}};
}

/// Root criterion: division iff w σ(w) + μ w = η has no solution w ∈ L.
/// Accepts η = 0 (never division, w = 0 is a root).
inline bool is_division_family(const FieldTower& t, FieldElement eta, FieldElement mu, unsigned sigma_power) {
  const auto sp = static_cast<std::int64_t>(sigma_power);
  for (std::uint32_t c = 0; c < t.order(); ++c) {
    const FieldElement w{c};
    const FieldElement value = t.add(t.mul(w, t.sigma(w, sp)), t.mul(mu, w));
    if (value == eta) return false;
  }
  return true;
}

inline bool is_division_family(const FamilyParams& params) {
  return is_division_family(*params.tower, params.eta, params.mu, params.sigma_power);
}

/// Which nuclei coincide with the embedded copy L ⊕ 0 (true) and which do not
/// contain it (false).
struct NucleiPattern {
  bool left = false;
  bool middle = false;
  bool right = false;

  friend bool operator==(const NucleiPattern&, const NucleiPattern&) = default;
};

/// Nuclei pattern of each family when σ² ≠ Id or μ ≠ 0. Throws in the
/// degenerate case, where all four multiplications coincide.
inline NucleiPattern predicted_nuclei(const FamilyParams& params) {
  if (sigma_squared_is_identity(*params.tower, params.sigma_power) && params.mu.code == 0) {
    throw DomainError("sigma^2 = Id and mu = 0: the multiplication for each algebra is the same");
  }
  switch (params.family) {
    case Kind::Kn1: return {false, false, false};
    case Kind::Kn2: return {false, true, true};
    case Kind::Kn3: return {true, false, true};
    case Kind::HK: return {true, true, false};
    case Kind::HKOpposite: return {false, true, true};
    case Kind::Sandler: break;
  }
  throw DomainError("predicted_nuclei: not a family kind");
}

/// HK^op, written with the Hughes-Kleinfeld product
/// (xu + η σ(y) v, yu + σ(x) v + μ σ(y) v).
inline SemifieldSpec opposite(const FamilyParams& params) {
  if (params.family != Kind::HK && params.family != Kind::HKOpposite) {
    throw DomainError("opposite: only defined here for the HK family");
  }
  SemifieldSpec s = to_spec(params);
  s.kind = params.family == Kind::HK ? Kind::HKOpposite : Kind::HK;
  return s;
}

}  // namespace semifield

#endif  // SEMIFIELD_FAMILY_HPP
