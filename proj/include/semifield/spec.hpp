#ifndef SEMIFIELD_SPEC_HPP
#define SEMIFIELD_SPEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semifield/error.hpp"
#include "semifield/gf.hpp"
#include "semifield/linalg.hpp"

namespace semifield {

/// The algebra families this library constructs. HKOpposite is the
/// Hughes-Kleinfeld product written in the original (opposite) convention.
enum class Kind { Sandler, Kn1, Kn2, Kn3, HK, HKOpposite };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Sandler: return "sandler";
    case Kind::Kn1: return "kn1";
    case Kind::Kn2: return "kn2";
    case Kind::Kn3: return "kn3";
    case Kind::HK: return "hk";
    case Kind::HKOpposite: return "hk_op";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  for (Kind k : {Kind::Sandler, Kind::Kn1, Kind::Kn2, Kind::Kn3, Kind::HK, Kind::HKOpposite}) {
    if (kind_name(k) == s) return k;
  }
  throw ParseError("unknown algebra kind '" + std::string(s) + "'");
}

inline bool is_family(Kind k) { return k != Kind::Sandler; }

/// Element of a semifield: coordinates over L in the basis z^0..z^{n-1}
/// (Sandler) or the pair basis (x, y) (families).
struct AlgElement {
  std::vector<FieldElement> coords;

  friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

/// Tagged description of one algebra over a tower.
struct SemifieldSpec {
  Tower tower;
  Kind kind = Kind::Sandler;
  FieldElement a{};    // Sandler parameter
  FieldElement eta{};  // family parameters
  FieldElement mu{};
  /// Families use σ = (x ↦ x^{q^sigma_power}); Sandler algebras always use the generator.
  unsigned sigma_power = 1;

  /// Dimension over L.
  std::size_t rank() const { return kind == Kind::Sandler ? tower->n() : 2; }
  /// Dimension over F_p.
  std::size_t dimension() const { return rank() * tower->degree(); }

  FieldElement sigma(FieldElement x, std::int64_t k) const {
    const std::int64_t s = kind == Kind::Sandler ? 1 : static_cast<std::int64_t>(sigma_power);
    return tower->sigma(x, k * s);
  }
};

inline AlgElement zero_element(const SemifieldSpec& s) { return AlgElement{std::vector<FieldElement>(s.rank())}; }

inline AlgElement unit_element(const SemifieldSpec& s) {
  AlgElement out = zero_element(s);
  out.coords[0] = s.tower->one();
  return out;
}

/// Element l placed in coordinate i (l z^i, or (l,0)/(0,l)).
inline AlgElement monomial(const SemifieldSpec& s, FieldElement l, std::size_t i) {
  AlgElement out = zero_element(s);
  out.coords.at(i) = l;
  return out;
}

/// The F_p-basis element with index i·d + k, i.e. T^k in coordinate i.
inline AlgElement basis_element(const SemifieldSpec& s, std::size_t index) {
  const std::size_t d = s.tower->degree();
  std::vector<std::uint32_t> c(d, 0);
  c[index % d] = 1;
  return monomial(s, s.tower->from_coeffs(c), index / d);
}

inline FpVector flatten(const SemifieldSpec& s, const AlgElement& x) {
  const std::size_t d = s.tower->degree();
  FpVector out(s.dimension());
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    const auto c = s.tower->coeffs(x.coords[i]);
    for (std::size_t k = 0; k < d; ++k) out[i * d + k] = c[k];
  }
  return out;
}

inline AlgElement unflatten(const SemifieldSpec& s, std::span<const std::uint32_t> v) {
  const std::size_t d = s.tower->degree();
  if (v.size() != s.dimension()) throw DomainError("vector length does not match the algebra dimension");
  AlgElement out = zero_element(s);
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = s.tower->from_coeffs(std::vector<std::uint32_t>(v.begin() + static_cast<std::ptrdiff_t>(i * d),
                                                                    v.begin() + static_cast<std::ptrdiff_t>((i + 1) * d)));
  }
  return out;
}

inline AlgElement add(const FieldTower& t, const AlgElement& x, const AlgElement& y) {
  if (x.coords.size() != y.coords.size()) throw DomainError("dimension mismatch");
  AlgElement out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = t.add(out.coords[i], y.coords[i]);
  return out;
}

inline AlgElement sub(const FieldTower& t, const AlgElement& x, const AlgElement& y) {
  if (x.coords.size() != y.coords.size()) throw DomainError("dimension mismatch");
  AlgElement out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = t.sub(out.coords[i], y.coords[i]);
  return out;
}

inline bool is_zero(const AlgElement& x) {
  for (auto c : x.coords) {
    if (c.code != 0) return false;
  }
  return true;
}

inline std::string format(const SemifieldSpec& s, const AlgElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ", ";
    out += s.tower->format(x.coords[i]);
  }
  return out + ")";
}

}  // namespace semifield

#endif  // SEMIFIELD_SPEC_HPP
