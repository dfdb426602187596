#ifndef SEMIFIELD_CLASSIFY_HPP
#define SEMIFIELD_CLASSIFY_HPP

// Isomorphism classes of Sandler algebras over a fixed tower:
// A_a ≅ A_b iff σ^i(a) = k b for some i and some k ∈ F^×.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semifield/autgroup.hpp"

namespace semifield {

struct IsoWitness {
  unsigned i = 0;
  FieldElement k{};
  /// Some l with N(l) = k.
  FieldElement l{};
  /// Matrix of A_a → A_b, x z^j ↦ σ^i(x) l σ(l) ... σ^{j-1}(l) z^j.
  FpMatrix matrix;
};

/// Witness for A_a ≅ A_b, or nullopt. The map is verified exactly.
inline std::optional<IsoWitness> are_isomorphic(const SandlerParams& a, const SandlerParams& b) {
  if (!(*a.tower == *b.tower)) throw DomainError("are_isomorphic: the algebras are built over different towers");
  const FieldTower& t = *a.tower;
  for (unsigned i = 0; i < t.n(); ++i) {
    const FieldElement k = t.div(t.sigma(a.a, i), b.a);
    if (!t.in_base_field(k)) continue;
    const auto fiber = norm_fiber(t, k);
    if (fiber.empty()) throw VerificationError("norm is not surjective onto F^x");
    IsoWitness w{i, k, fiber.front(), {}};
    const SemifieldSpec src = to_spec(a), dst = to_spec(b);
    w.matrix = sandler_map_matrix(src, i, w.l);
    verify_isomorphism(src, dst, w.matrix, "isomorphism A_a -> A_b");
    return w;
  }
  return std::nullopt;
}

struct SandlerClass {
  FieldElement representative{};
  std::vector<FieldElement> members;  // increasing code order
  std::size_t size() const { return members.size(); }
};

struct ClassificationReport {
  Tower tower;
  std::vector<SandlerClass> classes;  // ordered by representative
  std::size_t class_count = 0;
  /// Closed-form count, when n is prime.
  std::optional<std::uint64_t> formula_count;
};

/// Number of classes for prime r:
///   r - 1 + (q^r - q - (q-1)(r-1)) / (r(q-1))   if r | q - 1,
///   (q^r - q) / (r(q-1))                          otherwise.
inline std::uint64_t predicted_class_count(std::uint64_t q, std::uint64_t r) {
  if (!is_prime(r)) throw DomainError("predicted_class_count: r = " + std::to_string(r) + " is not prime");
  if (!as_prime_power(q)) throw DomainError("predicted_class_count: q = " + std::to_string(q) + " is not a prime power");
  const std::uint64_t qr = checked_pow(q, static_cast<unsigned>(r));
  const std::uint64_t denom = r * (q - 1);
  if ((q - 1) % r == 0) {
    const std::uint64_t num = qr - q - (q - 1) * (r - 1);
    if (num % denom != 0) throw Error("predicted_class_count: formula is not an integer");
    return r - 1 + num / denom;
  }
  const std::uint64_t num = qr - q;
  if (num % denom != 0) throw Error("predicted_class_count: formula is not an integer");
  return num / denom;
}

/// Orbits of L \ F under a ↦ k σ^i(a), k ∈ F^×.
inline ClassificationReport enumerate_classes(const Tower& tower) {
  const FieldTower& t = *tower;
  ClassificationReport rep;
  rep.tower = tower;
  const auto scalars = t.base_field_elements();
  std::vector<bool> seen(t.order(), false);
  for (std::uint32_t c = 0; c < t.order(); ++c) {
    const FieldElement a{c};
    if (seen[c] || t.in_base_field(a)) continue;
    SandlerClass cls;
    cls.representative = a;
    for (unsigned i = 0; i < t.n(); ++i) {
      const FieldElement sa = t.sigma(a, i);
      for (auto k : scalars) {
        if (k.code == 0) continue;
        const FieldElement b = t.mul(k, sa);
        if (!seen[b.code]) {
          seen[b.code] = true;
          cls.members.push_back(b);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    rep.classes.push_back(std::move(cls));
  }
  rep.class_count = rep.classes.size();
  if (is_prime(t.n())) rep.formula_count = predicted_class_count(t.q(), t.n());
  return rep;
}

}  // namespace semifield

#endif  // SEMIFIELD_CLASSIFY_HPP
