#ifndef SEMIFIELD_TESTS_SUPPORT_HPP
#define SEMIFIELD_TESTS_SUPPORT_HPP

// Reference implementations for tests. Nothing here calls the library's
// sigma(), multiply() or structure tensor code.

#include <cstdint>
#include <random>
#include <vector>

#include "semifield/semifield.hpp"

namespace testsupport {

using namespace semifield;

/// x^(q^k) by repeated q-th powering; k may be negative.
inline FieldElement ref_sigma(const FieldTower& t, FieldElement x, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(t.n());
  k = ((k % n) + n) % n;
  for (std::int64_t i = 0; i < k; ++i) x = t.pow(x, t.q());
  return x;
}

inline AlgElement ref_sandler_product(const FieldTower& t, FieldElement a, const AlgElement& x, const AlgElement& y) {
  const std::size_t n = t.n();
  AlgElement out{std::vector<FieldElement>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement c = t.mul(x.coords[i], ref_sigma(t, y.coords[j], static_cast<std::int64_t>(i)));
      if (i + j >= n) c = t.mul(c, a);
      out.coords[(i + j) % n] = t.add(out.coords[(i + j) % n], c);
    }
  }
  return out;
}

/// The five family products written out term by term.
inline AlgElement ref_family_product(const FieldTower& t, Kind kind, FieldElement eta, FieldElement mu, unsigned sp,
                                     const AlgElement& a, const AlgElement& b) {
  const FieldElement x = a.coords[0], y = a.coords[1], u = b.coords[0], v = b.coords[1];
  auto s = [&](FieldElement w, std::int64_t k) { return ref_sigma(t, w, k * static_cast<std::int64_t>(sp)); };
  auto m = [&](FieldElement p, FieldElement q) { return t.mul(p, q); };
  FieldElement first, second;
  switch (kind) {
    case Kind::Kn1:
      first = t.add(m(x, u), m(eta, m(s(v, 1), s(y, -2))));
      second = t.add(t.add(m(v, x), m(y, s(u, 1))), m(mu, m(s(v, 1), s(y, -1))));
      break;
    case Kind::Kn2:
      first = t.add(m(x, u), m(eta, m(s(v, -1), s(y, -2))));
      second = t.add(t.add(m(v, x), m(y, s(u, 1))), m(mu, m(v, s(y, -1))));
      break;
    case Kind::Kn3:
      first = t.add(m(x, u), m(eta, m(s(v, -1), y)));
      second = t.add(t.add(m(v, x), m(y, s(u, 1))), m(mu, m(v, y)));
      break;
    case Kind::HK:
      first = t.add(m(x, u), m(eta, m(s(v, 1), y)));
      second = t.add(t.add(m(v, x), m(y, s(u, 1))), m(mu, m(s(v, 1), y)));
      break;
    case Kind::HKOpposite:
      first = t.add(m(x, u), m(eta, m(s(y, 1), v)));
      second = t.add(t.add(m(y, u), m(s(x, 1), v)), m(mu, m(s(y, 1), v)));
      break;
    case Kind::Sandler: break;
  }
  return AlgElement{{first, second}};
}

inline AlgElement ref_product(const SemifieldSpec& s, const AlgElement& x, const AlgElement& y) {
  if (s.kind == Kind::Sandler) return ref_sandler_product(*s.tower, s.a, x, y);
  return ref_family_product(*s.tower, s.kind, s.eta, s.mu, s.sigma_power, x, y);
}

/// Element number `code` in base |L| over the coordinates.
inline AlgElement element_at(const SemifieldSpec& s, std::uint64_t code) {
  AlgElement out = zero_element(s);
  for (auto& c : out.coords) {
    c = FieldElement{static_cast<std::uint32_t>(code % s.tower->order())};
    code /= s.tower->order();
  }
  return out;
}

inline std::uint64_t algebra_order(const SemifieldSpec& s) { return saturating_order(s.tower->p(), s.dimension()); }

inline AlgElement random_element(const SemifieldSpec& s, std::mt19937_64& rng) {
  AlgElement out = zero_element(s);
  for (auto& c : out.coords) c = FieldElement{static_cast<std::uint32_t>(rng() % s.tower->order())};
  return out;
}

inline AlgElement scale(const FieldTower& t, FieldElement c, const AlgElement& x) {
  AlgElement out = x;
  for (auto& v : out.coords) v = t.mul(c, v);
  return out;
}

/// All a ∈ L \ F.
inline std::vector<FieldElement> outside_base(const FieldTower& t) {
  std::vector<FieldElement> out;
  for (std::uint32_t c = 0; c < t.order(); ++c) {
    if (!t.in_base_field(FieldElement{c})) out.push_back(FieldElement{c});
  }
  return out;
}

/// Prime-power towers (p, e, n) whose Sandler algebras have order ≤ max_order.
struct Shape {
  std::uint32_t p;
  unsigned e, n;
};

inline std::vector<Shape> sandler_shapes(std::uint64_t max_order) {
  std::vector<Shape> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e = 1; e <= 6; ++e) {
      for (unsigned n = 2; n <= 6; ++n) {
        if (saturating_order(p, std::size_t{e} * n * n) <= max_order) out.push_back({p, e, n});
      }
    }
  }
  return out;
}

}  // namespace testsupport

#endif  // SEMIFIELD_TESTS_SUPPORT_HPP
