#ifndef SEMIFIELD_SANDLER_HPP
#define SEMIFIELD_SANDLER_HPP

// Nonassociative cyclic algebras (L/F, σ, a) = L ⊕ Lz ⊕ ... ⊕ Lz^{n-1} with
//   (l z^i)(m z^j) = l σ^i(m) z^{i+j}        if i + j < n
//                  = l σ^i(m) a z^{i+j-n}    otherwise.

#include <cstddef>
#include <string>
#include <vector>

#include "semifield/spec.hpp"

namespace semifield {

struct SandlerParams {
  Tower tower;
  FieldElement a;
};

/// Validates a ∈ L \ F. Non-division parameters (a in a proper subfield) are allowed.
inline SandlerParams make_sandler(Tower tower, FieldElement a) {
  if (!tower->contains(a)) throw DomainError("parameter a is not an element of L");
  if (tower->in_base_field(a)) {
    throw DomainError("parameter a = " + tower->format(a) + " lies in F; a nonassociative cyclic algebra needs a in L \\ F");
  }
  return SandlerParams{std::move(tower), a};
}

inline SandlerParams make_sandler(Tower tower, std::string_view a_text) {
  const FieldElement a = tower->parse(a_text);
  return make_sandler(std::move(tower), a);
}

inline SemifieldSpec to_spec(const SandlerParams& params) {
  SemifieldSpec s;
  s.tower = params.tower;
  s.kind = Kind::Sandler;
  s.a = params.a;
  return s;
}

inline SandlerParams sandler_params(const SemifieldSpec& s) {
  if (s.kind != Kind::Sandler) throw DomainError("not a Sandler algebra");
  return SandlerParams{s.tower, s.a};
}

/// (l z^i)(m z^j) as an element of the algebra.
inline AlgElement multiply_monomial(const SandlerParams& params, FieldElement l, std::size_t i, FieldElement m,
                                    std::size_t j) {
  const FieldTower& t = *params.tower;
  const std::size_t n = t.n();
  if (i >= n || j >= n) throw DomainError("monomial index out of range");
  AlgElement out{std::vector<FieldElement>(n)};
  FieldElement c = t.mul(l, t.sigma(m, static_cast<std::int64_t>(i)));
  if (i + j >= n) c = t.mul(c, params.a);
  out.coords[(i + j) % n] = c;
  return out;
}

/// Bilinear extension of the monomial rule.
inline AlgElement sandler_multiply(const FieldTower& t, FieldElement a, const AlgElement& x, const AlgElement& y) {
  const std::size_t n = t.n();
  if (x.coords.size() != n || y.coords.size() != n) throw DomainError("element dimension does not match the algebra");
  AlgElement out{std::vector<FieldElement>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords[i].code == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coords[j].code == 0) continue;
      FieldElement c = t.mul(x.coords[i], t.sigma(y.coords[j], static_cast<std::int64_t>(i)));
      if (i + j >= n) c = t.mul(c, a);
      auto& slot = out.coords[(i + j) % n];
      slot = t.add(slot, c);
    }
  }
  return out;
}

/// True iff 1, a, ..., a^{n-1} are linearly independent over F.
///
/// The F-span of the powers is the F_p-span of {f a^i} for an F_p-basis f of
/// F, so independence over F means that span has F_p-dimension e·n.
inline bool is_division_by_independence(const SandlerParams& params) {
  const FieldTower& t = *params.tower;
  RowReducer rr(t.p(), t.degree());
  const auto fbasis = t.base_field_basis();
  FieldElement power = t.one();
  for (unsigned i = 0; i < t.n(); ++i) {
    for (auto f : fbasis) rr.add(t.coeffs(t.mul(f, power)));
    power = t.mul(power, params.a);
  }
  return rr.rank() == t.degree();
}

/// A finite (L/F, σ, a) is a semifield iff a lies in no proper subfield of L.
inline bool is_semifield(const SandlerParams& params) {
  return subfield_degree(*params.tower, params.a) == params.tower->n();
}

struct LeftNucleusPrediction {
  /// Smallest s > 0 with σ^s(a) = a (s = n when a generates L over F).
  unsigned s = 0;
  /// Powers of z spanning the prediction: 0, s, 2s, ..., n - s.
  std::vector<unsigned> z_powers;
  /// F_p-dimension of L ⊕ Lz^s ⊕ ... ⊕ Lz^{n-s}.
  std::size_t dim = 0;
  /// F_p-basis of the prediction in the flattened coordinates.
  std::vector<FpVector> basis;
};

inline LeftNucleusPrediction predicted_left_nucleus(const SandlerParams& params) {
  const FieldTower& t = *params.tower;
  LeftNucleusPrediction out;
  out.s = subfield_degree(t, params.a);
  const SemifieldSpec spec = to_spec(params);
  for (unsigned k = 0; k < t.n(); k += out.s) {
    out.z_powers.push_back(k);
    for (unsigned c = 0; c < t.degree(); ++c) out.basis.push_back(flatten(spec, basis_element(spec, k * t.degree() + c)));
  }
  out.dim = out.basis.size();
  return out;
}

}  // namespace semifield

#endif  // SEMIFIELD_SANDLER_HPP
