#ifndef SEMIFIELD_MAPS_HPP
#define SEMIFIELD_MAPS_HPP

// F_p-linear maps between algebras of the same shape, stored as matrices
// whose column i is the image of the i-th F_p-basis vector.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "semifield/algebra.hpp"

namespace semifield {

inline FpMatrix matrix_from_images(const SemifieldSpec& spec, const std::vector<AlgElement>& images) {
  const std::size_t dim = spec.dimension();
  if (images.size() != dim) throw DomainError("need one image per basis vector");
  FpMatrix m(spec.tower->p(), dim, dim);
  for (std::size_t c = 0; c < dim; ++c) m.set_column(c, flatten(spec, images[c]));
  return m;
}

inline AlgElement apply(const SemifieldSpec& spec, const FpMatrix& m, const AlgElement& x) {
  return unflatten(spec, m.apply(flatten(spec, x)));
}

/// Exact test of φ(e_i e_j) = φ(e_i) φ(e_j) over all F_p-basis pairs, with the
/// products on the left taken in `src` and on the right in `dst`. Bilinearity
/// makes this equivalent to multiplicativity everywhere.
inline bool is_homomorphism(const SemifieldSpec& src, const SemifieldSpec& dst, const FpMatrix& m) {
  const std::size_t dim = src.dimension();
  if (dst.dimension() != dim || m.rows() != dim || m.cols() != dim) throw DomainError("map shape mismatch");
  std::vector<AlgElement> basis, images;
  for (std::size_t i = 0; i < dim; ++i) {
    basis.push_back(basis_element(src, i));
    images.push_back(unflatten(dst, m.column(i)));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const FpVector lhs = m.apply(flatten(src, multiply(src, basis[i], basis[j])));
      if (lhs != flatten(dst, multiply(dst, images[i], images[j]))) return false;
    }
  }
  return true;
}

inline bool fixes_unit(const SemifieldSpec& spec, const FpMatrix& m) {
  return m.column(0) == flatten(spec, unit_element(spec));
}

/// Throws VerificationError unless m is a bijective, unital, multiplicative map src → dst.
inline void verify_isomorphism(const SemifieldSpec& src, const SemifieldSpec& dst, const FpMatrix& m,
                               std::string_view what) {
  if (!is_invertible(m)) throw VerificationError(std::string(what) + ": map is not bijective");
  if (!fixes_unit(dst, m)) throw VerificationError(std::string(what) + ": map does not fix the unit");
  if (!is_homomorphism(src, dst, m)) throw VerificationError(std::string(what) + ": map is not multiplicative");
}

/// The two elements that generate every algebra built here: a primitive
/// element of L in the first coordinate, and z (Sandler) or (0, 1) (families).
inline std::pair<AlgElement, AlgElement> algebra_generators(const SemifieldSpec& spec) {
  return {monomial(spec, spec.tower->primitive(), 0), monomial(spec, spec.tower->one(), 1)};
}

/// Images of the two generators, concatenated; an automorphism is determined by it.
inline FpVector generator_key(const SemifieldSpec& spec, const FpMatrix& m) {
  const auto [g1, g2] = algebra_generators(spec);
  FpVector key = m.apply(flatten(spec, g1));
  const FpVector second = m.apply(flatten(spec, g2));
  key.insert(key.end(), second.begin(), second.end());
  return key;
}

/// A finite set of automorphisms with its Cayley table (composition a∘b).
struct MapGroup {
  std::vector<FpMatrix> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
};

/// Builds the composition table, throwing VerificationError if the set is not
/// closed or lacks the identity. A finite set of bijections closed under
/// composition is a group, so inverses follow.
inline MapGroup make_map_group(const SemifieldSpec& spec, std::vector<FpMatrix> maps) {
  MapGroup g;
  const std::size_t half = spec.dimension();
  std::map<FpVector, std::size_t> index;
  std::vector<FpVector> keys;
  for (const auto& m : maps) {
    FpVector key = generator_key(spec, m);
    if (!index.emplace(key, keys.size()).second) throw VerificationError("duplicate automorphism in the set");
    keys.push_back(std::move(key));
  }
  const FpMatrix id = FpMatrix::identity(spec.tower->p(), half);
  auto it = index.find(generator_key(spec, id));
  if (it == index.end()) throw VerificationError("automorphism set does not contain the identity");
  g.identity = it->second;
  g.table.assign(maps.size(), std::vector<std::size_t>(maps.size()));
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = 0; b < maps.size(); ++b) {
      const auto& kb = keys[b];
      FpVector composed = maps[a].apply(std::span<const std::uint32_t>(kb.data(), half));
      const FpVector second = maps[a].apply(std::span<const std::uint32_t>(kb.data() + half, half));
      composed.insert(composed.end(), second.begin(), second.end());
      auto found = index.find(composed);
      if (found == index.end()) throw VerificationError("automorphism set is not closed under composition");
      g.table[a][b] = found->second;
    }
  }
  g.elements = std::move(maps);
  return g;
}

}  // namespace semifield

#endif  // SEMIFIELD_MAPS_HPP
