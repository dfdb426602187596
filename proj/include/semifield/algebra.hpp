#ifndef SEMIFIELD_ALGEBRA_HPP
#define SEMIFIELD_ALGEBRA_HPP

// Generic layer shared by every construction: multiplication dispatch,
// associators, and exact F_p-linear computation of nuclei and centres.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "semifield/config.hpp"
#include "semifield/family.hpp"
#include "semifield/linalg.hpp"
#include "semifield/sandler.hpp"
#include "semifield/spec.hpp"

namespace semifield {

inline AlgElement multiply(const SemifieldSpec& spec, const AlgElement& x, const AlgElement& y) {
  if (x.coords.size() != spec.rank() || y.coords.size() != spec.rank()) {
    throw DomainError("element dimension does not match the algebra");
  }
  if (spec.kind == Kind::Sandler) return sandler_multiply(*spec.tower, spec.a, x, y);
  return family_multiply(spec, x, y);
}

/// [x, y, z] = (xy)z - x(yz).
inline AlgElement associator(const SemifieldSpec& spec, const AlgElement& x, const AlgElement& y, const AlgElement& z) {
  return sub(*spec.tower, multiply(spec, multiply(spec, x, y), z), multiply(spec, x, multiply(spec, y, z)));
}

/// Structure constants over F_p: basis_product(i, j) = e_i e_j.
class StructureTensor {
 public:
  StructureTensor(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim), table_(dim * dim * dim, 0) {}

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }

  std::span<const std::uint32_t> basis_product(std::size_t i, std::size_t j) const {
    return {table_.data() + (i * dim_ + j) * dim_, dim_};
  }

  void set_basis_product(std::size_t i, std::size_t j, std::span<const std::uint32_t> v) {
    for (std::size_t c = 0; c < dim_; ++c) table_[(i * dim_ + j) * dim_ + c] = v[c] % p_;
  }

  FpVector product(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t w = std::uint64_t{x[i]} * y[j] % p_;
        const auto bp = basis_product(i, j);
        for (std::size_t c = 0; c < dim_; ++c) acc[c] += w * bp[c];
      }
    }
    FpVector out(dim_);
    for (std::size_t c = 0; c < dim_; ++c) out[c] = static_cast<std::uint32_t>(acc[c] % p_);
    return out;
  }

  /// Matrix of y ↦ x y.
  FpMatrix left_multiplication(std::span<const std::uint32_t> x) const {
    FpMatrix m(p_, dim_, dim_);
    std::vector<std::uint64_t> col(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::fill(col.begin(), col.end(), 0);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        const auto bp = basis_product(i, j);
        for (std::size_t c = 0; c < dim_; ++c) col[c] += std::uint64_t{x[i]} * bp[c];
      }
      for (std::size_t c = 0; c < dim_; ++c) m(c, j) = static_cast<std::uint32_t>(col[c] % p_);
    }
    return m;
  }

  StructureTensor opposite() const {
    StructureTensor out(p_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) out.set_basis_product(i, j, basis_product(j, i));
    }
    return out;
  }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::uint32_t> table_;
};

inline StructureTensor structure_tensor(const SemifieldSpec& spec) {
  const std::size_t dim = spec.dimension();
  if (dim > 128) throw SizeLimitError("structure tensor of dimension " + std::to_string(dim) + " is too large");
  std::vector<AlgElement> basis;
  basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(basis_element(spec, i));
  StructureTensor out(spec.tower->p(), dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out.set_basis_product(i, j, flatten(spec, multiply(spec, basis[i], basis[j])));
  }
  return out;
}

/// L itself as an F_p-algebra (associative and commutative).
inline StructureTensor field_tensor(const FieldTower& t) {
  const std::size_t d = t.degree();
  StructureTensor out(t.p(), d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.set_basis_product(i, j, t.coeffs(t.mul(t.pow(t.gen_t(), static_cast<std::int64_t>(i)),
                                                   t.pow(t.gen_t(), static_cast<std::int64_t>(j)))));
    }
  }
  return out;
}

/// Associator of three F_p-basis vectors.
inline FpVector basis_associator(const StructureTensor& st, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t dim = st.dim();
  const std::uint32_t p = st.p();
  std::vector<std::uint64_t> acc(dim, 0);
  const auto ij = st.basis_product(i, j);
  for (std::size_t a = 0; a < dim; ++a) {
    if (ij[a] == 0) continue;
    const auto ak = st.basis_product(a, k);
    for (std::size_t c = 0; c < dim; ++c) acc[c] += std::uint64_t{ij[a]} * ak[c];
  }
  const auto jk = st.basis_product(j, k);
  for (std::size_t b = 0; b < dim; ++b) {
    if (jk[b] == 0) continue;
    const auto ib = st.basis_product(i, b);
    const std::uint64_t neg = p - jk[b];
    for (std::size_t c = 0; c < dim; ++c) acc[c] += neg * ib[c];
  }
  FpVector out(dim);
  for (std::size_t c = 0; c < dim; ++c) out[c] = static_cast<std::uint32_t>(acc[c] % p);
  return out;
}

enum class Side { Left, Middle, Right };

inline std::string_view side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Middle: return "middle";
    case Side::Right: return "right";
  }
  return "?";
}

namespace detail {

inline std::vector<FpVector> orthogonal_complement(std::uint32_t p, std::size_t ambient, const std::vector<FpVector>& basis) {
  RowReducer rr(p, ambient);
  for (const auto& v : basis) rr.add(v);
  return rr.kernel();
}

/// Adds the rows of "x ↦ f(x)" where column i of the block is f(e_i).
inline void add_block(RowReducer& rr, const std::vector<FpVector>& columns) {
  const std::size_t dim = columns.size();
  if (dim == 0) return;
  FpVector row(dim);
  for (std::size_t c = 0; c < columns[0].size(); ++c) {
    for (std::size_t i = 0; i < dim; ++i) row[i] = columns[i][c];
    rr.add(row);
    if (rr.rank() == dim) return;
  }
}

}  // namespace detail

/// U ∩ W computed as (U^⊥ + W^⊥)^⊥ for the standard dot product.
inline Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw DomainError("intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient();
  const std::uint32_t p = u.p();
  RowReducer rr(p, n);
  for (const auto& v : detail::orthogonal_complement(p, n, u.basis())) rr.add(v);
  for (const auto& v : detail::orthogonal_complement(p, n, w.basis())) rr.add(v);
  return Subspace(p, n, rr.kernel());
}

inline FpVector unit_vector(std::size_t dim, std::size_t index = 0) {
  FpVector v(dim, 0);
  v[index] = 1;
  return v;
}

/// Throws unless the subspace contains e_0 (the unit of every algebra built
/// here) and is closed under multiplication.
inline void verify_subalgebra(const StructureTensor& st, const Subspace& s, std::string_view what) {
  if (!s.contains(unit_vector(st.dim()))) throw VerificationError(std::string(what) + " does not contain the unit");
  for (const auto& u : s.basis()) {
    for (const auto& v : s.basis()) {
      if (!s.contains(st.product(u, v))) throw VerificationError(std::string(what) + " is not closed under multiplication");
    }
  }
}

/// Nucleus on one side, as the kernel of the F_p-linear map
/// x ↦ ([x, e_j, e_k])_{j,k} (resp. middle/right slot). Trilinearity of the
/// associator makes basis pairs sufficient.
inline Subspace nucleus(const StructureTensor& st, Side side) {
  const std::size_t dim = st.dim();
  RowReducer rr(st.p(), dim);
  std::vector<FpVector> columns(dim);
  for (std::size_t a = 0; a < dim && rr.rank() < dim; ++a) {
    for (std::size_t b = 0; b < dim && rr.rank() < dim; ++b) {
      for (std::size_t x = 0; x < dim; ++x) {
        switch (side) {
          case Side::Left: columns[x] = basis_associator(st, x, a, b); break;
          case Side::Middle: columns[x] = basis_associator(st, a, x, b); break;
          case Side::Right: columns[x] = basis_associator(st, a, b, x); break;
        }
      }
      detail::add_block(rr, columns);
    }
  }
  Subspace out(st.p(), dim, rr.kernel());
  verify_subalgebra(st, out, std::string(side_name(side)) + " nucleus");
  return out;
}

/// {x : x e_j = e_j x for all j}.
inline Subspace commutative_centre(const StructureTensor& st) {
  const std::size_t dim = st.dim();
  const std::uint32_t p = st.p();
  RowReducer rr(p, dim);
  std::vector<FpVector> columns(dim, FpVector(dim));
  for (std::size_t j = 0; j < dim && rr.rank() < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      const auto ij = st.basis_product(i, j);
      const auto ji = st.basis_product(j, i);
      for (std::size_t c = 0; c < dim; ++c) columns[i][c] = (ij[c] + p - ji[c]) % p;
    }
    detail::add_block(rr, columns);
  }
  return Subspace(p, dim, rr.kernel());
}

struct Nuclei {
  Subspace left;
  Subspace middle;
  Subspace right;
  Subspace nucleus;  // intersection of the three
};

inline Nuclei all_nuclei(const StructureTensor& st) {
  Subspace l = nucleus(st, Side::Left);
  Subspace m = nucleus(st, Side::Middle);
  Subspace r = nucleus(st, Side::Right);
  Subspace n = intersect(intersect(l, m), r);
  return Nuclei{std::move(l), std::move(m), std::move(r), std::move(n)};
}

struct Centres {
  Subspace center;
  Subspace commutative_centre;
};

/// Commutative centre K and centre Z = K ∩ Nuc.
inline Centres center_and_commutative_centre(const StructureTensor& st) {
  Subspace k = commutative_centre(st);
  const Nuclei nuc = all_nuclei(st);
  Subspace z = intersect(k, nuc.nucleus);
  return Centres{std::move(z), std::move(k)};
}

/// True iff every nonzero x has invertible left multiplication. Visits one
/// x per F_p-line; throws SizeLimitError above max_order.
inline bool is_division(const StructureTensor& st, std::uint64_t max_order = max_search_order(SearchScope::SingleSpec)) {
  const std::size_t dim = st.dim();
  const std::uint32_t p = st.p();
  if (saturating_order(p, dim) > max_order) {
    throw SizeLimitError("is_division: algebra order " + std::to_string(p) + "^" + std::to_string(dim) +
                         " exceeds the search bound");
  }
  FpVector x(dim, 0);
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      if (!is_invertible(st.left_multiplication(x))) return false;
      std::size_t pos = lead + 1;
      while (pos < dim && x[pos] == p - 1) x[pos++] = 0;
      if (pos >= dim) break;
      ++x[pos];
    }
  }
  return true;
}

/// Subspace L ⊕ 0 (families) or L z^0 (Sandler).
inline Subspace embedded_field(const SemifieldSpec& spec) {
  const std::size_t dim = spec.dimension();
  std::vector<FpVector> basis;
  for (std::size_t k = 0; k < spec.tower->degree(); ++k) basis.push_back(unit_vector(dim, k));
  return Subspace(spec.tower->p(), dim, basis);
}

inline bool is_division(const SemifieldSpec& spec) { return is_division(structure_tensor(spec)); }
inline Subspace nucleus(const SemifieldSpec& spec, Side side) { return nucleus(structure_tensor(spec), side); }
inline Centres center_and_commutative_centre(const SemifieldSpec& spec) {
  return center_and_commutative_centre(structure_tensor(spec));
}

/// Division status from the cheapest exact criterion: the matrix test when
/// the algebra is small enough, otherwise the construction-specific theorem.
inline bool division_status(const SemifieldSpec& spec) {
  if (saturating_order(spec.tower->p(), spec.dimension()) <= max_search_order(SearchScope::SingleSpec)) {
    return is_division(spec);
  }
  if (spec.kind == Kind::Sandler) return is_division_by_independence(sandler_params(spec));
  return is_division_family(*spec.tower, spec.eta, spec.mu, spec.sigma_power);
}

struct Fingerprint {
  std::uint32_t p = 0;
  std::size_t dim = 0;  // over F_p; the order is p^dim
  Kind kind = Kind::Sandler;
  std::map<std::string, std::string> params;
  bool is_division = false;
  std::size_t nuc_left = 0;
  std::size_t nuc_middle = 0;
  std::size_t nuc_right = 0;
  std::size_t nucleus = 0;
  std::size_t center = 0;
  /// Which nuclei coincide as subspaces: (left = middle, middle = right, left = right).
  /// Isomorphisms carry each nucleus onto the same-sided one, so this is invariant.
  std::array<bool, 3> coincide{};

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// The isomorphism-invariant part of a fingerprint (drops kind and parameters).
struct InvariantFingerprint {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  bool is_division = false;
  std::array<std::size_t, 5> dims{};  // left, middle, right, nucleus, center
  std::array<bool, 3> coincide{};

  friend auto operator<=>(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

inline std::map<std::string, std::string> spec_params(const SemifieldSpec& spec) {
  const FieldTower& t = *spec.tower;
  std::map<std::string, std::string> out{{"p", std::to_string(t.p())},
                                         {"e", std::to_string(t.e())},
                                         {"n", std::to_string(t.n())},
                                         {"modulus", poly::format(t.modulus())}};
  if (spec.kind == Kind::Sandler) {
    out["a"] = t.format(spec.a);
  } else {
    out["eta"] = t.format(spec.eta);
    out["mu"] = t.format(spec.mu);
    out["sigma_power"] = std::to_string(spec.sigma_power);
  }
  return out;
}

enum class DivisionTest { Matrix, Theorem };

/// `Matrix` decides division by scanning left multiplications (up to the
/// single-spec bound); `Theorem` uses the independence or root criterion.
inline Fingerprint fingerprint(const SemifieldSpec& spec, DivisionTest test = DivisionTest::Matrix) {
  const StructureTensor st = structure_tensor(spec);
  const Nuclei nuc = all_nuclei(st);
  const Subspace k = commutative_centre(st);
  Fingerprint f;
  f.p = spec.tower->p();
  f.dim = spec.dimension();
  f.kind = spec.kind;
  f.params = spec_params(spec);
  if (test == DivisionTest::Matrix && saturating_order(f.p, f.dim) <= max_search_order(SearchScope::SingleSpec)) {
    f.is_division = is_division(st);
  } else if (spec.kind == Kind::Sandler) {
    f.is_division = is_division_by_independence(sandler_params(spec));
  } else {
    f.is_division = is_division_family(*spec.tower, spec.eta, spec.mu, spec.sigma_power);
  }
  f.nuc_left = nuc.left.dim();
  f.nuc_middle = nuc.middle.dim();
  f.nuc_right = nuc.right.dim();
  f.nucleus = nuc.nucleus.dim();
  f.center = intersect(k, nuc.nucleus).dim();
  f.coincide = {nuc.left == nuc.middle, nuc.middle == nuc.right, nuc.left == nuc.right};
  return f;
}

inline InvariantFingerprint invariants(const Fingerprint& f) {
  return InvariantFingerprint{f.p, f.dim, f.is_division, {f.nuc_left, f.nuc_middle, f.nuc_right, f.nucleus, f.center},
                              f.coincide};
}

}  // namespace semifield

#endif  // SEMIFIELD_ALGEBRA_HPP
