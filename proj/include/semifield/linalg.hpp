#ifndef SEMIFIELD_LINALG_HPP
#define SEMIFIELD_LINALG_HPP

// Dense linear algebra over a prime field F_p (p < 2^16).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semifield/error.hpp"

namespace semifield {

using FpVector = std::vector<std::uint32_t>;

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod p");
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  FpVector column(std::size_t c) const {
    FpVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_column(std::size_t c, std::span<const std::uint32_t> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r] % p_;
  }

  /// Matrix-vector product; zero entries of v are skipped.
  FpVector apply(std::span<const std::uint32_t> v) const {
    if (v.size() != cols_) throw DomainError("matrix/vector size mismatch");
    std::vector<std::uint64_t> acc(rows_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      for (std::size_t r = 0; r < rows_; ++r) acc[r] += std::uint64_t{(*this)(r, c)} * v[c];
    }
    FpVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = static_cast<std::uint32_t>(acc[r] % p_);
    return out;
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix size mismatch");
    FpMatrix out(a.p_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::vector<std::uint64_t> acc(b.cols_, 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * b(k, j);
      }
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<std::uint32_t>(acc[j] % a.p_);
    }
    return out;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  const std::vector<std::uint32_t>& data() const { return data_; }

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Incremental row echelon form. Rows are kept fully reduced (RREF), so the
/// kernel of the accumulated system and span membership are cheap to read off.
class RowReducer {
 public:
  RowReducer(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

  std::uint32_t p() const { return p_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<FpVector>& rows() const { return rows_; }

  /// Reduces v against the current rows; returns the remainder.
  FpVector reduce(std::span<const std::uint32_t> v) const {
    FpVector r(v.begin(), v.end());
    for (auto& x : r) x %= p_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint32_t c = r[pivots_[i]];
      if (c == 0) continue;
      const std::uint64_t f = p_ - c;
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] != 0) r[j] = static_cast<std::uint32_t>((r[j] + f * row[j]) % p_);
      }
    }
    return r;
  }

  bool contains(std::span<const std::uint32_t> v) const {
    const auto r = reduce(v);
    for (auto x : r) {
      if (x != 0) return false;
    }
    return true;
  }

  /// Adds v; returns true when it increased the rank.
  bool add(std::span<const std::uint32_t> v) {
    if (v.size() != cols_) throw DomainError("row length mismatch");
    if (rows_.size() == cols_) return false;
    FpVector r = reduce(v);
    std::size_t piv = 0;
    while (piv < cols_ && r[piv] == 0) ++piv;
    if (piv == cols_) return false;
    const std::uint64_t inv = fp_inv(r[piv], p_);
    for (auto& x : r) x = static_cast<std::uint32_t>(x * inv % p_);
    for (auto& row : rows_) {
      const std::uint32_t c = row[piv];
      if (c == 0) continue;
      const std::uint64_t f = p_ - c;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (r[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + f * r[j]) % p_);
      }
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
  }

  /// Basis of {x : row·x = 0 for all rows}, one vector per free column.
  std::vector<FpVector> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<FpVector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      FpVector v(cols_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = (p_ - rows_[i][f]) % p_;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const FpMatrix& m) {
  RowReducer rr(m.p(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add(m.row(r));
  return rr.rank();
}

inline bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Right kernel {x : m x = 0}.
inline std::vector<FpVector> kernel(const FpMatrix& m) {
  RowReducer rr(m.p(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add(m.row(r));
  return rr.kernel();
}

/// Gauss-Jordan inverse; throws DomainError when singular.
inline FpMatrix inverse(const FpMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  const std::uint32_t p = m.p();
  FpMatrix a = m;
  FpMatrix inv = FpMatrix::identity(p, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const std::uint64_t s = fp_inv(a(col, col), p);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = static_cast<std::uint32_t>(a(col, j) * s % p);
      inv(col, j) = static_cast<std::uint32_t>(inv(col, j) * s % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const std::uint64_t f = p - a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = static_cast<std::uint32_t>((a(r, j) + f * a(col, j)) % p);
        inv(r, j) = static_cast<std::uint32_t>((inv(r, j) + f * inv(col, j)) % p);
      }
    }
  }
  return inv;
}

/// A subspace of F_p^n held as an RREF basis; equal subspaces have equal bases.
class Subspace {
 public:
  Subspace(std::uint32_t p, std::size_t ambient) : reducer_(p, ambient) {}
  Subspace(std::uint32_t p, std::size_t ambient, const std::vector<FpVector>& spanning) : reducer_(p, ambient) {
    for (const auto& v : spanning) reducer_.add(v);
  }

  std::uint32_t p() const { return reducer_.p(); }
  std::size_t dim() const { return reducer_.rank(); }
  std::size_t ambient() const { return reducer_.cols(); }
  const std::vector<FpVector>& basis() const { return reducer_.rows(); }
  bool contains(std::span<const std::uint32_t> v) const { return reducer_.contains(v); }
  void add(std::span<const std::uint32_t> v) { reducer_.add(v); }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis()) {
      if (!contains(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.basis() == b.basis();
  }

 private:
  RowReducer reducer_;
};

}  // namespace semifield

#endif  // SEMIFIELD_LINALG_HPP
