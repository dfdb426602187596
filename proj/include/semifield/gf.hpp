#ifndef SEMIFIELD_GF_HPP
#define SEMIFIELD_GF_HPP

// Exact arithmetic in a tower F_p ⊂ F = F_q ⊂ L = F_{q^n}.
//
// L is represented once, over the prime field, as F_p[T]/(f) with deg f = e·n.
// Elements are stored as the base-p integer of their coefficient vector, so the
// zero element has code 0, the unit has code 1 and the class of T has code p.
// Multiplication goes through discrete log tables and addition through a Zech
// table; both are built eagerly at construction, after which a tower is
// immutable and may be shared freely between threads.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semifield/error.hpp"

namespace semifield {

/// Largest |L| a tower may have (log tables are |L| entries wide).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

/// An element of L, identified by the base-p integer of its coordinates in
/// the power basis 1, T, ..., T^{d-1}.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns (p, k) with q = p^k, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (q > 1) {
    q /= factors[0];
    ++k;
  }
  return std::pair{factors[0], k};
}

/// Integer power; throws SizeLimitError on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) throw SizeLimitError("integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

namespace poly {

/// Little-endian coefficients over F_p.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) {
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// a mod f for any nonzero f.
inline Poly mod(Poly a, const Poly& f, std::uint32_t p) {
  const int df = degree(f);
  const std::uint32_t lead_inv = inv_mod(f[df], p);
  for (int i = degree(a); i >= df; i = degree(a)) {
    const std::uint64_t c = std::uint64_t{a[i]} * lead_inv % p;
    for (int j = 0; j <= df; ++j) {
      const std::uint64_t sub = c * f[j] % p;
      a[i - df + j] = static_cast<std::uint32_t>((a[i - df + j] + p - sub) % p);
    }
  }
  trim(a);
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return mod(std::move(prod), f, p);
}

inline Poly powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
  trim(a);
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: f of degree d is irreducible iff X^{p^d} = X mod f and
/// gcd(X^{p^{d/r}} - X, f) = 1 for every prime r | d.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  // frob[k] = X^{p^k} mod f
  std::vector<Poly> frob{mod(x, f, p)};
  for (int k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), p, f, p));
  if (sub(frob[d], mod(x, f, p), p) != Poly{}) return false;
  for (const auto r : prime_factors(static_cast<std::uint64_t>(d))) {
    const Poly g = gcd(f, sub(frob[d / r], x, p), p);
    if (degree(g) != 0) return false;
  }
  return true;
}

/// Parses a polynomial in T over F_p ("T^2+T+1", "2T-1", "T^2 - 2").
/// Coefficients are reduced mod p; no reduction by a modulus happens.
inline Poly parse(std::string_view text, std::uint32_t p) {
  Poly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](std::uint64_t& value) {
    const std::size_t start = i;
    value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > (std::uint64_t{1} << 40)) throw ParseError("integer too large in '" + std::string(text) + "'");
      ++i;
    }
    return i > start;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial text");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::uint64_t coeff = 0;
    const bool has_coeff = read_int(coeff);
    if (!has_coeff) coeff = 1;
    skip_ws();
    if (has_coeff && i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    std::uint64_t deg = 0;
    if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
      ++i;
      deg = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (!read_int(deg)) throw ParseError("missing exponent in '" + std::string(text) + "'");
      }
    } else if (!has_coeff) {
      throw ParseError("malformed term in '" + std::string(text) + "'");
    }
    if (deg > 4096) throw ParseError("exponent too large in '" + std::string(text) + "'");
    if (out.size() <= deg) out.resize(deg + 1, 0);
    std::uint64_t c = coeff % p;
    if (negative) c = (p - c) % p;
    out[deg] = static_cast<std::uint32_t>((out[deg] + c) % p);
  }
  trim(out);
  return out;
}

inline std::string format(const Poly& a) {
  std::string out;
  for (int i = degree(a); i >= 0; --i) {
    const auto c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += 'T';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace poly

/// The tower F_p ⊂ F_q ⊂ F_{q^n} with σ = (x ↦ x^q) generating Gal(L/F).
class FieldTower {
 public:
  /// Builds the tower; with no modulus, the canonical one is used: the
  /// lexicographically smallest monic irreducible of degree e·n, comparing
  /// (c_0, ..., c_{d-1}) with c_0 most significant.
  FieldTower(std::uint32_t p, unsigned e, unsigned n, std::optional<poly::Poly> modulus = std::nullopt)
      : p_(p), e_(e), n_(n) {
    if (!is_prime(p)) throw DomainError("characteristic p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw DomainError("e must be at least 1");
    if (n < 2) throw DomainError("extension degree n must be at least 2");
    d_ = e * n;
    std::uint64_t order = 1;
    for (unsigned i = 0; i < d_; ++i) {
      order *= p;
      if (order > kMaxFieldOrder) {
        throw SizeLimitError("|L| = " + std::to_string(p) + "^" + std::to_string(d_) + " exceeds the bound 2^16");
      }
    }
    order_ = static_cast<std::uint32_t>(order);
    q_ = static_cast<std::uint32_t>(checked_pow(p, e));

    if (modulus) {
      poly::Poly f = *modulus;
      for (auto& c : f) c %= p;
      poly::trim(f);
      if (poly::degree(f) != static_cast<int>(d_) || f.back() != 1) {
        throw DomainError("modulus must be monic of degree e*n = " + std::to_string(d_));
      }
      if (!poly::is_irreducible(f, p)) throw DomainError("modulus " + poly::format(f) + " is not irreducible over F_p");
      modulus_ = std::move(f);
    } else {
      modulus_ = canonical_modulus(p, d_);
    }
    build_tables();
  }

  static poly::Poly canonical_modulus(std::uint32_t p, unsigned d) {
    // Enumerate (c_0, ..., c_{d-1}) in lexicographic order, c_0 most significant.
    std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      poly::Poly f(d + 1, 0);
      std::uint64_t v = idx;
      for (unsigned k = d; k > 0; --k) {
        f[k - 1] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[d] = 1;
      if (f[0] == 0) continue;
      if (poly::is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable
  }

  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned n() const { return n_; }
  /// [L : F_p] = e·n.
  unsigned degree() const { return d_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t order() const { return order_; }
  /// σ = Frobenius^{sigma_power} over F_p; always e.
  unsigned sigma_power() const { return e_; }
  const poly::Poly& modulus() const { return modulus_; }
  FieldElement primitive() const { return FieldElement{exp_[1]}; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Class of T in F_p[T]/(f).
  FieldElement gen_t() const { return d_ == 1 ? FieldElement{0} : FieldElement{p_}; }

  bool contains(FieldElement x) const { return x.code < order_; }

  FieldElement from_int(std::int64_t c) const {
    const auto p = static_cast<std::int64_t>(p_);
    return FieldElement{static_cast<std::uint32_t>(((c % p) + p) % p)};
  }

  std::vector<std::uint32_t> coeffs(FieldElement x) const {
    std::vector<std::uint32_t> out(d_);
    for (unsigned i = 0; i < d_; ++i) {
      out[i] = x.code % p_;
      x.code /= p_;
    }
    return out;
  }

  FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > d_) throw DomainError("too many coefficients for this field");
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i > 0; --i) code = code * p_ + c[i - 1] % p_;
    return FieldElement{code};
  }

  FieldElement add(FieldElement x, FieldElement y) const {
    if (p_ == 2) return FieldElement{x.code ^ y.code};
    if (x.code == 0) return y;
    if (y.code == 0) return x;
    const std::uint32_t lx = log_[x.code];
    const std::uint32_t k = (log_[y.code] + mult_order_ - lx) % mult_order_;
    const std::uint32_t z = zech_[k];
    if (z == kNoLog) return FieldElement{0};
    return FieldElement{exp_[(lx + z) % mult_order_]};
  }

  FieldElement neg(FieldElement x) const {
    if (p_ == 2 || x.code == 0) return x;
    return FieldElement{exp_[(log_[x.code] + mult_order_ / 2) % mult_order_]};
  }

  FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

  FieldElement mul(FieldElement x, FieldElement y) const {
    if (x.code == 0 || y.code == 0) return FieldElement{0};
    return FieldElement{exp_[(log_[x.code] + log_[y.code]) % mult_order_]};
  }

  FieldElement inv(FieldElement x) const {
    if (x.code == 0) throw DomainError("inverse of zero");
    return FieldElement{exp_[(mult_order_ - log_[x.code]) % mult_order_]};
  }

  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

  FieldElement pow(FieldElement x, std::int64_t k) const {
    if (x.code == 0) {
      if (k < 0) throw DomainError("negative power of zero");
      return k == 0 ? one() : zero();
    }
    const auto m = static_cast<std::int64_t>(mult_order_);
    const std::int64_t kk = ((k % m) + m) % m;
    return FieldElement{exp_[static_cast<std::uint32_t>((std::uint64_t{log_[x.code]} * static_cast<std::uint64_t>(kk)) % mult_order_)]};
  }

  /// Multiplication by an integer (an element of F_p).
  FieldElement scale(FieldElement x, std::int64_t c) const { return mul(x, from_int(c)); }

  /// x ↦ x^{p^k}, k taken mod e·n.
  FieldElement frobenius_abs(FieldElement x, std::int64_t k) const {
    if (x.code == 0) return x;
    const auto d = static_cast<std::int64_t>(d_);
    const auto kk = static_cast<std::size_t>(((k % d) + d) % d);
    return FieldElement{exp_[static_cast<std::uint32_t>((std::uint64_t{log_[x.code]} * frob_exp_[kk]) % mult_order_)]};
  }

  /// σ^i(x) = x^{q^i}, i taken mod n.
  FieldElement sigma(FieldElement x, std::int64_t i) const { return frobenius_abs(x, i * static_cast<std::int64_t>(e_)); }

  /// Membership in F, i.e. x^q = x.
  bool in_base_field(FieldElement x) const { return sigma(x, 1) == x; }

  /// Discrete log base primitive(); x must be nonzero.
  std::uint32_t log(FieldElement x) const {
    if (x.code == 0) throw DomainError("log of zero");
    return log_[x.code];
  }
  FieldElement exp(std::uint64_t k) const { return FieldElement{exp_[k % mult_order_]}; }

  /// All q elements of F, in increasing code order.
  std::vector<FieldElement> base_field_elements() const {
    std::vector<FieldElement> out{zero()};
    const std::uint32_t step = mult_order_ / (q_ - 1);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) out.push_back(FieldElement{exp_[k * step]});
    std::sort(out.begin(), out.end());
    return out;
  }

  /// An F_p-basis of F: 1, γ, ..., γ^{e-1} for a generator γ of F^×.
  std::vector<FieldElement> base_field_basis() const {
    std::vector<FieldElement> out;
    const std::uint32_t step = mult_order_ / (q_ - 1);
    for (unsigned k = 0; k < e_; ++k) out.push_back(FieldElement{exp_[(k * step) % mult_order_]});
    return out;
  }

  FieldElement parse(std::string_view text) const {
    poly::Poly a = poly::parse(text, p_);
    if (a.size() > d_) a = poly::mod(std::move(a), modulus_, p_);
    a.resize(d_, 0);
    return from_coeffs(a);
  }

  std::string format(FieldElement x) const { return poly::format(coeffs(x)); }

  friend bool operator==(const FieldTower& a, const FieldTower& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  static constexpr std::uint32_t kNoLog = UINT32_MAX;

  std::uint32_t add_digits(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < d_; ++i) {
      out += ((x % p_ + y % p_) % p_) * place;
      x /= p_;
      y /= p_;
      place *= p_;
    }
    return out;
  }

  void build_tables() {
    mult_order_ = order_ - 1;
    const auto order_factors = prime_factors(mult_order_);
    auto to_poly = [&](std::uint32_t code) { return coeffs(FieldElement{code}); };
    auto to_code = [&](poly::Poly a) {
      a.resize(d_, 0);
      return from_coeffs(a).code;
    };
    // Smallest code whose multiplicative order is |L| - 1.
    std::uint32_t gen = 0;
    for (std::uint32_t c = 2; c < order_ && gen == 0; ++c) {
      const poly::Poly g = to_poly(c);
      bool primitive = true;
      for (const auto r : order_factors) {
        if (poly::powmod(g, mult_order_ / r, modulus_, p_) == poly::Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = c;
    }
    exp_.assign(mult_order_, 0);
    log_.assign(order_, kNoLog);
    const poly::Poly g = to_poly(gen);
    poly::Poly cur{1};
    for (std::uint32_t k = 0; k < mult_order_; ++k) {
      const std::uint32_t code = to_code(cur);
      if (log_[code] != kNoLog) throw Error("generator search produced a non-primitive element");
      exp_[k] = code;
      log_[code] = k;
      cur = poly::mulmod(cur, g, modulus_, p_);
    }
    zech_.assign(mult_order_, kNoLog);
    for (std::uint32_t k = 0; k < mult_order_; ++k) {
      const std::uint32_t s = add_digits(1, exp_[k]);
      zech_[k] = s == 0 ? kNoLog : log_[s];
    }
    frob_exp_.assign(d_, 1);
    for (unsigned k = 1; k < d_; ++k) frob_exp_[k] = (frob_exp_[k - 1] * p_) % mult_order_;
  }

  std::uint32_t p_;
  unsigned e_;
  unsigned n_;
  unsigned d_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t mult_order_ = 0;
  poly::Poly modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint64_t> frob_exp_;
};

using Tower = std::shared_ptr<const FieldTower>;

inline Tower make_tower(std::uint32_t p, unsigned e, unsigned n, std::optional<poly::Poly> modulus = std::nullopt) {
  return std::make_shared<const FieldTower>(p, e, n, std::move(modulus));
}

/// Tower with a modulus given as text, e.g. "T^2-2".
inline Tower make_tower(std::uint32_t p, unsigned e, unsigned n, std::string_view modulus_text) {
  return make_tower(p, e, n, poly::parse(modulus_text, p));
}

inline FieldElement frobenius(const FieldTower& t, FieldElement x, std::int64_t i) { return t.sigma(x, i); }

/// N_{L/F}(x) = x σ(x) ... σ^{n-1}(x).
inline FieldElement norm(const FieldTower& t, FieldElement x) {
  FieldElement out = t.one();
  for (unsigned i = 0; i < t.n(); ++i) out = t.mul(out, t.sigma(x, i));
  return out;
}

/// All x ∈ L with N(x) = k, in increasing code order.
inline std::vector<FieldElement> norm_fiber(const FieldTower& t, FieldElement k) {
  if (!t.in_base_field(k)) throw DomainError("norm_fiber: k = " + t.format(k) + " does not lie in F");
  std::vector<FieldElement> out;
  for (std::uint32_t c = 0; c < t.order(); ++c) {
    if (norm(t, FieldElement{c}) == k) out.push_back(FieldElement{c});
  }
  return out;
}

/// Smallest d | n with σ^d(x) = x.
inline unsigned subfield_degree(const FieldTower& t, FieldElement x) {
  for (unsigned d = 1; d <= t.n(); ++d) {
    if (t.n() % d == 0 && t.sigma(x, d) == x) return d;
  }
  return t.n();
}

/// F_q contains a primitive r-th root of unity iff r | q - 1.
inline bool has_primitive_rth_root(std::uint64_t q, std::uint64_t r) {
  if (!is_prime(r)) throw DomainError("r = " + std::to_string(r) + " is not prime");
  return (q - 1) % r == 0;
}

struct EigenClass {
  FieldElement eigenvalue;
  std::vector<FieldElement> vectors;
};

/// All x ∈ L^× with σ^i(x) = kx for some k ∈ F, grouped by k (increasing).
inline std::vector<EigenClass> eigen_elements(const FieldTower& t, std::int64_t i) {
  std::vector<EigenClass> out;
  for (std::uint32_t c = 1; c < t.order(); ++c) {
    const FieldElement x{c};
    const FieldElement k = t.div(t.sigma(x, i), x);
    if (!t.in_base_field(k)) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const EigenClass& e) { return e.eigenvalue == k; });
    if (it == out.end()) {
      out.push_back({k, {x}});
    } else {
      it->vectors.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [](const EigenClass& a, const EigenClass& b) { return a.eigenvalue < b.eigenvalue; });
  return out;
}

}  // namespace semifield

#endif  // SEMIFIELD_GF_HPP
