#ifndef SEMIFIELD_ORACLE_HPP
#define SEMIFIELD_ORACLE_HPP

// Brute-force ground truth. Nothing here uses the closed-form criteria of the
// other modules; the only shared code is field arithmetic and `multiply`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semifield/autgroup.hpp"
#include "semifield/classify.hpp"
#include "semifield/config.hpp"

namespace semifield {

struct ZeroDivisorWitness {
  AlgElement x;
  AlgElement y;
};

struct ZeroDivisorScan {
  bool division = true;
  std::optional<ZeroDivisorWitness> witness;
  std::uint64_t products = 0;  // search-space size actually visited
};

/// Double loop over nonzero x (one per F_p-line) and nonzero y, looking for
/// xy = 0. The product x·y is updated incrementally from the D products
/// x·e_k as y runs through F_p^D.
inline ZeroDivisorScan zero_divisor_scan(const SemifieldSpec& spec,
                                         std::uint64_t max_order = max_search_order(SearchScope::SingleSpec)) {
  const std::size_t dim = spec.dimension();
  const std::uint32_t p = spec.tower->p();
  const std::uint64_t order = saturating_order(p, dim);
  if (order > max_order || order > kMaxFieldOrder) {
    throw SizeLimitError("zero_divisor_scan: algebra order " + std::to_string(p) + "^" + std::to_string(dim) +
                         " exceeds the search bound");
  }
  ZeroDivisorScan out;
  std::vector<AlgElement> basis;
  for (std::size_t k = 0; k < dim; ++k) basis.push_back(basis_element(spec, k));

  FpVector x(dim, 0);
  std::vector<FpVector> xe(dim);
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      const AlgElement xa = unflatten(spec, x);
      for (std::size_t k = 0; k < dim; ++k) xe[k] = flatten(spec, multiply(spec, xa, basis[k]));
      std::optional<FpVector> y_hit;
      if (p == 2) {
        std::vector<std::uint64_t> mask(dim, 0);
        for (std::size_t k = 0; k < dim; ++k) {
          for (std::size_t c = 0; c < dim; ++c) mask[k] |= std::uint64_t{xe[k][c]} << c;
        }
        // Gray code: step g flips bit ctz(g)
        std::uint64_t prod = 0, y = 0;
        for (std::uint64_t g = 1; g < order; ++g) {
          const auto bit = static_cast<std::size_t>(__builtin_ctzll(g));
          y ^= std::uint64_t{1} << bit;
          prod ^= mask[bit];
          ++out.products;
          if (prod == 0) {
            FpVector yv(dim);
            for (std::size_t c = 0; c < dim; ++c) yv[c] = (y >> c) & 1;
            y_hit = yv;
            break;
          }
        }
      } else {
        FpVector y(dim, 0), prod(dim, 0);
        auto add_column = [&](std::size_t k) {
          for (std::size_t c = 0; c < dim; ++c) {
            prod[c] += xe[k][c];
            if (prod[c] >= p) prod[c] -= p;
          }
        };
        for (std::uint64_t step = 1; step < order; ++step) {
          // odometer increment; each touched digit adds one copy of x e_k
          std::size_t pos = 0;
          while (y[pos] == p - 1) {
            y[pos] = 0;
            add_column(pos);
            ++pos;
          }
          ++y[pos];
          add_column(pos);
          ++out.products;
          if (std::all_of(prod.begin(), prod.end(), [](std::uint32_t v) { return v == 0; })) {
            y_hit = y;
            break;
          }
        }
      }
      if (y_hit) {
        out.division = false;
        out.witness = ZeroDivisorWitness{unflatten(spec, x), unflatten(spec, *y_hit)};
        if (!is_zero(multiply(spec, out.witness->x, out.witness->y))) {
          throw VerificationError("zero_divisor_scan: witness does not multiply to zero");
        }
        return out;
      }
      std::size_t pos = lead + 1;
      while (pos < dim && x[pos] == p - 1) x[pos++] = 0;
      if (pos >= dim) break;
      ++x[pos];
    }
  }
  return out;
}

namespace detail {

/// Echelon rows with the combination of words each row came from, so a
/// dependent vector can be written in terms of earlier words.
class TrackingReducer {
 public:
  TrackingReducer(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }

  /// Returns nullopt and records v as word `word` when independent; otherwise
  /// the coefficients of v in terms of the words recorded so far.
  std::optional<FpVector> insert(FpVector v, std::size_t word, std::size_t max_words) {
    FpVector combo(max_words, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t c = v[pivots_[r]];
      if (c == 0) continue;
      const std::uint64_t f = c;  // v -= c · row, combo += c · rowcombo
      for (std::size_t j = 0; j < dim_; ++j) v[j] = static_cast<std::uint32_t>((v[j] + (p_ - f) * rows_[r][j]) % p_);
      for (std::size_t j = 0; j < max_words; ++j) combo[j] = static_cast<std::uint32_t>((combo[j] + f * combos_[r][j]) % p_);
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return combo;
    // normalise: v' = v / c0 where v = word - combo
    const std::uint64_t inv = fp_inv(v[piv], p_);
    FpVector row_combo(max_words, 0);
    for (std::size_t j = 0; j < max_words; ++j) row_combo[j] = static_cast<std::uint32_t>((p_ - combo[j]) % p_);
    row_combo[word] = (row_combo[word] + 1) % p_;
    for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
    for (auto& x : row_combo) x = static_cast<std::uint32_t>(x * inv % p_);
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(row_combo));
    pivots_.push_back(piv);
    return std::nullopt;
  }

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<FpVector> rows_;
  std::vector<FpVector> combos_;
  std::vector<std::size_t> pivots_;
};

/// Straight-line program spanning the algebra from 1, g1, g2 by products.
struct ProductProgram {
  struct Step {
    std::size_t left, right;
    bool is_new;                  // defines the next word
    std::size_t word;             // index of the new word
    FpVector relation;            // otherwise: coefficients over earlier words
  };
  std::vector<FpVector> word_values;  // flattened values of the words
  std::vector<Step> steps;
  std::size_t first_g2_step = 0;  // steps before this involve only g1
};

inline ProductProgram build_program(const SemifieldSpec& spec, const AlgElement& g1, const AlgElement& g2) {
  const std::size_t dim = spec.dimension();
  const std::uint32_t p = spec.tower->p();
  ProductProgram prog;
  TrackingReducer tr(p, dim);
  std::vector<AlgElement> words;
  auto push_word = [&](const AlgElement& w) {
    words.push_back(w);
    prog.word_values.push_back(flatten(spec, w));
  };
  const AlgElement one = unit_element(spec);
  tr.insert(flatten(spec, one), 0, dim);
  push_word(one);
  if (!tr.insert(flatten(spec, g1), 1, dim)) {
    push_word(g1);
  } else {
    throw DomainError("build_program: first generator lies in F_p");
  }
  auto try_product = [&](std::size_t i, std::size_t j) {
    const AlgElement w = multiply(spec, words[i], words[j]);
    auto rel = tr.insert(flatten(spec, w), words.size(), dim);
    if (rel) {
      prog.steps.push_back({i, j, false, 0, std::move(*rel)});
    } else {
      prog.steps.push_back({i, j, true, words.size(), {}});
      push_word(w);
    }
  };
  // powers g1 · g1^k until dependent: the subalgebra generated by g1
  for (std::size_t last = 1;;) {
    const std::size_t before = words.size();
    try_product(1, last);
    if (words.size() == before) break;
    last = words.size() - 1;
  }
  prog.first_g2_step = prog.steps.size();
  const std::size_t g2_index = words.size();
  if (tr.insert(flatten(spec, g2), g2_index, dim)) throw DomainError("build_program: generators span a proper subalgebra");
  push_word(g2);
  // products of all pairs, in breadth-first order, until the span is full
  for (std::size_t i = 0; i < words.size() && tr.rank() < dim; ++i) {
    for (std::size_t j = 0; j <= i && tr.rank() < dim; ++j) {
      try_product(i, j);
      if (tr.rank() < dim && i != j) try_product(j, i);
    }
  }
  if (tr.rank() < dim) throw DomainError("build_program: generators do not generate the algebra");
  return prog;
}

/// Evaluates the program with φ(g1) = u, φ(g2) = v, returning φ of all words,
/// or nullopt at the first violated relation.
inline std::optional<std::vector<AlgElement>> run_program(const SemifieldSpec& spec, const ProductProgram& prog,
                                                          const AlgElement& u, const AlgElement* v,
                                                          std::size_t stop) {
  const FieldTower& t = *spec.tower;
  std::vector<AlgElement> img{unit_element(spec), u};
  auto combination = [&](const FpVector& coeffs) {
    AlgElement acc = zero_element(spec);
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
      if (coeffs[w] == 0) continue;
      const AlgElement& x = img[w];
      for (std::size_t c = 0; c < acc.coords.size(); ++c) acc.coords[c] = t.add(acc.coords[c], t.scale(x.coords[c], coeffs[w]));
    }
    return acc;
  };
  for (std::size_t s = 0; s < stop; ++s) {
    if (s == prog.first_g2_step) {
      if (v == nullptr) return img;
      img.push_back(*v);
    }
    const auto& step = prog.steps[s];
    AlgElement w = multiply(spec, img[step.left], img[step.right]);
    if (step.is_new) {
      img.push_back(std::move(w));
    } else if (w != combination(step.relation)) {
      return std::nullopt;
    }
  }
  if (stop == prog.first_g2_step && v != nullptr) img.push_back(*v);
  return img;
}

inline std::vector<AlgElement> all_elements(const SemifieldSpec& spec) {
  const std::size_t dim = spec.dimension();
  const std::uint32_t p = spec.tower->p();
  std::vector<AlgElement> out;
  FpVector v(dim, 0);
  while (true) {
    out.push_back(unflatten(spec, v));
    std::size_t pos = 0;
    while (pos < dim && v[pos] == p - 1) v[pos++] = 0;
    if (pos == dim) break;
    ++v[pos];
  }
  return out;
}

inline bool fixes_base_field(const SemifieldSpec& spec, const FpMatrix& m) {
  for (auto f : spec.tower->base_field_basis()) {
    const AlgElement x = monomial(spec, f, 0);
    if (apply(spec, m, x) != x) return false;
  }
  return true;
}

inline void sort_matrices(std::vector<FpMatrix>& maps) {
  std::sort(maps.begin(), maps.end(), [](const FpMatrix& a, const FpMatrix& b) { return a.data() < b.data(); });
}

}  // namespace detail

struct BruteForceAutomorphisms {
  std::vector<FpMatrix> maps;  // sorted by matrix entries
  std::uint64_t search_space = 0;  // candidate (u, v) pairs examined
};

/// All F-linear automorphisms, by trying every image pair for the two
/// generators and keeping those that extend to a multiplicative bijection
/// fixing F pointwise.
inline BruteForceAutomorphisms brute_force_automorphisms(const SemifieldSpec& spec,
                                                          std::uint64_t max_order = 4096) {
  const std::size_t dim = spec.dimension();
  const std::uint32_t p = spec.tower->p();
  const std::uint64_t order = saturating_order(p, dim);
  if (order > max_order) {
    throw SizeLimitError("brute_force_automorphisms: algebra order " + std::to_string(p) + "^" + std::to_string(dim) +
                         " exceeds the search bound");
  }
  const auto [g1, g2] = algebra_generators(spec);
  const detail::ProductProgram prog = detail::build_program(spec, g1, g2);
  FpMatrix words(p, dim, dim);
  for (std::size_t w = 0; w < dim; ++w) words.set_column(w, prog.word_values[w]);
  const FpMatrix words_inv = inverse(words);
  const auto elements = detail::all_elements(spec);

  BruteForceAutomorphisms out;
  for (const auto& u : elements) {
    if (!detail::run_program(spec, prog, u, nullptr, prog.first_g2_step)) continue;
    for (const auto& v : elements) {
      ++out.search_space;
      const auto img = detail::run_program(spec, prog, u, &v, prog.steps.size());
      if (!img) continue;
      FpMatrix phi_words(p, dim, dim);
      for (std::size_t w = 0; w < dim; ++w) phi_words.set_column(w, flatten(spec, (*img)[w]));
      const FpMatrix m = phi_words * words_inv;
      if (!is_invertible(m) || !is_homomorphism(spec, spec, m) || !detail::fixes_base_field(spec, m)) continue;
      out.maps.push_back(m);
    }
  }
  detail::sort_matrices(out.maps);
  return out;
}

/// Every invertible matrix fixing e_0, tested for multiplicativity and for
/// fixing F. Only for algebras of order ≤ 16; validates the search above.
inline std::vector<FpMatrix> gl_search_automorphisms(const SemifieldSpec& spec) {
  const std::size_t dim = spec.dimension();
  const std::uint32_t p = spec.tower->p();
  if (saturating_order(p, dim) > 16) throw SizeLimitError("gl_search_automorphisms: algebra order exceeds 16");
  const std::size_t free_entries = dim * (dim - 1);
  const std::uint64_t total = saturating_order(p, free_entries);
  std::vector<FpMatrix> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    FpMatrix m(p, dim, dim);
    m(0, 0) = 1;
    std::uint64_t c = code;
    for (std::size_t col = 1; col < dim; ++col) {
      for (std::size_t row = 0; row < dim; ++row) {
        m(row, col) = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
    }
    if (is_invertible(m) && is_homomorphism(spec, spec, m) && detail::fixes_base_field(spec, m)) out.push_back(m);
  }
  detail::sort_matrices(out);
  return out;
}

struct BruteForceClasses {
  std::vector<std::vector<FieldElement>> classes;  // each sorted; ordered by first member
  std::uint64_t witnesses_verified = 0;
};

/// Partition of L \ F by the isomorphism test σ^i(a) = N(l) b, with the norm
/// image taken from a full scan of L^× (surjectivity is not assumed) and
/// every non-trivial membership backed by an exactly verified map.
inline BruteForceClasses brute_force_classes(const Tower& tower, std::uint64_t max_field_order = 729) {
  const FieldTower& t = *tower;
  if (t.order() > max_field_order) throw SizeLimitError("brute_force_classes: |L| exceeds the search bound");
  std::vector<std::optional<FieldElement>> preimage(t.order());
  for (std::uint32_t c = 1; c < t.order(); ++c) {
    const FieldElement nl = norm(t, FieldElement{c});
    if (!preimage[nl.code]) preimage[nl.code] = FieldElement{c};
  }
  BruteForceClasses out;
  std::vector<bool> placed(t.order(), false);
  for (std::uint32_t c = 0; c < t.order(); ++c) {
    const FieldElement a{c};
    if (placed[c] || t.sigma(a, 1) == a) continue;
    const SandlerParams pa{tower, a};
    const SemifieldSpec src = to_spec(pa);
    std::vector<FieldElement> cls;
    for (std::uint32_t d = 0; d < t.order(); ++d) {
      const FieldElement b{d};
      if (placed[d] || d == 0 || t.sigma(b, 1) == b) continue;
      for (unsigned i = 0; i < t.n(); ++i) {
        const FieldElement ratio = t.div(t.sigma(a, i), b);
        if (!preimage[ratio.code]) continue;
        if (d != c) {
          const SemifieldSpec dst = to_spec(SandlerParams{tower, b});
          verify_isomorphism(src, dst, sandler_map_matrix(src, i, *preimage[ratio.code]), "brute_force_classes");
          ++out.witnesses_verified;
        }
        placed[d] = true;
        cls.push_back(b);
        break;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

struct OracleReport {
  std::string claim;
  std::string formula_value;
  std::string oracle_value;
  bool agree = false;
  std::int64_t elapsed_us = 0;
  std::string note;
};

/// Times `formula` and `oracle` together and records whether they agree.
template <class Formula, class Oracle>
OracleReport run_claim(std::string claim, Formula&& formula, Oracle&& oracle) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport r;
  r.claim = std::move(claim);
  r.formula_value = formula();
  r.oracle_value = oracle();
  r.agree = r.formula_value == r.oracle_value;
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace semifield

#endif  // SEMIFIELD_ORACLE_HPP
