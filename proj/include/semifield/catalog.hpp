#ifndef SEMIFIELD_CATALOG_HPP
#define SEMIFIELD_CATALOG_HPP

// Catalog of every algebra of order ≤ N built by this library: one row per
// Sandler parameter a ∈ L \ F and per family parameter (σ power, η ≠ 0, μ).
// Division status comes from the independence and root criteria; the
// re-ingest check recomputes it with the matrix test.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "semifield/family_report.hpp"
#include "semifield/serialize.hpp"

namespace semifield {

struct CatalogRecord {
  std::uint64_t order = 0;
  Kind kind = Kind::Sandler;
  std::uint32_t p = 0;
  unsigned e = 0;
  unsigned n = 0;
  std::string modulus;
  std::string a, eta, mu;  // canonical text; empty when not applicable
  unsigned sigma_power = 0;
  bool is_division = false;
  std::size_t nuc_left = 0, nuc_middle = 0, nuc_right = 0, center = 0;
  std::optional<bool> class_representative;  // Sandler rows only
  std::optional<std::size_t> aut_order;
  std::string group_label;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

inline SemifieldSpec record_to_spec(const CatalogRecord& r) {
  Tower tower = make_tower(r.p, r.e, r.n, r.modulus);
  if (r.kind == Kind::Sandler) return to_spec(make_sandler(tower, r.a));
  return to_spec(make_family(tower, r.kind, tower->parse(r.eta), tower->parse(r.mu), r.sigma_power));
}

namespace detail {

inline CatalogRecord record_from(const SemifieldSpec& spec, const Fingerprint& f) {
  const FieldTower& t = *spec.tower;
  CatalogRecord r;
  r.order = saturating_order(t.p(), spec.dimension());
  r.kind = spec.kind;
  r.p = t.p();
  r.e = t.e();
  r.n = t.n();
  r.modulus = poly::format(t.modulus());
  if (spec.kind == Kind::Sandler) {
    r.a = t.format(spec.a);
  } else {
    r.eta = t.format(spec.eta);
    r.mu = t.format(spec.mu);
    r.sigma_power = spec.sigma_power;
  }
  r.is_division = f.is_division;
  r.nuc_left = f.nuc_left;
  r.nuc_middle = f.nuc_middle;
  r.nuc_right = f.nuc_right;
  r.center = f.center;
  return r;
}

struct TowerShape {
  std::uint32_t p;
  unsigned e, n;
};

/// Towers with |L| ≤ 2^16 and an algebra of the given rank (over L) of order ≤ max_order.
inline std::vector<TowerShape> towers_for(std::uint64_t max_order, bool sandler) {
  std::vector<TowerShape> out;
  for (std::uint32_t p = 2; saturating_order(p, 4) <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned e = 1; saturating_order(p, 4 * e) <= max_order; ++e) {
      for (unsigned n = 2;; ++n) {
        const std::size_t rank = sandler ? n : 2;
        if (saturating_order(p, std::size_t{e} * n * rank) > max_order) break;
        if (saturating_order(p, std::size_t{e} * n) > kMaxFieldOrder) break;
        out.push_back({p, e, n});
      }
    }
  }
  return out;
}

}  // namespace detail

/// Rows sorted by (order, kind, p, e, n, σ power, parameter codes).
inline std::vector<CatalogRecord> generate_catalog(std::uint64_t max_order) {
  const std::uint64_t cap = max_search_order(SearchScope::Catalog);
  if (max_order > cap) {
    throw SizeLimitError("catalog: --max-order " + std::to_string(max_order) + " exceeds the search bound " +
                         std::to_string(cap) + " (set SEMIFIELD_MAX_ORDER to raise it)");
  }
  using Key = std::tuple<std::uint64_t, int, std::uint32_t, unsigned, unsigned, unsigned, std::uint32_t, std::uint32_t>;
  std::vector<std::pair<Key, CatalogRecord>> rows;

  for (const auto& shape : detail::towers_for(max_order, true)) {
    Tower tower = make_tower(shape.p, shape.e, shape.n);
    const ClassificationReport report = enumerate_classes(tower);
    for (const auto& cls : report.classes) {
      const SandlerParams rep{tower, cls.representative};
      std::optional<std::size_t> aut;
      std::string label;
      if (is_semifield(rep)) {
        const auto maps = sandler_automorphisms(rep);
        aut = maps.size();
        label = identify_group(to_spec(rep), maps).label;
      }
      for (auto a : cls.members) {
        const SemifieldSpec spec = to_spec(SandlerParams{tower, a});
        CatalogRecord r = detail::record_from(spec, fingerprint(spec, DivisionTest::Theorem));
        r.class_representative = a == cls.representative;
        r.aut_order = aut;
        r.group_label = label;
        rows.emplace_back(Key{r.order, static_cast<int>(Kind::Sandler), shape.p, shape.e, shape.n, 0, a.code, 0}, std::move(r));
      }
    }
  }
  for (const auto& shape : detail::towers_for(max_order, false)) {
    Tower tower = make_tower(shape.p, shape.e, shape.n);
    for (Kind kind : {Kind::Kn1, Kind::Kn2, Kind::Kn3, Kind::HK}) {
      for (unsigned sp = 1; sp < shape.n; ++sp) {
        for (std::uint32_t eta = 1; eta < tower->order(); ++eta) {
          for (std::uint32_t mu = 0; mu < tower->order(); ++mu) {
            const FamilyParams fp = make_family(tower, kind, FieldElement{eta}, FieldElement{mu}, sp);
            const SemifieldSpec spec = to_spec(fp);
            CatalogRecord r = detail::record_from(spec, fingerprint(spec, DivisionTest::Theorem));
            if (r.is_division) {
              if (kind == Kind::Kn1) {
                if (r.order <= 729) {
                  auto bf = brute_force_automorphisms(spec);
                  r.aut_order = bf.maps.size();
                  r.group_label = identify_group(make_map_group(spec, std::move(bf.maps))).label;
                }
              } else {
                const auto maps = family_automorphisms(fp);
                r.aut_order = maps.size();
                r.group_label = identify_group(spec, maps).label;
              }
            }
            rows.emplace_back(Key{r.order, static_cast<int>(kind), shape.p, shape.e, shape.n, sp, eta, mu}, std::move(r));
          }
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<CatalogRecord> out;
  out.reserve(rows.size());
  for (auto& [k, r] : rows) out.push_back(std::move(r));
  return out;
}

inline const std::vector<std::string>& catalog_columns() {
  static const std::vector<std::string> cols{"order",     "kind",     "p",          "e",         "n",
                                             "modulus",   "a",        "eta",        "mu",        "sigma_power",
                                             "is_division", "nuc_left", "nuc_middle", "nuc_right", "center",
                                             "class_representative", "aut_order", "group_label"};
  return cols;
}

namespace detail {

inline std::vector<std::string> record_fields(const CatalogRecord& r) {
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  return {std::to_string(r.order),
          std::string(kind_name(r.kind)),
          std::to_string(r.p),
          std::to_string(r.e),
          std::to_string(r.n),
          r.modulus,
          r.a,
          r.eta,
          r.mu,
          r.kind == Kind::Sandler ? std::string() : std::to_string(r.sigma_power),
          r.is_division ? "true" : "false",
          std::to_string(r.nuc_left),
          std::to_string(r.nuc_middle),
          std::to_string(r.nuc_right),
          std::to_string(r.center),
          r.class_representative ? (*r.class_representative ? "true" : "false") : "",
          opt(r.aut_order),
          r.group_label};
}

}  // namespace detail

/// Labels such as "other(1,2,2)" contain commas, so fields holding one are quoted.
inline std::string catalog_to_csv(const std::vector<CatalogRecord>& rows) {
  std::ostringstream os;
  const auto& cols = catalog_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& r : rows) {
    const auto fields = detail::record_fields(r);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      os << (i ? "," : "");
      if (fields[i].find(',') != std::string::npos) {
        os << '"' << fields[i] << '"';
      } else {
        os << fields[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

inline json catalog_to_json(const std::vector<CatalogRecord>& rows) {
  json out = json::array();
  const auto& cols = catalog_columns();
  for (const auto& r : rows) {
    const auto fields = detail::record_fields(r);
    json obj = json::object();
    for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = fields[i];
    out.push_back(std::move(obj));
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

inline std::uint64_t parse_uint(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw ParseError("not an unsigned integer: '" + s + "'");
  return v;
}

}  // namespace detail

inline std::vector<CatalogRecord> catalog_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty catalog");
  const auto header = detail::split_csv_line(line);
  if (header != catalog_columns()) throw ParseError("unexpected catalog header");
  std::vector<CatalogRecord> out;
  try {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const auto f = detail::split_csv_line(line);
      if (f.size() != header.size()) throw ParseError("catalog row has " + std::to_string(f.size()) + " fields");
      CatalogRecord r;
      r.order = detail::parse_uint(f[0]);
      r.kind = parse_kind(f[1]);
      r.p = static_cast<std::uint32_t>(detail::parse_uint(f[2]));
      r.e = static_cast<unsigned>(detail::parse_uint(f[3]));
      r.n = static_cast<unsigned>(detail::parse_uint(f[4]));
      r.modulus = f[5];
      r.a = f[6];
      r.eta = f[7];
      r.mu = f[8];
      r.sigma_power = f[9].empty() ? 0 : static_cast<unsigned>(detail::parse_uint(f[9]));
      r.is_division = f[10] == "true";
      r.nuc_left = detail::parse_uint(f[11]);
      r.nuc_middle = detail::parse_uint(f[12]);
      r.nuc_right = detail::parse_uint(f[13]);
      r.center = detail::parse_uint(f[14]);
      if (!f[15].empty()) r.class_representative = f[15] == "true";
      if (!f[16].empty()) r.aut_order = detail::parse_uint(f[16]);
      r.group_label = f[17];
      out.push_back(std::move(r));
    }
  } catch (const std::logic_error& ex) {
    throw ParseError(std::string("malformed catalog row: ") + ex.what());
  }
  return out;
}

/// Recomputes the fingerprint fields of a record from its parameters.
inline bool reverify_record(const CatalogRecord& r) {
  const SemifieldSpec spec = record_to_spec(r);
  const CatalogRecord fresh = detail::record_from(spec, fingerprint(spec));
  return fresh.order == r.order && fresh.is_division == r.is_division && fresh.nuc_left == r.nuc_left &&
         fresh.nuc_middle == r.nuc_middle && fresh.nuc_right == r.nuc_right && fresh.center == r.center;
}

}  // namespace semifield

#endif  // SEMIFIELD_CATALOG_HPP
