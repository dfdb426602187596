#ifndef SEMIFIELD_SERIALIZE_HPP
#define SEMIFIELD_SERIALIZE_HPP

// JSON forms. Objects use nlohmann::json's default std::map storage, so keys
// come out sorted and output is reproducible byte for byte.

#include <string>

#include <nlohmann/json.hpp>

#include "semifield/autgroup.hpp"
#include "semifield/classify.hpp"

namespace semifield {

using nlohmann::json;

/// Little-endian coefficient array [c0, c1, ...].
inline json element_to_json(const FieldTower& t, FieldElement x) { return t.coeffs(x); }

/// Accepts a coefficient array or element text such as "2T+1".
inline FieldElement element_from_json(const FieldTower& t, const json& j) {
  if (j.is_string()) return t.parse(j.get<std::string>());
  if (j.is_array()) {
    std::vector<std::uint32_t> c;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("element coefficients must be integers");
      const auto x = v.get<std::int64_t>();
      c.push_back(static_cast<std::uint32_t>(((x % t.p()) + t.p()) % t.p()));
    }
    if (c.size() > t.degree()) throw ParseError("element has more than e*n coefficients");
    return t.from_coeffs(c);
  }
  throw ParseError("element must be a coefficient array or a polynomial string");
}

inline json matrix_to_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<std::uint32_t>(row.begin(), row.end()));
  }
  return rows;
}

inline json tower_to_json(const FieldTower& t) {
  return json{{"p", t.p()}, {"e", t.e()}, {"n", t.n()}, {"q", t.q()}, {"order", t.order()},
              {"modulus", poly::format(t.modulus())}};
}

/// {"p","e","n","modulus"?, "kind", "a" | "eta","mu","sigma_power"?}; elements as text or arrays.
inline SemifieldSpec spec_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto e = j.value("e", 1u);
    const auto n = j.at("n").get<unsigned>();
    Tower tower = j.contains("modulus") ? make_tower(p, e, n, j.at("modulus").get<std::string>()) : make_tower(p, e, n);
    const Kind kind = parse_kind(j.at("kind").get<std::string>());
    if (kind == Kind::Sandler) return to_spec(make_sandler(tower, element_from_json(*tower, j.at("a"))));
    const FieldElement eta = element_from_json(*tower, j.at("eta"));
    const FieldElement mu = j.contains("mu") ? element_from_json(*tower, j.at("mu")) : tower->zero();
    return to_spec(make_family(tower, kind, eta, mu, j.value("sigma_power", 1u)));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed algebra JSON: ") + ex.what());
  }
}

inline json spec_to_json(const SemifieldSpec& s) {
  const FieldTower& t = *s.tower;
  json j{{"p", t.p()}, {"e", t.e()}, {"n", t.n()}, {"modulus", poly::format(t.modulus())}, {"kind", kind_name(s.kind)}};
  if (s.kind == Kind::Sandler) {
    j["a"] = t.format(s.a);
  } else {
    j["eta"] = t.format(s.eta);
    j["mu"] = t.format(s.mu);
    j["sigma_power"] = s.sigma_power;
  }
  return j;
}

/// p^dim as a JSON integer when it fits in 64 bits, else the string "p^dim".
inline json order_to_json(std::uint32_t p, std::size_t dim) {
  const std::uint64_t o = saturating_order(p, dim);
  if (o != UINT64_MAX) return o;
  return std::to_string(p) + "^" + std::to_string(dim);
}

inline json fingerprint_to_json(const Fingerprint& f) {
  return json{{"order", order_to_json(f.p, f.dim)},
              {"dim", f.dim},
              {"kind", kind_name(f.kind)},
              {"params", f.params},
              {"is_division", f.is_division},
              {"nuc_left", f.nuc_left},
              {"nuc_middle", f.nuc_middle},
              {"nuc_right", f.nuc_right},
              {"nucleus", f.nucleus},
              {"center", f.center},
              {"nuclei_coincide", json{{"left_middle", f.coincide[0]}, {"middle_right", f.coincide[1]},
                                       {"left_right", f.coincide[2]}}}};
}

inline json group_to_json(const GroupID& g) {
  json j{{"order", g.order}, {"abelian", g.abelian}, {"label", g.label}, {"signature", g.signature}};
  if (g.dicyclic_generators) j["dicyclic_generators"] = {g.dicyclic_generators->first, g.dicyclic_generators->second};
  return j;
}

inline json automorphism_to_json(const FieldTower& t, const Automorphism& a) {
  json j{{"matrix", matrix_to_json(a.matrix)}};
  switch (a.form) {
    case Automorphism::Form::Sandler:
      j["j"] = a.galois;
      j["l"] = t.format(a.element);
      break;
    case Automorphism::Form::Family:
      j["tau"] = a.galois;
      j["b"] = t.format(a.element);
      break;
    case Automorphism::Form::Generic: break;
  }
  return j;
}

}  // namespace semifield

#endif  // SEMIFIELD_SERIALIZE_HPP
