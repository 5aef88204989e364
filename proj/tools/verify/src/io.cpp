#include "supercalc/verify/io.hpp"

#include "supercalc/errors.hpp"
#include "supercalc/parse.hpp"

namespace supercalc::verify {

json to_json(const Scalar& s) {
  json out = json::object();
  for (const auto& [exp, c] : s.terms()) out[std::to_string(exp)] = to_string(c);
  return out;
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("Scalar JSON must be an object");
  Scalar out;
  for (const auto& [key, value] : j.items()) {
    out += Scalar(parse_gauss_rational(value.get<std::string>()), std::stoi(key));
  }
  return out;
}

json to_json(const SuperMonomial& mono, const SpaceSignature& space) {
  json bos = json::array(), ferm = json::array(), cliff = json::array(), weyl = json::array();
  for (int i = 0; i < space.m; ++i) bos.push_back(mono.bos[static_cast<std::size_t>(i)]);
  for (int j = 0; j < space.ferm_vars(); ++j) {
    if (mono.ferm >> j & 1u) ferm.push_back(j + 1);
  }
  for (int i = 0; i < space.m; ++i) {
    if (mono.cliff >> i & 1u) cliff.push_back(i + 1);
  }
  for (int j = 0; j < 2 * space.n; ++j) weyl.push_back(mono.weyl[static_cast<std::size_t>(j)]);
  return {{"bos", bos}, {"ferm", ferm}, {"cliff", cliff}, {"weyl", weyl}};
}

json to_json(const Element& e) {
  json out = json::array();
  for (const auto& [mono, c] : e.terms()) {
    json t = to_json(mono, e.space());
    t["coef"] = to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

Element element_from_json(const json& j, const SpaceSignature& space) {
  if (!j.is_array()) throw std::invalid_argument("Element JSON must be an array");
  Element out(space);
  for (const auto& t : j) {
    SuperMonomial mono;
    const auto bos = t.value("bos", json::array());
    if (static_cast<int>(bos.size()) > space.m) throw IndexError("too many bosonic exponents");
    for (std::size_t i = 0; i < bos.size(); ++i) mono.bos[i] = static_cast<std::uint8_t>(bos[i].get<int>());
    for (const auto& v : t.value("ferm", json::array())) {
      const int idx = v.get<int>();
      if (idx < 1 || idx > space.ferm_vars()) throw IndexError("fermionic index out of range");
      if (mono.ferm >> (idx - 1) & 1u) throw std::invalid_argument("repeated fermionic index");
      mono.ferm |= static_cast<std::uint16_t>(1u << (idx - 1));
    }
    for (const auto& v : t.value("cliff", json::array())) {
      const int idx = v.get<int>();
      if (idx < 1 || idx > space.m) throw IndexError("Clifford index out of range");
      mono.cliff |= static_cast<std::uint8_t>(1u << (idx - 1));
    }
    const auto weyl = t.value("weyl", json::array());
    if (static_cast<int>(weyl.size()) > 2 * space.n) throw IndexError("too many Weyl exponents");
    for (std::size_t k = 0; k < weyl.size(); ++k) mono.weyl[k] = static_cast<std::uint8_t>(weyl[k].get<int>());
    out.add_term(mono, scalar_from_json(t.at("coef")));
  }
  return out;
}

json to_json(const SpaceSignature& space) {
  return {{"m", space.m}, {"n", space.n}, {"M", space.superdimension()}};
}

json to_json(const RadialDistribution& d) {
  json terms = json::array();
  for (const auto& t : d.term_list()) {
    terms.push_back({{"kind", t.order < 0 ? "H" : "delta"},
                     {"derivative", std::max(t.order, 0)},
                     {"shift", to_string(t.shift)},
                     {"coeff", to_json(t.coeff)},
                     {"text", format(t.coeff)}});
  }
  return {{"space", to_json(d.space())}, {"terms", terms}};
}

json to_json(const GradedBasis& basis) {
  json vecs = json::array();
  for (const auto& v : basis.vectors) vecs.push_back(format(v));
  return {{"degree", basis.degree}, {"dimension", basis.dimension()}, {"vectors", vecs}};
}

json to_json(const UniquenessReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"k", e.k},
                       {"C_k", to_json(e.c_k)},
                       {"C_k_nonzero", e.c_k_nonzero},
                       {"not_divisible_by_x2", e.not_divisible},
                       {"not_divisible_bivariate", e.not_divisible_bivariate}});
  }
  return {{"space", to_json(r.space)},
          {"t", r.t},
          {"pole_case", r.pole_case},
          {"entries", entries},
          {"solution_dimension", r.solution_dimension},
          {"basis_rank", r.basis_rank},
          {"passed", r.passed}};
}

json to_json(const RadonValue& v) {
  json y = json::array();
  for (const auto& c : v.y_bos) y.push_back(to_string(c));
  json coeffs = json::object();
  for (const auto& [k, e] : v.poly_p) coeffs[std::to_string(k)] = to_json(e);
  return {{"space", to_json(v.space)}, {"y", y}, {"gauss_rate", to_string(v.gauss_rate)}, {"p_coefficients", coeffs}};
}

}  // namespace supercalc::verify
