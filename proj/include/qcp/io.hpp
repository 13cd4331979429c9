#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcp/arrangement.hpp"
#include "qcp/characteristic.hpp"
#include "qcp/errors.hpp"
#include "qcp/oracle.hpp"
#include "qcp/quasipoly.hpp"
#include "qcp/rootsys.hpp"

namespace qcp::io {

using nlohmann::json;

// {"m": int, "n": int, "C": [[...m rows of n ints...]], "b": [n ints]}
inline json to_json(const ArrangementInput& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a.coefficients()(i, j));
    rows.push_back(std::move(row));
  }
  return {{"m", a.dimension()}, {"n", a.size()}, {"C", std::move(rows)}, {"b", a.offsets()}};
}

inline ArrangementInput arrangement_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ValidationError("arrangement JSON must be an object");
    for (const char* key : {"m", "n", "C", "b"})
      if (!j.contains(key)) throw ValidationError(std::string("arrangement JSON is missing \"") + key + "\"");
    const auto m = j.at("m").get<std::int64_t>();
    const auto n = j.at("n").get<std::int64_t>();
    if (m < 1 || n < 1) throw ValidationError("arrangement needs m >= 1 and n >= 1");
    const json& rows = j.at("C");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(m))
      throw ValidationError("\"C\" must have m = " + std::to_string(m) + " rows");
    IntMatrix c(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < c.rows(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != c.cols())
        throw ValidationError("row " + std::to_string(i + 1) + " of \"C\" must have n = " + std::to_string(n) +
                              " entries");
      for (std::size_t k = 0; k < c.cols(); ++k) {
        if (!rows[i][k].is_number_integer()) throw ValidationError("\"C\" entries must be integers");
        c(i, k) = rows[i][k].get<std::int64_t>();
      }
    }
    const json& b = j.at("b");
    if (!b.is_array()) throw ValidationError("\"b\" must be an array");
    std::vector<std::int64_t> offs;
    for (const auto& v : b) {
      if (!v.is_number_integer()) throw ValidationError("\"b\" entries must be integers");
      offs.push_back(v.get<std::int64_t>());
    }
    return ArrangementInput(std::move(c), std::move(offs));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

inline json coeffs_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

inline Polynomial polynomial_from_json(const json& j) {
  std::vector<BigInt> cs;
  for (const auto& v : j) {
    if (v.is_string()) cs.emplace_back(v.get<std::string>());
    else if (v.is_number_integer()) cs.emplace_back(v.get<std::int64_t>());
    else throw ValidationError("coefficient must be a decimal string or integer");
  }
  return Polynomial(std::move(cs));
}

// {"period": rho, "constituents": [{"k": 1, "coeffs": ["c0", ...]}, ...]};
// gcd-indexed storage adds "indexing": "gcd" and lists one entry per
// divisor k of rho, standing for every class with gcd(class, rho) = k.
inline json to_json(const QuasiPolynomial& qp) {
  json cs = json::array();
  for (std::size_t i = 0; i < qp.keys().size(); ++i)
    cs.push_back({{"k", qp.keys()[i]},
                  {"coeffs", coeffs_to_json(qp.stored()[i])},
                  {"display", qp.stored()[i].to_string()}});
  json out = {{"period", qp.period()}, {"constituents", std::move(cs)}};
  if (qp.indexing() == QuasiPolynomial::Indexing::gcd) out["indexing"] = "gcd";
  return out;
}

inline QuasiPolynomial quasi_polynomial_from_json(const json& j) {
  try {
    const auto period = j.at("period").get<std::uint64_t>();
    const bool by_gcd = j.contains("indexing") && j.at("indexing") == "gcd";
    std::map<std::uint64_t, Polynomial> entries;
    for (const auto& c : j.at("constituents"))
      entries.emplace(c.at("k").get<std::uint64_t>(), polynomial_from_json(c.at("coeffs")));
    if (by_gcd) return QuasiPolynomial::from_gcd_classes(period, std::move(entries));
    std::vector<Polynomial> cs;
    for (std::uint64_t k = 1; k <= period; ++k) {
      auto it = entries.find(k);
      if (it == entries.end()) throw ValidationError("missing constituent for class " + std::to_string(k));
      cs.push_back(std::move(it->second));
    }
    if (entries.size() != period) throw ValidationError("constituent classes must be exactly 1..period");
    return QuasiPolynomial::from_constituents(std::move(cs));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed quasi-polynomial JSON: ") + e.what());
  }
}

inline json to_json(const CollapseReport& r) {
  return {{"lcm_period", r.lcm_period},   {"minimum_period", r.minimum_period},
          {"collapse", r.collapse},       {"q0", r.q0},
          {"gcd_property", r.gcd_property}, {"quasi_polynomial", to_json(r.quasi_polynomial)}};
}

inline json to_json(const ScanReport& s) {
  json v = json::array();
  for (const auto& x : s.violations)
    v.push_back({{"input", to_json(x.input)}, {"lcm_period", x.lcm_period}, {"minimum_period", x.minimum_period}});
  return {{"m", s.m},       {"n", s.n},         {"entry_bound", s.entry_bound},
          {"trials", s.trials}, {"seed", s.seed}, {"generator", s.generator},
          {"violations", std::move(v)}};
}

inline std::string to_string(RootLength l) {
  switch (l) {
    case RootLength::uniform: return "uniform";
    case RootLength::short_root: return "short";
    case RootLength::long_root: return "long";
  }
  return "?";
}

inline json to_json(const ConjectureEntry& e) {
  return {{"removed_root", e.removed},
          {"length", to_string(e.length)},
          {"k", e.k},
          {"lcm_period", e.report.lcm_period},
          {"minimum_period", e.report.minimum_period},
          {"collapse", e.report.collapse},
          {"holds", e.holds},
          {"quasi_polynomial", to_json(e.report.quasi_polynomial)}};
}

}  // namespace qcp::io
