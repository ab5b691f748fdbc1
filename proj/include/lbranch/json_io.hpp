#pragma once

// JSON forms of the library's values. Multiplicities travel as decimal strings so that
// no consumer loses precision to a fixed-width integer type.

#include <string>

#include "json.hpp"

#include "lbranch/characters.hpp"
#include "lbranch/langlands.hpp"

namespace lbranch {

using Json = nlohmann::json;

inline Json to_json(const Weight& w) { return Json(std::vector<int>(w.begin(), w.end())); }

inline Weight weight_from_json(const Json& j)
{
  if (!j.is_array())
    throw ParseError("weight must be a JSON array");
  std::vector<int> c;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError("weight coordinates must be integers");
    c.push_back(x.get<int>());
  }
  return Weight(std::move(c));
}

inline Json to_json(const CartanDatum& c)
{
  return Json{{"family", c.family},
              {"rank", c.rank},
              {"matrix", c.matrix},
              {"symmetrizers", c.symmetrizers},
              {"labeling", c.labeling}};
}

/// Accepts {"family":"B","rank":2} for built-in types, or an explicit "matrix" with
/// optional "symmetrizers" (minimal ones are derived when absent).
inline CartanDatum cartan_from_json(const Json& j)
{
  try {
    if (!j.is_object())
      throw ParseError("Cartan datum must be a JSON object");
    std::string family = j.value("family", std::string("custom"));
    std::string labeling = j.value("labeling", std::string(j.contains("matrix") ? "custom" : "bourbaki"));
    if (!j.contains("matrix")) {
      if (family.size() != 1 || !j.contains("rank"))
        throw ParseError("Cartan datum needs either a matrix or a built-in family and rank");
      return cartan_matrix(family[0], j.at("rank").get<int>());
    }
    auto matrix = j.at("matrix").get<IntMatrix>();
    auto sym = j.contains("symmetrizers") ? j.at("symmetrizers").get<std::vector<int>>()
                                          : minimal_symmetrizers(matrix);
    CartanDatum c = validate_cartan(std::move(matrix), std::move(sym));
    if (j.contains("rank") && j.at("rank").get<int>() != c.rank)
      throw InvalidCartanError("rank field does not match the matrix size");
    if (labeling == "bourbaki" && family.size() == 1) {
      CartanDatum table = cartan_matrix(family[0], c.rank);
      if (table.matrix != c.matrix)
        throw InvalidCartanError("matrix does not match the Bourbaki table for " + table.name());
    }
    c.family = family;
    c.labeling = labeling;
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad Cartan datum JSON: ") + e.what());
  }
}

inline Json entries_json(const RootDatum& datum, const WeightMap& m, const char* key)
{
  Json arr = Json::array();
  for (const auto& [w, v] : dominance_sorted(datum, m))
    arr.push_back(Json{{key, to_json(w)}, {"mult", to_decimal(v)}});
  return arr;
}

inline Json to_json(const WeightFunction& f)
{
  return Json{{"datum", to_json(f.datum().cartan())}, {"entries", entries_json(f.datum(), f.entries(), "weight")}};
}

inline Json to_json(const VirtualCharacter& vc)
{
  return Json{{"datum", to_json(vc.datum().cartan())}, {"coeffs", entries_json(vc.datum(), vc.coeffs(), "weight")}};
}

inline WeightMap weight_map_from_json(const Json& arr, const char* key)
{
  if (!arr.is_array())
    throw ParseError("expected an array of entries");
  WeightMap out;
  for (const auto& e : arr) {
    if (!e.is_object() || !e.contains(key) || !e.contains("mult") || !e.at("mult").is_string())
      throw ParseError(std::string("entry needs \"") + key + "\" and a string \"mult\"");
    BigInt v = parse_decimal(e.at("mult").get<std::string>());
    if (!out.emplace(weight_from_json(e.at(key)), v).second)
      throw ParseError("duplicate weight in entries");
  }
  return out;
}

/// Reads a weight function, checking that its embedded datum is `datum`.
inline WeightFunction weight_function_from_json(const Json& j, const RootDatum& datum)
{
  if (!j.is_object() || !j.contains("datum") || !j.contains("entries"))
    throw ParseError("weight function JSON needs \"datum\" and \"entries\"");
  if (!(cartan_from_json(j.at("datum")) == datum.cartan()))
    throw ParseError("weight function belongs to a different root datum");
  try {
    return WeightFunction(datum, weight_map_from_json(j.at("entries"), "weight"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline WeightFunction weight_function_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("datum"))
    throw ParseError("weight function JSON needs \"datum\"");
  return weight_function_from_json(j, RootDatum(cartan_from_json(j.at("datum"))));
}

inline Json to_json(const BranchingResult& r, const ModifiedDatum& md)
{
  Json j{{"lambda", to_json(r.lambda)},
         {"ell", r.ell},
         {"m", entries_json(md.dual(), r.m(), "mu")},
         {"n", entries_json(md.base(), r.complementary.coeffs(), "nu")}};
  j["routes_agree"] = r.agree ? Json(*r.agree) : Json(nullptr);
  Json routes = Json::object();
  if (r.direct)
    routes["direct"] = entries_json(md.dual(), *r.direct, "mu");
  if (r.via_tensor)
    routes["tensor"] = entries_json(md.dual(), *r.via_tensor, "mu");
  if (r.closed_form)
    routes["closed"] = entries_json(md.dual(), *r.closed_form, "mu");
  j["routes"] = routes;
  if (r.closed_agree)
    j["closed_agrees"] = *r.closed_agree;
  return j;
}

} // namespace lbranch
