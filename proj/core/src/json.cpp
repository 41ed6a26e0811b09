#include "cmi/json.hpp"

namespace cmi {

using nlohmann::json;

json to_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back({g.u, g.v});
  return out;
}

MonomialIdeal ideal_from_json(const json& value) {
  if (!value.is_array()) throw DomainError("ideal JSON must be an array of [u, v] pairs");
  std::vector<LatticePoint> gens;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw DomainError("ideal JSON entries must be [u, v] integer pairs");
    gens.push_back({pair[0].get<Int>(), pair[1].get<Int>()});
  }
  return MonomialIdeal::normalize(gens);
}

json to_json(const BlockFactorization& factors) {
  json out = json::array();
  for (const auto& f : factors.factors())
    out.push_back({{"p", f.block.p()}, {"q", f.block.q()}, {"n", f.multiplicity}});
  return out;
}

json to_json(const BhattacharyaPolynomial& poly) {
  return {{"doubled", true},
          {"m2", poly.qm.doubled()},
          {"n2", poly.qn.doubled()},
          {"mn", poly.cross.doubled()},
          {"m", poly.lm.doubled()},
          {"n", poly.ln.doubled()},
          {"text", poly.to_string()}};
}

json to_json(const MixedMultiplicities& mixed) {
  return {{"e20", mixed.e20}, {"e11", mixed.e11}, {"e02", mixed.e02}};
}

json to_json(const oracle::ColengthTable& table) {
  json rows = json::array();
  for (Int m = 0; m <= table.max_m(); ++m) {
    json row = json::array();
    for (Int n = 0; n <= table.max_n(); ++n) row.push_back(table.at(m, n));
    rows.push_back(std::move(row));
  }
  return {{"max_m", table.max_m()}, {"max_n", table.max_n()}, {"values", std::move(rows)}};
}

}  // namespace cmi
