#pragma once

// JSON forms of the library's values. Ideals are arrays of [u, v] pairs;
// half-integers travel doubled, flagged with "doubled": true.

#include <nlohmann/json.hpp>

#include "cmi/bhattacharya.hpp"
#include "cmi/factorization.hpp"
#include "cmi/monomial_ideal.hpp"
#include "cmi/oracle.hpp"

namespace cmi {

nlohmann::json to_json(const MonomialIdeal& ideal);

/// Accepts an array of [u, v] pairs; throws DomainError on anything else.
MonomialIdeal ideal_from_json(const nlohmann::json& value);

/// [{"p": .., "q": .., "n": ..}, ...]
nlohmann::json to_json(const BlockFactorization& factors);

nlohmann::json to_json(const BhattacharyaPolynomial& poly);

nlohmann::json to_json(const MixedMultiplicities& mixed);

nlohmann::json to_json(const oracle::ColengthTable& table);

}  // namespace cmi
