#pragma once

#include <cstdint>

#include <json.hpp>

#include "chroma/exactmat.hpp"
#include "chroma/oracle.hpp"
#include "chroma/restriction.hpp"
#include "chroma/rotrep.hpp"

namespace chroma {

// JSON views of the library's value types. Matrix entries are serialized as
// decimal strings so arbitrary-precision values survive the round trip.
nlohmann::json matrix_json(const IntMatrix& m);
nlohmann::json rep_json(const RotationRep& r);  // adds "two_d" when k has a 2D rotation
nlohmann::json restriction_json(const RestrictionResult& res);
nlohmann::json table_json(const std::vector<TableRow>& rows);
nlohmann::json counterexample_json(const Counterexample& ce);
nlohmann::json agreement_json(const std::vector<AgreementRow>& rows);
nlohmann::json mindim_json(std::uint64_t n);

}  // namespace chroma
