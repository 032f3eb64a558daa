#ifndef UALG_TOOLS_JSON_OUT_HPP
#define UALG_TOOLS_JSON_OUT_HPP

#include <json.hpp>

#include "ualg/commutator.hpp"
#include "ualg/retract.hpp"

namespace ualg::tools {

nlohmann::json to_json(const CubeWitness& w);
nlohmann::json to_json(const CommutatorResult& r);
nlohmann::json to_json(const RetractCertificate& cert);

}  // namespace ualg::tools

#endif  // UALG_TOOLS_JSON_OUT_HPP
