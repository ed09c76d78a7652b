#ifndef ORBITHAM_JSON_IO_HPP
#define ORBITHAM_JSON_IO_HPP

#include <json.hpp>

#include "orbitham/orbitalgebra.hpp"

namespace orbitham {

// JSON conventions: big integers and exact rationals are decimal strings,
// weights and exponent vectors are integer arrays, map-like structures are
// emitted as sorted arrays so serialization is byte-stable.
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j, int rank);

nlohmann::json mexpansion_to_json(const MExpansion& e);
MExpansion mexpansion_from_json(const nlohmann::json& j, int rank);

nlohmann::json taupoly_to_json(const TauPoly& p);
TauPoly taupoly_from_json(const nlohmann::json& j, int rank);

nlohmann::json nupoly_to_json(const NuPoly& p);
nlohmann::json nucoeff_to_json(const NuCoefficient& c);
nlohmann::json nutaupoly_to_json(const NuTauPoly& p);

nlohmann::json root_system_to_json(const RootSystem& rs);

std::string dump_stable(const nlohmann::json& j);

}  // namespace orbitham

#endif
