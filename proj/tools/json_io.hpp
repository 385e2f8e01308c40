#pragma once

#include <json.hpp>

#include "pottssos/model.hpp"
#include "pottssos/periodic_solver.hpp"
#include "pottssos/phase_diagram.hpp"

namespace pottssos {

nlohmann::json to_json(const ModelParams& params);
// Accepts either {theta, r, m, k} or {J, Jp, beta, m, k}.
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundaryField& h);
BoundaryField boundary_field_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiscriminantReport& d);
nlohmann::json to_json(const PhasePoint& p);

}  // namespace pottssos
