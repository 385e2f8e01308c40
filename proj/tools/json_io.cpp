#include "json_io.hpp"

#include "pottssos/errors.hpp"

namespace pottssos {

nlohmann::json to_json(const ModelParams& params) {
  nlohmann::json j = {
      {"theta", params.theta()}, {"r", params.r()}, {"m", params.m()}, {"k", params.k()}};
  if (const auto& c = params.couplings()) {
    j["J"] = c->J;
    j["Jp"] = c->Jp;
    j["beta"] = c->beta;
  }
  return j;
}

ModelParams params_from_json(const nlohmann::json& j) {
  const int m = j.value("m", 2);
  const int k = j.value("k", 2);
  if (j.contains("J") && j.contains("Jp") && j.contains("beta")) {
    return ModelParams::from_couplings(j.at("J").get<double>(), j.at("Jp").get<double>(),
                                       j.at("beta").get<double>(), m, k);
  }
  if (!j.contains("theta") || !j.contains("r")) {
    throw DomainError("model parameters need either (theta, r) or (J, Jp, beta)");
  }
  return ModelParams::from_activities(j.at("theta").get<double>(), j.at("r").get<double>(), m,
                                      k);
}

nlohmann::json to_json(const BoundaryField& h) {
  return {{"h", std::vector<double>(h.values().begin(), h.values().end())}};
}

BoundaryField boundary_field_from_json(const nlohmann::json& j) {
  return BoundaryField(j.at("h").get<std::vector<double>>());
}

nlohmann::json to_json(const DiscriminantReport& d) {
  return {{"a", d.a},
          {"b", d.b},
          {"c", d.c},
          {"D_std", d.D_std},
          {"D_paper", d.D_paper},
          {"band", d.band},
          {"two_real_positive", d.two_real_positive},
          {"degenerate", d.degenerate()}};
}

nlohmann::json to_json(const PhasePoint& p) {
  return {{"theta", p.theta},
          {"r", p.r},
          {"D_std", p.D_std},
          {"b", p.b},
          {"n_fixed_points", p.n_fixed_points},
          {"n_two_cycles", p.n_two_cycles},
          {"label", std::string(to_string(p.label))}};
}

}  // namespace pottssos
