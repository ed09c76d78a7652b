#include "orbitham/json_io.hpp"

namespace orbitham {

using nlohmann::json;

json weight_to_json(const Weight& w) { return json(w); }

Weight weight_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    fail(Errc::bad_argument, "weight JSON must be an array of length " + std::to_string(rank));
  Weight w;
  for (const auto& x : j) w.push_back(x.get<int>());
  return w;
}

json mexpansion_to_json(const MExpansion& e) {
  json terms = json::array();
  for (const auto& [n, c] : e.terms) terms.push_back({weight_to_json(n), c.get_str()});
  return json{{"terms", terms}};
}

MExpansion mexpansion_from_json(const json& j, int rank) {
  MExpansion e;
  for (const auto& t : j.at("terms"))
    e.terms.emplace(weight_from_json(t.at(0), rank), BigInt(t.at(1).get<std::string>()));
  return e;
}

json taupoly_to_json(const TauPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms) terms.push_back({weight_to_json(e), rational_to_string(c)});
  return json{{"terms", terms}};
}

TauPoly taupoly_from_json(const json& j, int rank) {
  TauPoly p;
  for (const auto& t : j.at("terms"))
    p.terms.emplace(weight_from_json(t.at(0), rank),
                    rational_from_string(t.at(1).get<std::string>()));
  return p;
}

json nupoly_to_json(const NuPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return c;
}

json nucoeff_to_json(const NuCoefficient& c) {
  return json{{"num", nupoly_to_json(c.num())}, {"den", nupoly_to_json(c.den())}};
}

json nutaupoly_to_json(const NuTauPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms) terms.push_back({weight_to_json(e), nucoeff_to_json(c)});
  return json{{"terms", terms}};
}

json root_system_to_json(const RootSystem& rs) {
  json gram = json::array();
  for (const auto& row : rs.gram()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rational_to_string(x));
    gram.push_back(r);
  }
  json roots = json::array();
  for (const auto& r : rs.positive_roots())
    roots.push_back({{"omega", weight_to_json(r.omega)},
                     {"root", json(r.root)},
                     {"height", r.height},
                     {"length2", rational_to_string(r.length2)}});
  json rho_rc = json::array();
  for (const auto& x : rs.weyl_vector_root_coords()) rho_rc.push_back(rational_to_string(x));
  json heights = json::array(), rho_w = json::array();
  for (int a = 1; a <= rs.rank(); ++a) {
    heights.push_back(rational_to_string(rs.coweyl_dot_weight(a)));
    rho_w.push_back(rational_to_string(rs.rho_dot_weight(a)));
  }
  json orbit_sizes = json::array();
  for (int a = 1; a <= rs.rank(); ++a) {
    Weight w(rs.rank(), 0);
    w[a - 1] = 1;
    orbit_sizes.push_back(orbit_size(w, rs).get_str());
  }
  return json{{"name", rs.name()},
              {"rank", rs.rank()},
              {"cartan", json(rs.cartan())},
              {"gram", gram},
              {"positive_roots", roots},
              {"weyl_vector_omega", weight_to_json(rs.weyl_vector_omega())},
              {"weyl_vector_root_coords", rho_rc},
              {"weight_heights", heights},
              {"rho_dot_weights", rho_w},
              {"highest_root_coords", json(rs.highest_root_coords())},
              {"bourbaki_numbers", json(rs.bourbaki_numbers())},
              {"weyl_order", rs.weyl_order().get_str()},
              {"fundamental_orbit_sizes", orbit_sizes}};
}

std::string dump_stable(const json& j) { return j.dump(); }

}  // namespace orbitham
