#pragma once

// JSON form of a materialized monad grid. Scalars are strings ("3/4") so the
// document round-trips exactly.

#include <json.hpp>

#include "monadcore.hpp"

namespace eigenmonad {

using json = nlohmann::ordered_json;

inline Field field_from_name(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("F_", 0) == 0) return Field::prime(std::stol(s.substr(2)));
  throw std::invalid_argument("unknown field name: " + s);
}

inline json sparse_to_json(const SparseVec& v) {
  json a = json::array();
  for (auto& [i, x] : v.e) a.push_back(json::array({i, to_string(x)}));
  return a;
}

inline SparseVec sparse_from_json(const Field& F, const json& a) {
  std::map<int, Q> m;
  for (auto& t : a) m[t.at(0).get<int>()] = parse_q(t.at(1).get<std::string>());
  return from_map(F, m);
}

inline json grid_to_json(const Monad& T, const std::vector<int>& W) {
  json j;
  j["field"] = T.field().name();
  j["window"] = W;
  json cells = json::array();
  for (int Y : W)
    for (int X : W) {
      json names = json::array();
      for (int i = 0; i < T.dim(Y, X); ++i) names.push_back(T.basis_label(Y, X, i));
      cells.push_back({{"from", X}, {"to", Y}, {"dim", T.dim(Y, X)}, {"basis_labels", names}});
    }
  j["cells"] = cells;
  json comp = json::array();
  for (int Z : W)
    for (int Y : W)
      for (int X : W) {
        json trip = json::array();
        for (int a = 0; a < T.dim(Z, Y); ++a)
          for (int b = 0; b < T.dim(Y, X); ++b)
            for (auto& [c, x] : T.comp(Z, Y, X, a, b).e) trip.push_back(json::array({a, b, c, to_string(x)}));
        if (!trip.empty()) comp.push_back({{"z", Z}, {"y", Y}, {"x", X}, {"tensor", trip}});
      }
  j["comp"] = comp;
  json units = json::array();
  for (int X : W) units.push_back({{"object", X}, {"vector", sparse_to_json(T.unit(X))}});
  j["units"] = units;
  return j;
}

inline std::unique_ptr<TableMonad> grid_from_json(const json& j) {
  Field F = field_from_name(j.at("field").get<std::string>());
  auto W = j.at("window").get<std::vector<int>>();
  auto T = std::make_unique<TableMonad>(F, W);
  for (auto& c : j.at("cells"))
    T->set_cell(c.at("to").get<int>(), c.at("from").get<int>(), c.at("dim").get<int>(),
                c.at("basis_labels").get<std::vector<std::string>>());
  for (auto& c : j.at("comp")) {
    int Z = c.at("z"), Y = c.at("y"), X = c.at("x");
    std::map<std::pair<int, int>, std::map<int, Q>> acc;
    for (auto& t : c.at("tensor"))
      acc[{t.at(0).get<int>(), t.at(1).get<int>()}][t.at(2).get<int>()] = parse_q(t.at(3).get<std::string>());
    for (auto& [ab, m] : acc) T->set_comp(Z, Y, X, ab.first, ab.second, from_map(F, m));
  }
  for (auto& u : j.at("units")) T->set_unit(u.at("object").get<int>(), sparse_from_json(F, u.at("vector")));
  return T;
}

}  // namespace eigenmonad
