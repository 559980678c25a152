#include "cbasis/json_io.hpp"

#include <stdexcept>

namespace cbasis {

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) j[std::to_string(it->first)] = it->second.str();
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial JSON must be an object");
  std::map<int, Integer> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent '" + key + "'");
    terms[e] += Integer(value.get<std::string>());
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const Tuple& b) { return Json(b); }

Json to_json(const Space& space) { return space.is_c() ? Json("typeC") : Json("typeA"); }

Json to_json(const TensorVec& v) {
  Json j = Json::object();
  j["space"] = to_json(v.space());
  if (!v.space().is_c()) j["sigma"] = to_string(v.space().sigma);
  j["n"] = v.n();
  Json terms = Json::array();
  for (const auto& [b, p] : v.terms()) terms.push_back({{"b", to_json(b)}, {"poly", to_json(p)}});
  j["terms"] = std::move(terms);
  return j;
}

TensorVec tensor_from_json(const Json& j) {
  const std::string kind = j.at("space").get<std::string>();
  Space space;
  if (kind == "typeC")
    space = Space::c();
  else if (kind == "typeA")
    space = Space::a(parse_signs(j.at("sigma").get<std::string>()));
  else
    throw std::invalid_argument("unknown space '" + kind + "'");
  TensorVec v(space, j.at("n").get<int>());
  for (const auto& t : j.at("terms")) v.add_term(t.at("b").get<Tuple>(), laurent_from_json(t.at("poly")));
  return v;
}

Json to_json(const ArcDiagram& d) {
  Json labels = Json::object();
  for (const auto& [i, l] : d.non_wedge()) labels[std::to_string(i)] = to_string(l);
  return {{"non_wedge", std::move(labels)}, {"n", d.n()}};
}

ArcDiagram arc_from_json(const Json& j) {
  ArcDiagram d(j.at("n").get<int>());
  for (const auto& [key, value] : j.at("non_wedge").items()) {
    const std::string s = value.get<std::string>();
    if (s.size() != 1) throw std::invalid_argument("vertex labels are single characters");
    d.set(std::stoi(key), parse_vertex_label(s[0]));
  }
  return d;
}

Json to_json(const ComponentReport& report) {
  Json adjacency = Json::object();
  for (const auto& [t, edges] : report.adjacency) {
    Json out = Json::object();
    for (const auto& [op, target] : edges) out[op] = to_json(target);
    adjacency[to_string(t)] = std::move(out);
  }
  Json unreached = Json::array();
  for (const auto& t : report.unreached_antidominant) unreached.push_back(to_json(t));
  Json stray = Json::array();
  for (const auto& t : report.reached_not_antidominant) stray.push_back(to_json(t));
  return {{"n", report.n},
          {"box", {report.lo, report.hi}},
          {"reached", report.adjacency.size()},
          {"adjacency", std::move(adjacency)},
          {"unreached_antidominant", std::move(unreached)},
          {"reached_not_antidominant", std::move(stray)}};
}

}  // namespace cbasis
