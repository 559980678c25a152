#include <doctest.h>

#include "cbasis/json_io.hpp"

using namespace cbasis;

TEST_CASE("Laurent polynomial JSON") {
  const LaurentPoly p = parse_laurent("q^7 + 4*q^5 + 3*q^3 - q");
  CHECK(to_json(p).dump() == R"({"7":"1","5":"4","3":"3","1":"-1"})");
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(to_json(LaurentPoly()).dump() == "{}");
  CHECK_THROWS(laurent_from_json(Json::array()));
  CHECK_THROWS(laurent_from_json(Json::parse(R"({"1x":"2"})")));
}

TEST_CASE("tensor vector JSON") {
  TensorVec v(Space::c(), 2);
  v.add_term({2, -1}, LaurentPoly::q());
  v.add_term({1, 0}, 1);
  CHECK(to_json(v).dump() ==
        R"({"space":"typeC","n":2,"terms":[{"b":[1,0],"poly":{"0":"1"}},{"b":[2,-1],"poly":{"1":"1"}}]})");
  CHECK(tensor_from_json(to_json(v)) == v);
  TensorVec w = TensorVec::monomial(Space::a(parse_signs("+-")), {3, 1}, -2);
  CHECK(to_json(w)["sigma"] == "+-");
  CHECK(tensor_from_json(to_json(w)) == w);
  CHECK_THROWS(tensor_from_json(Json::parse(R"({"space":"typeB","n":1,"terms":[]})")));
}

TEST_CASE("arc diagram JSON") {
  const ArcDiagram d = weight_diagram({2, -1});
  CHECK(to_json(d).dump() == R"({"non_wedge":{"2":"v"},"n":2})");
  CHECK(arc_from_json(to_json(d)) == d);
}

TEST_CASE("component JSON") {
  const Json j = to_json(explore_component(1, -1, 1));
  CHECK(j["reached"] == 3);
  CHECK(j["adjacency"]["0"]["f0"] == Json::array({1}));
}
