#include <doctest.h>

#include <random>

#include "cbasis/crystal.hpp"
#include "helpers.hpp"

using namespace cbasis;
using cbasis::testing::all_signs;

TEST_CASE("signature reduction") {
  CHECK(to_string(reduce_signature(parse_signature("fee.ffeff"))) == "f.......f");
  CHECK(to_string(reduce_signature(parse_signature("...."))) == "....");
  CHECK(to_string(reduce_signature(parse_signature("ef"))) == "..");
  CHECK(to_string(reduce_signature(parse_signature("fe"))) == "fe");
  CHECK(to_string(reduce_signature(parse_signature("e.eff"))) == ".....");
}

TEST_CASE("reduction does not depend on the cancellation order") {
  // Cancel adjacent pairs (ignoring dots) in random order until none remain.
  std::mt19937 rng(3);
  const char marks[] = {'f', 'e', '.'};
  for (int k = 0; k < 500; ++k) {
    std::string s;
    for (int t = 0; t < 10; ++t) s += marks[rng() % 3];
    std::string naive = s;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < naive.size(); ++a) {
        if (naive[a] != 'e') continue;
        std::size_t b = a + 1;
        while (b < naive.size() && naive[b] == '.') ++b;
        if (b < naive.size() && naive[b] == 'f') pairs.emplace_back(a, b);
      }
      if (pairs.empty()) break;
      auto [a, b] = pairs[rng() % pairs.size()];
      naive[a] = naive[b] = '.';
    }
    CHECK(to_string(reduce_signature(parse_signature(s))) == naive);
  }
}

TEST_CASE("crystal operators") {
  const Tuple b{2, -1, -1, 4, -2, -2, 3, 2, -2};
  CHECK(crystal_f(b, 2) == Tuple{2, -1, -1, 4, -2, -2, 3, 2, -1});
  CHECK_FALSE(crystal_e(b, 2).has_value());
  CHECK(crystal_f({0, 0}, 0) == Tuple{0, 1});
  const Space A = Space::a(parse_signs("+-"));
  CHECK(crystal_f({1, 2}, 1, A) == Tuple{1, 1});
  CHECK(crystal_e({1, 1}, 1, A) == Tuple{1, 2});
  CHECK_FALSE(crystal_e({2, 2}, 1, A).has_value());
}

TEST_CASE("partial inverse law") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Space> spaces{Space::c()};
    for (auto& s : all_signs(n)) spaces.push_back(Space::a(s));
    for (const Space& space : spaces)
      for (const Tuple& b : box_tuples(n, -3, 3))
        for (int i = space.is_c() ? 0 : -3; i <= 3; ++i) {
          if (auto f = crystal_op(b, i, GenKind::f, space)) CHECK(crystal_op(*f, i, GenKind::e, space) == b);
          if (auto e = crystal_op(b, i, GenKind::e, space)) CHECK(crystal_op(*e, i, GenKind::f, space) == b);
        }
  }
}

TEST_CASE("f lowers the weight by a simple root") {
  for (const Tuple& b : box_tuples(3, -3, 3))
    for (int i = 0; i <= 3; ++i)
      if (auto f = crystal_f(b, i))
        CHECK(total_weight(*f, Space::c()) == total_weight(b, Space::c()) - simple_root(Family::typeC, i));
}

TEST_CASE("antidominance is closed under the operators") {
  for (const Tuple& b : box_tuples(4, -3, 3)) {
    if (!is_antidominant(b)) continue;
    for (int i = 0; i <= 4; ++i)
      for (GenKind kind : {GenKind::f, GenKind::e})
        if (auto c = crystal_op(b, i, kind, Space::c())) CHECK(is_antidominant(*c));
  }
}

TEST_CASE("connecting antidominant tuples to z") {
  CHECK(connect_to_z({0, 0, 0}).word.empty());
  const Connection c01 = connect_to_z({0, 1});
  CHECK(c01.from_proof);
  CHECK(to_string(c01.word) == "f0");
  const Connection c = connect_to_z({-1, 2});
  CHECK(apply_word({0, 0}, c.word) == Tuple{-1, 2});
  CHECK(to_string(proof_word({-1, 2})) == "e1 f0 f1");
  CHECK_THROWS(connect_to_z({2, -1}));
  for (int n = 1; n <= 4; ++n)
    for (const Tuple& b : box_tuples(n, -3, 3))
      if (is_antidominant(b)) CHECK(apply_word(Tuple(n, 0), connect_to_z(b).word) == b);
}

TEST_CASE("membership, prinjectivity and z_k") {
  CHECK(component_membership({0, 0}));
  CHECK_FALSE(component_membership({2, -1}));
  CHECK(is_prinjective({-3, 0, 0, 5}));
  CHECK(z_k(2, 3) == Tuple{-2, -2});
  CHECK(z_k_weight(2, 3) == Weight::epsilon(Family::typeC, 2, -2));
  for (int k = 1; k <= 4; ++k) CHECK(z_k_weight(4, k) == Weight::epsilon(Family::typeC, k - 1, -4));
}

TEST_CASE("bounded component exploration") {
  const ComponentReport r = explore_component(2, -2, 2);
  CHECK(r.adjacency.size() == 15);
  CHECK(r.unreached_antidominant.empty());
  CHECK(r.reached_not_antidominant.empty());
  CHECK(r.adjacency.at({0, 0}).at("f0") == Tuple{0, 1});
  const std::string dot = component_dot(r);
  CHECK(dot.find("\"0,0\" -> \"0,1\" [label=\"f0\"]") != std::string::npos);
  const ComponentReport tiny = explore_component(2, 0, 1);
  for (const auto& [t, edges] : tiny.adjacency) CHECK(is_antidominant(t));
  CHECK_THROWS(explore_component(2, 1, 3));
}
