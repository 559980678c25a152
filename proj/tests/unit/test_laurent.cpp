#include <doctest.h>

#include <random>

#include "cbasis/laurent.hpp"

using namespace cbasis;

namespace {
const LaurentPoly q = LaurentPoly::q();

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exps(-4, 4), coeffs(-3, 3), count(0, 4);
  std::map<int, Integer> terms;
  for (int k = count(rng); k > 0; --k) terms[exps(rng)] += coeffs(rng);
  return LaurentPoly::from_terms(terms);
}
}  // namespace

TEST_CASE("arithmetic") {
  CHECK((q + (-q)).is_zero());
  CHECK((q + 1) * (q - 1) == q * q - 1);
  const LaurentPoly t = parse_laurent("q^7 + 4*q^5 + 3*q^3 - q");
  CHECK(t * 1 == t);
  CHECK(t.to_string() == "q^7 + 4*q^5 + 3*q^3 - q");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::q(-2).to_string() == "q^-2");
}

TEST_CASE("no stored zero coefficients") {
  LaurentPoly p = q + 2;
  p -= q;
  CHECK(p.size() == 1);
  CHECK(p == LaurentPoly(2));
  CHECK(LaurentPoly::from_terms({{3, 0}, {1, 2}}).size() == 1);
}

TEST_CASE("bar") {
  CHECK(q.bar() == LaurentPoly::q(-1));
  CHECK(LaurentPoly(3).bar() == LaurentPoly(3));
  CHECK((q * q + 2 * LaurentPoly::q(-1)).bar() == LaurentPoly::q(-2) + 2 * q);
}

TEST_CASE("classify") {
  CHECK(classify(q * q * q - q) == PolyClass::in_qZq);
  CHECK(classify(q + q.bar()) == PolyClass::bar_symmetric);
  CHECK(classify(1) == PolyClass::one);
  CHECK(classify(0) == PolyClass::zero);
  CHECK(classify(q + 1) == PolyClass::other);
  CHECK(in_qZq(0));
  CHECK_FALSE(in_qZq(1));
}

TEST_CASE("bar-symmetric correction") {
  for (const char* text : {"q^-2 + 3*q^-1 + 5 + q", "7", "-q^-3 + q^2", "q^4"}) {
    const LaurentPoly p = parse_laurent(text);
    const LaurentPoly c = bar_symmetric_correction(p);
    CHECK(is_bar_symmetric(c));
    CHECK(in_qZq(p - c));
  }
}

TEST_CASE("parse round trip") {
  std::mt19937 rng(1);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = random_poly(rng);
    CHECK(parse_laurent(p.to_string()) == p);
  }
  CHECK(parse_laurent("-3") == LaurentPoly(-3));
  CHECK(parse_laurent("2*q") == 2 * q);
  CHECK_THROWS(parse_laurent("q^"));
  CHECK_THROWS(parse_laurent("x"));
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(2);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
  }
}

TEST_CASE("arbitrary precision coefficients") {
  LaurentPoly p = 1 + q;
  LaurentPoly acc = 1;
  for (int k = 0; k < 100; ++k) acc *= p;
  CHECK(acc.coefficient(50) == Integer("100891344545564193334812497256"));
  CHECK(acc.eval_at_one() == Integer(1) << 100);
}
