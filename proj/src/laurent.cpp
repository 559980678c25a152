#include "cbasis/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cbasis {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, Integer(constant));
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::q(int exponent) { return monomial(1, exponent); }

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  for (const auto& [e, c] : terms_)
    if (e == exponent) return c;
  return 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int sign) {
  if (rhs.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->second + b->second) : Integer(a->second - b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.size() == 1 && lhs.terms_[0].second == 1) return rhs.shifted(lhs.terms_[0].first);
  if (rhs.size() == 1 && rhs.terms_[0].second == 1) return lhs.shifted(rhs.terms_[0].first);
  std::map<int, Integer> acc;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) acc[ea + eb] += ca * cb;
  return LaurentPoly::from_terms(acc);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

PolyClass classify(const LaurentPoly& p) {
  if (p.is_zero()) return PolyClass::zero;
  if (p.is_one()) return PolyClass::one;
  if (p.min_exponent() >= 1) return PolyClass::in_qZq;
  if (is_bar_symmetric(p)) return PolyClass::bar_symmetric;
  return PolyClass::other;
}

const char* to_string(PolyClass c) {
  switch (c) {
    case PolyClass::zero: return "zero";
    case PolyClass::one: return "one";
    case PolyClass::in_qZq: return "in_qZq";
    case PolyClass::bar_symmetric: return "bar_symmetric";
    case PolyClass::other: return "other";
  }
  return "other";
}

bool in_qZq(const LaurentPoly& p) { return p.is_zero() || p.min_exponent() >= 1; }

bool is_bar_symmetric(const LaurentPoly& p) { return p.bar() == p; }

LaurentPoly bar_symmetric_correction(const LaurentPoly& p) {
  std::map<int, Integer> c;
  for (const auto& [e, coeff] : p.terms()) {
    if (e > 0) break;
    c[e] += coeff;
    if (e < 0) c[-e] += coeff;
  }
  return LaurentPoly::from_terms(c);
}

namespace {

[[noreturn]] void parse_error(const std::string& text) {
  throw std::invalid_argument("cannot parse Laurent polynomial: '" + text + "'");
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_error(text);

  LaurentPoly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      parse_error(text);
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) parse_error(text);
      ++pos;
      if (pos >= s.size() || s[pos] != 'q') parse_error(text);
    }
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t used = 0;
        try {
          exponent = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
          parse_error(text);
        }
        pos += used;
      }
    } else if (digits.empty()) {
      parse_error(text);
    }
    result += LaurentPoly::monomial(sign * coeff, exponent);
  }
  return result;
}

}  // namespace cbasis
