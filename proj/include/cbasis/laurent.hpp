#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cbasis {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1], stored as exponent-sorted (ascending) nonzero terms.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit constants read naturally

  static LaurentPoly monomial(Integer coeff, int exponent);
  /// q^e
  static LaurentPoly q(int exponent = 1);
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coefficient(int exponent) const;

  /// q -> q^-1
  LaurentPoly bar() const;
  /// this * q^k
  LaurentPoly shifted(int k) const;
  /// value at q = 1
  Integer eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

  /// Decreasing exponents, e.g. "q^7 + 4*q^5 + 3*q^3 - q"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& rhs, int sign);

  std::vector<Term> terms_;
};

enum class PolyClass { zero, one, in_qZq, bar_symmetric, other };

/// First matching class in the order zero, one, in_qZq, bar_symmetric, other.
PolyClass classify(const LaurentPoly& p);
const char* to_string(PolyClass c);

/// True when every exponent is >= 1 (the zero polynomial qualifies).
bool in_qZq(const LaurentPoly& p);
bool is_bar_symmetric(const LaurentPoly& p);

/// The unique bar-symmetric c with p - c in qZ[q].
LaurentPoly bar_symmetric_correction(const LaurentPoly& p);

/// Parses the canonical text form produced by to_string (also accepts "q^-2", "-3", "2*q").
LaurentPoly parse_laurent(const std::string& text);

}  // namespace cbasis
