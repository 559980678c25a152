#pragma once

// Index tuples, the weight lattice, and the two Bruhat orders on Z^n.
//
// Type C is the sp(2 infinity) picture with natural module basis v_j (j in Z),
// v_j of weight eps_{j-1} for j > 0 and -eps_{-j} for j <= 0. Type A is the
// sl(infinity) picture on V^{sigma_1} (x) ... (x) V^{sigma_n}, v^{+-}_j of weight
// +-eps_j.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbasis {

using Tuple = std::vector<int>;

enum class Sign : signed char { minus = -1, plus = 1 };
using SignVector = std::vector<Sign>;

inline int value(Sign s) { return static_cast<int>(s); }

/// Parses "+-+" style strings.
SignVector parse_signs(std::string_view text);
std::string to_string(const SignVector& sigma);
/// sigma_r = + iff b_r > 0.
SignVector signs_of(const Tuple& b);

Tuple parse_tuple(std::string_view text);
std::string to_string(const Tuple& b);

/// Tuple of length n with 1 in (1-based) slot r.
Tuple unit_tuple(int n, int r);

enum class Family { typeC, typeA };

/// Which tensor space / Bruhat order a computation lives in.
struct Space {
  Family family = Family::typeC;
  SignVector sigma;  // empty for type C

  static Space c() { return {}; }
  static Space a(SignVector sigma) { return {Family::typeA, std::move(sigma)}; }

  bool is_c() const { return family == Family::typeC; }
  std::string to_string() const;

  friend bool operator==(const Space&, const Space&) = default;
  friend auto operator<=>(const Space&, const Space&) = default;
};

/// Element of the weight lattice: finitely many nonzero coefficients of eps_i.
/// Type C indices are naturals, type A indices are arbitrary integers.
class Weight {
 public:
  explicit Weight(Family family = Family::typeC) : family_(family) {}
  static Weight epsilon(Family family, int i, int coeff = 1);

  Family family() const { return family_; }
  const std::map<int, int>& coeffs() const { return coeffs_; }
  int coefficient(int i) const;
  bool is_zero() const { return coeffs_.empty(); }

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// e.g. "eps1 - 2*eps0", "0" for zero.
  std::string to_string() const;

 private:
  void check_family(const Weight& rhs) const;

  Family family_;
  std::map<int, int> coeffs_;
};

/// Simple root alpha_i: type C alpha_0 = -2 eps_0, alpha_i = eps_{i-1} - eps_i;
/// type A alpha_i = eps_i - eps_{i+1}.
Weight simple_root(Family family, int i);

/// Coordinates m_i with lambda = sum m_i alpha_i, or nullopt when lambda is not in
/// the root lattice. Type C: m_i = -sum_{k>=i} c_k (i >= 1), m_0 = -(sum_k c_k)/2.
/// Type A: m_i = sum_{k<=i} c_k, requiring sum_k c_k = 0.
std::optional<std::map<int, long long>> simple_root_expansion(const Weight& lambda);

/// lambda - mu is an N-combination of simple roots.
bool dominates(const Weight& lambda, const Weight& mu);

std::vector<Weight> wt_c(const Tuple& b);
std::vector<Weight> wt_a(const Tuple& b, const SignVector& sigma);
std::vector<Weight> wt(const Tuple& b, const Space& space);
Weight total(std::span<const Weight> weights);
/// |WT(b)| in the given space.
Weight total_weight(const Tuple& b, const Space& space);

/// beta <= gamma in the inverse dominance order: equal totals and every partial sum
/// of beta dominates the matching partial sum of gamma. Throws on mixed families.
bool inverse_dominance_leq(std::span<const Weight> beta, std::span<const Weight> gamma);

/// N_[1,s](b, i) = #{r <= s : b_r > i} - #{r <= s : b_r <= -i}.
int n_stat_c(const Tuple& b, int i, int s);
/// N^sigma_[1,s](b, i) = #{r <= s : b_r > i, sigma_r = +} - #{r <= s : b_r > i, sigma_r = -}.
int n_stat_a(const Tuple& b, const SignVector& sigma, int i, int s);

bool bruhat_leq(const Tuple& a, const Tuple& b, const Space& space);
bool bruhat_less(const Tuple& a, const Tuple& b, const Space& space);

enum class Relation { equal, less, greater, incomparable };
const char* to_string(Relation r);

/// One N-statistic condition checked while comparing a against b.
struct NStatCheck {
  enum class Kind { parity, inequality, equality } kind;
  int s;
  int i;
  int value_a;
  int value_b;
  bool holds;
};

struct BruhatReport {
  Relation relation;
  /// First failing check of a <= b, if any.
  std::optional<NStatCheck> violation_leq;
  /// First failing check of b <= a, if any.
  std::optional<NStatCheck> violation_geq;
};

BruhatReport bruhat_compare(const Tuple& a, const Tuple& b, const Space& space);

/// Strictly monotone along the Bruhat order: a < b implies height(a) < height(b).
long long bruhat_height(const Tuple& b, const Space& space);

/// b': b_r if b_r > 0, else 1 - b_r.
Tuple prime_map(const Tuple& b);
/// Inverse of prime_map restricted to B_sigma.
Tuple prime_inverse(const Tuple& b0, const SignVector& sigma);

bool in_B0(const Tuple& b);
bool in_Bk(const Tuple& b, int k);
bool in_Bsigma(const Tuple& b, const SignVector& sigma);
bool in_B_leq_k(const Tuple& b, int k);
bool in_B_lt_k(const Tuple& b, int k);
bool in_B_leq_sigma(const Tuple& b, const SignVector& sigma);
bool in_B_lt_sigma(const Tuple& b, const SignVector& sigma);
bool in_B_n0n1(const Tuple& b, int n0, int n1);
bool in_B_sharp(const Tuple& b, int n0, int n1);
bool in_B_plus(const Tuple& b, int n0, int n1);
bool is_dominant(const Tuple& b);
bool is_strictly_dominant(const Tuple& b);
bool is_antidominant(const Tuple& b);
bool is_typical(const Tuple& b);

struct TupleSet {
  enum class Kind {
    B0,
    Bk,
    Bsigma,
    B_leq_k,
    B_lt_k,
    B_leq_sigma,
    B_lt_sigma,
    B_n0n1,
    B_sharp,
    B_plus,
    dominant,
    strictly_dominant,
    antidominant,
    typical,
  };
  Kind kind;
  int k = 0;
  SignVector sigma;
  int n0 = 0;
  int n1 = 0;
};

bool set_membership(const Tuple& b, const TupleSet& set);

/// All tuples in [lo, hi]^n, lexicographically ordered.
std::vector<Tuple> box_tuples(int n, int lo, int hi);

}  // namespace cbasis
