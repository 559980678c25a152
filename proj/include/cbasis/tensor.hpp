#pragma once

#include <map>
#include <string>
#include <vector>

#include "cbasis/laurent.hpp"
#include "cbasis/orders.hpp"

namespace cbasis {

enum class Mark : char { f = 'f', e = 'e', dot = '.' };
using Signature = std::vector<Mark>;

std::string to_string(const Signature& sig);
Signature parse_signature(std::string_view text);

/// i-signature of b. Type C: f if b_t = +-i, e if b_t = 1 +- i. Type A: f if
/// (b_t, sigma_t) is (i,+) or (1+i,-), e if it is (1+i,+) or (i,-).
Signature isig(const Tuple& b, int i, const Space& space);

enum class GenKind { f, e };
const char* to_string(GenKind kind);

/// Finite Z[q,q^-1]-combination of monomial basis vectors v_b of one tensor space.
class TensorVec {
 public:
  using Terms = std::map<Tuple, LaurentPoly>;

  TensorVec(Space space, int n);
  static TensorVec monomial(Space space, Tuple b, LaurentPoly coeff = 1);

  const Space& space() const { return space_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  LaurentPoly coefficient(const Tuple& b) const;
  bool contains(const Tuple& b) const { return terms_.count(b) != 0; }

  /// Adds coeff * v_b, dropping the term if it cancels.
  void add_term(const Tuple& b, const LaurentPoly& coeff);
  /// this += scale * rhs
  void add_scaled(const TensorVec& rhs, const LaurentPoly& scale);

  TensorVec& operator+=(const TensorVec& rhs);
  TensorVec& operator-=(const TensorVec& rhs);
  friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
  friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
  friend TensorVec operator*(const LaurentPoly& scale, const TensorVec& v);
  friend bool operator==(const TensorVec&, const TensorVec&) = default;

  /// Every support tuple has the same |WT|.
  bool is_homogeneous() const;
  /// Coefficientwise bar map (not the bar involution of the tensor space).
  TensorVec bar_coefficients() const;
  /// Coefficients evaluated at q = 1, kept as constant polynomials.
  TensorVec specialize_at_one() const;

  /// "v[0,1] + q^2 v[1,0]"; terms in lexicographic tuple order.
  std::string to_string() const;

 private:
  void check_compatible(const TensorVec& rhs) const;

  Space space_;
  int n_;
  Terms terms_;
};

/// Exponent of q in the k_i-eigenvalue on the single-slot vector v_j (with sign
/// sigma_t in type A; ignored in type C).
int k_exponent(int i, int j, const Space& space, Sign slot_sign);

/// f_i / e_i acting through the classical (q = 1) monomial formulas.
TensorVec chevalley_classical(const TensorVec& v, int i, GenKind kind);
/// Quantum f_i / e_i with Delta(f) = 1 (x) f + f (x) k, Delta(e) = k^-1 (x) e + e (x) 1:
/// f on slot t picks up the k_i-eigenvalues of slots t+1..n, e on slot t the
/// k_i^-1-eigenvalues of slots 1..t-1.
TensorVec chevalley_quantum(const TensorVec& v, int i, GenKind kind);

struct Projection {
  enum class Kind { pr_k, pr_0, pr_sigma } kind;
  int k = 0;
  SignVector sigma;

  static Projection to_k(int k) { return {Kind::pr_k, k, {}}; }
  static Projection to_0() { return {Kind::pr_0, 0, {}}; }
  static Projection to_sigma(SignVector sigma) { return {Kind::pr_sigma, 0, std::move(sigma)}; }
};

/// pr_k keeps B_k (type C); pr_0 keeps B_0 (type A); pr_sigma keeps B_sigma of a type C
/// vector and relabels it by the prime map into V_0^{(x) sigma}.
TensorVec project(const TensorVec& v, const Projection& target);
/// Left inverse of project: in_k and in_0 are the identity on supports, in_sigma undoes
/// the prime map. The projection must describe the space v came from.
TensorVec include(const TensorVec& v, const Projection& source);

}  // namespace cbasis
