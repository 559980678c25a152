#pragma once

// Canonical bases of the tensor spaces V^{(x) n} (type C, sp(2 infinity)) and
// V^{(x) sigma} (type A, sl(infinity)) over Z[q, q^-1].
//
// c_b is built in two stages. First a bar-invariant "rough" vector r_b = v_b + (higher
// terms) is produced by applying a string of f's to c_{b-bar} (x) v_j, where b-bar drops
// the last entry and j is chosen so extreme that the quasi-R-matrix acts trivially on
// c_{b-bar} (x) v_j. Then r_b is straightened: while some non-leading coefficient is
// outside qZ[q], a bar-symmetric multiple of the (recursively computed) c_a for a
// Bruhat-minimal offender a is subtracted.
//
// Bar invariance is never checked through the bar involution itself (that would need the
// quasi-R-matrix). Instead, a vector is expanded in the rough vectors r_a, which are
// bar-invariant by construction, and its coordinates must all be bar-symmetric.

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbasis/laurent.hpp"
#include "cbasis/orders.hpp"
#include "cbasis/tensor.hpp"

namespace cbasis {

struct Limits {
  /// Largest support any intermediate vector may reach.
  std::size_t support_guard = 1'000'000;
  /// Largest number of straightening (or elimination) steps for one vector, and the
  /// deepest nesting of recursive canonical-basis requests.
  std::size_t depth_guard = 10'000;

  /// Defaults overridden by CBASIS_SUPPORT_GUARD / CBASIS_DEPTH_GUARD when set.
  static Limits from_environment();
};

class GuardError : public std::runtime_error {
 public:
  enum class Kind { support, depth, time };
  GuardError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A bug-level failure of an invariant the construction guarantees.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CanonicalEntry {
  Tuple b;
  Space space;
  TensorVec vector;
  TensorVec rough;
  std::size_t straightening_steps = 0;
};

/// Dominant typical a and a word of f-indices with X v_a = v_b + (strictly higher terms).
struct DominantConstruction {
  Tuple a;
  /// Letters of X = X_n ... X_2 in application order (X_2's letters first, and inside
  /// X_s the letter f_{|a_s|} first).
  std::vector<int> word;
};

DominantConstruction construct_dominant(const Tuple& b);

/// Applies f-letters in order using the classical action.
TensorVec apply_f_word_classical(TensorVec v, std::span<const int> word);

struct RoughExpansion {
  std::map<Tuple, LaurentPoly> coeffs;
  /// Part of the input not yet accounted for when elimination stopped early.
  std::optional<TensorVec> remainder;
  bool complete() const { return !remainder.has_value(); }
};

struct CkwComparison {
  Tuple b;
  SignVector sigma;
  TensorVec lhs;  ///< pr_sigma c_b
  TensorVec rhs;  ///< pr_0 c^sigma_{b'}
  bool equal;
};

/// Memoizing canonical-basis engine. Safe for concurrent use; concurrent requests for
/// the same vector may duplicate work but all callers observe one stored value.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(Limits limits = {});

  const Limits& limits() const { return limits_; }

  const CanonicalEntry& canonical(const Tuple& b, const Space& space);
  const TensorVec& rough_invariant(const Tuple& b, const Space& space);

  /// Coefficients u_a with v = sum u_a r_a. Throws GuardError if the elimination does
  /// not finish within the depth guard.
  std::map<Tuple, LaurentPoly> express_in_rough(const TensorVec& v);
  /// Runs at most max_steps elimination steps and reports any remainder.
  RoughExpansion eliminate_in_rough(const TensorVec& v, std::size_t max_steps);

  /// True when all coordinates of v in the rough basis are bar-symmetric.
  bool certify_bar_invariant(const TensorVec& v);

  CkwComparison compare_ckw(const Tuple& b);
  bool verify_ckw(const Tuple& b) { return compare_ckw(b).equal; }

  std::size_t memo_size() const;

  /// Per-thread wall-clock budget for subsequent computations; cleared on destruction.
  class DeadlineScope {
   public:
    explicit DeadlineScope(std::chrono::steady_clock::duration budget);
    ~DeadlineScope();
    DeadlineScope(const DeadlineScope&) = delete;
    DeadlineScope& operator=(const DeadlineScope&) = delete;

   private:
    std::optional<std::chrono::steady_clock::time_point> previous_;
  };

 private:
  struct Key {
    Space space;
    Tuple b;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  std::shared_ptr<const CanonicalEntry> compute_canonical(const Tuple& b, const Space& space);
  TensorVec compute_rough(const Tuple& b, const Space& space);
  void check_support(const TensorVec& v, const Tuple& b) const;

  Limits limits_;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const CanonicalEntry>> canonical_memo_;
  std::map<Key, std::shared_ptr<const TensorVec>> rough_memo_;
};

/// Picks the Bruhat-minimal tuple of a candidate set, lexicographically smallest among
/// the minimal ones.
Tuple bruhat_minimal(std::span<const Tuple> candidates, const Space& space);

struct NegativityHit {
  Tuple a;
  Tuple b;
  LaurentPoly d;
};

struct ScanBudget {
  std::size_t support_guard = 1'000'000;
  std::size_t depth_guard = 10'000;
  /// Wall-clock budget per tuple; zero means unlimited.
  std::chrono::milliseconds per_tuple{0};
  unsigned threads = 1;
};

struct ScanFailure {
  Tuple b;
  std::string reason;
};

struct ScanReport {
  std::vector<NegativityHit> hits;
  std::vector<ScanFailure> failures;
  std::size_t scanned = 0;
};

/// Computes type C c_b for every listed b and reports coefficients d_{a,b} with a
/// negative integer coefficient. Guard exhaustion is reported per tuple.
ScanReport negativity_scan(std::span<const Tuple> tuples, const ScanBudget& budget);

}  // namespace cbasis
