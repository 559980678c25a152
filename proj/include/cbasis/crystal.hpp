#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cbasis/orders.hpp"
#include "cbasis/tensor.hpp"

namespace cbasis {

/// Cancels every e that has an f somewhere to its right (e..f pairs, dots in between
/// allowed) until all surviving f's lie left of all surviving e's.
Signature reduce_signature(const Signature& sig);

/// f~_i / e~_i on B (type C) or on B with signs sigma (type A); nullopt is the empty
/// outcome.
std::optional<Tuple> crystal_op(const Tuple& b, int i, GenKind kind, const Space& space);
inline std::optional<Tuple> crystal_f(const Tuple& b, int i, const Space& space = Space::c()) {
  return crystal_op(b, i, GenKind::f, space);
}
inline std::optional<Tuple> crystal_e(const Tuple& b, int i, const Space& space = Space::c()) {
  return crystal_op(b, i, GenKind::e, space);
}

struct CrystalStep {
  GenKind kind;
  int i;
  friend bool operator==(const CrystalStep&, const CrystalStep&) = default;
};
using CrystalWord = std::vector<CrystalStep>;

std::string to_string(const CrystalStep& step);  // "f0", "e1"
std::string to_string(const CrystalWord& word);  // "f0 f0 f1 e0" in application order

/// Applies the steps in order; nullopt as soon as one of them is empty.
std::optional<Tuple> apply_word(const Tuple& b, const CrystalWord& word, const Space& space = Space::c());

/// The type C word x~_t ... x~_1 x~_{t+1} ... x~_n read off an antidominant b, with t
/// the last slot holding a negative entry. x~_r is f~_0 f~_1 ... f~_{b_r - 1} when
/// b_r >= 0 and e~_1 ... e~_{-b_r} otherwise. Returned in application order.
CrystalWord proof_word(const Tuple& b);

struct Connection {
  CrystalWord word;  ///< application order; applying it to z = (0,...,0) yields b
  bool from_proof;   ///< false when the word came from the box search fallback
};

/// A certified crystal path from z to the antidominant b. The proof word is tried first;
/// when it does not land on b a breadth-first search inside a box around b and z is
/// used. The returned word is always re-applied and checked. Throws for non-antidominant
/// b, and std::runtime_error if no path is found in the box.
Connection connect_to_z(const Tuple& b);

/// b lies in the connected component of z (type C), i.e. b is antidominant.
bool component_membership(const Tuple& b);
/// The module L(b) is prinjective, which also amounts to antidominance.
bool is_prinjective(const Tuple& b);

/// z_k = (1-k, ..., 1-k) of length n.
Tuple z_k(int n, int k);
Weight z_k_weight(int n, int k);

struct ComponentReport {
  int n = 0;
  int lo = 0;
  int hi = 0;
  /// Every tuple reached from z without leaving [lo,hi]^n, with its outgoing edges that
  /// stay in the box, keyed by operator name ("f0", "e2", ...).
  std::map<Tuple, std::map<std::string, Tuple>> adjacency;
  /// Antidominant tuples of the box that the bounded search did not reach.
  std::vector<Tuple> unreached_antidominant;
  /// Reached tuples that are not antidominant (always empty for a correct crystal).
  std::vector<Tuple> reached_not_antidominant;
};

/// Bounded breadth-first exploration of the type C component of z inside [lo,hi]^n.
ComponentReport explore_component(int n, int lo, int hi);

std::string component_dot(const ComponentReport& report);

}  // namespace cbasis
