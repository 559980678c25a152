#include "acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "cbasis/canonical.hpp"
#include "cbasis/crystal.hpp"
#include "cbasis/orders.hpp"

namespace cbasis::acceptance {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::size_t checked = 0;

  void fail(const std::string& what) {
    if (passed) detail << what;
    passed = false;
  }
};

using Check = std::function<void(Outcome&)>;

std::vector<SignVector> all_signs(int n) {
  std::vector<SignVector> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SignVector s;
    for (int r = 0; r < n; ++r) s.push_back((mask >> r) & 1 ? Sign::minus : Sign::plus);
    out.push_back(s);
  }
  return out;
}

std::vector<Tuple> boxes_up_to(int max_n, int lo, int hi) {
  std::vector<Tuple> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& t : box_tuples(n, lo, hi)) out.push_back(std::move(t));
  return out;
}

TensorVec two_slot(std::initializer_list<std::pair<Tuple, LaurentPoly>> terms) {
  TensorVec v(Space::c(), 2);
  for (const auto& [b, p] : terms) v.add_term(b, p);
  return v;
}

/// The n = 2 canonical basis, family by family.
TensorVec expected_pair(int i, int j) {
  const LaurentPoly q = LaurentPoly::q(), q2 = LaurentPoly::q(2);
  if (i + j != 1) {
    if (i >= j) return two_slot({{{i, j}, 1}});
    return two_slot({{{i, j}, 1}, {{j, i}, q}});
  }
  if (i > 0) return two_slot({{{i, 1 - i}, 1}, {{1 + i, -i}, q}});
  if (i < 0) return two_slot({{{i, 1 - i}, 1}, {{i + 1, -i}, q}, {{-i, i + 1}, q}, {{1 - i, i}, q2}});
  return two_slot({{{0, 1}, 1}, {{1, 0}, q2}});
}

void criterion_table(Outcome& o) {
  CanonicalBasis engine;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      const TensorVec& got = engine.canonical({i, j}, Space::c()).vector;
      const TensorVec want = expected_pair(i, j);
      ++o.checked;
      if (got != want) o.fail("(" + std::to_string(i) + "," + std::to_string(j) + "): got " + got.to_string());
    }
  o.detail << o.checked << " tuples";
}

void criterion_negative_n6(Outcome& o) {
  CanonicalBasis engine;
  const struct {
    Tuple a, b;
    const char* want;
  } cases[] = {{{1, 1, 0, 1, 0, 0}, {-1, 2, -1, 2, -1, 2}, "q^7 + 4*q^5 + 3*q^3 - q"},
               {{1, -1, 2, -1, 2, 0}, {-1, -2, 3, -2, 3, 2}, "8*q^3 - q"}};
  for (const auto& c : cases) {
    const LaurentPoly d = engine.canonical(c.b, Space::c()).vector.coefficient(c.a);
    ++o.checked;
    if (d != parse_laurent(c.want)) o.fail("d_{" + to_string(c.a) + "} = " + d.to_string() + "; ");
    else o.detail << "d = " << d.to_string() << "; ";
  }
}

void criterion_bar(Outcome& o) {
  CanonicalBasis engine;
  for (const Tuple& b : boxes_up_to(3, -2, 2)) {
    ++o.checked;
    const auto coeffs = engine.express_in_rough(engine.canonical(b, Space::c()).vector);
    for (const auto& [a, u] : coeffs)
      if (!is_bar_symmetric(u)) o.fail("(" + to_string(b) + ") coordinate at (" + to_string(a) + ") = " + u.to_string());
  }
  o.detail << o.checked << " vectors certified";
}

void criterion_ckw(Outcome& o) {
  CanonicalBasis engine;
  std::vector<Tuple> tuples = boxes_up_to(2, -3, 3);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int k = 0; k < 50; ++k) tuples.push_back({entry(rng), entry(rng), entry(rng)});
  for (const Tuple& b : tuples) {
    ++o.checked;
    const CkwComparison c = engine.compare_ckw(b);
    if (!c.equal) o.fail("(" + to_string(b) + "): " + c.lhs.to_string() + " vs " + c.rhs.to_string());
  }
  o.detail << o.checked << " tuples";
}

bool oracle_leq(const Tuple& a, const Tuple& b, const Space& space) {
  return inverse_dominance_leq(wt(a, space), wt(b, space));
}

void criterion_orders(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Tuple> box = box_tuples(n, -2, 2);
    std::vector<Space> spaces{Space::c()};
    for (auto& s : all_signs(n)) spaces.push_back(Space::a(s));
    for (const Space& space : spaces)
      for (const Tuple& a : box)
        for (const Tuple& b : box) {
          ++o.checked;
          if (bruhat_leq(a, b, space) != oracle_leq(a, b, space))
            o.fail(space.to_string() + " (" + to_string(a) + ") vs (" + to_string(b) + ")");
        }
  }
  o.detail << o.checked << " pairs";
}

void criterion_prime(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Tuple> box = box_tuples(n, -2, 2);
    for (const SignVector& sigma : all_signs(n)) {
      std::vector<Tuple> part;
      for (const Tuple& b : box)
        if (in_Bsigma(b, sigma)) part.push_back(b);
      for (const Tuple& a : part)
        for (const Tuple& b : part) {
          ++o.checked;
          if (bruhat_leq(a, b, Space::c()) != bruhat_leq(prime_map(a), prime_map(b), Space::a(sigma)))
            o.fail("(" + to_string(a) + ") vs (" + to_string(b) + ")");
        }
    }
  }
  o.detail << o.checked << " pairs";
}

void criterion_crystal(Outcome& o) {
  const Tuple b{2, -1, -1, 4, -2, -2, 3, 2, -2};
  if (crystal_f(b, 2) != Tuple{2, -1, -1, 4, -2, -2, 3, 2, -1}) o.fail("f~_2 mismatch; ");
  if (crystal_e(b, 2).has_value()) o.fail("e~_2 should be empty; ");

  std::size_t from_proof = 0, certified = 0;
  for (const Tuple& t : box_tuples(3, -2, 2)) {
    ++o.checked;
    if (!is_antidominant(t)) continue;
    try {
      const Connection c = connect_to_z(t);
      if (apply_word(Tuple(3, 0), c.word) != t) o.fail("uncertified word for (" + to_string(t) + "); ");
      ++certified;
      from_proof += c.from_proof;
    } catch (const std::exception& e) {
      o.fail("(" + to_string(t) + "): " + e.what() + "; ");
    }
  }
  // Nothing outside the antidominant tuples is reachable: the operators preserve
  // antidominance, and a bounded search from z stays among antidominant tuples.
  for (const Tuple& t : box_tuples(3, -3, 3)) {
    if (!is_antidominant(t)) continue;
    for (int i = 0; i <= 4; ++i)
      for (GenKind kind : {GenKind::f, GenKind::e}) {
        auto next = crystal_op(t, i, kind, Space::c());
        if (next && !is_antidominant(*next)) o.fail("(" + to_string(t) + ") leaves antidominance; ");
      }
  }
  const ComponentReport report = explore_component(3, -2, 2);
  if (!report.reached_not_antidominant.empty()) o.fail("bounded search reached a non-antidominant tuple; ");
  o.detail << certified << " antidominant tuples connected (" << from_proof << " by the proof word), "
           << report.adjacency.size() << " reached in box";
}

void criterion_positivity(Outcome& o) {
  CanonicalBasis engine;
  for (int n = 1; n <= 3; ++n)
    for (const SignVector& sigma : all_signs(n))
      for (const Tuple& b : box_tuples(n, 1, 4)) {
        ++o.checked;
        const TensorVec& v = engine.canonical(b, Space::a(sigma)).vector;
        for (const auto& [a, p] : v.terms())
          for (const auto& [e, c] : p.terms())
            if (c < 0) o.fail(to_string(sigma) + " (" + to_string(b) + ") at (" + to_string(a) + "): " + p.to_string());
      }
  o.detail << o.checked << " vectors";
}

void criterion_construction(Outcome& o) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> length(1, 5), entry(-5, 5);
  for (int k = 0; k < 500; ++k) {
    Tuple b(length(rng));
    for (int& x : b) x = entry(rng);
    ++o.checked;
    const DominantConstruction d = construct_dominant(b);
    if (!is_strictly_dominant(d.a) || !is_typical(d.a)) {
      o.fail("(" + to_string(b) + "): a = (" + to_string(d.a) + ") not dominant typical; ");
      continue;
    }
    const TensorVec v = apply_f_word_classical(TensorVec::monomial(Space::c(), d.a), d.word);
    if (!v.coefficient(b).is_one()) o.fail("(" + to_string(b) + "): coefficient at b is not 1; ");
    for (const auto& [t, p] : v.terms())
      if (t != b && !bruhat_less(b, t, Space::c()))
        o.fail("(" + to_string(b) + "): term (" + to_string(t) + ") not above b; ");
  }
  o.detail << o.checked << " random tuples";
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out) {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"n=2 canonical basis table", criterion_table},
      {"negative coefficients at n=6", criterion_negative_n6},
      {"bar-invariance certificate", criterion_bar},
      {"sigma projection identity", criterion_ckw},
      {"Bruhat order vs inverse dominance", criterion_orders},
      {"prime map poset isomorphism", criterion_prime},
      {"crystal golden test and connectivity", criterion_crystal},
      {"type A positivity", criterion_positivity},
      {"dominant typical construction", criterion_construction},
  };
  std::vector<CriterionResult> results;
  int id = 0;
  for (const auto& [title, check] : criteria) {
    ++id;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CriterionResult r{id, title, o.passed, o.detail.str(), secs};
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    out << (r.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << timing << "] " << r.detail
        << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace cbasis::acceptance
