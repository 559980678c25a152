#include "cbasis/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace cbasis {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
thread_local std::size_t t_depth = 0;

void check_deadline() {
  if (t_deadline && std::chrono::steady_clock::now() > *t_deadline)
    throw GuardError(GuardError::Kind::time, "time budget exhausted");
}

struct DepthScope {
  explicit DepthScope(std::size_t limit) {
    if (++t_depth > limit) {
      --t_depth;
      throw GuardError(GuardError::Kind::depth, "recursion depth guard exceeded (" + std::to_string(limit) + ")");
    }
  }
  ~DepthScope() { --t_depth; }
  DepthScope(const DepthScope&) = delete;
  DepthScope& operator=(const DepthScope&) = delete;
};

std::size_t parse_positive_env(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

Space prefix_space(const Space& space) {
  if (space.is_c()) return space;
  return Space::a(SignVector(space.sigma.begin(), space.sigma.end() - 1));
}

void validate(const Tuple& b, const Space& space) {
  if (b.empty()) throw std::invalid_argument("tuple must be nonempty");
  if (!space.is_c() && space.sigma.size() != b.size())
    throw std::invalid_argument("sign vector length differs from tuple length");
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  l.support_guard = parse_positive_env("CBASIS_SUPPORT_GUARD", l.support_guard);
  l.depth_guard = parse_positive_env("CBASIS_DEPTH_GUARD", l.depth_guard);
  return l;
}

CanonicalBasis::DeadlineScope::DeadlineScope(std::chrono::steady_clock::duration budget) : previous_(t_deadline) {
  t_deadline = std::chrono::steady_clock::now() + budget;
}

CanonicalBasis::DeadlineScope::~DeadlineScope() { t_deadline = previous_; }

// ---------------------------------------------------------------------------

DominantConstruction construct_dominant(const Tuple& b) {
  if (b.empty()) throw std::invalid_argument("tuple must be nonempty");
  DominantConstruction out;
  out.a.push_back(b[0]);
  for (std::size_t s = 1; s < b.size(); ++s) {
    int as = b[s];
    for (std::size_t r = 0; r < s; ++r) as = std::min({as, out.a[r] - 1, -b[r]});
    out.a.push_back(as);
    for (int m = as; m < b[s]; ++m) out.word.push_back(std::abs(m));
  }
  return out;
}

TensorVec apply_f_word_classical(TensorVec v, std::span<const int> word) {
  for (int i : word) v = chevalley_classical(v, i, GenKind::f);
  return v;
}

Tuple bruhat_minimal(std::span<const Tuple> candidates, const Space& space) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  std::vector<std::pair<long long, const Tuple*>> order;
  order.reserve(candidates.size());
  for (const auto& t : candidates) order.emplace_back(bruhat_height(t, space), &t);
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return x.first != y.first ? x.first < y.first : *x.second < *y.second; });
  const Tuple* best = nullptr;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Tuple& x = *order[k].second;
    if (best != nullptr && !(x < *best)) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < k && order[j].first < order[k].first; ++j) {
      if (bruhat_less(*order[j].second, x, space)) {
        minimal = false;
        break;
      }
    }
    if (minimal) best = &x;
  }
  return *best;
}

// ---------------------------------------------------------------------------

CanonicalBasis::CanonicalBasis(Limits limits) : limits_(limits) {
  if (limits_.support_guard == 0 || limits_.depth_guard == 0) throw std::invalid_argument("guards must be positive");
}

std::size_t CanonicalBasis::memo_size() const {
  std::shared_lock lock(mutex_);
  return canonical_memo_.size();
}

void CanonicalBasis::check_support(const TensorVec& v, const Tuple& b) const {
  if (v.size() > limits_.support_guard)
    throw GuardError(GuardError::Kind::support, "support guard exceeded (" + std::to_string(limits_.support_guard) +
                                                    " terms) while computing b = (" + to_string(b) + ")");
}

const TensorVec& CanonicalBasis::rough_invariant(const Tuple& b, const Space& space) {
  validate(b, space);
  Key key{space, b};
  {
    std::shared_lock lock(mutex_);
    if (auto it = rough_memo_.find(key); it != rough_memo_.end()) return *it->second;
  }
  auto value = std::make_shared<const TensorVec>(compute_rough(b, space));
  std::unique_lock lock(mutex_);
  return *rough_memo_.emplace(std::move(key), std::move(value)).first->second;
}

TensorVec CanonicalBasis::compute_rough(const Tuple& b, const Space& space) {
  const int n = static_cast<int>(b.size());
  if (n == 1) return TensorVec::monomial(space, b);

  const Tuple prefix(b.begin(), b.end() - 1);
  const TensorVec& head = canonical(prefix, prefix_space(space)).vector;
  const int last = b.back();

  // j is extreme enough that every f occurring in the quasi-R-matrix correction of
  // head (x) v_j kills head.
  int j = last;
  bool descending = false;
  if (space.is_c()) {
    for (const auto& [a, p] : head.terms())
      for (int x : a) j = std::min(j, -std::abs(x));
  } else if (space.sigma.back() == Sign::plus) {
    for (const auto& [a, p] : head.terms())
      for (int r = 0; r + 1 < n; ++r) j = std::min(j, space.sigma[r] == Sign::plus ? a[r] : a[r] - 1);
  } else {
    descending = true;
    for (const auto& [a, p] : head.terms())
      for (int r = 0; r + 1 < n; ++r) j = std::max(j, space.sigma[r] == Sign::plus ? a[r] + 1 : a[r]);
  }

  TensorVec v(space, n);
  for (const auto& [a, p] : head.terms()) {
    Tuple t = a;
    t.push_back(j);
    v.add_term(t, p);
  }
  auto apply = [&](int i) {
    check_deadline();
    v = chevalley_quantum(v, i, GenKind::f);
    check_support(v, b);
  };
  if (space.is_c()) {
    for (int m = j; m < last; ++m) apply(std::abs(m));
  } else if (!descending) {
    for (int m = j; m < last; ++m) apply(m);
  } else {
    for (int m = j - 1; m >= last; --m) apply(m);
  }

  if (!v.coefficient(b).is_one())
    throw InvariantError("rough vector for (" + to_string(b) + ") does not have leading coefficient 1");
  for (const auto& [a, p] : v.terms())
    if (a != b && !bruhat_less(b, a, space))
      throw InvariantError("rough vector for (" + to_string(b) + ") has a term (" + to_string(a) +
                           ") that is not strictly higher");
  return v;
}

const CanonicalEntry& CanonicalBasis::canonical(const Tuple& b, const Space& space) {
  validate(b, space);
  Key key{space, b};
  {
    std::shared_lock lock(mutex_);
    if (auto it = canonical_memo_.find(key); it != canonical_memo_.end()) return *it->second;
  }
  auto entry = compute_canonical(b, space);
  std::unique_lock lock(mutex_);
  return *canonical_memo_.emplace(std::move(key), std::move(entry)).first->second;
}

std::shared_ptr<const CanonicalEntry> CanonicalBasis::compute_canonical(const Tuple& b, const Space& space) {
  DepthScope depth(limits_.depth_guard);
  const TensorVec& rough = rough_invariant(b, space);
  TensorVec vec = rough;
  std::size_t steps = 0;
  std::vector<Tuple> offenders;
  while (true) {
    offenders.clear();
    for (const auto& [a, p] : vec.terms())
      if (a != b && !in_qZq(p)) offenders.push_back(a);
    if (offenders.empty()) break;
    if (++steps > limits_.depth_guard)
      throw GuardError(GuardError::Kind::depth, "straightening of (" + to_string(b) + ") exceeded " +
                                                    std::to_string(limits_.depth_guard) + " steps");
    check_deadline();

    const Tuple a = bruhat_minimal(offenders, space);
    if (!bruhat_less(b, a, space))
      throw InvariantError("offending term (" + to_string(a) + ") is not above (" + to_string(b) + ")");
    const LaurentPoly correction = bar_symmetric_correction(vec.coefficient(a));
    const CanonicalEntry& higher = canonical(a, space);
    vec.add_scaled(higher.vector, -correction);
    if (!in_qZq(vec.coefficient(a)))
      throw InvariantError("straightening at (" + to_string(a) + ") did not clear the offending coefficient");
    check_support(vec, b);
  }

  if (!vec.coefficient(b).is_one())
    throw InvariantError("canonical vector for (" + to_string(b) + ") lost its leading coefficient");
  for (const auto& [a, p] : vec.terms())
    if (a != b && !bruhat_less(b, a, space))
      throw InvariantError("canonical vector for (" + to_string(b) + ") has a term (" + to_string(a) +
                           ") that is not strictly higher");

  auto entry = std::make_shared<CanonicalEntry>(CanonicalEntry{b, space, std::move(vec), rough, steps});
  return entry;
}

RoughExpansion CanonicalBasis::eliminate_in_rough(const TensorVec& v, std::size_t max_steps) {
  RoughExpansion out;
  TensorVec rem = v;
  std::size_t steps = 0;
  const Space& space = v.space();
  while (!rem.empty()) {
    if (steps == max_steps) {
      out.remainder = std::move(rem);
      return out;
    }
    check_deadline();
    // Least height is Bruhat-minimal; any minimal choice gives the same coefficients.
    const Tuple* pick = nullptr;
    long long best = 0;
    for (const auto& [a, p] : rem.terms()) {
      const long long h = bruhat_height(a, space);
      if (pick == nullptr || h < best) {
        pick = &a;
        best = h;
      }
    }
    const Tuple m = *pick;
    const LaurentPoly u = rem.coefficient(m);
    out.coeffs[m] += u;
    rem.add_scaled(rough_invariant(m, space), -u);
    if (rem.contains(m)) throw InvariantError("rough elimination did not clear (" + to_string(m) + ")");
    check_support(rem, m);
    ++steps;
  }
  return out;
}

std::map<Tuple, LaurentPoly> CanonicalBasis::express_in_rough(const TensorVec& v) {
  RoughExpansion e = eliminate_in_rough(v, limits_.depth_guard);
  if (!e.complete())
    throw GuardError(GuardError::Kind::depth,
                     "rough expansion did not terminate within " + std::to_string(limits_.depth_guard) + " steps");
  return std::move(e.coeffs);
}

bool CanonicalBasis::certify_bar_invariant(const TensorVec& v) {
  const auto coeffs = express_in_rough(v);
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return is_bar_symmetric(kv.second); });
}

CkwComparison CanonicalBasis::compare_ckw(const Tuple& b) {
  SignVector sigma = signs_of(b);
  TensorVec lhs = project(canonical(b, Space::c()).vector, Projection::to_sigma(sigma));
  TensorVec rhs = project(canonical(prime_map(b), Space::a(sigma)).vector, Projection::to_0());
  const bool equal = lhs == rhs;
  return {b, std::move(sigma), std::move(lhs), std::move(rhs), equal};
}

// ---------------------------------------------------------------------------

ScanReport negativity_scan(std::span<const Tuple> tuples, const ScanBudget& budget) {
  CanonicalBasis engine(Limits{budget.support_guard, budget.depth_guard});
  struct Slot {
    std::vector<NegativityHit> hits;
    std::optional<std::string> failure;
  };
  std::vector<Slot> slots(tuples.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < tuples.size(); k = next++) {
      const Tuple& b = tuples[k];
      try {
        std::optional<CanonicalBasis::DeadlineScope> deadline;
        if (budget.per_tuple.count() > 0) deadline.emplace(budget.per_tuple);
        const CanonicalEntry& entry = engine.canonical(b, Space::c());
        for (const auto& [a, p] : entry.vector.terms()) {
          const bool negative =
              std::any_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second < 0; });
          if (negative) slots[k].hits.push_back({a, b, p});
        }
      } catch (const GuardError& e) {
        slots[k].failure = e.what();
      }
    }
  };

  const unsigned threads = std::max(1u, budget.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  report.scanned = tuples.size();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    for (auto& h : slots[k].hits) report.hits.push_back(std::move(h));
    if (slots[k].failure) report.failures.push_back({tuples[k], *slots[k].failure});
  }
  return report;
}

}  // namespace cbasis
