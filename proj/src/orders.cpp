#include "cbasis/orders.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cbasis {

SignVector parse_signs(std::string_view text) {
  SignVector sigma;
  for (char ch : text) {
    if (ch == '+')
      sigma.push_back(Sign::plus);
    else if (ch == '-')
      sigma.push_back(Sign::minus);
    else
      throw std::invalid_argument("sign string may only contain '+' and '-': " + std::string(text));
  }
  return sigma;
}

std::string to_string(const SignVector& sigma) {
  std::string s;
  for (Sign x : sigma) s += x == Sign::plus ? '+' : '-';
  return s;
}

SignVector signs_of(const Tuple& b) {
  SignVector sigma;
  sigma.reserve(b.size());
  for (int x : b) sigma.push_back(x > 0 ? Sign::plus : Sign::minus);
  return sigma;
}

Tuple parse_tuple(std::string_view text) {
  Tuple b;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed tuple entry '" + std::string(item) + "' in '" + std::string(text) + "'");
    b.push_back(v);
    pos = comma + 1;
  }
  return b;
}

std::string to_string(const Tuple& b) {
  std::string s;
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(b[r]);
  }
  return s;
}

Tuple unit_tuple(int n, int r) {
  Tuple d(n, 0);
  d.at(r - 1) = 1;
  return d;
}

std::string Space::to_string() const {
  return is_c() ? std::string("typeC") : "typeA(" + cbasis::to_string(sigma) + ")";
}

// ---------------------------------------------------------------------------
// Weights

Weight Weight::epsilon(Family family, int i, int coeff) {
  Weight w(family);
  if (family == Family::typeC && i < 0) throw std::invalid_argument("type C weight index must be >= 0");
  if (coeff != 0) w.coeffs_[i] = coeff;
  return w;
}

int Weight::coefficient(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? 0 : it->second;
}

void Weight::check_family(const Weight& rhs) const {
  if (family_ != rhs.family_) throw std::invalid_argument("weights from different lattices");
}

Weight& Weight::operator+=(const Weight& rhs) {
  check_family(rhs);
  for (const auto& [i, c] : rhs.coeffs_) {
    int& slot = coeffs_[i];
    slot += c;
    if (slot == 0) coeffs_.erase(i);
  }
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) { return *this += -rhs; }

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& [i, c] : w.coeffs_) c = -c;
  return w;
}

std::string Weight::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (std::abs(c) != 1) out << std::abs(c) << "*";
    out << "eps" << it->first;
  }
  return out.str();
}

Weight simple_root(Family family, int i) {
  if (family == Family::typeC) {
    if (i < 0) throw std::invalid_argument("type C simple roots are indexed by naturals");
    if (i == 0) return Weight::epsilon(family, 0, -2);
    return Weight::epsilon(family, i - 1) - Weight::epsilon(family, i);
  }
  return Weight::epsilon(family, i) - Weight::epsilon(family, i + 1);
}

std::optional<std::map<int, long long>> simple_root_expansion(const Weight& lambda) {
  std::map<int, long long> m;
  const auto& c = lambda.coeffs();
  if (c.empty()) return m;
  if (lambda.family() == Family::typeC) {
    // Coefficient of eps_0 is -2 m_0 + m_1, of eps_i (i >= 1) is m_{i+1} - m_i.
    long long tail = 0;
    const int top = c.rbegin()->first;
    for (int i = top; i >= 1; --i) {
      tail += lambda.coefficient(i);
      if (tail != 0) m[i] = -tail;
    }
    const long long all = tail + lambda.coefficient(0);
    if (all % 2 != 0) return std::nullopt;
    if (all != 0) m[0] = -all / 2;
    return m;
  }
  // Coefficient of eps_i is m_i - m_{i-1}.
  long long running = 0;
  const int lo = c.begin()->first;
  const int hi = c.rbegin()->first;
  for (int i = lo; i <= hi; ++i) {
    running += lambda.coefficient(i);
    if (running != 0 && i < hi) m[i] = running;
  }
  if (running != 0) return std::nullopt;
  return m;
}

bool dominates(const Weight& lambda, const Weight& mu) {
  auto m = simple_root_expansion(lambda - mu);
  if (!m) return false;
  return std::all_of(m->begin(), m->end(), [](const auto& kv) { return kv.second >= 0; });
}

std::vector<Weight> wt_c(const Tuple& b) {
  std::vector<Weight> out;
  out.reserve(b.size());
  for (int x : b)
    out.push_back(x > 0 ? Weight::epsilon(Family::typeC, x - 1) : Weight::epsilon(Family::typeC, -x, -1));
  return out;
}

std::vector<Weight> wt_a(const Tuple& b, const SignVector& sigma) {
  if (sigma.size() != b.size()) throw std::invalid_argument("sign vector length differs from tuple length");
  std::vector<Weight> out;
  out.reserve(b.size());
  for (std::size_t r = 0; r < b.size(); ++r) out.push_back(Weight::epsilon(Family::typeA, b[r], value(sigma[r])));
  return out;
}

std::vector<Weight> wt(const Tuple& b, const Space& space) {
  return space.is_c() ? wt_c(b) : wt_a(b, space.sigma);
}

Weight total(std::span<const Weight> weights) {
  if (weights.empty()) return Weight();
  Weight sum(weights.front().family());
  for (const auto& w : weights) sum += w;
  return sum;
}

Weight total_weight(const Tuple& b, const Space& space) {
  auto w = wt(b, space);
  return total(w);
}

bool inverse_dominance_leq(std::span<const Weight> beta, std::span<const Weight> gamma) {
  if (beta.size() != gamma.size()) throw std::invalid_argument("weight sequences differ in length");
  if (beta.empty()) return true;
  const Family family = beta.front().family();
  for (const auto& w : beta)
    if (w.family() != family) throw std::invalid_argument("mixed weight lattices");
  for (const auto& w : gamma)
    if (w.family() != family) throw std::invalid_argument("mixed weight lattices");
  Weight pb(family), pg(family);
  for (std::size_t s = 0; s < beta.size(); ++s) {
    pb += beta[s];
    pg += gamma[s];
    if (!dominates(pb, pg)) return false;
  }
  return pb == pg;
}

// ---------------------------------------------------------------------------
// N-statistics and Bruhat orders

int n_stat_c(const Tuple& b, int i, int s) {
  int count = 0;
  for (int r = 0; r < s; ++r) {
    if (b[r] > i) ++count;
    if (b[r] <= -i) --count;
  }
  return count;
}

int n_stat_a(const Tuple& b, const SignVector& sigma, int i, int s) {
  int count = 0;
  for (int r = 0; r < s; ++r)
    if (b[r] > i) count += value(sigma[r]);
  return count;
}

namespace {

void check_lengths(const Tuple& a, const Tuple& b, const Space& space) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("tuples must be nonempty and of equal length");
  if (!space.is_c() && space.sigma.size() != a.size())
    throw std::invalid_argument("sign vector length differs from tuple length");
}

/// Range of i outside which every N-statistic of a and b is constant and equal.
std::pair<int, int> relevant_indices(const Tuple& a, const Tuple& b, const Space& space) {
  int lo = 0, hi = 0;
  if (space.is_c()) {
    for (int x : a) hi = std::max(hi, std::abs(x));
    for (int x : b) hi = std::max(hi, std::abs(x));
    return {0, hi};
  }
  lo = hi = a[0];
  for (const Tuple* t : {&a, &b})
    for (int x : *t) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  return {lo - 1, hi};
}

/// First failing condition of a <= b, or nullopt when a <= b.
std::optional<NStatCheck> first_violation(const Tuple& a, const Tuple& b, const Space& space) {
  const int n = static_cast<int>(a.size());
  const auto [ilo, ihi] = relevant_indices(a, b, space);
  auto stat = [&](const Tuple& t, int i, int s) {
    return space.is_c() ? n_stat_c(t, i, s) : n_stat_a(t, space.sigma, i, s);
  };
  for (int s = 1; s <= n; ++s) {
    if (space.is_c() && s < n) {
      const int na = stat(a, 0, s), nb = stat(b, 0, s);
      if ((na - nb) % 2 != 0) return NStatCheck{NStatCheck::Kind::parity, s, 0, na, nb, false};
    }
    for (int i = ilo; i <= ihi; ++i) {
      const int na = stat(a, i, s), nb = stat(b, i, s);
      if (s < n && na > nb) return NStatCheck{NStatCheck::Kind::inequality, s, i, na, nb, false};
      if (s == n && na != nb) return NStatCheck{NStatCheck::Kind::equality, s, i, na, nb, false};
    }
  }
  return std::nullopt;
}

}  // namespace

bool bruhat_leq(const Tuple& a, const Tuple& b, const Space& space) {
  check_lengths(a, b, space);
  return !first_violation(a, b, space).has_value();
}

bool bruhat_less(const Tuple& a, const Tuple& b, const Space& space) { return a != b && bruhat_leq(a, b, space); }

const char* to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::less: return "less";
    case Relation::greater: return "greater";
    case Relation::incomparable: return "incomparable";
  }
  return "incomparable";
}

BruhatReport bruhat_compare(const Tuple& a, const Tuple& b, const Space& space) {
  check_lengths(a, b, space);
  BruhatReport report{Relation::incomparable, first_violation(a, b, space), first_violation(b, a, space)};
  if (a == b)
    report.relation = Relation::equal;
  else if (!report.violation_leq)
    report.relation = Relation::less;
  else if (!report.violation_geq)
    report.relation = Relation::greater;
  return report;
}

long long bruhat_height(const Tuple& b, const Space& space) {
  // Closed form of sum_{s<n} sum_i N_[1,s](b, i); for type A the sum over i is taken
  // from a common lower cutoff, which only shifts every height by the same constant.
  const long long n = static_cast<long long>(b.size());
  long long h = 0;
  for (long long r = 0; r + 1 < n; ++r) {
    const long long weight = n - 1 - r;
    if (space.is_c())
      h += weight * (b[r] > 0 ? b[r] : b[r] - 1);
    else
      h += weight * value(space.sigma[r]) * b[r];
  }
  return h;
}

Tuple prime_map(const Tuple& b) {
  Tuple out(b);
  for (int& x : out)
    if (x <= 0) x = 1 - x;
  return out;
}

Tuple prime_inverse(const Tuple& b0, const SignVector& sigma) {
  if (sigma.size() != b0.size()) throw std::invalid_argument("sign vector length differs from tuple length");
  Tuple out(b0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (out[r] <= 0) throw std::invalid_argument("prime_inverse expects a tuple with positive entries");
    if (sigma[r] == Sign::minus) out[r] = 1 - out[r];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Index sets

bool in_B0(const Tuple& b) {
  return std::all_of(b.begin(), b.end(), [](int x) { return x > 0; });
}

bool in_Bk(const Tuple& b, int k) {
  return std::all_of(b.begin(), b.end(), [k](int x) { return -k < x && x <= k; });
}

bool in_Bsigma(const Tuple& b, const SignVector& sigma) {
  if (sigma.size() != b.size()) throw std::invalid_argument("sign vector length differs from tuple length");
  for (std::size_t r = 0; r < b.size(); ++r)
    if ((b[r] > 0) != (sigma[r] == Sign::plus)) return false;
  return true;
}

namespace {

/// Prefix-bound conditions shared by B_{<=k} and B_{<=sigma}: N_[1,s](b, i) <= bound(s)
/// for s < n, equality at s = n. strict_somewhere additionally requires some s < bound.
bool prefix_bounded(const Tuple& b, int i, const std::vector<int>& bound, bool strict_somewhere) {
  const int n = static_cast<int>(b.size());
  bool some_strict = false;
  for (int s = 1; s <= n; ++s) {
    const int v = n_stat_c(b, i, s);
    if (s < n && v > bound[s - 1]) return false;
    if (s == n && v != bound[s - 1]) return false;
    if (v < bound[s - 1]) some_strict = true;
  }
  return !strict_somewhere || some_strict;
}

std::vector<int> sigma_partial_sums(const SignVector& sigma) {
  std::vector<int> sums;
  int acc = 0;
  for (Sign s : sigma) sums.push_back(acc += value(s));
  return sums;
}

}  // namespace

bool in_B_leq_k(const Tuple& b, int k) { return prefix_bounded(b, k, std::vector<int>(b.size(), 0), false); }

bool in_B_lt_k(const Tuple& b, int k) { return prefix_bounded(b, k, std::vector<int>(b.size(), 0), true); }

bool in_B_leq_sigma(const Tuple& b, const SignVector& sigma) {
  if (sigma.size() != b.size()) throw std::invalid_argument("sign vector length differs from tuple length");
  return prefix_bounded(b, 0, sigma_partial_sums(sigma), false);
}

bool in_B_lt_sigma(const Tuple& b, const SignVector& sigma) {
  if (sigma.size() != b.size()) throw std::invalid_argument("sign vector length differs from tuple length");
  return prefix_bounded(b, 0, sigma_partial_sums(sigma), true);
}

bool in_B_n0n1(const Tuple& b, int n0, int n1) {
  if (n0 + n1 != static_cast<int>(b.size())) return false;
  return std::count_if(b.begin(), b.end(), [](int x) { return x > 0; }) == n0;
}

bool in_B_sharp(const Tuple& b, int n0, int n1) {
  if (n0 + n1 != static_cast<int>(b.size())) return false;
  for (int r = 0; r < n0 + n1; ++r)
    if ((b[r] > 0) != (r < n0)) return false;
  return true;
}

bool in_B_plus(const Tuple& b, int n0, int n1) { return in_B_sharp(b, n0, n1) && is_strictly_dominant(b); }

bool is_dominant(const Tuple& b) { return std::is_sorted(b.rbegin(), b.rend()); }

bool is_strictly_dominant(const Tuple& b) {
  for (std::size_t r = 1; r < b.size(); ++r)
    if (b[r - 1] <= b[r]) return false;
  return true;
}

bool is_antidominant(const Tuple& b) { return std::is_sorted(b.begin(), b.end()); }

bool is_typical(const Tuple& b) {
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t s = r + 1; s < b.size(); ++s)
      if (b[r] + b[s] == 1) return false;
  return true;
}

bool set_membership(const Tuple& b, const TupleSet& set) {
  using K = TupleSet::Kind;
  switch (set.kind) {
    case K::B0: return in_B0(b);
    case K::Bk: return in_Bk(b, set.k);
    case K::Bsigma: return in_Bsigma(b, set.sigma);
    case K::B_leq_k: return in_B_leq_k(b, set.k);
    case K::B_lt_k: return in_B_lt_k(b, set.k);
    case K::B_leq_sigma: return in_B_leq_sigma(b, set.sigma);
    case K::B_lt_sigma: return in_B_lt_sigma(b, set.sigma);
    case K::B_n0n1: return in_B_n0n1(b, set.n0, set.n1);
    case K::B_sharp: return in_B_sharp(b, set.n0, set.n1);
    case K::B_plus: return in_B_plus(b, set.n0, set.n1);
    case K::dominant: return is_dominant(b);
    case K::strictly_dominant: return is_strictly_dominant(b);
    case K::antidominant: return is_antidominant(b);
    case K::typical: return is_typical(b);
  }
  return false;
}

std::vector<Tuple> box_tuples(int n, int lo, int hi) {
  std::vector<Tuple> out;
  if (n <= 0 || lo > hi) return out;
  Tuple b(n, lo);
  while (true) {
    out.push_back(b);
    int r = n - 1;
    while (r >= 0 && b[r] == hi) b[r--] = lo;
    if (r < 0) break;
    ++b[r];
  }
  return out;
}

}  // namespace cbasis
