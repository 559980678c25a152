#include "cbasis/crystal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cbasis {

Signature reduce_signature(const Signature& sig) {
  Signature out = sig;
  std::vector<std::size_t> open_e;
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (out[t] == Mark::e) {
      open_e.push_back(t);
    } else if (out[t] == Mark::f && !open_e.empty()) {
      out[open_e.back()] = Mark::dot;
      out[t] = Mark::dot;
      open_e.pop_back();
    }
  }
  return out;
}

std::optional<Tuple> crystal_op(const Tuple& b, int i, GenKind kind, const Space& space) {
  const Signature sig = reduce_signature(isig(b, i, space));
  std::optional<std::size_t> slot;
  if (kind == GenKind::f) {
    for (std::size_t t = sig.size(); t-- > 0;)
      if (sig[t] == Mark::f) {
        slot = t;
        break;
      }
  } else {
    for (std::size_t t = 0; t < sig.size(); ++t)
      if (sig[t] == Mark::e) {
        slot = t;
        break;
      }
  }
  if (!slot) return std::nullopt;
  const int shift = space.is_c() ? 1 : value(space.sigma[*slot]);
  Tuple out = b;
  out[*slot] += kind == GenKind::f ? shift : -shift;
  return out;
}

std::string to_string(const CrystalStep& step) { return to_string(step.kind) + std::to_string(step.i); }

std::string to_string(const CrystalWord& word) {
  std::string out;
  for (const auto& s : word) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

std::optional<Tuple> apply_word(const Tuple& b, const CrystalWord& word, const Space& space) {
  std::optional<Tuple> cur = b;
  for (const auto& s : word) {
    cur = crystal_op(*cur, s.i, s.kind, space);
    if (!cur) return std::nullopt;
  }
  return cur;
}

namespace {

void append_x(CrystalWord& word, int br) {
  if (br >= 0)
    for (int i = 0; i < br; ++i) word.push_back({GenKind::f, i});
  else
    for (int i = 1; i <= -br; ++i) word.push_back({GenKind::e, i});
}

void require_antidominant(const Tuple& b) {
  if (b.empty()) throw std::invalid_argument("tuple must be nonempty");
  if (!is_antidominant(b)) throw std::invalid_argument("(" + to_string(b) + ") is not antidominant");
}

std::optional<CrystalWord> box_search(const Tuple& target, int lo, int hi) {
  const Tuple z(target.size(), 0);
  std::map<Tuple, std::pair<Tuple, CrystalStep>> parent;
  std::set<Tuple> seen{z};
  std::deque<Tuple> frontier{z};
  while (!frontier.empty()) {
    Tuple cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur == target) {
      CrystalWord word;
      for (Tuple t = cur; t != z;) {
        const auto& [prev, step] = parent.at(t);
        word.push_back(step);
        t = prev;
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (GenKind kind : {GenKind::f, GenKind::e}) {
      for (int i = 0; i <= std::max(-lo, hi) + 1; ++i) {
        auto next = crystal_op(cur, i, kind, Space::c());
        if (!next) continue;
        if (std::any_of(next->begin(), next->end(), [&](int x) { return x < lo || x > hi; })) continue;
        if (seen.insert(*next).second) {
          parent.emplace(*next, std::make_pair(cur, CrystalStep{kind, i}));
          frontier.push_back(*next);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CrystalWord proof_word(const Tuple& b) {
  require_antidominant(b);
  const int n = static_cast<int>(b.size());
  int t = 0;
  for (int r = 0; r < n; ++r)
    if (b[r] < 0) t = r + 1;
  CrystalWord word;
  for (int r = t; r >= 1; --r) append_x(word, b[r - 1]);
  for (int r = t + 1; r <= n; ++r) append_x(word, b[r - 1]);
  return word;
}

Connection connect_to_z(const Tuple& b) {
  const Tuple z(b.size(), 0);
  CrystalWord word = proof_word(b);
  if (apply_word(z, word) == b) return {std::move(word), true};

  const int lo = std::min(0, *std::min_element(b.begin(), b.end())) - 1;
  const int hi = std::max(0, *std::max_element(b.begin(), b.end())) + 1;
  auto found = box_search(b, lo, hi);
  if (!found) throw std::runtime_error("no crystal path from z to (" + to_string(b) + ") inside the search box");
  if (apply_word(z, *found) != b) throw std::logic_error("box search returned a word that does not reach b");
  return {std::move(*found), false};
}

bool component_membership(const Tuple& b) { return is_antidominant(b); }

bool is_prinjective(const Tuple& b) { return is_antidominant(b); }

Tuple z_k(int n, int k) {
  if (n < 1) throw std::invalid_argument("length must be >= 1");
  return Tuple(n, 1 - k);
}

Weight z_k_weight(int n, int k) { return total_weight(z_k(n, k), Space::c()); }

ComponentReport explore_component(int n, int lo, int hi) {
  if (n < 1) throw std::invalid_argument("length must be >= 1");
  if (lo > 0 || hi < 0) throw std::invalid_argument("box must contain 0");
  ComponentReport report{n, lo, hi, {}, {}, {}};
  const Tuple z(n, 0);
  std::deque<Tuple> frontier{z};
  report.adjacency[z];
  const int max_i = std::max(-lo, hi) + 1;
  while (!frontier.empty()) {
    Tuple cur = std::move(frontier.front());
    frontier.pop_front();
    for (GenKind kind : {GenKind::f, GenKind::e}) {
      for (int i = 0; i <= max_i; ++i) {
        auto next = crystal_op(cur, i, kind, Space::c());
        if (!next) continue;
        if (std::any_of(next->begin(), next->end(), [&](int x) { return x < lo || x > hi; })) continue;
        report.adjacency[cur].emplace(to_string(CrystalStep{kind, i}), *next);
        if (report.adjacency.try_emplace(*next).second) frontier.push_back(*next);
      }
    }
  }
  for (const auto& [t, edges] : report.adjacency)
    if (!is_antidominant(t)) report.reached_not_antidominant.push_back(t);
  for (const Tuple& t : box_tuples(n, lo, hi))
    if (is_antidominant(t) && !report.adjacency.count(t)) report.unreached_antidominant.push_back(t);
  return report;
}

std::string component_dot(const ComponentReport& report) {
  auto node = [](const Tuple& t) { return "\"" + to_string(t) + "\""; };
  std::string out = "digraph component {\n";
  for (const auto& [t, edges] : report.adjacency) {
    out += "  " + node(t) + ";\n";
    for (const auto& [op, target] : edges)
      if (op[0] == 'f') out += "  " + node(t) + " -> " + node(target) + " [label=\"" + op + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cbasis
