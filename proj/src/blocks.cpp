#include "cbasis/blocks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cbasis {

const char* to_string(VertexLabel label) {
  switch (label) {
    case VertexLabel::circle: return "o";
    case VertexLabel::vee: return "v";
    case VertexLabel::wedge: return "^";
    case VertexLabel::cross: return "x";
  }
  return "?";
}

VertexLabel parse_vertex_label(char c) {
  switch (c) {
    case 'o': return VertexLabel::circle;
    case 'v': return VertexLabel::vee;
    case '^': return VertexLabel::wedge;
    case 'x': return VertexLabel::cross;
    default: throw std::invalid_argument(std::string("unknown vertex label '") + c + "'");
  }
}

VertexLabel ArcDiagram::label(int vertex) const {
  auto it = non_wedge_.find(vertex);
  return it == non_wedge_.end() ? VertexLabel::wedge : it->second;
}

void ArcDiagram::set(int vertex, VertexLabel label) {
  if (vertex < 1) throw std::invalid_argument("vertices are numbered from 1");
  if (label == VertexLabel::wedge)
    non_wedge_.erase(vertex);
  else
    non_wedge_[vertex] = label;
}

int ArcDiagram::count(VertexLabel label) const {
  if (label == VertexLabel::wedge) throw std::invalid_argument("infinitely many ^ vertices");
  return static_cast<int>(
      std::count_if(non_wedge_.begin(), non_wedge_.end(), [&](const auto& kv) { return kv.second == label; }));
}

bool ArcDiagram::in_lambda() const {
  return count(VertexLabel::cross) + count(VertexLabel::circle) + 2 * count(VertexLabel::vee) == n_;
}

std::string ArcDiagram::render() const {
  const int last = non_wedge_.empty() ? 0 : non_wedge_.rbegin()->first;
  std::string out;
  for (int i = 1; i <= last + 2; ++i) out += to_string(label(i));
  return out + "...";
}

ArcDiagram weight_diagram(const Tuple& b) {
  if (b.empty()) throw std::invalid_argument("tuple must be nonempty");
  if (!is_strictly_dominant(b)) throw std::invalid_argument("(" + to_string(b) + ") is not strictly dominant");
  std::set<int> vee, removed;
  for (int x : b) (x > 0 ? vee : removed).insert(x > 0 ? x : 1 - x);
  ArcDiagram d(static_cast<int>(b.size()));
  for (int i : vee) d.set(i, removed.count(i) ? VertexLabel::vee : VertexLabel::cross);
  for (int i : removed)
    if (!vee.count(i)) d.set(i, VertexLabel::circle);
  return d;
}

BlockStats block_stats(const Tuple& b) {
  BlockStats s{0, 0, 0};
  for (std::size_t r = 0; r < b.size(); ++r) {
    (b[r] > 0 ? s.n0 : s.n1) += 1;
    for (std::size_t t = r + 1; t < b.size(); ++t) s.atypicality += b[r] + b[t] == 1;
  }
  return s;
}

int prime_atypicality(const Tuple& b) {
  const Tuple p = prime_map(b);
  int count = 0;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (std::size_t t = r + 1; t < p.size(); ++t) count += p[r] == p[t];
  return count;
}

}  // namespace cbasis
