#pragma once

#include <map>
#include <string>

#include "cbasis/orders.hpp"

namespace cbasis {

enum class VertexLabel : char { circle = 'o', vee = 'v', wedge = '^', cross = 'x' };

const char* to_string(VertexLabel label);
VertexLabel parse_vertex_label(char c);

/// Labelling of the vertices 1, 2, 3, ... that is ^ everywhere except on finitely many
/// vertices.
class ArcDiagram {
 public:
  explicit ArcDiagram(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<int, VertexLabel>& non_wedge() const { return non_wedge_; }
  VertexLabel label(int vertex) const;
  void set(int vertex, VertexLabel label);

  int count(VertexLabel label) const;
  /// #x + #o + 2 #v == n
  bool in_lambda() const;

  /// Vertices 1..(largest non-^ vertex + 2), then "..." for the all-^ tail.
  std::string render() const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;

 private:
  int n_;
  std::map<int, VertexLabel> non_wedge_;
};

/// Weight dictionary on strictly dominant b: I_v = {b_r > 0}, I_^ = {1,2,...} minus
/// {1 - b_r : b_r <= 0}; vertex i is v when only in I_v, ^ when only in I_^, x when in
/// both and o when in neither.
ArcDiagram weight_diagram(const Tuple& b);

struct BlockStats {
  int n0;  ///< entries > 0
  int n1;  ///< entries <= 0
  int atypicality;  ///< pairs r < s with b_r + b_s = 1
  friend bool operator==(const BlockStats&, const BlockStats&) = default;
};

BlockStats block_stats(const Tuple& b);

/// Pairs r < s with b'_r = b'_s.
int prime_atypicality(const Tuple& b);

}  // namespace cbasis
