/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crystalkit {

WiringDiagram build_wiring(const ReducedWord& word) {
  const int n = word.n();
  WiringDiagram d(word);
  d.wire_vertices_.assign(n, {});
  std::vector<int> wire_at(n + 1);
  std::iota(wire_at.begin(), wire_at.end(), 0);
  std::vector<int> height(n);
  std::iota(height.begin(), height.end(), 1);
  d.heights_.push_back(height);
  int k = 0;
  for (Letter a : word.letters()) {
    ++k;
    const int p = wire_at[a];
    const int q = wire_at[a + 1];
    d.vertices_.push_back(Vertex{k, a, p, q});
    d.wire_vertices_[p - 1].push_back(k);
    d.wire_vertices_[q - 1].push_back(k);
    std::swap(wire_at[a], wire_at[a + 1]);
    height[p - 1] = a + 1;
    height[q - 1] = a;
    d.heights_.push_back(height);
    const PositiveRoot beta = word.roots()[k - 1];
    if (beta.k != std::min(p, q) || beta.l != std::max(p, q))
      fail(ErrorCode::InvalidArgument, "wire sweep disagrees with the root order");
  }
  return d;
}

OrientedWiring::OrientedWiring(WiringDiagram diagram, Letter a, bool dual)
    : diagram_(std::move(diagram)), a_(a), dual_(dual) {
  if (a < 1 || a > diagram_.num_wires() - 1)
    fail(ErrorCode::BadLetter, "orientation letter " + std::to_string(a) + " out of range");
}

Direction OrientedWiring::direction(int wire) const {
  const bool ltr = (wire <= a_) != dual_;
  return ltr ? Direction::LeftToRight : Direction::RightToLeft;
}

std::vector<int> OrientedWiring::traversal(int wire) const {
  std::vector<int> v = diagram_.wire_vertices(wire);
  if (direction(wire) == Direction::RightToLeft) std::reverse(v.begin(), v.end());
  return v;
}

int OrientedWiring::next_vertex(int wire, int from) const {
  const auto& list = diagram_.wire_vertices(wire);
  if (list.empty()) return 0;
  const bool ltr = direction(wire) == Direction::LeftToRight;
  if (from == 0) return ltr ? list.front() : list.back();
  auto it = std::find(list.begin(), list.end(), from);
  if (it == list.end())
    fail(ErrorCode::InvalidArgument, "vertex is not on the wire");
  if (ltr) {
    ++it;
    return it == list.end() ? 0 : *it;
  }
  return it == list.begin() ? 0 : *std::prev(it);
}

OrientedWiring orient(const WiringDiagram& diagram, Letter a, bool dual) {
  return OrientedWiring(diagram, a, dual);
}

std::string to_dot(const OrientedWiring& wiring) {
  const WiringDiagram& d = wiring.diagram();
  std::ostringstream os;
  os << "digraph wiring {\n  rankdir=LR;\n";
  os << "  label=\"" << (wiring.dual() ? "D*" : "D") << "(" << format_word(d.word())
     << "; a=" << wiring.a() << ")\";\n";
  for (const Vertex& v : d.vertices()) {
    os << "  v" << v.column << " [label=\"(" << std::min(v.lower, v.upper) << ","
       << std::max(v.lower, v.upper) << ")@" << v.column << "\"];\n";
  }
  for (int w = 1; w <= d.num_wires(); ++w) {
    const bool ltr = wiring.direction(w) == Direction::LeftToRight;
    os << "  L" << w << " [shape=point,label=\"\"];\n";
    os << "  R" << w << " [shape=point,label=\"\"];\n";
    std::vector<std::string> chain{"L" + std::to_string(w)};
    for (int k : d.wire_vertices(w)) chain.push_back("v" + std::to_string(k));
    chain.push_back("R" + std::to_string(w));
    if (!ltr) std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      os << "  " << chain[i] << " -> " << chain[i + 1] << " [label=\"" << w << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace crystalkit
