/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <vector>

#include "crystalkit/rootcore.hpp"

namespace crystalkit {

// One crossing of two wires. Wires are labelled by their height at the left
// boundary (1 = bottom); `lower` enters the crossing at height `level`.
struct Vertex {
  int column = 0;  // equals the vertex index k in 1..N
  int level = 0;   // the letter i_k
  int lower = 0;
  int upper = 0;

  bool has_wire(int w) const noexcept { return w == lower || w == upper; }
  int other(int w) const noexcept { return w == lower ? upper : lower; }
};

class WiringDiagram {
 public:
  const ReducedWord& word() const noexcept { return word_; }
  int num_wires() const noexcept { return word_.n(); }
  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  // 1-based vertex index.
  const Vertex& vertex(int k) const { return vertices_.at(k - 1); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  // Vertices along wire w from its left endpoint to its right endpoint.
  const std::vector<int>& wire_vertices(int w) const { return wire_vertices_.at(w - 1); }
  // Height of wire w strictly between columns k and k+1 (k = 0 is the left
  // boundary, k = N the right boundary).
  int height_after(int k, int w) const { return heights_.at(k).at(w - 1); }

 private:
  friend WiringDiagram build_wiring(const ReducedWord& word);
  explicit WiringDiagram(ReducedWord word) : word_(std::move(word)) {}

  ReducedWord word_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> wire_vertices_;
  std::vector<std::vector<int>> heights_;
};

WiringDiagram build_wiring(const ReducedWord& word);

enum class Direction { LeftToRight, RightToLeft };
enum class Side { Left, Right };

// D_i(a) (dual = false) or D*_i(a) (dual = true).
class OrientedWiring {
 public:
  OrientedWiring(WiringDiagram diagram, Letter a, bool dual);

  const WiringDiagram& diagram() const noexcept { return diagram_; }
  Letter a() const noexcept { return a_; }
  bool dual() const noexcept { return dual_; }
  Direction direction(int wire) const;
  // Vertices of the wire in the order they are traversed.
  std::vector<int> traversal(int wire) const;
  // Boundary side where the traversal of every wire <= a starts: the left
  // boundary for D_i(a), the right one for D*_i(a).
  Side start_side() const noexcept { return dual_ ? Side::Right : Side::Left; }

  // Next vertex after `from` along `wire` in its orientation; `from` = 0
  // means "entering from the boundary". Returns 0 at the far boundary.
  int next_vertex(int wire, int from) const;

 private:
  WiringDiagram diagram_;
  Letter a_;
  bool dual_;
};

OrientedWiring orient(const WiringDiagram& diagram, Letter a, bool dual);

// Nodes are vertices labelled "(p,q)@k"; edges are the oriented wire segments.
std::string to_dot(const OrientedWiring& wiring);

}  // namespace crystalkit
