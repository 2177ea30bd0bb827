/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Closed-form crystal structures on the four parametrizations, their B(lambda)
// truncations, crystal-graph enumeration, and the same operators computed
// through the braid-transition oracle for cross-checking.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crystalkit/crossings.hpp"
#include "crystalkit/plmaps.hpp"

namespace crystalkit {

// Which lattice, which vectors, and in which order the closed formulas use.
struct CrystalDescription {
  CrossingKind lattice;
  Form rho;    // the step vector
  Form sigma;  // the vector maximized by epsilon
  bool reversed_order;
};
CrystalDescription crystal_description(Family family);
// Lattice and vector whose maximum is the complementary epsilon (the function
// bounded by lambda_a in the B(lambda) realization).
CrystalDescription complement_description(Family family);

Int epsilon_closed(Family family, const ReducedWord& word, std::span<const Int> x, Letter a);
Int epsilon_complement(Family family, const ReducedWord& word, std::span<const Int> x, Letter a);

// (lambda or 0) - sum_k x_k beta_k for Lusztig data, - sum_k x_k alpha_{i_k}
// for string data; fundamental-weight coordinates.
Weight weight_of(Family family, const ReducedWord& word, std::span<const Int> x,
                 const std::optional<HighestWeight>& lambda = std::nullopt);

Int phi_value(Family family, const ReducedWord& word, const HighestWeight& lambda,
              std::span<const Int> x, Letter a);

// e_a / f_a in closed form. With lambda, lowering is truncated to B(lambda).
std::optional<Vec> step_closed(Family family, const ReducedWord& word,
                               const std::optional<HighestWeight>& lambda,
                               std::span<const Int> x, Letter a, StepDirection dir);

// The same functions computed through the transition oracle (string data are
// converted to Lusztig data and back).
Int reference_epsilon(Family family, const ReducedWord& word, std::span<const Int> x, Letter a);
Int reference_epsilon_complement(Family family, const ReducedWord& word,
                                 std::span<const Int> x, Letter a);
std::optional<Vec> reference_step(Family family, const ReducedWord& word,
                                  const std::optional<HighestWeight>& lambda,
                                  std::span<const Int> x, Letter a, StepDirection dir);

struct CrystalNode {
  Vec x;
  Weight wt;
  Vec epsilon;  // epsilon_a for a = 1..n-1
  Vec phi;
};

struct CrystalEdge {
  std::size_t from;
  Letter a;
  std::size_t to;
  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

class CrystalGraph {
 public:
  CrystalGraph(Family family, ReducedWord word, HighestWeight lambda,
               std::vector<CrystalNode> nodes, std::vector<CrystalEdge> edges);

  Family family() const noexcept { return family_; }
  const ReducedWord& word() const noexcept { return word_; }
  const HighestWeight& lambda() const noexcept { return lambda_; }
  const std::vector<CrystalNode>& nodes() const noexcept { return nodes_; }
  const std::vector<CrystalEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::optional<std::size_t> find(std::span<const Int> x) const;
  // Child along f_a or e_a, if any.
  std::optional<std::size_t> f(std::size_t node, Letter a) const;
  std::optional<std::size_t> e(std::size_t node, Letter a) const;
  // Unique node without incoming f-edges (highest) or without outgoing ones
  // (lowest). Throws NoUniqueRoot.
  std::size_t highest() const;
  std::size_t lowest() const;
  std::vector<Vec> points() const;

 private:
  Family family_;
  ReducedWord word_;
  HighestWeight lambda_;
  std::vector<CrystalNode> nodes_;
  std::vector<CrystalEdge> edges_;
  std::map<Vec, std::size_t> index_;
  std::vector<std::vector<std::optional<std::size_t>>> f_, e_;
};

// Closure of the origin under truncated lowering operators; nodes sorted
// lexicographically by coordinates.
CrystalGraph enumerate_crystal(Family family, const ReducedWord& word,
                               const HighestWeight& lambda);

// Lusztig data with coordinate sum <= height.
std::vector<Vec> enumerate_binfty(const ReducedWord& word, Int height);

}  // namespace crystalkit
