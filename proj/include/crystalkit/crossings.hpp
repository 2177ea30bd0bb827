/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Reineke crossings Gamma_a, dual Reineke crossings Gamma*_a and Kashiwara
// crossings Upsilon_a, their (r, s) vectors and the partial orders on them.

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "crystalkit/wiring.hpp"

namespace crystalkit {

enum class CrossingKind { Reineke, DualReineke, Kashiwara };

std::string_view crossing_kind_name(CrossingKind kind) noexcept;
CrossingKind parse_crossing_kind(std::string_view name);

struct Visit {
  int vertex = 0;
  int in_wire = 0;
  int out_wire = 0;
  bool turning() const noexcept { return in_wire != out_wire; }
};

struct Crossing {
  CrossingKind kind = CrossingKind::Reineke;
  Letter a = 1;
  // Visit order. For Kashiwara crossings this is k, k+1, ..., N.
  std::vector<int> vertices;
  // Wire data, present for the two Reineke kinds only.
  std::vector<Visit> visits;
  // Start position k of upsilon(k); 0 for the Reineke kinds.
  int start = 0;

  std::vector<int> turning() const;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CrossingVectors {
  Vec r;
  Vec s;
};

// All a-(dual) Reineke crossings of the oriented diagram, as simple paths
// from the boundary end of wire a to the boundary end of wire a+1. Sorted by
// vertex list.
std::vector<Crossing> enumerate_crossings(const OrientedWiring& wiring);

// upsilon(k) for every k with i_k = a, in increasing k.
std::vector<Crossing> kashiwara_crossings(const ReducedWord& word, Letter a);

CrossingVectors crossing_vectors(const WiringDiagram& diagram, const Crossing& c);

// Is `v` inside the closed curve formed by the path of `c` and the boundary
// segment between wires a and a+1? Vertices on the path count as inside.
bool region_contains(const WiringDiagram& diagram, const Crossing& c, int v);

// c1 <= c2. Throws IncomparableKinds for mismatched kinds or letters.
bool crossing_leq(const WiringDiagram& diagram, const Crossing& c1, const Crossing& c2);

enum class Form { R, S };
enum class Extremum { Least, Greatest };

// Gamma_a, Gamma*_a or Upsilon_a of one word, with vectors and the order
// relation precomputed.
class CrossingLattice {
 public:
  CrossingLattice(const ReducedWord& word, Letter a, CrossingKind kind);

  const ReducedWord& word() const noexcept { return diagram_.word(); }
  const WiringDiagram& diagram() const noexcept { return diagram_; }
  Letter a() const noexcept { return a_; }
  CrossingKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return crossings_.size(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_.at(i); }
  const CrossingVectors& vectors(std::size_t i) const { return vectors_.at(i); }
  const Vec& form(std::size_t i, Form f) const {
    return f == Form::R ? vectors_.at(i).r : vectors_.at(i).s;
  }
  bool leq(std::size_t i, std::size_t j) const { return leq_.at(i * size() + j); }

  Int max_value(std::span<const Int> x, Form f) const;
  // Among crossings maximizing <form, x>, the least or greatest one; with
  // `reversed` the order is read as its opposite. Throws NoUniqueExtremum.
  std::size_t extremal_maximizer(std::span<const Int> x, Form f, Extremum which,
                                 bool reversed = false) const;

 private:
  WiringDiagram diagram_;
  Letter a_;
  CrossingKind kind_;
  std::vector<Crossing> crossings_;
  std::vector<CrossingVectors> vectors_;
  std::vector<bool> leq_;
};

// Shared, memoized lattices. Safe for concurrent use.
std::shared_ptr<const CrossingLattice> crossing_lattice(const ReducedWord& word, Letter a,
                                                        CrossingKind kind);

const Crossing& extremal_maximizer(std::span<const Int> x, const CrossingLattice& lattice,
                                   Form f, Extremum which);

}  // namespace crystalkit
