/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Cone and highest-weight inequalities of the four polytope families,
// membership, and exact lattice-point enumeration.

#include <span>
#include <vector>

#include "crystalkit/crossings.hpp"

namespace crystalkit {

enum class Sense { GeqZero, LeqLambda };

// <coeffs, x> >= 0, or <coeffs, x> <= <lambda_row, lambda>.
struct AffineForm {
  Vec coeffs;
  Vec lambda_row;
  Sense sense = Sense::GeqZero;
  friend auto operator<=>(const AffineForm&, const AffineForm&) = default;
};

// Which highest-weight rows the string families get. `Adopted` is the
// assignment that reproduces B(lambda); `Printed` swaps the two string
// families and is kept as a negative control.
enum class HwAssignment { Adopted, Printed };

struct InequalitySystem {
  Family family;
  ReducedWord word;
  std::vector<AffineForm> cone_rows;
  std::vector<AffineForm> hw_rows;
};

std::vector<AffineForm> cone_system(Family family, const ReducedWord& word);
std::vector<AffineForm> hw_system(Family family, const ReducedWord& word,
                                  HwAssignment assignment = HwAssignment::Adopted);
InequalitySystem inequality_system(Family family, const ReducedWord& word,
                                   HwAssignment assignment = HwAssignment::Adopted);

bool contains(const InequalitySystem& system, const HighestWeight& lambda,
              std::span<const Int> x);

struct LatticePointResult {
  std::vector<Vec> points;  // sorted
  Int box = 0;              // coordinate bound that certified the result
};

LatticePointResult enumerate_lattice_points(const InequalitySystem& system,
                                            const HighestWeight& lambda);
std::vector<Vec> lattice_points(Family family, const ReducedWord& word,
                                const HighestWeight& lambda);

}  // namespace crystalkit
