/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Text, JSON, CSV and DOT renderings. All outputs are canonically ordered and
// carry no timestamps, so identical inputs give identical bytes.

#include <string>
#include <vector>

#include "crystalkit/crossings.hpp"
#include "crystalkit/crystals.hpp"
#include "crystalkit/polytopes.hpp"

namespace crystalkit {

std::string roots_json(const ReducedWord& word);
std::string roots_text(const ReducedWord& word);

std::string crossings_json(const WiringDiagram& diagram, const std::vector<Crossing>& crossings);

std::string inequalities_json(const InequalitySystem& system);
// One row per line, e.g. "x1 - x2 + 2 x3 <= l1".
std::string inequalities_text(const InequalitySystem& system);

std::string points_json(const std::vector<Vec>& points);
std::string points_csv(const std::vector<Vec>& points);

std::string crystal_json(const CrystalGraph& graph);
std::string crystal_dot(const CrystalGraph& graph);

}  // namespace crystalkit
