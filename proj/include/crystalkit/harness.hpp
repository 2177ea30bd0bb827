/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Verification suites and crystal-graph isomorphism checking.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crystalkit/crystals.hpp"

namespace crystalkit {

// How weights of matched nodes must relate.
enum class WeightMap {
  Same,     // wt2 = wt1
  Negated,  // wt2 = -wt1
  Starred,  // wt2 = wt1 with coefficients reversed
};

struct IsoResult {
  bool iso = false;
  std::string witness;
  // matching[u] = node of g2 paired with node u of g1 (valid when iso).
  std::vector<std::size_t> matching;
};

// Simultaneous BFS from the highest node of g1 and the highest node of g2
// (the lowest one when `anti`), pairing f_a-children with f_a-children (or
// with e_a-children when `anti`).
IsoResult check_graph_iso(const CrystalGraph& g1, const CrystalGraph& g2, bool anti,
                          WeightMap weights);
inline IsoResult check_graph_iso(const CrystalGraph& g1, const CrystalGraph& g2, bool anti) {
  return check_graph_iso(g1, g2, anti, anti ? WeightMap::Negated : WeightMap::Same);
}

struct SuiteParams {
  int max_n = 4;
  Int max_lambda_sum = 3;
  Int height = 6;
  int samples = 100;
  Int sample_max_entry = 5;
  std::uint64_t seed = 20260415;
  int threads = 0;  // 0: hardware concurrency; always capped by CRYSTAL_KIT_THREADS
};

struct Check {
  std::string section;
  std::string id;
  std::string instance;
  bool passed = true;
  // A negative control passes when the expected failure reproduces.
  bool control = false;
  std::string detail;
  std::string witness;
};

struct SectionTiming {
  std::string section;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<Check> checks;
  std::vector<SectionTiming> timings;
  double elapsed_seconds = 0;

  bool passed() const;
  std::size_t failures() const;
  bool section_passed(std::string_view section) const;
  std::size_t section_checks(std::string_view section) const;
  double section_seconds(std::string_view section) const;

  // Timings are left out unless asked for, so that reports are diffable.
  std::string text(bool with_timing = false) const;
  std::string json(bool with_timing = false) const;
};

const std::vector<std::string>& suite_names();

// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, const SuiteParams& params = {});

// Worker count after applying the CRYSTAL_KIT_THREADS cap.
int resolve_threads(int requested);

// The n = 5 word of the worked example, (2,1,2,3,4,3,2,1,3,2).
ReducedWord example_word();

}  // namespace crystalkit
