/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <set>

#include "crystalkit/crystals.hpp"
#include "crystalkit/plmaps.hpp"
#include "crystalkit/polytopes.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crystalkit;
using testing::code_of;
using testing::w121;
using testing::w212;

namespace {

std::set<Vec> coeff_set(const std::vector<AffineForm>& rows) {
  std::set<Vec> out;
  for (const auto& r : rows) out.insert(r.coeffs);
  return out;
}

// hw rows as (coeffs, a) pairs.
std::set<std::pair<Vec, int>> hw_set(const std::vector<AffineForm>& rows) {
  std::set<std::pair<Vec, int>> out;
  for (const auto& r : rows) {
    const auto it = std::find(r.lambda_row.begin(), r.lambda_row.end(), 1);
    out.insert({r.coeffs, static_cast<int>(it - r.lambda_row.begin()) + 1});
  }
  return out;
}

// Brute force over the box: nonnegative points satisfying the system.
std::vector<Vec> brute_points(const InequalitySystem& sys, const HighestWeight& l, Int box) {
  const std::size_t N = sys.word.size();
  std::vector<Vec> out;
  Vec x(N, 0);
  while (true) {
    if (contains(sys, l, x)) out.push_back(x);
    std::size_t k = 0;
    while (k < N && x[k] == box) x[k++] = 0;
    if (k == N) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("polytopes") {

TEST_CASE("cone rows") {
  CHECK(coeff_set(cone_system(Family::L, w121())) == std::set<Vec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const std::set<Vec> s_rows = {{1, 0, 0}, {0, 1, -1}, {0, 0, 1}};
  CHECK(coeff_set(cone_system(Family::S, w121())) == s_rows);
  CHECK(coeff_set(cone_system(Family::S, w212())) == s_rows);
  for (const auto& r : cone_system(Family::S, w121())) {
    CHECK(r.sense == Sense::GeqZero);
    CHECK(r.lambda_row == Vec{0, 0});
  }
}

TEST_CASE("highest-weight rows") {
  CHECK(hw_set(hw_system(Family::Sstar, w121())) ==
        std::set<std::pair<Vec, int>>{{{1, -1, 2}, 1}, {{0, 0, 1}, 1}, {{0, 1, -1}, 2}});
  CHECK(hw_set(hw_system(Family::L, w121())) ==
        std::set<std::pair<Vec, int>>{{{1, 1, -1}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 2}});
  CHECK(hw_set(hw_system(Family::Lstar, w121())) ==
        std::set<std::pair<Vec, int>>{{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{-1, 1, 1}, 2}});
  for (const auto& r : hw_system(Family::S, w121())) CHECK(r.sense == Sense::LeqLambda);
}

TEST_CASE("rows are sorted and distinct") {
  for (const auto& w : all_reduced_words(4))
    for (auto f : kAllFamilies) {
      const auto sys = inequality_system(f, w);
      for (const auto* rows : {&sys.cone_rows, &sys.hw_rows}) {
        CHECK(std::is_sorted(rows->begin(), rows->end()));
        CHECK(std::adjacent_find(rows->begin(), rows->end()) == rows->end());
      }
    }
}

TEST_CASE("membership") {
  const auto sys = inequality_system(Family::S, w121());
  const HighestWeight l({1, 0});
  CHECK(contains(sys, l, Vec{1, 1, 0}));
  CHECK_FALSE(contains(sys, l, Vec{2, 1, 0}));
  for (auto f : kAllFamilies) CHECK(contains(inequality_system(f, w121()), l, Vec{0, 0, 0}));
  CHECK(code_of([&] { contains(sys, l, Vec{0, 0}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { contains(sys, HighestWeight({1, 0, 0}), Vec{0, 0, 0}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("lattice point examples") {
  const auto pts = lattice_points(Family::Sstar, w121(), HighestWeight({1, 1}));
  CHECK(pts.size() == 8);
  CHECK(std::find(pts.begin(), pts.end(), Vec{2, 1, 0}) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), Vec{0, 2, 1}) != pts.end());
  CHECK(lattice_points(Family::L, w121(), HighestWeight({1, 0})) ==
        std::vector<Vec>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}});
  for (auto f : kAllFamilies)
    CHECK(lattice_points(f, w121(), HighestWeight::zero(3)) == std::vector<Vec>{{0, 0, 0}});
}

TEST_CASE("pruned enumeration equals brute force in a larger box") {
  for (const auto& w : all_reduced_words(3))
    for (const auto& l : dominant_weights_up_to(3, 2))
      for (auto f : kAllFamilies) {
        const auto sys = inequality_system(f, w);
        const auto res = enumerate_lattice_points(sys, l);
        CHECK(res.points == brute_points(sys, l, res.box + 2));
      }
}

TEST_CASE("point sets equal crystal node sets and have Weyl dimension") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& w : all_reduced_words(n))
      for (const auto& l : dominant_weights_up_to(n, n == 3 ? 3 : 2))
        for (auto f : kAllFamilies) {
          const auto pts = lattice_points(f, w, l);
          CHECK(pts.size() == weyl_dim(n, l));
          CHECK(pts == enumerate_crystal(f, w, l).points());
        }
}

TEST_CASE("printed string assignment fails on 1,2,1") {
  const HighestWeight l({1, 0});
  const auto s = enumerate_lattice_points(inequality_system(Family::S, w121(), HwAssignment::Printed), l);
  const auto ss =
      enumerate_lattice_points(inequality_system(Family::Sstar, w121(), HwAssignment::Printed), l);
  CHECK(s.points != enumerate_crystal(Family::S, w121(), l).points());
  CHECK(ss.points != enumerate_crystal(Family::Sstar, w121(), l).points());
}

TEST_CASE("string cone contains exactly the string data") {
  std::set<Vec> data;
  for (const auto& x : enumerate_binfty(w121(), 6)) data.insert(string_datum(w121(), x));
  const InequalitySystem sys{Family::S, w121(), cone_system(Family::S, w121()), {}};
  for (const auto& s : data) CHECK(contains(sys, HighestWeight::zero(3), s));
  // Every cone point of small height is a string datum.
  for (const auto& x : enumerate_binfty(w121(), 4))
    if (contains(sys, HighestWeight::zero(3), x)) CHECK(data.count(x) == 1);
}

TEST_CASE("monotonicity in lambda") {
  const auto w = validate_reduced_word(4, {1, 2, 1, 3, 2, 1});
  for (auto f : kAllFamilies) {
    const auto small = lattice_points(f, w, HighestWeight({1, 0, 1}));
    const auto big = lattice_points(f, w, HighestWeight({1, 1, 1}));
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

}  // TEST_SUITE
