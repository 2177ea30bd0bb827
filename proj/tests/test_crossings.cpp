/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>

#include "crystalkit/crossings.hpp"
#include "crystalkit/harness.hpp"
#include "crystalkit/plmaps.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crystalkit;
using testing::code_of;
using testing::w121;

namespace {

std::vector<std::vector<int>> vertex_lists(const CrossingLattice& lat) {
  std::vector<std::vector<int>> out;
  for (const auto& c : lat.crossings()) out.push_back(c.vertices);
  return out;
}

std::size_t index_of(const CrossingLattice& lat, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.crossing(i).vertices == vertices) return i;
  FAIL("crossing not found");
  return 0;
}

}  // namespace

TEST_SUITE("crossings") {

TEST_CASE("the worked 3-Reineke crossing") {
  const auto lat = crossing_lattice(example_word(), 3, CrossingKind::Reineke);
  const auto i = index_of(*lat, {1, 2, 3, 7, 9, 6, 4});
  CHECK(lat->crossing(i).turning() == std::vector<int>{2, 3, 9});
  CHECK(lat->vectors(i).r == Vec{0, -1, 1, 0, 0, 0, 0, 0, 1, 0});
  CHECK(lat->vectors(i).s == Vec{-1, 0, 0, 1, 0, -1, 1, 0, 1, 0});
  const auto& c = lat->crossing(i);
  CHECK(c.visits.front().in_wire == 3);
  CHECK(c.visits.back().out_wire == 4);
}

TEST_CASE("crossings of 1,2,1") {
  const auto g2 = crossing_lattice(w121(), 2, CrossingKind::Reineke);
  CHECK(vertex_lists(*g2) == std::vector<std::vector<int>>{{1, 2}, {1, 3, 2}});
  const auto i = index_of(*g2, {1, 2});
  CHECK(g2->vectors(i).r == Vec{-1, 1, 0});
  CHECK(g2->vectors(i).s == Vec{0, 1, 0});

  const auto d2 = crossing_lattice(w121(), 2, CrossingKind::DualReineke);
  CHECK(vertex_lists(*d2) == std::vector<std::vector<int>>{{3}});
}

TEST_CASE("Kashiwara crossings") {
  auto starts = [](const ReducedWord& w, Letter a) {
    std::vector<int> out;
    for (const auto& c : kashiwara_crossings(w, a)) out.push_back(c.start);
    return out;
  };
  CHECK(starts(w121(), 1) == std::vector<int>{1, 3});
  CHECK(starts(w121(), 2) == std::vector<int>{2});
  CHECK(starts(example_word(), 2) == std::vector<int>{1, 3, 7, 10});

  const auto u = kashiwara_crossings(w121(), 1);
  const auto d = build_wiring(w121());
  CHECK(crossing_vectors(d, u[0]).r == Vec{1, 0, 0});
  CHECK(crossing_vectors(d, u[0]).s == Vec{1, -1, 2});
  CHECK(crossing_vectors(d, u[1]).s == Vec{0, 0, 1});
}

TEST_CASE("order examples") {
  const auto g2 = crossing_lattice(w121(), 2, CrossingKind::Reineke);
  const auto a = index_of(*g2, {1, 2});
  const auto b = index_of(*g2, {1, 3, 2});
  CHECK(g2->leq(a, b));
  CHECK_FALSE(g2->leq(b, a));
  CHECK(crossing_leq(g2->diagram(), g2->crossing(a), g2->crossing(b)));

  const auto u1 = crossing_lattice(w121(), 1, CrossingKind::Kashiwara);
  REQUIRE(u1->size() == 2);
  const auto& first = u1->crossing(0).start == 1 ? u1->crossing(0) : u1->crossing(1);
  const auto& third = u1->crossing(0).start == 3 ? u1->crossing(0) : u1->crossing(1);
  CHECK(crossing_leq(u1->diagram(), third, first));
  CHECK_FALSE(crossing_leq(u1->diagram(), first, third));

  const auto g1 = crossing_lattice(w121(), 1, CrossingKind::Reineke);
  CHECK(code_of([&] { crossing_leq(g1->diagram(), g1->crossing(0), u1->crossing(0)); }) ==
        ErrorCode::IncomparableKinds);
  CHECK(code_of([&] { crossing_leq(g1->diagram(), g1->crossing(0), g2->crossing(0)); }) ==
        ErrorCode::IncomparableKinds);
}

TEST_CASE("extremal maximizers") {
  const auto g2 = crossing_lattice(w121(), 2, CrossingKind::Reineke);
  CHECK(extremal_maximizer(Vec{0, 0, 0}, *g2, Form::S, Extremum::Greatest).vertices ==
        std::vector<int>{1, 3, 2});
  CHECK(extremal_maximizer(Vec{2, 1, 1}, *g2, Form::S, Extremum::Greatest).vertices ==
        std::vector<int>{1, 2});
  CHECK(g2->max_value(Vec{2, 1, 1}, Form::S) == 1);
  const auto u1 = crossing_lattice(w121(), 1, CrossingKind::Kashiwara);
  CHECK(extremal_maximizer(Vec{0, 0, 0}, *u1, Form::S, Extremum::Greatest).start == 1);
}

TEST_CASE("orders are partial orders, total on Kashiwara crossings") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_reduced_words(n))
      for (Letter a = 1; a < n; ++a)
        for (auto kind : {CrossingKind::Reineke, CrossingKind::DualReineke, CrossingKind::Kashiwara}) {
          const auto lat = crossing_lattice(w, a, kind);
          const auto m = lat->size();
          REQUIRE(m > 0);
          for (std::size_t i = 0; i < m; ++i) {
            CHECK(lat->leq(i, i));
            for (std::size_t j = 0; j < m; ++j) {
              if (i != j && lat->leq(i, j)) CHECK_FALSE(lat->leq(j, i));
              if (kind == CrossingKind::Kashiwara) CHECK((lat->leq(i, j) || lat->leq(j, i)));
              for (std::size_t k = 0; k < m; ++k)
                if (lat->leq(i, j) && lat->leq(j, k)) CHECK(lat->leq(i, k));
            }
          }
        }
}

TEST_CASE("vector entry ranges and path invariants") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_reduced_words(n))
      for (Letter a = 1; a < n; ++a)
        for (auto kind : {CrossingKind::Reineke, CrossingKind::DualReineke}) {
          const auto lat = crossing_lattice(w, a, kind);
          for (std::size_t i = 0; i < lat->size(); ++i) {
            const auto& c = lat->crossing(i);
            CHECK(c.visits.front().in_wire == a);
            CHECK(c.visits.back().out_wire == a + 1);
            std::vector<int> sorted = c.vertices;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            for (const auto& v : c.visits)
              if (!v.turning()) {
                const int p = v.in_wire;
                const int q = lat->diagram().vertex(v.vertex).other(p);
                CHECK((q <= a ? p > q : p < q));
              }
            for (Int r : lat->vectors(i).r) CHECK((r >= -1 && r <= 1));
            for (Int s : lat->vectors(i).s) CHECK((s >= -1 && s <= 1));
          }
        }
}

TEST_CASE("letter sums of s-vectors") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_reduced_words(n))
      for (Letter a = 1; a < n; ++a)
        for (auto kind : {CrossingKind::Reineke, CrossingKind::DualReineke}) {
          const auto lat = crossing_lattice(w, a, kind);
          // Reineke crossings sum to delta_{a,b}; dual ones to delta_{a*,b}.
          const Letter target = kind == CrossingKind::Reineke ? a : n - a;
          for (std::size_t i = 0; i < lat->size(); ++i)
            for (Letter b = 1; b < n; ++b) {
              Int sum = 0;
              for (int k = 1; k <= static_cast<int>(w.size()); ++k)
                if (w.letter(k) == b) sum += lat->vectors(i).s[k - 1];
              CHECK(sum == (b == target ? 1 : 0));
            }
        }
}

TEST_CASE("transpose map takes s to r on dual crossings") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_reduced_words(n))
      for (Letter a = 1; a < n; ++a) {
        const auto lat = crossing_lattice(w, a, CrossingKind::DualReineke);
        for (std::size_t i = 0; i < lat->size(); ++i)
          CHECK(f_transpose(w, lat->vectors(i).s) == lat->vectors(i).r);
      }
}

TEST_CASE("crossing counts are symmetric under the star word") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_reduced_words(n))
      for (Letter a = 1; a < n; ++a)
        for (auto kind : {CrossingKind::Reineke, CrossingKind::DualReineke})
          CHECK(crossing_lattice(w, a, kind)->size() ==
                crossing_lattice(star_word(w), n - a, kind)->size());
}

TEST_CASE("kind names") {
  CHECK(parse_crossing_kind("reineke") == CrossingKind::Reineke);
  CHECK(parse_crossing_kind("dual_reineke") == CrossingKind::DualReineke);
  CHECK(crossing_kind_name(CrossingKind::Kashiwara) == "kashiwara");
  CHECK(code_of([] { parse_crossing_kind("other"); }) == ErrorCode::InvalidArgument);
}

}  // TEST_SUITE
