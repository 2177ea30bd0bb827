/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/harness.hpp"
#include "crystalkit/wiring.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crystalkit;
using testing::w121;

TEST_SUITE("wiring") {

TEST_CASE("sweep construction") {
  const auto d5 = build_wiring(example_word());
  CHECK(d5.vertex(1).lower == 2);
  CHECK(d5.vertex(1).upper == 3);

  const auto d3 = build_wiring(w121());
  REQUIRE(d3.num_vertices() == 3);
  CHECK(d3.vertex(1).lower == 1);
  CHECK(d3.vertex(1).upper == 2);
  CHECK(d3.vertex(2).lower == 1);
  CHECK(d3.vertex(2).upper == 3);
  CHECK(d3.vertex(3).lower == 2);
  CHECK(d3.vertex(3).upper == 3);
  CHECK(d3.wire_vertices(2) == std::vector<int>{1, 3});

  const auto d2 = build_wiring(validate_reduced_word(2, {1}));
  REQUIRE(d2.num_vertices() == 1);
  CHECK(d2.vertex(1).has_wire(1));
  CHECK(d2.vertex(1).has_wire(2));
}

TEST_CASE("diagram invariants for every word up to n=5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_reduced_words(n)) {
      const auto d = build_wiring(w);
      const auto roots = w.roots();
      for (int k = 1; k <= d.num_vertices(); ++k) {
        const auto& v = d.vertex(k);
        CHECK(v.column == k);
        CHECK(v.level == w.letter(k));
        CHECK(PositiveRoot{std::min(v.lower, v.upper), std::max(v.lower, v.upper)} ==
              roots[k - 1]);
        // The level is one more than the number of wires strictly below.
        int below = 0;
        for (int p = 1; p <= n; ++p)
          if (!v.has_wire(p) && d.height_after(k - 1, p) < d.height_after(k - 1, v.lower)) ++below;
        CHECK(v.level == below + 1);
      }
      for (int p = 1; p <= n; ++p) {
        CHECK(d.height_after(0, p) == p);
        CHECK(d.height_after(d.num_vertices(), p) == n + 1 - p);
        // Each wire meets every other wire exactly once.
        CHECK(d.wire_vertices(p).size() == static_cast<std::size_t>(n - 1));
      }
    }
}

TEST_CASE("orientation") {
  const auto d3 = build_wiring(w121());
  const auto o1 = orient(d3, 1, false);
  CHECK(o1.direction(1) == Direction::LeftToRight);
  CHECK(o1.direction(2) == Direction::RightToLeft);
  CHECK(o1.direction(3) == Direction::RightToLeft);
  CHECK(o1.start_side() == Side::Left);

  const auto o5 = orient(build_wiring(example_word()), 3, false);
  for (int p = 1; p <= 3; ++p) CHECK(o5.direction(p) == Direction::LeftToRight);
  for (int p = 4; p <= 5; ++p) CHECK(o5.direction(p) == Direction::RightToLeft);

  const auto od = orient(d3, 2, true);
  CHECK(od.direction(1) == Direction::RightToLeft);
  CHECK(od.direction(2) == Direction::RightToLeft);
  CHECK(od.direction(3) == Direction::LeftToRight);
  CHECK(od.start_side() == Side::Right);
}

TEST_CASE("traversals follow the orientation") {
  const auto d3 = build_wiring(w121());
  const auto o = orient(d3, 1, false);
  CHECK(o.traversal(1) == std::vector<int>{1, 2});
  CHECK(o.traversal(2) == std::vector<int>{3, 1});
  CHECK(o.next_vertex(2, 0) == 3);
  CHECK(o.next_vertex(2, 3) == 1);
  CHECK(o.next_vertex(2, 1) == 0);
}

TEST_CASE("dot export") {
  const auto dot = to_dot(orient(build_wiring(w121()), 1, false));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("(1,2)@1") != std::string::npos);
  CHECK(dot.find("(2,3)@3") != std::string::npos);
}

}  // TEST_SUITE
