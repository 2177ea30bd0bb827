/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>

#include "crystalkit/crystals.hpp"
#include "crystalkit/harness.hpp"
#include "crystalkit/plmaps.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crystalkit;
using testing::w121;

TEST_SUITE("crystals") {

TEST_CASE("epsilon examples") {
  CHECK(epsilon_closed(Family::L, w121(), Vec{2, 1, 1}, 2) == 1);
  CHECK(epsilon_closed(Family::S, w121(), Vec{2, 1, 0}, 1) == 1);
  CHECK(epsilon_closed(Family::Sstar, w121(), Vec{2, 1, 0}, 1) == 2);
  CHECK(epsilon_complement(Family::L, w121(), Vec{1, 1, 0}, 1) == 2);
  CHECK(epsilon_complement(Family::S, w121(), Vec{2, 1, 0}, 2) == 0);
  for (auto f : kAllFamilies)
    for (Letter a = 1; a <= 2; ++a) {
      CHECK(epsilon_closed(f, w121(), Vec{0, 0, 0}, a) == 0);
      CHECK(epsilon_complement(f, w121(), Vec{0, 0, 0}, a) == 0);
    }
}

TEST_CASE("weights and phi") {
  CHECK(weight_of(Family::L, w121(), Vec{0, 1, 0}, HighestWeight({1, 1})) == Vec{0, 0});
  CHECK(weight_of(Family::S, w121(), Vec{0, 0, 0}, HighestWeight({2, 1})) == Vec{2, 1});
  CHECK(weight_of(Family::S, w121(), Vec{1, 0, 0}) == Vec{-2, 1});
  CHECK(phi_value(Family::L, w121(), HighestWeight({1, 1}), Vec{0, 0, 0}, 1) == 1);
  CHECK(phi_value(Family::L, w121(), HighestWeight({1, 0}), Vec{1, 0, 0}, 1) == 0);
  CHECK(phi_value(Family::S, w121(), HighestWeight({1, 0}), Vec{1, 1, 0}, 2) == 0);
}

TEST_CASE("closed-form steps") {
  CHECK(step_closed(Family::L, w121(), HighestWeight({0, 1}), Vec{0, 0, 0}, 2,
                    StepDirection::Lower) == Vec{0, 0, 1});
  CHECK_FALSE(step_closed(Family::L, w121(), HighestWeight({1, 0}), Vec{1, 0, 0}, 1,
                          StepDirection::Lower)
                  .has_value());
  CHECK(step_closed(Family::S, w121(), std::nullopt, Vec{0, 0, 0}, 1, StepDirection::Lower) ==
        Vec{1, 0, 0});
}

TEST_CASE("crystal enumeration examples") {
  CHECK(enumerate_crystal(Family::L, w121(), HighestWeight({1, 0})).points() ==
        std::vector<Vec>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}});
  CHECK(enumerate_crystal(Family::Sstar, w121(), HighestWeight({1, 0})).points() ==
        std::vector<Vec>{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
  for (auto f : kAllFamilies)
    CHECK(enumerate_crystal(f, testing::w212(), HighestWeight::zero(3)).size() == 1);
}

TEST_CASE("B(infinity) windows") {
  CHECK(enumerate_binfty(w121(), 1).size() == 4);
  CHECK(enumerate_binfty(w121(), 0) == std::vector<Vec>{{0, 0, 0}});
  CHECK(enumerate_binfty(validate_reduced_word(2, {1}), 3) ==
        std::vector<Vec>{{0}, {1}, {2}, {3}});
}

TEST_CASE("closed forms agree with the transition oracle on B(infinity)") {
  for (const auto& w : all_reduced_words(4))
    for (const auto& x : enumerate_binfty(w, 3))
      for (auto f : kAllFamilies) {
        // String families are parametrized by string data of the same elements.
        const Vec p = is_lusztig(f) ? x : string_datum(w, x);
        for (Letter a = 1; a < 4; ++a) {
          CHECK(epsilon_closed(f, w, p, a) == reference_epsilon(f, w, p, a));
          CHECK(epsilon_complement(f, w, p, a) == reference_epsilon_complement(f, w, p, a));
          for (auto dir : {StepDirection::Lower, StepDirection::Raise})
            CHECK(step_closed(f, w, std::nullopt, p, a, dir) ==
                  reference_step(f, w, std::nullopt, p, a, dir));
        }
      }
}

TEST_CASE("crystal graph invariants") {
  for (const auto& w : all_reduced_words(3))
    for (const auto& l : dominant_weights_up_to(3, 3))
      for (auto f : kAllFamilies) {
        const auto g = enumerate_crystal(f, w, l);
        CHECK(g.size() == weyl_dim(3, l));
        CHECK(g.nodes()[g.highest()].x == Vec{0, 0, 0});
        CHECK(g.nodes()[g.highest()].wt == Vec(l.coeffs().begin(), l.coeffs().end()));
        for (const auto& e : g.edges()) {
          const auto& u = g.nodes()[e.from];
          const auto& v = g.nodes()[e.to];
          const auto alpha = simple_root(3, e.a);
          for (std::size_t c = 0; c < 2; ++c) CHECK(v.wt[c] == u.wt[c] - alpha[c]);
          CHECK(v.epsilon[e.a - 1] == u.epsilon[e.a - 1] + 1);
          CHECK(v.phi[e.a - 1] == u.phi[e.a - 1] - 1);
          CHECK(g.e(e.to, e.a) == e.from);
          CHECK(step_closed(f, w, l, v.x, e.a, StepDirection::Raise) == u.x);
        }
        for (const auto& node : g.nodes())
          for (Int p : node.phi) CHECK(p >= 0);
      }
}

TEST_CASE("string family lowering changes one coordinate") {
  const auto w = validate_reduced_word(4, {1, 2, 1, 3, 2, 1});
  const auto g = enumerate_crystal(Family::S, w, HighestWeight({1, 1, 1}));
  for (const auto& e : g.edges()) {
    const auto& x = g.nodes()[e.from].x;
    const auto& y = g.nodes()[e.to].x;
    int changed = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] != y[k]) {
        ++changed;
        CHECK(y[k] == x[k] + 1);
        CHECK(w.letter(static_cast<int>(k) + 1) == e.a);
      }
    CHECK(changed == 1);
  }
}

TEST_CASE("the n=5 example word") {
  const auto w = example_word();
  const HighestWeight l({0, 1, 0, 0});
  for (auto f : kAllFamilies) CHECK(enumerate_crystal(f, w, l).size() == 10);
}

}  // TEST_SUITE
