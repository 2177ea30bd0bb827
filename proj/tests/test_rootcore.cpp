/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <limits>
#include <set>

#include "crystalkit/rootcore.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace crystalkit;

using testing::code_of;
using testing::letters_of;

TEST_SUITE("rootcore") {

TEST_CASE("root order of the n=5 example word") {
  const auto w = validate_reduced_word(5, {2, 1, 2, 3, 4, 3, 2, 1, 3, 2});
  const std::vector<PositiveRoot> expected = {{2, 3}, {1, 3}, {1, 2}, {1, 4}, {1, 5},
                                              {4, 5}, {2, 5}, {3, 5}, {2, 4}};
  const auto roots = root_order(w);
  REQUIRE(roots.size() == 10);
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(roots[k] == expected[k]);
  CHECK(roots[9] == PositiveRoot{3, 4});
}

TEST_CASE("root order small cases") {
  CHECK(root_order(validate_reduced_word(2, {1})) == std::vector<PositiveRoot>{{1, 2}});
  CHECK(root_order(validate_reduced_word(3, {1, 2, 1})) ==
        std::vector<PositiveRoot>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("validation errors") {
  CHECK(code_of([] { validate_reduced_word(3, {1, 1, 2}); }) == ErrorCode::NotReduced);
  CHECK(code_of([] { validate_reduced_word(3, {1, 2}); }) == ErrorCode::BadLength);
  CHECK(code_of([] { validate_reduced_word(3, {1, 3, 1}); }) == ErrorCode::BadLetter);
  CHECK(code_of([] { validate_reduced_word(3, {0, 2, 1}); }) == ErrorCode::BadLetter);
  CHECK(code_of([] { parse_word(3, "1,x,1"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Rank(1); }) == ErrorCode::InvalidArgument);
  CHECK(format_word(parse_word(3, "2,1,2")) == "2,1,2");
}

TEST_CASE("root orders match the permutation definition for every word") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_reduced_words(n)) {
      const auto brute = oracle::roots_brute(n, letters_of(w));
      const auto roots = root_order(w);
      REQUIRE(roots.size() == brute.size());
      for (std::size_t k = 0; k < roots.size(); ++k) {
        CHECK(roots[k].k == brute[k].first);
        CHECK(roots[k].l == brute[k].second);
      }
      std::set<std::pair<int, int>> distinct(brute.begin(), brute.end());
      CHECK(distinct.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
  }
}

TEST_CASE("all reduced words agree with brute-force enumeration") {
  CHECK(all_reduced_words(3).size() == 2);
  CHECK(all_reduced_words(4).size() == 16);
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<int>> got;
    for (const auto& w : all_reduced_words(n)) got.push_back(letters_of(w));
    CHECK(got == oracle::reduced_words_brute(n));
  }
  CHECK(all_reduced_words(5).size() == 768);
}

TEST_CASE("braid neighbors") {
  const auto w = validate_reduced_word(3, {1, 2, 1});
  const auto nb = braid_neighbors(w);
  REQUIRE(nb.size() == 1);
  CHECK(nb[0].first == BraidMove{1, MoveKind::ThreeMove});
  CHECK(format_move(nb[0].first) == "three_move@1");
  CHECK(letters_of(nb[0].second) == std::vector<int>{2, 1, 2});

  const auto w4 = validate_reduced_word(4, {1, 2, 1, 3, 2, 1});
  bool found = false;
  for (const auto& [m, v] : braid_neighbors(w4))
    if (m == BraidMove{3, MoveKind::TwoMove}) {
      found = true;
      CHECK(letters_of(v) == std::vector<int>{1, 2, 3, 1, 2, 1});
    }
  CHECK(found);
  CHECK(braid_neighbors(validate_reduced_word(2, {1})).empty());
}

TEST_CASE("braid graph is symmetric") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& w : all_reduced_words(n))
      for (const auto& [m, v] : braid_neighbors(w)) {
        bool back = false;
        for (const auto& [m2, u] : braid_neighbors(v)) back = back || u == w;
        CHECK(back);
      }
}

TEST_CASE("inapplicable moves") {
  const std::vector<Letter> w = {1, 2, 1};
  CHECK(code_of([&] { apply_move_to_letters(w, {1, MoveKind::TwoMove}); }) ==
        ErrorCode::InapplicableMove);
  CHECK(code_of([&] { apply_move_to_letters(w, {2, MoveKind::ThreeMove}); }) ==
        ErrorCode::InapplicableMove);
}

TEST_CASE("paths to a first or last letter") {
  const auto w = validate_reduced_word(3, {1, 2, 1});
  CHECK(path_to_first(w, 1).empty());
  const auto p2 = path_to_first(w, 2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == BraidMove{1, MoveKind::ThreeMove});
  CHECK(path_to_last(w, 1).empty());
  CHECK(path_to_last(w, 2).size() == 1);
  CHECK(path_to_last(validate_reduced_word(3, {2, 1, 2}), 1).size() == 1);

  const auto w5 = validate_reduced_word(5, {2, 1, 2, 3, 4, 3, 2, 1, 3, 2});
  for (Letter a = 1; a <= 4; ++a) {
    CHECK(apply_moves(w5, path_to_first(w5, a)).letter(1) == a);
    CHECK(apply_moves(w5, path_to_last(w5, a)).letter(10) == a);
  }
}

TEST_CASE("paths between words") {
  for (const auto& u : all_reduced_words(4))
    for (const auto& v : all_reduced_words(4)) CHECK(apply_moves(u, path_between(u, v)) == v);
}

TEST_CASE("star word") {
  CHECK(letters_of(star_word(validate_reduced_word(3, {1, 2, 1}))) == std::vector<int>{2, 1, 2});
  CHECK(letters_of(star_word(validate_reduced_word(5, {2, 1, 2, 3, 4, 3, 2, 1, 3, 2}))) ==
        std::vector<int>{3, 4, 3, 2, 1, 2, 3, 4, 2, 3});
  CHECK(letters_of(star_word(validate_reduced_word(2, {1}))) == std::vector<int>{1});
  for (const auto& w : all_reduced_words(4)) {
    CHECK(star_word(star_word(w)) == w);
    CHECK(opposite_word(opposite_word(w)) == w);
  }
  CHECK(letters_of(opposite_word(validate_reduced_word(4, {1, 2, 1, 3, 2, 1}))) ==
        std::vector<int>{3, 2, 1, 3, 2, 3});
}

TEST_CASE("cartan entries") {
  CHECK(cartan_entry(1, 1) == 2);
  CHECK(cartan_entry(1, 2) == -1);
  CHECK(cartan_entry(2, 1) == -1);
  CHECK(cartan_entry(1, 3) == 0);
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dim(3, HighestWeight({1, 1})) == 8);
  CHECK(weyl_dim(3, HighestWeight({1, 0})) == 3);
  CHECK(weyl_dim(4, HighestWeight({1, 0, 1})) == 15);
  CHECK(weyl_dim(4, HighestWeight({1, 1, 1})) == 64);
  for (int n = 2; n <= 6; ++n) CHECK(weyl_dim(n, HighestWeight::zero(n)) == 1);
}

TEST_CASE("weyl dimension agrees with Gelfand-Tsetlin counts") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& l : dominant_weights_up_to(n, 4)) {
      const Vec c(l.coeffs().begin(), l.coeffs().end());
      CHECK(weyl_dim(n, l) == oracle::gelfand_tsetlin_count(c));
      CHECK(weyl_dim(n, l) == weyl_dim(n, l.star()));
    }
}

TEST_CASE("highest weights") {
  CHECK(code_of([] { HighestWeight({1, -1}); }) == ErrorCode::InvalidArgument);
  const HighestWeight l({1, 0, 2});
  CHECK(l[1] == 1);
  CHECK(l[3] == 2);
  CHECK(l.sum() == 3);
  CHECK(l.star() == HighestWeight({2, 0, 1}));
  CHECK(parse_lambda(4, "1,0,2") == l);
  CHECK(code_of([] { parse_lambda(4, "1,0"); }) == ErrorCode::DimensionMismatch);
  const auto w = validate_reduced_word(3, {1, 2, 1});
  CHECK(lambda_underline(w, HighestWeight({1, 0})) == Vec{1, 0, 1});
  CHECK(dominant_weights_up_to(3, 1).size() == 3);
}

TEST_CASE("roots as weights") {
  CHECK(simple_root(3, 1) == Vec{2, -1});
  CHECK(simple_root(4, 2) == Vec{-1, 2, -1});
  CHECK(root_weight(3, {1, 3}) == Vec{1, 1});
}

TEST_CASE("overflow is reported, not wrapped") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK(code_of([&] { checked_add(big, 1); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { checked_mul(big, 2); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { checked_sub(-big, 2); }) == ErrorCode::Overflow);
}

}  // TEST_SUITE
