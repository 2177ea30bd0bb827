/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Reduced words for the longest element of S_n, the braid-move graph, root
// orders, Cartan data and the Weyl dimension formula (type A_{n-1}).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crystalkit/types.hpp"

namespace crystalkit {

class Rank {
 public:
  explicit Rank(int n);
  int n() const noexcept { return n_; }
  // Number of positive roots, n(n-1)/2.
  int num_roots() const noexcept { return num_roots_; }
  friend bool operator==(const Rank&, const Rank&) = default;

 private:
  int n_;
  int num_roots_;
};

// The positive root e_k - e_l, stored as the pair (k, l) with k < l.
struct PositiveRoot {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

// A validated reduced word for w0 together with its induced root order.
class ReducedWord {
 public:
  const Rank& rank() const noexcept { return rank_; }
  int n() const noexcept { return rank_.n(); }
  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  // 1-based access, matching the usual i_1, ..., i_N indexing.
  Letter letter(int position) const { return letters_.at(position - 1); }
  // beta_1, ..., beta_N.
  std::span<const PositiveRoot> roots() const noexcept { return roots_; }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const ReducedWord& a, const ReducedWord& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.letters_ < b.letters_;
  }

 private:
  friend ReducedWord validate_reduced_word(int n, std::span<const Letter> letters);
  ReducedWord(Rank rank, std::vector<Letter> letters, std::vector<PositiveRoot> roots)
      : rank_(rank), letters_(std::move(letters)), roots_(std::move(roots)) {}

  Rank rank_;
  std::vector<Letter> letters_;
  std::vector<PositiveRoot> roots_;
};

// Throws BadLength, BadLetter or NotReduced.
ReducedWord validate_reduced_word(int n, std::span<const Letter> letters);
ReducedWord validate_reduced_word(int n, std::initializer_list<Letter> letters);
// Parses "2,1,2,3" and validates.
ReducedWord parse_word(int n, std::string_view csv);
std::string format_word(const ReducedWord& word);

// beta_k = s_{i_1} ... s_{i_{k-1}} (i_k, i_k + 1).
std::vector<PositiveRoot> root_order(const ReducedWord& word);

enum class MoveKind { TwoMove, ThreeMove };

struct BraidMove {
  int position = 1;  // 1-based index of the first affected letter
  MoveKind kind = MoveKind::TwoMove;
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

std::string format_move(const BraidMove& move);

// Letters after applying one move; throws InapplicableMove.
std::vector<Letter> apply_move_to_letters(std::span<const Letter> letters,
                                          const BraidMove& move);

// All words one commutation or braid move away, sorted by resulting word.
std::vector<std::pair<BraidMove, ReducedWord>> braid_neighbors(const ReducedWord& word);

// Shortest move sequences found by breadth-first search over the braid graph.
// Results are memoized; the memo is shared and guarded for concurrent use.
std::vector<BraidMove> path_to_first(const ReducedWord& word, Letter a);
std::vector<BraidMove> path_to_last(const ReducedWord& word, Letter a);
std::vector<BraidMove> path_between(const ReducedWord& from, const ReducedWord& to);

ReducedWord apply_moves(const ReducedWord& word, std::span<const BraidMove> moves);

// Letterwise a -> n - a.
ReducedWord star_word(const ReducedWord& word);
// (n - i_N, ..., n - i_1); the word for which Lusztig data of b and of b*
// are related by coordinate reversal.
ReducedWord opposite_word(const ReducedWord& word);

// Every reduced word for w0 in S_n, lexicographically sorted.
std::vector<ReducedWord> all_reduced_words(int n);
// (1, 2, 1, 3, 2, 1, ...).
ReducedWord standard_word(int n);

int cartan_entry(Letter a, Letter b);

// lambda = sum_a lambda_a omega_a with lambda_a >= 0.
class HighestWeight {
 public:
  HighestWeight() = default;
  explicit HighestWeight(Vec coeffs);
  static HighestWeight zero(int n) { return HighestWeight(Vec(n - 1, 0)); }

  std::span<const Int> coeffs() const noexcept { return coeffs_; }
  // lambda_a, a in [n-1].
  Int operator[](Letter a) const { return coeffs_.at(a - 1); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Int sum() const;
  // lambda* = sum_a lambda_{n-a} omega_a.
  HighestWeight star() const;
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  Vec coeffs_;
};

HighestWeight parse_lambda(int n, std::string_view csv);

// Underlined lambda: (lambda_{i_1}, ..., lambda_{i_N}).
Vec lambda_underline(const ReducedWord& word, const HighestWeight& lambda);

// All dominant weights with sum of coefficients <= max_sum, in lexicographic order.
std::vector<HighestWeight> dominant_weights_up_to(int n, Int max_sum);

// Weights in fundamental-weight coordinates.
using Weight = Vec;

// alpha_a as a column of the Cartan matrix.
Weight simple_root(int n, Letter a);
// e_k - e_l = alpha_k + ... + alpha_{l-1}.
Weight root_weight(int n, const PositiveRoot& root);

std::uint64_t weyl_dim(int n, const HighestWeight& lambda);

}  // namespace crystalkit
